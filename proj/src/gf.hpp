#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

namespace monosite::gf {

using Elem = std::uint64_t;

// F_p[t]/(modulus). Elements are indexed by their base-p digit expansion,
// digit i being the coefficient of t^i.
class FiniteField {
 public:
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint64_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem from_int(std::int64_t v) const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> d) const;
  bool in_prime_subfield(Elem a) const { return a < p_; }

 private:
  enum class Mode { Prime, Table, Slow };

  Elem slow_mul(Elem a, Elem b) const;
  Elem slow_add(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> ppow_;
  Mode mode_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> prime_inv_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Cached F_{p^m} using the lexicographically least monic irreducible modulus.
FieldPtr get_field(std::uint32_t p, unsigned m);

// Largest m such that p^m stays below the representable bound.
unsigned max_degree_for(std::uint32_t p);

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned m);
bool is_irreducible_rabin(std::uint32_t p, const std::vector<std::uint32_t>& f);

// Dense univariate polynomials over a FiniteField, little-endian, no trailing zeros.
using UPoly = std::vector<Elem>;

void trim(UPoly& f);
int udeg(const UPoly& f);
UPoly uadd(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly usub(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly umul(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly umod(const FiniteField& F, UPoly a, const UPoly& b);
void udivmod(const FiniteField& F, const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem);
UPoly umonic(const FiniteField& F, const UPoly& a);
UPoly ugcd(const FiniteField& F, UPoly a, UPoly b);
// s, t with s*a + t*b = gcd (monic).
UPoly uxgcd(const FiniteField& F, const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);
UPoly uderiv(const FiniteField& F, const UPoly& a);
UPoly upowmod(const FiniteField& F, UPoly base, std::uint64_t e, const UPoly& mod);
// base^(q^k) mod `mod` for q = |F|.
UPoly ufrobenius(const FiniteField& F, const UPoly& base, unsigned k, const UPoly& mod);
bool usquarefree(const FiniteField& F, const UPoly& f);

// Monic irreducible factors of a squarefree polynomial of positive degree.
std::vector<UPoly> factor_squarefree(const FiniteField& F, const UPoly& f, std::mt19937_64& rng);
// Roots of f in F, ascending by index.
std::vector<Elem> roots(const FiniteField& F, const UPoly& f, std::mt19937_64& rng);

// Image of the generator of `small` inside `big` (least root of small's modulus).
Elem embedding_image(const FiniteField& small, const FiniteField& big);

class Embedding {
 public:
  Embedding(const FiniteField& small, const FiniteField& big);
  Elem operator()(Elem a) const;

 private:
  const FiniteField* small_;
  const FiniteField* big_;
  std::vector<Elem> powers_;
};

}  // namespace monosite::gf
