#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monosite/fields.hpp"

namespace monosite {

struct Monomial {
  std::vector<std::uint32_t> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

  std::size_t nvars() const { return exponents.size(); }
  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial pow(unsigned k) const;
  // Exponent gcd; 0 for the unit monomial.
  unsigned exponent_gcd() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order with x1 > x2 > ... ; true when a < b.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

class SparsePolynomial {
 public:
  // Leading term first.
  using TermMap = std::map<Monomial, FieldElement, GrlexGreater>;

  SparsePolynomial(Field field, std::size_t nvars);

  static SparsePolynomial constant(const Field& field, std::size_t nvars, const FieldElement& c);
  static SparsePolynomial monomial(const Field& field, const Monomial& m, const FieldElement& c);
  static SparsePolynomial monomial(const Field& field, const Monomial& m);
  static SparsePolynomial variable(const Field& field, std::size_t nvars, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // Absent for the zero polynomial.
  std::optional<unsigned> degree() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  std::pair<Monomial, FieldElement> leading_term() const;
  FieldElement coefficient(const Monomial& m) const;
  std::vector<Monomial> support() const;

  void add_term(const Monomial& m, const FieldElement& c);

  SparsePolynomial scaled(const FieldElement& c) const;
  SparsePolynomial operator-() const;
  SparsePolynomial pow(unsigned k) const;

  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);

 private:
  Field field_;
  std::size_t nvars_;
  TermMap terms_;
};

enum class ArithOp { Add, Sub, Mul };

// Throws RingMismatch when the operands live in different rings.
SparsePolynomial arith(const SparsePolynomial& P, const SparsePolynomial& Q, ArithOp op);

// Same field and variable count.
void require_same_ring(const SparsePolynomial& P, const SparsePolynomial& Q);

Monomial monomial_gcd(const SparsePolynomial& P);
Monomial monomial_gcd(std::span<const Monomial> ms);

bool set_relatively_prime(const SparsePolynomial& P, std::span<const Monomial> qs);

bool in_frobenius_subring(const SparsePolynomial& P);

// Canonically least e-th root of c in the coefficient field, if any.
std::optional<FieldElement> coefficient_root(const Field& field, const FieldElement& c, unsigned e);

std::optional<SparsePolynomial> eth_root(const SparsePolynomial& P, unsigned e);

// P = unit * base^exponent. The unit is one unless the leading coefficient
// of P has no exponent-th root in the coefficient field.
struct PurePowerWitness {
  SparsePolynomial base;
  unsigned exponent;
  FieldElement unit;
};

std::optional<PurePowerWitness> pure_power(const SparsePolynomial& P);

}  // namespace monosite
