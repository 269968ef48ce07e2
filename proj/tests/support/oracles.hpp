#pragma once

// Brute-force reference implementations shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "monosite/poly.hpp"
#include "monosite/spectrum.hpp"

namespace monosite::testing {

// Schoolbook arithmetic on digit vectors modulo the descriptor's modulus.
class NaiveField {
 public:
  explicit NaiveField(const FieldDescriptor& fd) : p_(fd.characteristic), m_(fd.degree), modulus_(fd.modulus) {}

  std::vector<std::uint64_t> digits(std::uint64_t i) const {
    std::vector<std::uint64_t> d(m_);
    for (unsigned k = 0; k < m_; ++k, i /= p_) d[k] = i % p_;
    return d;
  }

  std::uint64_t index(const std::vector<std::uint64_t>& d) const {
    std::uint64_t i = 0;
    for (unsigned k = m_; k-- > 0;) i = i * p_ + d[k];
    return i;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = digits(a), y = digits(b);
    for (unsigned k = 0; k < m_; ++k) x[k] = (x[k] + y[k]) % p_;
    return index(x);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    if (m_ > 1) {
      for (unsigned k = 2 * m_ - 1; k >= m_; --k) {
        const std::uint64_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (unsigned j = 0; j < m_; ++j) prod[k - m_ + j] = (prod[k - m_ + j] + (p_ - c) * modulus_[j]) % p_;
      }
    }
    prod.resize(m_);
    return index(prod);
  }

 private:
  std::uint64_t p_;
  unsigned m_;
  std::vector<std::uint32_t> modulus_;
};

// Monic polynomials over F_p of degree `deg`, little-endian.
inline std::vector<std::vector<std::uint32_t>> monic_polys(std::uint32_t p, unsigned deg) {
  std::vector<std::vector<std::uint32_t>> out;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < deg; ++i) count *= p;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<std::uint32_t> f(deg + 1);
    std::uint64_t r = i;
    for (unsigned k = 0; k < deg; ++k, r /= p) f[k] = static_cast<std::uint32_t>(r % p);
    f[deg] = 1;
    out.push_back(f);
  }
  return out;
}

// True when g divides f over F_p (g monic).
inline bool divides_mod_p(std::vector<std::uint64_t> f, const std::vector<std::uint32_t>& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = f.size(); k-- > dg;) {
    const std::uint64_t c = f[k] % p;
    if (!c) continue;
    for (std::size_t j = 0; j <= dg; ++j) f[k - dg + j] = (f[k - dg + j] + (p - c) * g[j]) % p;
  }
  for (std::size_t k = 0; k < dg && k < f.size(); ++k)
    if (f[k] % p) return false;
  return true;
}

inline bool irreducible_by_trial_division(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  std::vector<std::uint64_t> f64(f.begin(), f.end());
  for (unsigned d = 1; 2 * d <= deg; ++d)
    for (const auto& g : monic_polys(p, d))
      if (divides_mod_p(f64, g, p)) return false;
  return true;
}

// F(x, y) with x replaced by `sub` (a polynomial in y only, same ring).
inline SparsePolynomial substitute_x(const SparsePolynomial& F, const SparsePolynomial& sub) {
  SparsePolynomial out(F.field(), F.nvars());
  for (const auto& [m, c] : F.terms()) {
    Monomial rest = m;
    rest.exponents[0] = 0;
    out = out + (sub.pow(m.exponents[0]) * SparsePolynomial::monomial(F.field(), rest, c));
  }
  return out;
}

inline SparsePolynomial substitute_y(const SparsePolynomial& F, const FieldElement& value) {
  SparsePolynomial out(F.field(), F.nvars());
  for (const auto& [m, c] : F.terms()) {
    Monomial rest = m;
    rest.exponents[1] = 0;
    out = out + SparsePolynomial::monomial(F.field(), rest, F.field().mul(c, F.field().pow(value, m.exponents[1])));
  }
  return out;
}

// Absolute reducibility of a bivariate F of degree 2 or 3: such an F is
// reducible over the closure iff it has a linear factor, and a linear factor
// lies over an extension of degree at most deg F. Lines x + b y + c and
// y + c are tested by substitution.
inline bool has_linear_factor_over(const SparsePolynomial& F, const Field& L) {
  const SparsePolynomial G = embed(F, L);
  const std::size_t n = 2;
  const auto y = SparsePolynomial::variable(L, n, 1);
  for (const auto& c : L.elements()) {
    if (substitute_y(G, L.neg(c)).is_zero()) return true;
    for (const auto& b : L.elements()) {
      const auto sub = -(y.scaled(b) + SparsePolynomial::constant(L, n, c));
      if (substitute_x(G, sub).is_zero()) return true;
    }
  }
  return false;
}

inline bool brute_abs_irreducible_low_degree(const SparsePolynomial& F) {
  const unsigned d = *F.degree();
  const Field& K = F.field();
  for (unsigned k = 1; k <= d; ++k)
    if (has_linear_factor_over(F, Field::finite(K.characteristic(), K.degree() * k))) return false;
  return true;
}

inline SparsePolynomial random_poly(const Field& field, std::size_t nvars, unsigned max_degree, unsigned terms,
                                    std::mt19937_64& rng) {
  SparsePolynomial P(field, nvars);
  std::uniform_int_distribution<std::uint64_t> coef(1, field.size() - 1);
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(nvars, 0);
    unsigned budget = std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
    for (unsigned k = 0; k < budget; ++k) ++e[std::uniform_int_distribution<std::size_t>(0, nvars - 1)(rng)];
    P.add_term(Monomial(e), field.element(coef(rng)));
  }
  return P;
}

}  // namespace monosite::testing
