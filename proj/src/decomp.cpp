#include "monosite/decomp.hpp"

#include <algorithm>
#include <numeric>

namespace monosite {

namespace {

bool disjoint(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exponents[i] && b.exponents[i]) return false;
  return true;
}

void check_pair(const Monomial& m1, const Monomial& m2) {
  if (m1.nvars() != m2.nvars()) throw Error(ErrorKind::RingMismatch, "monomials have different variable counts");
  if (m1.is_one() && m2.is_one()) throw Error(ErrorKind::BothConstant, "both monomials are constant");
  if (!disjoint(m1, m2)) throw Error(ErrorKind::NotRelativelyPrime, "monomials share a variable");
}

}  // namespace

unsigned joint_exponent_gcd(const Monomial& m1, const Monomial& m2) {
  return std::gcd(m1.exponent_gcd(), m2.exponent_gcd());
}

bool MonomialPairDecomposition::maximal() const { return joint_exponent_gcd(m1, m2) == 1; }

SparsePolynomial reconstruct(const MonomialPairDecomposition& dec, const Field& field) {
  SparsePolynomial P(field, dec.m1.nvars());
  for (unsigned k = 0; k < dec.coeffs.size(); ++k) P.add_term(dec.m1.pow(k) * dec.m2.pow(dec.degree - k), dec.coeffs[k]);
  return P;
}

std::optional<MonomialPairDecomposition> two_monomial_decomposition(const SparsePolynomial& P) {
  if (P.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  if (P.is_monomial()) throw Error(ErrorKind::IsMonomial, "monomials are handled separately");
  auto fit = collinear(newton_points(P));
  auto* dir = std::get_if<PrimitiveDirection>(&fit);
  if (!dir) return std::nullopt;
  auto [m1, m2] = split_direction(dir->delta);
  const std::size_t n = P.nvars();
  const std::int64_t K = dir->max_step();
  // r = base - K * exp(m2) must equal s * exp(m1) + t * exp(m2).
  std::optional<std::int64_t> s, t;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t r = dir->base[i] - K * std::int64_t{m2.exponents[i]};
    if (m1.exponents[i]) {
      if (r < 0 || r % m1.exponents[i]) return std::nullopt;
      std::int64_t v = r / m1.exponents[i];
      if (s && *s != v) return std::nullopt;
      s = v;
    } else if (m2.exponents[i]) {
      if (r < 0 || r % m2.exponents[i]) return std::nullopt;
      std::int64_t v = r / m2.exponents[i];
      if (t && *t != v) return std::nullopt;
      t = v;
    } else if (r != 0) {
      return std::nullopt;
    }
  }
  const std::int64_t S = s.value_or(0), T = t.value_or(0);
  const std::int64_t d = K + S + T;
  const unsigned degP = *P.degree();
  if (d < 2 || degP <= std::max(m1.degree(), m2.degree())) return std::nullopt;
  MonomialPairDecomposition dec;
  dec.m1 = m1;
  dec.m2 = m2;
  dec.degree = static_cast<unsigned>(d);
  dec.coeffs.assign(dec.degree + 1, P.field().zero());
  for (const auto& [m, c] : P.terms()) {
    // step of this point along delta, measured from base
    std::int64_t k = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (dir->delta[i] != 0) {
        k = (std::int64_t{m.exponents[i]} - dir->base[i]) / dir->delta[i];
        break;
      }
    }
    dec.coeffs[static_cast<std::size_t>(k + S)] = c;
  }
  return dec;
}

std::pair<MonomialPairDecomposition, RefinementTrace> refine_monomial_pair(const MonomialPairDecomposition& dec) {
  check_pair(dec.m1, dec.m2);
  const unsigned g = joint_exponent_gcd(dec.m1, dec.m2);
  RefinementTrace trace{dec.degree, dec.degree * g, g};
  if (g == 1) return {dec, trace};
  MonomialPairDecomposition out;
  out.m1 = dec.m1;
  out.m2 = dec.m2;
  for (auto& e : out.m1.exponents) e /= g;
  for (auto& e : out.m2.exponents) e /= g;
  out.degree = dec.degree * g;
  const bool rational = !dec.coeffs.empty() && !dec.coeffs.front().is_finite();
  out.coeffs.assign(out.degree + 1, rational ? FieldElement::rational(0) : FieldElement::finite(0));
  for (std::size_t k = 0; k < dec.coeffs.size(); ++k) out.coeffs[k * g] = dec.coeffs[k];
  return {out, trace};
}

bool binomial_pencil_irreducible(const Monomial& m1, const Monomial& m2) {
  check_pair(m1, m2);
  return joint_exponent_gcd(m1, m2) == 1;
}

std::vector<Monomial> homogeneous_site_monomials(const MonomialPairDecomposition& dec, unsigned degP) {
  if (!dec.maximal()) throw Error(ErrorKind::NotMaximal, "decomposition is not maximal");
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= dec.degree; ++k) {
    Monomial m = dec.m1.pow(k) * dec.m2.pow(dec.degree - k);
    if (m.degree() <= degP) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), GrlexGreater{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace monosite
