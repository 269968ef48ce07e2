#include "monosite/classify.hpp"

#include <algorithm>
#include <numeric>

namespace monosite {

const char* to_string(SiteCase c) {
  switch (c) {
    case SiteCase::MonomialCaseCharP: return "MonomialCaseCharP";
    case SiteCase::MonomialCaseHomogeneous: return "MonomialCaseHomogeneous";
    case SiteCase::HomogeneousCase: return "HomogeneousCase";
    case SiteCase::PurePowerPossibility1: return "PurePowerPossibility1";
    case SiteCase::PurePowerPossibility2: return "PurePowerPossibility2";
    case SiteCase::PurePowerPossibility3: return "PurePowerPossibility3";
    case SiteCase::Case2SingletonPower: return "Case2SingletonPower";
    case SiteCase::NotASite: return "NotASite";
  }
  return "Unknown";
}

const char* to_string(Method m) { return m == Method::Structural ? "structural" : "oracle"; }

namespace {

void check_inputs(const SparsePolynomial& P, std::span<const Monomial> qs) {
  if (P.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  if (P.is_constant()) throw Error(ErrorKind::PreconditionViolation, "P must be non-constant");
  if (qs.empty()) throw Error(ErrorKind::EmptySet, "empty monomial set");
  const unsigned d = *P.degree();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i].nvars() != P.nvars()) throw Error(ErrorKind::RingMismatch, "monomial has the wrong number of variables");
    if (qs[i].degree() > d) throw Error(ErrorKind::PreconditionViolation, "deg(Q) exceeds deg(P)");
    for (std::size_t j = 0; j < i; ++j)
      if (qs[i] == qs[j]) throw Error(ErrorKind::PreconditionViolation, "monomials must be pairwise distinct");
  }
  if (!set_relatively_prime(P, qs)) throw Error(ErrorKind::PreconditionViolation, "P and the monomials share a factor");
}

SiteVerdict structural(bool yes, SiteCase c, SiteWitness w = {}) {
  return SiteVerdict{yes, yes ? c : SiteCase::NotASite, Method::Structural, std::move(w)};
}

SiteVerdict by_oracle(const SparsePolynomial& P, std::span<const Monomial> qs, const OracleConfig& cfg, SiteCase yes_case) {
  if (!P.field().is_finite())
    throw Error(ErrorKind::OracleUnavailable, "this instance needs the specialization oracle, which requires a finite field");
  OracleTranscript tr = generic_irreducibility(P, qs, cfg);
  const bool yes = !tr.generically_irreducible;
  return SiteVerdict{yes, yes ? yes_case : SiteCase::NotASite, Method::Oracle, std::move(tr)};
}

bool all_divisible(const Monomial& m, std::uint32_t p) {
  return std::all_of(m.exponents.begin(), m.exponents.end(), [p](auto e) { return e % p == 0; });
}

SiteVerdict monomial_case(const SparsePolynomial& P, std::span<const Monomial> qs) {
  const Field& field = P.field();
  const auto [pm, pc] = P.leading_term();
  const std::uint32_t p = field.characteristic();
  if (p > 0 && all_divisible(pm, p) && std::all_of(qs.begin(), qs.end(), [p](const Monomial& q) { return all_divisible(q, p); })) {
    auto root = eth_root(P, p);
    return structural(true, SiteCase::MonomialCaseCharP, PurePowerWitness{*root, p, field.one()});
  }
  std::vector<LatticePoint> pts;
  pts.emplace_back(pm.exponents.begin(), pm.exponents.end());
  for (const auto& q : qs) pts.emplace_back(q.exponents.begin(), q.exponents.end());
  auto fit = collinear(make_newton_set(pts));
  auto* dir = std::get_if<PrimitiveDirection>(&fit);
  if (!dir) return structural(false, SiteCase::NotASite);
  const std::size_t n = pm.nvars();
  const std::int64_t K = dir->max_step();
  // Extremes of the segment: E2 = base, E1 = base + K * delta.
  Monomial e1 = Monomial::one(n), e2 = Monomial::one(n);
  std::int64_t g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    e2.exponents[i] = static_cast<std::uint32_t>(dir->base[i]);
    e1.exponents[i] = static_cast<std::uint32_t>(dir->base[i] + K * dir->delta[i]);
    if (e1.exponents[i] && e2.exponents[i]) return structural(false, SiteCase::NotASite);
    g = std::gcd(g, std::int64_t{e1.exponents[i]});
    g = std::gcd(g, std::int64_t{e2.exponents[i]});
  }
  // With d = g, the points are E2 + k (E1 - E2) / d; the step along delta is K / d.
  if (g < 2 || K % g != 0) return structural(false, SiteCase::NotASite);
  const std::int64_t stride = K / g;
  for (auto k : dir->steps)
    if (k % stride != 0) return structural(false, SiteCase::NotASite);
  MonomialPairDecomposition dec;
  dec.m1 = e1;
  dec.m2 = e2;
  for (auto& e : dec.m1.exponents) e /= static_cast<std::uint32_t>(g);
  for (auto& e : dec.m2.exponents) e /= static_cast<std::uint32_t>(g);
  dec.degree = static_cast<unsigned>(g);
  dec.coeffs.assign(dec.degree + 1, field.zero());
  for (unsigned k = 0; k <= dec.degree; ++k)
    if (dec.m1.pow(k) * dec.m2.pow(dec.degree - k) == pm) dec.coeffs[k] = pc;
  return structural(true, SiteCase::MonomialCaseHomogeneous, std::move(dec));
}

bool perfect_power(const Monomial& q) { return q.exponent_gcd() != 1; }

}  // namespace

SiteVerdict classify_site(const SparsePolynomial& P, std::span<const Monomial> qs, const OracleConfig& cfg) {
  check_inputs(P, qs);
  if (P.is_monomial()) return monomial_case(P, qs);
  const unsigned degP = *P.degree();
  const auto pp = pure_power(P);
  const auto dec = two_monomial_decomposition(P);
  if (dec) {
    const auto sites = homogeneous_site_monomials(*dec, degP);
    const bool inside = std::all_of(qs.begin(), qs.end(), [&](const Monomial& q) {
      return std::find(sites.begin(), sites.end(), q) != sites.end();
    });
    if (inside) return structural(true, pp ? SiteCase::PurePowerPossibility1 : SiteCase::HomogeneousCase, *dec);
    if (!pp) {
      if (qs.size() >= 2 || !perfect_power(qs[0])) return structural(false, SiteCase::NotASite);
      return by_oracle(P, qs, cfg, SiteCase::Case2SingletonPower);
    }
  }
  if (pp) {
    const std::uint32_t p = P.field().characteristic();
    if (p > 0 && in_frobenius_subring(P) &&
        std::all_of(qs.begin(), qs.end(), [p](const Monomial& q) { return all_divisible(q, p); })) {
      auto root = eth_root(P, p);
      return structural(true, SiteCase::PurePowerPossibility3, PurePowerWitness{*root, p, P.field().one()});
    }
    if (qs.size() == 1) {
      const unsigned g = qs[0].exponent_gcd();
      if (std::gcd(g, pp->exponent) >= 2) return structural(true, SiteCase::PurePowerPossibility2, *pp);
      if (perfect_power(qs[0])) return by_oracle(P, qs, cfg, SiteCase::PurePowerPossibility2);
    }
    return structural(false, SiteCase::NotASite);
  }
  if (qs.size() >= 2 || !perfect_power(qs[0])) return structural(false, SiteCase::NotASite);
  return by_oracle(P, qs, cfg, SiteCase::Case2SingletonPower);
}

namespace {

HypothesisReport base_report(const SparsePolynomial& P, std::span<const Monomial> qs) {
  if (P.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  if (P.is_constant()) throw Error(ErrorKind::PreconditionViolation, "P must be non-constant");
  HypothesisReport r;
  const unsigned d = *P.degree();
  r.degrees_ok = true;
  for (const auto& q : qs) {
    if (q.nvars() != P.nvars()) throw Error(ErrorKind::RingMismatch, "monomial has the wrong number of variables");
    if (q.degree() > d) r.degrees_ok = false;
  }
  r.relatively_prime = set_relatively_prime(P, qs);
  r.collinear_with_P = joint_line_test(P, qs);
  r.P_monomial = P.is_monomial();
  return r;
}

}  // namespace

HypothesisReport check_theorem_typical(const SparsePolynomial& P, const Monomial& Q) {
  const Monomial qs[] = {Q};
  HypothesisReport r = base_report(P, qs);
  r.Q_pure_power = perfect_power(Q);
  r.some_not_pth_power = true;
  return r;
}

HypothesisReport check_theorem_typical2(const SparsePolynomial& P, std::span<const Monomial> qs) {
  if (qs.size() < 2) throw Error(ErrorKind::PreconditionViolation, "this check needs at least two monomials");
  HypothesisReport r = base_report(P, qs);
  const std::uint32_t p = P.field().characteristic();
  if (p > 0) {
    r.some_not_pth_power = !eth_root(P, p).has_value() ||
                           std::any_of(qs.begin(), qs.end(), [p](const Monomial& q) { return !all_divisible(q, p); });
  }
  return r;
}

}  // namespace monosite
