#include <algorithm>
#include <functional>

#include "monosite/classify.hpp"
#include "monosite/decomp.hpp"
#include "monosite/driver.hpp"
#include "monosite/newton.hpp"
#include "monosite/textio.hpp"

namespace monosite {

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

Ring xy(const Field& f) { return Ring{{"x", "y"}, f}; }

std::vector<Monomial> monos(const Ring& r, std::initializer_list<const char*> srcs) {
  std::vector<Monomial> out;
  for (const char* s : srcs) out.push_back(parse_monomial(s, r));
  return out;
}

// h(u, v) evaluated at polynomials.
SparsePolynomial compose(const char* h, const SparsePolynomial& u, const SparsePolynomial& v) {
  const Ring uv{{"x", "y"}, u.field()};
  const auto H = parse_poly(h, uv);
  SparsePolynomial out(u.field(), u.nvars());
  for (const auto& [m, c] : H.terms())
    out = out + (u.pow(m.exponents[0]) * v.pow(m.exponents[1])).scaled(c);
  return out;
}

void identity_a(Check& c) {
  const Ring q = xy(Field::rationals());
  const auto P = parse_poly("(2y^3 - x^4)^2x^4", q);
  c.expect(P == compose("(x + y)^2(x - y)", parse_poly("y^3", q), parse_poly("y^3 - x^4", q)), "P != h(y^3, y^3 - x^4)");
}

void identity_b(Check& c) {
  const Ring q = xy(Field::rationals());
  const auto P = parse_poly("y(x + y)(y^2 + xy - 2x)", q);
  c.expect(P.term_count() == 5, "expansion does not have 5 terms");
  c.expect(P == compose("y^2 - x^2", parse_poly("x", q), parse_poly("(y - 1)(x + y) + y", q)), "P != psi1^2 - phi1^2");
  c.expect(P == compose("xy", parse_poly("y", q), parse_poly("(x + y)(y^2 + xy - 2x)", q)), "P != phi2 psi2");
}

void expansion(Check& c) {
  const Ring q = xy(Field::rationals());
  const auto P = parse_poly("(x^2 - y^3)^3", q);
  c.expect(P.term_count() == 4, "expansion does not have 4 terms");
  c.expect(format_poly(P) == "x^6 - 3x^4y^3 + 3x^2y^6 - y^9", "formatted as " + format_poly(P));
}

void decomposition_c(Check& c) {
  const Ring q = xy(Field::rationals());
  const auto P = parse_poly("(x^2 - y^3)^3", q);
  const auto dec = two_monomial_decomposition(P);
  c.expect(dec.has_value(), "no decomposition");
  if (!dec) return;
  c.expect(dec->m1 == parse_monomial("x^2", q) && dec->m2 == parse_monomial("y^3", q), "wrong monomial pair");
  c.expect(dec->degree == 3, "degree " + std::to_string(dec->degree));
  const Field& f = P.field();
  const std::vector<FieldElement> want = {f.from_int(-1), f.from_int(3), f.from_int(-3), f.one()};
  c.expect(dec->coeffs == want, "coefficients differ from (u - v)^3");
  auto site = homogeneous_site_monomials(*dec, 9);
  auto want_site = monos(q, {"x^6", "x^4y^3", "x^2y^6", "y^9"});
  std::sort(site.begin(), site.end(), grlex_less);
  std::sort(want_site.begin(), want_site.end(), grlex_less);
  c.expect(site == want_site, "site set differs");
}

void refinement_d(Check& c) {
  const Field f = Field::rationals();
  const Ring q = xy(f);
  MonomialPairDecomposition dec{parse_monomial("x^2", q), parse_monomial("y^2", q), 2, {f.from_int(-1), f.zero(), f.one()}};
  const auto [r, trace] = refine_monomial_pair(dec);
  c.expect(r.m1 == parse_monomial("x", q) && r.m2 == parse_monomial("y", q), "refined pair is not (x, y)");
  c.expect(r.degree == 4 && trace.gcd_factor == 2, "refined degree " + std::to_string(r.degree));
  c.expect(r.coeffs == std::vector<FieldElement>{f.from_int(-1), f.zero(), f.zero(), f.zero(), f.one()},
           "refined coefficients");
  c.expect(reconstruct(r, f) == reconstruct(dec, f), "refinement changed the polynomial");
  c.expect(!binomial_pencil_irreducible(dec.m1, dec.m2), "x^2 + lambda y^2 reported irreducible");
}

void roots_and_powers(Check& c) {
  const Ring q = xy(Field::rationals());
  const auto P = parse_poly("x^6 - 3x^4y^3 + 3x^2y^6 - y^9", q);
  const auto S = parse_poly("x^2 - y^3", q);
  const auto root = eth_root(P, 3);
  c.expect(root && (*root == S || *root == -S), "eth_root(P, 3) is not x^2 - y^3");
  const auto pp = pure_power(P);
  c.expect(pp && pp->exponent == 3 && pp->base.pow(3).scaled(pp->unit) == P && (pp->base == S || pp->base == -S),
           "pure_power did not return (x^2 - y^3, 3)");
  const auto set = newton_points(P);
  c.expect(set.points == std::vector<LatticePoint>{{0, 9}, {2, 6}, {4, 3}, {6, 0}}, "Newton points");
  const auto [m1, m2] = split_direction({2, -3});
  c.expect(m1 == parse_monomial("x^2", q) && m2 == parse_monomial("y^3", q), "split_direction(2, -3)");
}

void classify_b(Check& c) {
  const Ring q = xy(Field::rationals());
  const auto P = parse_poly("(x^2 - y^3)^3", q);
  const auto v = classify_site(P, monos(q, {"x^4y^3", "y^9"}));
  c.expect(v.yes, "not a site");
  c.expect(v.site_case == SiteCase::HomogeneousCase || v.site_case == SiteCase::PurePowerPossibility1,
           std::string("case ") + to_string(v.site_case));
}

void pure_power_sites_b(Check& c) {
  const Ring q = xy(Field::rationals());
  const auto P = parse_poly("(x^2 - y^3)^3", q);
  for (const char* m : {"1", "x^3", "y^3", "x^6", "x^3y^3", "y^6", "x^9", "x^6y^3", "x^3y^6", "y^9"}) {
    const auto qs = monos(q, {m});
    c.expect(classify_site(P, qs).yes, std::string(m) + " not a site");
  }
}

void char3_sites_b(Check& c) {
  const Ring r = xy(Field::finite(3));
  const auto P = parse_poly("(x^2 - y^3)^3", r);
  const auto all = monos(r, {"1", "x^3", "y^3", "x^6", "x^3y^3", "y^6", "x^9", "x^6y^3", "x^3y^6", "y^9"});
  const auto v = classify_site(P, all);
  c.expect(v.yes && v.site_case == SiteCase::PurePowerPossibility3, std::string("case ") + to_string(v.site_case));
  const std::vector<Monomial> pair{all[1], all[5]};
  c.expect(classify_site(P, pair).yes, "{x^3, y^6} not a site");
}

void classify_a(Check& c, const OracleConfig& base) {
  const Ring r = xy(Field::finite(7));
  const auto P = parse_poly("(2y^3 - x^4)^2x^4", r);
  const auto qs = monos(r, {"y^9"});
  c.expect(classify_site(P, qs).yes, "y^9 not a site");
  OracleConfig cfg = base;
  cfg.max_total_degree = std::max(cfg.max_total_degree, 12u);
  cfg.max_field_size = std::max<std::uint64_t>(cfg.max_field_size, 343);
  c.expect(!generic_irreducibility(P, qs, cfg).generically_irreducible, "oracle found an irreducible specialization");
}

void oracle_b(Check& c, const OracleConfig& base) {
  const Ring r = xy(Field::finite(7));
  const auto P = parse_poly("x^6 - 3x^4y^3 + 3x^2y^6 - y^9", r);
  OracleConfig cfg = base;
  cfg.max_total_degree = std::max(cfg.max_total_degree, 9u);
  c.expect(!generic_irreducibility(P, monos(r, {"x^4y^3"}), cfg).generically_irreducible,
           "oracle found an irreducible specialization");
}

void linear_pencil(Check& c, const OracleConfig& base) {
  const Ring q = xy(Field::rationals());
  const auto P = parse_poly("x^3 + y^3 + x^2y", q);
  const auto qs = monos(q, {"x", "y"});
  c.expect(check_theorem_typical2(P, qs).all_pass(), "hypotheses fail over Q");
  const Ring r = xy(Field::finite(7));
  const auto P7 = parse_poly("x^3 + y^3 + x^2y", r);
  const auto tr = generic_irreducibility(P7, monos(r, {"x", "y"}), base);
  c.expect(tr.generically_irreducible && tr.witness_path.size() == 2, "no irreducible specialization over F_7");
}

void quartic_pencil(Check& c) {
  const Ring q = xy(Field::rationals());
  const auto v = classify_site(parse_poly("x^4", q), monos(q, {"y^4"}));
  c.expect(v.yes, "x^4 - lambda y^4 not generically reducible");
}

}  // namespace

std::vector<FixtureResult> verify_paper_fixtures(const OracleConfig& cfg) {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> table = {
      {"identity-a: (2y^3-x^4)^2x^4 = h(y^3, y^3-x^4)", identity_a},
      {"identity-b: y(x+y)(y^2+xy-2x) has two decompositions", identity_b},
      {"parse: (x^2-y^3)^3 expansion", expansion},
      {"decompose-c: (x^2-y^3)^3 gives x^2, y^3, degree 3 and M1", decomposition_c},
      {"refine-d: (x^2, y^2, 2) refines to (x, y, 4)", refinement_d},
      {"roots: eth_root, pure_power, newton, split_direction on (x^2-y^3)^3", roots_and_powers},
      {"classify-b: {x^4y^3, y^9} is a site of (x^2-y^3)^3", classify_b},
      {"classify-b: pure power monomials of (x^2-y^3)^3", pure_power_sites_b},
      {"classify-b: char 3 site M3 of (x^2-y^3)^3", char3_sites_b},
      {"classify-a: y^9 is a site of (2y^3-x^4)^2x^4", [&](Check& c) { classify_a(c, cfg); }},
      {"oracle-b: x^4y^3 pencil of (x^2-y^3)^3 over F_7 is reducible", [&](Check& c) { oracle_b(c, cfg); }},
      {"linear pencil P + l1 x + l2 y is generically irreducible", [&](Check& c) { linear_pencil(c, cfg); }},
      {"x^4 - lambda y^4 is generically reducible", quartic_pencil},
  };
  std::vector<FixtureResult> out;
  for (const auto& [name, fn] : table) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    out.push_back(FixtureResult{name, c.ok, c.ok ? "ok" : c.detail});
  }
  return out;
}

}  // namespace monosite
