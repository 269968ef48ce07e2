// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "helpers.hpp"
#include "monosite/classify.hpp"
#include "monosite/decomp.hpp"
#include "monosite/driver.hpp"
#include "monosite/newton.hpp"
#include "oracles.hpp"

using namespace monosite;
using namespace monosite::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<Monomial> monomials_up_to(unsigned n, unsigned max_degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
    if (i == n) {
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

bool disjoint(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exponents[i] && b.exponents[i]) return false;
  return true;
}

bool sites_ok(const SparsePolynomial& P, const std::vector<Monomial>& qs) {
  const unsigned d = *P.degree();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i].degree() > d) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (qs[i] == qs[j]) return false;
  }
  return set_relatively_prime(P, qs);
}

// Records YES verdicts for the subset check.
struct YesLog {
  std::vector<std::pair<SparsePolynomial, std::vector<Monomial>>> entries;
};

// ---- 1 ----
Outcome criterion1() {
  const auto t0 = Clock::now();
  const Field Q = Field::rationals();
  std::vector<std::string> failed;
  auto check = [&](bool ok, const char* what) {
    if (!ok) failed.push_back(what);
  };
  auto compose = [&](const char* h, const SparsePolynomial& u, const SparsePolynomial& v) {
    const auto H = qpoly(h);
    SparsePolynomial out(Q, 2);
    for (const auto& [m, c] : H.terms()) out = out + (u.pow(m.exponents[0]) * v.pow(m.exponents[1])).scaled(c);
    return out;
  };
  check(qpoly("(2y^3 - x^4)^2x^4") == compose("(x + y)^2(x - y)", qpoly("y^3"), qpoly("y^3 - x^4")), "(a)");
  const auto B = qpoly("y(x + y)(y^2 + xy - 2x)");
  check(B == compose("y^2 - x^2", qpoly("x"), qpoly("(y - 1)(x + y) + y")), "(b) h1");
  check(B == compose("xy", qpoly("y"), qpoly("(x + y)(y^2 + xy - 2x)")), "(b) h2");
  const auto dec = two_monomial_decomposition(qpoly("(x^2 - y^3)^3"));
  check(dec && dec->m1 == mono("x^2") && dec->m2 == mono("y^3") && dec->degree == 3, "(c) decomposition");
  if (dec) {
    auto site = homogeneous_site_monomials(*dec, 9);
    std::set<std::vector<std::uint32_t>> got, want;
    for (const auto& m : site) got.insert(m.exponents);
    for (const char* s : {"x^6", "x^4y^3", "x^2y^6", "y^9"}) want.insert(mono(s).exponents);
    check(got == want && site.size() == 4, "(c) M1");
  }
  MonomialPairDecomposition d{mono("x^2"), mono("y^2"), 2, {Q.from_int(-1), Q.zero(), Q.one()}};
  const auto [r, trace] = refine_monomial_pair(d);
  check(r.m1 == mono("x") && r.m2 == mono("y") && r.degree == 4 && trace.gcd_factor == 2, "(d)");
  const double secs = seconds_since(t0);
  std::string detail = failed.empty() ? "all identities exact" : "failed:";
  for (const auto& f : failed) detail += " " + f;
  detail += fmt(", %.3f s (limit 1 s)", secs);
  return {failed.empty() && secs < 1.0, detail};
}

// ---- 2 ----
Outcome criterion2(std::uint64_t seed, const OracleConfig& cfg) {
  const auto t0 = Clock::now();
  const Field F7 = Field::finite(7), F49 = Field::finite(7, 2);
  std::mt19937_64 rng(seed);
  const std::vector<Monomial> one{mono("1")};
  int accepted = 0, rejected = 0, violations = 0;
  std::size_t worst = 0;
  std::string example;
  while (accepted < 200) {
    const unsigned deg = 2 + rng() % 3;
    auto P = random_poly(F7, 2, deg, 2 + rng() % 5, rng);
    if (P.is_zero() || *P.degree() < 2) continue;
    if (!generic_irreducibility(P, one, cfg).generically_irreducible) {
      ++rejected;
      continue;
    }
    ++accepted;
    const auto report = compute_spectrum(P, one[0], F49, cfg);
    const unsigned d = *P.degree();
    worst = std::max(worst, report.values.size());
    if (report.values.size() > d - 1) {
      ++violations;
      if (example.empty()) example = " first violation: " + format_poly(P);
    }
  }
  const double secs = seconds_since(t0);
  return {violations == 0 && secs < 300,
          fmt("%d pencils (%d composed rejected), %d violations, max |values| = %zu, %.1f s (limit 300 s)", accepted,
              rejected, violations, worst, secs) +
              example};
}

// ---- 3 ----
Outcome criterion3(std::uint64_t seed, const OracleConfig& cfg) {
  const auto t0 = Clock::now();
  const Field F5 = Field::finite(5), F125 = Field::finite(5, 3);
  std::mt19937_64 rng(seed + 1);
  const auto all = monomials_up_to(2, 4);
  int accepted = 0, violations = 0;
  std::size_t worst = 0;
  std::string example;
  while (accepted < 200) {
    const unsigned deg = 1 + rng() % 4;
    auto P = random_poly(F5, 2, deg, 1 + rng() % 6, rng);
    if (P.is_zero() || P.is_constant()) continue;
    const Monomial Q = all[rng() % all.size()];
    const std::vector<Monomial> qs{Q};
    if (Q.degree() > *P.degree() || !set_relatively_prime(P, qs)) continue;
    if (!check_theorem_typical(P, Q).all_pass()) continue;
    ++accepted;
    const auto report = compute_spectrum(P, Q, F125, cfg);
    const std::size_t d = *P.degree();
    worst = std::max(worst, report.values.size());
    if (report.values.size() > d * d - 1) {
      ++violations;
      if (example.empty()) example = " first violation: " + format_poly(P) + " with " + format_monomial(Q, {"x", "y"});
    }
  }
  const double secs = seconds_since(t0);
  return {violations == 0 && secs < 900,
          fmt("%d pairs, %d violations, max |values| = %zu, %.1f s (limit 900 s)", accepted, violations, worst, secs) +
              example};
}

// ---- 4 ----
Outcome criterion4(const OracleConfig& cfg) {
  const auto t0 = Clock::now();
  long tests = 0, mismatches = 0;
  std::string example;
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {5, 1}, {7, 1}, {3, 2}}) {
    const Field F = Field::finite(p, m);
    for (unsigned n : {2u, 3u}) {
      const auto ms = monomials_up_to(n, 4);
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
          const Monomial& m1 = ms[j];
          const Monomial& m2 = ms[i];
          if (!disjoint(m1, m2)) continue;
          const bool criterion = joint_exponent_gcd(m1, m2) == 1;
          for (const auto& lam : F.elements()) {
            if (F.is_zero(lam)) continue;
            const auto P = SparsePolynomial::monomial(F, m1) + SparsePolynomial::monomial(F, m2, lam);
            ++tests;
            if (abs_irreducible(P, cfg) != criterion) {
              ++mismatches;
              if (example.empty()) example = fmt(" first mismatch over F_%u^%u", p, m);
            }
          }
        }
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 120,
          fmt("%ld binomials (n = 2, 3), %ld mismatches, %.1f s (limit 120 s)", tests, mismatches, secs) + example};
}

// ---- 5 ----
Outcome criterion5(std::uint64_t seed, const OracleConfig& cfg, YesLog& yes) {
  const auto t0 = Clock::now();
  const Field F5 = Field::finite(5);
  const auto tri = monomials_up_to(2, 3);
  // Instances are normalized to leading coefficient 1 (one per scalar orbit).
  std::mt19937_64 rng(seed + 5);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<SparsePolynomial> instances;
  while (instances.size() < 5000) {
    std::vector<std::uint64_t> coeffs(tri.size());
    for (auto& c : coeffs) c = rng() % 5;
    SparsePolynomial P(F5, 2);
    for (std::size_t i = 0; i < tri.size(); ++i)
      if (coeffs[i]) P.add_term(tri[i], F5.element(coeffs[i]));
    if (P.is_zero() || P.is_constant()) continue;
    P = P.scaled(F5.inv(P.leading_term().second));
    std::vector<std::uint64_t> key;
    for (const auto& m : tri) key.push_back(P.coefficient(m).index());
    if (seen.insert(key).second) instances.push_back(P);
  }
  long sites = 0, yes_count = 0, mismatches = 0;
  std::string example;
  for (const auto& P : instances) {
    for (std::size_t a = 0; a < tri.size(); ++a)
      for (std::size_t b = a; b < tri.size(); ++b) {
        std::vector<Monomial> qs{tri[a]};
        if (b != a) qs.push_back(tri[b]);
        if (!sites_ok(P, qs)) continue;
        ++sites;
        const auto verdict = classify_site(P, qs, cfg);
        const bool generic = generic_irreducibility(P, qs, cfg).generically_irreducible;
        if (verdict.yes) {
          ++yes_count;
          yes.entries.emplace_back(P, qs);
        }
        if (verdict.yes == generic) {
          ++mismatches;
          if (example.empty()) example = " first mismatch: " + format_poly(P);
        }
      }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 1800,
          fmt("%zu polynomials, %ld sites (%ld YES), %ld mismatches, %.1f s (limit 1800 s)", instances.size(), sites,
              yes_count, mismatches, secs) +
              example};
}

// ---- 6 ----
Outcome criterion6(const OracleConfig& cfg, YesLog& yes) {
  const auto t0 = Clock::now();
  long sites = 0, yes_count = 0, mismatches = 0;
  std::string example;
  const auto ms = monomials_up_to(2, 4);
  for (const Field& F : {Field::finite(2, 2), Field::finite(5)}) {
    for (const auto& pm : ms) {
      if (pm.degree() == 0) continue;
      const auto P = SparsePolynomial::monomial(F, pm);
      std::vector<Monomial> cand;
      for (const auto& q : ms)
        if (q.degree() <= pm.degree()) cand.push_back(q);
      const std::size_t c = cand.size();
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i; j < c; ++j)
          for (std::size_t k = j; k < c; ++k) {
            if ((j == i && k != i) || (k == j && j != i)) continue;
            std::vector<Monomial> qs{cand[i]};
            if (j != i) qs.push_back(cand[j]);
            if (k != j) qs.push_back(cand[k]);
            if (!sites_ok(P, qs)) continue;
            ++sites;
            const auto verdict = classify_site(P, qs, cfg);
            const bool generic = generic_irreducibility(P, qs, cfg).generically_irreducible;
            if (verdict.method != Method::Structural) {
              ++mismatches;
              if (example.empty()) example = " non-structural verdict";
            }
            if (verdict.yes) {
              ++yes_count;
              yes.entries.emplace_back(P, qs);
            }
            if (verdict.yes == generic) {
              ++mismatches;
              if (example.empty()) {
                example = " first mismatch: P = " + format_poly(P) + ", Q =";
                for (const auto& q : qs) example += " " + format_monomial(q, {"x", "y"});
              }
            }
          }
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 600,
          fmt("%ld monomial sites over F_4, F_5 (%ld YES), %ld mismatches, %.1f s (limit 600 s)", sites, yes_count,
              mismatches, secs) +
              example};
}

// ---- 7 ----
Outcome criterion7(const OracleConfig& cfg, const YesLog& yes) {
  const auto t0 = Clock::now();
  long checked = 0, vacuous = 0, violations = 0;
  for (const auto& [P, qs] : yes.entries) {
    const std::size_t n = qs.size();
    for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
      std::vector<Monomial> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) sub.push_back(qs[i]);
      // A common monomial factor makes every member of the pencil reducible.
      if (!set_relatively_prime(P, sub)) {
        ++vacuous;
        continue;
      }
      ++checked;
      if (!classify_site(P, sub, cfg).yes) ++violations;
    }
  }
  const double secs = seconds_since(t0);
  return {violations == 0 && !yes.entries.empty(),
          fmt("%zu YES verdicts, %ld proper subsets classified, %ld with a common monomial factor, %ld violations, "
              "%.1f s",
              yes.entries.size(), checked, vacuous, violations, secs)};
}

// ---- 8 ----
Outcome criterion8(const OracleConfig& cfg) {
  const auto t0 = Clock::now();
  const Field F7 = Field::finite(7);
  const auto P = poly(F7, "x^3 + y^3 + x^2y");
  const std::vector<Monomial> qs{mono("x"), mono("y")};
  const auto report = check_theorem_typical2(P, qs);
  const auto tr = generic_irreducibility(P, qs, cfg);
  const bool witness_ok = tr.witness && tr.witness_path.size() == 2 && abs_irreducible(*tr.witness, cfg);
  const double secs = seconds_since(t0);
  return {report.all_pass() && tr.generically_irreducible && witness_ok && secs < 10,
          fmt("hypotheses %s, generically irreducible %s, witness path length %zu, %.2f s (limit 10 s)",
              report.all_pass() ? "pass" : "fail", tr.generically_irreducible ? "yes" : "no", tr.witness_path.size(),
              secs)};
}

// ---- 9 ----
Outcome criterion9(std::uint64_t seed) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(seed + 9);
  long trials = 0, failures = 0, frobenius_checked = 0;
  const Field Q = Field::rationals(), F9 = Field::finite(3, 2), F7 = Field::finite(7);
  for (const Field& F : {Q, F9}) {
    for (int i = 0; i < 500; ++i) {
      SparsePolynomial S(F, 2);
      if (F.is_finite()) {
        S = random_poly(F, 2, 4, 1 + rng() % 6, rng);
      } else {
        const auto T = random_poly(F7, 2, 4, 1 + rng() % 6, rng);
        for (const auto& [m, c] : T.terms())
          S.add_term(m, Q.from_rational(mpq_class(static_cast<long>(c.index()) - 3, 1 + rng() % 3)));
      }
      if (S.is_zero()) continue;
      for (unsigned e : {2u, 3u}) {
        ++trials;
        const auto P = S.pow(e);
        const auto root = eth_root(P, e);
        bool ok = root && root->pow(e) == P;
        if (ok) {
          // Up to normalization: root = c S with c^e = 1.
          const auto c = F.div(root->leading_term().second, S.leading_term().second);
          ok = S.scaled(c) == *root && F.pow(c, e) == F.one();
        }
        if (!ok) ++failures;
        if (F.is_finite() && in_frobenius_subring(P)) {
          ++frobenius_checked;
          if (!eth_root(P, F.characteristic())) ++failures;
        }
      }
      if (F.is_finite()) {
        // Random members of F_9[x^3, y^3].
        SparsePolynomial T(F, 2);
        for (const auto& [m, c] : S.terms()) T.add_term(Monomial({3 * m.exponents[0], 3 * m.exponents[1]}), c);
        ++frobenius_checked;
        const auto r = eth_root(T, 3);
        if (!in_frobenius_subring(T) || !r || r->pow(3) != T) ++failures;
      }
    }
  }
  const double secs = seconds_since(t0);
  return {failures == 0 && secs < 60,
          fmt("%ld round trips, %ld Frobenius-subring checks, %ld failures, %.1f s (limit 60 s)", trials,
              frobenius_checked, failures, secs)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::uint64_t seed = 20240601;
  std::vector<int> only;
  unsigned jobs = 1;
  app.add_option("--seed", seed, "Seed for the randomized criteria")->capture_default_str();
  app.add_option("--only", only, "Run only these criteria");
  app.add_option("--jobs", jobs, "Oracle worker threads")->envname("MONOSITE_JOBS")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  OracleConfig cfg;
  cfg.jobs = std::max(1u, jobs);
  auto wanted = [&](int k) { return only.empty() || std::find(only.begin(), only.end(), k) != only.end(); };

  YesLog yes;
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, [&] { return criterion1(); }},
      {2, [&] { return criterion2(seed, cfg); }},
      {3, [&] { return criterion3(seed, cfg); }},
      {4, [&] { return criterion4(cfg); }},
      {5, [&] { return criterion5(seed, cfg, yes); }},
      {6, [&] { return criterion6(cfg, yes); }},
      {7, [&] { return criterion7(cfg, yes); }},
      {8, [&] { return criterion8(cfg); }},
      {9, [&] { return criterion9(seed); }},
  };
  const char* names[] = {"",
                         "fixture identities",
                         "Stein bound",
                         "general spectrum bound",
                         "binomial oracle/criterion equivalence",
                         "classifier/oracle equivalence",
                         "monomial-P equivalence",
                         "subset monotonicity",
                         "two-parameter linear pencil",
                         "eth_root round trip"};
  int failed = 0;
  for (const auto& [k, fn] : criteria) {
    if (!wanted(k)) continue;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", k, names[k], o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
