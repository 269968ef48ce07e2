#include "monosite/spectrum.hpp"

#include <algorithm>
#include <set>

#include "absirr.hpp"
#include "parallel.hpp"

namespace monosite {

namespace {

void require_finite(const Field& field) {
  if (!field.is_finite())
    throw Error(ErrorKind::OracleUnavailable, "the specialization oracle needs a finite coefficient field");
}

void check_limits(const SparsePolynomial& F, const OracleConfig& cfg) {
  if (F.nvars() > cfg.max_variables)
    throw Error(ErrorKind::InstanceTooLarge, "too many variables for the oracle (" + std::to_string(F.nvars()) + " > " +
                                                 std::to_string(cfg.max_variables) + ")");
  if (F.degree() && *F.degree() > cfg.max_total_degree)
    throw Error(ErrorKind::InstanceTooLarge, "total degree " + std::to_string(*F.degree()) + " exceeds the oracle limit " +
                                                 std::to_string(cfg.max_total_degree));
}

void check_field_size(const Field& field, const OracleConfig& cfg) {
  if (field.size() > cfg.max_field_size)
    throw Error(ErrorKind::InstanceTooLarge, "field of size " + std::to_string(field.size()) +
                                                 " exceeds the oracle limit " + std::to_string(cfg.max_field_size));
}

detail::GfTerms to_gf(const SparsePolynomial& F) {
  detail::GfTerms out;
  for (const auto& [m, c] : F.terms()) out.emplace(m.exponents, c.index());
  return out;
}

void check_site(const SparsePolynomial& P, std::span<const Monomial> qs) {
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

}  // namespace

bool abs_irreducible(const SparsePolynomial& F, const OracleConfig& cfg, OracleStats* stats) {
  require_finite(F.field());
  if (F.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  if (F.is_constant()) throw Error(ErrorKind::PreconditionViolation, "constant polynomial");
  check_limits(F, cfg);
  OracleStats local;
  const bool r = detail::abs_irreducible_gf(*F.field().engine(), to_gf(F), cfg.extension_sweep_cap, local);
  if (stats) *stats += local;
  return r;
}

SparsePolynomial embed(const SparsePolynomial& P, const Field& target) {
  if (P.field() == target) return P;
  require_finite(P.field());
  require_finite(target);
  if (P.field().characteristic() != target.characteristic() || target.degree() % P.field().degree() != 0)
    throw Error(ErrorKind::RingMismatch, "target field does not contain the coefficient field");
  const gf::Embedding emb(*P.field().engine(), *target.engine());
  SparsePolynomial out(target, P.nvars());
  for (const auto& [m, c] : P.terms()) out.add_term(m, FieldElement::finite(emb(c.index())));
  return out;
}

Field extend_beyond(const Field& field, std::uint64_t min_size) {
  require_finite(field);
  if (field.size() > min_size) return field;
  const std::uint32_t p = field.characteristic();
  for (unsigned k = 2;; ++k) {
    const unsigned m = field.degree() * k;
    if (m > gf::max_degree_for(p)) throw Error(ErrorKind::FieldTooSmall, "no representable extension is large enough");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;
    if (q > min_size) return Field::finite(p, m);
  }
}

SpectrumReport compute_spectrum(const SparsePolynomial& P, const Monomial& Q, const Field& field,
                                const OracleConfig& cfg) {
  require_finite(field);
  const Monomial qs[] = {Q};
  check_site(P, qs);
  check_limits(P, cfg);
  check_field_size(field, cfg);
  const SparsePolynomial Pe = embed(P, field);
  const unsigned d = *P.degree();
  const std::uint64_t q = field.size();

  enum class Kind { Irreducible, Reducible, Drop };
  std::vector<Kind> kinds(q);
  std::vector<OracleStats> stats(q);
  detail::parallel_for(q, cfg.jobs, [&](std::size_t i) {
    SparsePolynomial F = Pe + SparsePolynomial::monomial(field, Q, FieldElement::finite(i));
    if (F.is_zero() || *F.degree() < d) {
      kinds[i] = Kind::Drop;
      return;
    }
    kinds[i] = abs_irreducible(F, cfg, &stats[i]) ? Kind::Irreducible : Kind::Reducible;
  });

  SpectrumReport report;
  report.field = field.descriptor();
  report.degree = d;
  for (std::uint64_t i = 0; i < q; ++i) {
    if (kinds[i] == Kind::Drop) report.degree_drop_exclusions.push_back(FieldElement::finite(i));
    if (kinds[i] == Kind::Reducible) report.values.push_back(FieldElement::finite(i));
    report.stats += stats[i];
  }
  report.bound = std::uint64_t{d} * d;
  report.bound_satisfied = report.values.size() < report.bound;
  return report;
}

bool verify_bound(const SpectrumReport& report, bool stein_case) {
  const std::uint64_t bound = stein_case ? report.degree : std::uint64_t{report.degree} * report.degree;
  return report.values.size() < bound;
}

namespace {

struct Search {
  const std::vector<SparsePolynomial>* qpolys;
  std::vector<unsigned> qdeg;
  unsigned d;
  std::uint64_t trials;
  const Field* field;
  const OracleConfig* cfg;

  // Degree-preserving values for lambda_level, in index order, plus the skipped ones.
  std::vector<FieldElement> values(const SparsePolynomial& F, std::size_t level, std::vector<FieldElement>* skipped) const {
    unsigned rest = 0;
    for (std::size_t j = 0; j < level; ++j) rest = std::max(rest, qdeg[j]);
    std::vector<FieldElement> out;
    for (std::uint64_t i = 0; i < field->size() && out.size() < trials; ++i) {
      SparsePolynomial G = F + (*qpolys)[level].scaled(FieldElement::finite(i));
      const unsigned dg = G.is_zero() ? 0 : *G.degree();
      if (std::max(dg, rest) == d && !G.is_zero()) {
        out.push_back(FieldElement::finite(i));
      } else if (skipped) {
        skipped->push_back(FieldElement::finite(i));
      }
    }
    if (out.size() < trials) throw Error(ErrorKind::FieldTooSmall, "not enough degree-preserving specialization values");
    return out;
  }

  // Specializes lambda_{level+1} .. lambda_1; true with the path on success.
  bool run(const SparsePolynomial& F, std::size_t level, std::vector<FieldElement>& path,
           std::optional<SparsePolynomial>& witness, OracleStats& stats) const {
    if (level == 0) {
      if (abs_irreducible(F, *cfg, &stats)) {
        witness = F;
        return true;
      }
      return false;
    }
    for (const auto& v : values(F, level - 1, nullptr)) {
      SparsePolynomial G = F + (*qpolys)[level - 1].scaled(v);
      path.push_back(v);
      if (run(G, level - 1, path, witness, stats)) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

OracleTranscript generic_irreducibility(const SparsePolynomial& P, std::span<const Monomial> qs,
                                        const OracleConfig& cfg) {
  require_finite(P.field());
  check_site(P, qs);
  check_limits(P, cfg);
  const unsigned d = *P.degree();
  const std::uint64_t trials = std::uint64_t{d} * d;
  const Field W = extend_beyond(P.field(), trials + 1);
  check_field_size(W, cfg);
  const SparsePolynomial Pe = embed(P, W);
  std::vector<SparsePolynomial> qpolys;
  std::vector<unsigned> qdeg;
  for (const auto& q : qs) {
    qpolys.push_back(SparsePolynomial::monomial(W, q));
    qdeg.push_back(q.degree());
  }
  Search search{&qpolys, qdeg, d, trials, &W, &cfg};

  OracleTranscript tr;
  tr.working_field = W.descriptor();
  tr.trials_per_level = trials;
  const std::size_t top = qs.size() - 1;
  const auto tops = search.values(Pe, top, &tr.excluded_values);

  struct Outcome {
    bool ok = false;
    std::vector<FieldElement> path;
    std::optional<SparsePolynomial> witness;
    OracleStats stats;
  };
  const unsigned jobs = std::max(1u, cfg.jobs);
  for (std::size_t start = 0; start < tops.size(); start += jobs) {
    const std::size_t count = std::min<std::size_t>(jobs, tops.size() - start);
    std::vector<Outcome> outs(count);
    detail::parallel_for(count, jobs, [&](std::size_t j) {
      const auto& v = tops[start + j];
      Outcome& o = outs[j];
      o.path.push_back(v);
      o.ok = search.run(Pe + qpolys[top].scaled(v), top, o.path, o.witness, o.stats);
    });
    for (auto& o : outs) {
      tr.stats += o.stats;
      if (o.ok) {
        tr.generically_irreducible = true;
        tr.witness_path = std::move(o.path);
        tr.witness = std::move(o.witness);
        return tr;
      }
      tr.reducible_values.push_back(o.path.front());
    }
  }
  return tr;
}

}  // namespace monosite
