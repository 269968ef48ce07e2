#include "monosite/driver.hpp"

#include <chrono>
#include <fstream>
#include <json.hpp>

#include "monosite/classify.hpp"
#include "monosite/decomp.hpp"
#include "monosite/newton.hpp"
#include "monosite/textio.hpp"

namespace monosite {

using json = nlohmann::ordered_json;

namespace {

json field_json(const FieldDescriptor& fd) {
  json j;
  switch (fd.kind) {
    case FieldKind::Rational:
      j["kind"] = "rational";
      break;
    case FieldKind::Prime:
      j["kind"] = "prime";
      j["p"] = fd.characteristic;
      j["m"] = 1;
      break;
    case FieldKind::Extension:
      j["kind"] = "extension";
      j["p"] = fd.characteristic;
      j["m"] = fd.degree;
      j["modulus"] = fd.modulus;
      break;
  }
  return j;
}

json elements_json(const Field& field, const std::vector<FieldElement>& es) {
  json j = json::array();
  for (const auto& e : es) j.push_back(field.format(e));
  return j;
}

json lattice_json(const LatticePoint& p) { return json(p); }

struct Context {
  RunConfig cfg;
  Ring ring;
  std::vector<std::string> vars;

  std::string poly(const SparsePolynomial& P) const { return format_poly(P, vars); }
  std::string mono(const Monomial& m) const { return format_monomial(m, vars); }

  json monos(std::span<const Monomial> ms) const {
    json j = json::array();
    for (const auto& m : ms) j.push_back(mono(m));
    return j;
  }
};

json stats_json(const OracleStats& s) {
  return json{{"irreducibility_tests", s.irreducibility_tests}, {"candidates_tested", s.candidates_tested}};
}

json decomposition_json(const Context& cx, const MonomialPairDecomposition& d, const Field& field) {
  return json{{"m1", cx.mono(d.m1)},
              {"m2", cx.mono(d.m2)},
              {"degree", d.degree},
              {"coeffs", elements_json(field, d.coeffs)},
              {"maximal", d.maximal()}};
}

json transcript_json(const Context& cx, const OracleTranscript& tr) {
  const Field w = Field::from_descriptor(tr.working_field);
  json j;
  j["generically_irreducible"] = tr.generically_irreducible;
  j["working_field"] = field_json(tr.working_field);
  j["trials_per_level"] = tr.trials_per_level;
  j["witness_path"] = elements_json(w, tr.witness_path);
  j["witness"] = tr.witness ? json(cx.poly(*tr.witness)) : json(nullptr);
  j["reducible_values"] = elements_json(w, tr.reducible_values);
  j["excluded_values"] = elements_json(w, tr.excluded_values);
  j["stats"] = stats_json(tr.stats);
  return j;
}

json pure_power_json(const Context& cx, const PurePowerWitness& w) {
  return json{{"base", cx.poly(w.base)}, {"exponent", w.exponent}, {"unit", w.base.field().format(w.unit)}};
}

json witness_json(const Context& cx, const SiteWitness& w, const Field& field) {
  if (auto* d = std::get_if<MonomialPairDecomposition>(&w)) {
    json j{{"type", "monomial_pair_decomposition"}};
    j.update(decomposition_json(cx, *d, field));
    return j;
  }
  if (auto* p = std::get_if<PurePowerWitness>(&w)) {
    json j{{"type", "pure_power"}};
    j.update(pure_power_json(cx, *p));
    return j;
  }
  if (auto* t = std::get_if<OracleTranscript>(&w)) {
    json j{{"type", "oracle_transcript"}};
    j.update(transcript_json(cx, *t));
    return j;
  }
  return nullptr;
}

json config_json(const RunConfig& c, const Context* cx) {
  json j;
  j["field"] = cx ? field_json(cx->ring.field.descriptor()) : json(c.field);
  j["ring"] = cx ? json(cx->vars) : json(c.ring);
  j["max_total_degree"] = c.oracle.max_total_degree;
  j["max_variables"] = c.oracle.max_variables;
  j["max_field_size"] = c.oracle.max_field_size;
  j["extension_sweep_cap"] = c.oracle.extension_sweep_cap;
  j["seed"] = c.seed;
  j["sweep_field"] = c.sweep_field ? json(*c.sweep_field) : json(nullptr);
  j["out"] = c.out ? json(*c.out) : json(nullptr);
  return j;
}

void need_args(const std::vector<std::string>& args, std::size_t min, std::size_t max, const char* usage) {
  if (args.size() < min || args.size() > max)
    throw Error(ErrorKind::InvalidArgument, std::string("usage: ") + usage);
}

std::vector<Monomial> parse_monomials(const Context& cx, const std::vector<std::string>& args, std::size_t from) {
  std::vector<Monomial> qs;
  for (std::size_t i = from; i < args.size(); ++i) qs.push_back(parse_monomial(args[i], cx.ring));
  return qs;
}

void validate(const OracleConfig& o) {
  if (o.max_total_degree == 0 || o.max_variables == 0 || o.max_field_size == 0 || o.jobs == 0)
    throw Error(ErrorKind::InvalidArgument, "oracle limits must be positive");
}

int cmd_newton(const Context& cx, const std::vector<std::string>& args, json& input, json& result) {
  need_args(args, 1, 1, "newton <P>");
  const auto P = parse_poly(args[0], cx.ring);
  input["polynomial"] = cx.poly(P);
  const auto set = newton_points(P);
  json pts = json::array();
  for (const auto& p : set.points) pts.push_back(lattice_json(p));
  result["points"] = pts;
  const LineFit fit = collinear(set);
  if (std::holds_alternative<NotCollinear>(fit)) {
    result["collinear"] = false;
    result["fit"] = "not_collinear";
  } else if (auto* s = std::get_if<SinglePoint>(&fit)) {
    result["collinear"] = true;
    result["fit"] = "single_point";
    result["point"] = lattice_json(s->point);
  } else {
    const auto& d = std::get<PrimitiveDirection>(fit);
    result["collinear"] = true;
    result["fit"] = "line";
    result["delta"] = lattice_json(d.delta);
    result["base"] = lattice_json(d.base);
    result["steps"] = d.steps;
    const auto [m1, m2] = split_direction(d.delta);
    result["m1"] = cx.mono(m1);
    result["m2"] = cx.mono(m2);
  }
  return kExitYes;
}

int cmd_decompose(const Context& cx, const std::vector<std::string>& args, json& input, json& result) {
  need_args(args, 1, 1, "decompose <P>");
  const auto P = parse_poly(args[0], cx.ring);
  input["polynomial"] = cx.poly(P);
  const auto dec = two_monomial_decomposition(P);
  result["decomposable"] = dec.has_value();
  if (!dec) return kExitNo;
  result.update(decomposition_json(cx, *dec, P.field()));
  const auto [refined, trace] = refine_monomial_pair(*dec);
  result["refined"] = decomposition_json(cx, refined, P.field());
  result["refinement_trace"] = json{{"initial_degree", trace.initial_degree},
                                    {"final_degree", trace.final_degree},
                                    {"gcd_factor", trace.gcd_factor}};
  result["site_monomials"] = cx.monos(homogeneous_site_monomials(refined, *P.degree()));
  return kExitYes;
}

int cmd_pure_power(const Context& cx, const std::vector<std::string>& args, json& input, json& result) {
  need_args(args, 1, 1, "pure-power <P>");
  const auto P = parse_poly(args[0], cx.ring);
  input["polynomial"] = cx.poly(P);
  const auto pp = pure_power(P);
  result["pure_power"] = pp.has_value();
  if (!pp) return kExitNo;
  result.update(pure_power_json(cx, *pp));
  return kExitYes;
}

int cmd_classify(const Context& cx, const std::vector<std::string>& args, json& input, json& result) {
  need_args(args, 2, 64, "classify <P> <Q1> [<Q2> ...]");
  const auto P = parse_poly(args[0], cx.ring);
  const auto qs = parse_monomials(cx, args, 1);
  input["polynomial"] = cx.poly(P);
  input["monomials"] = cx.monos(qs);
  const SiteVerdict v = classify_site(P, qs, cx.cfg.oracle);
  result["verdict"] = v.yes ? "YES" : "NO";
  result["site_case"] = to_string(v.site_case);
  result["method"] = to_string(v.method);
  result["witness"] = witness_json(cx, v.witness, P.field());
  json certificate = nullptr;
  if (!v.yes && v.method == Method::Structural && P.field().is_finite()) {
    try {
      certificate = transcript_json(cx, generic_irreducibility(P, qs, cx.cfg.oracle));
    } catch (const Error& e) {
      if (!is_limit(e.kind())) throw;
    }
  }
  result["certificate"] = certificate;
  return v.yes ? kExitYes : kExitNo;
}

int cmd_spectrum(const Context& cx, const std::vector<std::string>& args, json& input, json& result) {
  need_args(args, 2, 2, "spectrum <P> <Q>");
  const auto P = parse_poly(args[0], cx.ring);
  const auto Q = parse_monomial(args[1], cx.ring);
  input["polynomial"] = cx.poly(P);
  input["monomial"] = cx.mono(Q);
  Field sweep = cx.ring.field;
  if (cx.cfg.sweep_field) sweep = Field::from_descriptor(parse_field_spec(*cx.cfg.sweep_field));
  const SpectrumReport r = compute_spectrum(P, Q, sweep, cx.cfg.oracle);
  result["field"] = field_json(r.field);
  result["degree"] = r.degree;
  result["values"] = elements_json(sweep, r.values);
  result["degree_drop_exclusions"] = elements_json(sweep, r.degree_drop_exclusions);
  result["bound"] = r.bound;
  result["bound_satisfied"] = r.bound_satisfied;
  result["stats"] = stats_json(r.stats);
  return kExitYes;
}

int cmd_generic(const Context& cx, const std::vector<std::string>& args, json& input, json& result) {
  need_args(args, 2, 64, "generic-test <P> <Q1> [<Q2> ...]");
  const auto P = parse_poly(args[0], cx.ring);
  const auto qs = parse_monomials(cx, args, 1);
  input["polynomial"] = cx.poly(P);
  input["monomials"] = cx.monos(qs);
  const OracleTranscript tr = generic_irreducibility(P, qs, cx.cfg.oracle);
  result = transcript_json(cx, tr);
  return tr.generically_irreducible ? kExitYes : kExitNo;
}

int cmd_fixtures(const Context& cx, const std::vector<std::string>& args, json&, json& result) {
  need_args(args, 0, 0, "verify-paper-fixtures");
  const auto fixtures = verify_paper_fixtures(cx.cfg.oracle);
  json list = json::array();
  std::size_t passed = 0;
  for (const auto& f : fixtures) {
    list.push_back(json{{"name", f.name}, {"passed", f.passed}, {"detail", f.detail}});
    passed += f.passed;
  }
  result["fixtures"] = list;
  result["passed"] = passed;
  result["failed"] = fixtures.size() - passed;
  return passed == fixtures.size() ? kExitYes : kExitNo;
}

using Handler = int (*)(const Context&, const std::vector<std::string>&, json&, json&);

Handler find_handler(std::string_view command) {
  if (command == "newton") return cmd_newton;
  if (command == "decompose") return cmd_decompose;
  if (command == "pure-power") return cmd_pure_power;
  if (command == "classify") return cmd_classify;
  if (command == "spectrum") return cmd_spectrum;
  if (command == "generic-test") return cmd_generic;
  if (command == "verify-paper-fixtures") return cmd_fixtures;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"newton",   "decompose",    "pure-power",           "classify",
                                                 "spectrum", "generic-test", "verify-paper-fixtures"};
  return names;
}

RunOutcome run(std::string_view command, const RunConfig& cfg, const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  json doc;
  doc["command"] = std::string(command);
  json input{{"args", args}};
  json result = json::object();
  int code = kExitYes;
  std::optional<Context> cx;
  try {
    validate(cfg.oracle);
    Handler h = find_handler(command);
    if (!h) throw Error(ErrorKind::InvalidArgument, "unknown command '" + std::string(command) + "'");
    auto vars = parse_ring_spec(cfg.ring);
    Field field = Field::from_descriptor(parse_field_spec(cfg.field));
    cx.emplace(Context{cfg, Ring{vars, field}, vars});
    code = h(*cx, args, input, result);
    doc["config"] = config_json(cfg, &*cx);
    doc["input"] = input;
    doc["result"] = result;
  } catch (const Error& e) {
    code = is_limit(e.kind()) ? kExitLimit : kExitInput;
    doc["config"] = config_json(cfg, cx ? &*cx : nullptr);
    doc["input"] = input;
    doc["result"] = nullptr;
    doc["error"] = json{{"error_kind", to_string(e.kind())},
                        {"message", e.what()},
                        {"location", e.location() ? json(*e.location()) : json(nullptr)}};
  } catch (const std::exception& e) {
    code = kExitInput;
    doc["config"] = config_json(cfg, cx ? &*cx : nullptr);
    doc["input"] = input;
    doc["result"] = nullptr;
    doc["error"] = json{{"error_kind", "InvalidArgument"}, {"message", e.what()}, {"location", nullptr}};
  }
  doc["exit_code"] = code;
  if (cfg.timing) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc["timing"] = json{{"elapsed_ms", ms}};
  } else {
    doc["timing"] = nullptr;
  }
  RunOutcome out{code, doc.dump(2) + "\n"};
  if (cfg.out) {
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f || !(f << out.document)) {
      out.exit_code = kExitInput;
      json err = doc;
      err["result"] = nullptr;
      err["error"] = json{{"error_kind", "InvalidArgument"}, {"message", "cannot write " + *cfg.out}, {"location", nullptr}};
      out.document = err.dump(2) + "\n";
    }
  }
  return out;
}

}  // namespace monosite
