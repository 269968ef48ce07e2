#include "monosite/monosite.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "monosite/driver.hpp"
#include "monosite/textio.hpp"

using namespace monosite;

struct monosite_context {
  Ring ring;
  OracleConfig oracle;
};

struct monosite_poly {
  SparsePolynomial poly;
  std::vector<std::string> variables;
};

namespace {

struct LastError {
  std::string kind;
  std::string message;
  std::int64_t location = -1;
};

thread_local LastError last_error;

void clear_error() { last_error = LastError{}; }

monosite_status status_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::ExponentOverflow:
      return MONOSITE_ERR_PARSE;
    case ErrorKind::NonPrime:
    case ErrorKind::DegreeTooLarge:
    case ErrorKind::NotFinite:
    case ErrorKind::CharacteristicZero:
    case ErrorKind::FieldTooSmall:
      return MONOSITE_ERR_FIELD;
    case ErrorKind::InvalidArgument:
      return MONOSITE_ERR_INVALID_ARGUMENT;
    default:
      return is_limit(k) ? MONOSITE_ERR_LIMIT : MONOSITE_ERR_PRECONDITION;
  }
}

monosite_status fail(monosite_status s, std::string kind, std::string message, std::int64_t location = -1) {
  last_error = LastError{std::move(kind), std::move(message), location};
  return s;
}

template <class F>
monosite_status guarded(F&& f) {
  clear_error();
  try {
    f();
    return MONOSITE_OK;
  } catch (const Error& e) {
    return fail(status_for(e.kind()), to_string(e.kind()), e.what(),
                e.location() ? static_cast<std::int64_t>(*e.location()) : -1);
  } catch (const std::bad_alloc&) {
    return fail(MONOSITE_ERR_LIMIT, "InstanceTooLarge", "out of memory");
  } catch (const std::exception& e) {
    return fail(MONOSITE_ERR_INTERNAL, "Internal", e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

monosite_status null_argument() { return fail(MONOSITE_ERR_INVALID_ARGUMENT, "InvalidArgument", "null argument"); }

}  // namespace

extern "C" {

const char* monosite_version(void) { return "1.0.0"; }

const char* monosite_last_error_kind(void) { return last_error.kind.c_str(); }
const char* monosite_last_error_message(void) { return last_error.message.c_str(); }
int64_t monosite_last_error_location(void) { return last_error.location; }

monosite_status monosite_context_create(const char* field, const char* ring, monosite_context** out) {
  if (!field || !ring || !out) return null_argument();
  return guarded([&] {
    Ring r{parse_ring_spec(ring), Field::from_descriptor(parse_field_spec(field))};
    *out = new monosite_context{std::move(r), OracleConfig{}};
  });
}

void monosite_context_destroy(monosite_context* ctx) { delete ctx; }

monosite_status monosite_context_set_limits(monosite_context* ctx, unsigned max_total_degree, unsigned max_variables,
                                            uint64_t max_field_size, unsigned extension_sweep_cap) {
  if (!ctx) return null_argument();
  if (!max_total_degree || !max_variables || !max_field_size)
    return fail(MONOSITE_ERR_INVALID_ARGUMENT, "InvalidArgument", "limits must be positive");
  clear_error();
  ctx->oracle.max_total_degree = max_total_degree;
  ctx->oracle.max_variables = max_variables;
  ctx->oracle.max_field_size = max_field_size;
  ctx->oracle.extension_sweep_cap = extension_sweep_cap;
  return MONOSITE_OK;
}

monosite_status monosite_context_set_jobs(monosite_context* ctx, unsigned jobs) {
  if (!ctx) return null_argument();
  if (!jobs) return fail(MONOSITE_ERR_INVALID_ARGUMENT, "InvalidArgument", "jobs must be positive");
  clear_error();
  ctx->oracle.jobs = jobs;
  return MONOSITE_OK;
}

monosite_status monosite_poly_parse(const monosite_context* ctx, const char* src, monosite_poly** out) {
  if (!ctx || !src || !out) return null_argument();
  return guarded([&] { *out = new monosite_poly{parse_poly(src, ctx->ring), ctx->ring.variables}; });
}

void monosite_poly_destroy(monosite_poly* p) { delete p; }

monosite_status monosite_poly_format(const monosite_poly* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { *out = copy_string(format_poly(p->poly, p->variables)); });
}

monosite_status monosite_poly_degree(const monosite_poly* p, int* out) {
  if (!p || !out) return null_argument();
  clear_error();
  const auto d = p->poly.degree();
  *out = d ? static_cast<int>(*d) : -1;
  return MONOSITE_OK;
}

monosite_status monosite_abs_irreducible(const monosite_context* ctx, const monosite_poly* p, int* out) {
  if (!ctx || !p || !out) return null_argument();
  return guarded([&] {
    if (p->poly.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
    if (p->poly.is_constant()) throw Error(ErrorKind::PreconditionViolation, "constant polynomial");
    *out = abs_irreducible(p->poly, ctx->oracle) ? 1 : 0;
  });
}

void monosite_run_config_init(monosite_run_config* cfg) {
  if (!cfg) return;
  const RunConfig d;
  cfg->field = "q";
  cfg->ring = "x,y";
  cfg->max_total_degree = d.oracle.max_total_degree;
  cfg->max_variables = d.oracle.max_variables;
  cfg->max_field_size = d.oracle.max_field_size;
  cfg->extension_sweep_cap = d.oracle.extension_sweep_cap;
  cfg->jobs = d.oracle.jobs;
  cfg->seed = 0;
  cfg->out = nullptr;
  cfg->sweep_field = nullptr;
  cfg->timing = 0;
}

monosite_status monosite_run(const monosite_run_config* cfg, const char* command, int argc, const char* const* argv,
                             char** json_out, int* exit_code) {
  if (!cfg || !command || !json_out || !exit_code || argc < 0 || (argc > 0 && !argv)) return null_argument();
  return guarded([&] {
    RunConfig rc;
    rc.field = cfg->field ? cfg->field : "q";
    rc.ring = cfg->ring ? cfg->ring : "x,y";
    rc.oracle.max_total_degree = cfg->max_total_degree;
    rc.oracle.max_variables = cfg->max_variables;
    rc.oracle.max_field_size = cfg->max_field_size;
    rc.oracle.extension_sweep_cap = cfg->extension_sweep_cap;
    rc.oracle.jobs = cfg->jobs;
    rc.seed = cfg->seed;
    if (cfg->out) rc.out = cfg->out;
    if (cfg->sweep_field) rc.sweep_field = cfg->sweep_field;
    rc.timing = cfg->timing != 0;
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) {
      if (!argv[i]) throw Error(ErrorKind::InvalidArgument, "null argument");
      args.emplace_back(argv[i]);
    }
    RunOutcome r = run(command, rc, args);
    *json_out = copy_string(r.document);
    *exit_code = r.exit_code;
  });
}

void monosite_string_free(char* s) { std::free(s); }

}  // extern "C"
