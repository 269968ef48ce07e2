#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monosite/monosite.h"

int main(int argc, char** argv) {
  monosite_run_config cfg;
  monosite_run_config_init(&cfg);

  CLI::App app{"Reducibility monomial sites of multivariate polynomials"};
  app.footer(
      "Commands:\n"
      "  newton <P>\n"
      "  decompose <P>\n"
      "  pure-power <P>\n"
      "  classify <P> <Q1> [<Q2> ...]\n"
      "  spectrum <P> <Q>\n"
      "  generic-test <P> <Q1> [<Q2> ...]\n"
      "  verify-paper-fixtures\n"
      "Exit status: 0 yes, 1 no, 2 input error, 3 resource limit.\n"
      "Use -- before polynomials that start with '-'.");

  std::string field = cfg.field, ring = cfg.ring, out, sweep_field;
  std::string command;
  std::vector<std::string> args;
  bool timing = false;
  app.add_option("--field", field, "Coefficient field: q, p or p^m")->capture_default_str();
  app.add_option("--ring", ring, "Variables: x | x,y | x,y,z | x1,...,xn")->capture_default_str();
  app.add_option("--max-degree", cfg.max_total_degree, "Largest total degree handled by the oracle")
      ->capture_default_str();
  app.add_option("--max-vars", cfg.max_variables, "Largest variable count handled by the oracle")
      ->capture_default_str();
  app.add_option("--max-field", cfg.max_field_size, "Largest field swept by the oracle")->capture_default_str();
  app.add_option("--extension-cap", cfg.extension_sweep_cap, "Largest extension degree used by the oracle (0: auto)")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed recorded in the output")->capture_default_str();
  app.add_option("--out", out, "Write the JSON document to this path instead of stdout");
  app.add_option("--sweep-field", sweep_field, "Field swept by spectrum (default: --field)");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->envname("MONOSITE_JOBS")->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--timing", timing, "Record elapsed time");
  app.add_option("command", command, "Command to run")->required();
  app.add_option("args", args, "Command arguments");

  CLI11_PARSE(app, argc, argv);

  cfg.field = field.c_str();
  cfg.ring = ring.c_str();
  cfg.out = out.empty() ? nullptr : out.c_str();
  cfg.sweep_field = sweep_field.empty() ? nullptr : sweep_field.c_str();
  cfg.timing = timing ? 1 : 0;

  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());
  char* doc = nullptr;
  int code = 0;
  if (monosite_run(&cfg, command.c_str(), static_cast<int>(cargs.size()), cargs.data(), &doc, &code) != MONOSITE_OK) {
    std::fprintf(stderr, "monosite: %s: %s\n", monosite_last_error_kind(), monosite_last_error_message());
    return 2;
  }
  if (!cfg.out || code == 2) std::fputs(doc, code == 2 && cfg.out ? stderr : stdout);
  monosite_string_free(doc);
  return code;
}
