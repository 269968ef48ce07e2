#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monosite/spectrum.hpp"

namespace monosite {

struct RunConfig {
  std::string field = "q";
  std::string ring = "x,y";
  OracleConfig oracle;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  // Field swept by `spectrum`; defaults to `field`.
  std::optional<std::string> sweep_field;
  bool timing = false;
};

struct RunOutcome {
  int exit_code = 0;
  std::string document;
};

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitLimit = 3;

const std::vector<std::string>& commands();

// Never throws; failures are reported in the document and the exit code.
RunOutcome run(std::string_view command, const RunConfig& cfg, const std::vector<std::string>& args);

struct FixtureResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<FixtureResult> verify_paper_fixtures(const OracleConfig& cfg);

}  // namespace monosite
