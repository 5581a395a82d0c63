#pragma once

// Command-line front end: `lcg-engine <run|classify|enumerate|collide|info> ...`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lcg/core.hpp"
#include "lcg/enumerate.hpp"

namespace lcg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;     // usage, parse, schema, invalid input
inline constexpr int kExitResource = 3;  // resource limit or partial result

/// Defaults that a config file may override.
struct Settings {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t population_limit = Limits{}.population_limit;
  std::size_t entry_cap = kDefaultEntryCap;
};

inline constexpr const char* kConfigEnv = "LCG_ENGINE_CONFIG";
inline constexpr const char* kConfigFile = "lcg-engine.toml";

/// Reads `path` (TOML subset: `key = value`). Throws lcg::Error on unknown
/// keys or bad values.
Settings load_settings(const std::string& path, Settings base = {});

/// `$LCG_ENGINE_CONFIG` if set (must exist), else ./lcg-engine.toml if present.
std::optional<std::string> config_path();

/// `args` excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcg::cli
