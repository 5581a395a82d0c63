#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>

#include "lcg/cli.hpp"
#include "lcg/errors.hpp"

namespace lcg::cli {

namespace {

std::uint64_t positive(const CLI::ConfigItem& item) {
  if (item.inputs.size() != 1) throw Error("config key '" + item.fullname() + "' needs one value");
  const std::string& v = item.inputs.front();
  std::uint64_t n = 0;
  if (v.empty() || v.size() > 19 || v.find_first_not_of("0123456789") != std::string::npos ||
      (n = std::stoull(v)) == 0) {
    throw Error("config key '" + item.fullname() + "' must be a positive integer, got '" + v + "'");
  }
  return n;
}

}  // namespace

Settings load_settings(const std::string& path, Settings base) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_file(path);
  } catch (const CLI::Error& e) {
    throw Error("cannot read config " + path + ": " + e.what());
  }
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    const std::string key = item.fullname();
    if (key == "budget") {
      base.budget = positive(item);
    } else if (key == "population_limit") {
      base.population_limit = positive(item);
    } else if (key == "entry_cap") {
      base.entry_cap = positive(item);
    } else {
      throw Error("unknown config key '" + key + "' in " + path);
    }
  }
  return base;
}

std::optional<std::string> config_path() {
  if (const char* env = std::getenv(kConfigEnv); env && *env) return std::string(env);
  if (std::filesystem::exists(kConfigFile)) return std::string(kConfigFile);
  return std::nullopt;
}

}  // namespace lcg::cli
