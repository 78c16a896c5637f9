#include "hodge/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

void apply(Caps& caps, const std::string& key, const std::string& value) {
  try {
    if (key == "max_dim") {
      caps.max_dim = std::stoll(value);
      caps.max_dim_explicit = true;
    } else if (key == "max_rank")
      caps.max_rank = std::stoi(value);
    else if (key == "max_factors")
      caps.max_factors = std::stoi(value);
    else if (key == "oracle_max_dim")
      caps.oracle_max_dim = std::stoll(value);
    else if (key == "oracle_max_rank")
      caps.oracle_max_rank = std::stoi(value);
    else
      throw UsageError("unknown configuration key '" + key + "'");
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed value for configuration key '" + key + "'");
  }
}

}  // namespace

Caps load_caps(const std::string& config_path) {
  Caps caps;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot open config file '" + config_path + "'");
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r");
        size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (!key.empty()) apply(caps, key, value);
    }
  }
  const char* env_keys[] = {"max_dim", "max_rank", "max_factors", "oracle_max_dim",
                            "oracle_max_rank"};
  for (const char* key : env_keys) {
    std::string env_name = "HODGE_";
    for (const char* p = key; *p; ++p) env_name += static_cast<char>(std::toupper(*p));
    if (const char* v = std::getenv(env_name.c_str())) apply(caps, key, v);
  }
  return caps;
}

}  // namespace hodge
