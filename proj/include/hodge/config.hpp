#pragma once

#include <string>

namespace hodge {

// Resource caps.  Defaults < config file < environment (HODGE_*) < CLI flags.
struct Caps {
  long long max_dim = 1000000;   // weight-system dimension cap
  int max_rank = 8;
  int max_factors = 3;
  long long oracle_max_dim = 2000;
  int oracle_max_rank = 6;
  // true when max_dim came from a config file or the environment; only then
  // does it double as the default search bound for wildcard patterns
  bool max_dim_explicit = false;
};

// Reads key=value lines ('#' comments allowed), then applies environment
// overrides HODGE_MAX_DIM, HODGE_MAX_RANK, HODGE_MAX_FACTORS,
// HODGE_ORACLE_MAX_DIM, HODGE_ORACLE_MAX_RANK.
Caps load_caps(const std::string& config_path = "");

}  // namespace hodge
