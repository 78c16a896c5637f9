#pragma once

#include "hodge/weights.hpp"

namespace hodge {

inline constexpr long long kOracleDimensionCap = 2000;
inline constexpr int kOracleRankCap = 6;

// Brute-force weight system via the Kostant multiplicity formula: an
// alternating sum of Kostant partition counts over the full Weyl group,
// evaluated on every lattice point of the bounding box of the weight
// polytope.  Algorithmically independent of the Freudenthal route; used as a
// verification oracle in tests.
WeightSystem oracle_weight_system(const RootDatum& datum, const Weight& mu,
                                  long long dim_cap = kOracleDimensionCap,
                                  int rank_cap = kOracleRankCap);

}  // namespace hodge
