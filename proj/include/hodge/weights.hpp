#pragma once

#include <map>
#include <vector>

#include "hodge/root_datum.hpp"

namespace hodge {

inline constexpr long long kDefaultDimensionCap = 1000000;

// Complete weight multiset of an irreducible highest-weight module.
struct WeightSystem {
  Weight highest;
  std::map<Weight, long long> entries;  // weight -> multiplicity, deterministic order

  long long dimension() const;
};

// Exact Weyl dimension of the irreducible module with highest weight mu.
// Throws DomainError if mu is not dominant.
long long weyl_dimension(const RootDatum& datum, const Weight& mu);

// Weight multiplicities by the Freudenthal recursion.  Throws ResourceError
// when the Weyl dimension exceeds dim_cap.
WeightSystem weight_system(const RootDatum& datum, const Weight& mu,
                           long long dim_cap = kDefaultDimensionCap);

// Shared memoized front end to weight_system; safe under concurrent callers.
const WeightSystem& cached_weight_system(const RootDatum& datum, const Weight& mu,
                                         long long dim_cap = kDefaultDimensionCap);

// Dimensions of the eigenspaces of a grading element acting on an irreducible
// module.  Eigenvalues of U_mu form a gap-free progression of step one from
// bottom = -mu*(E) to top = mu(E).
struct GradedCharacter {
  std::map<Rat, long long> dims;
  Rat top;
  Rat bottom;

  long long dim_at(const Rat& eigenvalue) const;
  long long dimension() const;
  // Dimensions listed from the top eigenvalue down.
  std::vector<long long> descending() const;
};

GradedCharacter graded_character(const RootDatum& datum, const Weight& mu,
                                 const GradingElement& e,
                                 long long dim_cap = kDefaultDimensionCap);

// Pointwise sum of eigenvalues, product of dimensions; the character of a
// tensor product of modules of distinct simple factors.
GradedCharacter convolve(const GradedCharacter& a, const GradedCharacter& b);

}  // namespace hodge
