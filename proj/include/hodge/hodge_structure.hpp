#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/weights.hpp"

namespace hodge {

enum class Reality { Real, Complex, Quaternionic };

std::string to_string(Reality r);

// One simple factor (g_i, E_i, mu_i) of a Hodge tuple.
struct AlgebraFactor {
  SimpleType type;
  GradingElement e;
  Weight mu;

  auto operator<=>(const AlgebraFactor&) const = default;
};

// A tuple (g, E, mu, c): semisimple algebra as a list of simple factors, a
// grading element and highest weight per factor, and the center scalar c.
struct HodgeTuple {
  std::vector<AlgebraFactor> factors;
  Rat c{0};

  bool operator==(const HodgeTuple& o) const { return factors == o.factors && c == o.c; }
  bool operator<(const HodgeTuple& o) const {
    if (factors != o.factors) return factors < o.factors;
    return c < o.c;
  }
};

std::string to_string(const HodgeTuple& t);

// Everything the engine derives from a tuple.
struct HodgeDescriptor {
  long long level = 0;                     // n
  std::vector<long long> hodge_numbers;    // h^{n,0} ... h^{0,n}
  Reality reality = Reality::Real;
  long long dim_v = 0;
  bool horizontal = false;
  bool contact = false;
  bool period_domain = false;
  bool cy_type = false;
  std::vector<long long> adjoint_grading;  // dim g^{l,-l}, l = depth .. -depth
  long long depth = 0;
  long long compact_dim = 0;
  std::optional<std::string> real_form;    // named only for matched gradings

  bool operator==(const HodgeDescriptor&) const = default;
};

// Reality type of the total representation: complex when c != 0 or the total
// highest weight is not self-dual, otherwise decided by the parity of mu(T).
Reality reality_type(const HodgeTuple& t);

// dim g^{l,-l} for l = depth..-depth of one factor (rank added at l = 0).
std::vector<long long> adjoint_grading(const RootDatum& datum, const GradingElement& e);

bool is_horizontal(const HodgeTuple& t);

// Contact is defined for single factors: adjoint depth exactly 2 and
// dim g^{2,-2} = 1.  Multi-factor tuples report false.
bool is_contact(const HodgeTuple& t);

bool is_period_domain(const HodgeTuple& t);

bool is_cy_type(const HodgeTuple& t);

long long compact_dim(const HodgeTuple& t);

// Graded character of the full module (tensor product over factors).
GradedCharacter tuple_character(const HodgeTuple& t, long long dim_cap = kDefaultDimensionCap);

// Validates the tuple and computes the full descriptor.
// Throws DomainError for invalid tuples (trivial factor, zero grading,
// m not a half-integer, level zero).
HodgeDescriptor describe(const HodgeTuple& t, long long dim_cap = kDefaultDimensionCap);

// Real form and maximal compact subalgebra names for the Hermitian and
// contact gradings of the classification tables; nullopt otherwise.
struct RealFormInfo {
  std::string real_form;
  std::string compact;
};
std::optional<RealFormInfo> real_form_info(const SimpleType& type, const GradingElement& e);

// Exceptional low-rank isomorphism annotations (so(3) = sl(2), so(5) = sp(4), ...).
std::vector<std::string> isomorphism_aliases(const SimpleType& type);

}  // namespace hodge
