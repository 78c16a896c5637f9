#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hodge/hodge_structure.hpp"

namespace hodge {

// One slot of a Hodge-number pattern: a required value or a wildcard.
struct PatternEntry {
  bool wildcard = true;
  long long value = 0;
};

// "1,*,1" -> fixed 1, wildcard, fixed 1.
std::vector<PatternEntry> parse_pattern(const std::string& text);
std::string pattern_to_string(const std::vector<PatternEntry>& pattern);

struct SearchConstraints {
  long long weight_n = 2;
  std::vector<PatternEntry> pattern;  // length weight_n + 1; empty = all wildcards
  bool horizontal = false;
  bool contact = false;
  bool non_horizontal = false;
  bool period_domain = false;
  bool cy = false;
  bool nonzero_middle = false;
  int max_rank = 8;
  int max_factors = 3;
  int min_factors = 1;
  long long max_dim_v = 0;  // required unless the pattern is fully fixed
};

struct ClassifiedTuple {
  HodgeTuple tuple;  // canonical form
  HodgeDescriptor descriptor;
  std::vector<std::string> notes;
};

// Least representative of the equivalence class of t under simultaneous
// diagram automorphisms of (e, mu) per factor, the global substitution
// (mu, c) -> (mu*, -c), and factor reordering.  Idempotent.
HodgeTuple canonicalize(const HodgeTuple& t);

// Bounded exhaustive search.  Output is canonical, duplicate-free,
// deterministically ordered, and complete within the stated bounds.
std::vector<ClassifiedTuple> enumerate_tuples(const SearchConstraints& constraints);

enum class GradingKind { Hermitian, Contact };

// All (type, grading) pairs up to max_rank whose adjoint grading has depth 1
// (hermitian) or depth 2 with one-dimensional extreme piece (contact).
std::vector<std::pair<SimpleType, GradingElement>> classify_gradings(GradingKind kind,
                                                                     int max_rank);

// Annotations attached to enumerator output (aliases, real-form names, ...).
std::vector<std::string> tuple_notes(const HodgeTuple& canonical, const HodgeDescriptor& desc);

}  // namespace hodge
