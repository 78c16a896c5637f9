#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace hodge {

// Exact rational scalar used for all weight/grading evaluations.
using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

inline bool is_half_integer(const Rat& q) { return q.denominator() == 1 || q.denominator() == 2; }

// q must be integral.
inline long long to_integer(const Rat& q) {
  if (!is_integer(q)) throw std::logic_error("rational is not an integer: " + std::to_string(q.numerator()) + "/" + std::to_string(q.denominator()));
  return q.numerator();
}

inline std::string to_string(const Rat& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Parses "p", "-p" or "p/q".
Rat parse_rational(const std::string& text);

}  // namespace hodge
