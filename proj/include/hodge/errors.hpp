#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

// Bad user input (malformed flags, unbounded search requests). CLI exit code 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically invalid request (inadmissible type, invalid tuple). CLI exit code 3.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded. CLI exit code 4.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hodge
