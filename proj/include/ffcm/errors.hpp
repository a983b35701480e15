#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffcm {

// Error taxonomy mirrored by the CLI exit codes: budget -> 2,
// invariant breach -> 3, parse -> 4.  Precision faults are a caller
// error (insufficient Laurent depth) and map to invariant breach.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& w) : std::runtime_error(w) {}
};

struct precision_error : std::runtime_error {
  explicit precision_error(const std::string& w) : std::runtime_error(w) {}
};

struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string& w) : std::runtime_error(w) {}
};

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& w) : std::runtime_error(w) {}
};

// Enumeration budget: a hard cap on the cardinality of any exhaustive
// scan.  Exceeding it raises budget_error, never silently truncates.
struct Budget {
  std::uint64_t limit = 1'000'000'000ULL;

  void charge(std::uint64_t cardinality, const char* what) const {
    if (cardinality > limit)
      throw budget_error(std::string(what) + ": enumeration of " +
                         std::to_string(cardinality) + " points exceeds budget " +
                         std::to_string(limit));
  }
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invariant_error(msg);
}

}  // namespace ffcm
