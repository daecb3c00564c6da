#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "interlace/exact.hpp"

namespace interlace {

/// How an inequality was compared. Identities use Equality.
enum class Strictness { Strict, NonStrict, Equality };

std::string_view to_string(Strictness mode);

inline constexpr std::size_t kDefaultViolationCap = 32;

/// One failed instance: row index m, entry index i, and both sides.
struct Violation {
  int m = 0;
  int i = 0;
  Rational lhs;
  Rational rhs;
  std::string clause;  // which side of a two-sided check failed, if any

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a verification sweep. Violations are collected without early
/// exit; only the first `cap` are stored but all are counted.
struct CheckReport {
  std::string property;
  Strictness mode = Strictness::NonStrict;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  std::size_t checked = 0;
  std::size_t cap = kDefaultViolationCap;

  CheckReport() = default;
  CheckReport(std::string name, Strictness how, std::size_t max_stored = kDefaultViolationCap)
      : property(std::move(name)), mode(how), cap(max_stored == 0 ? 1 : max_stored) {}

  bool pass() const { return violation_count == 0; }

  void record(Violation v) {
    ++violation_count;
    if (violations.size() < cap) violations.push_back(std::move(v));
  }

  /// Appends another report's counts and violations, in order.
  void merge(const CheckReport& other) {
    checked += other.checked;
    violation_count += other.violation_count;
    for (const auto& v : other.violations) {
      if (violations.size() >= cap) break;
      violations.push_back(v);
    }
  }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace interlace
