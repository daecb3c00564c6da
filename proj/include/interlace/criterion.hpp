#pragma once

// Triangles T(n,k) = f(n,k) T(n-1,k) + g(n,k) T(n-1,k-1) and the sufficient
// condition on f and g under which real-rooted rows are interlacing
// log-concave.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "interlace/exact.hpp"
#include "interlace/report.hpp"
#include "interlace/sturm.hpp"

namespace interlace {

/// Coefficient function of (n, k). Must be pure; it may be called from
/// several threads at once. Throw ConfigError when undefined at (n, k).
using CoefficientFn = std::function<Rational(long n, long k)>;

struct TriangularRecurrence {
  std::string name;
  CoefficientFn f;
  CoefficientFn g;
  CoefficientRow base{Rational(1)};  // row 0; must have degree 0
  int support_start = 0;             // T(n,k) = 0 for k < support_start when n >= 1
};

struct FamilyId {
  enum class Kind { Pascal, StirlingCycle, StirlingSecond, Whitney };
  Kind kind = Kind::Pascal;
  int whitney_m = 0;

  static FamilyId pascal() { return {Kind::Pascal, 0}; }
  static FamilyId stirling_cycle() { return {Kind::StirlingCycle, 0}; }
  static FamilyId stirling_second() { return {Kind::StirlingSecond, 0}; }
  static FamilyId whitney(int m) { return {Kind::Whitney, m}; }
};

/// Pascal: f = 1, g = 1, support 0 (rows of (x+1)^n).
/// StirlingCycle: f = n-1, g = 1, support 1 (x(x+1)...(x+n-1)).
/// StirlingSecond: f = k, g = 1, support 1 (Bell polynomials).
/// Whitney(m): f = 1 + m k, g = 1, support 1.
TriangularRecurrence family(FamilyId id);

/// Accepts "pascal", "stirling-cycle", "stirling-second" (alias "bell") and
/// "whitney"; `param` is the Whitney m.
std::optional<FamilyId> parse_family(std::string_view name, int param);

/// Rows 0..n_max. Throws ConfigError if f or g fails at a queried point or
/// the base row is not of degree 0.
CoefficientTriangle build_triangle(const TriangularRecurrence& rec, int n_max);

/// For 1 <= n <= n_max-1 and 0 <= k <= n-1:
///   (n-k)k / ((n-k+1)(k+1)) f(n+1,k+1) <= f(n+1,k) <= f(n+1,k+1).
/// Violations are indexed (n, k); clause "lower" or "upper".
CheckReport check_f_condition(const TriangularRecurrence& rec, int n_max);

/// For 1 <= n <= n_max-1:
///   g(n+1,k+1) <= g(n+1,k)                              for 0 <= k <= n,
///   g(n+1,k) <= (n-k+1)(k+1) / ((n-k)k) g(n+1,k+1)      for 1 <= k <= n-1.
CheckReport check_g_condition(const TriangularRecurrence& rec, int n_max);

/// Row n restricted to k in [support_start, n], as a row of its own.
/// Empty when n < support_start.
std::optional<CoefficientRow> positive_window(const CoefficientRow& row, int support_start);

struct CriterionReport {
  std::string family;
  int n_max = 0;
  int sturm_up_to = 0;
  std::optional<std::uint64_t> seed;

  CheckReport f_condition;
  CheckReport g_condition;
  std::vector<SturmResult> sturm;  // rows 0..sturm_up_to (row 0 included if nonzero)
  CheckReport real_rooted;         // violation at n when row n is not real-rooted
  CheckReport newton_proxy;        // rows sturm_up_to+1..n_max, necessary condition only
  CheckReport interlacing;         // non-strict, positive support
  CheckReport strict_interlacing;  // observed, not required

  bool hypotheses_hold() const {
    return f_condition.pass() && g_condition.pass() && real_rooted.pass() && newton_proxy.pass();
  }
  bool conclusion_holds() const { return interlacing.pass(); }
  bool pass() const { return hypotheses_hold() && conclusion_holds(); }
};

/// Runs both conditions, Sturm real-rootedness up to sturm_up_to (Newton as a
/// labelled proxy beyond), and non-strict interlacing of all consecutive rows
/// on their positive support. Throws DomainError if sturm_up_to > n_max.
CriterionReport criterion_report(const TriangularRecurrence& rec, int n_max, int sturm_up_to, int workers = 1);

/// Random recurrence inside the condition cone: f(n,k) = a + b k + c n and
/// g(n,k) = p + q n with a, p > 0 and b, c, q >= 0 drawn from the seed.
TriangularRecurrence random_cone_recurrence(std::uint64_t seed);

}  // namespace interlace
