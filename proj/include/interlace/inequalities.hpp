#pragma once

// Exact predicates for the log-concavity hierarchy: unimodality,
// log-concavity, interlacing of consecutive ratio sequences, the strict
// cross-product pair, the two weighted strengthenings used to prove them,
// Newton's inequality, and the iterated L-operator probes.
//
// Every predicate compares by cross-multiplication; nothing here divides
// except ratio_sequence, which is exact anyway.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "interlace/exact.hpp"
#include "interlace/report.hpp"

namespace interlace {

/// r_i = a_i / a_{i+1} for i = 0..m-1.
struct RatioSequence {
  int degree = 0;
  std::vector<Rational> ratios;
};

/// Row of arbitrary sign, as produced by the L-operator.
struct SignedRow {
  std::vector<Rational> entries;
  int degree() const { return static_cast<int>(entries.size()) - 1; }
};

/// Throws DomainError naming the first non-positive entry.
RatioSequence ratio_sequence(const CoefficientRow& row);

/// a_i^2 >= a_{i-1} a_{i+1} (or >) for 1 <= i <= m-1.
CheckReport check_log_concave(const CoefficientRow& row, Strictness mode);

/// Strict ascent to index floor(m/2) and strict descent after it. This is
/// the Boros-Moll mode statement; general rows only need plain unimodality.
CheckReport check_unimodal_middle(const CoefficientRow& row);

/// r_0(m+1) <= r_0(m) <= r_1(m+1) <= ... <= r_{m-1}(m) <= r_m(m+1),
/// with < in Strict mode. Violations are indexed by the position of the
/// failing link: clause "descent" for r_i(m+1) vs r_i(m), "ascent" for
/// r_i(m) vs r_{i+1}(m+1). Throws StructuralError unless the degrees differ
/// by exactly one.
CheckReport check_interlacing_pair(const CoefficientRow& row_m, const CoefficientRow& row_m1, Strictness mode);

/// d_i(m) d_{i+1}(m+1) > d_{i+1}(m) d_i(m+1) for 0 <= i <= m.
CheckReport check_ratio_descent(const CoefficientRow& row_m, const CoefficientRow& row_m1);

/// d_i(m) d_i(m+1) > d_{i-1}(m) d_{i+1}(m+1) for 0 <= i <= m.
CheckReport check_ratio_ascent(const CoefficientRow& row_m, const CoefficientRow& row_m1);

/// Both strict cross-product inequalities. Out-of-range entries are zero, so
/// the boundary instances hold with one side 0. Intended for consecutive
/// Boros-Moll rows with m >= 2. Clauses are "descent" and "ascent".
CheckReport check_cross_products(const CoefficientRow& row_m, const CoefficientRow& row_m1);

/// Weighted strict log-concavity, 0 <= i <= m-2:
///   a_i / a_{i+1} < (4m+2i+3) a_{i+1} / ((4m+2i+7) a_{i+2}).
/// Throws DomainError for degree < 2.
CheckReport check_weighted_log_concave(const CoefficientRow& row);

/// Weighted ratio descent, 0 <= i <= m-1:
///   d_i(m) / d_{i+1}(m) > (2i+4m+5) d_i(m+1) / ((2i+4m+3) d_{i+1}(m+1)).
CheckReport check_weighted_ratio_descent(const CoefficientRow& row_m, const CoefficientRow& row_m1);

/// Newton: k(n-k) a_k^2 >= (k+1)(n-k+1) a_{k-1} a_{k+1} for 1 <= k <= n-1.
CheckReport check_newton(const CoefficientRow& row);
CheckReport check_newton(std::span<const Rational> coefficients);

/// b_i = a_i^2 - a_{i-1} a_{i+1}, out-of-range entries taken as 0.
SignedRow l_operator(std::span<const Rational> row);
inline SignedRow l_operator(const CoefficientRow& row) { return l_operator(row.entries()); }

struct KFoldResult {
  int k = -1;                  // largest k with L^0..L^k positive and log-concave; -1 if the row itself fails
  int k_max = 0;
  std::optional<int> failed_at;  // first j that failed, if any within k_max
};

/// Iterates the L-operator, stopping at the first j <= k_max where L^j is not
/// entrywise positive or not log-concave.
KFoldResult k_fold_log_concavity(const CoefficientRow& row, int k_max);

struct DepthLevel {
  int j = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_interlacing = 0;         // non-strict chain holds
  std::size_t pairs_strictly_interlacing = 0;
  std::size_t pairs_skipped = 0;             // some L^j entry not positive
  bool all_interlacing() const { return pairs_interlacing == pairs_checked; }
};

/// For j = 0..k_max applies L^j to every row and checks consecutive pairs
/// for interlacing. Purely informational.
std::vector<DepthLevel> interlacing_depth(const CoefficientTriangle& tri, int k_max, int workers = 1);

// ---------------------------------------------------------------------------
// Triangle sweeps. Rows (or row pairs (m, m+1)) for m in [m_from, m_to] are
// checked in parallel and merged in index order.
// ---------------------------------------------------------------------------

using RowCheck = std::function<CheckReport(const CoefficientRow&)>;
using PairCheck = std::function<CheckReport(const CoefficientRow&, const CoefficientRow&)>;

CheckReport sweep_rows(const CoefficientTriangle& tri, int m_from, int m_to, const RowCheck& check,
                       int workers = 1, std::size_t cap = kDefaultViolationCap);

/// m_to is the degree of the first row of the last pair.
CheckReport sweep_pairs(const CoefficientTriangle& tri, int m_from, int m_to, const PairCheck& check,
                        int workers = 1, std::size_t cap = kDefaultViolationCap);

}  // namespace interlace
