#pragma once

// Boros-Moll coefficient rows d_i(m), generated three independent ways, and
// exact verification of the four known three-term recurrences.

#include <optional>
#include <string_view>

#include "interlace/exact.hpp"
#include "interlace/report.hpp"

namespace interlace::boros_moll {

enum class GenerationMethod {
  ExpandDefinition,  // expand the (x+1)^j (x-1)^k double sum
  DirectSum,         // single-sum coefficient formula
  Recurrence,        // row-to-row recurrence from [1]
};

std::string_view to_string(GenerationMethod method);
std::optional<GenerationMethod> parse_method(std::string_view name);

/// The four recurrences, in the usual order:
///   R1: d_i(m+1) from d_{i-1}(m), d_i(m)             0 <= i <= m+1
///   R2: d_i(m+1) from d_i(m), d_{i+1}(m)              0 <= i <= m
///   R3: d_i(m+2) from d_i(m+1), d_i(m)                0 <= i <= m+1
///   R4: in-row relation among d_{i-2}, d_{i-1}, d_i   0 <= i <= m+1
enum class RecurrenceId { R1, R2, R3, R4 };

std::string_view to_string(RecurrenceId id);

/// Expands the defining double sum symbolically. O(m^4); used as the
/// independent oracle for row_direct.
CoefficientRow expand_pm(int m);

/// d_i(m) = 2^{-2m} sum_{k=i}^{m} 2^k C(2m-2k, m-k) C(m+k, k) C(k, i).
CoefficientRow row_direct(int m);

/// Same as row_direct, kept in dyadic form.
std::vector<DyadicRational> row_direct_dyadic(int m);

/// Rows 0..m_max built with R1 from row 0 = [1].
CoefficientTriangle triangle_recurrence(int m_max);

/// Dyadic rows 0..m_max, the storage triangle_recurrence converts from.
std::vector<std::vector<DyadicRational>> triangle_recurrence_dyadic(int m_max);

/// Row m by any method. Recurrence builds the whole triangle up to m.
CoefficientRow generate_row(int m, GenerationMethod method);

/// Checks an identity at every admissible (m, i) of the triangle, with
/// d_i(m) = 0 outside [0, m]. A violation at (m, i) reports the left side
/// (the generated entry, or the R4 combination) and the right side.
/// Throws StructuralError if the triangle has too few rows: R1/R2 need two,
/// R3 three, R4 one.
CheckReport verify_recurrence(const CoefficientTriangle& tri, RecurrenceId which,
                              std::size_t cap = kDefaultViolationCap);

/// d_n(n+1), d_{n+1}(n+1), d_n(n+2) in closed form.
struct ClosedForms {
  Rational subdiagonal;         // d_n(n+1)
  Rational diagonal;            // d_{n+1}(n+1)
  Rational second_subdiagonal;  // d_n(n+2)
};

ClosedForms closed_forms(int n);

/// d_n(n+1) / d_{n+1}(n+1) = (2n+3)/2. Throws std::logic_error if the
/// closed forms disagree with that value.
Rational boundary_ratio(int n);

}  // namespace interlace::boros_moll
