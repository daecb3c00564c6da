#include "interlace/inequalities.hpp"

#include <string>

#include "interlace/parallel.hpp"

namespace interlace {

namespace {

void require_positive(std::span<const Rational> entries, const char* what) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].sign() <= 0) {
      throw DomainError(std::string(what) + ": entry " + std::to_string(i) + " = " + entries[i].str() +
                        " is not positive");
    }
  }
}

void require_consecutive(const CoefficientRow& row_m, const CoefficientRow& row_m1, const char* what) {
  if (row_m1.degree() != row_m.degree() + 1) {
    throw StructuralError(std::string(what) + ": expected degrees m and m+1, got " + std::to_string(row_m.degree()) +
                          " and " + std::to_string(row_m1.degree()));
  }
}

bool holds(const Rational& lhs, const Rational& rhs, Strictness mode) {
  switch (mode) {
    case Strictness::Strict: return lhs > rhs;
    case Strictness::NonStrict: return lhs >= rhs;
    case Strictness::Equality: return lhs == rhs;
  }
  return false;
}

bool all_positive(std::span<const Rational> entries) {
  for (const auto& e : entries) {
    if (e.sign() <= 0) return false;
  }
  return true;
}

bool is_log_concave(std::span<const Rational> a) {
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(Strictness mode) {
  switch (mode) {
    case Strictness::Strict: return "strict";
    case Strictness::NonStrict: return "non-strict";
    case Strictness::Equality: return "equality";
  }
  return "?";
}

RatioSequence ratio_sequence(const CoefficientRow& row) {
  require_positive(row.entries(), "ratio_sequence");
  RatioSequence out;
  out.degree = row.degree();
  out.ratios.reserve(static_cast<std::size_t>(row.degree()));
  for (std::size_t i = 0; i + 1 < row.size(); ++i) out.ratios.push_back(row[i] / row[i + 1]);
  return out;
}

CheckReport check_log_concave(const CoefficientRow& row, Strictness mode) {
  require_positive(row.entries(), "check_log_concave");
  CheckReport report("log-concave", mode);
  const int m = row.degree();
  for (int i = 1; i <= m - 1; ++i) {
    ++report.checked;
    Rational lhs = row[i] * row[i];
    Rational rhs = row[i - 1] * row[i + 1];
    if (!holds(lhs, rhs, mode)) report.record({m, i, std::move(lhs), std::move(rhs), {}});
  }
  return report;
}

CheckReport check_unimodal_middle(const CoefficientRow& row) {
  require_positive(row.entries(), "check_unimodal_middle");
  CheckReport report("unimodal-middle", Strictness::Strict);
  const int m = row.degree();
  const int peak = m / 2;
  for (int i = 0; i < m; ++i) {
    ++report.checked;
    if (i < peak) {
      // a_i < a_{i+1}
      if (!(row[i + 1] > row[i])) report.record({m, i, row[i], row[i + 1], "ascent"});
    } else {
      if (!(row[i] > row[i + 1])) report.record({m, i, row[i], row[i + 1], "descent"});
    }
  }
  return report;
}

CheckReport check_interlacing_pair(const CoefficientRow& row_m, const CoefficientRow& row_m1, Strictness mode) {
  require_consecutive(row_m, row_m1, "check_interlacing_pair");
  const auto r = ratio_sequence(row_m).ratios;
  const auto s = ratio_sequence(row_m1).ratios;
  CheckReport report("interlacing", mode);
  const int m = row_m.degree();
  // The chain reads s_0 <= r_0 <= s_1 <= r_1 <= ... <= r_{m-1} <= s_m.
  for (int i = 0; i < m; ++i) {
    ++report.checked;
    if (!holds(r[i], s[i], mode)) report.record({m, i, s[i], r[i], "descent"});
    ++report.checked;
    if (!holds(s[i + 1], r[i], mode)) report.record({m, i, r[i], s[i + 1], "ascent"});
  }
  return report;
}

CheckReport check_ratio_descent(const CoefficientRow& row_m, const CoefficientRow& row_m1) {
  require_consecutive(row_m, row_m1, "check_ratio_descent");
  CheckReport report("ratio-descent", Strictness::Strict);
  const int m = row_m.degree();
  for (int i = 0; i <= m; ++i) {
    ++report.checked;
    Rational lhs = row_m.at_or_zero(i) * row_m1.at_or_zero(i + 1);
    Rational rhs = row_m.at_or_zero(i + 1) * row_m1.at_or_zero(i);
    if (!(lhs > rhs)) report.record({m, i, std::move(lhs), std::move(rhs), "descent"});
  }
  return report;
}

CheckReport check_ratio_ascent(const CoefficientRow& row_m, const CoefficientRow& row_m1) {
  require_consecutive(row_m, row_m1, "check_ratio_ascent");
  CheckReport report("ratio-ascent", Strictness::Strict);
  const int m = row_m.degree();
  for (int i = 0; i <= m; ++i) {
    ++report.checked;
    Rational lhs = row_m.at_or_zero(i) * row_m1.at_or_zero(i);
    Rational rhs = row_m.at_or_zero(i - 1) * row_m1.at_or_zero(i + 1);
    if (!(lhs > rhs)) report.record({m, i, std::move(lhs), std::move(rhs), "ascent"});
  }
  return report;
}

CheckReport check_cross_products(const CoefficientRow& row_m, const CoefficientRow& row_m1) {
  CheckReport report("cross-products", Strictness::Strict);
  report.merge(check_ratio_descent(row_m, row_m1));
  report.merge(check_ratio_ascent(row_m, row_m1));
  return report;
}

CheckReport check_weighted_log_concave(const CoefficientRow& row) {
  const int m = row.degree();
  if (m < 2) throw DomainError("check_weighted_log_concave: degree must be at least 2, got " + std::to_string(m));
  require_positive(row.entries(), "check_weighted_log_concave");
  CheckReport report("weighted-log-concave", Strictness::Strict);
  for (int i = 0; i <= m - 2; ++i) {
    ++report.checked;
    const Rational lo(4L * m + 2 * i + 3);
    const Rational hi(4L * m + 2 * i + 7);
    // a_i (4m+2i+7) a_{i+2} < (4m+2i+3) a_{i+1}^2
    if (!(row[i] * hi * row[i + 2] < lo * row[i + 1] * row[i + 1])) {
      report.record({m, i, row[i] / row[i + 1], lo * row[i + 1] / (hi * row[i + 2]), {}});
    }
  }
  return report;
}

CheckReport check_weighted_ratio_descent(const CoefficientRow& row_m, const CoefficientRow& row_m1) {
  require_consecutive(row_m, row_m1, "check_weighted_ratio_descent");
  require_positive(row_m.entries(), "check_weighted_ratio_descent");
  require_positive(row_m1.entries(), "check_weighted_ratio_descent");
  CheckReport report("weighted-ratio-descent", Strictness::Strict);
  const int m = row_m.degree();
  for (int i = 0; i <= m - 1; ++i) {
    ++report.checked;
    const Rational lo(2L * i + 4 * m + 3);
    const Rational hi(2L * i + 4 * m + 5);
    // d_i(m) (2i+4m+3) d_{i+1}(m+1) > (2i+4m+5) d_i(m+1) d_{i+1}(m)
    if (!(row_m[i] * lo * row_m1[i + 1] > hi * row_m1[i] * row_m[i + 1])) {
      report.record({m, i, row_m[i] / row_m[i + 1], hi * row_m1[i] / (lo * row_m1[i + 1]), {}});
    }
  }
  return report;
}

CheckReport check_newton(std::span<const Rational> a) {
  CheckReport report("newton", Strictness::NonStrict);
  const long n = static_cast<long>(a.size()) - 1;
  for (long k = 1; k <= n - 1; ++k) {
    ++report.checked;
    Rational lhs = Rational(k * (n - k)) * a[k] * a[k];
    Rational rhs = Rational((k + 1) * (n - k + 1)) * a[k - 1] * a[k + 1];
    if (!(lhs >= rhs)) report.record({static_cast<int>(n), static_cast<int>(k), std::move(lhs), std::move(rhs), {}});
  }
  return report;
}

CheckReport check_newton(const CoefficientRow& row) { return check_newton(row.entries()); }

SignedRow l_operator(std::span<const Rational> a) {
  SignedRow out;
  out.entries.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational b = a[i] * a[i];
    if (i >= 1 && i + 1 < a.size()) b -= a[i - 1] * a[i + 1];
    out.entries.push_back(std::move(b));
  }
  return out;
}

KFoldResult k_fold_log_concavity(const CoefficientRow& row, int k_max) {
  KFoldResult result;
  result.k_max = k_max;
  std::vector<Rational> current(row.entries().begin(), row.entries().end());
  for (int j = 0; j <= k_max; ++j) {
    if (!all_positive(current) || !is_log_concave(current)) {
      result.k = j - 1;
      result.failed_at = j;
      return result;
    }
    if (j < k_max) current = l_operator(current).entries;
  }
  result.k = k_max;
  return result;
}

std::vector<DepthLevel> interlacing_depth(const CoefficientTriangle& tri, int k_max, int workers) {
  std::vector<DepthLevel> levels;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(tri.size());
  for (const auto& row : tri.rows()) rows.emplace_back(row.entries().begin(), row.entries().end());

  for (int j = 0; j <= k_max; ++j) {
    if (j > 0) {
      rows = parallel_map(rows.size(), workers, [&](std::size_t m) { return l_operator(rows[m]).entries; });
    }
    struct PairOutcome {
      bool skipped = false;
      bool interlacing = false;
      bool strict = false;
    };
    const std::size_t pairs = rows.empty() ? 0 : rows.size() - 1;
    const auto outcomes = parallel_map(pairs, workers, [&](std::size_t m) {
      PairOutcome o;
      if (!all_positive(rows[m]) || !all_positive(rows[m + 1])) {
        o.skipped = true;
        return o;
      }
      const CoefficientRow lo(rows[m]);
      const CoefficientRow hi(rows[m + 1]);
      o.interlacing = check_interlacing_pair(lo, hi, Strictness::NonStrict).pass();
      o.strict = o.interlacing && check_interlacing_pair(lo, hi, Strictness::Strict).pass();
      return o;
    });

    DepthLevel level;
    level.j = j;
    for (const auto& o : outcomes) {
      if (o.skipped) {
        ++level.pairs_skipped;
        continue;
      }
      ++level.pairs_checked;
      if (o.interlacing) ++level.pairs_interlacing;
      if (o.strict) ++level.pairs_strictly_interlacing;
    }
    levels.push_back(level);
  }
  return levels;
}

namespace {

CheckReport merge_all(const std::vector<CheckReport>& parts, std::size_t cap) {
  CheckReport out;
  out.cap = cap == 0 ? 1 : cap;
  if (!parts.empty()) {
    out.property = parts.front().property;
    out.mode = parts.front().mode;
  }
  for (const auto& part : parts) out.merge(part);
  return out;
}

void require_range(const CoefficientTriangle& tri, int m_from, int last_row) {
  if (m_from < 0 || last_row > tri.max_degree()) {
    throw StructuralError("sweep range exceeds triangle of max degree " + std::to_string(tri.max_degree()));
  }
}

}  // namespace

CheckReport sweep_rows(const CoefficientTriangle& tri, int m_from, int m_to, const RowCheck& check, int workers,
                       std::size_t cap) {
  if (m_to < m_from) return CheckReport("empty sweep", Strictness::NonStrict, cap);
  require_range(tri, m_from, m_to);
  const auto parts = parallel_map(static_cast<std::size_t>(m_to - m_from + 1), workers,
                                  [&](std::size_t k) { return check(tri.row(static_cast<std::size_t>(m_from) + k)); });
  return merge_all(parts, cap);
}

CheckReport sweep_pairs(const CoefficientTriangle& tri, int m_from, int m_to, const PairCheck& check, int workers,
                        std::size_t cap) {
  if (m_to < m_from) return CheckReport("empty sweep", Strictness::NonStrict, cap);
  require_range(tri, m_from, m_to + 1);
  const auto parts = parallel_map(static_cast<std::size_t>(m_to - m_from + 1), workers, [&](std::size_t k) {
    const auto m = static_cast<std::size_t>(m_from) + k;
    return check(tri.row(m), tri.row(m + 1));
  });
  return merge_all(parts, cap);
}

}  // namespace interlace
