#include "interlace/boros_moll.hpp"

#include <stdexcept>
#include <string>

namespace interlace::boros_moll {

namespace {

BigInt pow2(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

void require_degree(int m, const char* what) {
  if (m < 0) throw DomainError(std::string(what) + ": degree must be non-negative, got " + std::to_string(m));
}

CoefficientRow to_row(const std::vector<DyadicRational>& entries) {
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.to_rational());
  return CoefficientRow(std::move(out));
}

}  // namespace

std::string_view to_string(GenerationMethod method) {
  switch (method) {
    case GenerationMethod::ExpandDefinition: return "expand";
    case GenerationMethod::DirectSum: return "direct";
    case GenerationMethod::Recurrence: return "recurrence";
  }
  return "?";
}

std::optional<GenerationMethod> parse_method(std::string_view name) {
  if (name == "expand") return GenerationMethod::ExpandDefinition;
  if (name == "direct") return GenerationMethod::DirectSum;
  if (name == "recurrence") return GenerationMethod::Recurrence;
  return std::nullopt;
}

std::string_view to_string(RecurrenceId id) {
  switch (id) {
    case RecurrenceId::R1: return "R1";
    case RecurrenceId::R2: return "R2";
    case RecurrenceId::R3: return "R3";
    case RecurrenceId::R4: return "R4";
  }
  return "?";
}

CoefficientRow expand_pm(int m) {
  require_degree(m, "expand_pm");
  prepare_binomials(2L * m + 2);

  // Each (j, k) term carries 2^{-3(j+k)}; scale everything to 2^{-3m}.
  std::vector<BigInt> acc(static_cast<std::size_t>(m) + 1, 0);
  for (long j = 0; j <= m; ++j) {
    for (long k = 0; k <= m - j; ++k) {
      BigInt weight = binomial(2L * m + 1, 2 * j) * binomial(m - j, k) * binomial(2 * k + 2 * j, k + j);
      mpz_mul_2exp(weight.get_mpz_t(), weight.get_mpz_t(), static_cast<mp_bitcnt_t>(3 * (m - j - k)));

      // (x+1)^j (x-1)^k = sum_a sum_b C(j,a) C(k,b) (-1)^{k-b} x^{a+b}
      for (long a = 0; a <= j; ++a) {
        const BigInt ca = binomial(j, a);
        for (long b = 0; b <= k; ++b) {
          BigInt term = weight * ca * binomial(k, b);
          if ((k - b) % 2 != 0) term = -term;
          acc[static_cast<std::size_t>(a + b)] += term;
        }
      }
    }
  }

  std::vector<DyadicRational> entries;
  entries.reserve(acc.size());
  for (auto& c : acc) entries.emplace_back(std::move(c), static_cast<unsigned long>(3 * m));
  return to_row(entries);
}

std::vector<DyadicRational> row_direct_dyadic(int m) {
  require_degree(m, "row_direct");
  prepare_binomials(2L * m);

  // Inner factors 2^k C(2m-2k, m-k) C(m+k, k) do not depend on i.
  std::vector<BigInt> inner(static_cast<std::size_t>(m) + 1);
  for (long k = 0; k <= m; ++k) {
    BigInt v = binomial(2L * m - 2 * k, m - k) * binomial(m + k, k);
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    inner[static_cast<std::size_t>(k)] = std::move(v);
  }

  std::vector<DyadicRational> out;
  out.reserve(inner.size());
  for (long i = 0; i <= m; ++i) {
    BigInt sum = 0;
    for (long k = i; k <= m; ++k) sum += inner[static_cast<std::size_t>(k)] * binomial(k, i);
    out.emplace_back(std::move(sum), static_cast<unsigned long>(2 * m));
  }
  return out;
}

CoefficientRow row_direct(int m) { return to_row(row_direct_dyadic(m)); }

std::vector<std::vector<DyadicRational>> triangle_recurrence_dyadic(int m_max) {
  require_degree(m_max, "triangle_recurrence");
  std::vector<std::vector<DyadicRational>> rows;
  rows.reserve(static_cast<std::size_t>(m_max) + 1);
  rows.push_back({DyadicRational(1)});

  // d_i(m+1) = [2(m+i) d_{i-1}(m) + (4m+2i+3) d_i(m)] / (2(m+1))
  for (long m = 0; m < m_max; ++m) {
    const auto& prev = rows.back();
    std::vector<DyadicRational> next;
    next.reserve(prev.size() + 1);
    for (long i = 0; i <= m + 1; ++i) {
      DyadicRational sum;
      if (i >= 1) sum += prev[static_cast<std::size_t>(i - 1)] * BigInt(2 * (m + i));
      if (i <= m) sum += prev[static_cast<std::size_t>(i)] * BigInt(4 * m + 2 * i + 3);
      sum.div_exact(static_cast<unsigned long>(2 * (m + 1)));
      next.push_back(std::move(sum));
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

CoefficientTriangle triangle_recurrence(int m_max) {
  CoefficientTriangle tri;
  for (const auto& row : triangle_recurrence_dyadic(m_max)) tri.push_back(to_row(row));
  return tri;
}

CoefficientRow generate_row(int m, GenerationMethod method) {
  switch (method) {
    case GenerationMethod::ExpandDefinition: return expand_pm(m);
    case GenerationMethod::DirectSum: return row_direct(m);
    case GenerationMethod::Recurrence: {
      require_degree(m, "generate_row");
      auto rows = triangle_recurrence_dyadic(m);
      return to_row(rows.back());
    }
  }
  throw std::logic_error("unknown generation method");
}

CheckReport verify_recurrence(const CoefficientTriangle& tri, RecurrenceId which, std::size_t cap) {
  const std::size_t min_rows = which == RecurrenceId::R3 ? 3 : which == RecurrenceId::R4 ? 1 : 2;
  if (tri.size() < min_rows) {
    throw StructuralError("recurrence " + std::string(to_string(which)) + " needs at least " +
                          std::to_string(min_rows) + " rows, triangle has " + std::to_string(tri.size()));
  }

  CheckReport report("recurrence " + std::string(to_string(which)), Strictness::Equality, cap);
  const long top = tri.max_degree();
  auto d = [&](long i, long m) -> const Rational& { return tri.entry(m, i); };
  auto check = [&](long m, long i, const Rational& lhs, const Rational& rhs) {
    ++report.checked;
    if (lhs != rhs) report.record({static_cast<int>(m), static_cast<int>(i), lhs, rhs, {}});
  };

  switch (which) {
    case RecurrenceId::R1:
      for (long m = 0; m + 1 <= top; ++m) {
        for (long i = 0; i <= m + 1; ++i) {
          const Rational rhs = Rational(m + i, m + 1) * d(i - 1, m) + Rational(4 * m + 2 * i + 3, 2 * (m + 1)) * d(i, m);
          check(m, i, d(i, m + 1), rhs);
        }
      }
      break;
    case RecurrenceId::R2:
      for (long m = 0; m + 1 <= top; ++m) {
        for (long i = 0; i <= m; ++i) {
          const Rational rhs =
              Rational((4 * m - 2 * i + 3) * (m + i + 1), 2 * (m + 1) * (m + 1 - i)) * d(i, m) -
              Rational(i * (i + 1), (m + 1) * (m + 1 - i)) * d(i + 1, m);
          check(m, i, d(i, m + 1), rhs);
        }
      }
      break;
    case RecurrenceId::R3:
      for (long m = 0; m + 2 <= top; ++m) {
        for (long i = 0; i <= m + 1; ++i) {
          const Rational rhs =
              Rational(-4 * i * i + 8 * m * m + 24 * m + 19, 2 * (m + 2 - i) * (m + 2)) * d(i, m + 1) -
              Rational((m + i + 1) * (4 * m + 3) * (4 * m + 5), 4 * (m + 2 - i) * (m + 1) * (m + 2)) * d(i, m);
          check(m, i, d(i, m + 2), rhs);
        }
      }
      break;
    case RecurrenceId::R4:
      for (long m = 0; m <= top; ++m) {
        for (long i = 0; i <= m + 1; ++i) {
          const Rational lhs = Rational((m + 2 - i) * (m + i - 1)) * d(i - 2, m) -
                               Rational((i - 1) * (2 * m + 1)) * d(i - 1, m) + Rational(i * (i - 1)) * d(i, m);
          check(m, i, lhs, rational_zero());
        }
      }
      break;
  }
  return report;
}

ClosedForms closed_forms(int n) {
  require_degree(n, "closed_forms");
  const long nn = n;
  const BigInt central = binomial(2 * nn + 2, nn + 1);
  ClosedForms out;
  out.subdiagonal = Rational(BigInt(2 * nn + 3) * central, pow2(static_cast<unsigned long>(nn + 2)));
  out.diagonal = Rational(central, pow2(static_cast<unsigned long>(nn + 1)));
  out.second_subdiagonal =
      Rational(BigInt((nn + 1) * (4 * nn * nn + 18 * nn + 21)) * binomial(2 * nn + 4, nn + 2),
               pow2(static_cast<unsigned long>(nn + 4)) * (2 * nn + 3));
  return out;
}

Rational boundary_ratio(int n) {
  require_degree(n, "boundary_ratio");
  const Rational ratio(2L * n + 3, 2);
  const auto forms = closed_forms(n);
  if (forms.subdiagonal / forms.diagonal != ratio) {
    throw std::logic_error("closed forms disagree with (2n+3)/2 at n = " + std::to_string(n));
  }
  return ratio;
}

}  // namespace interlace::boros_moll
