#include "interlace/criterion.hpp"

#include <random>

#include "interlace/inequalities.hpp"
#include "interlace/parallel.hpp"

namespace interlace {

namespace {

Rational evaluate(const CoefficientFn& fn, const char* which, const std::string& family, long n, long k) {
  if (!fn) throw ConfigError(family + ": " + which + " is not set");
  try {
    return fn(n, k);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(family + ": " + which + "(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") is undefined: " + e.what());
  }
}

}  // namespace

TriangularRecurrence family(FamilyId id) {
  TriangularRecurrence rec;
  rec.g = [](long, long) { return Rational(1); };
  switch (id.kind) {
    case FamilyId::Kind::Pascal:
      rec.name = "pascal";
      rec.f = [](long, long) { return Rational(1); };
      rec.support_start = 0;
      break;
    case FamilyId::Kind::StirlingCycle:
      rec.name = "stirling-cycle";
      rec.f = [](long n, long) { return Rational(n - 1); };
      rec.support_start = 1;
      break;
    case FamilyId::Kind::StirlingSecond:
      rec.name = "stirling-second";
      rec.f = [](long, long k) { return Rational(k); };
      rec.support_start = 1;
      break;
    case FamilyId::Kind::Whitney: {
      const long m = id.whitney_m;
      if (m < 0) throw DomainError("Whitney parameter must be non-negative");
      rec.name = "whitney(" + std::to_string(m) + ")";
      rec.f = [m](long, long k) { return Rational(1 + m * k); };
      rec.support_start = 1;
      break;
    }
  }
  return rec;
}

std::optional<FamilyId> parse_family(std::string_view name, int param) {
  if (name == "pascal") return FamilyId::pascal();
  if (name == "stirling-cycle" || name == "rising-factorial") return FamilyId::stirling_cycle();
  if (name == "stirling-second" || name == "bell") return FamilyId::stirling_second();
  if (name == "whitney") {
    if (param < 0) return std::nullopt;
    return FamilyId::whitney(param);
  }
  return std::nullopt;
}

CoefficientTriangle build_triangle(const TriangularRecurrence& rec, int n_max) {
  if (n_max < 0) throw DomainError("build_triangle: n_max must be non-negative");
  if (rec.base.degree() != 0) throw ConfigError(rec.name + ": base row must have degree 0");
  if (rec.support_start < 0) throw ConfigError(rec.name + ": support_start must be non-negative");

  CoefficientTriangle tri;
  tri.push_back(rec.base);
  for (long n = 1; n <= n_max; ++n) {
    const auto& prev = tri.row(static_cast<std::size_t>(n - 1));
    std::vector<Rational> next(static_cast<std::size_t>(n) + 1);
    for (long k = rec.support_start; k <= n; ++k) {
      Rational value;
      if (k <= n - 1 && !prev[k].is_zero()) value += evaluate(rec.f, "f", rec.name, n, k) * prev[k];
      if (k >= 1 && !prev[k - 1].is_zero()) value += evaluate(rec.g, "g", rec.name, n, k) * prev[k - 1];
      next[static_cast<std::size_t>(k)] = std::move(value);
    }
    tri.push_back(CoefficientRow(std::move(next)));
  }
  return tri;
}

CheckReport check_f_condition(const TriangularRecurrence& rec, int n_max) {
  CheckReport report("f-condition", Strictness::NonStrict);
  for (long n = 1; n <= n_max - 1; ++n) {
    for (long k = 0; k <= n - 1; ++k) {
      const Rational here = evaluate(rec.f, "f", rec.name, n + 1, k);
      const Rational next = evaluate(rec.f, "f", rec.name, n + 1, k + 1);
      const Rational lower = Rational((n - k) * k, (n - k + 1) * (k + 1)) * next;
      report.checked += 2;
      if (!(lower <= here)) report.record({static_cast<int>(n), static_cast<int>(k), lower, here, "lower"});
      if (!(here <= next)) report.record({static_cast<int>(n), static_cast<int>(k), here, next, "upper"});
    }
  }
  return report;
}

CheckReport check_g_condition(const TriangularRecurrence& rec, int n_max) {
  CheckReport report("g-condition", Strictness::NonStrict);
  for (long n = 1; n <= n_max - 1; ++n) {
    for (long k = 0; k <= n; ++k) {
      const Rational here = evaluate(rec.g, "g", rec.name, n + 1, k);
      const Rational next = evaluate(rec.g, "g", rec.name, n + 1, k + 1);
      ++report.checked;
      if (!(next <= here)) report.record({static_cast<int>(n), static_cast<int>(k), next, here, "lower"});
      if (k >= 1 && k <= n - 1) {
        const Rational upper = Rational((n - k + 1) * (k + 1), (n - k) * k) * next;
        ++report.checked;
        if (!(here <= upper)) report.record({static_cast<int>(n), static_cast<int>(k), here, upper, "upper"});
      }
    }
  }
  return report;
}

std::optional<CoefficientRow> positive_window(const CoefficientRow& row, int support_start) {
  if (row.degree() < support_start) return std::nullopt;
  const auto entries = row.entries();
  return CoefficientRow(std::vector<Rational>(entries.begin() + support_start, entries.end()));
}

CriterionReport criterion_report(const TriangularRecurrence& rec, int n_max, int sturm_up_to, int workers) {
  if (n_max < 0) throw DomainError("criterion_report: n_max must be non-negative");
  if (sturm_up_to > n_max) {
    throw DomainError("criterion_report: sturm bound " + std::to_string(sturm_up_to) + " exceeds n_max " +
                      std::to_string(n_max));
  }

  CriterionReport out;
  out.family = rec.name;
  out.n_max = n_max;
  out.sturm_up_to = sturm_up_to;

  const CoefficientTriangle tri = build_triangle(rec, n_max);
  out.f_condition = check_f_condition(rec, n_max);
  out.g_condition = check_g_condition(rec, n_max);

  const auto sturm_rows = static_cast<std::size_t>(std::max(sturm_up_to, -1) + 1);
  out.sturm = parallel_map(sturm_rows, workers, [&](std::size_t n) { return sturm_real_roots(tri.row(n)); });
  out.real_rooted = CheckReport("real-rooted", Strictness::Equality);
  for (std::size_t n = 0; n < out.sturm.size(); ++n) {
    const auto& s = out.sturm[n];
    ++out.real_rooted.checked;
    if (!s.all_real) {
      out.real_rooted.record({static_cast<int>(n), s.square_free_degree, Rational(s.real_root_count),
                              Rational(s.square_free_degree), "distinct real roots vs square-free degree"});
    }
  }

  out.newton_proxy = CheckReport("newton (proxy beyond Sturm bound)", Strictness::NonStrict);
  if (sturm_up_to < n_max) {
    out.newton_proxy = sweep_rows(
        tri, sturm_up_to + 1, n_max, [](const CoefficientRow& row) { return check_newton(row); }, workers);
    out.newton_proxy.property = "newton (proxy beyond Sturm bound)";
  }

  const int start = rec.support_start;
  auto window_pair = [&](const CoefficientRow& lo, const CoefficientRow& hi, Strictness mode) {
    CheckReport r("interlacing (positive support)", mode);
    const auto wlo = positive_window(lo, start);
    const auto whi = positive_window(hi, start);
    if (!wlo || !whi) return r;
    for (const auto* w : {&*wlo, &*whi}) {
      for (std::size_t k = 0; k < w->size(); ++k) {
        if ((*w)[k].sign() <= 0) {
          r.record({w->degree() + start, static_cast<int>(k) + start, (*w)[k], rational_zero(), "non-positive"});
        }
      }
    }
    if (!r.pass()) return r;
    CheckReport inner = check_interlacing_pair(*wlo, *whi, mode);
    // Re-index to the original row/column numbering.
    for (auto& v : inner.violations) {
      v.m = lo.degree();
      v.i += start;
    }
    r.merge(inner);
    return r;
  };
  out.interlacing = sweep_pairs(
      tri, 0, n_max - 1,
      [&](const CoefficientRow& lo, const CoefficientRow& hi) { return window_pair(lo, hi, Strictness::NonStrict); },
      workers);
  out.strict_interlacing = sweep_pairs(
      tri, 0, n_max - 1,
      [&](const CoefficientRow& lo, const CoefficientRow& hi) { return window_pair(lo, hi, Strictness::Strict); },
      workers);
  out.interlacing.property = "interlacing (positive support)";
  out.interlacing.mode = Strictness::NonStrict;
  out.strict_interlacing.property = "interlacing (positive support)";
  out.strict_interlacing.mode = Strictness::Strict;
  return out;
}

TriangularRecurrence random_cone_recurrence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Raw engine output modulo small ranges keeps draws identical across
  // standard library implementations.
  auto small = [&](std::uint64_t lo, std::uint64_t hi) { return static_cast<long>(lo + rng() % (hi - lo + 1)); };
  auto positive = [&] { return Rational(small(1, 6), small(1, 3)); };
  auto nonnegative = [&] { return Rational(small(0, 4), small(1, 3)); };

  const Rational a = positive();
  const Rational b = nonnegative();
  const Rational c = nonnegative();
  const Rational p = positive();
  const Rational q = nonnegative();
  const int support = static_cast<int>(small(0, 1));

  TriangularRecurrence rec;
  rec.name = "random(seed=" + std::to_string(seed) + ", f=" + a.str() + "+" + b.str() + "k+" + c.str() + "n, g=" +
             p.str() + "+" + q.str() + "n, support=" + std::to_string(support) + ")";
  rec.f = [a, b, c](long n, long k) { return a + b * Rational(k) + c * Rational(n); };
  rec.g = [p, q](long n, long) { return p + q * Rational(n); };
  rec.support_start = support;
  return rec;
}

}  // namespace interlace
