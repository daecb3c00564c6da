#include <doctest.h>

#include <numeric>

#include "interlace/criterion.hpp"
#include "interlace/inequalities.hpp"

using namespace interlace;

namespace {

std::vector<Rational> entries(const CoefficientRow& row) { return {row.entries().begin(), row.entries().end()}; }

Rational row_sum(const CoefficientRow& row) {
  return std::accumulate(row.entries().begin(), row.entries().end(), Rational(0));
}

TriangularRecurrence with_f(CoefficientFn f) {
  TriangularRecurrence rec = family(FamilyId::pascal());
  rec.name = "custom";
  rec.f = std::move(f);
  return rec;
}

}  // namespace

TEST_CASE("build_triangle examples") {
  CHECK(entries(build_triangle(family(FamilyId::pascal()), 4).row(4)) == std::vector<Rational>{1, 4, 6, 4, 1});
  CHECK(entries(build_triangle(family(FamilyId::stirling_second()), 4).row(4)) ==
        std::vector<Rational>{0, 1, 7, 6, 1});
  CHECK(entries(build_triangle(family(FamilyId::pascal()), 3).row(3)) == std::vector<Rational>{1, 3, 3, 1});
  CHECK(entries(build_triangle(family(FamilyId::stirling_cycle()), 4).row(4)) ==
        std::vector<Rational>{0, 6, 11, 6, 1});
  CHECK(build_triangle(family(FamilyId::pascal()), 0).size() == 1);
}

TEST_CASE("Whitney(1) triangle replays its recurrence") {
  const auto tri = build_triangle(family(FamilyId::whitney(1)), 12);
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(tri.entry(n, k) == Rational(1 + k) * tri.entry(n - 1, k) + tri.entry(n - 1, k - 1));
    }
  }
}

TEST_CASE("row sums: Bell numbers and factorials") {
  const auto bell = build_triangle(family(FamilyId::stirling_second()), 5);
  CHECK(row_sum(bell.row(4)) == Rational(15));
  CHECK(row_sum(bell.row(5)) == Rational(52));
  const auto cycle = build_triangle(family(FamilyId::stirling_cycle()), 15);
  Rational factorial(1);
  for (int n = 1; n <= 15; ++n) {
    factorial = factorial * Rational(n);
    CHECK(row_sum(cycle.row(n)) == factorial);
  }
}

TEST_CASE("Whitney(0) and StirlingSecond are different triangles") {
  const auto w0 = build_triangle(family(FamilyId::whitney(0)), 6);
  const auto s2 = build_triangle(family(FamilyId::stirling_second()), 6);
  CHECK_FALSE(w0 == s2);
  // Whitney(0) rows are shifted binomial rows
  for (int k = 1; k <= 6; ++k) CHECK(w0.entry(6, k) == Rational(binomial(5, k - 1)));
}

TEST_CASE("build_triangle wraps coefficient failures as ConfigError") {
  auto rec = with_f([](long n, long) -> Rational {
    if (n == 3) throw DomainError("undefined");
    return Rational(1);
  });
  CHECK_THROWS_AS(build_triangle(rec, 5), ConfigError);
  auto bad_base = family(FamilyId::pascal());
  bad_base.base = CoefficientRow{Rational(1), Rational(1)};
  CHECK_THROWS_AS(build_triangle(bad_base, 3), ConfigError);
}

TEST_CASE("f condition") {
  CHECK(check_f_condition(family(FamilyId::stirling_second()), 10).pass());
  CHECK(check_f_condition(family(FamilyId::pascal()), 100).pass());
  // direct substitution at n=5, k=2 for f = k
  CHECK(Rational(3 * 2, 4 * 3) * Rational(3) == Rational(3, 2));
  const auto bad = check_f_condition(with_f([](long n, long k) { return Rational(n - k); }), 10);
  REQUIRE_FALSE(bad.pass());
  CHECK(bad.violations[0].clause == "upper");
}

TEST_CASE("g condition") {
  for (auto id : {FamilyId::pascal(), FamilyId::stirling_cycle(), FamilyId::stirling_second()}) {
    CHECK(check_g_condition(family(id), 30).pass());
  }
  CHECK(check_g_condition(family(FamilyId::whitney(2)), 100).pass());
  auto rec = family(FamilyId::pascal());
  rec.g = [](long, long k) { return Rational(k); };
  const auto bad = check_g_condition(rec, 10);
  REQUIRE_FALSE(bad.pass());
  CHECK(bad.violations[0].clause == "lower");
}

TEST_CASE("parse_family") {
  CHECK(parse_family("pascal", 0)->kind == FamilyId::Kind::Pascal);
  CHECK(parse_family("bell", 0)->kind == FamilyId::Kind::StirlingSecond);
  CHECK(parse_family("whitney", 3)->whitney_m == 3);
  CHECK_FALSE(parse_family("fibonacci", 0).has_value());
}

TEST_CASE("positive_window") {
  const CoefficientRow row{Rational(0), Rational(6), Rational(11), Rational(6), Rational(1)};
  const auto window = positive_window(row, 1);
  REQUIRE(window.has_value());
  CHECK(window->degree() == 3);
  CHECK((*window)[0] == Rational(6));
  CHECK_FALSE(positive_window(CoefficientRow{Rational(1)}, 1).has_value());
}

TEST_CASE("criterion_report on the classical families") {
  for (auto id : {FamilyId::pascal(), FamilyId::stirling_cycle(), FamilyId::stirling_second()}) {
    const auto report = criterion_report(family(id), 30, 15, 2);
    CHECK_MESSAGE(report.hypotheses_hold(), report.family);
    CHECK_MESSAGE(report.conclusion_holds(), report.family);
    CHECK(report.sturm.size() == 16);
  }
  const auto whitney = criterion_report(family(FamilyId::whitney(2)), 30, 12);
  CHECK(whitney.pass());
  CHECK(whitney.newton_proxy.checked > 0);
  CHECK_THROWS_AS(criterion_report(family(FamilyId::pascal()), 10, 11), DomainError);
}

TEST_CASE("criterion_report flags a recurrence outside the cone") {
  auto rec = with_f([](long n, long k) { return Rational(n - k); });
  const auto report = criterion_report(rec, 12, 8);
  CHECK_FALSE(report.f_condition.pass());
  CHECK_FALSE(report.pass());
}

TEST_CASE("randomized cone samples satisfy the conclusion whenever the hypotheses hold") {
  int hypotheses_held = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto rec = random_cone_recurrence(seed);
    const auto report = criterion_report(rec, 14, 8);
    if (report.hypotheses_hold()) {
      ++hypotheses_held;
      CHECK_MESSAGE(report.conclusion_holds(), "seed " << seed);
    }
  }
  CHECK(hypotheses_held > 0);
}

TEST_CASE("random cone recurrences are reproducible") {
  const auto a = build_triangle(random_cone_recurrence(99), 10);
  const auto b = build_triangle(random_cone_recurrence(99), 10);
  CHECK(a == b);
  CHECK(criterion_report(random_cone_recurrence(99), 10, 6) .interlacing ==
        criterion_report(random_cone_recurrence(99), 10, 6, 3).interlacing);
}
