#include <doctest.h>

#include "interlace/boros_moll.hpp"
#include "interlace/parallel.hpp"

using namespace interlace;
using namespace interlace::boros_moll;

namespace {

CoefficientRow row_of(std::initializer_list<Rational> values) { return CoefficientRow(values); }

}  // namespace

TEST_CASE("expand_pm small rows") {
  CHECK(expand_pm(0) == row_of({1}));
  CHECK(expand_pm(1) == row_of({Rational(3, 2), 1}));
  CHECK(expand_pm(2) == row_of({Rational(21, 8), Rational(15, 4), Rational(3, 2)}));
  CHECK_THROWS_AS(expand_pm(-1), DomainError);
}

TEST_CASE("row_direct small rows") {
  CHECK(row_direct(0) == row_of({1}));
  CHECK(row_direct(1) == row_of({Rational(3, 2), 1}));
  CHECK(row_direct(2) == row_of({Rational(21, 8), Rational(15, 4), Rational(3, 2)}));
  CHECK(row_direct(3)[3] == Rational(5, 2));
  // Frozen from an independent fractions-module evaluation of the single sum.
  CHECK(row_direct(3) == row_of({Rational(77, 16), Rational(43, 4), Rational(35, 4), Rational(5, 2)}));
  CHECK(row_direct(4) ==
        row_of({Rational(1155, 128), Rational(885, 32), Rational(1095, 32), Rational(315, 16), Rational(35, 8)}));
}

TEST_CASE("triangle_recurrence examples") {
  const auto tri1 = triangle_recurrence(1);
  REQUIRE(tri1.size() == 2);
  CHECK(tri1.row(0) == row_of({1}));
  CHECK(tri1.row(1) == row_of({Rational(3, 2), 1}));
  CHECK(triangle_recurrence(2).entry(2, 1) == Rational(15, 4));
  CHECK(triangle_recurrence(0).size() == 1);
}

TEST_CASE("the three generators agree for m <= 30") {
  const auto tri = triangle_recurrence(30);
  for (int m = 0; m <= 30; ++m) {
    const auto direct = row_direct(m);
    CHECK(tri.row(m) == direct);
    if (m <= 18) CHECK(expand_pm(m) == direct);  // the full range runs in the acceptance suite
  }
}

TEST_CASE("generate_row dispatches to each method") {
  for (auto method : {GenerationMethod::ExpandDefinition, GenerationMethod::DirectSum, GenerationMethod::Recurrence}) {
    CHECK(generate_row(5, method) == row_direct(5));
  }
  CHECK(parse_method("expand") == GenerationMethod::ExpandDefinition);
  CHECK_FALSE(parse_method("fft").has_value());
}

TEST_CASE("rows are positive and dyadic with denominator dividing 4^m") {
  for (int m = 0; m <= 100; ++m) {
    for (const auto& d : row_direct_dyadic(m)) {
      CHECK(d.sign() > 0);
      CHECK(d.exp2() <= static_cast<unsigned long>(2 * m));
    }
  }
}

TEST_CASE("top coefficient is C(2m, m) / 2^m") {
  for (int m = 0; m <= 100; ++m) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(m));
    CHECK(row_direct(m)[static_cast<std::size_t>(m)] == Rational(binomial(2L * m, m), p));
  }
}

TEST_CASE("row_direct is safe to run in parallel") {
  const auto par = parallel_map(40, 4, [](std::size_t m) { return row_direct(static_cast<int>(m)); });
  for (std::size_t m = 0; m < par.size(); ++m) CHECK(par[m] == row_direct(static_cast<int>(m)));
}

TEST_CASE("verify_recurrence passes on generated triangles") {
  const auto tri = triangle_recurrence(10);
  for (auto id : {RecurrenceId::R1, RecurrenceId::R2, RecurrenceId::R3, RecurrenceId::R4}) {
    const auto report = verify_recurrence(tri, id);
    CHECK_MESSAGE(report.pass(), to_string(id));
    CHECK(report.checked > 0);
    CHECK(report.mode == Strictness::Equality);
  }
}

TEST_CASE("verify_recurrence catches a corrupted entry") {
  auto tri = triangle_recurrence(10);
  tri.set(2, 1, Rational(4));
  const auto report = verify_recurrence(tri, RecurrenceId::R1);
  REQUIRE_FALSE(report.pass());
  const auto& first = report.violations.front();
  CHECK(first.m == 1);
  CHECK(first.i == 1);
  CHECK(first.lhs == Rational(4));
  CHECK(first.rhs == Rational(15, 4));
  CHECK_FALSE(verify_recurrence(tri, RecurrenceId::R4).pass());
}

TEST_CASE("verify_recurrence rejects too-small triangles") {
  const auto two_rows = triangle_recurrence(1);
  CHECK_THROWS_AS(verify_recurrence(two_rows, RecurrenceId::R3), StructuralError);
  CHECK_NOTHROW(verify_recurrence(two_rows, RecurrenceId::R1));
  const auto one_row = triangle_recurrence(0);
  CHECK_THROWS_AS(verify_recurrence(one_row, RecurrenceId::R1), StructuralError);
  CHECK_THROWS_AS(verify_recurrence(one_row, RecurrenceId::R2), StructuralError);
  CHECK(verify_recurrence(one_row, RecurrenceId::R4).pass());
}

TEST_CASE("closed_forms examples") {
  const auto n1 = closed_forms(1);
  CHECK(n1.subdiagonal == Rational(15, 4));
  CHECK(n1.diagonal == Rational(3, 2));
  CHECK(n1.second_subdiagonal == Rational(43, 4));
  const auto n0 = closed_forms(0);
  CHECK(n0.subdiagonal == Rational(3, 2));
  CHECK(n0.diagonal == Rational(1));
  CHECK(n0.second_subdiagonal == Rational(21, 8));
  CHECK(closed_forms(2).diagonal == Rational(5, 2));
}

TEST_CASE("closed forms match direct rows") {
  for (int n = 0; n <= 60; ++n) {
    const auto forms = closed_forms(n);
    CHECK(forms.subdiagonal == row_direct(n + 1)[static_cast<std::size_t>(n)]);
    CHECK(forms.diagonal == row_direct(n + 1)[static_cast<std::size_t>(n + 1)]);
    CHECK(forms.second_subdiagonal == row_direct(n + 2)[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("boundary_ratio") {
  CHECK(boundary_ratio(1) == Rational(5, 2));
  CHECK(boundary_ratio(0) == Rational(3, 2));
  CHECK(boundary_ratio(10) == Rational(23, 2));
  CHECK(closed_forms(1).subdiagonal / closed_forms(1).diagonal == Rational(5, 2));
}
