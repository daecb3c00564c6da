#include <doctest.h>

#include <random>

#include "interlace/sturm.hpp"

using namespace interlace;

namespace {

RationalPoly multiply(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST_CASE("sturm_real_roots examples") {
  const auto two = sturm_real_roots(RationalPoly{-1, 0, 1});
  CHECK(two.real_root_count == 2);
  CHECK(two.all_real);
  const auto none = sturm_real_roots(RationalPoly{1, 0, 1});
  CHECK(none.real_root_count == 0);
  CHECK_FALSE(none.all_real);
  const auto bell = sturm_real_roots(RationalPoly{0, 1, 3, 1});
  CHECK(bell.real_root_count == 3);
  CHECK(bell.all_real);
  CHECK(bell.degree == 3);
}

TEST_CASE("zero polynomial is rejected, constants have no roots") {
  CHECK_THROWS_AS(sturm_real_roots(RationalPoly{}), DomainError);
  CHECK_THROWS_AS(sturm_real_roots(RationalPoly{0, 0}), DomainError);
  const auto c = sturm_real_roots(RationalPoly{5});
  CHECK(c.degree == 0);
  CHECK(c.real_root_count == 0);
  CHECK(c.all_real);
}

TEST_CASE("repeated roots are handled on the square-free part") {
  const auto r = sturm_real_roots(RationalPoly{1, 4, 6, 4, 1});  // (x+1)^4
  CHECK(r.real_root_count == 1);
  CHECK(r.square_free_degree == 1);
  CHECK(r.all_real);
  const auto mixed = sturm_real_roots(multiply(RationalPoly{1, 0, 1}, RationalPoly{1, 2, 1}));
  CHECK(mixed.real_root_count == 1);
  CHECK_FALSE(mixed.all_real);
}

TEST_CASE("polynomial helpers") {
  CHECK(trim(RationalPoly{1, 2, 0, 0}) == RationalPoly{1, 2});
  CHECK(derivative(RationalPoly{5, 3, 2}) == RationalPoly{3, 4});
  const RationalPoly a{-1, 0, 1};
  const RationalPoly b{1, 1};
  CHECK(poly_quot(a, b) == RationalPoly{-1, 1});
  CHECK(poly_rem(a, b).empty());
  CHECK(poly_gcd(a, RationalPoly{2, 2}) == RationalPoly{1, 1});
  CHECK(square_free_part(RationalPoly{1, 2, 1}) == RationalPoly{1, 1});
  CHECK(sturm_chain(a).size() == 3);
}

TEST_CASE("random square-free products of rational linear and irreducible quadratic factors") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 60; ++trial) {
    RationalPoly p{1};
    std::vector<Rational> used;
    int expected = 0;
    int degree = 0;
    while (degree < 8) {
      const bool quadratic = degree <= 6 && rng() % 3 == 0;
      if (quadratic) {
        // x^2 + c with c > 0 has no real roots
        const Rational c(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 4) + 1);
        p = multiply(p, RationalPoly{c, 0, 1});
        degree += 2;
      } else {
        const Rational root(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5) + 1);
        if (std::find(used.begin(), used.end(), root) != used.end()) continue;
        used.push_back(root);
        p = multiply(p, RationalPoly{-root, 1});
        ++expected;
        ++degree;
      }
      if (rng() % 4 == 0) break;
    }
    const auto r = sturm_real_roots(p);
    CHECK(r.real_root_count == expected);
    CHECK(r.all_real == (expected == r.degree));
  }
}
