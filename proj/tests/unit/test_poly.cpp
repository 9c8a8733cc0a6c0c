#include <doctest.h>

#include <random>

#include "sectio/poly.hpp"
#include "support/oracles.hpp"

using namespace sectio;

namespace {

MultiPoly p_of(const Field& F, int n, std::vector<std::pair<Expo, int64_t>> ts) {
  return poly_from_terms(F, n, ts);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("arithmetic basics") {
  const Field F5 = make_field(5);
  const MultiPoly y = p_of(F5, 1, {{{0, 1}, 1}});
  CHECK(y * y == p_of(F5, 1, {{{0, 2}, 1}}));

  const MultiPoly a = p_of(F5, 1, {{{1, 0}, 1}, {{0, 1}, 1}});   // t + y
  const MultiPoly b = p_of(F5, 1, {{{1, 0}, 1}, {{0, 1}, -1}});  // t - y
  CHECK(a * b == p_of(F5, 1, {{{2, 0}, 1}, {{0, 2}, -1}}));

  CHECK((a - a).is_zero());
  CHECK(poly_arith(a, poly_neg(a), PolyOp::add).is_zero());
}

TEST_CASE("mismatched operands are rejected") {
  const Field F5 = make_field(5);
  const MultiPoly a = p_of(F5, 1, {{{0, 1}, 1}});
  const MultiPoly b = p_of(F5, 2, {{{0, 0, 1}, 1}});
  CHECK_THROWS_AS(a + b, Error);
  const Field F3 = make_field(3);
  const MultiPoly c = p_of(F3, 1, {{{0, 1}, 1}});
  CHECK_THROWS_AS(a * c, Error);
}

TEST_CASE("powers") {
  const Field F2 = make_field(2);
  const MultiPoly one_plus_t = p_of(F2, 1, {{{0, 0}, 1}, {{1, 0}, 1}});
  CHECK(poly_pow(one_plus_t, 2) == p_of(F2, 1, {{{0, 0}, 1}, {{2, 0}, 1}}));

  const Field F3 = make_field(3);
  const MultiPoly e = p_of(F3, 1, {{{0, 1}, 1}, {{1, 0}, -1}});  // y - t
  CHECK(poly_pow(e, 2) == p_of(F3, 1, {{{0, 2}, 1}, {{1, 1}, 1}, {{2, 0}, 1}}));

  CHECK(poly_pow(e, 0) == p_of(F3, 1, {{{0, 0}, 1}}));
}

TEST_CASE("power p is the frobenius twist") {
  std::mt19937 rng(20240811);
  for (int64_t p : {2, 3, 5}) {
    const Field F = make_field(p);
    for (int rep = 0; rep < 100; ++rep) {
      const MultiPoly a = testing::random_poly(F, 2, 3, 2, 5, rng);
      CHECK(poly_pow(a, static_cast<uint64_t>(p)) == frobenius_twist(a));
    }
  }
}

TEST_CASE("derivative in y") {
  const Field F5 = make_field(5);
  const MultiPoly y5 = p_of(F5, 1, {{{0, 5}, 1}});
  CHECK(derivative_y(y5).is_zero());

  const MultiPoly a = p_of(F5, 1, {{{1, 2}, 1}, {{0, 1}, -1}, {{0, 0}, 1}});
  CHECK(derivative_y(a) == p_of(F5, 1, {{{1, 1}, 2}, {{0, 0}, -1}}));

  const Field F7 = make_field(7);
  const MultiPoly e =
      p_of(F7, 2, {{{0, 0, 1}, 1}, {{1, 0, 1}, -1}, {{0, 1, 1}, -1}, {{0, 0, 0}, -1}});
  CHECK(derivative_y(e) ==
        p_of(F7, 2, {{{0, 0, 0}, 1}, {{1, 0, 0}, -1}, {{0, 1, 0}, -1}}));
}

TEST_CASE("separability") {
  const Field F2 = make_field(2);
  CHECK_FALSE(is_separable_in_y(p_of(F2, 1, {{{0, 2}, 1}, {{1, 0}, 1}})));  // y^2 + t
  const Field F3 = make_field(3);
  CHECK(is_separable_in_y(p_of(F3, 1, {{{1, 2}, 1}, {{0, 1}, -1}, {{0, 0}, 1}})));
  const Field F5 = make_field(5);
  CHECK_FALSE(is_separable_in_y(p_of(F5, 1, {{{0, 5}, 1}, {{1, 0}, -1}})));  // y^5 - t
  CHECK_THROWS_AS(is_separable_in_y(MultiPoly(F2, 1)), Error);
}

TEST_CASE("digit extraction worked example") {
  const Field F3 = make_field(3);
  const MultiPoly U = p_of(F3, 1, {{{4, 5}, 1}, {{2, 2}, 2}, {{1, 2}, 1}});
  const MultiPoly Q = lambda_extract(U, {1}, 2);
  CHECK(Q == p_of(F3, 1, {{{1, 1}, 1}, {{0, 0}, 1}}));
}

TEST_CASE("digit extraction inverts the twist") {
  std::mt19937 rng(7);
  const Field F9 = make_field(3, 2, {1, 0, 1});
  for (int rep = 0; rep < 25; ++rep) {
    const MultiPoly v = testing::random_poly(F9, 2, 3, 2, 6, rng);
    CHECK(lambda_extract(frobenius_twist(v), {0, 0}, 0) == v);
  }
}

TEST_CASE("digit extraction of a constant") {
  const Field F3 = make_field(3);
  const MultiPoly one = p_of(F3, 1, {{{0, 0}, 1}});
  CHECK(lambda_extract(one, {0}, 0) == one);
  CHECK(lambda_extract(one, {1}, 0).is_zero());
  CHECK(lambda_extract(one, {0}, 2).is_zero());
}

TEST_CASE("degree profile") {
  const Field F3 = make_field(3);
  const MultiPoly pascal =
      p_of(F3, 2, {{{0, 0, 1}, 1}, {{1, 0, 1}, -1}, {{0, 1, 1}, -1}, {{0, 0, 0}, -1}});
  DegreeProfile dp = degree_profile(pascal);
  CHECK(dp.d == 1);
  CHECK(dp.h == 1);
  CHECK(dp.hvec == std::vector<int32_t>{1, 1});

  const MultiPoly catalan =
      p_of(F3, 2, {{{1, 1, 2}, 1}, {{0, 0, 1}, -1}, {{0, 0, 0}, 1}});
  dp = degree_profile(catalan);
  CHECK(dp.d == 2);
  CHECK(dp.h == 2);
  CHECK(dp.hvec == std::vector<int32_t>{1, 1});

  dp = degree_profile(p_of(F3, 2, {{{0, 0, 0}, 1}}));
  CHECK(dp.d == 0);
  CHECK(dp.h == 0);
  CHECK(dp.hvec == std::vector<int32_t>{0, 0});

  CHECK_THROWS_AS(degree_profile(MultiPoly(F3, 2)), Error);
}

TEST_CASE("extraction is semilinear") {
  std::mt19937 rng(99);
  const Field F4 = make_field(2, 2, {1, 1, 1});
  for (int rep = 0; rep < 40; ++rep) {
    const MultiPoly u = testing::random_poly(F4, 1, 4, 4, 6, rng);
    const MultiPoly v = testing::random_poly(F4, 1, 4, 4, 6, rng);
    const FieldElem c = testing::random_elem(F4, rng);
    const std::vector<int32_t> r{1};
    const int32_t s = 1;
    CHECK(lambda_extract(u + v, r, s) ==
          lambda_extract(u, r, s) + lambda_extract(v, r, s));
    const MultiPoly scaled = poly_scale(u, F4.frobenius(c));
    CHECK(lambda_extract(scaled, r, s) == poly_scale(lambda_extract(u, r, s), c));
  }
}

TEST_CASE("terms partition across digit classes") {
  std::mt19937 rng(123);
  for (int64_t p : {2, 3}) {
    const Field F = make_field(p);
    const int32_t ip = static_cast<int32_t>(p);
    for (int rep = 0; rep < 20; ++rep) {
      const MultiPoly u = testing::random_poly(F, 2, 4, 4, 8, rng);
      MultiPoly sum(F, 2);
      for (int32_t r1 = 0; r1 < ip; ++r1)
        for (int32_t r2 = 0; r2 < ip; ++r2)
          for (int32_t s = 0; s < ip; ++s) {
            const MultiPoly piece = frobenius_twist(lambda_extract(u, {r1, r2}, s));
            sum = sum + piece * monomial(F, 2, Expo{r1, r2, s}, F.one());
          }
      CHECK(sum == u);
    }
  }
}

}  // TEST_SUITE
