#include <doctest.h>

#include <random>

#include "sectio/series.hpp"
#include "support/oracles.hpp"

using namespace sectio;

namespace {

Branch pascal_branch(int64_t p) {
  const Field F = make_field(p);
  MultiPoly E = poly_from_terms(
      F, 2, {{{0, 0, 1}, 1}, {{1, 0, 1}, -1}, {{0, 1, 1}, -1}, {{0, 0, 0}, -1}});
  return make_branch(std::move(E), F.one());
}

Branch catalan_branch(int64_t p) {
  const Field F = make_field(p);
  MultiPoly E =
      poly_from_terms(F, 1, {{{1, 2}, 1}, {{0, 1}, -1}, {{0, 0}, 1}});
  return make_branch(std::move(E), F.one());
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("branch validation") {
  const Field F3 = make_field(3);
  // y^2 + y + t with y0 = 1: not a root at the origin over F_3.
  MultiPoly E3 = poly_from_terms(F3, 1, {{{0, 2}, 1}, {{0, 1}, 1}, {{1, 0}, 1}});
  try {
    make_branch(E3, F3.one());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotARoot);
  }
  const Field F2 = make_field(2);
  // y^2 + t: y0 = 0 is a double root.
  MultiPoly S = poly_from_terms(F2, 1, {{{0, 2}, 1}, {{1, 0}, 1}});
  try {
    make_branch(S, F2.zero());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularBranch);
  }
}

TEST_CASE("hensel solve validates hand-built branches") {
  const Field F3 = make_field(3);
  Branch bad{poly_from_terms(F3, 1, {{{0, 2}, 1}, {{0, 1}, 1}, {{1, 0}, 1}}),
             F3.one()};
  try {
    hensel_solve(bad, 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotARoot);
  }
  const Field F2 = make_field(2);
  Branch sing{poly_from_terms(F2, 1, {{{0, 2}, 1}, {{1, 0}, 1}}), F2.zero()};
  try {
    hensel_solve(sing, 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularBranch);
  }
}

TEST_CASE("hensel solve: artin-schreier lacunary series") {
  const Field F2 = make_field(2);
  MultiPoly E = poly_from_terms(F2, 1, {{{0, 2}, 1}, {{0, 1}, 1}, {{1, 0}, 1}});
  const Branch b = make_branch(std::move(E), F2.zero());
  const TruncatedSeries f = hensel_solve(b, 17);
  for (int32_t k = 0; k < 17; ++k) {
    const bool power_of_two = k > 0 && (k & (k - 1)) == 0;
    CHECK(f.coeff(Expo{k}) == (power_of_two ? F2.one() : F2.zero()));
  }
  CHECK(eval_poly_at_series(b.E, f).is_zero());
}

TEST_CASE("hensel solve: catalan prefix mod 3") {
  const Branch b = catalan_branch(3);
  const Field& F = b.E.field();
  const TruncatedSeries f = hensel_solve(b, 5);
  const int64_t want[] = {1, 1, 2, 2, 2};  // 1, 1, 2, 5, 14 mod 3
  for (int32_t k = 0; k < 5; ++k) CHECK(f.coeff(Expo{k}) == F.from_int(want[k]));
}

TEST_CASE("hensel solve: linear polynomial") {
  const Field F7 = make_field(7);
  MultiPoly E = poly_from_terms(F7, 1, {{{0, 1}, 1}, {{0, 0}, -1}, {{1, 0}, -1}});
  const Branch b = make_branch(std::move(E), F7.one());
  const TruncatedSeries f = hensel_solve(b, 9);
  CHECK(f.coeff(Expo{0}) == F7.one());
  CHECK(f.coeff(Expo{1}) == F7.one());
  CHECK(f.coeff(Expo{2}) == F7.zero());
}

TEST_CASE("hensel solves random branches") {
  std::mt19937 rng(4242);
  for (int64_t p : {2, 3}) {
    const Field F = make_field(p);
    for (int rep = 0; rep < 10; ++rep) {
      const Branch b = testing::random_branch(F, 2, 2, 2, rng);
      const TruncatedSeries f = hensel_solve(b, 12);
      CHECK(eval_poly_at_series(b.E, f).is_zero());
      CHECK(f.constant_term() == b.y0);
    }
  }
}

TEST_CASE("section of the lacunary series") {
  const Field F2 = make_field(2);
  MultiPoly E = poly_from_terms(F2, 1, {{{0, 2}, 1}, {{0, 1}, 1}, {{1, 0}, 1}});
  const Branch b = make_branch(std::move(E), F2.zero());
  const TruncatedSeries f = hensel_solve(b, 17);

  const TruncatedSeries s0 = section_series(f, {0});
  CHECK(s0.prec() == 9);
  CHECK(equal_below(s0, with_precision(f, 9), 9));

  const TruncatedSeries s1 = section_series(f, {1});
  CHECK(s1.prec() == 8);
  TruncatedSeries one(F2, 1, 8);
  one.set(Expo{0}, F2.one());
  CHECK(s1 == one);
}

TEST_CASE("section splits parities") {
  const Field F2 = make_field(2);
  TruncatedSeries f(F2, 1, 4);
  for (int32_t k = 0; k < 4; ++k) f.set(Expo{k}, F2.one());
  const TruncatedSeries s0 = section_series(f, {0});
  const TruncatedSeries s1 = section_series(f, {1});
  CHECK(s0.prec() == 2);
  CHECK(s1.prec() == 2);
  CHECK(s0.coeff(Expo{0}) == F2.one());
  CHECK(s0.coeff(Expo{1}) == F2.one());
  CHECK(s1.coeff(Expo{0}) == F2.one());
  CHECK(s1.coeff(Expo{1}) == F2.one());
}

TEST_CASE("section of a constant takes the p-th root") {
  const Field F4 = make_field(2, 2, {1, 1, 1});
  const FieldElem w = F4.from_coeffs({0, 1});
  TruncatedSeries f(F4, 1, 10);
  f.set(Expo{0}, w);
  const TruncatedSeries s = section_series(f, {0});
  CHECK(s.coeff(Expo{0}) == F4.inv_frobenius(w));
}

TEST_CASE("reconstruction from sections") {
  std::mt19937 rng(31);
  const std::vector<Field> fields = {make_field(2), make_field(3),
                                     make_field(3, 2, {1, 0, 1})};
  for (const Field& F : fields) {
    const int32_t p = static_cast<int32_t>(F.p());
    for (int rep = 0; rep < 25; ++rep) {
      const TruncatedSeries f = testing::random_series(F, 2, 9, rng);
      TruncatedSeries sum(F, 2, 9);
      for (int32_t r1 = 0; r1 < p; ++r1)
        for (int32_t r2 = 0; r2 < p; ++r2) {
          const TruncatedSeries part = monomial_shift(
              frobenius_twist_series(section_series(f, {r1, r2})), {r1, r2});
          sum = with_precision(sum, std::min(sum.prec(), part.prec())) +
                with_precision(part, std::min(sum.prec(), part.prec()));
        }
      CHECK(equal_below(sum, with_precision(f, sum.prec()), sum.prec()));
    }
  }
}

TEST_CASE("sections are semilinear") {
  std::mt19937 rng(77);
  const std::vector<Field> fields = {make_field(2), make_field(3),
                                     make_field(3, 2, {1, 0, 1})};
  for (const Field& F : fields) {
    const int32_t p = static_cast<int32_t>(F.p());
    for (int rep = 0; rep < 25; ++rep) {
      const TruncatedSeries f = testing::random_series(F, 1, 12, rng);
      const TruncatedSeries g = testing::random_series(F, 1, 12, rng);
      for (int32_t r = 0; r < p; ++r) {
        const TruncatedSeries lhs = section_series(f * frobenius_twist_series(g), {r});
        const TruncatedSeries rhs = section_series(f, {r}) * g;
        const int32_t ord = std::min(lhs.prec(), rhs.prec());
        CHECK(equal_below(lhs, rhs, ord));
      }
    }
  }
}

TEST_CASE("diagonal of the pascal series matches the binomial oracle") {
  const Branch b = pascal_branch(5);
  const Field& F = b.E.field();
  const TruncatedSeries f = hensel_solve(b, 20);
  // f is the full binomial table: cross-check against the Pascal recurrence.
  CHECK(equal_below(f, testing::pascal_series(F, 20), 20));
  const TruncatedSeries d = diagonal(f);
  CHECK(d.prec() == 10);
  for (int32_t k = 0; k < 10; ++k)
    CHECK(d.coeff(Expo{k}) ==
          F.from_int(testing::lucas_binomial(2 * static_cast<uint64_t>(k),
                                             static_cast<uint64_t>(k), 5)));
}

TEST_CASE("diagonal of a univariate series is the identity") {
  std::mt19937 rng(5);
  const Field F3 = make_field(3);
  const TruncatedSeries f = testing::random_series(F3, 1, 15, rng);
  CHECK(diagonal(f) == f);
}

TEST_CASE("diagonal of an off-diagonal series is zero") {
  const Field F3 = make_field(3);
  TruncatedSeries f(F3, 2, 10);
  f.set(Expo{1, 0}, F3.one());
  CHECK(diagonal(f).is_zero());
}

TEST_CASE("diagonal commutes with integer reduction") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int64_t> ints(-50, 50);
  for (int64_t p : {3, 7}) {
    const Field F = make_field(p);
    for (int rep = 0; rep < 20; ++rep) {
      // Integer coefficient table on exponents below total degree 8.
      TruncatedSeries reduced(F, 2, 8);
      TruncatedSeries diag_first(F, 1, 4);
      for (int32_t i = 0; i < 8; ++i)
        for (int32_t j = 0; i + j < 8; ++j) {
          const int64_t v = ints(rng);
          reduced.set(Expo{i, j}, F.from_int(v));
          if (i == j && i < 4) diag_first.set(Expo{i}, F.from_int(v));
        }
      CHECK(diagonal(reduced) == diag_first);
    }
  }
}

TEST_CASE("diagonal commutes with constant-digit sections") {
  std::mt19937 rng(13);
  for (int64_t p : {2, 3}) {
    const Field F = make_field(p);
    for (int rep = 0; rep < 50; ++rep) {
      const TruncatedSeries f = testing::random_series(F, 2, 12, rng);
      for (int32_t r = 0; r < static_cast<int32_t>(p); ++r) {
        const TruncatedSeries lhs = diagonal(section_series(f, {r, r}));
        const TruncatedSeries rhs = section_series(diagonal(f), {r});
        const int32_t ord = std::min(lhs.prec(), rhs.prec());
        CHECK(equal_below(lhs, rhs, ord));
      }
    }
  }
}

TEST_CASE("partial diagonal") {
  const Field F3 = make_field(3);
  std::mt19937 rng(17);
  const TruncatedSeries f = testing::random_series(F3, 3, 9, rng);

  SUBCASE("keeping all but one variable relabels") {
    const TruncatedSeries g = partial_diagonal(f, 2);
    CHECK(g.prec() == f.prec());
    CHECK(g.nvars() == 3);
    for (const auto& [e, c] : f.terms()) CHECK(g.coeff(e) == c);
  }

  SUBCASE("keeping none is the full diagonal") {
    const TruncatedSeries g = partial_diagonal(f, 0);
    CHECK(g == diagonal(f));
  }

  SUBCASE("support collapses pairs of equal trailing indices") {
    TruncatedSeries s(F3, 3, 9);
    s.set(Expo{2, 1, 1}, F3.one());
    s.set(Expo{2, 1, 0}, F3.from_int(2));
    const TruncatedSeries g = partial_diagonal(s, 1);
    CHECK(g.coeff(Expo{2, 1}) == F3.one());
    CHECK(g.terms().size() == 1);
  }

  CHECK_THROWS_AS(partial_diagonal(f, 3), Error);
  CHECK_THROWS_AS(partial_diagonal(f, -1), Error);
}

TEST_CASE("evaluation of a polynomial at a series") {
  const Field F2 = make_field(2);
  MultiPoly A = poly_from_terms(F2, 1, {{{0, 1}, 1}});  // y
  TruncatedSeries f(F2, 1, 5);
  f.set(Expo{0}, F2.one());
  f.set(Expo{1}, F2.one());
  CHECK(eval_poly_at_series(A, f) == f);

  MultiPoly C = poly_from_terms(F2, 1, {{{0, 1}, 1}, {{0, 0}, -1}});  // y - 1
  TruncatedSeries zero(F2, 1, 5);
  TruncatedSeries one(F2, 1, 5);
  one.set(Expo{0}, F2.one());
  CHECK(eval_poly_at_series(C, zero) == one);  // constant 1 = -1 over F_2
}

}  // TEST_SUITE
