#include <doctest.h>

#include <random>

#include "sectio/annihilator.hpp"
#include "support/oracles.hpp"

using namespace sectio;

namespace {

Branch pascal_branch(int64_t p) {
  const Field F = make_field(p);
  MultiPoly E = poly_from_terms(
      F, 2, {{{0, 0, 1}, 1}, {{1, 0, 1}, -1}, {{0, 1, 1}, -1}, {{0, 0, 0}, -1}});
  return make_branch(std::move(E), F.one());
}

Branch catalan_branch2(int64_t p) {
  const Field F = make_field(p);
  MultiPoly E = poly_from_terms(F, 2, {{{1, 1, 2}, 1}, {{0, 0, 1}, -1}, {{0, 0, 0}, 1}});
  return make_branch(std::move(E), F.one());
}

UniPoly upoly(const Field& F, std::initializer_list<int64_t> cs) {
  UniPoly u;
  for (int64_t c : cs) u.c.push_back(F.from_int(c));
  return u;
}

}  // namespace

TEST_SUITE("annihilator") {

TEST_CASE("identity operator returns the series") {
  const Field F3 = make_field(3);
  const TruncatedSeries g = testing::central_binomial_series(F3, 50);
  const LinearizedPoly L = make_linearized(F3, {upoly(F3, {1})});
  CHECK(apply_linearized(L, g) == g);
}

TEST_CASE("explicit central-binomial operator mod 3") {
  const Field F3 = make_field(3);
  const TruncatedSeries g = testing::central_binomial_series(F3, 220);
  // 2 X + (1 - t) X^3
  const LinearizedPoly L = make_linearized(F3, {upoly(F3, {2}), upoly(F3, {1, -1})});
  CHECK(L.p_degree() == 1);
  CHECK(apply_linearized(L, g).is_zero());
  CHECK(verify_annihilation(L, g, 219));
}

TEST_CASE("frobenius twist of constants vanishes under X^p - X") {
  const Field F5 = make_field(5);
  for (int64_t c = 0; c < 5; ++c) {
    TruncatedSeries g(F5, 1, 60);
    g.set(Expo{0}, F5.from_int(c));
    const LinearizedPoly L = make_linearized(F5, {upoly(F5, {-1}), upoly(F5, {1})});
    CHECK(apply_linearized(L, g).is_zero());
  }
}

TEST_CASE("twist exponent spacing is correct") {
  std::mt19937 rng(2);
  const Field F9 = make_field(3, 2, {1, 0, 1});
  const TruncatedSeries g = testing::random_series(F9, 1, 30, rng);
  const LinearizedPoly L = make_linearized(F9, {upoly(F9, {0}), upoly(F9, {1})});
  const TruncatedSeries h = apply_linearized(L, g);  // g^3
  for (const auto& [e, c] : g.terms())
    if (3 * e[0] < h.prec())
      CHECK(h.coeff(Expo{3 * e[0]}) == F9.pow(c, 3));
}

TEST_CASE("search finds the central-binomial relation") {
  const Field F3 = make_field(3);
  const TruncatedSeries g = testing::central_binomial_series(F3, 600);
  const AnnihilatorCertificate cert = find_linearized_annihilator(g, 6);
  CHECK(cert.L.p_degree() == 1);
  CHECK(verify_annihilation(cert.L, g, cert.verified_order));
  // (c0, c1) is proportional to (2, 1 - t): c0 * (1 - t) == 2 * c1.
  const UniPoly& c0 = cert.L.coeffs[0];
  const UniPoly& c1 = cert.L.coeffs[1];
  CHECK(c0.degree() == 0);
  CHECK(c1.degree() == 1);
  CHECK(c0.c[0] == F3.mul(F3.from_int(2), c1.c[0]));
  CHECK(F3.neg(c0.c[0]) == F3.mul(F3.from_int(2), c1.c[1]));
}

TEST_CASE("constant series admit a p-degree-1 annihilator") {
  const Field F5 = make_field(5);
  TruncatedSeries g(F5, 1, 80);
  g.set(Expo{0}, F5.from_int(3));
  const AnnihilatorCertificate cert = find_linearized_annihilator(g, 3);
  CHECK(cert.L.p_degree() <= 1);
  CHECK(apply_linearized(cert.L, g).is_zero());
}

TEST_CASE("the zero series is rejected") {
  const Field F3 = make_field(3);
  const TruncatedSeries zero(F3, 1, 100);
  CHECK_THROWS_AS(find_linearized_annihilator(zero, 3), Error);
  try {
    find_linearized_annihilator(zero, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroSeries);
  }
}

TEST_CASE("insufficient precision is reported") {
  const Field F3 = make_field(3);
  const TruncatedSeries g = testing::central_binomial_series(F3, 20);
  try {
    find_linearized_annihilator(g, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientPrecision);
  }
}

TEST_CASE("verification order bounds") {
  const Field F3 = make_field(3);
  const TruncatedSeries g = testing::central_binomial_series(F3, 50);
  const LinearizedPoly L = make_linearized(F3, {upoly(F3, {2}), upoly(F3, {1, -1})});
  CHECK(verify_annihilation(L, g, 0));
  CHECK_THROWS_AS(verify_annihilation(L, g, 50), Error);  // beyond g.prec - deg

  const LinearizedPoly X = make_linearized(F3, {upoly(F3, {1})});
  TruncatedSeries one(F3, 1, 10);
  one.set(Expo{0}, F3.one());
  CHECK_FALSE(verify_annihilation(X, one, 1));
}

TEST_CASE("pipeline on the binomial table") {
  for (int64_t p : {3, 5, 7}) {
    const PipelineResult r = diagonal_pipeline(pascal_branch(p), 150);
    CHECK(r.bounds.N_effective == 4);
    CHECK(r.cert.L.p_degree() <= 4);
    CHECK(r.cert.L.p_degree() == 1);
    CHECK(r.cert.verified_order >= 52);
    const TruncatedSeries g =
        testing::central_binomial_series(make_field(p), 150);
    CHECK(verify_annihilation(r.cert.L, g, r.cert.verified_order));
  }
}

TEST_CASE("pipeline on the catalan branch") {
  const PipelineResult r = diagonal_pipeline(catalan_branch2(3), 200);
  CHECK(r.bounds.N_closed == 9);
  CHECK(r.bounds.N_diag == 3);
  CHECK(r.cert.L.p_degree() <= 3);
  const TruncatedSeries g = testing::catalan_series(make_field(3), 200);
  CHECK(verify_annihilation(r.cert.L, g, 150));

  // Over F_5 the minimal p-degree is exactly 2: g^5 is an affine function of
  // g, and no rational combination ties g to g^5 alone.
  const PipelineResult r5 = diagonal_pipeline(catalan_branch2(5), 300);
  CHECK(r5.cert.L.p_degree() == 2);
  const TruncatedSeries g5 = testing::catalan_series(make_field(5), 450);
  CHECK(verify_annihilation(r5.cert.L, g5, 400));
}

TEST_CASE("pipeline on a monomial branch") {
  const Field F3 = make_field(3);
  MultiPoly E = poly_from_terms(F3, 2, {{{0, 0, 1}, 1}, {{1, 1, 0}, -1}});
  const Branch b = make_branch(std::move(E), F3.zero());
  const PipelineResult r = diagonal_pipeline(b, 120);
  CHECK(r.cert.L.p_degree() <= r.bounds.N_effective);
  // Diagonal is the single term t.
  TruncatedSeries g(F3, 1, 120);
  g.set(Expo{1}, F3.one());
  CHECK(verify_annihilation(r.cert.L, g, r.cert.verified_order));
}

TEST_CASE("pipeline handles a trivariate branch") {
  const Field F2 = make_field(2);
  MultiPoly E = poly_from_terms(F2, 3,
                                {{{0, 0, 0, 1}, 1},
                                 {{1, 0, 0, 1}, -1},
                                 {{0, 1, 0, 1}, -1},
                                 {{0, 0, 1, 1}, -1},
                                 {{0, 0, 0, 0}, -1}});
  const Branch b = make_branch(std::move(E), F2.one());

  // Central multinomials (3k)!/(k!)^3 are even for every k >= 1, so the
  // diagonal mod 2 is the constant series 1.
  auto ctx = SectionContext::make(b);
  const TruncatedSeries diag = diagonal_of_branch(ctx, 64);
  TruncatedSeries one(F2, 1, 64);
  one.set(Expo{0}, F2.one());
  CHECK(diag == one);

  const PipelineResult r = diagonal_pipeline(b, 200);
  CHECK(r.bounds.N_effective == 5);
  CHECK(r.cert.L.p_degree() <= 5);
  CHECK(verify_annihilation(r.cert.L, one, 60));
}

TEST_CASE("pipeline over an extension field") {
  const Field F4 = make_field(2, 2, {1, 1, 1});
  const FieldElem w = F4.from_coeffs({0, 1});
  // t1 t2 y^2 + y + w at y0 = w: the diagonal is sum C_k w^(k+1) t^k.
  MultiPoly E(F4, 2);
  E.set(Expo{1, 1, 2}, F4.one());
  E.set(Expo{0, 0, 1}, F4.one());
  E.set(Expo{0, 0, 0}, w);
  const Branch b = make_branch(std::move(E), w);

  auto ctx = SectionContext::make(b);
  const TruncatedSeries diag = diagonal_of_branch(ctx, 200);
  const std::vector<FieldElem> cat = testing::catalan_mod_p(F4, 200);
  for (int32_t k = 0; k < 200; ++k) {
    const FieldElem want =
        F4.mul(cat[static_cast<size_t>(k)], F4.pow(w, static_cast<uint64_t>(k) + 1));
    CHECK(diag.coeff(Expo{k}) == want);
  }

  const PipelineResult r = diagonal_pipeline(b, 200);
  CHECK(r.cert.L.p_degree() <= r.bounds.N_effective);
  CHECK(verify_annihilation(r.cert.L, diag, r.cert.verified_order));
}

TEST_CASE("certificates from lower precision hold at higher precision") {
  const Field F3 = make_field(3);
  const TruncatedSeries g300 = testing::central_binomial_series(F3, 300);
  const TruncatedSeries g900 = testing::central_binomial_series(F3, 900);
  const AnnihilatorCertificate cert = find_linearized_annihilator(g300, 4);
  CHECK(verify_annihilation(cert.L, g900, 850));
}

}  // TEST_SUITE
