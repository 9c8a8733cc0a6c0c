#include <doctest.h>

#include "sectio/ff.hpp"

using namespace sectio;

TEST_SUITE("ff") {

TEST_CASE("prime field construction") {
  const Field F3 = make_field(3);
  CHECK(F3.p() == 3);
  CHECK(F3.e() == 1);
  CHECK(F3.q() == 3);
  CHECK(F3.from_int(-1) == F3.from_int(2));
  CHECK(F3.add(F3.from_int(2), F3.from_int(2)) == F3.one());
}

TEST_CASE("extension field construction") {
  const Field F4 = make_field(2, 2, {1, 1, 1});
  CHECK(F4.q() == 4);
  const FieldElem w = F4.from_coeffs({0, 1});
  // w^2 = w + 1 under the modulus.
  CHECK(F4.mul(w, w) == F4.from_coeffs({1, 1}));
}

TEST_CASE("composite characteristic is rejected") {
  CHECK_THROWS_AS(make_field(4), Error);
  try {
    make_field(4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrimeCharacteristic);
  }
}

TEST_CASE("reducible modulus is rejected") {
  try {
    make_field(2, 2, {1, 0, 1});  // (x+1)^2 over F_2
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
  }
  // x^2 + x = x(x+1)
  CHECK_THROWS_AS(make_field(3, 2, {0, 1, 1}), Error);
  // degree-4 with an irreducible quadratic factor: (x^2+x+1)^2 over F_2
  CHECK_THROWS_AS(make_field(2, 4, {1, 0, 1, 0, 1}), Error);
  CHECK_NOTHROW(make_field(2, 4, {1, 1, 0, 0, 1}));
}

TEST_CASE("modulus shape validation") {
  CHECK_THROWS_AS(make_field(2, 2, {}), Error);          // missing
  CHECK_THROWS_AS(make_field(2, 1, {1, 1}), Error);      // modulus on prime field
  CHECK_THROWS_AS(make_field(2, 2, {1, 1}), Error);      // wrong length
  CHECK_THROWS_AS(make_field(3, 2, {1, 1, 2}), Error);   // not monic
}

TEST_CASE("frobenius on prime fields is the identity") {
  for (int64_t p : {2, 3, 5, 7}) {
    const Field F = make_field(p);
    for (int64_t v = 0; v < p; ++v) {
      const FieldElem x = F.from_int(v);
      CHECK(F.frobenius(x) == x);
      CHECK(F.inv_frobenius(x) == x);
    }
  }
}

TEST_CASE("frobenius worked values in F_4") {
  const Field F4 = make_field(2, 2, {1, 1, 1});
  const FieldElem w = F4.from_coeffs({0, 1});
  const FieldElem w1 = F4.from_coeffs({1, 1});
  CHECK(F4.frobenius(w) == w1);
  CHECK(F4.inv_frobenius(w1) == w);
  CHECK(F4.frobenius(F4.zero()) == F4.zero());
}

TEST_CASE("frobenius round trips") {
  const Field F8 = make_field(2, 3, {1, 1, 0, 1});
  for (uint32_t v = 0; v < 8; ++v) {
    const FieldElem x{v};
    CHECK(F8.inv_frobenius(F8.frobenius(x)) == x);
    CHECK(F8.frobenius(F8.inv_frobenius(x)) == x);
  }
}

TEST_CASE("frobenius is a field homomorphism on small fields") {
  const std::vector<Field> fields = {
      make_field(2),
      make_field(3),
      make_field(5),
      make_field(7),
      make_field(2, 2, {1, 1, 1}),
      make_field(2, 3, {1, 1, 0, 1}),
      make_field(3, 2, {1, 0, 1}),
  };
  for (const Field& F : fields) {
    for (int64_t a = 0; a < F.q(); ++a)
      for (int64_t b = 0; b < F.q(); ++b) {
        const FieldElem x{static_cast<uint32_t>(a)}, y{static_cast<uint32_t>(b)};
        CHECK(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
        CHECK(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
      }
  }
}

TEST_CASE("inverse and power agree") {
  const Field F9 = make_field(3, 2, {1, 0, 1});
  for (uint32_t v = 1; v < 9; ++v) {
    const FieldElem x{v};
    CHECK(F9.mul(x, F9.inv(x)) == F9.one());
    CHECK(F9.pow(x, 8) == F9.one());
  }
  CHECK_THROWS_AS(F9.inv(F9.zero()), Error);
}

TEST_CASE("coefficient round trip") {
  const Field F8 = make_field(2, 3, {1, 1, 0, 1});
  for (uint32_t v = 0; v < 8; ++v) {
    const FieldElem x{v};
    CHECK(F8.from_coeffs(F8.coeffs(x)) == x);
  }
  CHECK(F8.coeffs(F8.from_coeffs({1})) == std::vector<int64_t>{1, 0, 0});
}

}  // TEST_SUITE
