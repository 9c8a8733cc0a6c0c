#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sectio/ff.hpp"

namespace sectio {

/// Exponent vector. For polynomials the length is n+1 with the y exponent
/// last; for series it is n.
using Expo = std::vector<int32_t>;

int64_t total_degree(const Expo& e);

/// Sparse polynomial over F_q in t_1..t_n and y. Zero coefficients are never
/// stored; the zero polynomial is the empty term map. Values are treated as
/// immutable once built and may be shared freely.
class MultiPoly {
 public:
  MultiPoly(Field F, int n) : F_(std::move(F)), n_(n) {}

  const Field& field() const noexcept { return F_; }
  int nvars() const noexcept { return n_; }
  const std::map<Expo, FieldElem>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  FieldElem coeff(const Expo& e) const;
  /// Overwrites the coefficient at e; a zero value erases the term.
  void set(const Expo& e, FieldElem c);
  /// Adds c to the coefficient at e.
  void accumulate(const Expo& e, FieldElem c);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.F_ == b.F_ && a.terms_ == b.terms_;
  }

 private:
  Field F_;
  int n_;
  std::map<Expo, FieldElem> terms_;
};

enum class PolyOp { add, sub, mul };

struct DegreeProfile {
  int32_t d = 0;               // degree in y
  int32_t h = 0;               // total degree in t
  std::vector<int32_t> hvec;   // per-variable t degrees

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

inline MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  return poly_arith(a, b, PolyOp::add);
}
inline MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return poly_arith(a, b, PolyOp::sub);
}
inline MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  return poly_arith(a, b, PolyOp::mul);
}

MultiPoly poly_neg(const MultiPoly& a);
MultiPoly poly_scale(const MultiPoly& a, FieldElem c);

/// a^k by binary powering. Powers divisible by the characteristic take the
/// term-wise route: exponents scale by p and coefficients pass through
/// Frobenius.
MultiPoly poly_pow(const MultiPoly& a, uint64_t k);

/// Term-wise a^p.
MultiPoly frobenius_twist(const MultiPoly& a);

/// Partial derivative in y; the y exponent scales coefficients mod p.
MultiPoly derivative_y(const MultiPoly& a);

/// True iff dE/dy != 0.
bool is_separable_in_y(const MultiPoly& E);

/// Digit extraction behind the section operators: keeps the terms of U whose
/// exponents are congruent to (r, s) mod p, divides exponents by p and takes
/// the inverse Frobenius of each coefficient.
MultiPoly lambda_extract(const MultiPoly& U, const std::vector<int32_t>& r, int32_t s);

DegreeProfile degree_profile(const MultiPoly& E);

/// Single-term polynomial.
MultiPoly monomial(const Field& F, int n, const Expo& e, FieldElem c);

/// Convenience builder for polynomials with integer coefficients; entries
/// reduce mod p.
MultiPoly poly_from_terms(const Field& F, int n,
                          const std::vector<std::pair<Expo, int64_t>>& terms);

}  // namespace sectio
