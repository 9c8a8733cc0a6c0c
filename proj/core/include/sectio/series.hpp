#pragma once

#include <cstdint>
#include <map>

#include "sectio/poly.hpp"

namespace sectio {

/// Multivariate power series over F_q truncated by total degree: every
/// coefficient at an exponent vector of total degree < prec is exact, and
/// nothing is stored at or beyond prec.
class TruncatedSeries {
 public:
  TruncatedSeries(Field F, int n, int32_t prec)
      : F_(std::move(F)), n_(n), prec_(prec < 0 ? 0 : prec) {}

  const Field& field() const noexcept { return F_; }
  int nvars() const noexcept { return n_; }
  int32_t prec() const noexcept { return prec_; }
  const std::map<Expo, FieldElem>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  FieldElem coeff(const Expo& e) const;
  FieldElem constant_term() const { return coeff(Expo(static_cast<size_t>(n_), 0)); }
  /// Overwrites the coefficient at e; terms at or beyond prec are dropped.
  void set(const Expo& e, FieldElem c);
  void accumulate(const Expo& e, FieldElem c);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.n_ == b.n_ && a.prec_ == b.prec_ && a.F_ == b.F_ && a.terms_ == b.terms_;
  }

 private:
  Field F_;
  int n_;
  int32_t prec_;
  std::map<Expo, FieldElem> terms_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}

TruncatedSeries series_scale(const TruncatedSeries& a, FieldElem c);

/// Same terms, precision lowered (or raised, asserting the caller knows the
/// dropped range is exact, as in Newton iterates).
TruncatedSeries with_precision(const TruncatedSeries& a, int32_t prec);

/// Multiplicative inverse to the given precision; the constant term must be a
/// unit.
TruncatedSeries series_inverse(const TruncatedSeries& u, int32_t prec);

/// Term-wise p-th power; precision scales by p.
TruncatedSeries frobenius_twist_series(const TruncatedSeries& a);

/// t^r * a; precision grows by |r|.
TruncatedSeries monomial_shift(const TruncatedSeries& a, const Expo& r);

/// Compare coefficients at all exponents of total degree < order. Both
/// operands must be exact that far.
bool equal_below(const TruncatedSeries& a, const TruncatedSeries& b, int32_t order);

/// A(t, f) truncated to the precision of f.
TruncatedSeries eval_poly_at_series(const MultiPoly& A, const TruncatedSeries& f);

/// Hensel datum: an annihilator E together with a simple root y0 of E(0, .).
/// make_branch enforces E(0, y0) = 0 and dE/dy (0, y0) != 0 exactly.
struct Branch {
  MultiPoly E;
  FieldElem y0;
};

Branch make_branch(MultiPoly E, FieldElem y0);

/// The unique series f with f(0) = y0 and E(t, f) = 0, truncated to total
/// degree < prec. Newton iteration with a doubling precision schedule.
TruncatedSeries hensel_solve(const Branch& b, int32_t prec);

/// Section operator S_r: keeps coefficients at indices congruent to r mod p,
/// divides indices by p and takes the inverse Frobenius coefficient-wise.
/// New precision: ceil((prec - |r|) / p).
TruncatedSeries section_series(const TruncatedSeries& f, const std::vector<int32_t>& r);

/// Univariate diagonal: coefficient k is the coefficient of f at (k,...,k).
/// New precision: ceil(prec / n).
TruncatedSeries diagonal(const TruncatedSeries& f);

/// Partial diagonal keeping the first m variables and collapsing the rest
/// onto one variable; m = 0 is the full diagonal.
TruncatedSeries partial_diagonal(const TruncatedSeries& f, int m);

}  // namespace sectio
