#include "sectio/series.hpp"

#include <algorithm>
#include <string>

namespace sectio {

namespace {

void check_same_shape(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.nvars() != b.nvars())
    raise(ErrorCode::VariableCountMismatch,
          "operands have " + std::to_string(a.nvars()) + " and " +
              std::to_string(b.nvars()) + " variables");
  if (a.field() != b.field())
    raise(ErrorCode::FieldMismatch, "operands live in different fields");
}

int32_t ceil_div(int32_t a, int32_t b) {
  if (a <= 0) return 0;
  return (a + b - 1) / b;
}

}  // namespace

FieldElem TruncatedSeries::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElem{0} : it->second;
}

void TruncatedSeries::set(const Expo& e, FieldElem c) {
  if (total_degree(e) >= prec_) return;
  if (F_.is_zero(c))
    terms_.erase(e);
  else
    terms_[e] = c;
}

void TruncatedSeries::accumulate(const Expo& e, FieldElem c) {
  if (total_degree(e) >= prec_ || F_.is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = F_.add(it->second, c);
    if (F_.is_zero(it->second)) terms_.erase(it);
  }
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_shape(a, b);
  TruncatedSeries out(a.field(), a.nvars(), std::min(a.prec(), b.prec()));
  for (const auto& [e, c] : a.terms()) out.accumulate(e, c);
  for (const auto& [e, c] : b.terms()) out.accumulate(e, c);
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_shape(a, b);
  TruncatedSeries out(a.field(), a.nvars(), std::min(a.prec(), b.prec()));
  for (const auto& [e, c] : a.terms()) out.accumulate(e, c);
  for (const auto& [e, c] : b.terms()) out.accumulate(e, a.field().neg(c));
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_shape(a, b);
  const Field& F = a.field();
  TruncatedSeries out(F, a.nvars(), std::min(a.prec(), b.prec()));
  const int32_t cap = out.prec();
  Expo e(static_cast<size_t>(a.nvars()));
  for (const auto& [ea, ca] : a.terms()) {
    const int64_t da = total_degree(ea);
    if (da >= cap) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) >= cap) continue;
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.accumulate(e, F.mul(ca, cb));
    }
  }
  return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, FieldElem c) {
  TruncatedSeries out(a.field(), a.nvars(), a.prec());
  if (a.field().is_zero(c)) return out;
  for (const auto& [e, k] : a.terms()) out.set(e, a.field().mul(k, c));
  return out;
}

TruncatedSeries with_precision(const TruncatedSeries& a, int32_t prec) {
  TruncatedSeries out(a.field(), a.nvars(), prec);
  for (const auto& [e, c] : a.terms()) out.set(e, c);
  return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& u, int32_t prec) {
  const Field& F = u.field();
  if (u.prec() < prec)
    raise(ErrorCode::InsufficientPrecision,
          "inverse to order " + std::to_string(prec) + " needs the operand exact there");
  const FieldElem u0 = u.constant_term();
  if (F.is_zero(u0))
    raise(ErrorCode::MalformedInput, "series inverse requires a unit constant term");
  TruncatedSeries v(F, u.nvars(), 1);
  v.set(Expo(static_cast<size_t>(u.nvars()), 0), F.inv(u0));
  int32_t m = 1;
  TruncatedSeries two(F, u.nvars(), prec);
  two.set(Expo(static_cast<size_t>(u.nvars()), 0), F.from_int(2));
  while (m < prec) {
    m = std::min(2 * m, prec);
    TruncatedSeries vm = with_precision(v, m);
    TruncatedSeries um = with_precision(u, m);
    v = vm * (with_precision(two, m) - um * vm);
  }
  return v;
}

TruncatedSeries frobenius_twist_series(const TruncatedSeries& a) {
  const Field& F = a.field();
  const int32_t p = static_cast<int32_t>(F.p());
  TruncatedSeries out(F, a.nvars(), a.prec() * p);
  Expo e;
  for (const auto& [ea, c] : a.terms()) {
    e = ea;
    for (auto& x : e) x *= p;
    out.set(e, F.frobenius(c));
  }
  return out;
}

TruncatedSeries monomial_shift(const TruncatedSeries& a, const Expo& r) {
  if (static_cast<int>(r.size()) != a.nvars())
    raise(ErrorCode::VariableCountMismatch, "shift vector length does not match");
  TruncatedSeries out(a.field(), a.nvars(),
                      a.prec() + static_cast<int32_t>(total_degree(r)));
  Expo e;
  for (const auto& [ea, c] : a.terms()) {
    e = ea;
    for (size_t k = 0; k < e.size(); ++k) e[k] += r[k];
    out.set(e, c);
  }
  return out;
}

bool equal_below(const TruncatedSeries& a, const TruncatedSeries& b, int32_t order) {
  check_same_shape(a, b);
  if (a.prec() < order || b.prec() < order)
    raise(ErrorCode::InsufficientPrecision,
          "comparison order exceeds operand precision");
  for (const auto& [e, c] : a.terms())
    if (total_degree(e) < order && b.coeff(e) != c) return false;
  for (const auto& [e, c] : b.terms())
    if (total_degree(e) < order && a.coeff(e) != c) return false;
  return true;
}

TruncatedSeries eval_poly_at_series(const MultiPoly& A, const TruncatedSeries& f) {
  if (A.nvars() != f.nvars())
    raise(ErrorCode::VariableCountMismatch,
          "polynomial and series variable counts differ");
  if (A.field() != f.field())
    raise(ErrorCode::FieldMismatch, "polynomial and series fields differ");
  const Field& F = f.field();
  const int n = f.nvars();
  const size_t ypos = static_cast<size_t>(n);
  const int32_t prec = f.prec();

  // Split A into y-coefficients, then Horner in y.
  int32_t dmax = 0;
  for (const auto& [e, c] : A.terms()) dmax = std::max(dmax, e[ypos]);
  std::vector<TruncatedSeries> cs(static_cast<size_t>(dmax) + 1,
                                  TruncatedSeries(F, n, prec));
  Expo te(static_cast<size_t>(n));
  for (const auto& [e, c] : A.terms()) {
    for (size_t k = 0; k < ypos; ++k) te[k] = e[k];
    cs[static_cast<size_t>(e[ypos])].accumulate(te, c);
  }
  TruncatedSeries r = cs.back();
  for (int j = dmax - 1; j >= 0; --j) r = r * f + cs[static_cast<size_t>(j)];
  return r;
}

Branch make_branch(MultiPoly E, FieldElem y0) {
  if (E.is_zero()) raise(ErrorCode::ZeroPolynomial, "branch requires a nonzero annihilator");
  const Field& F = E.field();
  const size_t ypos = static_cast<size_t>(E.nvars());
  FieldElem e0 = F.zero(), ey0 = F.zero();
  for (const auto& [e, c] : E.terms()) {
    bool at_origin = true;
    for (size_t k = 0; at_origin && k < ypos; ++k) at_origin = e[k] == 0;
    if (!at_origin) continue;
    e0 = F.add(e0, F.mul(c, F.pow(y0, static_cast<uint64_t>(e[ypos]))));
    if (e[ypos] >= 1) {
      FieldElem dc = F.mul_int(c, e[ypos]);
      ey0 = F.add(ey0, F.mul(dc, F.pow(y0, static_cast<uint64_t>(e[ypos] - 1))));
    }
  }
  if (!F.is_zero(e0))
    raise(ErrorCode::NotARoot, "E(0, y0) != 0, y0 is not a root at the origin");
  if (F.is_zero(ey0))
    raise(ErrorCode::SingularBranch,
          "dE/dy vanishes at (0, y0); supply coefficients via a series file instead");
  return Branch{std::move(E), y0};
}

TruncatedSeries hensel_solve(const Branch& b, int32_t prec) {
  if (prec < 1) raise(ErrorCode::MalformedInput, "precision must be >= 1");
  make_branch(b.E, b.y0);  // callers may have built the struct by hand
  const Field& F = b.E.field();
  const int n = b.E.nvars();
  const MultiPoly Ey = derivative_y(b.E);

  TruncatedSeries f(F, n, 1);
  f.set(Expo(static_cast<size_t>(n), 0), b.y0);
  int32_t m = 1;
  while (m < prec) {
    m = std::min(2 * m, prec);
    // The iterate is a fixed polynomial, so raising its precision bound is
    // sound; Newton doubles the agreement with the true root.
    TruncatedSeries fm = with_precision(f, m);
    TruncatedSeries Ef = eval_poly_at_series(b.E, fm);
    TruncatedSeries Eyf = eval_poly_at_series(Ey, fm);
    f = fm - Ef * series_inverse(Eyf, m);
  }
  return f;
}

TruncatedSeries section_series(const TruncatedSeries& f, const std::vector<int32_t>& r) {
  const Field& F = f.field();
  const int32_t p = static_cast<int32_t>(F.p());
  if (static_cast<int>(r.size()) != f.nvars())
    raise(ErrorCode::VariableCountMismatch, "digit vector length does not match");
  for (int32_t x : r)
    if (x < 0 || x >= p) raise(ErrorCode::MalformedInput, "digit out of range");

  const int32_t rsum = static_cast<int32_t>(total_degree(r));
  TruncatedSeries out(F, f.nvars(), ceil_div(f.prec() - rsum, p));
  Expo e(r.size());
  for (const auto& [ef, c] : f.terms()) {
    bool keep = true;
    for (size_t k = 0; keep && k < r.size(); ++k) keep = (ef[k] % p) == r[k];
    if (!keep) continue;
    for (size_t k = 0; k < r.size(); ++k) e[k] = (ef[k] - r[k]) / p;
    out.set(e, F.inv_frobenius(c));
  }
  return out;
}

TruncatedSeries diagonal(const TruncatedSeries& f) {
  const int n = f.nvars();
  if (n < 1) raise(ErrorCode::BadAxisCount, "diagonal requires at least one variable");
  TruncatedSeries out(f.field(), 1, ceil_div(f.prec(), n));
  for (const auto& [e, c] : f.terms()) {
    bool diag = true;
    for (size_t k = 1; diag && k < e.size(); ++k) diag = e[k] == e[0];
    if (diag) out.set(Expo{e[0]}, c);
  }
  return out;
}

TruncatedSeries partial_diagonal(const TruncatedSeries& f, int m) {
  const int n = f.nvars();
  if (m < 0 || m >= n)
    raise(ErrorCode::BadAxisCount,
          "kept-variable count must satisfy 0 <= m < n");
  const int collapsed = n - m;
  TruncatedSeries out(f.field(), m + 1, ceil_div(f.prec(), collapsed));
  Expo e(static_cast<size_t>(m) + 1);
  for (const auto& [ef, c] : f.terms()) {
    bool diag = true;
    for (int k = m + 1; diag && k < n; ++k) diag = ef[static_cast<size_t>(k)] == ef[static_cast<size_t>(m)];
    if (!diag) continue;
    for (int k = 0; k < m; ++k) e[static_cast<size_t>(k)] = ef[static_cast<size_t>(k)];
    e[static_cast<size_t>(m)] = ef[static_cast<size_t>(m)];
    out.set(e, c);
  }
  return out;
}

}  // namespace sectio
