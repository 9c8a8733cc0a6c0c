#include "sectio/poly.hpp"

#include <algorithm>
#include <string>

namespace sectio {

namespace {

void check_same_shape(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars())
    raise(ErrorCode::VariableCountMismatch,
          "operands have " + std::to_string(a.nvars()) + " and " +
              std::to_string(b.nvars()) + " t-variables");
  if (a.field() != b.field())
    raise(ErrorCode::FieldMismatch, "operands live in different fields");
}

}  // namespace

int64_t total_degree(const Expo& e) {
  int64_t s = 0;
  for (int32_t x : e) s += x;
  return s;
}

FieldElem MultiPoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElem{0} : it->second;
}

void MultiPoly::set(const Expo& e, FieldElem c) {
  if (F_.is_zero(c))
    terms_.erase(e);
  else
    terms_[e] = c;
}

void MultiPoly::accumulate(const Expo& e, FieldElem c) {
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = F_.add(it->second, c);
    if (F_.is_zero(it->second)) terms_.erase(it);
  } else if (F_.is_zero(c)) {
    terms_.erase(it);
  }
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  check_same_shape(a, b);
  const Field& F = a.field();
  MultiPoly out(F, a.nvars());
  switch (op) {
    case PolyOp::add:
    case PolyOp::sub: {
      out = a;
      for (const auto& [e, c] : b.terms())
        out.accumulate(e, op == PolyOp::add ? c : F.neg(c));
      break;
    }
    case PolyOp::mul: {
      Expo e(a.nvars() + 1);
      for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
          for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
          out.accumulate(e, F.mul(ca, cb));
        }
      break;
    }
  }
  return out;
}

MultiPoly poly_neg(const MultiPoly& a) {
  MultiPoly out(a.field(), a.nvars());
  for (const auto& [e, c] : a.terms()) out.set(e, a.field().neg(c));
  return out;
}

MultiPoly poly_scale(const MultiPoly& a, FieldElem c) {
  MultiPoly out(a.field(), a.nvars());
  if (a.field().is_zero(c)) return out;
  for (const auto& [e, k] : a.terms()) out.set(e, a.field().mul(k, c));
  return out;
}

MultiPoly frobenius_twist(const MultiPoly& a) {
  const Field& F = a.field();
  const int32_t p = static_cast<int32_t>(F.p());
  MultiPoly out(F, a.nvars());
  Expo e;
  for (const auto& [ea, c] : a.terms()) {
    e = ea;
    for (auto& x : e) x *= p;
    out.set(e, F.frobenius(c));
  }
  return out;
}

MultiPoly poly_pow(const MultiPoly& a, uint64_t k) {
  const Field& F = a.field();
  if (k == 0) return monomial(F, a.nvars(), Expo(a.nvars() + 1, 0), F.one());
  const uint64_t p = static_cast<uint64_t>(F.p());
  if (k % p == 0) return frobenius_twist(poly_pow(a, k / p));
  if (k >= p) return frobenius_twist(poly_pow(a, k / p)) * poly_pow(a, k % p);
  // Residual exponent below p: multiply out one factor at a time. For the
  // sparse bases this sees, the chain is linear in the final support size
  // where repeated squaring is quadratic.
  MultiPoly result = a;
  for (uint64_t i = 1; i < k; ++i) result = result * a;
  return result;
}

MultiPoly derivative_y(const MultiPoly& a) {
  const Field& F = a.field();
  MultiPoly out(F, a.nvars());
  const size_t ypos = static_cast<size_t>(a.nvars());
  Expo e;
  for (const auto& [ea, c] : a.terms()) {
    if (ea[ypos] == 0) continue;
    const FieldElem scaled = F.mul_int(c, ea[ypos]);
    if (F.is_zero(scaled)) continue;
    e = ea;
    e[ypos] -= 1;
    out.set(e, scaled);
  }
  return out;
}

bool is_separable_in_y(const MultiPoly& E) {
  if (E.is_zero()) raise(ErrorCode::ZeroPolynomial, "separability of the zero polynomial");
  return !derivative_y(E).is_zero();
}

MultiPoly lambda_extract(const MultiPoly& U, const std::vector<int32_t>& r, int32_t s) {
  const Field& F = U.field();
  const int32_t p = static_cast<int32_t>(F.p());
  if (static_cast<int>(r.size()) != U.nvars())
    raise(ErrorCode::VariableCountMismatch, "digit vector length does not match");
  for (int32_t x : r)
    if (x < 0 || x >= p) raise(ErrorCode::MalformedInput, "digit out of range");
  if (s < 0 || s >= p) raise(ErrorCode::MalformedInput, "digit out of range");

  MultiPoly out(F, U.nvars());
  const size_t ypos = static_cast<size_t>(U.nvars());
  Expo e(static_cast<size_t>(U.nvars()) + 1);
  for (const auto& [eu, c] : U.terms()) {
    bool keep = (eu[ypos] % p) == s;
    for (size_t k = 0; keep && k < ypos; ++k) keep = (eu[k] % p) == r[k];
    if (!keep) continue;
    for (size_t k = 0; k < ypos; ++k) e[k] = (eu[k] - r[k]) / p;
    e[ypos] = (eu[ypos] - s) / p;
    out.set(e, F.inv_frobenius(c));
  }
  return out;
}

DegreeProfile degree_profile(const MultiPoly& E) {
  if (E.is_zero())
    raise(ErrorCode::ZeroPolynomial, "degree profile of the zero polynomial");
  DegreeProfile dp;
  dp.hvec.assign(static_cast<size_t>(E.nvars()), 0);
  const size_t ypos = static_cast<size_t>(E.nvars());
  for (const auto& [e, c] : E.terms()) {
    dp.d = std::max(dp.d, e[ypos]);
    int32_t t = 0;
    for (size_t k = 0; k < ypos; ++k) {
      t += e[k];
      dp.hvec[k] = std::max(dp.hvec[k], e[k]);
    }
    dp.h = std::max(dp.h, t);
  }
  return dp;
}

MultiPoly monomial(const Field& F, int n, const Expo& e, FieldElem c) {
  MultiPoly out(F, n);
  out.set(e, c);
  return out;
}

MultiPoly poly_from_terms(const Field& F, int n,
                          const std::vector<std::pair<Expo, int64_t>>& terms) {
  MultiPoly out(F, n);
  for (const auto& [e, c] : terms) out.accumulate(e, F.from_int(c));
  return out;
}

}  // namespace sectio
