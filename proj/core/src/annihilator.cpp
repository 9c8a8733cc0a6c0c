#include "sectio/annihilator.hpp"

#include <algorithm>
#include <string>

namespace sectio {

namespace {

int32_t equation_count(int64_t N, int32_t D) {
  return static_cast<int32_t>(2 * (N + 1) * (D + 1) + 32);
}

// Dense coefficient view of a univariate series.
std::vector<FieldElem> dense_coeffs(const TruncatedSeries& g) {
  std::vector<FieldElem> a(static_cast<size_t>(g.prec()), FieldElem{0});
  for (const auto& [e, c] : g.terms()) a[static_cast<size_t>(e[0])] = c;
  return a;
}

// Reduced row echelon form over F_q; returns (pivot column per row-rank).
std::vector<int32_t> rref_fq(const Field& F, std::vector<std::vector<FieldElem>>& m) {
  std::vector<int32_t> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && F.is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const FieldElem inv = F.inv(m[row][col]);
    for (size_t j = col; j < cols; ++j) m[row][j] = F.mul(m[row][j], inv);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || F.is_zero(m[i][col])) continue;
      const FieldElem f = m[i][col];
      for (size_t j = col; j < cols; ++j)
        m[i][j] = F.sub(m[i][j], F.mul(f, m[row][j]));
    }
    pivots.push_back(static_cast<int32_t>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

void check_univariate(const TruncatedSeries& g) {
  if (g.nvars() != 1)
    raise(ErrorCode::VariableCountMismatch, "expected a univariate series");
}

}  // namespace

LinearizedPoly make_linearized(Field F, std::vector<UniPoly> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty())
    raise(ErrorCode::MalformedInput, "linearized polynomial must be nonzero");
  return LinearizedPoly{std::move(F), std::move(coeffs)};
}

TruncatedSeries apply_linearized(const LinearizedPoly& L, const TruncatedSeries& g) {
  check_univariate(g);
  if (L.F != g.field())
    raise(ErrorCode::FieldMismatch, "operator and series fields differ");
  const Field& F = g.field();
  const int64_t p = F.p();

  int32_t max_deg = 0;
  for (const UniPoly& c : L.coeffs) max_deg = std::max(max_deg, c.degree());
  const int32_t prec = std::max(g.prec() - max_deg, 0);

  TruncatedSeries acc(F, 1, prec);
  for (size_t i = 0; i < L.coeffs.size(); ++i) {
    const UniPoly& ci = L.coeffs[i];
    if (ci.is_zero()) continue;
    // i-fold Frobenius twist of g, truncated to the working precision.
    int64_t scale = 1;
    bool overflow = false;
    for (size_t k = 0; k < i && !overflow; ++k) {
      scale *= p;
      if (scale > prec) overflow = true;  // only exponent 0 can survive
    }
    TruncatedSeries twist(F, 1, prec);
    for (const auto& [e, c] : g.terms()) {
      if (e[0] != 0 && overflow) break;  // terms() is sorted ascending
      const int64_t ee = e[0] * scale;
      if (ee >= prec) {
        if (e[0] > 0) break;
        continue;
      }
      twist.set(Expo{static_cast<int32_t>(ee)}, F.frobenius_iter(c, i));
    }
    for (size_t j = 0; j < ci.c.size(); ++j) {
      if (F.is_zero(ci.c[j])) continue;
      for (const auto& [e, c] : twist.terms()) {
        const int32_t ee = e[0] + static_cast<int32_t>(j);
        if (ee >= prec) break;
        acc.accumulate(Expo{ee}, F.mul(ci.c[j], c));
      }
    }
  }
  return acc;
}

bool verify_annihilation(const LinearizedPoly& L, const TruncatedSeries& g,
                         int32_t order) {
  if (order <= 0) return true;
  const TruncatedSeries h = apply_linearized(L, g);
  if (h.prec() < order)
    raise(ErrorCode::InsufficientPrecision,
          "verification order " + std::to_string(order) +
              " exceeds achievable precision " + std::to_string(h.prec()));
  for (const auto& [e, c] : h.terms())
    if (e[0] < order) return false;
  return true;
}

std::vector<int32_t> default_degree_schedule() { return {4, 8, 16, 32, 64, 128, 256}; }

AnnihilatorCertificate find_linearized_annihilator(
    const TruncatedSeries& g, int64_t N_max, const std::vector<int32_t>& deg_schedule) {
  check_univariate(g);
  if (g.is_zero())
    raise(ErrorCode::ZeroSeries, "the zero series is annihilated by everything");
  if (deg_schedule.empty())
    raise(ErrorCode::MalformedInput, "empty degree schedule");
  const Field& F = g.field();
  const int64_t p = F.p();
  const std::vector<FieldElem> a = dense_coeffs(g);

  bool attempted = false;
  for (int64_t N = 0; N <= N_max; ++N) {
    // g^(p^i) coefficient at index m is a[m / p^i]^(p^i) when p^i divides m.
    std::vector<int64_t> pw(static_cast<size_t>(N) + 1, 1);
    for (size_t i = 1; i < pw.size(); ++i)
      pw[i] = pw[i - 1] > g.prec() ? pw[i - 1] : pw[i - 1] * p;

    for (int32_t D : deg_schedule) {
      const int32_t T = equation_count(N, D);
      if (g.prec() < T + D) continue;  // cannot verify at the system order
      attempted = true;

      const size_t cols = static_cast<size_t>((N + 1) * (D + 1));
      std::vector<std::vector<FieldElem>> mat(
          static_cast<size_t>(T), std::vector<FieldElem>(cols, FieldElem{0}));
      for (int32_t m = 0; m < T; ++m) {
        for (int64_t i = 0; i <= N; ++i) {
          const int64_t q = pw[static_cast<size_t>(i)];
          for (int32_t j = 0; j <= D; ++j) {
            const int64_t idx = m - j;
            if (idx < 0 || idx % q != 0) continue;
            const int64_t base = idx / q;
            if (base >= g.prec()) continue;
            mat[static_cast<size_t>(m)][static_cast<size_t>(i * (D + 1) + j)] =
                F.frobenius_iter(a[static_cast<size_t>(base)],
                                 static_cast<uint64_t>(i));
          }
        }
      }

      const std::vector<int32_t> pivots = rref_fq(F, mat);
      if (pivots.size() == cols) continue;  // trivial kernel only

      std::vector<bool> is_pivot(cols, false);
      for (int32_t c : pivots) is_pivot[static_cast<size_t>(c)] = true;

      const int32_t vorder = std::min(g.prec() - D, 2 * T);
      for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<FieldElem> x(cols, FieldElem{0});
        x[fc] = F.one();
        for (size_t r = 0; r < mat.size(); ++r)
          x[static_cast<size_t>(pivots[r])] = F.neg(mat[r][fc]);

        std::vector<UniPoly> coeffs(static_cast<size_t>(N) + 1);
        for (int64_t i = 0; i <= N; ++i) {
          coeffs[static_cast<size_t>(i)].c.assign(static_cast<size_t>(D) + 1,
                                                  FieldElem{0});
          for (int32_t j = 0; j <= D; ++j)
            coeffs[static_cast<size_t>(i)].c[static_cast<size_t>(j)] =
                x[static_cast<size_t>(i * (D + 1) + j)];
        }
        LinearizedPoly L = make_linearized(F, std::move(coeffs));
        if (!verify_annihilation(L, g, vorder)) continue;  // spurious kernel vector
        return AnnihilatorCertificate{std::move(L), vorder, N_max, D};
      }
    }
  }

  if (!attempted)
    raise(ErrorCode::InsufficientPrecision,
          "series precision " + std::to_string(g.prec()) +
              " is below the smallest search budget");
  raise(ErrorCode::NotFound, "no annihilator within the given budgets");
}

PipelineResult diagonal_pipeline(const Branch& b, int32_t univariate_order,
                                 const std::vector<int32_t>& deg_schedule) {
  auto ctx = SectionContext::make(b);
  PipelineResult out{AnnihilatorCertificate{LinearizedPoly{ctx->field(), {}}, 0, 0, 0},
                     bound_report(ctx->E())};
  const TruncatedSeries g = diagonal_of_branch(ctx, univariate_order);
  out.cert =
      find_linearized_annihilator(g, out.bounds.N_effective, deg_schedule);
  return out;
}

}  // namespace sectio
