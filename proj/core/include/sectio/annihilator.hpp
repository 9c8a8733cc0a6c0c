#pragma once

#include <cstdint>
#include <vector>

#include "sectio/cartier.hpp"
#include "sectio/polytope.hpp"
#include "sectio/series.hpp"

namespace sectio {

/// Dense univariate polynomial over F_q, constant term first. Empty means 0.
struct UniPoly {
  std::vector<FieldElem> c;

  bool is_zero() const noexcept {
    for (const FieldElem& x : c)
      if (x.v != 0) return false;
    return true;
  }
  int32_t degree() const noexcept {  // -1 for the zero polynomial
    for (size_t i = c.size(); i > 0; --i)
      if (c[i - 1].v != 0) return static_cast<int32_t>(i - 1);
    return -1;
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

/// c_0 X + c_1 X^p + ... + c_N X^(p^N) with c_i in F_q[t] and c_N nonzero.
struct LinearizedPoly {
  Field F;
  std::vector<UniPoly> coeffs;

  int32_t p_degree() const noexcept { return static_cast<int32_t>(coeffs.size()) - 1; }
};

LinearizedPoly make_linearized(Field F, std::vector<UniPoly> coeffs);

/// A linearized polynomial together with how far its annihilation of the
/// target series has been checked exactly. Certificates never assert exact
/// annihilation beyond verified_order.
struct AnnihilatorCertificate {
  LinearizedPoly L;
  int32_t verified_order = 0;
  int64_t N_bound_used = 0;
  int32_t search_degree = 0;
};

/// Sum of c_i(t) * g^(p^i); the power is the i-fold Frobenius twist. Result
/// precision is g.prec minus the largest coefficient degree.
TruncatedSeries apply_linearized(const LinearizedPoly& L, const TruncatedSeries& g);

/// True iff apply_linearized(L, g) vanishes at every exponent below order.
bool verify_annihilation(const LinearizedPoly& L, const TruncatedSeries& g,
                         int32_t order);

/// Default coefficient-degree escalation: 4, 8, ..., 256.
std::vector<int32_t> default_degree_schedule();

/// Searches budgets (N, D) in lexicographic order for a nonzero kernel of the
/// linear system [t^m] sum_i c_i g^(p^i) = 0 for m < T(N, D), where
/// T = 2(N+1)(D+1) + 32. Kernel vectors are re-verified independently at
/// order min(g.prec - D, 2T) before being returned.
AnnihilatorCertificate find_linearized_annihilator(
    const TruncatedSeries& g, int64_t N_max,
    const std::vector<int32_t>& deg_schedule = default_degree_schedule());

struct PipelineResult {
  AnnihilatorCertificate cert;
  BoundReport bounds;
};

/// End-to-end run: validates the branch, derives the polytope bounds from
/// its annihilator, extracts the diagonal of the branch series to the given
/// order, and searches for a linearized annihilator of p-degree at most
/// N_effective.
PipelineResult diagonal_pipeline(const Branch& b, int32_t univariate_order,
                                 const std::vector<int32_t>& deg_schedule =
                                     default_degree_schedule());

}  // namespace sectio
