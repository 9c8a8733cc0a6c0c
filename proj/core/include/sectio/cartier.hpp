#pragma once

#include <gmpxx.h>

#include <memory>
#include <set>
#include <vector>

#include "sectio/polytope.hpp"
#include "sectio/series.hpp"

namespace sectio {

/// Shared, validated data for section-operator dynamics on one branch:
/// the annihilator E, its y-derivative, E^(p-1), and the lattice basis of
/// the invariant state space (the nonnegative integer points of
/// NP(E) + (-1,0]^{n+1}).
///
/// Construction runs a relation check: the branch is solved to the check
/// precision and E must annihilate the result. This is a soundness gate,
/// not a proof.
class SectionContext {
 public:
  /// check_prec < 0 selects the default, total degree 4*(h+d) + 16.
  static std::shared_ptr<const SectionContext> make(const Branch& b,
                                                    int32_t check_prec = -1);

  const Branch& branch() const noexcept { return branch_; }
  const Field& field() const noexcept { return branch_.E.field(); }
  int nvars() const noexcept { return branch_.E.nvars(); }
  const MultiPoly& E() const noexcept { return branch_.E; }
  const MultiPoly& Ey() const noexcept { return Ey_; }
  const MultiPoly& E_pow_pm1() const noexcept { return E_pow_pm1_; }
  const std::vector<Expo>& basis() const noexcept { return basis_; }
  bool in_state_space(const Expo& e) const { return basis_set_.count(e) != 0; }
  /// q^|basis|, saturating; together with any caller budget this caps
  /// automaton closure.
  int64_t state_space_cap() const noexcept { return state_cap_; }

  /// The branch series to the requested precision.
  TruncatedSeries solve(int32_t prec) const;

 private:
  SectionContext(Branch b, MultiPoly Ey, MultiPoly Epm1, std::vector<Expo> basis,
                 int64_t cap);
  Branch branch_;
  MultiPoly Ey_;
  MultiPoly E_pow_pm1_;
  std::vector<Expo> basis_;
  std::set<Expo> basis_set_;
  int64_t state_cap_;
};

/// P(t,f) / E_y(t,f) with the support of P confined to the state-space
/// lattice. Immutable; section operators act through apply_section_rep.
class Representation {
 public:
  Representation(std::shared_ptr<const SectionContext> ctx, MultiPoly P);

  const SectionContext& context() const noexcept { return *ctx_; }
  std::shared_ptr<const SectionContext> context_ptr() const noexcept { return ctx_; }
  const MultiPoly& numerator() const noexcept { return P_; }

  /// Coefficients of P over the context basis, in basis order.
  std::vector<FieldElem> basis_vector() const;

 private:
  std::shared_ptr<const SectionContext> ctx_;
  MultiPoly P_;
};

/// The representation of f itself: P = y * dE/dy.
Representation embed_f(const Branch& b);
Representation embed_f(std::shared_ptr<const SectionContext> ctx);

/// Applies the section operator S_r to the represented series: the new
/// numerator is the digit extraction of P * E^(p-1) at (r, p-1). Raises
/// SupportEscape if the result leaves the state space, which signals a
/// broken precondition such as E not annihilating the branch.
Representation apply_section_rep(const Representation& rep, const std::vector<int32_t>& r);

/// P(0, y0) / E_y(0, y0).
FieldElem rep_constant_term(const Representation& rep);

/// The represented series, truncated to the given precision.
TruncatedSeries rep_series(const Representation& rep, int32_t prec);

/// Coefficient of the branch series at an arbitrary multi-index: one section
/// step per base-p digit position, least-significant digits first, then a
/// constant-term read corrected by the accumulated Frobenius twist. Cost is
/// polynomial in the total digit count, independent of index magnitude.
FieldElem coeff_query(const Branch& b, const std::vector<mpz_class>& index);
FieldElem coeff_query(const std::shared_ptr<const SectionContext>& ctx,
                      const std::vector<mpz_class>& index);

/// Diagonal of the branch series to the given order, computed one
/// coefficient query at a time; avoids materializing the multivariate series.
TruncatedSeries diagonal_of_branch(const std::shared_ptr<const SectionContext>& ctx,
                                   int32_t order);

}  // namespace sectio
