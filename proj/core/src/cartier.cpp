#include "sectio/cartier.hpp"

#include <algorithm>
#include <string>

namespace sectio {

SectionContext::SectionContext(Branch b, MultiPoly Ey, MultiPoly Epm1,
                               std::vector<Expo> basis, int64_t cap)
    : branch_(std::move(b)),
      Ey_(std::move(Ey)),
      E_pow_pm1_(std::move(Epm1)),
      basis_(std::move(basis)),
      basis_set_(basis_.begin(), basis_.end()),
      state_cap_(cap) {}

std::shared_ptr<const SectionContext> SectionContext::make(const Branch& b,
                                                           int32_t check_prec) {
  // Re-validate the branch invariants; callers may have built the struct
  // directly.
  Branch checked = make_branch(b.E, b.y0);
  const Field& F = checked.E.field();
  const DegreeProfile dp = degree_profile(checked.E);
  if (check_prec < 0) check_prec = 4 * (dp.h + dp.d) + 16;

  const TruncatedSeries f = hensel_solve(checked, check_prec);
  const TruncatedSeries residual = eval_poly_at_series(checked.E, f);
  if (!residual.is_zero())
    raise(ErrorCode::NotARoot,
          "annihilator does not vanish on the branch series to precision " +
              std::to_string(check_prec));

  MultiPoly Ey = derivative_y(checked.E);
  MultiPoly Epm1 = poly_pow(checked.E, static_cast<uint64_t>(F.p() - 1));
  std::vector<Expo> basis = box_lattice_points(checked.E);

  int64_t cap = 1;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (cap > (int64_t{1} << 62) / F.q()) {
      cap = INT64_MAX;
      break;
    }
    cap *= F.q();
  }

  return std::shared_ptr<const SectionContext>(new SectionContext(
      std::move(checked), std::move(Ey), std::move(Epm1), std::move(basis), cap));
}

TruncatedSeries SectionContext::solve(int32_t prec) const {
  return hensel_solve(branch_, prec);
}

Representation::Representation(std::shared_ptr<const SectionContext> ctx, MultiPoly P)
    : ctx_(std::move(ctx)), P_(std::move(P)) {
  if (P_.field() != ctx_->field() || P_.nvars() != ctx_->nvars())
    raise(ErrorCode::FieldMismatch, "numerator does not match the branch context");
  for (const auto& [e, c] : P_.terms())
    if (!ctx_->in_state_space(e))
      raise(ErrorCode::SupportEscape,
            "numerator support leaves the state-space lattice");
}

std::vector<FieldElem> Representation::basis_vector() const {
  const auto& basis = ctx_->basis();
  std::vector<FieldElem> v(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) v[i] = P_.coeff(basis[i]);
  return v;
}

Representation embed_f(std::shared_ptr<const SectionContext> ctx) {
  const int n = ctx->nvars();
  Expo y_only(static_cast<size_t>(n) + 1, 0);
  y_only.back() = 1;
  MultiPoly P = monomial(ctx->field(), n, y_only, ctx->field().one()) * ctx->Ey();
  return Representation(std::move(ctx), std::move(P));
}

Representation embed_f(const Branch& b) { return embed_f(SectionContext::make(b)); }

Representation apply_section_rep(const Representation& rep,
                                 const std::vector<int32_t>& r) {
  const SectionContext& ctx = rep.context();
  const int32_t p = static_cast<int32_t>(ctx.field().p());
  const MultiPoly U = rep.numerator() * ctx.E_pow_pm1();
  MultiPoly Q = lambda_extract(U, r, p - 1);
  return Representation(rep.context_ptr(), std::move(Q));
}

FieldElem rep_constant_term(const Representation& rep) {
  const SectionContext& ctx = rep.context();
  const Field& F = ctx.field();
  const FieldElem y0 = ctx.branch().y0;
  const size_t ypos = static_cast<size_t>(ctx.nvars());

  auto eval_origin = [&](const MultiPoly& P) {
    FieldElem acc = F.zero();
    for (const auto& [e, c] : P.terms()) {
      bool at_origin = true;
      for (size_t k = 0; at_origin && k < ypos; ++k) at_origin = e[k] == 0;
      if (at_origin)
        acc = F.add(acc, F.mul(c, F.pow(y0, static_cast<uint64_t>(e[ypos]))));
    }
    return acc;
  };

  const FieldElem den = eval_origin(ctx.Ey());
  if (F.is_zero(den))
    raise(ErrorCode::SingularBranch, "dE/dy vanishes at the branch origin");
  return F.mul(eval_origin(rep.numerator()), F.inv(den));
}

TruncatedSeries rep_series(const Representation& rep, int32_t prec) {
  const SectionContext& ctx = rep.context();
  const TruncatedSeries f = ctx.solve(prec);
  const TruncatedSeries num = eval_poly_at_series(rep.numerator(), f);
  const TruncatedSeries den = eval_poly_at_series(ctx.Ey(), f);
  return num * series_inverse(den, prec);
}

FieldElem coeff_query(const std::shared_ptr<const SectionContext>& ctx,
                      const std::vector<mpz_class>& index) {
  if (static_cast<int>(index.size()) != ctx->nvars())
    raise(ErrorCode::VariableCountMismatch, "index length does not match");
  for (const auto& i : index)
    if (i < 0) raise(ErrorCode::MalformedInput, "index entries must be nonnegative");

  const Field& F = ctx->field();
  const unsigned long p = static_cast<unsigned long>(F.p());
  std::vector<mpz_class> rem = index;
  Representation rep = embed_f(ctx);
  uint64_t steps = 0;

  auto any_nonzero = [&] {
    for (const auto& x : rem)
      if (x != 0) return true;
    return false;
  };

  std::vector<int32_t> digit(rem.size());
  while (any_nonzero()) {
    for (size_t k = 0; k < rem.size(); ++k) {
      digit[k] = static_cast<int32_t>(mpz_tdiv_q_ui(rem[k].get_mpz_t(),
                                                    rem[k].get_mpz_t(), p));
    }
    rep = apply_section_rep(rep, digit);
    ++steps;
  }
  // Each section step took a p-th root of the coefficient stream; undo.
  return F.frobenius_iter(rep_constant_term(rep), steps);
}

FieldElem coeff_query(const Branch& b, const std::vector<mpz_class>& index) {
  return coeff_query(SectionContext::make(b), index);
}

TruncatedSeries diagonal_of_branch(const std::shared_ptr<const SectionContext>& ctx,
                                   int32_t order) {
  const Field& F = ctx->field();
  TruncatedSeries g(F, 1, order);
  std::vector<mpz_class> index(static_cast<size_t>(ctx->nvars()));
  for (int32_t k = 0; k < order; ++k) {
    for (auto& x : index) x = k;
    g.set(Expo{k}, coeff_query(ctx, index));
  }
  return g;
}

}  // namespace sectio
