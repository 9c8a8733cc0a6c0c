#include "sectio/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace sectio {

namespace {

std::vector<int32_t> decode_digits(int64_t code, int32_t p, int32_t n) {
  std::vector<int32_t> r(static_cast<size_t>(n));
  for (int32_t k = 0; k < n; ++k) {
    r[static_cast<size_t>(k)] = static_cast<int32_t>(code % p);
    code /= p;
  }
  return r;
}

MultiPoly poly_from_vector(const SectionContext& ctx, const std::vector<FieldElem>& v) {
  MultiPoly P(ctx.field(), ctx.nvars());
  const auto& basis = ctx.basis();
  for (size_t i = 0; i < basis.size(); ++i)
    if (!ctx.field().is_zero(v[i])) P.set(basis[i], v[i]);
  return P;
}

}  // namespace

Dfao build_dfao(const std::shared_ptr<const SectionContext>& ctx, int64_t max_states) {
  const Field& F = ctx->field();
  Dfao M{F};
  M.p = static_cast<int32_t>(F.p());
  M.n = static_cast<int32_t>(ctx->nvars());
  M.initial = 0;

  const int64_t cap = std::min(max_states, ctx->state_space_cap());
  const int64_t digit_count = M.digit_count();

  std::map<std::vector<FieldElem>, int32_t> ids;
  std::deque<int32_t> queue;

  auto intern = [&](std::vector<FieldElem> vec, const Representation& rep) {
    auto it = ids.find(vec);
    if (it != ids.end()) return it->second;
    const int32_t id = static_cast<int32_t>(M.state_vectors.size());
    if (id >= cap)
      raise(ErrorCode::StateBudgetExceeded,
            "closure exceeded " + std::to_string(cap) + " states; " +
                std::to_string(ids.size()) + " interned so far");
    ids.emplace(vec, id);
    M.state_vectors.push_back(std::move(vec));
    M.outputs.push_back(rep_constant_term(rep));
    M.transitions.emplace_back(static_cast<size_t>(digit_count), -1);
    queue.push_back(id);
    return id;
  };

  const Representation start = embed_f(ctx);
  intern(start.basis_vector(), start);

  while (!queue.empty()) {
    const int32_t id = queue.front();
    queue.pop_front();
    const Representation rep(ctx, poly_from_vector(*ctx, M.state_vectors[static_cast<size_t>(id)]));
    for (int64_t code = 0; code < digit_count; ++code) {
      const Representation next = apply_section_rep(rep, decode_digits(code, M.p, M.n));
      const int32_t target = intern(next.basis_vector(), next);
      M.transitions[static_cast<size_t>(id)][static_cast<size_t>(code)] = target;
    }
  }
  return M;
}

Dfao build_dfao(const Branch& b, int64_t max_states) {
  return build_dfao(SectionContext::make(b), max_states);
}

FieldElem dfao_query(const Dfao& M, const std::vector<mpz_class>& index) {
  if (static_cast<int32_t>(index.size()) != M.n)
    raise(ErrorCode::VariableCountMismatch, "index length does not match");
  for (const auto& i : index)
    if (i < 0) raise(ErrorCode::MalformedInput, "index entries must be nonnegative");

  std::vector<mpz_class> rem = index;
  const unsigned long p = static_cast<unsigned long>(M.p);
  int32_t state = M.initial;
  uint64_t steps = 0;

  auto any_nonzero = [&] {
    for (const auto& x : rem)
      if (x != 0) return true;
    return false;
  };

  while (any_nonzero()) {
    int64_t code = 0, weight = 1;
    for (size_t k = 0; k < rem.size(); ++k) {
      const int64_t digit = static_cast<int64_t>(
          mpz_tdiv_q_ui(rem[k].get_mpz_t(), rem[k].get_mpz_t(), p));
      code += digit * weight;
      weight *= M.p;
    }
    state = M.transitions[static_cast<size_t>(state)][static_cast<size_t>(code)];
    ++steps;
  }
  return M.F.frobenius_iter(M.outputs[static_cast<size_t>(state)], steps);
}

}  // namespace sectio
