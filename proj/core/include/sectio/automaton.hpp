#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sectio/cartier.hpp"

namespace sectio {

/// Deterministic finite automaton with output over digit-tuple input.
/// It reads the base-p digits of an index tuple least-significant position
/// first, every coordinate zero-padded to a common length. States are
/// numerator coefficient vectors over the state-space lattice basis; the
/// stored output of a state is its constant-term value, and queries undo the
/// per-step p-th root with a final Frobenius twist.
struct Dfao {
  Field F;
  int32_t p = 0;
  int32_t n = 0;
  int32_t initial = 0;
  std::vector<std::vector<FieldElem>> state_vectors;
  std::vector<FieldElem> outputs;
  /// transitions[s][digit_code] with digit_code = sum r_k p^k.
  std::vector<std::vector<int32_t>> transitions;

  int64_t digit_count() const noexcept {
    int64_t c = 1;
    for (int32_t k = 0; k < n; ++k) c *= p;
    return c;
  }

  friend bool operator==(const Dfao& a, const Dfao& b) {
    return a.F == b.F && a.p == b.p && a.n == b.n && a.initial == b.initial &&
           a.state_vectors == b.state_vectors && a.outputs == b.outputs &&
           a.transitions == b.transitions;
  }
};

enum class DfaoFormat { json, dot };

/// Breadth-first closure of the branch representation under all p^n digit
/// tuples, deduplicating states by exact vector equality. The closure is
/// capped both by max_states and by q^N_box; exceeding the cap raises
/// StateBudgetExceeded.
Dfao build_dfao(const Branch& b, int64_t max_states);
Dfao build_dfao(const std::shared_ptr<const SectionContext>& ctx, int64_t max_states);

/// Runs the automaton on the digits of the index; equals coeff_query on the
/// branch the automaton was built from.
FieldElem dfao_query(const Dfao& M, const std::vector<mpz_class>& index);

/// Deterministic serialization; JSON round-trips through the io module, DOT
/// labels edges with digit tuples and nodes with output values.
std::string export_dfao(const Dfao& M, DfaoFormat format);

}  // namespace sectio
