#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "sectio/errors.hpp"

namespace sectio {

/// Element of F_q packed as base-p digits: v = c0 + c1*p + ... + c_{e-1}*p^{e-1}.
/// Every value in [0, q) is a valid element; interpretation requires the Field.
struct FieldElem {
  uint32_t v = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Exact arithmetic in F_q, q = p^e. Elements live in the power basis of a
/// caller-supplied monic irreducible modulus (no modulus for prime fields).
/// Immutable and cheap to copy; safe to share across threads.
class Field {
 public:
  int64_t p() const noexcept;
  int e() const noexcept;
  int64_t q() const noexcept;
  /// Monic modulus, constant term first, length e+1. Empty when e == 1.
  const std::vector<int64_t>& modulus() const noexcept;

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  bool is_zero(FieldElem x) const noexcept { return x.v == 0; }

  /// Residue of an arbitrary integer in the prime subfield.
  FieldElem from_int(int64_t c) const;
  /// Power-basis coordinates, length 1..e, entries reduced mod p.
  FieldElem from_coeffs(const std::vector<int64_t>& coords) const;
  /// Canonical coordinates, length e, entries in [0, p).
  std::vector<int64_t> coeffs(FieldElem x) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, uint64_t k) const;
  /// Scale by an integer (image in the prime subfield).
  FieldElem mul_int(FieldElem a, int64_t c) const;

  FieldElem frobenius(FieldElem x) const;      // x^p
  FieldElem inv_frobenius(FieldElem x) const;  // unique y with y^p = x
  FieldElem frobenius_iter(FieldElem x, uint64_t k) const;  // x^(p^k)

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  friend Field make_field(int64_t p, int e, const std::vector<int64_t>& modulus);
};

/// Builds and validates a field. The modulus is required exactly when e > 1
/// and is checked for irreducibility by brute-force factor search.
Field make_field(int64_t p, int e = 1, const std::vector<int64_t>& modulus = {});

}  // namespace sectio
