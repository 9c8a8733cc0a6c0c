#include "sectio/ff.hpp"

#include <algorithm>
#include <string>

namespace sectio {

namespace {

constexpr int64_t kMaxQ = int64_t{1} << 31;    // packing limit for FieldElem
constexpr int64_t kLutMaxQ = 512;              // full mul/inv tables below this
constexpr int64_t kIrredSearchCap = 4'000'000;  // candidate divisors, desk scale

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t mod_p(int64_t x, int64_t p) {
  int64_t r = x % p;
  return r < 0 ? r + p : r;
}

// Dense F_p[x] helpers on little-endian coefficient vectors.
using PPoly = std::vector<int64_t>;

void ppoly_trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic m.
PPoly ppoly_rem(PPoly a, const PPoly& m, int64_t p) {
  ppoly_trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int64_t c = a.back();
    const size_t shift = a.size() - 1 - dm;
    if (c != 0) {
      for (size_t k = 0; k < dm; ++k)
        a[shift + k] = mod_p(a[shift + k] - c * m[k], p);
    }
    a.pop_back();
    ppoly_trim(a);
  }
  return a;
}

bool divides(const PPoly& cand, const PPoly& m, int64_t p) {
  return ppoly_rem(m, cand, p).empty();
}

}  // namespace

struct Field::Data {
  int64_t p = 0;
  int e = 1;
  int64_t q = 0;
  std::vector<int64_t> modulus;  // length e+1 when e > 1

  bool lut = false;
  std::vector<uint32_t> mul_tab;    // q*q
  std::vector<uint32_t> inv_tab;    // q, 0 slot unused
  std::vector<uint32_t> frob_tab;   // q
  std::vector<uint32_t> ifrob_tab;  // q

  void decode(uint32_t v, int64_t* dig) const {
    for (int i = 0; i < e; ++i) {
      dig[i] = v % p;
      v = static_cast<uint32_t>(v / p);
    }
  }

  uint32_t encode(const int64_t* dig) const {
    int64_t v = 0;
    for (int i = e - 1; i >= 0; --i) v = v * p + dig[i];
    return static_cast<uint32_t>(v);
  }

  uint32_t add_raw(uint32_t a, uint32_t b) const {
    if (e == 1) return static_cast<uint32_t>((a + int64_t{b}) % p);
    int64_t da[32], db[32];
    decode(a, da);
    decode(b, db);
    for (int i = 0; i < e; ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da);
  }

  uint32_t neg_raw(uint32_t a) const {
    if (e == 1) return a == 0 ? 0 : static_cast<uint32_t>(p - a);
    int64_t da[32];
    decode(a, da);
    for (int i = 0; i < e; ++i) da[i] = da[i] == 0 ? 0 : p - da[i];
    return encode(da);
  }

  uint32_t mul_raw(uint32_t a, uint32_t b) const {
    if (lut) return mul_tab[static_cast<size_t>(a) * q + b];
    return mul_slow(a, b);
  }

  uint32_t mul_slow(uint32_t a, uint32_t b) const {
    if (e == 1) return static_cast<uint32_t>((int64_t{a} * b) % p);
    int64_t da[32], db[32], conv[64] = {0};
    decode(a, da);
    decode(b, db);
    for (int i = 0; i < e; ++i) {
      if (da[i] == 0) continue;
      for (int j = 0; j < e; ++j)
        conv[i + j] = (conv[i + j] + da[i] * db[j]) % p;
    }
    for (int i = 2 * e - 2; i >= e; --i) {
      const int64_t c = conv[i];
      if (c == 0) continue;
      for (int k = 0; k < e; ++k)
        conv[i - e + k] = mod_p(conv[i - e + k] - c * modulus[k], p);
    }
    return encode(conv);
  }

  uint32_t pow_raw(uint32_t a, uint64_t k) const {
    uint32_t r = 1, base = a;
    while (k) {
      if (k & 1) r = mul_raw(r, base);
      k >>= 1;
      if (k) base = mul_raw(base, base);
    }
    return r;
  }
};

Field make_field(int64_t p, int e, const std::vector<int64_t>& modulus) {
  if (!is_prime(p))
    raise(ErrorCode::NonPrimeCharacteristic,
          "characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) raise(ErrorCode::MalformedInput, "extension degree must be >= 1");

  auto d = std::make_shared<Field::Data>();
  d->p = p;
  d->e = e;

  int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxQ) raise(ErrorCode::MalformedInput, "field too large, q exceeds 2^31");
  }
  d->q = q;

  if (e == 1) {
    if (!modulus.empty())
      raise(ErrorCode::MalformedInput, "modulus must be omitted for prime fields");
  } else {
    if (modulus.empty())
      raise(ErrorCode::MalformedInput, "extension field requires a modulus");
    if (static_cast<int>(modulus.size()) != e + 1)
      raise(ErrorCode::MalformedInput,
            "modulus must list e+1 coefficients, constant term first");
    d->modulus.resize(modulus.size());
    for (size_t i = 0; i < modulus.size(); ++i) d->modulus[i] = mod_p(modulus[i], p);
    if (d->modulus.back() != 1)
      raise(ErrorCode::MalformedInput, "modulus must be monic");

    // Brute-force irreducibility: a reducible monic polynomial of degree e has
    // a monic factor of degree <= e/2.
    int64_t candidates = 0;
    for (int k = 1; 2 * k <= e; ++k) {
      int64_t count = 1;
      for (int i = 0; i < k; ++i) count *= p;
      candidates += count;
    }
    if (candidates > kIrredSearchCap)
      raise(ErrorCode::MalformedInput, "modulus too large for irreducibility check");
    for (int k = 1; 2 * k <= e; ++k) {
      int64_t count = 1;
      for (int i = 0; i < k; ++i) count *= p;
      PPoly cand(static_cast<size_t>(k) + 1, 0);
      cand[k] = 1;
      for (int64_t code = 0; code < count; ++code) {
        int64_t c = code;
        for (int i = 0; i < k; ++i) {
          cand[i] = c % p;
          c /= p;
        }
        if (divides(cand, d->modulus, p))
          raise(ErrorCode::ReducibleModulus, "modulus has a monic factor of degree " +
                                                 std::to_string(k));
      }
    }
  }

  if (q <= kLutMaxQ) {
    d->lut = false;  // build tables with the slow path, then flip
    d->mul_tab.resize(static_cast<size_t>(q) * q);
    for (int64_t a = 0; a < q; ++a)
      for (int64_t b = a; b < q; ++b) {
        const uint32_t m = d->mul_slow(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
        d->mul_tab[static_cast<size_t>(a) * q + b] = m;
        d->mul_tab[static_cast<size_t>(b) * q + a] = m;
      }
    d->lut = true;
    d->inv_tab.assign(static_cast<size_t>(q), 0);
    for (int64_t a = 1; a < q; ++a)
      d->inv_tab[a] = d->pow_raw(static_cast<uint32_t>(a), static_cast<uint64_t>(q - 2));
    d->frob_tab.resize(static_cast<size_t>(q));
    d->ifrob_tab.resize(static_cast<size_t>(q));
    for (int64_t a = 0; a < q; ++a) {
      const uint32_t fa = d->pow_raw(static_cast<uint32_t>(a), static_cast<uint64_t>(p));
      d->frob_tab[a] = fa;
      d->ifrob_tab[fa] = static_cast<uint32_t>(a);
    }
  }

  return Field(std::move(d));
}

int64_t Field::p() const noexcept { return d_->p; }
int Field::e() const noexcept { return d_->e; }
int64_t Field::q() const noexcept { return d_->q; }
const std::vector<int64_t>& Field::modulus() const noexcept { return d_->modulus; }

FieldElem Field::from_int(int64_t c) const {
  return {static_cast<uint32_t>(mod_p(c, d_->p))};
}

FieldElem Field::from_coeffs(const std::vector<int64_t>& coords) const {
  if (coords.empty() || static_cast<int>(coords.size()) > d_->e)
    raise(ErrorCode::MalformedInput,
          "coefficient array must have between 1 and e entries");
  int64_t dig[32] = {0};
  for (size_t i = 0; i < coords.size(); ++i) dig[i] = mod_p(coords[i], d_->p);
  return {d_->encode(dig)};
}

std::vector<int64_t> Field::coeffs(FieldElem x) const {
  std::vector<int64_t> out(static_cast<size_t>(d_->e));
  int64_t dig[32];
  d_->decode(x.v, dig);
  for (int i = 0; i < d_->e; ++i) out[i] = dig[i];
  return out;
}

FieldElem Field::add(FieldElem a, FieldElem b) const { return {d_->add_raw(a.v, b.v)}; }

FieldElem Field::sub(FieldElem a, FieldElem b) const {
  return {d_->add_raw(a.v, d_->neg_raw(b.v))};
}

FieldElem Field::neg(FieldElem a) const { return {d_->neg_raw(a.v)}; }

FieldElem Field::mul(FieldElem a, FieldElem b) const { return {d_->mul_raw(a.v, b.v)}; }

FieldElem Field::inv(FieldElem a) const {
  if (a.v == 0) raise(ErrorCode::MalformedInput, "division by zero in F_q");
  if (d_->lut) return {d_->inv_tab[a.v]};
  return {d_->pow_raw(a.v, static_cast<uint64_t>(d_->q - 2))};
}

FieldElem Field::pow(FieldElem a, uint64_t k) const { return {d_->pow_raw(a.v, k)}; }

FieldElem Field::mul_int(FieldElem a, int64_t c) const {
  return mul(a, from_int(c));
}

FieldElem Field::frobenius(FieldElem x) const {
  if (d_->lut) return {d_->frob_tab[x.v]};
  return {d_->pow_raw(x.v, static_cast<uint64_t>(d_->p))};
}

FieldElem Field::inv_frobenius(FieldElem x) const {
  if (d_->lut) return {d_->ifrob_tab[x.v]};
  FieldElem y = x;
  for (int i = 0; i < d_->e - 1; ++i) y = frobenius(y);
  return y;
}

FieldElem Field::frobenius_iter(FieldElem x, uint64_t k) const {
  k %= static_cast<uint64_t>(d_->e);  // Frobenius has order e on F_q
  for (uint64_t i = 0; i < k; ++i) x = frobenius(x);
  return x;
}

bool operator==(const Field& a, const Field& b) {
  return a.d_ == b.d_ ||
         (a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus);
}

}  // namespace sectio
