#include "cbcongr/padic.hpp"

#include <algorithm>
#include <string>

namespace cbcongr {

namespace {

void check_digits(uint64_t p, uint32_t digits) {
  if (digits < 1) raise(ErrorKind::BadParameter, "precision must be >= 1");
  checked_pow(p, digits); // rejects p^digits above the Residue bound
}

void check_same_prime(const PadicTrunc &a, const PadicTrunc &b) {
  if (a.p != b.p)
    raise(ErrorKind::PrimeMismatch,
          std::to_string(a.p) + " vs " + std::to_string(b.p));
}

} // namespace

PadicTrunc padic_zero(uint64_t p, uint32_t digits) {
  check_digits(p, digits);
  PadicTrunc z;
  z.p = p;
  z.zero = true;
  z.digits = digits;
  return z;
}

PadicTrunc padic_from_int(int64_t x, uint64_t p, uint32_t digits) {
  check_digits(p, digits);
  if (x == 0) return padic_zero(p, digits);
  PadicTrunc r;
  r.p = p;
  r.zero = false;
  r.digits = digits;
  uint32_t v = valuation(x, p);
  int64_t stripped = x;
  for (uint32_t i = 0; i < v; ++i) stripped /= static_cast<int64_t>(p);
  r.valuation = v;
  r.unit = reduce_signed(stripped, checked_pow(p, digits));
  return r;
}

PadicTrunc padic_mul(const PadicTrunc &a, const PadicTrunc &b) {
  check_same_prime(a, b);
  uint32_t digits = std::min(a.digits, b.digits);
  if (a.zero || b.zero) return padic_zero(a.p, digits);
  uint64_t mod = checked_pow(a.p, digits);
  PadicTrunc r;
  r.p = a.p;
  r.zero = false;
  r.valuation = a.valuation + b.valuation;
  r.unit = mulmod(a.unit % mod, b.unit % mod, mod);
  r.digits = digits;
  return r;
}

PadicTrunc padic_div(const PadicTrunc &a, const PadicTrunc &b) {
  check_same_prime(a, b);
  if (b.zero) raise(ErrorKind::DivisionByZero, "p-adic division by zero");
  uint32_t digits = std::min(a.digits, b.digits);
  if (a.zero) return padic_zero(a.p, digits);
  uint64_t mod = checked_pow(a.p, digits);
  PadicTrunc r;
  r.p = a.p;
  r.zero = false;
  r.valuation = a.valuation - b.valuation;
  r.unit = mulmod(a.unit % mod, invmod_u64(b.unit % mod, mod), mod);
  r.digits = digits;
  return r;
}

PadicTrunc padic_add(const PadicTrunc &a, const PadicTrunc &b) {
  check_same_prime(a, b);
  if (a.zero) return b;
  if (b.zero) return a;
  int64_t vmin = std::min(a.valuation, b.valuation);
  int64_t known = std::min(a.valuation + static_cast<int64_t>(a.digits),
                           b.valuation + static_cast<int64_t>(b.digits));
  uint32_t k = static_cast<uint32_t>(known - vmin); // >= 1 by construction
  uint64_t mod = checked_pow(a.p, k);
  auto shifted = [&](const PadicTrunc &x) -> uint64_t {
    int64_t shift = x.valuation - vmin;
    if (shift >= static_cast<int64_t>(k)) return 0;
    uint64_t scale = checked_pow(a.p, static_cast<uint32_t>(shift));
    return mulmod(x.unit % mod, scale, mod);
  };
  uint64_t s = addmod(shifted(a), shifted(b), mod);
  if (s == 0)
    raise(ErrorKind::PrecisionExhausted,
          "cancellation below one trusted digit at p = " + std::to_string(a.p));
  uint32_t t = 0;
  while (s % a.p == 0) {
    s /= a.p;
    ++t;
  }
  PadicTrunc r;
  r.p = a.p;
  r.zero = false;
  r.valuation = vmin + t;
  r.unit = s;
  r.digits = k - t;
  return r;
}

PadicTrunc padic_neg(const PadicTrunc &a) {
  if (a.zero) return a;
  PadicTrunc r = a;
  r.unit = checked_pow(a.p, a.digits) - a.unit;
  return r;
}

Residue padic_to_residue(const PadicTrunc &a, uint32_t k) {
  uint64_t mod = checked_pow(a.p, k);
  if (a.zero) return Residue{0, mod};
  if (a.valuation < 0)
    raise(ErrorKind::NegativeValuation,
          "valuation " + std::to_string(a.valuation));
  if (a.valuation >= static_cast<int64_t>(k)) return Residue{0, mod};
  if (a.valuation + static_cast<int64_t>(a.digits) < static_cast<int64_t>(k))
    raise(ErrorKind::InsufficientPrecision,
          "need " + std::to_string(k) + " digits, have " +
              std::to_string(a.valuation + static_cast<int64_t>(a.digits)));
  uint64_t scale = checked_pow(a.p, static_cast<uint32_t>(a.valuation));
  return Residue{mulmod(a.unit % mod, scale, mod), mod};
}

} // namespace cbcongr
