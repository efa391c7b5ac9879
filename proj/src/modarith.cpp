#include "cbcongr/modarith.hpp"

#include <array>
#include <numeric>
#include <string>

namespace cbcongr {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NotInvertible: return "NotInvertible";
  case ErrorKind::EvenModulus: return "EvenModulus";
  case ErrorKind::ZeroInput: return "ZeroInput";
  case ErrorKind::Overflow: return "Overflow";
  case ErrorKind::PrimeMismatch: return "PrimeMismatch";
  case ErrorKind::DivisionByZero: return "DivisionByZero";
  case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
  case ErrorKind::NegativeValuation: return "NegativeValuation";
  case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
  case ErrorKind::DenominatorDivisible: return "DenominatorDivisible";
  case ErrorKind::BaseDivisible: return "BaseDivisible";
  case ErrorKind::NotDivisible: return "NotDivisible";
  case ErrorKind::BadParameter: return "BadParameter";
  case ErrorKind::NonIntegralSum: return "NonIntegralSum";
  case ErrorKind::IndexOutOfDomain: return "IndexOutOfDomain";
  case ErrorKind::UnknownId: return "UnknownId";
  case ErrorKind::DomainViolation: return "DomainViolation";
  }
  return "Unknown";
}

void check_modulus(uint64_t modulus) {
  if (modulus == 0 || modulus > kMaxModulus)
    raise(ErrorKind::Overflow,
          "modulus " + std::to_string(modulus) + " outside [1, 2^63)");
}

uint64_t reduce_signed(int64_t x, uint64_t modulus) {
  check_modulus(modulus);
  int64_t r = x % static_cast<int64_t>(modulus);
  if (r < 0) r += static_cast<int64_t>(modulus);
  return static_cast<uint64_t>(r);
}

Residue make_residue(int64_t x, uint64_t modulus) {
  return Residue{reduce_signed(x, modulus), modulus};
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t modulus) {
  uint64_t result = 1 % modulus;
  uint64_t b = base % modulus;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, b, modulus);
    b = mulmod(b, b, modulus);
    exp >>= 1;
  }
  return result;
}

Residue powmod(int64_t base, uint64_t exp, uint64_t modulus) {
  check_modulus(modulus);
  return Residue{powmod_u64(reduce_signed(base, modulus), exp, modulus), modulus};
}

uint64_t invmod_u64(uint64_t x, uint64_t modulus) {
  // Extended Euclid; coefficients stay within int128.
  __int128 old_r = static_cast<__int128>(x % modulus), r = modulus;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r; r = t;
    t = old_s - q * s;
    old_s = s; s = t;
  }
  if (old_r != 1)
    raise(ErrorKind::NotInvertible,
          "gcd = " + std::to_string(static_cast<uint64_t>(old_r)));
  __int128 inv = old_s % static_cast<__int128>(modulus);
  if (inv < 0) inv += modulus;
  return static_cast<uint64_t>(inv);
}

Residue invmod(int64_t x, uint64_t modulus) {
  check_modulus(modulus);
  if (modulus == 1) return Residue{0, 1};
  return Residue{invmod_u64(reduce_signed(x, modulus), modulus), modulus};
}

int jacobi(int64_t a, uint64_t n) {
  if (n % 2 == 0)
    raise(ErrorKind::EvenModulus, "jacobi bottom " + std::to_string(n));
  // n may exceed kMaxModulus here; reduce by hand.
  __int128 r = static_cast<__int128>(a) % static_cast<__int128>(n);
  if (r < 0) r += n;
  uint64_t x = static_cast<uint64_t>(r);
  int result = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      uint64_t nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

uint32_t valuation(int64_t x, uint64_t p) {
  if (x == 0) raise(ErrorKind::ZeroInput, "valuation of 0");
  uint64_t v = x < 0 ? static_cast<uint64_t>(-(x + 1)) + 1 : static_cast<uint64_t>(x);
  uint32_t e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

namespace {

bool miller_rabin(uint64_t n, uint64_t witness) {
  uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  uint64_t x = powmod_u64(witness % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

} // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic for all 64-bit inputs with this witness set.
  for (uint64_t w : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (!miller_rabin(n, w)) return false;
  }
  return true;
}

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> out;
  if (hi < 2 || hi < lo) return out;
  if (lo < 2) lo = 2;
  constexpr uint64_t kSieveLimit = 1u << 25;
  if (hi <= kSieveLimit) {
    std::vector<bool> composite(hi + 1, false);
    for (uint64_t i = 2; i * i <= hi; ++i) {
      if (composite[i]) continue;
      for (uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (uint64_t i = lo; i <= hi; ++i)
      if (!composite[i]) out.push_back(i);
    return out;
  }
  for (uint64_t n = lo; n <= hi && n >= lo; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

uint64_t checked_pow(uint64_t base, uint32_t exp) {
  unsigned __int128 acc = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > kMaxModulus)
      raise(ErrorKind::Overflow, std::to_string(base) + "^" + std::to_string(exp));
  }
  return static_cast<uint64_t>(acc);
}

PrimePower PrimePower::make(uint64_t p, uint32_t exponent) {
  if (!is_prime(p))
    raise(ErrorKind::BadParameter, std::to_string(p) + " is not prime");
  if (exponent < 1)
    raise(ErrorKind::BadParameter, "exponent must be >= 1");
  PrimePower pp;
  pp.p = p;
  pp.exponent = exponent;
  pp.modulus = checked_pow(p, exponent);
  return pp;
}

} // namespace cbcongr
