#pragma once

#include <cstdint>
#include <vector>

#include "cbcongr/errors.hpp"

namespace cbcongr {

/// Largest supported modulus. Keeping moduli below 2^63 means every product
/// of two reduced values fits the 128-bit intermediate, so the hot paths stay
/// allocation-free. Larger moduli are rejected at construction.
inline constexpr uint64_t kMaxModulus = (uint64_t{1} << 63) - 1;

/// A normalized value modulo a 64-bit modulus: value < modulus always.
struct Residue {
  uint64_t value = 0;
  uint64_t modulus = 1;

  friend bool operator==(const Residue &, const Residue &) = default;
};

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b; // no overflow: a, b < 2^63
  return s >= m ? s - m : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

void check_modulus(uint64_t modulus);

/// Reduce a signed integer into [0, modulus).
uint64_t reduce_signed(int64_t x, uint64_t modulus);

Residue make_residue(int64_t x, uint64_t modulus);

/// base^exp mod modulus; exp = 0 gives 1 mod modulus.
Residue powmod(int64_t base, uint64_t exp, uint64_t modulus);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t modulus);

/// Modular inverse; throws NotInvertible (reporting the gcd) when
/// gcd(x, modulus) > 1.
Residue invmod(int64_t x, uint64_t modulus);
uint64_t invmod_u64(uint64_t x, uint64_t modulus);

/// Jacobi symbol (a/n) for odd n >= 1; (a/1) = 1. Throws EvenModulus.
int jacobi(int64_t a, uint64_t n);

/// Largest e with p^e | x, for x != 0. Throws ZeroInput.
uint32_t valuation(int64_t x, uint64_t p);

/// Deterministic 64-bit primality (Miller-Rabin over a fixed witness set).
bool is_prime(uint64_t n);

/// All primes in [lo, hi], ascending. Sieves small ranges, falls back to the
/// deterministic primality test for large bounds.
std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi);

/// base^exp as a plain integer, rejecting anything above kMaxModulus.
uint64_t checked_pow(uint64_t base, uint32_t exp);

/// A prime power p^exponent small enough to serve as a Residue modulus.
struct PrimePower {
  uint64_t p = 2;
  uint32_t exponent = 1;
  uint64_t modulus = 2;

  static PrimePower make(uint64_t p, uint32_t exponent);
};

} // namespace cbcongr
