#pragma once

#include <cstdint>

#include "cbcongr/modarith.hpp"

namespace cbcongr {

/// A truncated p-adic number: p^valuation * unit, with the unit trusted to
/// `digits` base-p digits, i.e. the represented value is known modulo
/// p^(valuation + digits). Zero is a distinct sentinel rather than a
/// valuation-infinity convention, so valuation arithmetic never overflows.
///
/// Invariants (unless zero): unit is coprime to p and lies in [1, p^digits);
/// digits >= 1. Operations that cannot keep at least one trusted digit raise
/// PrecisionExhausted instead of returning an optimistic value.
struct PadicTrunc {
  uint64_t p = 2;
  bool zero = true;
  int64_t valuation = 0;
  uint64_t unit = 0;   // in [1, p^digits), coprime to p; 0 when zero
  uint32_t digits = 1; // trusted base-p digits of the unit

  bool is_zero() const { return zero; }
};

PadicTrunc padic_zero(uint64_t p, uint32_t digits);

/// Exact representation of an integer: valuation = v_p(x), unit = x / p^v
/// reduced mod p^digits. x = 0 yields the Zero sentinel.
PadicTrunc padic_from_int(int64_t x, uint64_t p, uint32_t digits);

/// Valuations add, units multiply; result precision = min of the inputs'.
PadicTrunc padic_mul(const PadicTrunc &a, const PadicTrunc &b);

/// Valuations subtract (negative results are legal), unit of a divided by
/// unit of b. Throws DivisionByZero when b is Zero.
PadicTrunc padic_div(const PadicTrunc &a, const PadicTrunc &b);

/// Align to the smaller valuation, add, re-extract the valuation. Trusted
/// digits of the result = min over inputs of (valuation_i + digits_i) minus
/// the result valuation; PrecisionExhausted if that falls below 1.
PadicTrunc padic_add(const PadicTrunc &a, const PadicTrunc &b);

PadicTrunc padic_neg(const PadicTrunc &a);

/// p^valuation * unit reduced mod p^k. Requires valuation >= 0
/// (NegativeValuation otherwise) and valuation + digits >= k
/// (InsufficientPrecision otherwise). Zero maps to 0.
Residue padic_to_residue(const PadicTrunc &a, uint32_t k);

} // namespace cbcongr
