#pragma once

#include <cstdint>
#include <vector>

#include "cbcongr/modarith.hpp"
#include "cbcongr/padic.hpp"

namespace cbcongr {

/// Inverses of the p-free parts of 1..max_n modulo p^digits, built with one
/// batched inversion. Shared across the streams of a whole parameter sweep;
/// read-only after construction.
struct UnitInverseTable {
  uint64_t p = 2;
  uint32_t digits = 1;
  uint64_t modulus = 2;
  std::vector<uint32_t> val;       // v_p(j)
  std::vector<uint64_t> unit;      // j / p^val reduced mod p^digits
  std::vector<uint64_t> unit_inv;  // its inverse mod p^digits

  static UnitInverseTable build(uint64_t p, uint32_t digits, uint64_t max_n);
};

/// Streams C(2k, k+d) for k = |d|, |d|+1, ... as a truncated p-adic value,
/// advancing by the exact multiplicative update
///   C(2k+2, k+1+d) = C(2k, k+d) * (2k+1)(2k+2) / ((k+1+d)(k+1-d)).
/// Every factor has its p-part stripped exactly, so the stream tracks the
/// full p-power of the coefficient, not just its unit. C(2k, k+d) = 0 for
/// k < |d|; the stream starts at the first nonzero term, which is 1.
class BinomialStream {
public:
  BinomialStream(uint64_t p, uint32_t digits, int64_t d,
                 const UnitInverseTable *table = nullptr);

  uint64_t k() const { return k_; }
  int64_t valuation() const { return val_; }
  uint64_t unit() const { return unit_; }
  PadicTrunc value() const;
  void advance();

private:
  uint64_t p_;
  uint32_t digits_;
  uint64_t modulus_;
  uint64_t abs_d_;
  uint64_t k_;
  int64_t val_;
  uint64_t unit_;
  const UnitInverseTable *table_;
};

/// C(2k, k+d) mod p^a including the correct power of p; 0 outside support.
Residue central_binomial_mod(uint64_t k, int64_t d, const PrimePower &pp);

/// Sum over k in [0, p^a) of C(2k, k+d) / m^k, as a residue mod p.
/// Requires 0 <= d <= p^a and p not dividing m.
Residue sum_binomial_over_mk(const PrimePower &pp, uint64_t d, int64_t m,
                             const UnitInverseTable *table = nullptr);

/// d * sum over k in [1, p^a) of C(2k, k+d) / (k m^{k-1}), as a residue
/// mod p. Requires 1 <= d <= p^a and p not dividing m. Terms with p | k are
/// carried at a fixed p-adic scale; NonIntegralSum if the final weighted sum
/// is not a p-adic integer.
Residue sum_binomial_over_kmk(const PrimePower &pp, uint64_t d, int64_t m,
                              const UnitInverseTable *table = nullptr);

/// p^{a-1} * sum over k in [1, p^a) of C(2k, k)/k, as a residue mod p^3.
Residue theorem13_lhs(const PrimePower &pp);

/// B_n mod p via the recurrence sum_{j<=n} C(n+1, j) B_j = 0 (B_1 = -1/2),
/// O(n^2) modular operations. Defined when (p-1) does not divide n or n = 0
/// (DenominatorDivisible otherwise). The mod-p recurrence additionally needs
/// n < p - 1; larger n pass through Bernoulli numbers whose denominators p
/// divides and fail with NotInvertible.
Residue bernoulli_mod_p(uint64_t n, uint64_t p);

/// Fermat quotient q_p(base) = (base^{p-1} - 1)/p mod p, for odd p with
/// p not dividing base (BaseDivisible otherwise).
Residue fermat_quotient(int64_t base, uint64_t p);

/// Prefix sums H_1..H_n of inverses mod modulus.
struct HarmonicTable {
  uint64_t modulus = 1;
  std::vector<uint64_t> values; // values[k-1] = H_k

  uint64_t H(uint64_t k) const { return values.at(k - 1); }
};

HarmonicTable harmonic_table(uint64_t n, uint64_t modulus);

/// Sum of (-1)^{k-1} / k over 0 < k < (num/den) * p, mod p. The bound is
/// applied strictly, matching sums like "0 < k < 3p/4"; for num = den this
/// is the full alternating harmonic sum over 0 < k < p.
Residue alt_harmonic_partial(uint64_t num, uint64_t den, uint64_t p);

} // namespace cbcongr
