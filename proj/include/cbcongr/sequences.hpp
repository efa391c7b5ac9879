#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cbcongr/modarith.hpp"

namespace cbcongr {

/// Parameters of the Lucas recurrence x_{n+1} = A x_n - B x_{n-1} with
/// seeds u: (0, 1) and companion v: (2, A).
struct LucasParams {
  int64_t A = 0;
  int64_t B = 0;

  friend bool operator==(const LucasParams &, const LucasParams &) = default;
};

struct LucasPair {
  Residue u;
  Residue v;
  uint64_t n = 0;
  LucasParams params;
};

/// (u_n, v_n) mod modulus by fast doubling, O(log n) steps.
/// n = 0 gives (0, 2 mod m), n = 1 gives (1 mod m, A mod m).
LucasPair lucas_pair_mod(LucasParams params, uint64_t n, uint64_t modulus);

/// u_n for n >= 0; u_{-1} = -1/B (NotInvertible when gcd(B, modulus) > 1).
Residue lucas_u_at(LucasParams params, int64_t n, uint64_t modulus);

/// v_n for n >= 0; v_{-1} = A/B.
Residue lucas_v_at(LucasParams params, int64_t n, uint64_t modulus);

/// Univariate polynomial over arbitrary-precision integers, lowest degree
/// first, no trailing zero coefficient; the zero polynomial is empty.
struct IntPoly {
  std::vector<mpz_class> coeff;

  bool is_zero() const { return coeff.empty(); }
  int64_t degree() const { return static_cast<int64_t>(coeff.size()) - 1; }
  void normalize();

  friend bool operator==(const IntPoly &, const IntPoly &) = default;
};

IntPoly poly_add(const IntPoly &a, const IntPoly &b);
IntPoly poly_sub(const IntPoly &a, const IntPoly &b);
IntPoly poly_mul(const IntPoly &a, const IntPoly &b);
IntPoly poly_scale(const IntPoly &a, const mpz_class &s);
/// a(inner(x)), exact.
IntPoly poly_compose(const IntPoly &a, const IntPoly &inner);
mpz_class poly_eval(const IntPoly &a, const mpz_class &x);
Residue poly_eval_mod(const IntPoly &a, int64_t x, uint64_t modulus);

/// u_n(x): u_0 = 0, u_1 = 1, u_{n+1} = x u_n - u_{n-1}; u_{-1} = -1.
IntPoly poly_u(int64_t n);
/// v_n(x): v_0 = 2, v_1 = x, same recurrence; v_{-1} = x.
IntPoly poly_v(int64_t n);
/// V_n(x): V_0 = 2, V_1 = x, V_{n+1} = x (V_n + V_{n-1}).
IntPoly poly_V(uint64_t n);

/// Named integer sequences as residues. F and L accept indices down to -2
/// (F_{-1} = 1, F_{-2} = -1, L_{-1} = -1, L_{-2} = 3); P, Q, S are defined
/// for n >= 0 only. Anything else throws IndexOutOfDomain.
enum class SeqName { F, L, P, Q, S };

Residue named_sequence(SeqName name, int64_t n, uint64_t modulus);

/// Exact Fibonacci / Lucas numbers, n >= -2.
mpz_class fibonacci_exact(int64_t n);
mpz_class lucas_number_exact(int64_t n);

/// (value / p) mod p for a residue mod p^2 that is divisible by p.
/// Throws NotDivisible otherwise -- a failed divisibility hypothesis is a
/// bug signal, never coerced.
Residue quotient_by_p(Residue value_mod_p2, uint64_t p);

} // namespace cbcongr
