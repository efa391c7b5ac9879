#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cbcongr/sequences.hpp"

namespace cbcongr {

/// Exact rational, canonical (reduced, positive denominator) -- mpq_class
/// keeps arithmetic results in that form.
using BigRat = mpq_class;

/// Univariate polynomial over exact rationals, lowest degree first, no
/// trailing zero coefficient.
struct RatPoly {
  std::vector<BigRat> coeff;

  bool is_zero() const { return coeff.empty(); }
  int64_t degree() const { return static_cast<int64_t>(coeff.size()) - 1; }
  void normalize();

  friend bool operator==(const RatPoly &, const RatPoly &) = default;
};

RatPoly rat_poly_add(const RatPoly &a, const RatPoly &b);
RatPoly rat_poly_sub(const RatPoly &a, const RatPoly &b);
RatPoly rat_poly_mul(const RatPoly &a, const RatPoly &b);
RatPoly rat_poly_scale(const RatPoly &a, const BigRat &s);
BigRat rat_poly_eval(const RatPoly &a, const BigRat &x);
RatPoly rat_poly_from_int(const IntPoly &a);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
mpz_class binom(uint64_t n, int64_t k);

struct PolyCheck {
  bool equal = false;
  RatPoly lhs;
  RatPoly rhs;
};

/// Checks, as exact polynomials in x,
///   sum_{0<=k<n} C(2k, k+d) x^{n-1-k} + [d>0] x^n u_d(x-2)
///     = sum_{0<=k<n+d} C(2n, k) u_{n+d-k}(x-2)
/// for n >= 1 and any integer d.
PolyCheck check_thm21_u(uint32_t n, int64_t d);

/// Checks, as exact polynomials in x,
///   d sum_{0<k<n} C(2k, k+d)/k x^{n-k} - [d>=0] x^n v_d(x-2) + [d=0] x^n
///     = -sum_{0<=k<n+d} C(2n, k) v_{n+d-k}(x-2) - 2 C(2n-1, n+d-1).
PolyCheck check_thm21_v(uint32_t n, int64_t d);

struct ValueCheck {
  bool equal = false;
  BigRat lhs;
  BigRat rhs;
};

/// The three specializations of the polynomial identities at x = 1 and
/// x = -1, evaluated over exact integers (Jacobi-style symbol mod 3,
/// Fibonacci, Lucas).
enum class Cor21 { Sym3, Fib, Luc };

ValueCheck check_cor21(Cor21 which, uint32_t n, uint32_t d);

struct Lemma41Check {
  bool equal_poly = false;    // exact polynomial construction
  bool equal_samples = false; // secondary check at sample points
  bool equal() const { return equal_poly && equal_samples; }
};

/// (1/2) sum_{0<k<n} C(2k,k)/(k x^k) vs
/// sum_{0<d<n} (-1)^{d-1} sum_{0<k<n} C(2k,k+d)/(k x^k): both sides times
/// x^{n-1} are built as exact polynomials and compared; the original rational
/// expressions are additionally evaluated at the (nonzero) sample points.
Lemma41Check check_lemma41(uint32_t n, const std::vector<BigRat> &x_samples);

/// 2n + 6 nonzero rationals: +-1 .. +-(n+1), +-1/2, +-1/3.
std::vector<BigRat> lemma41_default_samples(uint32_t n);

struct StaverCheck {
  bool equal = false;
  BigRat sum;          // sum_{k=1}^n C(2k,k)/k
  BigRat central_form; // (2n+1)/(3n^2) C(2n,n) sum 1/C(n-1,k-1)^2
  BigRat square_form;  // (n+1)/3 C(2n+1,n) sum 1/(k^2 C(n,k)^2)
};

/// All three closed forms of the cumulative central-binomial-over-k sum must
/// coincide exactly.
StaverCheck check_staver(uint32_t n);

} // namespace cbcongr
