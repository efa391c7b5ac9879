#include "cbcongr/sequences.hpp"

#include <bit>
#include <string>

namespace cbcongr {

LucasPair lucas_pair_mod(LucasParams params, uint64_t n, uint64_t modulus) {
  check_modulus(modulus);
  uint64_t A = reduce_signed(params.A, modulus);
  uint64_t B = reduce_signed(params.B, modulus);
  // Carry (u_k, u_{k+1}); doubling needs no division:
  //   u_{2k}   = u_k (2 u_{k+1} - A u_k)
  //   u_{2k+1} = u_{k+1}^2 - B u_k^2
  uint64_t a = 0, b = 1 % modulus;
  if (n > 0) {
    int bits = 64 - std::countl_zero(n);
    for (int i = bits - 1; i >= 0; --i) {
      uint64_t t = submod(addmod(b, b, modulus), mulmod(A, a, modulus), modulus);
      uint64_t even = mulmod(a, t, modulus);
      uint64_t odd = submod(mulmod(b, b, modulus),
                            mulmod(B, mulmod(a, a, modulus), modulus), modulus);
      if ((n >> i) & 1) {
        a = odd;
        b = submod(mulmod(A, odd, modulus), mulmod(B, even, modulus), modulus);
      } else {
        a = even;
        b = odd;
      }
    }
  }
  LucasPair out;
  out.n = n;
  out.params = params;
  out.u = Residue{a, modulus};
  out.v = Residue{submod(addmod(b, b, modulus), mulmod(A, a, modulus), modulus),
                  modulus};
  return out;
}

Residue lucas_u_at(LucasParams params, int64_t n, uint64_t modulus) {
  if (n >= 0) return lucas_pair_mod(params, static_cast<uint64_t>(n), modulus).u;
  if (n == -1) {
    // u_{-1} = (u_1 - A u_0) / (-B) = -1/B
    uint64_t inv = invmod(params.B, modulus).value;
    return Residue{submod(0, inv, modulus), modulus};
  }
  raise(ErrorKind::IndexOutOfDomain, "u at index " + std::to_string(n));
}

Residue lucas_v_at(LucasParams params, int64_t n, uint64_t modulus) {
  if (n >= 0) return lucas_pair_mod(params, static_cast<uint64_t>(n), modulus).v;
  if (n == -1) {
    // v_{-1} = A/B
    uint64_t inv = invmod(params.B, modulus).value;
    uint64_t A = reduce_signed(params.A, modulus);
    return Residue{mulmod(A, inv, modulus), modulus};
  }
  raise(ErrorKind::IndexOutOfDomain, "v at index " + std::to_string(n));
}

void IntPoly::normalize() {
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

IntPoly poly_add(const IntPoly &a, const IntPoly &b) {
  IntPoly r;
  r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()));
  for (size_t i = 0; i < r.coeff.size(); ++i) {
    if (i < a.coeff.size()) r.coeff[i] += a.coeff[i];
    if (i < b.coeff.size()) r.coeff[i] += b.coeff[i];
  }
  r.normalize();
  return r;
}

IntPoly poly_sub(const IntPoly &a, const IntPoly &b) {
  IntPoly r;
  r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()));
  for (size_t i = 0; i < r.coeff.size(); ++i) {
    if (i < a.coeff.size()) r.coeff[i] += a.coeff[i];
    if (i < b.coeff.size()) r.coeff[i] -= b.coeff[i];
  }
  r.normalize();
  return r;
}

IntPoly poly_mul(const IntPoly &a, const IntPoly &b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.coeff.size(); ++i)
    for (size_t j = 0; j < b.coeff.size(); ++j)
      r.coeff[i + j] += a.coeff[i] * b.coeff[j];
  r.normalize();
  return r;
}

IntPoly poly_scale(const IntPoly &a, const mpz_class &s) {
  IntPoly r;
  if (s == 0) return r;
  r.coeff = a.coeff;
  for (auto &c : r.coeff) c *= s;
  return r;
}

IntPoly poly_compose(const IntPoly &a, const IntPoly &inner) {
  IntPoly r;
  for (size_t i = a.coeff.size(); i-- > 0;) {
    r = poly_mul(r, inner);
    IntPoly c;
    if (a.coeff[i] != 0) c.coeff = {a.coeff[i]};
    r = poly_add(r, c);
  }
  return r;
}

mpz_class poly_eval(const IntPoly &a, const mpz_class &x) {
  mpz_class r = 0;
  for (size_t i = a.coeff.size(); i-- > 0;) r = r * x + a.coeff[i];
  return r;
}

Residue poly_eval_mod(const IntPoly &a, int64_t x, uint64_t modulus) {
  check_modulus(modulus);
  uint64_t xr = reduce_signed(x, modulus);
  uint64_t r = 0;
  mpz_class mod = static_cast<unsigned long>(modulus);
  for (size_t i = a.coeff.size(); i-- > 0;) {
    mpz_class c = a.coeff[i] % mod;
    if (c < 0) c += mod;
    r = addmod(mulmod(r, xr, modulus), c.get_ui(), modulus);
  }
  return Residue{r, modulus};
}

namespace {

// Three-term recurrence s_{n+1} = x s_n - s_{n-1} from the given seeds.
IntPoly companion_recurrence(IntPoly prev, IntPoly cur, int64_t n) {
  IntPoly x;
  x.coeff = {mpz_class(0), mpz_class(1)};
  for (int64_t i = 1; i < n; ++i) {
    IntPoly next = poly_sub(poly_mul(x, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return n == 0 ? prev : cur;
}

} // namespace

IntPoly poly_u(int64_t n) {
  if (n < -1) raise(ErrorKind::IndexOutOfDomain, "poly_u at " + std::to_string(n));
  if (n == -1) {
    IntPoly r;
    r.coeff = {mpz_class(-1)};
    return r;
  }
  IntPoly u0, u1;
  u1.coeff = {mpz_class(1)};
  return companion_recurrence(u0, u1, n);
}

IntPoly poly_v(int64_t n) {
  if (n < -1) raise(ErrorKind::IndexOutOfDomain, "poly_v at " + std::to_string(n));
  IntPoly v0, v1;
  v0.coeff = {mpz_class(2)};
  v1.coeff = {mpz_class(0), mpz_class(1)};
  if (n == -1) return v1; // v_{-1} = x
  return companion_recurrence(v0, v1, n);
}

IntPoly poly_V(uint64_t n) {
  IntPoly v0, v1, x;
  v0.coeff = {mpz_class(2)};
  v1.coeff = {mpz_class(0), mpz_class(1)};
  x.coeff = {mpz_class(0), mpz_class(1)};
  if (n == 0) return v0;
  for (uint64_t i = 1; i < n; ++i) {
    IntPoly next = poly_mul(x, poly_add(v1, v0));
    v0 = std::move(v1);
    v1 = std::move(next);
  }
  return v1;
}

Residue named_sequence(SeqName name, int64_t n, uint64_t modulus) {
  check_modulus(modulus);
  switch (name) {
  case SeqName::F:
    if (n == -1) return make_residue(1, modulus);
    if (n == -2) return make_residue(-1, modulus);
    if (n < 0) raise(ErrorKind::IndexOutOfDomain, "F at " + std::to_string(n));
    return lucas_pair_mod({1, -1}, static_cast<uint64_t>(n), modulus).u;
  case SeqName::L:
    if (n == -1) return make_residue(-1, modulus);
    if (n == -2) return make_residue(3, modulus);
    if (n < 0) raise(ErrorKind::IndexOutOfDomain, "L at " + std::to_string(n));
    return lucas_pair_mod({1, -1}, static_cast<uint64_t>(n), modulus).v;
  case SeqName::P:
    if (n < 0) raise(ErrorKind::IndexOutOfDomain, "P at " + std::to_string(n));
    return lucas_pair_mod({2, -1}, static_cast<uint64_t>(n), modulus).u;
  case SeqName::Q:
    // Q_0 = Q_1 = 2 coincides with the companion v_n(2, -1) since A = 2.
    if (n < 0) raise(ErrorKind::IndexOutOfDomain, "Q at " + std::to_string(n));
    return lucas_pair_mod({2, -1}, static_cast<uint64_t>(n), modulus).v;
  case SeqName::S:
    if (n < 0) raise(ErrorKind::IndexOutOfDomain, "S at " + std::to_string(n));
    return lucas_pair_mod({4, 1}, static_cast<uint64_t>(n), modulus).u;
  }
  raise(ErrorKind::BadParameter, "unknown sequence");
}

mpz_class fibonacci_exact(int64_t n) {
  if (n == -1) return 1;
  if (n == -2) return -1;
  if (n < 0) raise(ErrorKind::IndexOutOfDomain, "F at " + std::to_string(n));
  mpz_class r;
  mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class lucas_number_exact(int64_t n) {
  if (n == -1) return -1;
  if (n == -2) return 3;
  if (n < 0) raise(ErrorKind::IndexOutOfDomain, "L at " + std::to_string(n));
  mpz_class r;
  mpz_lucnum_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Residue quotient_by_p(Residue value_mod_p2, uint64_t p) {
  if (value_mod_p2.modulus != p * p)
    raise(ErrorKind::BadParameter, "value must be reduced mod p^2");
  if (value_mod_p2.value % p != 0)
    raise(ErrorKind::NotDivisible,
          std::to_string(value_mod_p2.value) + " not divisible by " +
              std::to_string(p));
  return Residue{value_mod_p2.value / p, p};
}

} // namespace cbcongr
