#include "cbcongr/identities.hpp"

#include <string>

#include "cbcongr/modarith.hpp"

namespace cbcongr {

void RatPoly::normalize() {
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

RatPoly rat_poly_add(const RatPoly &a, const RatPoly &b) {
  RatPoly r;
  r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()));
  for (size_t i = 0; i < r.coeff.size(); ++i) {
    if (i < a.coeff.size()) r.coeff[i] += a.coeff[i];
    if (i < b.coeff.size()) r.coeff[i] += b.coeff[i];
  }
  r.normalize();
  return r;
}

RatPoly rat_poly_sub(const RatPoly &a, const RatPoly &b) {
  return rat_poly_add(a, rat_poly_scale(b, BigRat(-1)));
}

RatPoly rat_poly_mul(const RatPoly &a, const RatPoly &b) {
  RatPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.coeff.size(); ++i)
    for (size_t j = 0; j < b.coeff.size(); ++j)
      r.coeff[i + j] += a.coeff[i] * b.coeff[j];
  r.normalize();
  return r;
}

RatPoly rat_poly_scale(const RatPoly &a, const BigRat &s) {
  RatPoly r;
  if (s == 0) return r;
  r.coeff = a.coeff;
  for (auto &c : r.coeff) c *= s;
  return r;
}

BigRat rat_poly_eval(const RatPoly &a, const BigRat &x) {
  BigRat r = 0;
  for (size_t i = a.coeff.size(); i-- > 0;) r = r * x + a.coeff[i];
  return r;
}

RatPoly rat_poly_from_int(const IntPoly &a) {
  RatPoly r;
  r.coeff.reserve(a.coeff.size());
  for (const auto &c : a.coeff) r.coeff.emplace_back(c);
  return r;
}

mpz_class binom(uint64_t n, int64_t k) {
  if (k < 0 || static_cast<uint64_t>(k) > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

namespace {

RatPoly monomial(const BigRat &c, uint64_t deg) {
  RatPoly r;
  if (c == 0) return r;
  r.coeff.assign(deg + 1, BigRat(0));
  r.coeff[deg] = c;
  return r;
}

// u_j(x-2) / v_j(x-2) for 0 <= j <= top, exact.
std::vector<RatPoly> shifted_family(int64_t top, bool companion) {
  IntPoly shift;
  shift.coeff = {mpz_class(-2), mpz_class(1)};
  std::vector<RatPoly> out;
  out.reserve(static_cast<size_t>(top) + 1);
  for (int64_t j = 0; j <= top; ++j) {
    IntPoly base = companion ? poly_v(j) : poly_u(j);
    out.push_back(rat_poly_from_int(poly_compose(base, shift)));
  }
  return out;
}

int sym3(int64_t x) { return jacobi(x, 3); }

} // namespace

PolyCheck check_thm21_u(uint32_t n, int64_t d) {
  if (n < 1) raise(ErrorKind::BadParameter, "n must be >= 1");
  int64_t top = static_cast<int64_t>(n) + (d > 0 ? d : 0);
  auto u_shift = shifted_family(top, false);

  RatPoly lhs;
  for (uint64_t k = 0; k < n; ++k) {
    mpz_class c = binom(2 * k, static_cast<int64_t>(k) + d);
    lhs = rat_poly_add(lhs, monomial(BigRat(c), n - 1 - k));
  }
  if (d > 0)
    lhs = rat_poly_add(lhs, rat_poly_mul(monomial(BigRat(1), n), u_shift[d]));

  RatPoly rhs;
  for (int64_t k = 0; k < static_cast<int64_t>(n) + d; ++k)
    rhs = rat_poly_add(
        rhs, rat_poly_scale(u_shift[static_cast<int64_t>(n) + d - k],
                            BigRat(binom(2 * n, k))));

  return PolyCheck{lhs == rhs, lhs, rhs};
}

PolyCheck check_thm21_v(uint32_t n, int64_t d) {
  if (n < 1) raise(ErrorKind::BadParameter, "n must be >= 1");
  int64_t top = static_cast<int64_t>(n) + (d > 0 ? d : 0);
  auto v_shift = shifted_family(top, true);

  RatPoly lhs;
  for (uint64_t k = 1; k < n; ++k) {
    mpz_class c = binom(2 * k, static_cast<int64_t>(k) + d);
    BigRat w = BigRat(c * d) / BigRat(static_cast<unsigned long>(k));
    lhs = rat_poly_add(lhs, monomial(w, n - k));
  }
  if (d >= 0)
    lhs = rat_poly_sub(lhs, rat_poly_mul(monomial(BigRat(1), n), v_shift[d]));
  if (d == 0) lhs = rat_poly_add(lhs, monomial(BigRat(1), n));

  RatPoly rhs;
  for (int64_t k = 0; k < static_cast<int64_t>(n) + d; ++k)
    rhs = rat_poly_add(
        rhs, rat_poly_scale(v_shift[static_cast<int64_t>(n) + d - k],
                            BigRat(binom(2 * n, k))));
  rhs = rat_poly_scale(rhs, BigRat(-1));
  mpz_class tail = 2 * binom(2 * n - 1, static_cast<int64_t>(n) + d - 1);
  rhs = rat_poly_sub(rhs, monomial(BigRat(tail), 0));

  return PolyCheck{lhs == rhs, lhs, rhs};
}

ValueCheck check_cor21(Cor21 which, uint32_t n, uint32_t d) {
  if (n < 1) raise(ErrorKind::BadParameter, "n must be >= 1");
  int64_t nd = static_cast<int64_t>(n) + static_cast<int64_t>(d);
  BigRat lhs, rhs;
  switch (which) {
  case Cor21::Sym3: {
    for (uint64_t k = 0; k < n; ++k) lhs += BigRat(binom(2 * k, k + d));
    lhs += sym3(d);
    for (int64_t k = 0; k < nd; ++k)
      rhs += BigRat(binom(2 * n, k)) * sym3(nd - k);
    break;
  }
  case Cor21::Fib: {
    for (uint64_t k = 0; k < n; ++k) {
      BigRat t(binom(2 * k, k + d));
      lhs += ((k + d) % 2 == 0) ? t : -t;
    }
    lhs += BigRat(fibonacci_exact(2 * static_cast<int64_t>(d)));
    for (int64_t k = 0; k < nd; ++k) {
      BigRat t = BigRat(binom(2 * n, k)) * BigRat(fibonacci_exact(2 * (nd - k)));
      rhs += (k % 2 == 0) ? t : -t;
    }
    break;
  }
  case Cor21::Luc: {
    for (uint64_t k = 1; k < n; ++k) {
      BigRat t = BigRat(d * binom(2 * k, k + d)) / BigRat(static_cast<unsigned long>(k));
      lhs += ((k + d) % 2 == 0) ? t : -t;
    }
    for (int64_t k = 0; k < nd; ++k) {
      BigRat t =
          BigRat(binom(2 * n, k)) * BigRat(lucas_number_exact(2 * (nd - k)));
      lhs += (k % 2 == 0) ? t : -t;
    }
    rhs = BigRat(lucas_number_exact(2 * static_cast<int64_t>(d)));
    mpz_class tail = 2 * binom(2 * n - 1, nd - 1);
    rhs += (nd % 2 == 0) ? BigRat(-tail) : BigRat(tail);
    if (d == 0) rhs -= 1;
    break;
  }
  }
  return ValueCheck{lhs == rhs, lhs, rhs};
}

Lemma41Check check_lemma41(uint32_t n, const std::vector<BigRat> &x_samples) {
  if (n < 1) raise(ErrorKind::BadParameter, "n must be >= 1");
  for (const auto &x : x_samples)
    if (x == 0) raise(ErrorKind::BadParameter, "sample points must be nonzero");

  // Both sides times x^{n-1}: coefficient of x^{n-1-k} is the k-th term.
  RatPoly lhs, rhs;
  for (uint64_t k = 1; k < n; ++k) {
    BigRat half_c = BigRat(binom(2 * k, k)) / BigRat(2 * k);
    lhs = rat_poly_add(lhs, monomial(half_c, n - 1 - k));
    BigRat alt;
    for (uint64_t d = 1; d < n; ++d) {
      BigRat t = BigRat(binom(2 * k, k + d)) / BigRat(static_cast<unsigned long>(k));
      alt += (d % 2 == 1) ? t : -t;
    }
    rhs = rat_poly_add(rhs, monomial(alt, n - 1 - k));
  }

  Lemma41Check out;
  out.equal_poly = (lhs == rhs);

  out.equal_samples = true;
  for (const auto &x : x_samples) {
    BigRat xpow = 1, f, g;
    for (uint64_t k = 1; k < n; ++k) {
      xpow *= x;
      BigRat base = BigRat(1) / (BigRat(static_cast<unsigned long>(k)) * xpow);
      f += BigRat(binom(2 * k, k)) / 2 * base;
      for (uint64_t d = 1; d < n; ++d) {
        BigRat t = BigRat(binom(2 * k, k + d)) * base;
        g += (d % 2 == 1) ? t : -t;
      }
    }
    if (f != g) out.equal_samples = false;
  }
  return out;
}

std::vector<BigRat> lemma41_default_samples(uint32_t n) {
  std::vector<BigRat> s;
  for (uint32_t j = 1; j <= n + 1; ++j) {
    s.emplace_back(static_cast<long>(j));
    s.emplace_back(-static_cast<long>(j));
  }
  s.push_back(BigRat(1) / 2);
  s.push_back(BigRat(-1) / 2);
  s.push_back(BigRat(1) / 3);
  s.push_back(BigRat(-1) / 3);
  return s;
}

StaverCheck check_staver(uint32_t n) {
  if (n < 1) raise(ErrorKind::BadParameter, "n must be >= 1");
  StaverCheck out;
  for (uint64_t k = 1; k <= n; ++k)
    out.sum += BigRat(binom(2 * k, k)) / BigRat(static_cast<unsigned long>(k));

  BigRat s1;
  for (uint64_t k = 1; k <= n; ++k)
    s1 += BigRat(1) / BigRat(binom(n - 1, k - 1) * binom(n - 1, k - 1));
  out.central_form =
      BigRat(2 * n + 1) / BigRat(3 * n * n) * BigRat(binom(2 * n, n)) * s1;

  BigRat s2;
  for (uint64_t k = 1; k <= n; ++k)
    s2 += BigRat(1) /
          (BigRat(k * k) * BigRat(binom(n, k) * binom(n, k)));
  out.square_form =
      BigRat(n + 1) / 3 * BigRat(binom(2 * n + 1, n)) * s2;

  out.equal = (out.sum == out.central_form) && (out.sum == out.square_form);
  return out;
}

} // namespace cbcongr
