#include <doctest.h>

#include <gmpxx.h>
#include <random>

#include "cbcongr/binomial.hpp"
#include "cbcongr/identities.hpp"

using namespace cbcongr;

namespace {

uint64_t mpz_mod_u64(const mpz_class &x, uint64_t m) {
  mpz_class r = x % static_cast<unsigned long>(m);
  if (r < 0) r += static_cast<unsigned long>(m);
  return r.get_ui();
}

// value of a p-unit-denominator rational mod p^k
uint64_t rational_mod(const mpq_class &v, uint64_t pk) {
  mpz_class m = static_cast<unsigned long>(pk);
  mpz_class den = v.get_den() % m, inv;
  REQUIRE(mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) != 0);
  mpz_class out = ((v.get_num() % m) * inv) % m;
  if (out < 0) out += m;
  return out.get_ui();
}

// exact Bernoulli numbers by the defining recurrence (B_1 = -1/2)
std::vector<mpq_class> bernoulli_exact(size_t n) {
  std::vector<mpq_class> b(n + 1);
  b[0] = 1;
  for (size_t m = 1; m <= n; ++m) {
    mpq_class sum = 0;
    for (size_t j = 0; j < m; ++j) sum += mpq_class(binom(m + 1, j)) * b[j];
    b[m] = -sum / mpq_class(static_cast<unsigned long>(m + 1));
  }
  return b;
}

} // namespace

TEST_CASE("stream tracks exact binomial coefficients") {
  for (uint64_t p : {2u, 3u, 5u, 7u}) {
    for (uint32_t a = 1; a <= 3; ++a) {
      PrimePower pp = PrimePower::make(p, a);
      for (int64_t d = -10; d <= 10; ++d) {
        uint64_t start = d < 0 ? static_cast<uint64_t>(-d) : static_cast<uint64_t>(d);
        BinomialStream s(p, a, d);
        for (uint64_t k = start; k <= 500; ++k) {
          mpz_class exact = binom(2 * k, static_cast<int64_t>(k) + d);
          REQUIRE(padic_to_residue(s.value(), a).value ==
                  mpz_mod_u64(exact, pp.modulus));
          s.advance();
        }
      }
    }
  }
}

TEST_CASE("stream value equals padic_from_int of the exact coefficient") {
  BinomialStream s(5, 3, 1);
  for (uint64_t k = 1; k <= 40; ++k) {
    mpz_class exact = binom(2 * k, k + 1);
    PadicTrunc direct = padic_from_int(exact.get_si(), 5, 3);
    PadicTrunc streamed = s.value();
    if (exact.fits_slong_p()) {
      REQUIRE(streamed.valuation == direct.valuation);
      REQUIRE(streamed.unit == direct.unit);
    }
    s.advance();
  }
}

TEST_CASE("central_binomial_mod") {
  PrimePower p5_3 = PrimePower::make(5, 3);
  CHECK(central_binomial_mod(4, 0, p5_3).value == 70);
  CHECK(central_binomial_mod(5, 0, p5_3).value == 2); // 252 mod 125
  CHECK(central_binomial_mod(1, 2, p5_3).value == 0); // C(2,3) = 0
  CHECK(central_binomial_mod(7, -7, p5_3).value == 1);
  CHECK(central_binomial_mod(3, -4, p5_3).value == 0);
}

TEST_CASE("Pascal consistency for shifted rows") {
  for (uint64_t p : {3u, 5u}) {
    for (uint32_t a = 1; a <= 2; ++a) {
      PrimePower pp = PrimePower::make(p, a);
      for (uint64_t n = 1; n <= 40; n += 3) {
        for (int64_t j = 0; j <= static_cast<int64_t>(2 * n + 2); ++j) {
          auto row = [&](uint64_t nn, int64_t jj) -> uint64_t {
            int64_t dd = jj - static_cast<int64_t>(nn);
            return central_binomial_mod(nn, dd, pp).value;
          };
          uint64_t lhs = row(n + 1, j);
          uint64_t rhs = addmod(row(n, j),
                                addmod(mulmod(2, row(n, j - 1), pp.modulus),
                                       row(n, j - 2), pp.modulus),
                                pp.modulus);
          REQUIRE(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("sum_binomial_over_mk examples and oracle") {
  CHECK(sum_binomial_over_mk(PrimePower::make(5, 1), 0, 1).value == 4); // 99 mod 5
  CHECK(sum_binomial_over_mk(PrimePower::make(3, 1), 3, 1).value == 0);
  CHECK(sum_binomial_over_mk(PrimePower::make(5, 1), 1, 1).value == 1); // 76 mod 5
  CHECK_THROWS_AS(sum_binomial_over_mk(PrimePower::make(5, 1), 0, 10), Error);

  for (uint64_t p : {2u, 3u, 5u, 7u}) {
    for (uint32_t a = 1; a <= 2; ++a) {
      PrimePower pp = PrimePower::make(p, a);
      for (int64_t m : {1, -1, 2, -2, 3, 7}) {
        if (reduce_signed(m, p) == 0) continue;
        uint64_t inv_m = invmod(m, p).value;
        for (uint64_t d = 0; d <= pp.modulus; d += (pp.modulus > 30 ? 7 : 1)) {
          // exact-integer oracle: binomials times modular inverse powers
          uint64_t w = 1;
          uint64_t oracle = 0;
          for (uint64_t k = 0; k < pp.modulus; ++k) {
            mpz_class c = binom(2 * k, static_cast<int64_t>(k + d));
            oracle = addmod(oracle, mulmod(mpz_mod_u64(c, p), w, p), p);
            w = mulmod(w, inv_m, p);
          }
          REQUIRE(sum_binomial_over_mk(pp, d, m).value == oracle);
        }
      }
    }
  }
}

TEST_CASE("sum_binomial_over_kmk examples and exact-rational oracle") {
  // d = 1, m = 1, p = 3: 1 + 4/2 = 3 == 0 (mod 3)
  CHECK(sum_binomial_over_kmk(PrimePower::make(3, 1), 1, 1).value == 0);
  // empty support at d = p^a
  CHECK(sum_binomial_over_kmk(PrimePower::make(5, 1), 5, 1).value == 0);
  // d = 2, m = 1, p = 3: 2 * C(4,4)/2 = 1 (mod 3)
  CHECK(sum_binomial_over_kmk(PrimePower::make(3, 1), 2, 1).value == 1);
  CHECK_THROWS_AS(sum_binomial_over_kmk(PrimePower::make(3, 1), 0, 1), Error);

  for (uint64_t p : {2u, 3u, 5u, 7u}) {
    for (uint32_t a = 1; a <= 2; ++a) {
      PrimePower pp = PrimePower::make(p, a);
      for (int64_t m : {1, -1, 2, -2, 5}) {
        if (reduce_signed(m, p) == 0) continue;
        for (uint64_t d = 1; d <= pp.modulus; d += (pp.modulus > 30 ? 5 : 1)) {
          mpq_class exact = 0;
          for (uint64_t k = std::max<uint64_t>(d, 1); k < pp.modulus; ++k) {
            mpq_class term(binom(2 * k, static_cast<int64_t>(k + d)));
            term /= mpq_class(static_cast<unsigned long>(k));
            mpq_class mpow = 1;
            for (uint64_t i = 1; i < k; ++i) mpow *= m;
            exact += term / mpow;
          }
          exact *= static_cast<long>(d);
          // the sum must be a p-adic integer; compare mod p
          mpz_class den = exact.get_den();
          if (mpz_mod_u64(den, p) == 0) {
            CHECK_THROWS_AS(sum_binomial_over_kmk(pp, d, m), Error);
          } else {
            REQUIRE(sum_binomial_over_kmk(pp, d, m).value == rational_mod(exact, p));
          }
        }
      }
    }
  }
}

TEST_CASE("theorem13_lhs anchors and exact oracle") {
  CHECK(theorem13_lhs(PrimePower::make(2, 1)).value == 2);  // mod 8
  CHECK(theorem13_lhs(PrimePower::make(3, 1)).value == 5);  // mod 27
  CHECK(theorem13_lhs(PrimePower::make(5, 1)).value == 50); // 175/6 mod 125

  for (uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (uint32_t a = 1; a <= 2; ++a) {
      PrimePower pp = PrimePower::make(p, a);
      mpq_class exact = 0;
      for (uint64_t k = 1; k < pp.modulus; ++k)
        exact += mpq_class(binom(2 * k, static_cast<int64_t>(k))) /
                 mpq_class(static_cast<unsigned long>(k));
      for (uint32_t i = 1; i < a; ++i) exact *= static_cast<long>(p);
      REQUIRE(theorem13_lhs(pp).value == rational_mod(exact, p * p * p));
    }
  }
}

TEST_CASE("bernoulli_mod_p") {
  CHECK(bernoulli_mod_p(0, 7).value == 1);
  CHECK(bernoulli_mod_p(4, 7).value == 3); // -1/30 mod 7
  CHECK(bernoulli_mod_p(2, 5).value == 1); // 1/6 mod 5
  CHECK_THROWS_AS(bernoulli_mod_p(6, 7), Error);  // (p-1) | n
  CHECK_THROWS_AS(bernoulli_mod_p(12, 5), Error); // (p-1) | n

  auto exact = bernoulli_exact(8);
  for (uint64_t p : primes_in(5, 50)) {
    for (uint64_t n : {2u, 4u, 6u, 8u}) {
      if (n % (p - 1) == 0) {
        CHECK_THROWS_AS(bernoulli_mod_p(n, p), Error);
        continue;
      }
      CHECK(bernoulli_mod_p(n, p).value == rational_mod(exact[n], p));
    }
  }
}

TEST_CASE("power sums vanish and Faulhaber reproduces them") {
  for (uint64_t p : primes_in(3, 40)) {
    for (uint64_t n = 1; n <= 12; ++n) {
      uint64_t s = 0;
      for (uint64_t k = 1; k < p; ++k)
        s = addmod(s, powmod_u64(k, n, p), p);
      if (n % (p - 1) != 0) CHECK(s == 0);
    }
  }
  auto b = bernoulli_exact(12);
  for (uint64_t n = 0; n <= 8; ++n) {
    for (uint64_t k = 1; k <= 12; ++k) {
      mpq_class direct = 0;
      for (uint64_t j = 0; j < k; ++j) {
        mpz_class jp;
        mpz_ui_pow_ui(jp.get_mpz_t(), j, n);
        direct += mpq_class(jp);
      }
      mpq_class faul = 0;
      for (uint64_t i = 0; i <= n; ++i) {
        mpz_class kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), k, n + 1 - i);
        faul += mpq_class(binom(n + 1, i)) * b[i] * mpq_class(kp);
      }
      faul /= mpq_class(static_cast<unsigned long>(n + 1));
      REQUIRE(direct == faul);
    }
  }
}

TEST_CASE("fermat_quotient") {
  CHECK(fermat_quotient(2, 7).value == 2); // (64-1)/7 = 9 == 2
  CHECK(fermat_quotient(1, 11).value == 0);
  CHECK(fermat_quotient(5, 3).value == 2); // (25-1)/3 = 8 == 2
  CHECK_THROWS_AS(fermat_quotient(14, 7), Error);

  // logarithm property q_p(ab) == q_p(a) + q_p(b) (mod p)
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 300; ++trial) {
    uint64_t p = std::vector<uint64_t>{3, 5, 7, 13, 101, 997}[rng() % 6];
    int64_t x = static_cast<int64_t>(rng() % 5000) - 2500;
    int64_t y = static_cast<int64_t>(rng() % 5000) - 2500;
    if (reduce_signed(x, p) == 0 || reduce_signed(y, p) == 0) continue;
    uint64_t lhs = fermat_quotient(x * y, p).value;
    uint64_t rhs = addmod(fermat_quotient(x, p).value, fermat_quotient(y, p).value, p);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("harmonic_table") {
  HarmonicTable t = harmonic_table(2, 125);
  CHECK(t.H(1) == 1);
  CHECK(t.H(2) == 64); // 1 + 63
  CHECK(harmonic_table(1, 97).H(1) == 1);
  CHECK(harmonic_table(4, 5).H(4) == 0); // 1 + 3 + 2 + 4 = 10
  CHECK_THROWS_AS(harmonic_table(5, 5), Error);
  // difference property H_k - H_{k-1} = 1/k
  HarmonicTable h = harmonic_table(96, 97 * 97);
  for (uint64_t k = 2; k <= 96; ++k)
    CHECK(submod(h.H(k), h.H(k - 1), h.modulus) ==
          invmod(static_cast<int64_t>(k), h.modulus).value);
}

TEST_CASE("alt_harmonic_partial") {
  CHECK(alt_harmonic_partial(3, 4, 5).value == 0); // 1 - inv2 + inv3
  CHECK(alt_harmonic_partial(1, 1, 3).value == 2); // 1 - inv2 = -1
  CHECK(alt_harmonic_partial(1, 6, 7).value == 1); // k <= 1
}
