#include "cbcongr/binomial.hpp"

#include <string>

namespace cbcongr {

UnitInverseTable UnitInverseTable::build(uint64_t p, uint32_t digits,
                                         uint64_t max_n) {
  UnitInverseTable t;
  t.p = p;
  t.digits = digits;
  t.modulus = checked_pow(p, digits);
  t.val.resize(max_n + 1, 0);
  t.unit.resize(max_n + 1, 1);
  t.unit_inv.resize(max_n + 1, 1);
  // Strip p-parts, then invert all units with one extended gcd.
  std::vector<uint64_t> prefix(max_n + 1, 1 % t.modulus);
  for (uint64_t j = 1; j <= max_n; ++j) {
    uint64_t u = j;
    uint32_t v = 0;
    while (u % p == 0) {
      u /= p;
      ++v;
    }
    t.val[j] = v;
    t.unit[j] = u % t.modulus;
    prefix[j] = mulmod(prefix[j - 1], t.unit[j], t.modulus);
  }
  uint64_t inv_all = invmod_u64(prefix[max_n], t.modulus);
  for (uint64_t j = max_n; j >= 1; --j) {
    t.unit_inv[j] = mulmod(inv_all, prefix[j - 1], t.modulus);
    inv_all = mulmod(inv_all, t.unit[j], t.modulus);
  }
  return t;
}

BinomialStream::BinomialStream(uint64_t p, uint32_t digits, int64_t d,
                               const UnitInverseTable *table)
    : p_(p), digits_(digits), modulus_(checked_pow(p, digits)),
      abs_d_(d < 0 ? static_cast<uint64_t>(-d) : static_cast<uint64_t>(d)),
      k_(abs_d_), val_(0), unit_(1 % modulus_), table_(table) {
  if (table_ && (table_->p != p_ || table_->digits < digits_))
    raise(ErrorKind::BadParameter, "inverse table does not cover this stream");
}

PadicTrunc BinomialStream::value() const {
  PadicTrunc v;
  v.p = p_;
  v.zero = false;
  v.valuation = val_;
  v.unit = unit_;
  v.digits = digits_;
  return v;
}

void BinomialStream::advance() {
  uint64_t k = k_;
  auto mul_unit = [&](uint64_t f) {
    while (f % p_ == 0) {
      f /= p_;
      ++val_;
    }
    unit_ = mulmod(unit_, f % modulus_, modulus_);
  };
  auto div_unit = [&](uint64_t f) {
    if (table_ && f < table_->val.size()) {
      val_ -= table_->val[f];
      unit_ = mulmod(unit_, table_->unit_inv[f] % modulus_, modulus_);
      return;
    }
    uint64_t u = f;
    while (u % p_ == 0) {
      u /= p_;
      --val_;
    }
    unit_ = mulmod(unit_, invmod_u64(u % modulus_, modulus_), modulus_);
  };
  mul_unit(2 * k + 1);
  mul_unit(2 * k + 2);
  div_unit(k + 1 + abs_d_);
  div_unit(k + 1 - abs_d_);
  k_ = k + 1;
}

Residue central_binomial_mod(uint64_t k, int64_t d, const PrimePower &pp) {
  uint64_t abs_d = d < 0 ? static_cast<uint64_t>(-d) : static_cast<uint64_t>(d);
  if (abs_d > k) return Residue{0, pp.modulus};
  BinomialStream s(pp.p, pp.exponent, d);
  while (s.k() < k) s.advance();
  return padic_to_residue(s.value(), pp.exponent);
}

Residue sum_binomial_over_mk(const PrimePower &pp, uint64_t d, int64_t m,
                             const UnitInverseTable *table) {
  uint64_t q = pp.modulus;
  if (d > q) raise(ErrorKind::BadParameter, "d out of [0, p^a]");
  if (reduce_signed(m, pp.p) == 0)
    raise(ErrorKind::BadParameter, "p divides m");
  uint64_t p = pp.p;
  uint64_t acc = 0;
  if (d >= q) return Residue{0, p}; // no supported term below p^a
  uint64_t inv_m = invmod(m, p).value;
  uint64_t w = powmod_u64(inv_m, d, p);
  BinomialStream s(p, 1, static_cast<int64_t>(d), table);
  for (uint64_t k = d; k < q; ++k) {
    if (s.valuation() == 0) acc = addmod(acc, mulmod(s.unit() % p, w, p), p);
    w = mulmod(w, inv_m, p);
    s.advance();
  }
  return Residue{acc, p};
}

Residue sum_binomial_over_kmk(const PrimePower &pp, uint64_t d, int64_t m,
                              const UnitInverseTable *table) {
  if (d < 1 || d > pp.modulus)
    raise(ErrorKind::BadParameter, "d out of [1, p^a]");
  if (reduce_signed(m, pp.p) == 0)
    raise(ErrorKind::BadParameter, "p divides m");
  uint64_t p = pp.p;
  uint64_t q = pp.modulus;
  // Accumulate p^{a-1} * sum exactly, windowed mod p^{a+1}: every term of the
  // sum has valuation >= -(a-1), so the shifted terms are p-adic integers.
  uint32_t shift = pp.exponent - 1;
  uint32_t window = pp.exponent + 1;
  uint64_t mw = checked_pow(p, window);
  uint64_t acc = 0;
  if (d < q) {
    uint64_t inv_m = invmod(m, mw).value;
    uint64_t w = powmod_u64(inv_m, d - 1, mw); // m^{-(k-1)} at k = d
    BinomialStream s(p, window + 1, static_cast<int64_t>(d), table);
    for (uint64_t k = d; k < q; ++k) {
      uint64_t u = k;
      uint32_t vk = 0;
      while (u % p == 0) {
        u /= p;
        ++vk;
      }
      int64_t e = static_cast<int64_t>(shift) + s.valuation() - vk;
      if (e < 0)
        raise(ErrorKind::NonIntegralSum,
              "term at k = " + std::to_string(k) + " below scale");
      if (e < window) {
        uint64_t inv_u = table && k < table->unit_inv.size()
                             ? table->unit_inv[k] % mw
                             : invmod_u64(u % mw, mw);
        uint64_t term = mulmod(s.unit() % mw, inv_u, mw);
        term = mulmod(term, w, mw);
        term = mulmod(term, checked_pow(p, static_cast<uint32_t>(e)), mw);
        acc = addmod(acc, term, mw);
      }
      w = mulmod(w, inv_m, mw);
      s.advance();
    }
  }
  uint64_t scaled = mulmod(reduce_signed(static_cast<int64_t>(d), mw), acc, mw);
  uint64_t ps = checked_pow(p, shift);
  if (scaled % ps != 0)
    raise(ErrorKind::NonIntegralSum,
          "weighted sum has negative valuation at p = " + std::to_string(p));
  return Residue{(scaled / ps) % p, p};
}

Residue theorem13_lhs(const PrimePower &pp) {
  uint64_t p = pp.p;
  uint64_t q = pp.modulus;
  uint64_t m3 = checked_pow(p, 3);
  uint32_t shift = pp.exponent - 1;
  // Working precision a + 4: losing up to a-1 digits to 1/k still leaves the
  // three digits the modulus needs.
  uint32_t digits = pp.exponent + 4;
  UnitInverseTable table = UnitInverseTable::build(p, digits, 2 * q);
  BinomialStream s(p, digits, 0, &table);
  s.advance(); // k = 1
  uint64_t acc = 0;
  for (uint64_t k = 1; k < q; ++k) {
    int64_t e = static_cast<int64_t>(shift) + s.valuation() - table.val[k];
    if (e < 0)
      raise(ErrorKind::NegativeValuation,
            "p^{a-1} C(2k,k)/k not integral at k = " + std::to_string(k));
    if (e < 3) {
      uint64_t term = mulmod(s.unit() % m3, table.unit_inv[k] % m3, m3);
      term = mulmod(term, checked_pow(p, static_cast<uint32_t>(e)), m3);
      acc = addmod(acc, term, m3);
    }
    s.advance();
  }
  return Residue{acc, m3};
}

Residue bernoulli_mod_p(uint64_t n, uint64_t p) {
  if (!is_prime(p)) raise(ErrorKind::BadParameter, std::to_string(p) + " is not prime");
  if (n == 0) return Residue{1 % p, p};
  if (n % (p - 1) == 0)
    raise(ErrorKind::DenominatorDivisible,
          "(p-1) | n: B_" + std::to_string(n) + " has denominator divisible by " +
              std::to_string(p));
  // The recurrence below only reaches indices < p-1 (larger ones pass
  // through Bernoulli numbers with p in the denominator), so fold n down
  // with Kummer's congruence B_n/n == B_m/m (mod p) for n == m mod (p-1).
  uint64_t m = n % (p - 1);
  if (m != n && m % 2 == 1) return Residue{0, p}; // odd index > 1: B_n = 0
  std::vector<uint64_t> b(m + 1, 0);
  b[0] = 1 % p;
  std::vector<uint64_t> inv(m + 2, 0);
  for (uint64_t i = 1; i <= m + 1; ++i) inv[i] = invmod(static_cast<int64_t>(i), p).value;
  for (uint64_t r = 1; r <= m; ++r) {
    // row of C(r+1, j) mod p, built multiplicatively
    uint64_t c = 1 % p;
    uint64_t sum = 0;
    for (uint64_t j = 0; j < r; ++j) {
      sum = addmod(sum, mulmod(c, b[j], p), p);
      c = mulmod(c, mulmod((r + 1 - j) % p, inv[j + 1], p), p);
    }
    b[r] = mulmod(submod(0, sum, p), inv[r + 1], p);
  }
  if (m == n) return Residue{b[m], p};
  return Residue{mulmod(n % p, mulmod(inv[m], b[m], p), p), p};
}

Residue fermat_quotient(int64_t base, uint64_t p) {
  if (p < 3 || !is_prime(p))
    raise(ErrorKind::BadParameter, "p must be an odd prime");
  if (reduce_signed(base, p) == 0)
    raise(ErrorKind::BaseDivisible, "p divides the base");
  uint64_t p2 = checked_pow(p, 2);
  uint64_t t = powmod(base, p - 1, p2).value;
  // Fermat's little theorem guarantees p | (t - 1).
  return Residue{((t - 1) / p) % p, p};
}

HarmonicTable harmonic_table(uint64_t n, uint64_t modulus) {
  check_modulus(modulus);
  HarmonicTable t;
  t.modulus = modulus;
  t.values.reserve(n);
  uint64_t acc = 0;
  for (uint64_t k = 1; k <= n; ++k) {
    acc = addmod(acc, invmod(static_cast<int64_t>(k), modulus).value, modulus);
    t.values.push_back(acc);
  }
  return t;
}

Residue alt_harmonic_partial(uint64_t num, uint64_t den, uint64_t p) {
  if (num == 0 || den == 0) raise(ErrorKind::BadParameter, "bound must be positive");
  uint64_t kmax = (num * p - 1) / den; // largest k with k < (num/den) p
  uint64_t acc = 0;
  for (uint64_t k = 1; k <= kmax; ++k) {
    uint64_t inv = invmod(static_cast<int64_t>(k), p).value;
    acc = (k % 2 == 1) ? addmod(acc, inv, p) : submod(acc, inv, p);
  }
  return Residue{acc, p};
}

} // namespace cbcongr
