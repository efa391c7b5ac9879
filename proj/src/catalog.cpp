#include "cbcongr/catalog.hpp"

#include <algorithm>

#include "cbcongr/padic.hpp"
#include "cbcongr/sequences.hpp"

namespace cbcongr {

uint64_t apply_modulus_rule(ModulusRule rule, uint64_t p) {
  switch (rule) {
  case ModulusRule::P: return checked_pow(p, 1);
  case ModulusRule::P2: return checked_pow(p, 2);
  case ModulusRule::P3: return checked_pow(p, 3);
  case ModulusRule::P4: return checked_pow(p, 4);
  }
  raise(ErrorKind::BadParameter, "bad modulus rule");
}

const char *to_string(ModulusRule rule) {
  switch (rule) {
  case ModulusRule::P: return "p";
  case ModulusRule::P2: return "p^2";
  case ModulusRule::P3: return "p^3";
  case ModulusRule::P4: return "p^4";
  }
  return "?";
}

const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::Pass: return "pass";
  case Verdict::Fail: return "fail";
  case Verdict::Error: return "error";
  case Verdict::ConjectureFail: return "CONJECTURE-FAIL";
  }
  return "?";
}

bool pcond_ok(PCond cond, uint64_t p) {
  switch (cond) {
  case PCond::Any: return true;
  case PCond::Odd: return p != 2;
  case PCond::OddNot3: return p != 2 && p != 3;
  case PCond::OddNot5: return p != 2 && p != 5;
  case PCond::Gt3: return p > 3;
  }
  return false;
}

const char *pcond_text(PCond cond) {
  switch (cond) {
  case PCond::Any: return "any prime";
  case PCond::Odd: return "p != 2";
  case PCond::OddNot3: return "p != 2, 3";
  case PCond::OddNot5: return "p != 2, 5";
  case PCond::Gt3: return "p > 3";
  }
  return "?";
}

const UnitInverseTable *EvalContext::table(uint64_t p, uint32_t digits,
                                           uint64_t max_n) {
  auto key = std::make_pair(p, digits);
  auto it = tables_.find(key);
  if (it != tables_.end() && it->second.unit.size() > max_n) return &it->second;
  UnitInverseTable built = UnitInverseTable::build(p, digits, max_n);
  auto [pos, _] = tables_.insert_or_assign(key, std::move(built));
  return &pos->second;
}

namespace {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct SplitMix {
  uint64_t state;
  uint64_t next() { return mix64(state += 0x9e3779b97f4a7c15ull); }
};

uint64_t fnv64(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return h;
}

// (-1)^e mod m, for any sign of e.
uint64_t sign_pm(int64_t e, uint64_t m) {
  return (e % 2 == 0) ? 1 % m : m - 1 % m;
}

// j^a for a Jacobi value j in {-1, 0, 1}.
int jacobi_pow(int j, uint32_t a) {
  if (j == 0) return 0;
  if (j == -1 && (a & 1)) return -1;
  return 1;
}

// (m(m-4) | p)^a, the symbol steering (1.5)/(1.6).
int eps_md(const Params &pr) {
  __int128 delta = static_cast<__int128>(pr.m) * (pr.m - 4);
  int64_t dm = static_cast<int64_t>(delta % static_cast<__int128>(pr.p));
  return jacobi_pow(jacobi(dm, pr.p), pr.a);
}

// (p^a | 5) = (p | 5)^a.
int eps5(uint64_t p, uint32_t a) { return jacobi_pow(jacobi(static_cast<int64_t>(p), 5), a); }

PrimePower pp_of(const Params &pr) { return PrimePower::make(pr.p, pr.a); }

// sum_{k=1}^{p-1} C(2k,k)/k * w1 * ratio^{k-1} mod p.
Residue central_weighted_sum(uint64_t p, uint64_t w1, uint64_t ratio,
                             EvalContext &ctx) {
  const UnitInverseTable *t = ctx.table(p, 1, 2 * p);
  BinomialStream s(p, 1, 0, t);
  s.advance();
  uint64_t acc = 0;
  uint64_t w = w1 % p;
  for (uint64_t k = 1; k < p; ++k) {
    if (s.valuation() == 0) {
      uint64_t term = mulmod(s.unit() % p, t->unit_inv[k] % p, p);
      acc = addmod(acc, mulmod(term, w, p), p);
    }
    w = mulmod(w, ratio, p);
    s.advance();
  }
  return Residue{acc, p};
}

// sum_{k=1}^{p-1} (-1)^k C(2k,k)/(k m^{k-1}) mod p^2.
uint64_t alt_central_kmk_p2(uint64_t p, int64_t m, EvalContext &ctx) {
  uint64_t p2 = checked_pow(p, 2);
  const UnitInverseTable *t = ctx.table(p, 2, 2 * p);
  BinomialStream s(p, 2, 0, t);
  s.advance();
  uint64_t inv_m = invmod(m, p2).value;
  uint64_t w = 1 % p2;
  uint64_t acc = 0;
  for (uint64_t k = 1; k < p; ++k) {
    uint64_t c = 0;
    if (s.valuation() < 2)
      c = mulmod(s.unit() % p2,
                 checked_pow(p, static_cast<uint32_t>(s.valuation())), p2);
    uint64_t term = mulmod(c, t->unit_inv[k] % p2, p2);
    term = mulmod(term, w, p2);
    acc = (k % 2 == 1) ? submod(acc, term, p2) : addmod(acc, term, p2);
    w = mulmod(w, inv_m, p2);
    s.advance();
  }
  return acc;
}

// sum_{k=0}^{p^a-1} (-1)^k C(2k,k) mod p^3.
Residue alternating_central_sum_p3(const Params &pr, EvalContext &ctx) {
  uint64_t p = pr.p;
  uint64_t q = checked_pow(p, pr.a);
  uint64_t p3 = checked_pow(p, 3);
  const UnitInverseTable *t = ctx.table(p, 3, 2 * q);
  BinomialStream s(p, 3, 0, t);
  uint64_t acc = 1 % p3; // k = 0 term
  for (uint64_t k = 1; k < q; ++k) {
    s.advance();
    uint64_t c = 0;
    if (s.valuation() < 3)
      c = mulmod(s.unit() % p3,
                 checked_pow(p, static_cast<uint32_t>(s.valuation())), p3);
    acc = (k % 2 == 1) ? submod(acc, c, p3) : addmod(acc, c, p3);
  }
  return Residue{acc, p3};
}

// C(2 p^a - 1, p^a - 1) mod p^digits via the unit product of (p^a+j)/j.
Residue binom_2q1_mod(uint64_t p, uint32_t a, uint32_t digits) {
  uint64_t mod = checked_pow(p, digits);
  uint64_t q = checked_pow(p, a);
  uint64_t acc = 1 % mod;
  for (uint64_t j = 1; j < q; ++j) {
    uint64_t unit = j, top = q + j;
    while (unit % p == 0) { // v_p(q+j) = v_p(j) since v_p(j) < a
      unit /= p;
      top /= p;
    }
    acc = mulmod(acc, top % mod, mod);
    acc = mulmod(acc, invmod_u64(unit % mod, mod), mod);
  }
  return Residue{acc, mod};
}

// F_{p-(p|5)}/p mod p; the divisibility p | F_{p-(p|5)} is asserted.
Residue fib_quotient(uint64_t p) {
  int e = jacobi(static_cast<int64_t>(p), 5);
  uint64_t p2 = checked_pow(p, 2);
  Residue f = named_sequence(SeqName::F, static_cast<int64_t>(p) - e, p2);
  return quotient_by_p(f, p);
}

Residue pell_quotient(uint64_t p) {
  int e = jacobi(2, p);
  uint64_t p2 = checked_pow(p, 2);
  Residue v = named_sequence(SeqName::P, static_cast<int64_t>(p) - e, p2);
  return quotient_by_p(v, p);
}

Residue s_quotient(uint64_t p) {
  int e = jacobi(3, p);
  uint64_t p2 = checked_pow(p, 2);
  Residue v = named_sequence(SeqName::S, (static_cast<int64_t>(p) - e) / 2, p2);
  return quotient_by_p(v, p);
}

// (m^p - V_p(m))/p mod p, with V_p(m) = v_p(m, -m).
Residue vpm_quotient(uint64_t p, int64_t m) {
  uint64_t p2 = checked_pow(p, 2);
  uint64_t mp = powmod(m, p, p2).value;
  uint64_t vp = lucas_pair_mod({m, -m}, p, p2).v.value;
  return quotient_by_p(Residue{submod(mp, vp, p2), p2}, p);
}

uint64_t bern_pm3(uint64_t p) { return bernoulli_mod_p(p - 3, p).value; }

Residue u_at(int64_t m, int64_t idx, uint64_t p) {
  return lucas_u_at({m - 2, 1}, idx, p);
}

Residue v_at(int64_t m, int64_t idx, uint64_t p) {
  return lucas_v_at({m - 2, 1}, idx, p);
}

int64_t qpow_i(const Params &pr) {
  return static_cast<int64_t>(checked_pow(pr.p, pr.a));
}

std::vector<CongruenceSpec> build_registry() {
  std::vector<CongruenceSpec> reg;
  auto add = [&reg](CongruenceSpec e) { reg.push_back(std::move(e)); };

  add({"1.1",
       "sum_{k<p} C(2k,k+d) == ((p-d)|3) (mod p)",
       ModulusRule::P, false, ParamUse{.a = false, .d = true, .d_min = 0, .m = false, .ab = false},
       PCond::Any, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         return sum_binomial_over_mk(pp_of(pr), static_cast<uint64_t>(pr.d), 1,
                                     ctx.table(pr.p, 1, 2 * pr.p));
       },
       [](const Params &pr, EvalContext &) {
         return make_residue(jacobi(static_cast<int64_t>(pr.p) - pr.d, 3), pr.p);
       }});

  add({"1.3",
       "sum_{k<p^a} C(2k,k+d)/m^k == u_{p^a-d}(m-2) (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 0, .m = true, .ab = false},
       PCond::Any, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         PrimePower pp = pp_of(pr);
         return sum_binomial_over_mk(pp, static_cast<uint64_t>(pr.d), pr.m,
                                     ctx.table(pr.p, 1, 2 * pp.modulus));
       },
       [](const Params &pr, EvalContext &) {
         return u_at(pr.m, qpow_i(pr) - pr.d, pr.p);
       }});

  add({"1.4",
       "d sum_{0<k<p^a} C(2k,k+d)/(k m^(k-1)) == 2(-1)^d + v_{p^a-d}(m-2) (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 1, .m = true, .ab = false},
       PCond::Any, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         PrimePower pp = pp_of(pr);
         return sum_binomial_over_kmk(pp, static_cast<uint64_t>(pr.d), pr.m,
                                      ctx.table(pr.p, pp.exponent + 2, 2 * pp.modulus));
       },
       [](const Params &pr, EvalContext &) {
         uint64_t two = mulmod(2 % pr.p, sign_pm(pr.d, pr.p), pr.p);
         return Residue{addmod(two, v_at(pr.m, qpow_i(pr) - pr.d, pr.p).value, pr.p), pr.p};
       }});

  add({"1.5",
       "sum_{k<p^a} C(2k,k+d)/m^k == -u_{d-e}(m-2), e = (m(m-4)|p^a) (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 0, .m = true, .ab = false},
       PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         PrimePower pp = pp_of(pr);
         return sum_binomial_over_mk(pp, static_cast<uint64_t>(pr.d), pr.m,
                                     ctx.table(pr.p, 1, 2 * pp.modulus));
       },
       [](const Params &pr, EvalContext &) {
         Residue u = u_at(pr.m, pr.d - eps_md(pr), pr.p);
         return Residue{submod(0, u.value, pr.p), pr.p};
       }});

  add({"1.6",
       "d sum_{0<k<p^a} C(2k,k+d)/(k m^(k-1)) == 2(-1)^d + v_{d-e}(m-2) (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 1, .m = true, .ab = false},
       PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         PrimePower pp = pp_of(pr);
         return sum_binomial_over_kmk(pp, static_cast<uint64_t>(pr.d), pr.m,
                                      ctx.table(pr.p, pp.exponent + 2, 2 * pp.modulus));
       },
       [](const Params &pr, EvalContext &) {
         uint64_t two = mulmod(2 % pr.p, sign_pm(pr.d, pr.p), pr.p);
         Residue v = v_at(pr.m, pr.d - eps_md(pr), pr.p);
         return Residue{addmod(two, v.value, pr.p), pr.p};
       }});

  add({"1.7",
       "sum_{k<p^a} (-1)^k C(2k,k+d) == (-1)^(d-[p!=5]) F_{2(d-(p^a|5))} (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 0, .m = false, .ab = false},
       PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         PrimePower pp = pp_of(pr);
         return sum_binomial_over_mk(pp, static_cast<uint64_t>(pr.d), -1,
                                     ctx.table(pr.p, 1, 2 * pp.modulus));
       },
       [](const Params &pr, EvalContext &) {
         int e = eps5(pr.p, pr.a);
         uint64_t f = named_sequence(SeqName::F, 2 * (pr.d - e), pr.p).value;
         uint64_t sign = sign_pm(pr.d - (pr.p != 5 ? 1 : 0), pr.p);
         return Residue{mulmod(sign, f, pr.p), pr.p};
       }});

  add({"1.8",
       "d sum_{0<k<p^a} (-1)^k C(2k,k+d)/k == (-1)^(d-[p=5]) L_{2(d-(p^a|5))} - 2(-1)^d (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 1, .m = false, .ab = false},
       PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         // the kernel computes d sum C/(k (-1)^{k-1}) = -(d sum (-1)^k C/k)
         PrimePower pp = pp_of(pr);
         Residue s = sum_binomial_over_kmk(pp, static_cast<uint64_t>(pr.d), -1,
                                           ctx.table(pr.p, pp.exponent + 2, 2 * pp.modulus));
         return Residue{submod(0, s.value, pr.p), pr.p};
       },
       [](const Params &pr, EvalContext &) {
         int e = eps5(pr.p, pr.a);
         uint64_t l = named_sequence(SeqName::L, 2 * (pr.d - e), pr.p).value;
         uint64_t sign = sign_pm(pr.d - (pr.p == 5 ? 1 : 0), pr.p);
         uint64_t two = mulmod(2 % pr.p, sign_pm(pr.d, pr.p), pr.p);
         return Residue{submod(mulmod(sign, l, pr.p), two, pr.p), pr.p};
       }});

  add({"1.9",
       "sum_{k<p^a} C(2k,k+d)/2^k == 0 or +-1 by (p^a-d) mod 4 (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 0, .m = false, .ab = false},
       PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         PrimePower pp = pp_of(pr);
         return sum_binomial_over_mk(pp, static_cast<uint64_t>(pr.d), 2,
                                     ctx.table(pr.p, 1, 2 * pp.modulus));
       },
       [](const Params &pr, EvalContext &) {
         int64_t r = (qpow_i(pr) - pr.d) % 4;
         if (r % 2 == 0) return make_residue(0, pr.p);
         return make_residue(r == 1 ? 1 : -1, pr.p);
       }});

  add({"1.10",
       "d sum_{0<k<p^a} C(2k,k+d)/(k 2^k) - (-1)^d == 0 or +-1 by (p^a-d) mod 4 (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 1, .m = false, .ab = false},
       PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         PrimePower pp = pp_of(pr);
         Residue s = sum_binomial_over_kmk(pp, static_cast<uint64_t>(pr.d), 2,
                                           ctx.table(pr.p, pp.exponent + 2, 2 * pp.modulus));
         uint64_t half = mulmod(s.value, invmod_u64(2, pr.p), pr.p);
         return Residue{submod(half, sign_pm(pr.d, pr.p), pr.p), pr.p};
       },
       [](const Params &pr, EvalContext &) {
         int64_t r = (qpow_i(pr) - pr.d) % 4;
         if (r % 2 == 1) return make_residue(0, pr.p);
         return make_residue(r == 0 ? 1 : -1, pr.p);
       }});

  add({"R1.1a",
       "sum_{k<p^a} C(2k,k+d) == ((p^a-d)|3) (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 0, .m = false, .ab = false},
       PCond::Any, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         PrimePower pp = pp_of(pr);
         return sum_binomial_over_mk(pp, static_cast<uint64_t>(pr.d), 1,
                                     ctx.table(pr.p, 1, 2 * pp.modulus));
       },
       [](const Params &pr, EvalContext &) {
         return make_residue(jacobi(qpow_i(pr) - pr.d, 3), pr.p);
       }});

  add({"R1.1b",
       "d sum_{0<k<p^a} C(2k,k+d)/k == 2(-1)^d + 2 or 2(-1)^d - 1 by 3 | (p^a-d) (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 1, .m = false, .ab = false},
       PCond::Any, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         PrimePower pp = pp_of(pr);
         return sum_binomial_over_kmk(pp, static_cast<uint64_t>(pr.d), 1,
                                      ctx.table(pr.p, pp.exponent + 2, 2 * pp.modulus));
       },
       [](const Params &pr, EvalContext &) {
         uint64_t two = mulmod(2 % pr.p, sign_pm(pr.d, pr.p), pr.p);
         if ((qpow_i(pr) - pr.d) % 3 == 0)
           return Residue{addmod(two, 2 % pr.p, pr.p), pr.p};
         return Residue{submod(two, 1 % pr.p, pr.p), pr.p};
       }});

  add({"1.11",
       "(1/2) sum_{0<k<p} (-1)^k C(2k,k)/(k m^(k-1)) == (m^p - V_p(m))/p (mod p)",
       ModulusRule::P, false, ParamUse{.a = false, .d = false, .d_min = 0, .m = true, .ab = false},
       PCond::Any, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t x = alt_central_kmk_p2(pr.p, pr.m, ctx);
         if (pr.p == 2) {
           if (x % 2 != 0)
             raise(ErrorKind::NotDivisible, "sum not halvable at p = 2");
           return Residue{(x / 2) % 2, 2};
         }
         return Residue{mulmod(x % pr.p, invmod_u64(2, pr.p), pr.p), pr.p};
       },
       [](const Params &pr, EvalContext &) { return vpm_quotient(pr.p, pr.m); }});

  add({"1.12",
       "sum_{0<k<p} C(2k,k)/(k 2^(k-1)) == 2 q_p(2) (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t inv2 = invmod_u64(2, pr.p);
         return central_weighted_sum(pr.p, 1, inv2, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t q2 = fermat_quotient(2, pr.p).value;
         return Residue{addmod(q2, q2, pr.p), pr.p};
       }});

  add({"1.12b",
       "sum_{0<k<p} C(2k,k)/(k 4^k) == 2 q_p(2) (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t inv4 = invmod_u64(4 % pr.p, pr.p);
         return central_weighted_sum(pr.p, inv4, inv4, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t q2 = fermat_quotient(2, pr.p).value;
         return Residue{addmod(q2, q2, pr.p), pr.p};
       }});

  add({"1.13",
       "sum_{0<k<p} C(2k,k)/(k 3^(k-1)) == 3 q_p(3) (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::OddNot3, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t inv3 = invmod_u64(3 % pr.p, pr.p);
         return central_weighted_sum(pr.p, 1, inv3, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t q3 = fermat_quotient(3, pr.p).value;
         return Residue{mulmod(3 % pr.p, q3, pr.p), pr.p};
       }});

  add({"1.14",
       "sum_{0<k<p} (-1)^k C(2k,k)/k == -5 F_{p-(p|5)}/p (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::OddNot5, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         return central_weighted_sum(pr.p, pr.p - 1, pr.p - 1, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t f = fib_quotient(pr.p).value;
         return Residue{submod(0, mulmod(5 % pr.p, f, pr.p), pr.p), pr.p};
       }});

  add({"1.15",
       "sum_{0<k<p} (-1)^k C(2k,k)/(k 5^k) == q_p(5) - 6 F_{p-(p|5)}/p (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::OddNot5, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t w = submod(0, invmod_u64(5 % pr.p, pr.p), pr.p);
         return central_weighted_sum(pr.p, w, w, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t q5 = fermat_quotient(5, pr.p).value;
         uint64_t f = fib_quotient(pr.p).value;
         return Residue{submod(q5, mulmod(6 % pr.p, f, pr.p), pr.p), pr.p};
       }});

  add({"1.16",
       "sum_{0<k<p} C(2k,k)/(k 5^k) == q_p(5) - F_{p-(p|5)}/p (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::OddNot5, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t w = invmod_u64(5 % pr.p, pr.p);
         return central_weighted_sum(pr.p, w, w, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t q5 = fermat_quotient(5, pr.p).value;
         uint64_t f = fib_quotient(pr.p).value;
         return Residue{submod(q5, f, pr.p), pr.p};
       }});

  add({"1.17a",
       "sum_{0<k<p} (-1)^k C(2k,k)/(k 4^k) == 2 q_p(2) - 4 P_{p-(2|p)}/p (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t w = submod(0, invmod_u64(4 % pr.p, pr.p), pr.p);
         return central_weighted_sum(pr.p, w, w, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t q2 = fermat_quotient(2, pr.p).value;
         uint64_t pq = pell_quotient(pr.p).value;
         return Residue{submod(addmod(q2, q2, pr.p), mulmod(4 % pr.p, pq, pr.p), pr.p), pr.p};
       }});

  add({"1.17b",
       "sum_{0<k<p} (-1)^k C(2k,k)/(k 4^k) == 2 sum_{0<k<3p/4} (-1)^(k-1)/k (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t w = submod(0, invmod_u64(4 % pr.p, pr.p), pr.p);
         return central_weighted_sum(pr.p, w, w, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t h = alt_harmonic_partial(3, 4, pr.p).value;
         return Residue{addmod(h, h, pr.p), pr.p};
       }});

  add({"1.18a",
       "sum_{0<k<p} (-1)^k C(2k,k)/(k 2^k) == q_p(2) - 6 (2|p) S_{(p-(3|p))/2}/p (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Gt3, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t w = submod(0, invmod_u64(2, pr.p), pr.p);
         return central_weighted_sum(pr.p, w, w, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t q2 = fermat_quotient(2, pr.p).value;
         uint64_t sq = mulmod(6 % pr.p, s_quotient(pr.p).value, pr.p);
         if (jacobi(2, pr.p) == 1) return Residue{submod(q2, sq, pr.p), pr.p};
         return Residue{addmod(q2, sq, pr.p), pr.p};
       }});

  add({"1.18b",
       "sum_{0<k<p} (-1)^k C(2k,k)/(k 2^k) == sum_{0<k<5p/6} (-1)^(k-1)/k (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Gt3, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t w = submod(0, invmod_u64(2, pr.p), pr.p);
         return central_weighted_sum(pr.p, w, w, ctx);
       },
       [](const Params &pr, EvalContext &) { return alt_harmonic_partial(5, 6, pr.p); }});

  add({"1.19",
       "sum_{0<k<p} C(2k,k)/(k 6^k) == q_p(2) + q_p(3) - 2 (2|p) S_{(p-(3|p))/2}/p (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Gt3, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         uint64_t w = invmod_u64(6 % pr.p, pr.p);
         return central_weighted_sum(pr.p, w, w, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t q2 = fermat_quotient(2, pr.p).value;
         uint64_t q3 = fermat_quotient(3, pr.p).value;
         uint64_t sq = mulmod(2 % pr.p, s_quotient(pr.p).value, pr.p);
         uint64_t base = addmod(q2, q3, pr.p);
         if (jacobi(2, pr.p) == 1) return Residue{submod(base, sq, pr.p), pr.p};
         return Residue{addmod(base, sq, pr.p), pr.p};
       }});

  add({"1.20",
       "p^(a-1) sum_{0<k<p^a} C(2k,k)/k == 2 [p=2] | 5 [p=3] | (8/9) p^2 B_{p-3} (mod p^3)",
       ModulusRule::P3, false, ParamUse{.a = true, .d = false, .d_min = 0, .m = false, .ab = false},
       PCond::Any,
       [](const Params &pr, std::string *why) {
         // stream precision a+4 must fit the residue bound
         unsigned __int128 acc = 1;
         for (uint32_t i = 0; i < pr.a + 4; ++i) {
           acc *= pr.p;
           if (acc > kMaxModulus) {
             if (why) *why = "working precision p^(a+4) exceeds 2^63";
             return false;
           }
         }
         return true;
       },
       [](const Params &pr, EvalContext &) { return theorem13_lhs(pp_of(pr)); },
       [](const Params &pr, EvalContext &) {
         uint64_t p3 = checked_pow(pr.p, 3);
         if (pr.p == 2) return Residue{2, p3};
         if (pr.p == 3) return Residue{5, p3};
         uint64_t b = bern_pm3(pr.p);
         uint64_t c = mulmod(8 % p3, invmod_u64(9 % p3, p3), p3);
         uint64_t p2 = mulmod(pr.p, pr.p, p3);
         return Residue{mulmod(c, mulmod(p2, b, p3), p3), p3};
       }});

  add({"C1.1",
       "sum_{k<p^a} (-1)^k C(2k,k) == (p^a|5)(1 - 2 F_{p^a-(p^a|5)}) (mod p^3)",
       ModulusRule::P3, true, ParamUse{.a = true, .d = false, .d_min = 0, .m = false, .ab = false},
       PCond::OddNot5, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         return alternating_central_sum_p3(pr, ctx);
       },
       [](const Params &pr, EvalContext &) {
         uint64_t p3 = checked_pow(pr.p, 3);
         int e = eps5(pr.p, pr.a);
         uint64_t f = named_sequence(SeqName::F, qpow_i(pr) - e, p3).value;
         uint64_t t = submod(1 % p3, addmod(f, f, p3), p3);
         if (e == 1) return Residue{t, p3};
         return Residue{submod(0, t, p3), p3};
       }});

  add({"L3.1",
       "B^d u_{p^a-d}(A,B) == -c(A,B) u_{d-(D|p^a)}(A,B), D = A^2 - 4B (mod p)",
       ModulusRule::P, false, ParamUse{.a = true, .d = true, .d_min = 0, .m = false, .ab = true},
       PCond::Odd,
       [](const Params &pr, std::string *why) {
         if (pr.B == 0) {
           if (why) *why = "B must be nonzero";
           return false;
         }
         __int128 delta = static_cast<__int128>(pr.A) * pr.A - 4 * static_cast<__int128>(pr.B);
         int64_t dm = static_cast<int64_t>(delta % static_cast<__int128>(pr.p));
         int e = jacobi_pow(jacobi(dm, pr.p), pr.a);
         if (pr.d == 0 && e == 1 && reduce_signed(pr.B, pr.p) == 0) {
           if (why) *why = "u_{-1} = -1/B needs p not dividing B";
           return false;
         }
         return true;
       },
       [](const Params &pr, EvalContext &) {
         uint64_t bd = powmod(pr.B, static_cast<uint64_t>(pr.d), pr.p).value;
         Residue u = lucas_u_at({pr.A, pr.B}, qpow_i(pr) - pr.d, pr.p);
         return Residue{mulmod(bd, u.value, pr.p), pr.p};
       },
       [](const Params &pr, EvalContext &) {
         __int128 delta = static_cast<__int128>(pr.A) * pr.A - 4 * static_cast<__int128>(pr.B);
         int64_t dm = static_cast<int64_t>(delta % static_cast<__int128>(pr.p));
         int e = jacobi_pow(jacobi(dm, pr.p), pr.a);
         uint64_t c;
         if (e == 0)
           c = mulmod(reduce_signed(pr.A, pr.p), invmod_u64(2, pr.p), pr.p);
         else if (e == 1)
           c = reduce_signed(pr.B, pr.p);
         else
           c = 1 % pr.p;
         Residue u = lucas_u_at({pr.A, pr.B}, pr.d - e, pr.p);
         return Residue{submod(0, mulmod(c, u.value, pr.p), pr.p), pr.p};
       }});

  add({"PS",
       "sum_{0<k<p} C(2k,k)/k == 0 (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Gt3, nullptr,
       [](const Params &pr, EvalContext &ctx) {
         return central_weighted_sum(pr.p, 1, 1, ctx);
       },
       [](const Params &pr, EvalContext &) { return Residue{0, pr.p}; }});

  add({"W",
       "Wolstenholme: C(2p-1,p-1) == 1 (mod p^3)",
       ModulusRule::P3, false, ParamUse{}, PCond::Gt3, nullptr,
       [](const Params &pr, EvalContext &) { return binom_2q1_mod(pr.p, 1, 3); },
       [](const Params &pr, EvalContext &) {
         return Residue{1, checked_pow(pr.p, 3)};
       }});

  add({"L2.2",
       "C(2p^a-1,p^a-1) == 1 + p[p=2] + p^2[p=3] (mod p^3)",
       ModulusRule::P3, false, ParamUse{.a = true, .d = false, .d_min = 0, .m = false, .ab = false},
       PCond::Any, nullptr,
       [](const Params &pr, EvalContext &) { return binom_2q1_mod(pr.p, pr.a, 3); },
       [](const Params &pr, EvalContext &) {
         uint64_t p3 = checked_pow(pr.p, 3);
         uint64_t r = 1;
         if (pr.p == 2) r += 2;
         if (pr.p == 3) r += 9;
         return Residue{r % p3, p3};
       }});

  add({"G",
       "Glaisher: C(2p-1,p-1) == 1 - (2/3) p^3 B_{p-3} (mod p^4)",
       ModulusRule::P4, false, ParamUse{}, PCond::Gt3, nullptr,
       [](const Params &pr, EvalContext &) { return binom_2q1_mod(pr.p, 1, 4); },
       [](const Params &pr, EvalContext &) {
         uint64_t p4 = checked_pow(pr.p, 4);
         uint64_t p3 = checked_pow(pr.p, 3);
         uint64_t t = mulmod(mulmod(2 % p4, invmod_u64(3 % p4, p4), p4),
                             mulmod(p3 % p4, bern_pm3(pr.p), p4), p4);
         return Residue{submod(1 % p4, t, p4), p4};
       }});

  add({"5.3",
       "sum_{0<k<p} (1 + 2 p H_k)/k^2 == (8/3) p B_{p-3} (mod p^2)",
       ModulusRule::P2, false, ParamUse{}, PCond::Gt3, nullptr,
       [](const Params &pr, EvalContext &) {
         uint64_t p2 = checked_pow(pr.p, 2);
         HarmonicTable h = harmonic_table(pr.p - 1, p2);
         uint64_t acc = 0;
         for (uint64_t k = 1; k < pr.p; ++k) {
           uint64_t ik = invmod_u64(k, p2);
           uint64_t t = addmod(1, mulmod(mulmod(2, pr.p, p2), h.H(k), p2), p2);
           acc = addmod(acc, mulmod(t, mulmod(ik, ik, p2), p2), p2);
         }
         return Residue{acc, p2};
       },
       [](const Params &pr, EvalContext &) {
         uint64_t p2 = checked_pow(pr.p, 2);
         uint64_t c = mulmod(8 % p2, invmod_u64(3, p2), p2);
         return Residue{mulmod(c, mulmod(pr.p, bern_pm3(pr.p), p2), p2), p2};
       }});

  add({"5.4",
       "sum_{0<k<p} H_k/k^2 == B_{p-3} (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Gt3, nullptr,
       [](const Params &pr, EvalContext &) {
         HarmonicTable h = harmonic_table(pr.p - 1, pr.p);
         uint64_t acc = 0;
         for (uint64_t k = 1; k < pr.p; ++k) {
           uint64_t ik = invmod_u64(k, pr.p);
           acc = addmod(acc, mulmod(h.H(k), mulmod(ik, ik, pr.p), pr.p), pr.p);
         }
         return Residue{acc, pr.p};
       },
       [](const Params &pr, EvalContext &) {
         return Residue{bern_pm3(pr.p), pr.p};
       }});

  add({"5.5",
       "sum_{0<k<p} 1/k^2 == (2/3) p B_{p-3} (mod p^2)",
       ModulusRule::P2, false, ParamUse{}, PCond::Gt3, nullptr,
       [](const Params &pr, EvalContext &) {
         uint64_t p2 = checked_pow(pr.p, 2);
         uint64_t acc = 0;
         for (uint64_t k = 1; k < pr.p; ++k) {
           uint64_t ik = invmod_u64(k, p2);
           acc = addmod(acc, mulmod(ik, ik, p2), p2);
         }
         return Residue{acc, p2};
       },
       [](const Params &pr, EvalContext &) {
         uint64_t p2 = checked_pow(pr.p, 2);
         uint64_t c = mulmod(2, invmod_u64(3, p2), p2);
         return Residue{mulmod(c, mulmod(pr.p, bern_pm3(pr.p), p2), p2), p2};
       }});

  add({"E",
       "Eisenstein: 2 q_p(2) == sum_{0<k<p} (-1)^(k-1)/k (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Odd, nullptr,
       [](const Params &pr, EvalContext &) {
         uint64_t q2 = fermat_quotient(2, pr.p).value;
         return Residue{addmod(q2, q2, pr.p), pr.p};
       },
       [](const Params &pr, EvalContext &) {
         return alt_harmonic_partial(1, 1, pr.p);
       }});

  add({"R1.2W",
       "Williams: F_{p-(p|5)}/p == (2/5) sum_{0<k<4p/5} (-1)^k/k (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::OddNot5, nullptr,
       [](const Params &pr, EvalContext &) { return fib_quotient(pr.p); },
       [](const Params &pr, EvalContext &) {
         uint64_t h = alt_harmonic_partial(4, 5, pr.p).value; // sum (-1)^{k-1}/k
         uint64_t c = mulmod(2, invmod_u64(5 % pr.p, pr.p), pr.p);
         return Residue{mulmod(c, submod(0, h, pr.p), pr.p), pr.p};
       }});

  add({"ZWS",
       "sum_{k<=(p-1)/2} 3^k/k == sum_{0<k<p/6} (-1)^k/k (mod p)",
       ModulusRule::P, false, ParamUse{}, PCond::Gt3, nullptr,
       [](const Params &pr, EvalContext &) {
         uint64_t acc = 0, w = 3 % pr.p;
         for (uint64_t k = 1; k <= (pr.p - 1) / 2; ++k) {
           acc = addmod(acc, mulmod(w, invmod_u64(k, pr.p), pr.p), pr.p);
           w = mulmod(w, 3 % pr.p, pr.p);
         }
         return Residue{acc, pr.p};
       },
       [](const Params &pr, EvalContext &) {
         uint64_t h = alt_harmonic_partial(1, 6, pr.p).value;
         return Residue{submod(0, h, pr.p), pr.p};
       }});

  return reg;
}

} // namespace

const std::vector<CongruenceSpec> &registry() {
  static const std::vector<CongruenceSpec> reg = build_registry();
  return reg;
}

const CongruenceSpec *find_entry(std::string_view id) {
  for (const auto &e : registry())
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<const CongruenceSpec *> resolve_ids(const std::vector<std::string> &ids) {
  std::vector<bool> selected(registry().size(), false);
  for (const auto &want : ids) {
    bool found = false;
    for (size_t i = 0; i < registry().size(); ++i) {
      if (registry()[i].id == want) {
        selected[i] = true;
        found = true;
        break;
      }
    }
    if (found) continue;
    // bare id -> lettered sub-entries, e.g. "1.17" -> 1.17a, 1.17b
    for (size_t i = 0; i < registry().size(); ++i) {
      const auto &id = registry()[i].id;
      if (id.size() == want.size() + 1 && id.compare(0, want.size(), want) == 0 &&
          std::islower(static_cast<unsigned char>(id.back()))) {
        selected[i] = true;
        found = true;
      }
    }
    if (!found) raise(ErrorKind::UnknownId, want);
  }
  std::vector<const CongruenceSpec *> out;
  for (size_t i = 0; i < registry().size(); ++i)
    if (selected[i]) out.push_back(&registry()[i]);
  return out;
}

bool in_domain(const CongruenceSpec &entry, const Params &params, std::string *why) {
  auto fail = [&](const char *msg) {
    if (why) *why = msg;
    return false;
  };
  if (!is_prime(params.p)) return fail("p must be prime");
  if (!pcond_ok(entry.pcond, params.p)) return fail(pcond_text(entry.pcond));
  if (params.a < 1) return fail("a must be >= 1");
  if (!entry.uses.a && params.a != 1) return fail("a is fixed at 1");
  uint64_t q = 0;
  try {
    q = checked_pow(params.p, params.a);
    apply_modulus_rule(entry.modulus_rule, params.p);
  } catch (const Error &) {
    return fail("p^a or the modulus exceeds 2^63");
  }
  if (entry.uses.d &&
      (params.d < entry.uses.d_min || params.d > static_cast<int64_t>(q)))
    return fail("d outside its range");
  if (entry.uses.m &&
      (params.m == 0 || reduce_signed(params.m, params.p) == 0))
    return fail("m must be nonzero and coprime to p");
  if (entry.extra) {
    std::string extra_why;
    if (!entry.extra(params, &extra_why)) {
      if (why) *why = extra_why;
      return false;
    }
  }
  return true;
}

CheckResult evaluate_in(const CongruenceSpec &entry, const Params &params,
                        EvalContext &ctx) {
  std::string why;
  if (!in_domain(entry, params, &why))
    raise(ErrorKind::DomainViolation, entry.id + ": " + why);
  CheckResult r;
  r.id = entry.id;
  r.params = params;
  r.modulus = apply_modulus_rule(entry.modulus_rule, params.p);
  std::string err;
  try {
    Residue l = entry.lhs(params, ctx);
    r.lhs = l.value;
  } catch (const Error &e) {
    err += "lhs: ";
    err += e.what();
  }
  try {
    Residue rr = entry.rhs(params, ctx);
    r.rhs = rr.value;
  } catch (const Error &e) {
    if (!err.empty()) err += "; ";
    err += "rhs: ";
    err += e.what();
  }
  if (!err.empty()) {
    r.verdict = Verdict::Error;
    r.error = err;
    return r;
  }
  if (*r.lhs == *r.rhs)
    r.verdict = Verdict::Pass;
  else
    r.verdict = entry.conjecture ? Verdict::ConjectureFail : Verdict::Fail;
  return r;
}

CheckResult evaluate(std::string_view id, const Params &params) {
  const CongruenceSpec *entry = find_entry(id);
  if (!entry) raise(ErrorKind::UnknownId, std::string(id));
  EvalContext ctx;
  return evaluate_in(*entry, params, ctx);
}

std::vector<int64_t> default_m_sweep() {
  std::vector<int64_t> m;
  for (int64_t v = -6; v <= 12; ++v)
    if (v != 0) m.push_back(v);
  return m;
}

std::vector<Params> instances(std::string_view id, const InstanceLimits &limits) {
  const CongruenceSpec *entry = find_entry(id);
  if (!entry) raise(ErrorKind::UnknownId, std::string(id));

  std::vector<Params> out;
  std::vector<uint64_t> primes = primes_in(std::max<uint64_t>(limits.pmin, 2), limits.pmax);

  std::vector<int64_t> mset = limits.mset.empty() ? default_m_sweep() : limits.mset;
  std::sort(mset.begin(), mset.end());
  mset.erase(std::unique(mset.begin(), mset.end()), mset.end());

  std::vector<std::pair<int64_t, int64_t>> ab_pairs;
  if (entry->uses.ab) {
    SplitMix rng{limits.seed ^ 0xab50c0de5eedull};
    while (ab_pairs.size() < limits.ab_pairs) {
      int64_t A = static_cast<int64_t>(rng.next() % 101) - 50;
      int64_t B = static_cast<int64_t>(rng.next() % 101) - 50;
      if (B == 0) continue;
      ab_pairs.emplace_back(A, B);
    }
  }

  for (uint64_t p : primes) {
    if (!pcond_ok(entry->pcond, p)) continue;
    uint32_t atop = entry->uses.a ? limits.amax : 1;
    for (uint32_t a = 1; a <= atop; ++a) {
      uint64_t q;
      try {
        q = checked_pow(p, a);
        apply_modulus_rule(entry->modulus_rule, p);
      } catch (const Error &) {
        break;
      }
      if (a >= 2 && q > limits.pa_max) break;

      std::vector<int64_t> dlist;
      if (entry->uses.d) {
        int64_t dmin = entry->uses.d_min;
        int64_t dmax = static_cast<int64_t>(q);
        switch (limits.dmode) {
        case DMode::All:
          for (int64_t d = dmin; d <= dmax; ++d) dlist.push_back(d);
          break;
        case DMode::Sample: {
          dlist = {dmin, dmin + 1, dmax - 1, dmax};
          SplitMix rng{limits.seed ^ fnv64(entry->id) ^ (p * 0x100000001b3ull + a)};
          for (uint32_t i = 0; i < limits.d_samples; ++i)
            dlist.push_back(dmin + static_cast<int64_t>(
                                       rng.next() % static_cast<uint64_t>(dmax - dmin + 1)));
          std::sort(dlist.begin(), dlist.end());
          dlist.erase(std::unique(dlist.begin(), dlist.end()), dlist.end());
          while (!dlist.empty() && dlist.front() < dmin) dlist.erase(dlist.begin());
          break;
        }
        case DMode::Fixed:
          if (limits.d_fixed && *limits.d_fixed >= dmin && *limits.d_fixed <= dmax)
            dlist.push_back(*limits.d_fixed);
          break;
        }
      } else {
        dlist.push_back(0);
      }

      std::vector<int64_t> mlist;
      if (entry->uses.m) {
        for (int64_t m : mset)
          if (m != 0 && reduce_signed(m, p) != 0) mlist.push_back(m);
      } else {
        mlist.push_back(0);
      }

      for (int64_t m : mlist) {
        for (int64_t d : dlist) {
          if (entry->uses.ab) {
            for (auto [A, B] : ab_pairs) {
              Params pr{p, a, d, m, A, B};
              if (in_domain(*entry, pr, nullptr)) out.push_back(pr);
            }
          } else {
            Params pr{p, a, d, m, 0, 0};
            if (in_domain(*entry, pr, nullptr)) out.push_back(pr);
          }
        }
      }
    }
  }
  return out;
}

} // namespace cbcongr
