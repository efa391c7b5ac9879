// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// argv[1] = path to the cbcongr CLI binary, argv[2] = path to unit_tests
// (used to run the kernel property suite as criterion 9).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <gmpxx.h>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cbcongr/harness.hpp"
#include "cbcongr/identities.hpp"
#include "cbcongr/sequences.hpp"

using namespace cbcongr;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_cli;
std::string g_unit_tests;

struct Criterion {
  const char *name;
  bool ok = true;
  std::string detail;
  std::chrono::steady_clock::time_point start;

  explicit Criterion(const char *n) : name(n), start(std::chrono::steady_clock::now()) {}

  void fail(const std::string &why) {
    if (ok) detail = why;
    ok = false;
  }

  void expect(bool cond, const std::string &why) {
    if (!cond) fail(why);
  }

  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ok) {
      std::printf("PASS  %s  (%lld ms)\n", name, static_cast<long long>(ms));
    } else {
      std::printf("FAIL  %s  (%lld ms): %s\n", name, static_cast<long long>(ms),
                  detail.c_str());
      ++g_failures;
    }
    std::fflush(stdout);
  }
};

std::string verdict_summary(const Report &r) {
  uint64_t inst = 0, fail = 0, err = 0, conj = 0;
  for (const auto &[id, s] : summarize(r)) {
    inst += s.instances;
    fail += s.failures;
    err += s.errors;
    conj += s.conjecture_fails;
  }
  std::ostringstream os;
  os << inst << " instances, " << fail << " failures, " << err << " errors, "
     << conj << " conjecture-fails";
  return os.str();
}

void expect_clean(Criterion &c, const Report &r, const std::string &label) {
  for (const auto &row : r.rows) {
    if (row.verdict == Verdict::Pass) continue;
    std::ostringstream os;
    os << label << ": " << to_string(row.verdict) << " at " << row.id
       << " p=" << row.params.p << " a=" << row.params.a << " d=" << row.params.d
       << " m=" << row.params.m << " A=" << row.params.A << " B=" << row.params.B;
    if (row.lhs) os << " lhs=" << *row.lhs;
    if (row.rhs) os << " rhs=" << *row.rhs;
    if (!row.error.empty()) os << " (" << row.error << ")";
    c.fail(os.str());
    return;
  }
  for (const auto &row : r.identity_rows) {
    if (row.verdict == Verdict::Pass) continue;
    std::ostringstream os;
    os << label << ": " << to_string(row.verdict) << " at " << row.id
       << " n=" << row.n;
    if (row.d) os << " d=" << *row.d;
    if (!row.detail.empty()) os << " (" << row.detail << ")";
    c.fail(os.str());
    return;
  }
}

uint64_t rational_mod(const mpq_class &v, uint64_t pk) {
  mpz_class m = static_cast<unsigned long>(pk);
  mpz_class den = v.get_den() % m, inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class out = ((v.get_num() % m) * inv) % m;
  if (out < 0) out += m;
  return out.get_ui();
}

// ---- criterion 1: exact identity suite ------------------------------------

void criterion_identities() {
  Criterion c("criterion 1: identity suite (exact, zero tolerance)");
  IdentityBounds b; // defaults are the acceptance grid
  Report r = run_identities(b);
  expect_clean(c, r, "identities");
  uint64_t total = 0;
  for (const auto &[id, s] : summarize(r)) total += s.instances;
  uint64_t want = 2 * 12 * 31 + 3 * 20 * 21 + 30 + 50;
  c.expect(total == want,
           "grid size " + std::to_string(total) + " != " + std::to_string(want));
}

// ---- criterion 2: Theorem 1.1 sweep ----------------------------------------

void criterion_theorem11() {
  Criterion c("criterion 2: sums vs Lucas values, ids 1.3-1.6, p <= 47, a <= 2");
  RunConfig cfg;
  cfg.ids = {"1.3", "1.4", "1.5", "1.6"};
  cfg.pmax = 47;
  cfg.amax = 2;
  cfg.pa_max = 2500;
  Report r = run_verify(cfg);
  expect_clean(c, r, "1.3-1.6");
  uint64_t total = 0;
  for (const auto &[id, s] : summarize(r)) total += s.instances;
  c.expect(total > 100000, "suspiciously few instances: " + std::to_string(total));
  std::fprintf(stderr, "  [criterion 2] %s\n", verdict_summary(r).c_str());
}

// ---- criterion 3: Corollary 1.1 sweep + agreement --------------------------

void criterion_corollary11() {
  Criterion c("criterion 3: ids 1.7-1.10 pass and agree with 1.5/1.6 at m = -1, 2");
  RunConfig cfg;
  cfg.ids = {"1.7", "1.8", "1.9", "1.10"};
  cfg.pmax = 47;
  cfg.amax = 2;
  Report r = run_verify(cfg);
  expect_clean(c, r, "1.7-1.10");

  const CongruenceSpec *e15 = find_entry("1.5");
  const CongruenceSpec *e16 = find_entry("1.6");
  const CongruenceSpec *e17 = find_entry("1.7");
  const CongruenceSpec *e18 = find_entry("1.8");
  const CongruenceSpec *e19 = find_entry("1.9");
  const CongruenceSpec *e110 = find_entry("1.10");
  EvalContext ctx;
  for (uint64_t p : primes_in(3, 47)) {
    for (uint32_t a = 1; a <= 2; ++a) {
      uint64_t q = checked_pow(p, a);
      if (q > 2500) continue;
      for (int64_t d = 0; d <= static_cast<int64_t>(q); ++d) {
        Params base{p, a, d, 0, 0, 0};
        Params m1{p, a, d, -1, 0, 0};
        Params m2{p, a, d, 2, 0, 0};
        // right-hand sides: full grid (cheap, distinct formulas)
        uint64_t r17 = e17->rhs(base, ctx).value;
        uint64_t r15 = e15->rhs(m1, ctx).value;
        if (r17 != r15) {
          c.fail("rhs mismatch 1.7 vs 1.5@m=-1 at p=" + std::to_string(p) +
                 " a=" + std::to_string(a) + " d=" + std::to_string(d));
          return;
        }
        uint64_t r19 = e19->rhs(base, ctx).value;
        uint64_t r15b = e15->rhs(m2, ctx).value;
        if (r19 != r15b) {
          c.fail("rhs mismatch 1.9 vs 1.5@m=2 at p=" + std::to_string(p) +
                 " a=" + std::to_string(a) + " d=" + std::to_string(d));
          return;
        }
        if (d >= 1) {
          uint64_t r18 = e18->rhs(base, ctx).value;
          uint64_t r16 = e16->rhs(m1, ctx).value;
          if (r18 != submod(0, r16, p)) {
            c.fail("rhs mismatch 1.8 vs -(1.6@m=-1) at p=" + std::to_string(p) +
                   " a=" + std::to_string(a) + " d=" + std::to_string(d));
            return;
          }
          uint64_t r110 = e110->rhs(base, ctx).value;
          uint64_t r16b = e16->rhs(m2, ctx).value;
          uint64_t sgn = (d % 2 == 0) ? 1 % p : p - 1;
          uint64_t expect = submod(mulmod(r16b, invmod_u64(2, p), p), sgn, p);
          if (r110 != expect) {
            c.fail("rhs mismatch 1.10 vs (1.6@m=2)/2 - (-1)^d at p=" +
                   std::to_string(p) + " a=" + std::to_string(a) +
                   " d=" + std::to_string(d));
            return;
          }
        }
        // left-hand sides: sampled (they share the streaming kernel)
        if (d % 7 == 0) {
          CheckResult c17 = evaluate_in(*e17, base, ctx);
          CheckResult c15 = evaluate_in(*e15, m1, ctx);
          if (!(c17.verdict == Verdict::Pass && c15.verdict == Verdict::Pass &&
                *c17.lhs == *c15.lhs)) {
            c.fail("lhs mismatch 1.7 vs 1.5@m=-1 at p=" + std::to_string(p) +
                   " a=" + std::to_string(a) + " d=" + std::to_string(d));
            return;
          }
          CheckResult c19 = evaluate_in(*e19, base, ctx);
          CheckResult c15b = evaluate_in(*e15, m2, ctx);
          if (!(c19.verdict == Verdict::Pass && *c19.lhs == *c15b.lhs)) {
            c.fail("lhs mismatch 1.9 vs 1.5@m=2 at p=" + std::to_string(p));
            return;
          }
        }
      }
    }
  }
}

// ---- criterion 4: Theorem 1.2 and its corollaries --------------------------

void criterion_theorem12() {
  Criterion c("criterion 4: id 1.11 (p <= 500, m in 1..12) and ids 1.12-1.19 (p <= 500)");
  RunConfig cfg;
  cfg.ids = {"1.11"};
  cfg.pmax = 500;
  for (int64_t m = 1; m <= 12; ++m) cfg.mset.push_back(m);
  Report r1 = run_verify(cfg);
  expect_clean(c, r1, "1.11");
  // 90 primes in (12, 500] take all 12 values of m; 2,3,5,7,11 lose multiples
  c.expect(r1.rows.size() == 90 * 12 + 6 + 8 + 10 + 11 + 11,
           "1.11 instance count " + std::to_string(r1.rows.size()));

  RunConfig cfg2;
  cfg2.ids = {"1.12", "1.12b", "1.13", "1.14", "1.15", "1.16",
              "1.17", "1.18", "1.19"};
  cfg2.pmax = 500;
  Report r2 = run_verify(cfg2);
  expect_clean(c, r2, "1.12-1.19");
  // 94 odd primes for the four unconditional ids, 93 for the seven that
  // exclude one more prime
  c.expect(r2.rows.size() == 4 * 94 + 7 * 93,
           "1.12-1.19 instance count " + std::to_string(r2.rows.size()));

  // spot anchors
  CheckResult a1 = evaluate("1.12", Params{5, 1, 0, 0, 0, 0});
  mpq_class lhs_exact(353, 48); // 2 + 3/2 + 5/3 + 35/16
  c.expect(a1.verdict == Verdict::Pass && *a1.lhs == rational_mod(lhs_exact, 5) &&
               *a1.lhs == 1,
           "2 q_5(2) anchor: expected both sides == 1 (mod 5)");
  CheckResult a2 = evaluate("1.14", Params{3, 1, 0, 0, 0, 0});
  c.expect(a2.verdict == Verdict::Pass && *a2.lhs == 1 && *a2.rhs == 1,
           "(1.14) anchor at p = 3: expected both sides == 1 (mod 3)");
}

// ---- criterion 5: Theorem 1.3 ----------------------------------------------

void criterion_theorem13() {
  Criterion c("criterion 5: id 1.20 branches (p = 2, 3), p <= 300 at a = 1, p <= 31 at a = 2");
  CheckResult p2 = evaluate("1.20", Params{2, 1, 0, 0, 0, 0});
  c.expect(p2.verdict == Verdict::Pass && *p2.lhs == 2 && p2.modulus == 8,
           "p = 2 branch must give 2 (mod 8)");
  CheckResult p3 = evaluate("1.20", Params{3, 1, 0, 0, 0, 0});
  c.expect(p3.verdict == Verdict::Pass && *p3.lhs == 5 && p3.modulus == 27,
           "p = 3 branch must give 5 (mod 27)");
  CheckResult p5 = evaluate("1.20", Params{5, 1, 0, 0, 0, 0});
  c.expect(p5.verdict == Verdict::Pass && *p5.lhs == 50 && *p5.rhs == 50,
           "p = 5 anchor must give 50 == 50 (mod 125)");

  RunConfig cfg;
  cfg.ids = {"1.20"};
  cfg.pmax = 300;
  cfg.amax = 1;
  Report r1 = run_verify(cfg);
  expect_clean(c, r1, "1.20 a=1");

  cfg.pmax = 31;
  cfg.amax = 2;
  Report r2 = run_verify(cfg);
  expect_clean(c, r2, "1.20 a<=2");
}

// ---- criterion 6: Bernoulli cross-check ------------------------------------

void criterion_bernoulli_routes() {
  Criterion c("criterion 6: B_{p-3} by recurrence == harmonic route == Glaisher route, 5 <= p <= 200");
  EvalContext ctx;
  const CongruenceSpec *e54 = find_entry("5.4");
  const CongruenceSpec *e55 = find_entry("5.5");
  const CongruenceSpec *eg = find_entry("G");
  for (uint64_t p : primes_in(5, 200)) {
    Params pr{p, 1, 0, 0, 0, 0};
    uint64_t by_recurrence = bernoulli_mod_p(p - 3, p).value;
    uint64_t by_harmonic = e54->lhs(pr, ctx).value;
    uint64_t p3 = p * p * p;
    uint64_t p4 = p3 * p;
    uint64_t binom_val = eg->lhs(pr, ctx).value; // C(2p-1, p-1) mod p^4
    uint64_t diff = submod(1 % p4, binom_val, p4);
    if (diff % p3 != 0) {
      c.fail("Glaisher route: 1 - C(2p-1,p-1) not divisible by p^3 at p = " +
             std::to_string(p));
      return;
    }
    uint64_t by_glaisher =
        mulmod((diff / p3) % p, mulmod(3 % p, invmod_u64(2, p), p), p);
    uint64_t ssum = e55->lhs(pr, ctx).value; // sum 1/k^2 mod p^2
    if (ssum % p != 0) {
      c.fail("sum 1/k^2 not divisible by p at p = " + std::to_string(p));
      return;
    }
    uint64_t by_squares =
        mulmod((ssum / p) % p, mulmod(3 % p, invmod_u64(2, p), p), p);
    if (!(by_recurrence == by_harmonic && by_recurrence == by_glaisher &&
          by_recurrence == by_squares)) {
      c.fail("routes disagree at p = " + std::to_string(p) + ": " +
             std::to_string(by_recurrence) + " / " + std::to_string(by_harmonic) +
             " / " + std::to_string(by_glaisher) + " / " +
             std::to_string(by_squares));
      return;
    }
  }
}

// ---- criterion 7: general Lucas pair congruence -----------------------------

void criterion_lemma31() {
  Criterion c("criterion 7: id L3.1 over seeded (A, B) pairs, odd p <= 31, a <= 2");
  RunConfig cfg;
  cfg.ids = {"L3.1"};
  cfg.pmax = 31;
  cfg.amax = 2;
  cfg.seed = 1;
  Report r = run_verify(cfg);
  expect_clean(c, r, "L3.1");
  uint64_t total = 0;
  for (const auto &[id, s] : summarize(r)) total += s.instances;
  c.expect(total > 20000, "expected a dense (A,B) x (p,a,d) grid, got " +
                              std::to_string(total));
}

// ---- criterion 8: conjecture exploration ------------------------------------

void criterion_conjecture() {
  Criterion c("criterion 8: conjecture residual 0 for p <= 200 (a = 1) and p <= 13 (a = 2)");
  Report r1 = run_conjecture(200, 1);
  c.expect(report_exit_code(r1) == 0, "conjecture run must not affect exit code");
  c.expect(r1.rows.size() == 44, // primes 3..200 except 5
           "expected 44 instances, got " + std::to_string(r1.rows.size()));
  for (const auto &row : r1.rows)
    if (row.verdict != Verdict::Pass) {
      c.fail("nonzero residual at p=" + std::to_string(row.params.p) +
             " a=" + std::to_string(row.params.a) + " (" +
             to_string(row.verdict) + ")");
      break;
    }
  Report r2 = run_conjecture(13, 2);
  c.expect(report_exit_code(r2) == 0, "conjecture run must not affect exit code");
  c.expect(r2.rows.size() == 8, // {3, 7, 11, 13} x a in {1, 2}
           "expected 8 instances, got " + std::to_string(r2.rows.size()));
  for (const auto &row : r2.rows)
    if (row.verdict != Verdict::Pass) {
      c.fail("nonzero residual at p=" + std::to_string(row.params.p) +
             " a=" + std::to_string(row.params.a));
      break;
    }
}

// ---- criterion 9: kernel property suite -------------------------------------

void criterion_kernel_properties() {
  Criterion c("criterion 9: kernel property suites (modarith, padic, sequences, binomial)");
  if (g_unit_tests.empty()) {
    c.fail("unit test binary path not provided");
    return;
  }
  std::string cmd = "'" + g_unit_tests + "' >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  c.expect(rc == 0, "property suite exited with status " + std::to_string(rc));
}

// ---- criterion 10: CLI determinism -------------------------------------------

bool run_cli(const std::string &args) {
  std::string cmd = "'" + g_cli + "' " + args + " >/dev/null 2>/dev/null";
  return std::system(cmd.c_str()) == 0;
}

std::string slurp(const fs::path &p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void criterion_determinism() {
  Criterion c("criterion 10: byte-identical reports across repeat runs and --jobs");
  if (g_cli.empty()) {
    c.fail("CLI path not provided");
    return;
  }
  fs::path dir = fs::temp_directory_path() / "cbcongr_acceptance";
  std::error_code ec;
  fs::remove_all(dir, ec);
  fs::create_directories(dir);
  std::string base = "verify --id 1.3 --id 1.20 --id L3.1 --id W --pmax 31 "
                     "--amax 2 --seed 7 ";
  for (std::string fmt : {"json", "csv", "text"}) {
    fs::path f1 = dir / ("a." + fmt), f2 = dir / ("b." + fmt),
             f3 = dir / ("c." + fmt);
    bool ok1 = run_cli(base + "--jobs 1 --format " + fmt + " --out " + f1.string());
    bool ok2 = run_cli(base + "--jobs 3 --format " + fmt + " --out " + f2.string());
    bool ok3 = run_cli(base + "--jobs 3 --format " + fmt + " --out " + f3.string());
    if (!(ok1 && ok2 && ok3)) {
      c.fail("CLI run failed for format " + fmt);
      break;
    }
    std::string b1 = slurp(f1), b2 = slurp(f2), b3 = slurp(f3);
    if (b1.empty() || b1 != b2 || b2 != b3) {
      c.fail("reports differ for format " + fmt);
      break;
    }
  }
  fs::remove_all(dir, ec);
}

} // namespace

int main(int argc, char **argv) {
  if (argc > 1) g_cli = argv[1];
  if (argc > 2) g_unit_tests = argv[2];

  criterion_identities();
  criterion_theorem11();
  criterion_corollary11();
  criterion_theorem12();
  criterion_theorem13();
  criterion_bernoulli_routes();
  criterion_lemma31();
  criterion_conjecture();
  criterion_kernel_properties();
  criterion_determinism();

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
