// cbcongr CLI: list | verify | identities | conjecture | wss-scan.
// Talks to the library exclusively through the C API in cbcongr.h.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbcongr.h"

namespace {

constexpr int kExitUsage = 2;

int die_api(const char *what) {
  std::cerr << "cbcongr: " << what << ": " << cbc_last_error() << "\n";
  return kExitUsage;
}

struct ReportGuard {
  cbc_report *r = nullptr;
  ~ReportGuard() { cbc_report_free(r); }
};

struct ConfigGuard {
  cbc_config *c = nullptr;
  ~ConfigGuard() { cbc_config_free(c); }
};

// Renders and writes the report; prints wall time on the diagnostic stream.
int emit_report(cbc_report *report, const std::string &format,
                const std::string &out_path) {
  char *text = nullptr;
  if (cbc_report_render(report, format.c_str(), &text) != CBC_OK)
    return die_api("render");
  std::string body(text);
  cbc_string_free(text);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream os(out_path, std::ios::binary | std::ios::trunc);
    if (!os) {
      std::cerr << "cbcongr: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    os << body;
    if (!os.flush()) {
      std::cerr << "cbcongr: short write to " << out_path << "\n";
      return kExitUsage;
    }
  }
  std::cerr << "elapsed: " << cbc_report_elapsed_ms(report) << " ms\n";
  return cbc_report_exit_code(report);
}

int cmd_list() {
  size_t n = cbc_registry_count();
  std::printf("%-8s %-8s %-11s %-72s %s\n", "id", "modulus", "flags",
              "congruence", "domain");
  for (size_t i = 0; i < n; ++i) {
    const char *id = nullptr, *desc = nullptr, *mod = nullptr, *dom = nullptr;
    int conj = 0;
    if (cbc_registry_id(i, &id) != CBC_OK ||
        cbc_registry_description(i, &desc) != CBC_OK ||
        cbc_registry_modulus(i, &mod) != CBC_OK ||
        cbc_registry_domain(i, &dom) != CBC_OK ||
        cbc_registry_is_conjecture(i, &conj) != CBC_OK)
      return die_api("registry");
    std::printf("%-8s %-8s %-11s %-72s %s\n", id, mod,
                conj ? "CONJECTURE" : "", desc, dom);
  }
  std::printf("%zu entries\n", n);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"verifier for central binomial coefficient congruences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cbc_version()));

  auto *list = app.add_subcommand("list", "show the congruence registry");

  std::vector<std::string> ids;
  uint64_t pmin = 2, pmax = 97, seed = 1;
  uint32_t amax = 1, jobs = 0;
  std::string dmode = "all", out_path, format = "text";
  std::vector<int64_t> mset;

  auto *verify = app.add_subcommand("verify", "evaluate catalog congruences");
  verify->add_option("--id", ids, "congruence id (repeatable; default: all)");
  verify->add_option("--pmin", pmin, "smallest prime (default 2)");
  verify->add_option("--pmax", pmax, "largest prime (default 97)");
  verify->add_option("--amax", amax, "largest exponent a (default 1)");
  verify->add_option("--dmode", dmode, "d enumeration: all | sample")
      ->check(CLI::IsMember({"all", "sample"}));
  verify->add_option("--m", mset, "m value (repeatable; default sweep)");
  verify->add_option("--seed", seed, "seed for sampled enumeration");
  verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  verify->add_option("--out", out_path, "write the report to this file");
  verify->add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  uint32_t nmax = 12, dmax = 15, cor_nmax = 20, cor_dmax = 20, lemma_nmax = 30,
           staver_nmax = 50;
  auto *identities = app.add_subcommand("identities", "verify exact identities");
  identities->add_option("--nmax", nmax, "n bound for the polynomial identities");
  identities->add_option("--dmax", dmax, "|d| bound for the polynomial identities");
  identities->add_option("--cor-nmax", cor_nmax, "n bound for the value identities");
  identities->add_option("--cor-dmax", cor_dmax, "d bound for the value identities");
  identities->add_option("--lemma-nmax", lemma_nmax, "n bound for the folding identity");
  identities->add_option("--staver-nmax", staver_nmax, "n bound for the cumulative sum forms");
  identities->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  identities->add_option("--out", out_path, "write the report to this file");
  identities->add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  uint64_t conj_pmax = 200;
  uint32_t conj_amax = 1;
  auto *conjecture = app.add_subcommand("conjecture", "explore the open congruence mod p^3");
  conjecture->add_option("--pmax", conj_pmax, "largest prime (default 200)");
  conjecture->add_option("--amax", conj_amax, "largest exponent a (default 1)");
  conjecture->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  conjecture->add_option("--out", out_path, "write the report to this file");
  conjecture->add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  uint64_t wss_pmax = 1000;
  auto *wss = app.add_subcommand("wss-scan", "scan for Wall-Sun-Sun primes");
  wss->add_option("--pmax", wss_pmax, "largest prime (default 1000)");
  wss->add_option("--out", out_path, "write the report to this file");
  wss->add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (list->parsed()) return cmd_list();

  if (verify->parsed()) {
    ConfigGuard cfg{cbc_config_new()};
    if (!cfg.c) return die_api("config");
    for (const auto &id : ids)
      if (cbc_config_add_id(cfg.c, id.c_str()) != CBC_OK) return die_api("--id");
    if (cbc_config_set_prime_range(cfg.c, pmin, pmax) != CBC_OK)
      return die_api("--pmin/--pmax");
    if (cbc_config_set_amax(cfg.c, amax) != CBC_OK) return die_api("--amax");
    if (cbc_config_set_dmode(cfg.c, dmode.c_str()) != CBC_OK)
      return die_api("--dmode");
    for (int64_t m : mset)
      if (cbc_config_add_m(cfg.c, m) != CBC_OK) return die_api("--m");
    if (cbc_config_set_seed(cfg.c, seed) != CBC_OK) return die_api("--seed");
    if (cbc_config_set_jobs(cfg.c, jobs) != CBC_OK) return die_api("--jobs");
    ReportGuard report;
    if (cbc_run_verify(cfg.c, &report.r) != CBC_OK) return die_api("verify");
    return emit_report(report.r, format, out_path);
  }

  if (identities->parsed()) {
    ReportGuard report;
    if (cbc_run_identities(nmax, dmax, cor_nmax, cor_dmax, lemma_nmax,
                           staver_nmax, jobs, &report.r) != CBC_OK)
      return die_api("identities");
    return emit_report(report.r, format, out_path);
  }

  if (conjecture->parsed()) {
    ReportGuard report;
    if (cbc_run_conjecture(conj_pmax, conj_amax, jobs, &report.r) != CBC_OK)
      return die_api("conjecture");
    return emit_report(report.r, format, out_path);
  }

  if (wss->parsed()) {
    ReportGuard report;
    if (cbc_run_wss_scan(wss_pmax, &report.r) != CBC_OK)
      return die_api("wss-scan");
    // scan exit code: findings are discoveries, not failures
    int rc = emit_report(report.r, format, out_path);
    return rc == 1 ? 0 : rc;
  }

  return kExitUsage;
}
