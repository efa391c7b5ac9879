#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbcongr/catalog.hpp"

namespace cbcongr {

inline constexpr const char *kVersion = "0.1.0";

/// Configuration of one verification run. A fixed seed makes the run fully
/// reproducible; jobs only changes scheduling, never results.
struct RunConfig {
  std::vector<std::string> ids; // empty = every registry entry
  uint64_t pmin = 2;
  uint64_t pmax = 97;
  uint32_t amax = 1;
  DMode dmode = DMode::All;
  std::vector<int64_t> mset; // empty = default sweep
  uint64_t seed = 1;
  uint32_t jobs = 0; // 0 = hardware concurrency
  uint64_t pa_max = 2500;
};

struct IdentityBounds {
  uint32_t nmax = 12;
  uint32_t dmax = 15;
  uint32_t cor_nmax = 20;
  uint32_t cor_dmax = 20;
  uint32_t lemma_nmax = 30;
  uint32_t staver_nmax = 50;
  uint32_t jobs = 0;
};

struct IdentityRow {
  std::string id; // "2.1", "2.2", "2.3", "2.4", "2.5", "4.1", "staver"
  int64_t n = 0;
  std::optional<int64_t> d;
  Verdict verdict = Verdict::Error;
  std::string detail;
};

enum class ReportKind { Verify, Identities, Conjecture, WssScan };

struct IdSummary {
  uint64_t instances = 0;
  uint64_t passes = 0;
  uint64_t failures = 0;
  uint64_t errors = 0;
  uint64_t conjecture_fails = 0;
};

/// Results of one run. Wall time is measured and kept here, but serialized
/// reports always emit elapsed_ms = 0 so that identical configurations
/// produce byte-identical files; the CLI prints the measured time on stderr.
struct Report {
  ReportKind kind = ReportKind::Verify;
  std::string version = kVersion;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CheckResult> rows;          // verify / conjecture
  std::vector<IdentityRow> identity_rows; // identities
  std::vector<uint64_t> wss_found;        // wss scan
  uint64_t wss_scanned = 0;
  uint64_t elapsed_ms = 0;
};

std::vector<std::pair<std::string, IdSummary>> summarize(const Report &report);

/// Failures and errors that should fail a run; conjecture outcomes never
/// count. 0 = clean, 1 = failures or errors present.
int report_exit_code(const Report &report);

Report run_verify(const RunConfig &config);
Report run_identities(const IdentityBounds &bounds);
Report run_conjecture(uint64_t pmax, uint32_t amax, uint32_t jobs = 0);

/// Primes p <= pmax (p != 2, 5) with F_{p-(p|5)} == 0 (mod p^2).
Report run_wss_scan(uint64_t pmax);

enum class Format { Json, Csv, Text };
std::optional<Format> parse_format(std::string_view name);
std::string render_report(const Report &report, Format format);

} // namespace cbcongr
