#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "cbcongr/harness.hpp"

using namespace cbcongr;

TEST_CASE("verify run: fermat-quotient entry over the odd primes") {
  RunConfig cfg;
  cfg.ids = {"1.12"};
  cfg.pmin = 3;
  cfg.pmax = 97;
  Report r = run_verify(cfg);
  auto sum = summarize(r);
  REQUIRE(sum.size() == 1);
  CHECK(sum[0].first == "1.12");
  CHECK(sum[0].second.instances == 24); // odd primes up to 97
  CHECK(sum[0].second.passes == 24);
  CHECK(report_exit_code(r) == 0);
}

TEST_CASE("verify run: Wolstenholme over a narrow window") {
  RunConfig cfg;
  cfg.ids = {"W"};
  cfg.pmin = 5;
  cfg.pmax = 13;
  Report r = run_verify(cfg);
  auto sum = summarize(r);
  REQUIRE(sum.size() == 1);
  CHECK(sum[0].second.instances == 4); // 5, 7, 11, 13
  CHECK(sum[0].second.failures == 0);
  CHECK(sum[0].second.errors == 0);
}

TEST_CASE("reports are byte-identical across repeat runs and job counts") {
  RunConfig cfg;
  cfg.ids = {"1.3", "1.20", "L3.1"};
  cfg.pmax = 13;
  cfg.amax = 2;
  cfg.seed = 5;
  cfg.jobs = 1;
  Report r1 = run_verify(cfg);
  cfg.jobs = 4;
  Report r2 = run_verify(cfg);
  Report r3 = run_verify(cfg);
  for (Format f : {Format::Json, Format::Csv, Format::Text}) {
    CHECK(render_report(r1, f) == render_report(r2, f));
    CHECK(render_report(r2, f) == render_report(r3, f));
  }
}

TEST_CASE("json report carries the stable schema") {
  RunConfig cfg;
  cfg.ids = {"E"};
  cfg.pmin = 3;
  cfg.pmax = 31;
  Report r = run_verify(cfg);
  auto j = nlohmann::json::parse(render_report(r, Format::Json));
  CHECK(j.contains("version"));
  CHECK(j.contains("config"));
  CHECK(j.contains("results"));
  CHECK(j.contains("summary"));
  CHECK(j.contains("elapsed_ms"));
  CHECK(j["elapsed_ms"] == 0);
  CHECK(j["version"] == kVersion);
  CHECK(j["results"].empty()); // passing rows are summarized, not listed
  CHECK(j["summary"]["E"]["instances"] == 10);
  CHECK(j["summary"]["E"]["passes"] == 10);
  CHECK(j["config"]["ids"] == "E");
  // jobs, output path and format are intentionally not echoed
  CHECK(!j["config"].contains("jobs"));
}

TEST_CASE("csv report has one row per instance") {
  RunConfig cfg;
  cfg.ids = {"W"};
  cfg.pmin = 5;
  cfg.pmax = 31;
  Report r = run_verify(cfg);
  std::string csv = render_report(r, Format::Csv);
  size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == r.rows.size() + 1); // header + instances
  CHECK(csv.rfind("id,p,a,d,m,A,B,modulus,lhs,rhs,verdict\n", 0) == 0);
}

TEST_CASE("identities run over a small grid") {
  IdentityBounds b;
  b.nmax = 4;
  b.dmax = 4;
  b.cor_nmax = 4;
  b.cor_dmax = 4;
  b.lemma_nmax = 5;
  b.staver_nmax = 8;
  Report r = run_identities(b);
  CHECK(report_exit_code(r) == 0);
  uint64_t total = 0;
  for (const auto &[id, s] : summarize(r)) total += s.instances;
  CHECK(total == 2 * 4 * 9 + 3 * 4 * 5 + 5 + 8);
}

TEST_CASE("conjecture run reports residual zero and never fails the build") {
  Report r = run_conjecture(60, 1);
  CHECK(report_exit_code(r) == 0);
  for (const auto &row : r.rows) {
    CHECK(row.verdict == Verdict::Pass);
    CHECK(row.params.p != 2);
    CHECK(row.params.p != 5);
  }
  std::string text = render_report(r, Format::Text);
  CHECK(text.find("residual=0") != std::string::npos);
}

TEST_CASE("conjecture outcomes never flip the exit code") {
  // synthetic report with one conjecture miss and one hard failure
  Report r;
  r.kind = ReportKind::Verify;
  CheckResult miss;
  miss.id = "C1.1";
  miss.params = Params{7, 1, 0, 0, 0, 0};
  miss.modulus = 343;
  miss.lhs = 1;
  miss.rhs = 2;
  miss.verdict = Verdict::ConjectureFail;
  r.rows.push_back(miss);
  CHECK(report_exit_code(r) == 0);
  std::string json = render_report(r, Format::Json);
  CHECK(json.find("CONJECTURE-FAIL") != std::string::npos);

  CheckResult hard = miss;
  hard.id = "W";
  hard.verdict = Verdict::Fail;
  r.rows.push_back(hard);
  CHECK(report_exit_code(r) == 1);

  r.rows.pop_back();
  hard.verdict = Verdict::Error;
  hard.error = "NotInvertible: gcd = 7";
  r.rows.push_back(hard);
  CHECK(report_exit_code(r) == 1);
}

TEST_CASE("wall-sun-sun scan up to 2000 finds nothing") {
  Report r = run_wss_scan(2000);
  CHECK(r.wss_found.empty());
  CHECK(r.wss_scanned == primes_in(3, 2000).size() - 1); // minus p = 5
  CHECK(report_exit_code(r) == 0);
  std::string text = render_report(r, Format::Text);
  CHECK(text.find("no Wall-Sun-Sun primes found") != std::string::npos);
}

TEST_CASE("format parsing") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("text") == Format::Text);
  CHECK(!parse_format("xml"));
}
