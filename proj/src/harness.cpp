#include "cbcongr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cbcongr/identities.hpp"
#include "cbcongr/sequences.hpp"

namespace cbcongr {

namespace {

using ordered_json = nlohmann::ordered_json;

uint32_t effective_jobs(uint32_t requested, size_t work) {
  uint32_t jobs = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (work < jobs) jobs = static_cast<uint32_t>(work == 0 ? 1 : work);
  return jobs;
}

/// Runs f(i) for i in [0, n) on a bounded pool. Output written by index, so
/// scheduling never affects results.
void parallel_for(size_t n, uint32_t jobs, const std::function<void(size_t)> &f) {
  jobs = effective_jobs(jobs, n);
  if (jobs <= 1) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (uint32_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        f(i);
      }
    });
  }
  for (auto &t : pool) t.join();
}

std::string join_i64(const std::vector<int64_t> &v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string dmode_text(DMode mode, const std::optional<int64_t> &fixed) {
  switch (mode) {
  case DMode::All: return "all";
  case DMode::Sample: return "sample";
  case DMode::Fixed:
    return "fixed:" + (fixed ? std::to_string(*fixed) : std::string("?"));
  }
  return "?";
}

uint64_t now_ms() {
  return static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

struct Group {
  const CongruenceSpec *entry;
  std::vector<Params> params;
};

Report run_catalog(const RunConfig &config, ReportKind kind,
                   const std::vector<const CongruenceSpec *> &entries) {
  uint64_t t0 = now_ms();
  InstanceLimits limits;
  limits.pmin = config.pmin;
  limits.pmax = config.pmax;
  limits.amax = config.amax;
  limits.pa_max = config.pa_max;
  limits.dmode = config.dmode;
  limits.mset = config.mset;
  limits.seed = config.seed;

  // One work unit per (entry, p, a): big enough to amortize the shared
  // inverse tables, small enough to spread across workers.
  std::vector<Group> groups;
  for (const auto *entry : entries) {
    std::vector<Params> all = instances(entry->id, limits);
    size_t begin = 0;
    for (size_t i = 1; i <= all.size(); ++i) {
      if (i == all.size() || all[i].p != all[begin].p || all[i].a != all[begin].a) {
        groups.push_back(Group{entry, {all.begin() + begin, all.begin() + i}});
        begin = i;
      }
    }
  }

  std::vector<std::vector<CheckResult>> results(groups.size());
  parallel_for(groups.size(), config.jobs, [&](size_t i) {
    EvalContext ctx;
    auto &out = results[i];
    out.reserve(groups[i].params.size());
    for (const Params &pr : groups[i].params) {
      try {
        out.push_back(evaluate_in(*groups[i].entry, pr, ctx));
      } catch (const Error &e) {
        // instances() prefilters the domain, so this is belt-and-braces:
        // nothing may escape a worker thread
        CheckResult r;
        r.id = groups[i].entry->id;
        r.params = pr;
        r.verdict = Verdict::Error;
        r.error = e.what();
        out.push_back(std::move(r));
      }
    }
  });

  Report report;
  report.kind = kind;
  std::string id_list;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) id_list += ',';
    id_list += entries[i]->id;
  }
  report.config = {
      {"ids", id_list},
      {"pmin", std::to_string(config.pmin)},
      {"pmax", std::to_string(config.pmax)},
      {"amax", std::to_string(config.amax)},
      {"dmode", dmode_text(config.dmode, std::nullopt)},
      {"mset", join_i64(config.mset.empty() ? default_m_sweep() : config.mset)},
      {"seed", std::to_string(config.seed)},
      {"pa_max", std::to_string(config.pa_max)},
  };
  for (auto &chunk : results)
    for (auto &row : chunk) report.rows.push_back(std::move(row));
  report.elapsed_ms = now_ms() - t0;
  return report;
}

} // namespace

std::vector<std::pair<std::string, IdSummary>> summarize(const Report &report) {
  std::vector<std::pair<std::string, IdSummary>> out;
  auto bump = [&out](const std::string &id, Verdict v) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto &e) { return e.first == id; });
    if (it == out.end()) {
      out.emplace_back(id, IdSummary{});
      it = out.end() - 1;
    }
    IdSummary &s = it->second;
    ++s.instances;
    switch (v) {
    case Verdict::Pass: ++s.passes; break;
    case Verdict::Fail: ++s.failures; break;
    case Verdict::Error: ++s.errors; break;
    case Verdict::ConjectureFail: ++s.conjecture_fails; break;
    }
  };
  for (const auto &row : report.rows) bump(row.id, row.verdict);
  for (const auto &row : report.identity_rows) bump(row.id, row.verdict);
  return out;
}

int report_exit_code(const Report &report) {
  for (const auto &row : report.rows)
    if (row.verdict == Verdict::Fail || row.verdict == Verdict::Error) return 1;
  for (const auto &row : report.identity_rows)
    if (row.verdict == Verdict::Fail || row.verdict == Verdict::Error) return 1;
  return 0;
}

Report run_verify(const RunConfig &config) {
  std::vector<const CongruenceSpec *> entries;
  if (config.ids.empty()) {
    for (const auto &e : registry()) entries.push_back(&e);
  } else {
    entries = resolve_ids(config.ids);
  }
  return run_catalog(config, ReportKind::Verify, entries);
}

Report run_conjecture(uint64_t pmax, uint32_t amax, uint32_t jobs) {
  RunConfig config;
  config.ids = {"C1.1"};
  config.pmin = 3;
  config.pmax = pmax;
  config.amax = amax;
  config.jobs = jobs;
  Report r = run_catalog(config, ReportKind::Conjecture, resolve_ids(config.ids));
  r.config = {{"pmax", std::to_string(pmax)}, {"amax", std::to_string(amax)}};
  return r;
}

Report run_identities(const IdentityBounds &bounds) {
  uint64_t t0 = now_ms();
  struct Item {
    std::string id;
    int64_t n;
    std::optional<int64_t> d;
  };
  std::vector<Item> items;
  for (uint32_t n = 1; n <= bounds.nmax; ++n)
    for (int64_t d = -static_cast<int64_t>(bounds.dmax);
         d <= static_cast<int64_t>(bounds.dmax); ++d) {
      items.push_back({"2.1", n, d});
      items.push_back({"2.2", n, d});
    }
  for (uint32_t n = 1; n <= bounds.cor_nmax; ++n)
    for (int64_t d = 0; d <= static_cast<int64_t>(bounds.cor_dmax); ++d) {
      items.push_back({"2.3", n, d});
      items.push_back({"2.4", n, d});
      items.push_back({"2.5", n, d});
    }
  for (uint32_t n = 1; n <= bounds.lemma_nmax; ++n) items.push_back({"4.1", n, std::nullopt});
  for (uint32_t n = 1; n <= bounds.staver_nmax; ++n)
    items.push_back({"staver", n, std::nullopt});

  std::vector<IdentityRow> rows(items.size());
  parallel_for(items.size(), bounds.jobs, [&](size_t i) {
    const Item &it = items[i];
    IdentityRow row;
    row.id = it.id;
    row.n = it.n;
    row.d = it.d;
    try {
      bool ok = false;
      if (it.id == "2.1") ok = check_thm21_u(static_cast<uint32_t>(it.n), *it.d).equal;
      else if (it.id == "2.2") ok = check_thm21_v(static_cast<uint32_t>(it.n), *it.d).equal;
      else if (it.id == "2.3")
        ok = check_cor21(Cor21::Sym3, static_cast<uint32_t>(it.n),
                         static_cast<uint32_t>(*it.d)).equal;
      else if (it.id == "2.4")
        ok = check_cor21(Cor21::Fib, static_cast<uint32_t>(it.n),
                         static_cast<uint32_t>(*it.d)).equal;
      else if (it.id == "2.5")
        ok = check_cor21(Cor21::Luc, static_cast<uint32_t>(it.n),
                         static_cast<uint32_t>(*it.d)).equal;
      else if (it.id == "4.1") {
        auto samples = lemma41_default_samples(static_cast<uint32_t>(it.n));
        auto check = check_lemma41(static_cast<uint32_t>(it.n), samples);
        ok = check.equal();
        if (!ok)
          row.detail = check.equal_poly ? "sample mismatch" : "polynomial mismatch";
      } else {
        ok = check_staver(static_cast<uint32_t>(it.n)).equal;
      }
      row.verdict = ok ? Verdict::Pass : Verdict::Fail;
    } catch (const Error &e) {
      row.verdict = Verdict::Error;
      row.detail = e.what();
    }
    rows[i] = std::move(row);
  });

  Report report;
  report.kind = ReportKind::Identities;
  report.identity_rows = std::move(rows);
  report.config = {
      {"nmax", std::to_string(bounds.nmax)},
      {"dmax", std::to_string(bounds.dmax)},
      {"cor_nmax", std::to_string(bounds.cor_nmax)},
      {"cor_dmax", std::to_string(bounds.cor_dmax)},
      {"lemma_nmax", std::to_string(bounds.lemma_nmax)},
      {"staver_nmax", std::to_string(bounds.staver_nmax)},
  };
  report.elapsed_ms = now_ms() - t0;
  return report;
}

Report run_wss_scan(uint64_t pmax) {
  uint64_t t0 = now_ms();
  Report report;
  report.kind = ReportKind::WssScan;
  report.config = {{"pmax", std::to_string(pmax)}};
  for (uint64_t p : primes_in(2, pmax)) {
    if (p == 2 || p == 5) continue;
    ++report.wss_scanned;
    int e = jacobi(static_cast<int64_t>(p), 5);
    uint64_t p2 = checked_pow(p, 2);
    Residue f = named_sequence(SeqName::F, static_cast<int64_t>(p) - e, p2);
    if (f.value == 0) report.wss_found.push_back(p);
  }
  report.elapsed_ms = now_ms() - t0;
  return report;
}

namespace {

const ParamUse *uses_of(const std::string &id) {
  const CongruenceSpec *e = find_entry(id);
  return e ? &e->uses : nullptr;
}

ordered_json params_json(const CheckResult &row) {
  const ParamUse *uses = uses_of(row.id);
  ordered_json p;
  p["p"] = row.params.p;
  p["a"] = uses && uses->a ? ordered_json(row.params.a) : ordered_json(nullptr);
  p["d"] = uses && uses->d ? ordered_json(row.params.d) : ordered_json(nullptr);
  p["m"] = uses && uses->m ? ordered_json(row.params.m) : ordered_json(nullptr);
  p["A"] = uses && uses->ab ? ordered_json(row.params.A) : ordered_json(nullptr);
  p["B"] = uses && uses->ab ? ordered_json(row.params.B) : ordered_json(nullptr);
  return p;
}

ordered_json row_json(const CheckResult &row) {
  ordered_json r;
  r["id"] = row.id;
  r["params"] = params_json(row);
  r["modulus"] = std::to_string(row.modulus);
  r["lhs"] = row.lhs ? std::to_string(*row.lhs) : "";
  r["rhs"] = row.rhs ? std::to_string(*row.rhs) : "";
  r["verdict"] = to_string(row.verdict);
  if (row.verdict == Verdict::Error) r["error"] = row.error;
  return r;
}

std::string render_json(const Report &report) {
  ordered_json j;
  j["version"] = report.version;
  ordered_json cfg;
  for (const auto &[k, v] : report.config) cfg[k] = v;
  j["config"] = cfg;
  ordered_json results = ordered_json::array();
  if (report.kind == ReportKind::WssScan) {
    for (uint64_t p : report.wss_found) results.push_back({{"p", std::to_string(p)}});
  } else if (report.kind == ReportKind::Identities) {
    for (const auto &row : report.identity_rows) {
      if (row.verdict == Verdict::Pass) continue;
      ordered_json r;
      r["id"] = row.id;
      r["n"] = row.n;
      if (row.d) r["d"] = *row.d;
      r["verdict"] = to_string(row.verdict);
      if (!row.detail.empty()) r["detail"] = row.detail;
      results.push_back(r);
    }
  } else {
    // verify: failing/erroring instances in full; conjecture: every instance
    for (const auto &row : report.rows) {
      if (report.kind == ReportKind::Verify && row.verdict == Verdict::Pass)
        continue;
      results.push_back(row_json(row));
    }
  }
  j["results"] = results;
  ordered_json summary;
  if (report.kind == ReportKind::WssScan) {
    summary["scanned"] = report.wss_scanned;
    summary["found"] = report.wss_found.size();
  } else {
    for (const auto &[id, s] : summarize(report)) {
      ordered_json e;
      e["instances"] = s.instances;
      e["passes"] = s.passes;
      e["failures"] = s.failures;
      e["errors"] = s.errors;
      e["conjecture_fails"] = s.conjecture_fails;
      summary[id] = e;
    }
  }
  j["summary"] = summary;
  j["elapsed_ms"] = 0; // kept deterministic; measured time goes to stderr
  return j.dump(2) + "\n";
}

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const Report &report) {
  std::ostringstream os;
  if (report.kind == ReportKind::WssScan) {
    os << "p\n";
    for (uint64_t p : report.wss_found) os << p << "\n";
    return os.str();
  }
  if (report.kind == ReportKind::Identities) {
    os << "id,n,d,verdict\n";
    for (const auto &row : report.identity_rows) {
      os << row.id << ',' << row.n << ',';
      if (row.d) os << *row.d;
      os << ',' << to_string(row.verdict) << "\n";
    }
    return os.str();
  }
  os << "id,p,a,d,m,A,B,modulus,lhs,rhs,verdict\n";
  for (const auto &row : report.rows) {
    const ParamUse *uses = uses_of(row.id);
    os << csv_escape(row.id) << ',' << row.params.p << ',';
    if (uses && uses->a) os << row.params.a;
    os << ',';
    if (uses && uses->d) os << row.params.d;
    os << ',';
    if (uses && uses->m) os << row.params.m;
    os << ',';
    if (uses && uses->ab) os << row.params.A;
    os << ',';
    if (uses && uses->ab) os << row.params.B;
    os << ',' << row.modulus << ',';
    if (row.lhs) os << *row.lhs;
    os << ',';
    if (row.rhs) os << *row.rhs;
    os << ',' << to_string(row.verdict) << "\n";
  }
  return os.str();
}

void render_params_text(std::ostringstream &os, const CheckResult &row) {
  const ParamUse *uses = uses_of(row.id);
  os << "p=" << row.params.p;
  if (uses && uses->a) os << " a=" << row.params.a;
  if (uses && uses->d) os << " d=" << row.params.d;
  if (uses && uses->m) os << " m=" << row.params.m;
  if (uses && uses->ab) os << " A=" << row.params.A << " B=" << row.params.B;
}

std::string render_text(const Report &report) {
  std::ostringstream os;
  os << "cbcongr " << report.version << "\n";
  os << "config:";
  for (const auto &[k, v] : report.config) os << ' ' << k << '=' << v;
  os << "\n";
  if (report.kind == ReportKind::WssScan) {
    os << "scanned " << report.wss_scanned << " primes\n";
    if (report.wss_found.empty()) {
      os << "no Wall-Sun-Sun primes found\n";
    } else {
      for (uint64_t p : report.wss_found) os << "FOUND p=" << p << "\n";
    }
    return os.str();
  }
  os << "id           instances    passes  failures    errors conj-fails\n";
  uint64_t fails = 0, errors = 0, conj = 0, total = 0;
  for (const auto &[id, s] : summarize(report)) {
    os << id;
    for (size_t i = id.size(); i < 9; ++i) os << ' ';
    auto num = [&os](uint64_t v) {
      std::string t = std::to_string(v);
      for (size_t i = t.size(); i < 10; ++i) os << ' ';
      os << t;
    };
    num(s.instances);
    num(s.passes);
    num(s.failures);
    num(s.errors);
    num(s.conjecture_fails);
    os << "\n";
    fails += s.failures;
    errors += s.errors;
    conj += s.conjecture_fails;
    total += s.instances;
  }
  if (report.kind == ReportKind::Conjecture) {
    os << "residuals (lhs - rhs mod p^3):\n";
    for (const auto &row : report.rows) {
      os << "  ";
      render_params_text(os, row);
      if (row.lhs && row.rhs) {
        uint64_t res = submod(*row.lhs, *row.rhs, row.modulus);
        os << " lhs=" << *row.lhs << " rhs=" << *row.rhs << " residual=" << res;
      }
      os << ' ' << to_string(row.verdict) << "\n";
    }
  } else {
    for (const auto &row : report.rows) {
      if (row.verdict == Verdict::Pass) continue;
      os << "  " << to_string(row.verdict) << ' ' << row.id << ' ';
      render_params_text(os, row);
      os << " modulus=" << row.modulus;
      if (row.lhs) os << " lhs=" << *row.lhs;
      if (row.rhs) os << " rhs=" << *row.rhs;
      if (!row.error.empty()) os << " (" << row.error << ")";
      os << "\n";
    }
    for (const auto &row : report.identity_rows) {
      if (row.verdict == Verdict::Pass) continue;
      os << "  " << to_string(row.verdict) << ' ' << row.id << " n=" << row.n;
      if (row.d) os << " d=" << *row.d;
      if (!row.detail.empty()) os << " (" << row.detail << ")";
      os << "\n";
    }
  }
  os << "total " << total << " instances, " << fails << " failures, " << errors
     << " errors, " << conj << " conjecture-fails\n";
  return os.str();
}

} // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  return std::nullopt;
}

std::string render_report(const Report &report, Format format) {
  switch (format) {
  case Format::Json: return render_json(report);
  case Format::Csv: return render_csv(report);
  case Format::Text: return render_text(report);
  }
  return {};
}

} // namespace cbcongr
