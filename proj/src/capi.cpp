#include "cbcongr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cbcongr/harness.hpp"

using namespace cbcongr;

struct cbc_config {
  RunConfig run;
};

struct cbc_report {
  Report report;
};

namespace {

thread_local std::string g_last_error;

cbc_status fail(cbc_status code, const std::string &msg) {
  g_last_error = msg;
  return code;
}

cbc_status fail_from(const Error &e) {
  switch (e.kind()) {
  case ErrorKind::UnknownId: return fail(CBC_ERROR_UNKNOWN_ID, e.what());
  case ErrorKind::DomainViolation: return fail(CBC_ERROR_DOMAIN, e.what());
  case ErrorKind::BadParameter: return fail(CBC_ERROR_INVALID_ARGUMENT, e.what());
  default: return fail(CBC_ERROR_MATH, e.what());
  }
}

template <typename Fn> cbc_status guarded(Fn &&fn) {
  try {
    return fn();
  } catch (const Error &e) {
    return fail_from(e);
  } catch (const std::exception &e) {
    return fail(CBC_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(CBC_ERROR_INTERNAL, "unknown error");
  }
}

// Domain text cache so registry accessors can hand out stable pointers.
const std::vector<std::string> &domain_texts() {
  static const std::vector<std::string> texts = [] {
    std::vector<std::string> out;
    for (const auto &e : registry()) {
      std::string t = pcond_text(e.pcond);
      if (e.uses.a) t += "; a >= 1";
      if (e.uses.d)
        t += "; d in [" + std::to_string(e.uses.d_min) + ", p^a]";
      if (e.uses.m) t += "; m nonzero, p does not divide m";
      if (e.uses.ab) t += "; (A, B) integers, B != 0";
      out.push_back(std::move(t));
    }
    return out;
  }();
  return texts;
}

} // namespace

extern "C" {

const char *cbc_version(void) { return kVersion; }

const char *cbc_last_error(void) { return g_last_error.c_str(); }

size_t cbc_registry_count(void) { return registry().size(); }

cbc_status cbc_registry_id(size_t index, const char **out_id) {
  if (!out_id || index >= registry().size())
    return fail(CBC_ERROR_INVALID_ARGUMENT, "bad registry index");
  *out_id = registry()[index].id.c_str();
  return CBC_OK;
}

cbc_status cbc_registry_description(size_t index, const char **out_text) {
  if (!out_text || index >= registry().size())
    return fail(CBC_ERROR_INVALID_ARGUMENT, "bad registry index");
  *out_text = registry()[index].description.c_str();
  return CBC_OK;
}

cbc_status cbc_registry_modulus(size_t index, const char **out_rule) {
  if (!out_rule || index >= registry().size())
    return fail(CBC_ERROR_INVALID_ARGUMENT, "bad registry index");
  *out_rule = to_string(registry()[index].modulus_rule);
  return CBC_OK;
}

cbc_status cbc_registry_domain(size_t index, const char **out_text) {
  if (!out_text || index >= registry().size())
    return fail(CBC_ERROR_INVALID_ARGUMENT, "bad registry index");
  *out_text = domain_texts()[index].c_str();
  return CBC_OK;
}

cbc_status cbc_registry_is_conjecture(size_t index, int *out_flag) {
  if (!out_flag || index >= registry().size())
    return fail(CBC_ERROR_INVALID_ARGUMENT, "bad registry index");
  *out_flag = registry()[index].conjecture ? 1 : 0;
  return CBC_OK;
}

cbc_config *cbc_config_new(void) { return new (std::nothrow) cbc_config{}; }

void cbc_config_free(cbc_config *config) { delete config; }

cbc_status cbc_config_add_id(cbc_config *config, const char *id) {
  if (!config || !id) return fail(CBC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    resolve_ids({std::string(id)}); // validate now, fail early
    config->run.ids.emplace_back(id);
    return CBC_OK;
  });
}

cbc_status cbc_config_set_prime_range(cbc_config *config, uint64_t pmin, uint64_t pmax) {
  if (!config) return fail(CBC_ERROR_INVALID_ARGUMENT, "null config");
  if (pmin < 2 || pmin > pmax)
    return fail(CBC_ERROR_INVALID_ARGUMENT, "need 2 <= pmin <= pmax");
  config->run.pmin = pmin;
  config->run.pmax = pmax;
  return CBC_OK;
}

cbc_status cbc_config_set_amax(cbc_config *config, uint32_t amax) {
  if (!config || amax < 1)
    return fail(CBC_ERROR_INVALID_ARGUMENT, "amax must be >= 1");
  config->run.amax = amax;
  return CBC_OK;
}

cbc_status cbc_config_set_dmode(cbc_config *config, const char *mode) {
  if (!config || !mode) return fail(CBC_ERROR_INVALID_ARGUMENT, "null argument");
  std::string m(mode);
  if (m == "all") config->run.dmode = DMode::All;
  else if (m == "sample") config->run.dmode = DMode::Sample;
  else return fail(CBC_ERROR_INVALID_ARGUMENT, "dmode must be all or sample");
  return CBC_OK;
}

cbc_status cbc_config_add_m(cbc_config *config, int64_t m) {
  if (!config) return fail(CBC_ERROR_INVALID_ARGUMENT, "null config");
  if (m == 0) return fail(CBC_ERROR_INVALID_ARGUMENT, "m must be nonzero");
  config->run.mset.push_back(m);
  return CBC_OK;
}

cbc_status cbc_config_set_seed(cbc_config *config, uint64_t seed) {
  if (!config) return fail(CBC_ERROR_INVALID_ARGUMENT, "null config");
  config->run.seed = seed;
  return CBC_OK;
}

cbc_status cbc_config_set_jobs(cbc_config *config, uint32_t jobs) {
  if (!config) return fail(CBC_ERROR_INVALID_ARGUMENT, "null config");
  config->run.jobs = jobs;
  return CBC_OK;
}

cbc_status cbc_run_verify(const cbc_config *config, cbc_report **out_report) {
  if (!config || !out_report)
    return fail(CBC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto *r = new cbc_report{run_verify(config->run)};
    *out_report = r;
    return CBC_OK;
  });
}

cbc_status cbc_run_identities(uint32_t nmax, uint32_t dmax, uint32_t cor_nmax,
                              uint32_t cor_dmax, uint32_t lemma_nmax,
                              uint32_t staver_nmax, uint32_t jobs,
                              cbc_report **out_report) {
  if (!out_report) return fail(CBC_ERROR_INVALID_ARGUMENT, "null out_report");
  if (nmax < 1 || cor_nmax < 1 || lemma_nmax < 1 || staver_nmax < 1)
    return fail(CBC_ERROR_INVALID_ARGUMENT, "bounds must be positive");
  return guarded([&] {
    IdentityBounds b{nmax, dmax, cor_nmax, cor_dmax, lemma_nmax, staver_nmax, jobs};
    *out_report = new cbc_report{run_identities(b)};
    return CBC_OK;
  });
}

cbc_status cbc_run_conjecture(uint64_t pmax, uint32_t amax, uint32_t jobs,
                              cbc_report **out_report) {
  if (!out_report) return fail(CBC_ERROR_INVALID_ARGUMENT, "null out_report");
  if (amax < 1) return fail(CBC_ERROR_INVALID_ARGUMENT, "amax must be >= 1");
  return guarded([&] {
    *out_report = new cbc_report{run_conjecture(pmax, amax, jobs)};
    return CBC_OK;
  });
}

cbc_status cbc_run_wss_scan(uint64_t pmax, cbc_report **out_report) {
  if (!out_report) return fail(CBC_ERROR_INVALID_ARGUMENT, "null out_report");
  return guarded([&] {
    *out_report = new cbc_report{run_wss_scan(pmax)};
    return CBC_OK;
  });
}

void cbc_report_free(cbc_report *report) { delete report; }

cbc_status cbc_report_render(const cbc_report *report, const char *format,
                             char **out_text) {
  if (!report || !format || !out_text)
    return fail(CBC_ERROR_INVALID_ARGUMENT, "null argument");
  auto f = parse_format(format);
  if (!f) return fail(CBC_ERROR_INVALID_ARGUMENT, "format must be json, csv or text");
  return guarded([&] {
    std::string text = render_report(report->report, *f);
    char *buf = static_cast<char *>(std::malloc(text.size() + 1));
    if (!buf) return fail(CBC_ERROR_INTERNAL, "out of memory");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out_text = buf;
    return CBC_OK;
  });
}

void cbc_string_free(char *text) { std::free(text); }

uint64_t cbc_report_instances(const cbc_report *report) {
  if (!report) return 0;
  uint64_t n = 0;
  for (const auto &[id, s] : summarize(report->report)) n += s.instances;
  return n;
}

uint64_t cbc_report_passes(const cbc_report *report) {
  if (!report) return 0;
  uint64_t n = 0;
  for (const auto &[id, s] : summarize(report->report)) n += s.passes;
  return n;
}

uint64_t cbc_report_failures(const cbc_report *report) {
  if (!report) return 0;
  uint64_t n = 0;
  for (const auto &[id, s] : summarize(report->report)) n += s.failures;
  return n;
}

uint64_t cbc_report_errors(const cbc_report *report) {
  if (!report) return 0;
  uint64_t n = 0;
  for (const auto &[id, s] : summarize(report->report)) n += s.errors;
  return n;
}

uint64_t cbc_report_conjecture_fails(const cbc_report *report) {
  if (!report) return 0;
  uint64_t n = 0;
  for (const auto &[id, s] : summarize(report->report)) n += s.conjecture_fails;
  return n;
}

uint64_t cbc_report_elapsed_ms(const cbc_report *report) {
  return report ? report->report.elapsed_ms : 0;
}

int cbc_report_exit_code(const cbc_report *report) {
  return report ? report_exit_code(report->report) : 1;
}

} // extern "C"
