#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbcongr/binomial.hpp"
#include "cbcongr/modarith.hpp"

namespace cbcongr {

/// One parameter assignment for a catalog entry. Fields an entry does not
/// use stay at their defaults and are omitted from serialized output.
struct Params {
  uint64_t p = 0;
  uint32_t a = 1;
  int64_t d = 0;
  int64_t m = 0;
  int64_t A = 0;
  int64_t B = 0;

  friend bool operator==(const Params &, const Params &) = default;
};

enum class ModulusRule { P, P2, P3, P4 };
uint64_t apply_modulus_rule(ModulusRule rule, uint64_t p);
const char *to_string(ModulusRule rule);

enum class Verdict { Pass, Fail, Error, ConjectureFail };
const char *to_string(Verdict v);

struct CheckResult {
  std::string id;
  Params params;
  uint64_t modulus = 0;
  std::optional<uint64_t> lhs;
  std::optional<uint64_t> rhs;
  Verdict verdict = Verdict::Error;
  std::string error;
};

/// Which parameters an entry consumes; drives enumeration and serialization.
struct ParamUse {
  bool a = false;
  bool d = false;
  int64_t d_min = 0; // lower end of the d range; upper end is always p^a
  bool m = false;
  bool ab = false;
};

/// Prime-level side condition of an entry.
enum class PCond { Any, Odd, OddNot3, OddNot5, Gt3 };
bool pcond_ok(PCond cond, uint64_t p);
const char *pcond_text(PCond cond);

/// Per-batch scratch: unit-inverse tables shared by the streams of one
/// parameter sweep. Single-owner; each worker keeps its own.
class EvalContext {
public:
  const UnitInverseTable *table(uint64_t p, uint32_t digits, uint64_t max_n);

private:
  std::map<std::pair<uint64_t, uint32_t>, UnitInverseTable> tables_;
};

/// A checkable congruence: parameter domain, modulus rule, and a pair of
/// independent evaluators. The two sides share nothing beyond the kernel
/// modules -- that independence is what makes a pass meaningful.
struct CongruenceSpec {
  std::string id;
  std::string description;
  ModulusRule modulus_rule = ModulusRule::P;
  bool conjecture = false;
  ParamUse uses;
  PCond pcond = PCond::Any;
  // Extra side condition beyond the common ones; fills `why` on violation.
  std::function<bool(const Params &, std::string *why)> extra;
  std::function<Residue(const Params &, EvalContext &)> lhs;
  std::function<Residue(const Params &, EvalContext &)> rhs;
};

const std::vector<CongruenceSpec> &registry();

/// Exact id lookup; nullptr when unknown.
const CongruenceSpec *find_entry(std::string_view id);

/// Exact match, or expansion of a bare id to its lettered sub-entries
/// ("1.17" -> {"1.17a", "1.17b"}). Throws UnknownId.
std::vector<const CongruenceSpec *> resolve_ids(const std::vector<std::string> &ids);

/// Checks the entry's full domain predicate; fills `why` on violation.
bool in_domain(const CongruenceSpec &entry, const Params &params, std::string *why);

/// Evaluates both sides; kernel errors are captured into an error verdict.
/// Throws UnknownId / DomainViolation for bad requests.
CheckResult evaluate(std::string_view id, const Params &params);
CheckResult evaluate_in(const CongruenceSpec &entry, const Params &params,
                        EvalContext &ctx);

enum class DMode { All, Sample, Fixed };

struct InstanceLimits {
  uint64_t pmin = 2;
  uint64_t pmax = 97;
  uint32_t amax = 1;
  uint64_t pa_max = 2500; // skip (p, a) with a >= 2 and p^a beyond this
  DMode dmode = DMode::All;
  std::optional<int64_t> d_fixed;
  std::vector<int64_t> mset; // empty = default sweep
  uint64_t seed = 1;
  uint32_t d_samples = 8;
  uint32_t ab_pairs = 25;
};

/// The default m sweep: +-1..+-6, 7..12 (multiples of p are filtered out
/// per prime during enumeration).
std::vector<int64_t> default_m_sweep();

/// Enumerates the entry's parameter domain under the limits, in canonical
/// order (p, then a, then m ascending, then d, then (A, B) pair index).
/// Fully deterministic for a fixed seed.
std::vector<Params> instances(std::string_view id, const InstanceLimits &limits);

} // namespace cbcongr
