#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "damage_lab/family.hpp"
#include "damage_lab/graph.hpp"
#include "damage_lab/solver.hpp"
#include "damage_lab/theory.hpp"

namespace damage_lab::harness {

/// Bumped whenever a rule change could alter stored values.
inline constexpr int kSemanticsVersion = 1;

inline constexpr int kVerifyMaxOrder = 6;
inline constexpr int kVerifyMaxRobbers = 3;

enum class Format { kJson, kCsv, kText };

/// Throws std::invalid_argument for anything but "json", "csv" or "text".
Format parse_format(std::string_view text);

using Predictor = std::function<theory::Prediction(const Graph&, int)>;

struct SweepOptions {
  int jobs = 1;  // <= 0 means one per hardware thread
  solver::SolverOptions solver;
  std::optional<std::filesystem::path> cache_dir;
  Predictor predictor = theory::predicted;
};

/// $DAMAGE_LAB_CACHE when set and nonempty, otherwise `flag`.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

/// Solver values keyed by (canonical graph6, s) for one semantics version,
/// stored as JSON lines in `<dir>/damage-v<version>.jsonl`. Lines written
/// under another version are ignored. Safe to share between threads.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::optional<int> lookup(const std::string& canonical, int s) const;
  void store(const std::string& canonical, int s, int value);
  std::size_t size() const;
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::string, int>, int> values_;
};

struct TagOutcome {
  theory::Bound bound;
  bool pass = false;
};

struct Record {
  std::string graph6;  // canonical
  int order = 0;
  int s = 0;
  std::optional<int> value;  // empty when the solver cap was hit
  theory::Prediction prediction;
  std::vector<TagOutcome> tags;

  bool skipped() const { return !value.has_value(); }
  bool pass() const;
};

struct RunStats {
  double wall_ms = 0;
  double max_instance_ms = 0;
  int jobs = 1;
  std::size_t cache_hits = 0;
  std::size_t cache_rechecked = 0;
  std::size_t cache_mismatches = 0;
};

struct VerificationReport {
  int nmax = 0;
  int smax = 0;
  std::vector<Record> records;  // by order, then canonical code, then s
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  RunStats run;

  bool ok() const { return failed == 0 && run.cache_mismatches == 0; }
};

/// Every graph on 1..nmax vertices against every s in 1..smax. Throws
/// std::invalid_argument outside nmax in [1, 6], smax in [1, 3].
VerificationReport verify(int nmax, int smax, const SweepOptions& options = {});

struct Candidate {
  std::string graph6;
  int order = 0;
  int max_degree = 0;
  int value = 0;
};

struct ConjectureReport {
  int nmax = 0;
  int s = 0;
  int degree_threshold = 0;
  std::size_t examined = 0;  // graphs meeting the degree condition
  std::size_t skipped = 0;
  std::vector<Candidate> candidates;  // value > n - 3 despite the degree condition
  RunStats run;
};

/// Searches graphs on up to nmax vertices with maximum degree at least
/// C(s, 2) + 2 for values above n - 3. Findings are reported, not judged.
ConjectureReport conjecture(int nmax, int s, const SweepOptions& options = {});

struct TableRow {
  std::string instance;
  int order = 0;
  int s = 0;
  std::optional<int> value;
  std::optional<int> closed_form;

  bool match() const { return value && closed_form && *value == *closed_form; }
};

struct FamilyTable {
  std::vector<TableRow> rows;
  RunStats run;

  /// No row whose closed form is known disagrees with the solver.
  bool ok() const;
};

/// Expands "kind:a..b" ranges (single-parameter kinds), "spider:<legs>:<max
/// leg sum>" (every spider with that many legs) and plain instance specs.
std::vector<FamilySpec> expand_family_pattern(std::string_view pattern);

FamilyTable table(const std::vector<FamilySpec>& instances, int s_lo, int s_hi, const SweepOptions& options = {});

struct ComputeResult {
  std::string graph6;
  int s = 0;
  solver::DamageResult result;
  double wall_ms = 0;
};

ComputeResult compute(const Graph& g, int s, const solver::SolverOptions& options = {});

// Renderers. CSV columns are fixed:
//   compute:    graph,s,value,best_cop_start,states,iterations,wall_ms
//   verify:     graph6,n,s,value,lo,hi,exact,status,failed_tags
//   conjecture: graph6,n,max_degree,value,bound
//   table:      instance,n,s,value,closed_form,match
// Timing and cache statistics only appear in the "run" object (json) or the
// trailing summary line (text); CSV carries none except compute's wall_ms.
std::string render(const ComputeResult& r, Format format);
std::string render(const VerificationReport& r, Format format);
std::string render(const ConjectureReport& r, Format format);
std::string render(const FamilyTable& r, Format format);

}  // namespace damage_lab::harness
