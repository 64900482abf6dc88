#include "damage_lab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "damage_lab/canonical.hpp"
#include "damage_lab/graph6.hpp"
#include "json.hpp"

namespace damage_lab::harness {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::json;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const auto workers = static_cast<std::size_t>(jobs);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Task {
  Graph graph;
  int s;
};

// Solver values for a batch of instances, in task order. Cache hits are
// re-solved with probability 1/10 under a fixed seed, so the sample is the
// same on every run over the same cache contents.
std::vector<std::optional<int>> evaluate(const std::vector<Task>& tasks, const SweepOptions& options,
                                         RunStats& stats) {
  const auto start = Clock::now();
  std::optional<ResultCache> cache;
  if (auto dir = resolve_cache_dir(options.cache_dir)) cache.emplace(*dir);

  std::vector<std::string> keys(tasks.size());
  std::vector<std::optional<int>> cached(tasks.size());
  std::vector<char> recheck(tasks.size(), 0);
  std::mt19937 rng(0x5eed);
  std::bernoulli_distribution sample(0.1);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!cache || tasks[i].graph.order() > kCanonicalMaxVertices) continue;
    keys[i] = canonical_graph6(tasks[i].graph);
    cached[i] = cache->lookup(keys[i], tasks[i].s);
    if (cached[i]) {
      ++stats.cache_hits;
      recheck[i] = sample(rng) ? 1 : 0;
      stats.cache_rechecked += static_cast<std::size_t>(recheck[i]);
    }
  }

  std::vector<std::optional<int>> values(tasks.size());
  std::vector<double> elapsed(tasks.size(), 0);
  std::atomic<std::size_t> mismatches{0};
  run_parallel(tasks.size(), options.jobs, [&](std::size_t i) {
    if (cached[i] && !recheck[i]) {
      values[i] = cached[i];
      return;
    }
    const auto t0 = Clock::now();
    try {
      values[i] = solver::damage_number(tasks[i].graph, tasks[i].s, options.solver).value;
    } catch (const solver::StateCapExceeded&) {
      values[i].reset();
    }
    elapsed[i] = ms_since(t0);
    if (!values[i]) return;
    if (cached[i]) {
      if (*cached[i] != *values[i]) ++mismatches;
    } else if (cache && !keys[i].empty()) {
      cache->store(keys[i], tasks[i].s, *values[i]);
    }
  });

  stats.cache_mismatches += mismatches.load();
  stats.jobs = options.jobs;
  for (double ms : elapsed) stats.max_instance_ms = std::max(stats.max_instance_ms, ms);
  stats.wall_ms += ms_since(start);
  return values;
}

std::vector<Task> census_tasks(int nmax, int s_lo, int s_hi) {
  std::vector<Task> tasks;
  for (int n = 1; n <= nmax; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      for (int s = s_lo; s <= s_hi; ++s) tasks.push_back({g, s});
    }
  }
  return tasks;
}

json run_json(const RunStats& run) {
  return {{"wall_ms", run.wall_ms},
          {"max_instance_ms", run.max_instance_ms},
          {"jobs", run.jobs},
          {"cache_hits", run.cache_hits},
          {"cache_rechecked", run.cache_rechecked},
          {"cache_mismatches", run.cache_mismatches}};
}

std::string run_text(const RunStats& run) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << "wall " << run.wall_ms << " ms (slowest instance "
      << run.max_instance_ms << " ms), jobs " << run.jobs << ", cache hits " << run.cache_hits << " (rechecked "
      << run.cache_rechecked << ", mismatches " << run.cache_mismatches << ")\n";
  return out.str();
}

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::string optional_text(const std::optional<int>& v, const char* missing) {
  return v ? std::to_string(*v) : std::string(missing);
}

const char* status(const Record& r) {
  if (r.skipped()) return "skipped";
  return r.pass() ? "pass" : "fail";
}

std::string failed_tags(const Record& r) {
  std::string out;
  for (const TagOutcome& t : r.tags) {
    if (t.pass) continue;
    if (!out.empty()) out += ';';
    out += t.bound.tag;
  }
  return out;
}

void check_range(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw std::invalid_argument(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "], got " + std::to_string(value));
  }
}

void spiders(int legs, int max_sum, std::vector<int>& current, int cap, std::vector<std::vector<int>>& out) {
  const int used = std::accumulate(current.begin(), current.end(), 0);
  if (static_cast<int>(current.size()) == legs) {
    out.push_back(current);
    return;
  }
  const int remaining = legs - static_cast<int>(current.size()) - 1;
  for (int k = 1; k <= cap && used + k + remaining <= max_sum; ++k) {
    current.push_back(k);
    spiders(legs, max_sum, current, k, out);
    current.pop_back();
  }
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "text") return Format::kText;
  throw std::invalid_argument("unknown format \"" + std::string(text) + "\" (expected json, csv or text)");
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& flag) {
  if (const char* env = std::getenv("DAMAGE_LAB_CACHE"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return flag;
}

ResultCache::ResultCache(std::filesystem::path dir)
    : file_(std::move(dir) / ("damage-v" + std::to_string(kSemanticsVersion) + ".jsonl")) {
  std::filesystem::create_directories(file_.parent_path());
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json entry = json::parse(line, nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) continue;
    if (entry.value("version", -1) != kSemanticsVersion) continue;
    if (!entry.contains("graph6") || !entry.contains("s") || !entry.contains("value")) continue;
    values_[{entry["graph6"].get<std::string>(), entry["s"].get<int>()}] = entry["value"].get<int>();
  }
}

std::optional<int> ResultCache::lookup(const std::string& canonical, int s) const {
  std::lock_guard lock(mutex_);
  auto it = values_.find({canonical, s});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const std::string& canonical, int s, int value) {
  std::lock_guard lock(mutex_);
  if (!values_.emplace(std::pair{canonical, s}, value).second) return;
  std::ofstream out(file_, std::ios::app);
  out << json{{"graph6", canonical}, {"s", s}, {"value", value}, {"version", kSemanticsVersion}}.dump() << '\n';
  if (!out) throw std::runtime_error("cannot append to cache file " + file_.string());
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

bool Record::pass() const {
  if (!value) return false;
  return prediction.admits(*value) &&
         std::all_of(tags.begin(), tags.end(), [](const TagOutcome& t) { return t.pass; });
}

VerificationReport verify(int nmax, int smax, const SweepOptions& options) {
  check_range("nmax", nmax, 1, kVerifyMaxOrder);
  check_range("smax", smax, 1, kVerifyMaxRobbers);
  VerificationReport report;
  report.nmax = nmax;
  report.smax = smax;

  const std::vector<Task> tasks = census_tasks(nmax, 1, smax);
  const auto values = evaluate(tasks, options, report.run);
  report.records.resize(tasks.size());
  const auto start = Clock::now();
  run_parallel(tasks.size(), options.jobs, [&](std::size_t i) {
    Record& r = report.records[i];
    r.graph6 = canonical_graph6(tasks[i].graph);
    r.order = tasks[i].graph.order();
    r.s = tasks[i].s;
    r.value = values[i];
    r.prediction = options.predictor(tasks[i].graph, tasks[i].s);
    for (const theory::Bound& b : r.prediction.sources) {
      r.tags.push_back({b, r.value && b.admits(*r.value)});
    }
  });
  report.run.wall_ms += ms_since(start);

  for (const Record& r : report.records) {
    if (r.skipped()) {
      ++report.skipped;
    } else if (r.pass()) {
      ++report.passed;
    } else {
      ++report.failed;
    }
  }
  return report;
}

ConjectureReport conjecture(int nmax, int s, const SweepOptions& options) {
  check_range("nmax", nmax, 1, kEnumerateMaxVertices);
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  ConjectureReport report;
  report.nmax = nmax;
  report.s = s;
  report.degree_threshold = theory::conjectured_degree_threshold(s);

  std::vector<Task> tasks;
  for (const Task& t : census_tasks(nmax, s, s)) {
    if (max_degree(t.graph) >= report.degree_threshold) tasks.push_back(t);
  }
  report.examined = tasks.size();
  const auto values = evaluate(tasks, options, report.run);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!values[i]) {
      ++report.skipped;
      continue;
    }
    const int n = tasks[i].graph.order();
    if (*values[i] > n - 3) {
      report.candidates.push_back({canonical_graph6(tasks[i].graph), n, max_degree(tasks[i].graph), *values[i]});
    }
  }
  return report;
}

bool FamilyTable::ok() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const TableRow& r) { return r.value && r.closed_form && *r.value != *r.closed_form; });
}

std::vector<FamilySpec> expand_family_pattern(std::string_view pattern) {
  static const std::regex range(R"(^([a-z]+):(\d+)\.\.(\d+)$)");
  static const std::regex spider_family(R"(^spider:(\d+):(\d+)$)");
  const std::string text(pattern);
  std::smatch m;
  std::vector<FamilySpec> out;
  if (std::regex_match(text, m, range)) {
    const int lo = std::stoi(m[2]);
    const int hi = std::stoi(m[3]);
    if (lo > hi) throw std::invalid_argument("empty range in family pattern \"" + text + "\"");
    for (int v = lo; v <= hi; ++v) out.push_back(parse_family(m[1].str() + ":" + std::to_string(v)));
  } else if (std::regex_match(text, m, spider_family)) {
    const int legs = std::stoi(m[1]);
    const int max_sum = std::stoi(m[2]);
    if (legs < 3) throw std::invalid_argument("a spider needs at least three legs");
    std::vector<std::vector<int>> all;
    std::vector<int> current;
    spiders(legs, max_sum, current, max_sum, all);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      const int sa = std::accumulate(a.begin(), a.end(), 0);
      const int sb = std::accumulate(b.begin(), b.end(), 0);
      return sa != sb ? sa < sb : a < b;
    });
    for (auto& l : all) out.push_back(FamilySpec::spider(std::move(l)));
  } else {
    out.push_back(parse_family(text));
  }
  for (const FamilySpec& spec : out) validate(spec);
  return out;
}

FamilyTable table(const std::vector<FamilySpec>& instances, int s_lo, int s_hi, const SweepOptions& options) {
  if (s_lo < 1 || s_hi < s_lo) throw std::invalid_argument("robber range must satisfy 1 <= s_lo <= s_hi");
  FamilyTable out;
  std::vector<Task> tasks;
  for (const FamilySpec& spec : instances) {
    const Graph g = family(spec);
    for (int s = s_lo; s <= s_hi; ++s) {
      tasks.push_back({g, s});
      out.rows.push_back({to_string(spec), g.order(), s, std::nullopt, theory::closed_form(spec, s)});
    }
  }
  const auto values = evaluate(tasks, options, out.run);
  for (std::size_t i = 0; i < tasks.size(); ++i) out.rows[i].value = values[i];
  return out;
}

ComputeResult compute(const Graph& g, int s, const solver::SolverOptions& options) {
  const auto start = Clock::now();
  ComputeResult out;
  out.graph6 = write_graph6(g);
  out.s = s;
  out.result = solver::damage_number(g, s, options);
  out.wall_ms = ms_since(start);
  return out;
}

std::string render(const ComputeResult& r, Format format) {
  switch (format) {
    case Format::kJson:
      return json{{"graph", r.graph6},
                  {"s", r.s},
                  {"value", r.result.value},
                  {"best_cop_start", r.result.best_cop_start},
                  {"states", r.result.states_explored},
                  {"iterations", r.result.iterations},
                  {"wall_ms", r.wall_ms}}
                 .dump() +
             "\n";
    case Format::kCsv: {
      std::ostringstream out;
      out << "graph,s,value,best_cop_start,states,iterations,wall_ms\n"
          << r.graph6 << ',' << r.s << ',' << r.result.value << ',' << r.result.best_cop_start << ','
          << r.result.states_explored << ',' << r.result.iterations << ',' << std::fixed << std::setprecision(3)
          << r.wall_ms << '\n';
      return out.str();
    }
    case Format::kText: {
      std::ostringstream out;
      out << "dmg(" << r.graph6 << "; " << r.s << ") = " << r.result.value << "\n"
          << "cop starts at " << r.result.best_cop_start << ", " << r.result.states_explored << " states, "
          << r.result.iterations << " sweeps, " << std::fixed << std::setprecision(1) << r.wall_ms << " ms\n";
      return out.str();
    }
  }
  return {};
}

std::string render(const VerificationReport& r, Format format) {
  switch (format) {
    case Format::kJson: {
      json records = json::array();
      for (const Record& rec : r.records) {
        json sources = json::array();
        for (const TagOutcome& t : rec.tags) {
          sources.push_back({{"tag", t.bound.tag},
                             {"lo", t.bound.lo},
                             {"hi", t.bound.hi},
                             {"claim", t.bound.claim},
                             {"pass", t.pass}});
        }
        records.push_back({{"graph6", rec.graph6},
                           {"n", rec.order},
                           {"s", rec.s},
                           {"value", optional_json(rec.value)},
                           {"status", status(rec)},
                           {"prediction",
                            {{"lo", rec.prediction.lo},
                             {"hi", rec.prediction.hi},
                             {"exact", optional_json(rec.prediction.exact)},
                             {"sources", sources}}}});
      }
      json doc{{"nmax", r.nmax},
               {"smax", r.smax},
               {"semantics_version", kSemanticsVersion},
               {"records", records},
               {"summary", {{"records", r.records.size()}, {"passed", r.passed}, {"failed", r.failed},
                            {"skipped", r.skipped}}},
               {"run", run_json(r.run)}};
      return doc.dump(2) + "\n";
    }
    case Format::kCsv: {
      std::ostringstream out;
      out << "graph6,n,s,value,lo,hi,exact,status,failed_tags\n";
      for (const Record& rec : r.records) {
        out << rec.graph6 << ',' << rec.order << ',' << rec.s << ',' << optional_text(rec.value, "") << ','
            << rec.prediction.lo << ',' << rec.prediction.hi << ',' << optional_text(rec.prediction.exact, "")
            << ',' << status(rec) << ',' << failed_tags(rec) << '\n';
      }
      return out.str();
    }
    case Format::kText: {
      std::ostringstream out;
      for (const Record& rec : r.records) {
        out << std::left << std::setw(10) << rec.graph6 << " s=" << rec.s << " value "
            << optional_text(rec.value, "?") << " predicted [" << rec.prediction.lo << ',' << rec.prediction.hi
            << "] " << status(rec);
        if (const std::string tags = failed_tags(rec); !tags.empty() && !rec.skipped()) out << " (" << tags << ")";
        out << '\n';
      }
      out << "verify nmax=" << r.nmax << " smax=" << r.smax << ": " << r.records.size() << " records, "
          << r.passed << " passed, " << r.failed << " failed, " << r.skipped << " skipped\n"
          << run_text(r.run);
      return out.str();
    }
  }
  return {};
}

std::string render(const ConjectureReport& r, Format format) {
  switch (format) {
    case Format::kJson: {
      json candidates = json::array();
      for (const Candidate& c : r.candidates) {
        candidates.push_back({{"graph6", c.graph6}, {"n", c.order}, {"max_degree", c.max_degree},
                              {"value", c.value}, {"bound", c.order - 3}});
      }
      json doc{{"nmax", r.nmax},
               {"s", r.s},
               {"degree_threshold", r.degree_threshold},
               {"examined", r.examined},
               {"skipped", r.skipped},
               {"candidates", candidates},
               {"run", run_json(r.run)}};
      return doc.dump(2) + "\n";
    }
    case Format::kCsv: {
      std::ostringstream out;
      out << "graph6,n,max_degree,value,bound\n";
      for (const Candidate& c : r.candidates) {
        out << c.graph6 << ',' << c.order << ',' << c.max_degree << ',' << c.value << ',' << c.order - 3 << '\n';
      }
      return out.str();
    }
    case Format::kText: {
      std::ostringstream out;
      out << "degree >= " << r.degree_threshold << ", s=" << r.s << ", n <= " << r.nmax << ": " << r.examined
          << " graphs examined, " << r.skipped << " skipped, " << r.candidates.size() << " above n-3\n";
      for (const Candidate& c : r.candidates) {
        out << "  " << c.graph6 << " n=" << c.order << " max_degree=" << c.max_degree << " value=" << c.value
            << " bound=" << c.order - 3 << '\n';
      }
      out << run_text(r.run);
      return out.str();
    }
  }
  return {};
}

std::string render(const FamilyTable& r, Format format) {
  const auto match_text = [](const TableRow& row) -> const char* {
    if (!row.value) return "skipped";
    if (!row.closed_form) return "n/a";
    return row.match() ? "yes" : "no";
  };
  switch (format) {
    case Format::kJson: {
      json rows = json::array();
      for (const TableRow& row : r.rows) {
        rows.push_back({{"instance", row.instance}, {"n", row.order}, {"s", row.s},
                        {"value", optional_json(row.value)}, {"closed_form", optional_json(row.closed_form)},
                        {"match", match_text(row)}});
      }
      return json{{"rows", rows}, {"run", run_json(r.run)}}.dump(2) + "\n";
    }
    case Format::kCsv: {
      std::ostringstream out;
      out << "instance,n,s,value,closed_form,match\n";
      for (const TableRow& row : r.rows) {
        out << '"' << row.instance << "\"," << row.order << ',' << row.s << ',' << optional_text(row.value, "")
            << ',' << optional_text(row.closed_form, "") << ',' << match_text(row) << '\n';
      }
      return out.str();
    }
    case Format::kText: {
      std::ostringstream out;
      out << std::left << std::setw(24) << "instance" << std::setw(4) << "n" << std::setw(4) << "s"
          << std::setw(7) << "value" << std::setw(13) << "closed form" << "match\n";
      for (const TableRow& row : r.rows) {
        out << std::setw(24) << row.instance << std::setw(4) << row.order << std::setw(4) << row.s
            << std::setw(7) << optional_text(row.value, "?") << std::setw(13) << optional_text(row.closed_form, "-")
            << match_text(row) << '\n';
      }
      out << run_text(r.run);
      return out.str();
    }
  }
  return {};
}

}  // namespace damage_lab::harness
