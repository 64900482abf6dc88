// damage_lab: exact s-robber damage numbers, bound sweeps and family tables.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource cap.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "damage_lab/family.hpp"
#include "damage_lab/graph6.hpp"
#include "damage_lab/harness.hpp"
#include "damage_lab/solver.hpp"

namespace {

using namespace damage_lab;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct GraphSource {
  std::string family;
  std::string graph6;
  std::string edges;

  Graph load() const {
    const int given = !family.empty() + !graph6.empty() + !edges.empty();
    if (given != 1) throw std::invalid_argument("give exactly one of --family, --graph6, --edges");
    if (!family.empty()) return damage_lab::family(parse_family(family));
    if (!graph6.empty()) return parse_graph6(graph6);
    std::ifstream in(edges);
    if (!in) throw std::invalid_argument("cannot open edge list " + edges);
    return read_edge_list(in);
  }
};

struct Common {
  std::string format = "text";
  std::string cache_dir;
  std::size_t state_cap = solver::SolverOptions{}.state_cap;
  int jobs = 1;

  harness::SweepOptions sweep() const {
    harness::SweepOptions out;
    out.jobs = jobs;
    out.solver.state_cap = state_cap;
    if (!cache_dir.empty()) out.cache_dir = cache_dir;
    return out;
  }
};

void add_common(CLI::App* cmd, Common& common, bool sweeps) {
  cmd->add_option("--format", common.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--state-cap", common.state_cap, "largest solver table, in entries");
  if (sweeps) {
    cmd->add_option("--cache-dir", common.cache_dir, "results cache directory ($DAMAGE_LAB_CACHE wins)");
    cmd->add_option("--jobs", common.jobs, "worker threads (0: one per core)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact s-robber damage numbers of small graphs"};
  app.require_subcommand(1);

  Common common;
  GraphSource source;
  int s = 0;
  int smax = 0;
  int nmax = 0;
  std::string pattern;

  auto* compute = app.add_subcommand("compute", "solve one graph");
  compute->add_option("--family", source.family, "family instance, e.g. path:5 or spider:2,2,1");
  compute->add_option("--graph6", source.graph6, "graph6 string");
  compute->add_option("--edges", source.edges, "edge-list file: \"n m\" then m lines \"u v\"");
  compute->add_option("--s", s, "number of robbers")->required()->check(CLI::PositiveNumber);
  add_common(compute, common, false);

  auto* verify = app.add_subcommand("verify", "check every closed form and bound on all small graphs");
  verify->add_option("--nmax", nmax, "largest order (<= 6)")->required();
  verify->add_option("--smax", smax, "largest robber count (<= 3)")->required();
  add_common(verify, common, true);

  auto* conjecture = app.add_subcommand("conjecture", "search for counterexamples to the degree bound");
  conjecture->add_option("--nmax", nmax, "largest order (<= 7)")->required();
  conjecture->add_option("--s", s, "number of robbers")->required()->check(CLI::PositiveNumber);
  add_common(conjecture, common, true);

  auto* table = app.add_subcommand("table", "solver values against closed forms for a family");
  table->add_option("--family", pattern, "kind:a..b, spider:<legs>:<max leg sum> or one instance")->required();
  table->add_option("--s", s, "smallest robber count")->required()->check(CLI::PositiveNumber);
  table->add_option("--smax", smax, "largest robber count (default: --s)");
  add_common(table, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const harness::Format format = harness::parse_format(common.format);
    if (compute->parsed()) {
      solver::SolverOptions options;
      options.state_cap = common.state_cap;
      std::cout << harness::render(harness::compute(source.load(), s, options), format);
      return kExitPass;
    }
    if (verify->parsed()) {
      const auto report = harness::verify(nmax, smax, common.sweep());
      std::cout << harness::render(report, format);
      return report.ok() ? kExitPass : kExitFailure;
    }
    if (conjecture->parsed()) {
      std::cout << harness::render(harness::conjecture(nmax, s, common.sweep()), format);
      return kExitPass;
    }
    const auto result =
        harness::table(harness::expand_family_pattern(pattern), s, smax == 0 ? s : smax, common.sweep());
    std::cout << harness::render(result, format);
    return result.ok() ? kExitPass : kExitFailure;
  } catch (const solver::StateCapExceeded& e) {
    std::cerr << "damage_lab: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "damage_lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "damage_lab: " << e.what() << '\n';
    return kExitFailure;
  }
}
