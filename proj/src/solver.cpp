#include "damage_lab/solver.hpp"

#include <algorithm>
#include <functional>

namespace damage_lab::solver {

using game::GameState;
using game::Multiset;
using game::Phase;

namespace {

VertexSet occupied(const Multiset& m) {
  VertexSet set = 0;
  for (Vertex v : m) set |= singleton(v);
  return set;
}

}  // namespace

Solution::Solution(const Graph& g, int s)
    : graph_(g), robbers_(s), n_(static_cast<std::size_t>(g.order())) {}

std::shared_ptr<const Solution> Solution::solve(const Graph& g, int s, const SolverOptions& options) {
  if (s < 1) throw std::invalid_argument("damage_number: need at least one robber");
  std::shared_ptr<Solution> sol(new Solution(g, s));
  sol->build_tables(options.state_cap);

  std::vector<std::uint8_t> prev;
  const VertexSet full = g.vertices();
  for (VertexSet undamaged = 1; undamaged <= full; ++undamaged) sol->solve_slice(undamaged, prev);

  DamageResult& r = sol->result_;
  r.value = std::numeric_limits<int>::max();
  for (Vertex c = 0; c < g.order(); ++c) {
    const int v = sol->placement_value(c);
    if (v < r.value) {
      r.value = v;
      r.best_cop_start = c;
    }
  }
  return sol;
}

void Solution::build_tables(std::size_t cap) {
  const std::size_t n = n_;
  const auto s = static_cast<std::size_t>(robbers_);

  // choose_[k][m] = C(m + k - 1, k), saturating so oversized instances fail the cap check.
  constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;
  choose_.assign(s + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t m = 0; m <= n; ++m) choose_[0][m] = 1;
  for (std::size_t k = 1; k <= s; ++k) {
    for (std::size_t m = 1; m <= n; ++m) {
      choose_[k][m] = std::min(kSaturated, choose_[k - 1][m] + choose_[k][m - 1]);
    }
  }
  std::uint64_t ids = 0;
  for (std::size_t k = 0; k <= s; ++k) ids = std::min(kSaturated, ids + choose_[k][n]);

  const auto too_big = [&] {
    throw StateCapExceeded("instance needs more than " + std::to_string(cap) + " table entries (n=" +
                           std::to_string(n) + ", s=" + std::to_string(s) + ")");
  };
  if (n >= 40 || ids > cap) too_big();
  const std::uint64_t entries = (std::uint64_t{1} << n) * 2 * n * ids;
  if (entries / ids / n / 2 != (std::uint64_t{1} << n) || entries > cap) too_big();
  ids_ = static_cast<std::size_t>(ids);

  size_offset_.clear();
  multisets_.clear();
  multisets_.reserve(ids_);
  for (std::size_t k = 0; k <= s; ++k) {
    size_offset_.push_back(static_cast<std::uint32_t>(multisets_.size()));
    game::for_each_multiset(static_cast<int>(n), static_cast<int>(k),
                            [&](const Multiset& m) { multisets_.push_back(m); });
  }

  occupied_.resize(ids_);
  strip_.resize(n * ids_);
  for (std::uint32_t id = 0; id < ids_; ++id) {
    const Multiset& m = multisets_[id];
    occupied_[id] = occupied(m);
    for (Vertex c = 0; c < static_cast<Vertex>(n); ++c) {
      Multiset rest;
      for (Vertex v : m) {
        if (v != c) rest.push_back(v);
      }
      strip_[static_cast<std::size_t>(c) * ids_ + id] = id_of(rest);
    }
  }

  // Distinct joint robber moves per multiset, deduplicated with a stamp array.
  move_begin_.assign(ids_ + 1, 0);
  moves_.clear();
  std::vector<std::uint32_t> stamp(ids_, 0);
  for (std::uint32_t id = 0; id < ids_; ++id) {
    move_begin_[id] = static_cast<std::uint32_t>(moves_.size());
    const Multiset& from = multisets_[id];
    Multiset dest(from.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == from.size()) {
        Multiset sorted = dest;
        std::sort(sorted.begin(), sorted.end());
        const std::uint32_t to = id_of(sorted);
        if (stamp[to] != id + 1) {
          stamp[to] = id + 1;
          moves_.push_back(to);
        }
        return;
      }
      const bool same_source = i > 0 && from[i] == from[i - 1];
      for_each_vertex(graph_.closed_neighborhood(from[i]), [&](Vertex v) {
        if (same_source && v < dest[i - 1]) return;
        dest[i] = v;
        rec(i + 1);
      });
    };
    rec(0);
    std::sort(moves_.begin() + move_begin_[id], moves_.end());
  }
  move_begin_[ids_] = static_cast<std::uint32_t>(moves_.size());

  values_.assign(static_cast<std::size_t>(entries), 0);
  ranks_.assign(static_cast<std::size_t>(entries), 0);
  result_.states_explored = 0;
  result_.iterations = 0;
}

std::uint32_t Solution::id_of(const Multiset& sorted) const {
  std::size_t k = sorted.size();
  std::uint64_t id = size_offset_.at(k);
  std::size_t lowest = 0;
  for (Vertex x : sorted) {
    const auto v = static_cast<std::size_t>(x);
    id += choose_[k][n_ - lowest] - choose_[k][n_ - v];
    lowest = v;
    --k;
  }
  return static_cast<std::uint32_t>(id);
}

void Solution::solve_slice(VertexSet undamaged, std::vector<std::uint8_t>& prev) {
  const std::size_t slice = 2 * n_ * ids_;
  const std::size_t base = index(undamaged, kCop, 0, 0);
  prev.assign(values_.begin() + static_cast<std::ptrdiff_t>(base),
              values_.begin() + static_cast<std::ptrdiff_t>(base + slice));
  const auto local = [&](Side side, Vertex c, std::uint32_t id) {
    return (static_cast<std::size_t>(side) * n_ + static_cast<std::size_t>(c)) * ids_ + id;
  };
  const int ceiling = popcount(undamaged);

  std::size_t evaluated = 0;
  for (std::uint32_t sweep = 1;; ++sweep) {
    if (sweep > std::numeric_limits<std::uint16_t>::max()) {
      throw std::logic_error("value iteration failed to converge within the rank range");
    }
    bool changed = false;
    evaluated = 0;
    for (Vertex c = 0; c < static_cast<Vertex>(n_); ++c) {
      const VertexSet cop_moves = graph_.closed_neighborhood(c);
      for (std::uint32_t id = 1; id < ids_; ++id) {
        if (contains(occupied_[id], c)) continue;
        evaluated += 2;

        int low = std::numeric_limits<int>::max();
        for_each_vertex(cop_moves, [&](Vertex next) {
          const std::uint32_t survivors = strip(next, id);
          const VertexSet hit = occupied_[survivors] & undamaged;
          const int after = hit != 0 ? values_[index(undamaged & ~hit, kRobbers, next, survivors)]
                                     : prev[local(kRobbers, next, survivors)];
          low = std::min(low, popcount(hit) + after);
        });

        int high = 0;
        for (std::uint32_t m = move_begin_[id]; m < move_begin_[id + 1] && high < ceiling; ++m) {
          high = std::max<int>(high, prev[local(kCop, c, strip(c, moves_[m]))]);
        }

        for (const auto& [side, v] : {std::pair{kCop, low}, std::pair{kRobbers, high}}) {
          const std::size_t at = base + local(side, c, id);
          if (v != prev[local(side, c, id)]) {
            values_[at] = static_cast<std::uint8_t>(v);
            ranks_[at] = static_cast<std::uint16_t>(sweep);
            changed = true;
          }
        }
      }
    }
    ++result_.iterations;
    if (!changed) break;
    std::copy(values_.begin() + static_cast<std::ptrdiff_t>(base),
              values_.begin() + static_cast<std::ptrdiff_t>(base + slice), prev.begin());
  }
  result_.states_explored += evaluated;
}

void Solution::check_state(const GameState& st) const {
  if (st.cop < 0 || st.cop >= graph_.order()) throw std::invalid_argument("state: cop is not a vertex");
  if ((st.undamaged & ~graph_.vertices()) != 0) throw std::invalid_argument("state: undamaged set out of range");
  if (static_cast<int>(st.robbers.size()) > robbers_) {
    throw std::invalid_argument("state: more robbers than the solved instance");
  }
  if (!std::is_sorted(st.robbers.begin(), st.robbers.end())) {
    throw std::invalid_argument("state: robbers must be a sorted multiset");
  }
  for (Vertex r : st.robbers) {
    if (r < 0 || r >= graph_.order()) throw std::invalid_argument("state: robber is not a vertex");
    if (r == st.cop && st.phase != Phase::kRobbersToPlace) {
      throw std::invalid_argument("state: robber shares the cop's vertex");
    }
  }
}

std::pair<std::uint32_t, int> Solution::best_placement(VertexSet undamaged, Vertex cop) const {
  std::uint32_t best = size_offset_[static_cast<std::size_t>(robbers_)];
  int best_value = -1;
  int best_rank = 0;
  for (std::uint32_t id = best; id < ids_; ++id) {
    const std::size_t at = index(undamaged, kCop, cop, strip(cop, id));
    const int v = values_[at];
    if (v > best_value || (v == best_value && ranks_[at] < best_rank)) {
      best = id;
      best_value = v;
      best_rank = ranks_[at];
    }
  }
  return {best, best_value};
}

int Solution::value(const GameState& st) const {
  check_state(st);
  switch (st.phase) {
    case Phase::kRobbersToPlace:
      return best_placement(st.undamaged, st.cop).second;
    case Phase::kCopToMove:
      return values_[index(st.undamaged, kCop, st.cop, id_of(st.robbers))];
    case Phase::kRobbersToMove:
      return values_[index(st.undamaged, kRobbers, st.cop, id_of(st.robbers))];
  }
  return 0;
}

int Solution::placement_value(Vertex cop) const {
  if (cop < 0 || cop >= graph_.order()) throw std::invalid_argument("placement_value: cop is not a vertex");
  return best_placement(graph_.vertices(), cop).second;
}

Multiset Solution::robber_placement(Vertex cop) const {
  if (cop < 0 || cop >= graph_.order()) throw std::invalid_argument("robber_placement: cop is not a vertex");
  return multisets_[best_placement(graph_.vertices(), cop).first];
}

Vertex Solution::cop_move(const GameState& st) const {
  check_state(st);
  if (st.phase != Phase::kCopToMove) throw game::IllegalMove("cop_move: wrong phase");
  const std::uint32_t id = id_of(st.robbers);
  Vertex best = st.cop;
  int best_score = std::numeric_limits<int>::max();
  for_each_vertex(graph_.closed_neighborhood(st.cop), [&](Vertex next) {
    const std::uint32_t survivors = strip(next, id);
    const VertexSet hit = occupied_[survivors] & st.undamaged;
    const int score = popcount(hit) + values_[index(st.undamaged & ~hit, kRobbers, next, survivors)];
    if (score < best_score) {
      best_score = score;
      best = next;
    }
  });
  return best;
}

Multiset Solution::robber_move(const GameState& st) const {
  check_state(st);
  if (st.phase != Phase::kRobbersToMove) throw game::IllegalMove("robber_move: wrong phase");
  const std::uint32_t id = id_of(st.robbers);
  std::uint32_t best = moves_.empty() ? 0 : moves_[move_begin_[id]];
  int best_value = -1;
  int best_rank = 0;
  for (std::uint32_t m = move_begin_[id]; m < move_begin_[id + 1]; ++m) {
    const std::size_t at = index(st.undamaged, kCop, st.cop, strip(st.cop, moves_[m]));
    const int v = values_[at];
    if (v > best_value || (v == best_value && ranks_[at] < best_rank)) {
      best = moves_[m];
      best_value = v;
      best_rank = ranks_[at];
    }
  }
  return multisets_[best];
}

DamageResult damage_number(const Graph& g, int s, const SolverOptions& options) {
  return Solution::solve(g, s, options)->result();
}

int game_value(const Graph& g, int s, const GameState& st, const SolverOptions& options) {
  return Solution::solve(g, s, options)->value(st);
}

std::pair<game::CopPolicy, game::RobberPolicy> extract_policies(const Graph& g, int s,
                                                                const SolverOptions& options) {
  std::shared_ptr<const Solution> sol = Solution::solve(g, s, options);
  game::CopPolicy cop{[sol] { return sol->cop_start(); },
                      [sol](const GameState& st) { return sol->cop_move(st); }};
  game::RobberPolicy robbers{[sol](Vertex c) { return sol->robber_placement(c); },
                             [sol](const GameState& st) { return sol->robber_move(st); }};
  return {std::move(cop), std::move(robbers)};
}

int verify_policy_value(const Graph& g, int s, const game::CopPolicy& cop, const game::RobberPolicy& robbers,
                        int max_rounds) {
  const game::Transcript t = game::play(g, s, cop, robbers, max_rounds);
  if (t.end == game::EndReason::kRoundLimit) {
    throw std::runtime_error("policy simulation did not terminate within " + std::to_string(max_rounds) +
                             " rounds");
  }
  return t.total_damage();
}

}  // namespace damage_lab::solver
