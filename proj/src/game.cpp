#include "damage_lab/game.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace damage_lab::game {

namespace {

void require_phase(const GameState& st, Phase expected, const char* op) {
  if (st.phase != expected) throw IllegalMove(std::string(op) + ": wrong phase");
}

void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.order()) {
    throw IllegalMove(std::string(what) + " " + std::to_string(v) + " is not a vertex");
  }
}

Multiset without(const Multiset& robbers, Vertex v) {
  Multiset out;
  out.reserve(robbers.size());
  for (Vertex r : robbers) {
    if (r != v) out.push_back(r);
  }
  return out;
}

VertexSet occupied(const Multiset& robbers) {
  VertexSet set = 0;
  for (Vertex r : robbers) set |= singleton(r);
  return set;
}

bool augment(const Graph& g, const Multiset& robbers, const Multiset& dest, std::size_t i,
             std::vector<int>& match_of_dest, std::vector<char>& visited) {
  for (std::size_t j = 0; j < dest.size(); ++j) {
    if (visited[j] || !contains(g.closed_neighborhood(robbers[i]), dest[j])) continue;
    visited[j] = 1;
    if (match_of_dest[j] < 0 ||
        augment(g, robbers, dest, static_cast<std::size_t>(match_of_dest[j]), match_of_dest, visited)) {
      match_of_dest[j] = static_cast<int>(i);
      return true;
    }
  }
  return false;
}

nlohmann::json vertex_list(VertexSet set) {
  auto out = nlohmann::json::array();
  for_each_vertex(set, [&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace

std::vector<GameState> initial_cop_states(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("initial_cop_states: need at least one robber");
  std::vector<GameState> out;
  for (Vertex c = 0; c < g.order(); ++c) {
    out.push_back(GameState{c, {}, g.vertices(), Phase::kRobbersToPlace});
  }
  return out;
}

void for_each_multiset(int n, int k, const std::function<void(const Multiset&)>& visit) {
  Multiset current;
  current.reserve(static_cast<std::size_t>(k));
  std::function<void(Vertex)> rec = [&](Vertex lowest) {
    if (static_cast<int>(current.size()) == k) {
      visit(current);
      return;
    }
    for (Vertex v = lowest; v < n; ++v) {
      current.push_back(v);
      rec(v);
      current.pop_back();
    }
  };
  rec(0);
}

std::vector<Multiset> robber_placements(const Graph& g, Vertex cop, int s) {
  require_vertex(g, cop, "cop");
  std::vector<Multiset> out;
  for_each_multiset(g.order(), s, [&](const Multiset& m) { out.push_back(m); });
  return out;
}

GameState place_robbers(const Graph& g, const GameState& st, const Multiset& placement) {
  require_phase(st, Phase::kRobbersToPlace, "place_robbers");
  for (Vertex r : placement) require_vertex(g, r, "robber placement");
  Multiset sorted = placement;
  std::sort(sorted.begin(), sorted.end());
  return GameState{st.cop, without(sorted, st.cop), st.undamaged, Phase::kCopToMove};
}

VertexSet cop_options(const Graph& g, const GameState& st) {
  require_phase(st, Phase::kCopToMove, "cop_options");
  return g.closed_neighborhood(st.cop);
}

CopStepOutcome step_cop_detailed(const Graph& g, const GameState& st, Vertex dest) {
  require_phase(st, Phase::kCopToMove, "step_cop");
  require_vertex(g, dest, "cop destination");
  if (!contains(g.closed_neighborhood(st.cop), dest)) {
    throw IllegalMove("step_cop: " + std::to_string(dest) + " is not adjacent to the cop at " +
                      std::to_string(st.cop));
  }
  CopStepOutcome out;
  Multiset survivors = without(st.robbers, dest);
  out.captured = static_cast<int>(st.robbers.size() - survivors.size());
  out.newly_damaged = occupied(survivors) & st.undamaged;
  out.state = GameState{dest, std::move(survivors), st.undamaged & ~out.newly_damaged,
                        Phase::kRobbersToMove};
  return out;
}

GameState step_cop(const Graph& g, const GameState& st, Vertex dest) {
  return step_cop_detailed(g, st, dest).state;
}

std::vector<Multiset> robber_options(const Graph& g, const GameState& st) {
  require_phase(st, Phase::kRobbersToMove, "robber_options");
  std::set<Multiset> distinct;
  Multiset dest(st.robbers.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == st.robbers.size()) {
      Multiset sorted = dest;
      std::sort(sorted.begin(), sorted.end());
      distinct.insert(std::move(sorted));
      return;
    }
    // Co-located robbers are interchangeable: keep their choices nondecreasing.
    const bool same_source = i > 0 && st.robbers[i] == st.robbers[i - 1];
    for_each_vertex(g.closed_neighborhood(st.robbers[i]), [&](Vertex v) {
      if (same_source && v < dest[i - 1]) return;
      dest[i] = v;
      rec(i + 1);
    });
  };
  rec(0);
  return {distinct.begin(), distinct.end()};
}

bool is_legal_assignment(const Graph& g, const Multiset& robbers, const Multiset& assignment) {
  if (robbers.size() != assignment.size()) return false;
  for (Vertex v : assignment) {
    if (v < 0 || v >= g.order()) return false;
  }
  std::vector<int> match_of_dest(assignment.size(), -1);
  for (std::size_t i = 0; i < robbers.size(); ++i) {
    std::vector<char> visited(assignment.size(), 0);
    if (!augment(g, robbers, assignment, i, match_of_dest, visited)) return false;
  }
  return true;
}

GameState step_robbers(const Graph& g, const GameState& st, const Multiset& assignment) {
  require_phase(st, Phase::kRobbersToMove, "step_robbers");
  Multiset sorted = assignment;
  std::sort(sorted.begin(), sorted.end());
  if (!is_legal_assignment(g, st.robbers, sorted)) {
    throw IllegalMove("step_robbers: assignment is not reachable in one move");
  }
  return GameState{st.cop, without(sorted, st.cop), st.undamaged, Phase::kCopToMove};
}

int Transcript::total_damage() const { return popcount(damaged()); }

VertexSet Transcript::damaged() const {
  VertexSet all = 0;
  for (const Round& r : rounds) all |= r.newly_damaged;
  return all;
}

Transcript play(const Graph& g, int s, const CopPolicy& cop, const RobberPolicy& robbers,
                int max_rounds) {
  if (s < 1) throw std::invalid_argument("play: need at least one robber");
  Transcript t;
  t.order = g.order();
  t.cop_start = cop.start();
  require_vertex(g, t.cop_start, "cop start");

  Multiset placement = robbers.place(t.cop_start);
  std::sort(placement.begin(), placement.end());
  if (static_cast<int>(placement.size()) != s) {
    throw IllegalMove("play: placement has " + std::to_string(placement.size()) +
                      " robbers, expected " + std::to_string(s));
  }
  t.placement = placement;
  GameState st = place_robbers(g, GameState{t.cop_start, {}, g.vertices(), Phase::kRobbersToPlace},
                               placement);
  t.captured_at_placement = s - static_cast<int>(st.robbers.size());

  std::set<GameState> seen;
  const auto finished = [&]() -> bool {
    if (st.robbers.empty()) {
      t.end = EndReason::kRobbersExhausted;
      return true;
    }
    VertexSet reachable = 0;
    for (VertexSet comp : component_masks(g, g.vertices())) {
      if ((comp & occupied(st.robbers)) != 0) reachable |= comp;
    }
    if ((reachable & st.undamaged) == 0) {
      t.end = EndReason::kNothingDamageable;
      return true;
    }
    if (seen.contains(st)) {
      t.end = EndReason::kRepeatedState;
      return true;
    }
    return false;
  };

  for (int round = 1; round <= max_rounds; ++round) {
    if (finished()) return t;
    seen.insert(st);

    Round record;
    record.cop = cop.move(st);
    const CopStepOutcome after_cop = step_cop_detailed(g, st, record.cop);
    record.captured_by_cop = after_cop.captured;
    record.newly_damaged = after_cop.newly_damaged;
    st = after_cop.state;

    record.robbers = robbers.move(st);
    std::sort(record.robbers.begin(), record.robbers.end());
    const std::size_t before = st.robbers.size();
    st = step_robbers(g, st, record.robbers);
    record.captured_moving = static_cast<int>(before - st.robbers.size());
    t.rounds.push_back(std::move(record));
  }
  if (!finished()) t.end = EndReason::kRoundLimit;
  return t;
}

const char* to_string(EndReason reason) {
  switch (reason) {
    case EndReason::kRobbersExhausted: return "robbers-exhausted";
    case EndReason::kNothingDamageable: return "nothing-damageable";
    case EndReason::kRepeatedState: return "repeated-state";
    case EndReason::kRoundLimit: return "round-limit";
  }
  return "?";
}

std::string to_text(const Transcript& t) {
  auto list = [](const Multiset& m) {
    std::string out = "{";
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
    return out + "}";
  };
  std::ostringstream out;
  out << "round 0 cop " << t.cop_start << " robbers " << list(t.placement) << " captured "
      << t.captured_at_placement << '\n';
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const Round& r = t.rounds[i];
    Multiset damaged;
    for_each_vertex(r.newly_damaged, [&](Vertex v) { damaged.push_back(v); });
    out << "round " << i + 1 << " cop " << r.cop << " captured " << r.captured_by_cop
        << " damaged " << list(damaged) << " robbers " << list(r.robbers) << " captured "
        << r.captured_moving << '\n';
  }
  out << "end " << to_string(t.end) << " damage " << t.total_damage() << '\n';
  return out.str();
}

std::string to_json(const Transcript& t) {
  nlohmann::json doc;
  doc["order"] = t.order;
  doc["cop_start"] = t.cop_start;
  doc["placement"] = t.placement;
  doc["captured_at_placement"] = t.captured_at_placement;
  doc["rounds"] = nlohmann::json::array();
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const Round& r = t.rounds[i];
    doc["rounds"].push_back({{"round", i + 1},
                             {"cop", r.cop},
                             {"captured_by_cop", r.captured_by_cop},
                             {"damaged", vertex_list(r.newly_damaged)},
                             {"robbers", r.robbers},
                             {"captured_moving", r.captured_moving}});
  }
  doc["total_damage"] = t.total_damage();
  doc["end"] = to_string(t.end);
  return doc.dump();
}

}  // namespace damage_lab::game
