#pragma once

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "damage_lab/graph.hpp"

namespace damage_lab::game {

// Rules of the s-robber damage game.
//
// Round 0: the cop picks a vertex, then all robbers are placed at once
// (co-location allowed; a robber placed on the cop is captured on the spot).
// Every later round:
//   (a) the cop moves within its closed neighborhood, capturing every robber
//       on its destination;
//   (b) each surviving robber's vertex becomes damaged (damage is permanent);
//   (c) the robbers move simultaneously within closed neighborhoods; a robber
//       stepping onto the cop is captured.
// Damaged vertices stay traversable. Robbers are anonymous, so positions are
// kept as a sorted multiset.

/// Sorted multiset of robber positions.
using Multiset = std::vector<Vertex>;

enum class Phase { kRobbersToPlace, kCopToMove, kRobbersToMove };

struct GameState {
  Vertex cop = 0;
  Multiset robbers;
  VertexSet undamaged = 0;
  Phase phase = Phase::kRobbersToPlace;

  friend bool operator==(const GameState&, const GameState&) = default;
  friend auto operator<=>(const GameState&, const GameState&) = default;
};

/// Thrown for moves that break the rules or arrive in the wrong phase.
class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One placement-phase state per cop vertex, everything undamaged.
/// Throws std::invalid_argument when s < 1.
std::vector<GameState> initial_cop_states(const Graph& g, int s);

/// Visits every size-k multiset over 0..n-1 in lexicographic order.
void for_each_multiset(int n, int k, const std::function<void(const Multiset&)>& visit);

/// All size-s multisets over V(g), lexicographic; includes the cop's vertex.
std::vector<Multiset> robber_placements(const Graph& g, Vertex cop, int s);

/// Resolves a placement: robbers on the cop are removed; phase becomes kCopToMove.
GameState place_robbers(const Graph& g, const GameState& st, const Multiset& placement);

/// Closed neighborhood of the cop. Requires phase kCopToMove.
VertexSet cop_options(const Graph& g, const GameState& st);

struct CopStepOutcome {
  GameState state;
  int captured = 0;
  VertexSet newly_damaged = 0;
};

CopStepOutcome step_cop_detailed(const Graph& g, const GameState& st, Vertex dest);
GameState step_cop(const Graph& g, const GameState& st, Vertex dest);

/// Distinct joint robber moves as destination multisets, lexicographic.
/// Requires phase kRobbersToMove; with no robbers the only option is {}.
std::vector<Multiset> robber_options(const Graph& g, const GameState& st);

/// True iff `assignment` is a destination multiset reachable in one move.
bool is_legal_assignment(const Graph& g, const Multiset& robbers, const Multiset& assignment);

GameState step_robbers(const Graph& g, const GameState& st, const Multiset& assignment);

// Policies are deterministic functions of the current state.
struct CopPolicy {
  std::function<Vertex()> start;
  std::function<Vertex(const GameState&)> move;
};

struct RobberPolicy {
  std::function<Multiset(Vertex cop)> place;
  std::function<Multiset(const GameState&)> move;
};

struct Round {
  Vertex cop = 0;                 // cop destination
  int captured_by_cop = 0;
  VertexSet newly_damaged = 0;
  Multiset robbers;               // destinations chosen by the robbers
  int captured_moving = 0;        // robbers that stepped onto the cop
};

enum class EndReason { kRobbersExhausted, kNothingDamageable, kRepeatedState, kRoundLimit };

struct Transcript {
  int order = 0;
  Vertex cop_start = 0;
  Multiset placement;
  int captured_at_placement = 0;
  std::vector<Round> rounds;
  EndReason end = EndReason::kRoundLimit;

  int total_damage() const;
  VertexSet damaged() const;
};

/// Plays at most max_rounds rounds. Stops early once no robber is left, once
/// no undamaged vertex shares a component with a robber, or once a
/// cop-to-move state repeats (deterministic policies then loop without
/// further damage). Throws IllegalMove if a policy returns an illegal move.
Transcript play(const Graph& g, int s, const CopPolicy& cop, const RobberPolicy& robbers,
                int max_rounds);

std::string to_text(const Transcript& t);
std::string to_json(const Transcript& t);
const char* to_string(EndReason reason);

}  // namespace damage_lab::game
