#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "damage_lab/game.hpp"
#include "damage_lab/graph.hpp"

namespace damage_lab::solver {

/// The instance needs more table entries than SolverOptions::state_cap.
class StateCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  std::size_t state_cap = 50'000'000;
};

struct DamageResult {
  int value = 0;
  Vertex best_cop_start = 0;
  std::size_t states_explored = 0;
  std::size_t iterations = 0;
};

/// Game values for every state of one (graph, s) instance.
///
/// The residual damage of a state is the least fixed point of
///   cop:     V(c, R, U) = min over c' in N[c] of |D| + V'(c', R - c', U - D),
///            D = set(R - c') & U
///   robbers: V'(c, R, U) = max over joint moves R' of V(c, R' - c, U)
/// computed by ascending (Jacobi) iteration from the all-zero table. A move
/// that damages nothing keeps U fixed and every damaging move shrinks it, so
/// the table is solved one undamaged set at a time in increasing mask order;
/// each slice iterates to its own fixed point with smaller masks already
/// final.
///
/// Alongside every value the solver keeps its rank: the sweep at which the
/// value was last raised. A robber move that keeps the value while strictly
/// lowering the rank always exists, which is what makes the extracted robber
/// policy realise its value instead of stalling in a damage-free cycle.
class Solution {
 public:
  /// Throws std::invalid_argument for s < 1 and StateCapExceeded when the
  /// dense table would exceed options.state_cap entries.
  static std::shared_ptr<const Solution> solve(const Graph& g, int s, const SolverOptions& options = {});

  const Graph& graph() const { return graph_; }
  int robbers() const { return robbers_; }
  const DamageResult& result() const { return result_; }

  /// Residual damage under optimal play from any well-formed state.
  int value(const game::GameState& st) const;

  /// Worst-case damage once the cop has started on `cop`.
  int placement_value(Vertex cop) const;

  // Deterministic optimal moves. Ties go to the smallest vertex (cop) or to
  // the smallest rank, then the lexicographically smallest multiset (robbers).
  Vertex cop_start() const { return result_.best_cop_start; }
  Vertex cop_move(const game::GameState& st) const;
  game::Multiset robber_placement(Vertex cop) const;
  game::Multiset robber_move(const game::GameState& st) const;

  std::size_t table_size() const { return values_.size(); }

 private:
  Solution(const Graph& g, int s);

  enum Side : int { kCop = 0, kRobbers = 1 };

  std::size_t index(VertexSet undamaged, Side side, Vertex cop, std::uint32_t id) const {
    return ((static_cast<std::size_t>(undamaged) * 2 + side) * n_ + static_cast<std::size_t>(cop)) * ids_ + id;
  }
  std::uint32_t strip(Vertex cop, std::uint32_t id) const { return strip_[static_cast<std::size_t>(cop) * ids_ + id]; }
  std::uint32_t id_of(const game::Multiset& sorted) const;
  void check_state(const game::GameState& st) const;
  void build_tables(std::size_t cap);
  void solve_slice(VertexSet undamaged, std::vector<std::uint8_t>& prev);
  std::pair<std::uint32_t, int> best_placement(VertexSet undamaged, Vertex cop) const;

  Graph graph_;
  int robbers_;
  std::size_t n_;
  std::size_t ids_ = 0;                        // multisets of size 0..s
  std::vector<game::Multiset> multisets_;      // by id; sizes ascending, lexicographic within a size
  std::vector<std::uint32_t> size_offset_;     // first id of each size
  std::vector<std::vector<std::uint64_t>> choose_;  // choose_[k][m] = size-k multisets over m values
  std::vector<VertexSet> occupied_;
  std::vector<std::uint32_t> strip_;
  std::vector<std::uint32_t> move_begin_;
  std::vector<std::uint32_t> moves_;
  std::vector<std::uint8_t> values_;
  std::vector<std::uint16_t> ranks_;
  DamageResult result_;
};

DamageResult damage_number(const Graph& g, int s, const SolverOptions& options = {});

/// Residual damage of `st` in the game with s robbers.
int game_value(const Graph& g, int s, const game::GameState& st, const SolverOptions& options = {});

/// Optimal deterministic policies starting from the optimal opening.
std::pair<game::CopPolicy, game::RobberPolicy> extract_policies(const Graph& g, int s,
                                                                const SolverOptions& options = {});

/// Damage reached by simulating the policies. Throws std::runtime_error when
/// the simulation hits `max_rounds` without terminating.
int verify_policy_value(const Graph& g, int s, const game::CopPolicy& cop, const game::RobberPolicy& robbers,
                        int max_rounds);

}  // namespace damage_lab::solver
