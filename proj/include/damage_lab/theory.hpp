#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "damage_lab/family.hpp"
#include "damage_lab/graph.hpp"

namespace damage_lab::theory {

/// One source's statement about dmg(G; s): lo <= value <= hi.
///
/// Sources marked `claim` are checked but never used to tighten the combined
/// interval; they record assertions that the solver is expected to confirm.
struct Bound {
  std::string tag;
  int lo = 0;
  int hi = 0;
  bool claim = false;

  bool admits(int value) const { return lo <= value && value <= hi; }
};

struct Prediction {
  int lo = 0;
  int hi = 0;
  std::optional<int> exact;
  std::vector<Bound> sources;

  bool admits(int value) const { return lo <= value && value <= hi; }
};

// General bounds valid for every graph.
int lower_bound(const Graph& g, int s);
int upper_bound(const Graph& g, int s);

/// Damage of s robbers on the disjoint union of g and h, given the part
/// values through callbacks (dmg(.; 0) is taken as 0). The cop commits to one
/// side; the robbers send j of their number to the other side, where each
/// sweeps a whole component unopposed.
using DamageFn = std::function<int(int robbers)>;
int union_value(const DamageFn& dmg_g, const DamageFn& dmg_h, const Graph& g, const Graph& h, int s);

/// The two-term form min{max(g_fewer + |h|, g_all), max(h_fewer + |g|, h_all)}
/// with g_fewer = dmg(g; s - 1) and g_all = dmg(g; s). It agrees with the
/// callback form when both operands are connected; with a disconnected
/// operand one robber no longer damages all of it and the form overshoots.
int union_value(int g_order, int g_fewer, int g_all, int h_order, int h_fewer, int h_all);

/// Exact value for a family instance within a known formula's hypotheses.
std::optional<int> closed_form(const FamilySpec& spec, int s);

/// Names a connected graph (or an edgeless one) as an empty, complete, path,
/// cycle or spider instance when it is one, up to isomorphism.
std::optional<FamilySpec> recognize_family(const Graph& g);

/// The cited single-robber value floor((n - 1) / 2) for a path or cycle on
/// n >= 4 vertices. The solver confirms it for cycles; on paths of odd order
/// it overshoots by one (the cop on the centre of P5 holds the robber to 1).
int single_robber_path_value(int n);

/// Smallest maximum degree covered by the open generalisation of the
/// degree-three bound: C(s, 2) + 2.
int conjectured_degree_threshold(int s);

/// dmg(G; 2) = n - 2 exactly for paths (n >= 2), cycles (n >= 3) and six
/// small disconnected graphs.
bool char_dmg2_is_nminus2(const Graph& g);

/// dmg(G; 2) = 1: for n >= 5 exactly the threshold graphs with at most one
/// isolated vertex; for n <= 4 everything outside a fixed exclusion list.
bool char_dmg2_is_1(const Graph& g);

/// Tightest interval implied by every applicable result, with per-source tags.
Prediction predicted(const Graph& g, int s);

}  // namespace damage_lab::theory
