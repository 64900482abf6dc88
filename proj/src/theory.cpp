#include "damage_lab/theory.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "damage_lab/canonical.hpp"

namespace damage_lab::theory {

namespace {

using Interval = std::pair<int, int>;
using PartInterval = std::function<Interval(const Graph&, int)>;

std::vector<Bound> general_bounds(const Graph& g, int s) {
  const int n = g.order();
  std::vector<Bound> out;
  out.push_back({"cop-vertex-upper", 0, n - 1});
  if (s <= n - 1) {
    out.push_back({"robber-count-lower", s - 1, n});
  } else {
    out.push_back({"robber-count-lower", std::max(0, n - 2), n});
  }
  if (n >= 2 && g.size() > 0) out.push_back({"edge-upper", 0, n - 2});

  int cut_lower = -1;
  int cut_upper = std::numeric_limits<int>::max();
  for (const CutVertexEntry& e : cut_vertex_profile(g)) {
    if (e.nontrivial_components >= 1) {
      cut_lower = std::max(cut_lower, std::min(2 * e.nontrivial_components - 2, 2 * s - 2));
    }
    // The cop guards v and one neighbor, so only components hanging off v count.
    if (e.attached_components >= 1) {
      cut_upper = std::min(cut_upper, std::min(n - e.attached_components + s - 2, n - 2));
    }
  }
  if (cut_lower >= 0) out.push_back({"cut-vertex-lower", cut_lower, n});
  if (cut_upper != std::numeric_limits<int>::max()) out.push_back({"cut-vertex-upper", 0, cut_upper});

  if (s == 2 && max_degree(g) >= 3) out.push_back({"degree-three-upper", 0, n - 3});
  return out;
}

// Damage j robbers inflict on h with the cop elsewhere: each one sweeps a
// whole component, so they take the j largest.
int unopposed_damage(const Graph& h, int j) {
  std::vector<int> orders;
  for (VertexSet comp : component_masks(h, h.vertices())) orders.push_back(popcount(comp));
  std::sort(orders.begin(), orders.end(), std::greater<>());
  orders.resize(std::min<std::size_t>(orders.size(), static_cast<std::size_t>(std::max(j, 0))));
  return std::accumulate(orders.begin(), orders.end(), 0);
}

// The cop starts in one component C; the robbers answer by sending j of them
// to the rest of the graph. Both ends of the per-component intervals go
// through the same formula, which is nondecreasing in every part value.
std::optional<Interval> component_interval(const Graph& g, int s, const PartInterval& part) {
  const auto comps = component_masks(g, g.vertices());
  if (comps.size() < 2) return std::nullopt;
  Interval best{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  for (VertexSet comp : comps) {
    const Graph inside = induced_subgraph(g, comp);
    const Graph outside = induced_subgraph(g, g.vertices() & ~comp);
    Interval worst{0, 0};
    for (int j = 0; j <= s; ++j) {
      const Interval rest = s - j == 0 ? Interval{0, 0} : part(inside, s - j);
      const int free = unopposed_damage(outside, j);
      worst.first = std::max(worst.first, rest.first + free);
      worst.second = std::max(worst.second, rest.second + free);
    }
    best.first = std::min(best.first, worst.first);
    best.second = std::min(best.second, worst.second);
  }
  return best;
}

Interval general_interval(const Graph& g, int s) {
  Interval out{0, g.order()};
  for (const Bound& b : general_bounds(g, s)) {
    out.first = std::max(out.first, b.lo);
    out.second = std::min(out.second, b.hi);
  }
  if (auto u = component_interval(g, s, general_interval)) {
    out.first = std::max(out.first, u->first);
    out.second = std::min(out.second, u->second);
  }
  return out;
}

bool isomorphic_to_any(const Graph& g, const std::vector<FamilySpec>& specs) {
  for (const FamilySpec& spec : specs) {
    if (family_order(spec) != g.order()) continue;
    if (are_isomorphic(g, family(spec))) return true;
  }
  return false;
}

FamilySpec k2_plus(std::vector<FamilySpec> rest) {
  FamilySpec out = FamilySpec::complete(2);
  for (auto& part : rest) out = FamilySpec::disjoint(std::move(out), std::move(part));
  return out;
}

bool is_path(const Graph& g) {
  return g.order() >= 2 && component_masks(g, g.vertices()).size() == 1 && max_degree(g) <= 2 &&
         g.size() == g.order() - 1;
}

bool is_cycle(const Graph& g) {
  return g.order() >= 3 && component_masks(g, g.vertices()).size() == 1 && max_degree(g) == 2 &&
         g.size() == g.order();
}

}  // namespace

int lower_bound(const Graph& g, int s) { return general_interval(g, s).first; }

int upper_bound(const Graph& g, int s) { return general_interval(g, s).second; }

int union_value(int g_order, int g_fewer, int g_all, int h_order, int h_fewer, int h_all) {
  const int cop_on_g = std::max(g_fewer + h_order, g_all);
  const int cop_on_h = std::max(h_fewer + g_order, h_all);
  return std::min(cop_on_g, cop_on_h);
}

int union_value(const DamageFn& dmg_g, const DamageFn& dmg_h, const Graph& g, const Graph& h, int s) {
  const auto cop_in = [s](const DamageFn& own, const Graph& other) {
    int worst = 0;
    for (int j = 0; j <= s; ++j) worst = std::max(worst, (s - j == 0 ? 0 : own(s - j)) + unopposed_damage(other, j));
    return worst;
  };
  return std::min(cop_in(dmg_g, h), cop_in(dmg_h, g));
}

std::optional<int> closed_form(const FamilySpec& spec, int s) {
  if (s < 1) return std::nullopt;
  validate(spec);
  const int n = family_order(spec);
  switch (spec.kind) {
    case FamilyKind::kEmpty:
      return std::min(s, n - 1);
    case FamilyKind::kComplete:
      if (n >= 4) return std::min(s * (s - 1) / 2, n - 2);
      if (n == 1) return closed_form(FamilySpec::empty(1), s);
      if (n == 2) return closed_form(FamilySpec::path(2), s);
      return closed_form(FamilySpec::cycle(3), s);
    case FamilyKind::kPath:
      if (n == 1) return 0;
      if (s >= 2) return n - 2;
      return std::nullopt;
    case FamilyKind::kCycle:
      if (s >= 2) return n - 2;
      return std::nullopt;
    case FamilyKind::kStar:
      if (n - 1 >= 3) return closed_form(FamilySpec::spider(std::vector<int>(n - 1, 1)), s);
      return closed_form(FamilySpec::path(n), s);
    case FamilyKind::kSpider: {
      const auto legs = static_cast<int>(spec.params.size());
      if (s < 2) return std::nullopt;
      if (s > legs) return n - 2;
      return std::accumulate(spec.params.begin(), spec.params.begin() + s, 0) - 1;
    }
    case FamilyKind::kWheel:
    case FamilyKind::kThreshold:
      return std::nullopt;
    case FamilyKind::kUnion: {
      const auto part = [&](const FamilySpec& p, int t) -> std::optional<int> {
        return t == 0 ? std::optional<int>(0) : closed_form(p, t);
      };
      const auto g_fewer = part(spec.parts[0], s - 1);
      const auto g_all = part(spec.parts[0], s);
      const auto h_fewer = part(spec.parts[1], s - 1);
      const auto h_all = part(spec.parts[1], s);
      if (!g_fewer || !g_all || !h_fewer || !h_all) return std::nullopt;
      return union_value(family_order(spec.parts[0]), *g_fewer, *g_all, family_order(spec.parts[1]), *h_fewer,
                         *h_all);
    }
  }
  return std::nullopt;
}

std::optional<FamilySpec> recognize_family(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  if (m == 0) return FamilySpec::empty(n);
  if (m == n * (n - 1) / 2) return FamilySpec::complete(n);
  if (component_masks(g, g.vertices()).size() != 1) return std::nullopt;
  if (is_path(g)) return FamilySpec::path(n);
  if (is_cycle(g)) return FamilySpec::cycle(n);
  if (m != n - 1) return std::nullopt;

  Vertex center = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) {
      if (center >= 0) return std::nullopt;
      center = v;
    }
  }
  std::vector<int> legs;
  for_each_vertex(g.neighbors(center), [&](Vertex first) {
    int length = 1;
    Vertex prev = center;
    Vertex at = first;
    while (g.degree(at) == 2) {
      const Vertex next = static_cast<Vertex>(std::countr_zero(g.neighbors(at) & ~singleton(prev)));
      prev = at;
      at = next;
      ++length;
    }
    legs.push_back(length);
  });
  return FamilySpec::spider(std::move(legs));
}

int single_robber_path_value(int n) { return (n - 1) / 2; }

int conjectured_degree_threshold(int s) { return s * (s - 1) / 2 + 2; }

bool char_dmg2_is_nminus2(const Graph& g) {
  if (is_path(g) || is_cycle(g)) return true;
  static const std::vector<FamilySpec> sporadic = {
      FamilySpec::empty(4),
      k2_plus({FamilySpec::empty(2)}),
      k2_plus({FamilySpec::complete(2), FamilySpec::empty(1)}),
      k2_plus({FamilySpec::complete(2), FamilySpec::complete(2)}),
      k2_plus({FamilySpec::empty(1)}),
      k2_plus({FamilySpec::complete(2)}),
  };
  return isomorphic_to_any(g, sporadic);
}

bool char_dmg2_is_1(const Graph& g) {
  if (g.order() >= 5) return is_threshold(g) && isolated_count(g) <= 1;
  static const std::vector<FamilySpec> excluded = {
      FamilySpec::path(2),  FamilySpec::path(4),  FamilySpec::cycle(4),
      FamilySpec::empty(1), FamilySpec::empty(3), FamilySpec::empty(4),
      k2_plus({FamilySpec::complete(2)}), k2_plus({FamilySpec::empty(2)}),
  };
  return !isomorphic_to_any(g, excluded);
}

Prediction predicted(const Graph& g, int s) {
  const int n = g.order();
  Prediction p;
  p.sources = general_bounds(g, s);

  if (auto fam = recognize_family(g)) {
    if (auto value = closed_form(*fam, s)) {
      p.sources.push_back({"closed-form:" + to_string(*fam), *value, *value});
    }
  }

  if (s == 2) {
    if (char_dmg2_is_nminus2(g)) {
      p.sources.push_back({"n-minus-2-characterization", n - 2, n - 2});
    } else if (g.size() > 0) {
      p.sources.push_back({"n-minus-2-characterization", 0, n - 3});
    }
    if (char_dmg2_is_1(g)) {
      p.sources.push_back({"one-characterization", 1, 1});
    } else if (n >= 3) {
      p.sources.push_back({"one-characterization", 2, n});
    } else {
      p.sources.push_back({"one-characterization", 0, 0});
    }
  }

  const PartInterval part = [](const Graph& x, int t) {
    const Prediction sub = predicted(x, t);
    return Interval{sub.lo, sub.hi};
  };
  if (auto u = component_interval(g, s, part)) p.sources.push_back({"union-recurrence", u->first, u->second});

  if (n == 5 && (s == 3 || s == 4) && are_isomorphic(g, family(FamilySpec::wheel(4)))) {
    p.sources.push_back({"wheel-exceeds-n-s-1", n - s, n, true});
  }

  p.lo = 0;
  p.hi = n;
  for (const Bound& b : p.sources) {
    if (b.claim) continue;
    p.lo = std::max(p.lo, b.lo);
    p.hi = std::min(p.hi, b.hi);
  }
  if (p.lo == p.hi) p.exact = p.lo;
  return p;
}

}  // namespace damage_lab::theory
