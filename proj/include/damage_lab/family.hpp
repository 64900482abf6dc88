#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "damage_lab/graph.hpp"

namespace damage_lab {

enum class FamilyKind { kEmpty, kComplete, kPath, kCycle, kStar, kSpider, kWheel, kThreshold, kUnion };

/// Symbolic description of a named graph family instance.
///
/// `params` holds the vertex count for empty/complete/path/cycle, the leaf
/// count for star, the spoke count for wheel and the leg lengths (stored
/// nonincreasing) for spider. `creation` is the threshold creation sequence:
/// '0' adds an isolated vertex, '1' a dominating vertex, and the first symbol
/// is the bare starting vertex. `parts` holds the two operands of a union.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kEmpty;
  std::vector<int> params;
  std::string creation;
  std::vector<FamilySpec> parts;

  static FamilySpec empty(int n) { return {FamilyKind::kEmpty, {n}, {}, {}}; }
  static FamilySpec complete(int n) { return {FamilyKind::kComplete, {n}, {}, {}}; }
  static FamilySpec path(int n) { return {FamilyKind::kPath, {n}, {}, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::kCycle, {n}, {}, {}}; }
  static FamilySpec star(int leaves) { return {FamilyKind::kStar, {leaves}, {}, {}}; }
  static FamilySpec wheel(int spokes) { return {FamilyKind::kWheel, {spokes}, {}, {}}; }
  static FamilySpec spider(std::vector<int> legs);
  static FamilySpec threshold(std::string creation) {
    return {FamilyKind::kThreshold, {}, std::move(creation), {}};
  }
  static FamilySpec disjoint(FamilySpec left, FamilySpec right) {
    return {FamilyKind::kUnion, {}, {}, {std::move(left), std::move(right)}};
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws std::invalid_argument when the parameters break the family's
/// invariants (cycle with n < 3, spider with fewer than three legs, ...).
void validate(const FamilySpec& spec);

/// Vertex count of the described instance.
int family_order(const FamilySpec& spec);

/// Canonical labelled instance: spider center and wheel hub are vertex 0,
/// spider legs occupy consecutive labels starting next to the center, star
/// center is vertex 0, threshold vertices are labelled in creation order.
Graph family(const FamilySpec& spec);

/// Text form used by the CLI, e.g. "path:5", "spider:2,2,2",
/// "threshold:0101", "union:path:2+empty:1".
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

}  // namespace damage_lab
