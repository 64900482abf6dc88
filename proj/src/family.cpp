#include "damage_lab/family.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace damage_lab {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

int single_param(const FamilySpec& spec, const char* name) {
  require(spec.params.size() == 1, std::string(name) + " takes exactly one parameter");
  return spec.params.front();
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  require(ec == std::errc{} && ptr == end && !text.empty(),
          "family: expected an integer, got \"" + std::string(text) + "\"");
  return value;
}

}  // namespace

FamilySpec FamilySpec::spider(std::vector<int> legs) {
  std::sort(legs.begin(), legs.end(), std::greater<>());
  return {FamilyKind::kSpider, std::move(legs), {}, {}};
}

void validate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kEmpty:
    case FamilyKind::kComplete:
    case FamilyKind::kPath:
      require(single_param(spec, "family") >= 1, "family needs at least one vertex");
      break;
    case FamilyKind::kCycle:
      require(single_param(spec, "cycle") >= 3, "cycle needs at least 3 vertices");
      break;
    case FamilyKind::kStar:
      require(single_param(spec, "star") >= 1, "star needs at least one leaf");
      break;
    case FamilyKind::kWheel:
      require(single_param(spec, "wheel") >= 3, "wheel needs at least 3 spokes");
      break;
    case FamilyKind::kSpider:
      require(spec.params.size() >= 3, "spider needs at least 3 legs");
      for (int leg : spec.params) require(leg >= 1, "spider legs must have length >= 1");
      require(std::is_sorted(spec.params.begin(), spec.params.end(), std::greater<>()),
              "spider legs must be stored nonincreasing");
      break;
    case FamilyKind::kThreshold:
      require(!spec.creation.empty(), "threshold creation sequence is empty");
      require(spec.creation.front() == '0',
              "threshold creation sequence must start with the bare vertex '0'");
      require(spec.creation.find_first_not_of("01") == std::string::npos,
              "threshold creation sequence uses symbols other than 0/1");
      break;
    case FamilyKind::kUnion:
      require(spec.parts.size() == 2, "union takes exactly two parts");
      validate(spec.parts[0]);
      validate(spec.parts[1]);
      break;
  }
  require(family_order(spec) <= Graph::kMaxVertices, "family instance too large");
}

int family_order(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kEmpty:
    case FamilyKind::kComplete:
    case FamilyKind::kPath:
    case FamilyKind::kCycle:
      return spec.params.empty() ? 0 : spec.params.front();
    case FamilyKind::kStar:
    case FamilyKind::kWheel:
      return spec.params.empty() ? 0 : spec.params.front() + 1;
    case FamilyKind::kSpider: {
      int n = 1;
      for (int leg : spec.params) n += leg;
      return n;
    }
    case FamilyKind::kThreshold:
      return static_cast<int>(spec.creation.size());
    case FamilyKind::kUnion: {
      int n = 0;
      for (const auto& part : spec.parts) n += family_order(part);
      return n;
    }
  }
  return 0;
}

Graph family(const FamilySpec& spec) {
  validate(spec);
  const int n = family_order(spec);
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::kEmpty:
      break;
    case FamilyKind::kComplete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case FamilyKind::kPath:
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case FamilyKind::kCycle:
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      break;
    case FamilyKind::kStar:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case FamilyKind::kWheel: {
      const int rim = n - 1;
      for (Vertex i = 0; i < rim; ++i) {
        edges.emplace_back(0, 1 + i);
        edges.emplace_back(1 + i, 1 + (i + 1) % rim);
      }
      break;
    }
    case FamilyKind::kSpider: {
      Vertex next = 1;
      for (int leg : spec.params) {
        edges.emplace_back(0, next);
        for (int i = 1; i < leg; ++i) edges.emplace_back(next + i - 1, next + i);
        next += leg;
      }
      break;
    }
    case FamilyKind::kThreshold:
      for (Vertex v = 1; v < n; ++v) {
        if (spec.creation[static_cast<std::size_t>(v)] == '1') {
          for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
        }
      }
      break;
    case FamilyKind::kUnion:
      return disjoint_union(family(spec.parts[0]), family(spec.parts[1]));
  }
  return build_from_edge_list(n, edges);
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  require(colon != std::string_view::npos,
          "family: expected kind:params, got \"" + std::string(text) + "\"");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);

  FamilySpec spec;
  if (kind == "union") {
    const auto plus = rest.find('+');
    require(plus != std::string_view::npos, "union: expected left+right");
    spec = FamilySpec::disjoint(parse_family(rest.substr(0, plus)), parse_family(rest.substr(plus + 1)));
  } else if (kind == "threshold") {
    spec = FamilySpec::threshold(std::string(rest));
  } else if (kind == "spider") {
    std::vector<int> legs;
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const auto piece = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      legs.push_back(parse_int(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    spec = FamilySpec::spider(std::move(legs));
  } else {
    const int value = parse_int(rest);
    if (kind == "empty") spec = FamilySpec::empty(value);
    else if (kind == "complete") spec = FamilySpec::complete(value);
    else if (kind == "path") spec = FamilySpec::path(value);
    else if (kind == "cycle") spec = FamilySpec::cycle(value);
    else if (kind == "star") spec = FamilySpec::star(value);
    else if (kind == "wheel") spec = FamilySpec::wheel(value);
    else require(false, "family: unknown kind \"" + std::string(kind) + "\"");
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  auto join = [](const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(xs[i]);
    }
    return out;
  };
  switch (spec.kind) {
    case FamilyKind::kEmpty: return "empty:" + join(spec.params);
    case FamilyKind::kComplete: return "complete:" + join(spec.params);
    case FamilyKind::kPath: return "path:" + join(spec.params);
    case FamilyKind::kCycle: return "cycle:" + join(spec.params);
    case FamilyKind::kStar: return "star:" + join(spec.params);
    case FamilyKind::kWheel: return "wheel:" + join(spec.params);
    case FamilyKind::kSpider: return "spider:" + join(spec.params);
    case FamilyKind::kThreshold: return "threshold:" + spec.creation;
    case FamilyKind::kUnion:
      return "union:" + to_string(spec.parts.at(0)) + "+" + to_string(spec.parts.at(1));
  }
  return "?";
}

}  // namespace damage_lab
