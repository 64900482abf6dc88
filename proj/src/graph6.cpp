#include "damage_lab/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace damage_lab {

namespace {

constexpr int kBias = 63;
constexpr char kLongSize = 126;

int sextet(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) {
    throw std::invalid_argument("graph6: byte " + std::to_string(c) + " at offset " +
                                std::to_string(pos) + " outside [63, 126]");
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != kLongSize) {
    n = sextet(text, 0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != kLongSize) {
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, i);
    pos = 4;
  } else {
    if (text.size() < 8) throw std::invalid_argument("graph6: truncated size header");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text, i);
    pos = 8;
  }
  if (n < 1 || n > Graph::kMaxVertices) {
    throw std::invalid_argument("graph6: vertex count " + std::to_string(n) +
                                " outside supported range [1, " +
                                std::to_string(Graph::kMaxVertices) + "]");
  }

  const long long bits = n * (n - 1) / 2;
  const auto payload = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < payload) throw std::invalid_argument("graph6: truncated bit payload");
  if (text.size() - pos > payload) throw std::invalid_argument("graph6: trailing bytes after payload");

  std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text, pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) {
        adj[i] |= singleton(j);
        adj[j] |= singleton(i);
      }
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(text, pos + payload - 1);
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw std::invalid_argument("graph6: nonzero padding bits");
    }
  }
  return Graph(std::move(adj));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kLongSize);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace damage_lab
