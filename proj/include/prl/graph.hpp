#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prl/sign_matrix.hpp"

namespace prl {

using VertexSet = std::uint32_t;

/// Simple undirected graph on at most 32 vertices, adjacency held as bitmasks.
class SmallGraph {
 public:
  static constexpr std::size_t kMaxVertices = 32;

  SmallGraph() = default;
  explicit SmallGraph(std::size_t n) : adj_(n, 0) {
    if (n > kMaxVertices) throw std::invalid_argument("SmallGraph supports at most 32 vertices");
  }

  /// Graph whose edges are the off-diagonal cells of m equal to `edge_value`.
  static SmallGraph from_sign_matrix(const SignMatrix& m, bool edge_value) {
    SmallGraph g(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (m.get(i, j) == edge_value) g.add_edge(i, j);
      }
    }
    return g;
  }

  std::size_t size() const { return adj_.size(); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    adj_.at(u) |= VertexSet{1} << v;
    adj_.at(v) |= VertexSet{1} << u;
  }

  bool adjacent(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1u; }
  VertexSet neighbors(std::size_t u) const { return adj_[u]; }
  std::size_t degree(std::size_t u) const { return static_cast<std::size_t>(std::popcount(adj_[u])); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto a : adj_) twice += static_cast<std::size_t>(std::popcount(a));
    return twice / 2;
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v = u + 1; v < size(); ++v) {
        if (adjacent(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  SmallGraph induced(const std::vector<std::size_t>& vertices) const {
    SmallGraph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
      }
    }
    return g;
  }

  SmallGraph complement() const {
    SmallGraph g(size());
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v = u + 1; v < size(); ++v) {
        if (!adjacent(u, v)) g.add_edge(u, v);
      }
    }
    return g;
  }

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

inline std::vector<std::size_t> members(VertexSet s) {
  std::vector<std::size_t> out;
  for (; s != 0; s &= s - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  return out;
}

inline VertexSet to_set(const std::vector<std::size_t>& vs) {
  VertexSet s = 0;
  for (auto v : vs) s |= VertexSet{1} << v;
  return s;
}

inline bool is_regular(const SmallGraph& g, std::size_t k) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

/// Length of the shortest cycle, or nullopt for a forest.
inline std::optional<std::size_t> girth(const SmallGraph& g) {
  std::optional<std::size_t> best;
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::vector<int> dist(g.size(), -1), parent(g.size(), -1);
    std::queue<std::size_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : members(g.neighbors(u))) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = static_cast<int>(u);
          q.push(v);
        } else if (parent[u] != static_cast<int>(v)) {
          const auto len = static_cast<std::size_t>(dist[u] + dist[v] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

/// Vertex set of one maximum clique (branch and bound over bitmasks).
inline VertexSet maximum_clique(const SmallGraph& g) {
  VertexSet best = 0;
  std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet clique, VertexSet candidates) {
    if (candidates == 0) {
      if (std::popcount(clique) > std::popcount(best)) best = clique;
      return;
    }
    while (candidates != 0) {
      if (std::popcount(clique) + std::popcount(candidates) <= std::popcount(best)) return;
      const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      grow(clique | (VertexSet{1} << v), candidates & g.neighbors(v));
    }
    if (std::popcount(clique) > std::popcount(best)) best = clique;
  };
  const VertexSet all = g.size() == 32 ? ~VertexSet{0} : (VertexSet{1} << g.size()) - 1;
  grow(0, all);
  return best;
}

/// All triangles {u < v < w}, as vertex sets.
inline std::vector<VertexSet> triangles(const SmallGraph& g) {
  std::vector<VertexSet> out;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) continue;
      const VertexSet above_v = ~((VertexSet{2} << v) - 1);
      for (auto w : members(g.neighbors(u) & g.neighbors(v) & above_v)) {
        out.push_back((VertexSet{1} << u) | (VertexSet{1} << v) | (VertexSet{1} << w));
      }
    }
  }
  return out;
}

struct SrgParameters {
  std::size_t n, k, lambda, mu;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Parameters (n, k, lambda, mu) if g is strongly regular.
inline std::optional<SrgParameters> strongly_regular_parameters(const SmallGraph& g) {
  if (g.size() < 2) return std::nullopt;
  const auto k = g.degree(0);
  if (!is_regular(g, k)) return std::nullopt;
  std::optional<std::size_t> lambda, mu;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      const auto common = static_cast<std::size_t>(std::popcount(g.neighbors(u) & g.neighbors(v)));
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) slot = common;
      if (*slot != common) return std::nullopt;
    }
  }
  return SrgParameters{g.size(), k, lambda.value_or(0), mu.value_or(0)};
}

namespace detail {

struct VertexInvariant {
  std::size_t color, degree, triangles;
  std::vector<std::size_t> neighbor_degrees;
  friend bool operator==(const VertexInvariant&, const VertexInvariant&) = default;
};

inline std::vector<VertexInvariant> invariants(const SmallGraph& g, const std::vector<std::size_t>& colors) {
  std::vector<VertexInvariant> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto& inv = out[v];
    inv.color = colors.empty() ? 0 : colors[v];
    inv.degree = g.degree(v);
    inv.triangles = 0;
    for (auto u : members(g.neighbors(v))) {
      inv.neighbor_degrees.push_back(g.degree(u));
      inv.triangles += static_cast<std::size_t>(std::popcount(g.neighbors(u) & g.neighbors(v)));
    }
    std::sort(inv.neighbor_degrees.begin(), inv.neighbor_degrees.end());
  }
  return out;
}

}  // namespace detail

/// Finds a bijection f with u ~ v in `a` iff f(u) ~ f(v) in `b`, preserving
/// optional vertex colors. Backtracking over a connectivity-first vertex order,
/// pruned by degree, triangle count and neighbor-degree multiset.
/// Result[i] is the image of vertex i of `a`.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const SmallGraph& a, const SmallGraph& b,
                                                                const std::vector<std::size_t>& colors_a = {},
                                                                const std::vector<std::size_t>& colors_b = {}) {
  const std::size_t n = a.size();
  if (b.size() != n || a.edge_count() != b.edge_count()) return std::nullopt;
  if (colors_a.size() != colors_b.size()) throw std::invalid_argument("color vectors must both be given");
  const auto inv_a = detail::invariants(a, colors_a);
  const auto inv_b = detail::invariants(b, colors_b);

  std::vector<VertexSet> candidates(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (inv_a[u] == inv_b[v]) candidates[u] |= VertexSet{1} << v;
    }
    if (candidates[u] == 0) return std::nullopt;
  }

  // Each next vertex has the most already-ordered neighbors, ties by fewest candidates.
  std::vector<std::size_t> order;
  VertexSet placed = 0;
  while (order.size() < n) {
    std::size_t best = n;
    int best_links = -1;
    int best_cands = 1 << 30;
    for (std::size_t u = 0; u < n; ++u) {
      if ((placed >> u) & 1u) continue;
      const int links = std::popcount(a.neighbors(u) & placed);
      const int cands = std::popcount(candidates[u]);
      if (links > best_links || (links == best_links && cands < best_cands)) {
        best = u;
        best_links = links;
        best_cands = cands;
      }
    }
    order.push_back(best);
    placed |= VertexSet{1} << best;
  }

  std::vector<std::size_t> image(n, 0);
  VertexSet used = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const auto u = order[depth];
    for (auto v : members(candidates[u] & ~used)) {
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const auto w = order[d];
        consistent = a.adjacent(u, w) == b.adjacent(v, image[w]);
      }
      if (!consistent) continue;
      image[u] = v;
      used |= VertexSet{1} << v;
      if (extend(depth + 1)) return true;
      used &= ~(VertexSet{1} << v);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

/// Checks that `map` is a graph isomorphism from a to b.
inline bool is_isomorphism(const SmallGraph& a, const SmallGraph& b, const std::vector<std::size_t>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  VertexSet seen = 0;
  for (auto v : map) {
    if (v >= b.size() || ((seen >> v) & 1u)) return false;
    seen |= VertexSet{1} << v;
  }
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (u != v && a.adjacent(u, v) != b.adjacent(map[u], map[v])) return false;
    }
  }
  return true;
}

inline SmallGraph cycle_graph(std::size_t n) {
  SmallGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// The Petersen graph as the Kneser graph K(5,2): 2-subsets of {0..4},
/// adjacent when disjoint. Vertex order is lexicographic in the subsets.
inline SmallGraph petersen_graph() {
  std::vector<VertexSet> subsets;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) subsets.push_back((VertexSet{1} << i) | (VertexSet{1} << j));
  }
  SmallGraph g(subsets.size());
  for (std::size_t u = 0; u < subsets.size(); ++u) {
    for (std::size_t v = u + 1; v < subsets.size(); ++v) {
      if ((subsets[u] & subsets[v]) == 0) g.add_edge(u, v);
    }
  }
  return g;
}

/// An isomorphism onto petersen_graph() if g is the Petersen graph.
inline std::optional<std::vector<std::size_t>> is_petersen(const SmallGraph& g) {
  if (g.size() != 10 || !is_regular(g, 3) || girth(g) != std::optional<std::size_t>{5}) return std::nullopt;
  return find_isomorphism(g, petersen_graph());
}

}  // namespace prl
