#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prl/graph.hpp"

namespace prl {

using PointSet = std::uint32_t;

/// Point-line geometry on points 0..num_points-1, each line a point set.
struct IncidenceStructure {
  std::size_t num_points = 0;
  std::vector<PointSet> lines;

  PointSet all_points() const { return num_points == 32 ? ~PointSet{0} : (PointSet{1} << num_points) - 1; }

  /// Indices of the lines through p.
  std::vector<std::size_t> lines_through(std::size_t p) const {
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      if ((lines[l] >> p) & 1u) out.push_back(l);
    }
    return out;
  }

  /// Points sharing a line with p, p excluded.
  PointSet collinear_with(std::size_t p) const {
    PointSet s = 0;
    for (auto l : lines) {
      if ((l >> p) & 1u) s |= l;
    }
    return s & ~(PointSet{1} << p);
  }

  SmallGraph collinearity_graph() const {
    SmallGraph g(num_points);
    for (std::size_t p = 0; p < num_points; ++p) {
      for (auto q : members(collinear_with(p))) {
        if (q > p) g.add_edge(p, q);
      }
    }
    return g;
  }

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;
};

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Generalized quadrangle axioms for order (s, t): s+1 points per line, t+1
/// lines per point, at most one line through two points, and for every point X
/// off a line L exactly one point of L collinear with X.
inline AxiomReport validate_gq_axioms(const IncidenceStructure& s, std::size_t order_s = 2, std::size_t order_t = 2) {
  AxiomReport report;
  auto fail = [&](std::string v) { report.violations.push_back(std::move(v)); };
  for (std::size_t l = 0; l < s.lines.size(); ++l) {
    if (static_cast<std::size_t>(std::popcount(s.lines[l])) != order_s + 1) {
      fail("line " + std::to_string(l) + " has " + std::to_string(std::popcount(s.lines[l])) + " points");
    }
    if ((s.lines[l] & ~s.all_points()) != 0) fail("line " + std::to_string(l) + " has unknown points");
  }
  for (std::size_t p = 0; p < s.num_points; ++p) {
    const auto n = s.lines_through(p).size();
    if (n != order_t + 1) fail("point " + std::to_string(p) + " is on " + std::to_string(n) + " lines");
  }
  for (std::size_t a = 0; a < s.lines.size(); ++a) {
    for (std::size_t b = a + 1; b < s.lines.size(); ++b) {
      if (std::popcount(s.lines[a] & s.lines[b]) > 1) {
        fail("lines " + std::to_string(a) + " and " + std::to_string(b) + " share more than one point");
      }
    }
  }
  for (std::size_t p = 0; p < s.num_points; ++p) {
    const PointSet near = s.collinear_with(p);
    for (std::size_t l = 0; l < s.lines.size(); ++l) {
      if ((s.lines[l] >> p) & 1u) continue;
      const int hits = std::popcount(near & s.lines[l]);
      if (hits != 1) {
        fail("point " + std::to_string(p) + " is collinear with " + std::to_string(hits) + " points of line " +
             std::to_string(l));
      }
    }
  }
  return report;
}

/// Lines are the triangles of g. Requires every edge to lie in exactly one
/// triangle and the result to satisfy the GQ(2,2) axioms.
inline IncidenceStructure build_gq_from_graph(const SmallGraph& g) {
  IncidenceStructure s;
  s.num_points = g.size();
  s.lines = triangles(g);
  for (auto [u, v] : g.edges()) {
    const PointSet e = (PointSet{1} << u) | (PointSet{1} << v);
    const auto count = std::count_if(s.lines.begin(), s.lines.end(), [&](PointSet l) { return (l & e) == e; });
    if (count != 1) {
      throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " lies in " +
                                  std::to_string(count) + " triangles; expected exactly one");
    }
  }
  if (g.size() != 15 || !is_regular(g, 6)) {
    throw std::invalid_argument("collinearity graph of GQ(2,2) must be 6-regular on 15 vertices");
  }
  const auto report = validate_gq_axioms(s);
  if (!report.ok()) throw std::invalid_argument("triangle structure is not a GQ(2,2): " + report.violations.front());
  return s;
}

enum class HyperplaneKind { Ovoid, PerpSet, Grid };

inline const char* to_string(HyperplaneKind k) {
  switch (k) {
    case HyperplaneKind::Ovoid:
      return "ovoid";
    case HyperplaneKind::PerpSet:
      return "perp";
    case HyperplaneKind::Grid:
      return "grid";
  }
  return "?";
}

struct Hyperplane {
  HyperplaneKind kind = HyperplaneKind::Ovoid;
  PointSet points = 0;
  std::optional<std::size_t> center;  // PerpSet only
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Every line meets `points` in exactly one point or lies inside it.
inline bool is_hyperplane(const IncidenceStructure& s, PointSet points) {
  if (points == s.all_points()) return false;
  return std::all_of(s.lines.begin(), s.lines.end(), [&](PointSet l) {
    const PointSet hit = l & points;
    return std::popcount(hit) == 1 || hit == l;
  });
}

inline bool meets_every_line_once(const IncidenceStructure& s, PointSet points) {
  return std::all_of(s.lines.begin(), s.lines.end(), [&](PointSet l) { return std::popcount(l & points) == 1; });
}

/// All ovoids, by scanning every point set whose size is the line count over
/// the number of lines per point.
inline std::vector<Hyperplane> enumerate_ovoids(const IncidenceStructure& s) {
  if (s.num_points == 0 || s.lines.empty()) return {};
  const auto per_point = s.lines_through(0).size();
  if (per_point == 0 || s.lines.size() % per_point != 0) return {};
  const auto k = static_cast<int>(s.lines.size() / per_point);
  std::vector<Hyperplane> out;
  if (k == 0 || static_cast<std::size_t>(k) > s.num_points) return out;
  // Gosper's hack over k-subsets.
  for (std::uint64_t set = (std::uint64_t{1} << k) - 1; set < (std::uint64_t{1} << s.num_points);) {
    if (meets_every_line_once(s, static_cast<PointSet>(set))) {
      out.push_back({HyperplaneKind::Ovoid, static_cast<PointSet>(set), std::nullopt});
    }
    const std::uint64_t c = set & (~set + 1);
    const std::uint64_t r = set + c;
    set = (((r ^ set) >> 2) / c) | r;
  }
  return out;
}

/// All sets of pairwise disjoint lines covering every point exactly once, by
/// exact-cover backtracking on the lowest uncovered point. Each spread is a
/// sorted list of line indices.
inline std::vector<std::vector<std::size_t>> enumerate_spreads(const IncidenceStructure& s) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  std::function<void(PointSet)> cover = [&](PointSet covered) {
    if (covered == s.all_points()) {
      out.push_back(chosen);
      return;
    }
    const auto p = static_cast<std::size_t>(std::countr_zero(~covered));
    for (auto l : s.lines_through(p)) {
      if ((s.lines[l] & covered) != 0) continue;
      chosen.push_back(l);
      cover(covered | s.lines[l]);
      chosen.pop_back();
    }
  };
  cover(0);
  for (auto& sp : out) std::sort(sp.begin(), sp.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Indices of the lines fully inside `points`.
inline std::vector<std::size_t> lines_inside(const IncidenceStructure& s, PointSet points) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < s.lines.size(); ++l) {
    if ((s.lines[l] & points) == s.lines[l]) out.push_back(l);
  }
  return out;
}

/// The two parallel classes of a 3x3 grid: three disjoint lines each, every
/// line of one class meeting every line of the other once.
struct GridClasses {
  std::array<std::size_t, 3> rows;
  std::array<std::size_t, 3> cols;
};

inline std::optional<GridClasses> grid_classes(const IncidenceStructure& s, PointSet points) {
  const auto inside = lines_inside(s, points);
  if (std::popcount(points) != 9 || inside.size() != 6) return std::nullopt;
  std::vector<std::size_t> rows{inside[0]}, cols;
  for (std::size_t i = 1; i < inside.size(); ++i) {
    const bool disjoint = (s.lines[inside[i]] & s.lines[inside[0]]) == 0;
    (disjoint ? rows : cols).push_back(inside[i]);
  }
  if (rows.size() != 3 || cols.size() != 3) return std::nullopt;
  for (auto r : rows) {
    for (auto r2 : rows) {
      if (r != r2 && (s.lines[r] & s.lines[r2]) != 0) return std::nullopt;
    }
    for (auto c : cols) {
      if (std::popcount(s.lines[r] & s.lines[c]) != 1) return std::nullopt;
    }
  }
  return GridClasses{{rows[0], rows[1], rows[2]}, {cols[0], cols[1], cols[2]}};
}

/// Kind of a hyperplane, or nullopt if it fits none of the three.
inline std::optional<Hyperplane> classify_hyperplane(const IncidenceStructure& s, PointSet points) {
  if (!is_hyperplane(s, points)) return std::nullopt;
  const int size = std::popcount(points);
  if (size == 5 && lines_inside(s, points).empty()) return Hyperplane{HyperplaneKind::Ovoid, points, std::nullopt};
  if (size == 7) {
    for (auto c : members(points)) {
      if ((s.collinear_with(c) | (PointSet{1} << c)) == points) return Hyperplane{HyperplaneKind::PerpSet, points, c};
    }
  }
  if (size == 9 && grid_classes(s, points)) return Hyperplane{HyperplaneKind::Grid, points, std::nullopt};
  return std::nullopt;
}

/// All proper geometric hyperplanes, classified and sorted by kind then point
/// set. Backtracking over points with per-line pruning: a line may not hold
/// two chosen points and one rejected point. Throws if a hyperplane has no kind.
inline std::vector<Hyperplane> enumerate_hyperplanes(const IncidenceStructure& s) {
  std::vector<PointSet> found;
  std::function<void(std::size_t, PointSet, PointSet)> decide = [&](std::size_t p, PointSet in, PointSet out) {
    for (auto l : s.lines) {
      const int chosen = std::popcount(l & in);
      const int rejected = std::popcount(l & out);
      if ((chosen >= 2 && rejected >= 1) || rejected == std::popcount(l)) return;
    }
    if (p == s.num_points) {
      if (is_hyperplane(s, in)) found.push_back(in);
      return;
    }
    decide(p + 1, in | (PointSet{1} << p), out);
    decide(p + 1, in, out | (PointSet{1} << p));
  };
  decide(0, 0, 0);
  std::vector<Hyperplane> out;
  for (auto h : found) {
    auto c = classify_hyperplane(s, h);
    if (!c) throw std::runtime_error("hyperplane of size " + std::to_string(std::popcount(h)) + " has no kind");
    out.push_back(*c);
  }
  std::sort(out.begin(), out.end(), [](const Hyperplane& a, const Hyperplane& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.center != b.center) return a.center < b.center;
    return members(a.points) < members(b.points);
  });
  return out;
}

/// Collinearity graph induced on the points outside the ovoid.
struct InducedGraph {
  SmallGraph graph;
  std::vector<std::size_t> vertices;  // original point id of each vertex
};

inline InducedGraph complement_graph_of_ovoid(const IncidenceStructure& s, PointSet ovoid) {
  InducedGraph out;
  out.vertices = members(s.all_points() & ~ovoid);
  out.graph = s.collinearity_graph().induced(out.vertices);
  return out;
}

/// Points of the dual are the lines of s; line p of the dual is the set of
/// lines through point p.
inline IncidenceStructure dual(const IncidenceStructure& s) {
  if (s.lines.size() > 32) throw std::invalid_argument("dual structure would exceed 32 points");
  IncidenceStructure d;
  d.num_points = s.lines.size();
  for (std::size_t p = 0; p < s.num_points; ++p) {
    PointSet pencil = 0;
    for (auto l : s.lines_through(p)) pencil |= PointSet{1} << l;
    d.lines.push_back(pencil);
  }
  return d;
}

/// The dual with the spread's lines deleted: points are the remaining lines of
/// s, and every point of s becomes the set of remaining lines through it.
/// Point i of the result is the i-th surviving line in index order.
inline IncidenceStructure spread_removal_dual(const IncidenceStructure& s, const std::vector<std::size_t>& spread) {
  std::vector<std::size_t> keep;
  for (std::size_t l = 0; l < s.lines.size(); ++l) {
    if (std::find(spread.begin(), spread.end(), l) == spread.end()) keep.push_back(l);
  }
  IncidenceStructure out;
  out.num_points = keep.size();
  for (std::size_t p = 0; p < s.num_points; ++p) {
    PointSet pencil = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if ((s.lines[keep[i]] >> p) & 1u) pencil |= PointSet{1} << i;
    }
    if (pencil != 0) out.lines.push_back(pencil);
  }
  return out;
}

/// Bipartite point-line incidence graph: points first, then lines.
inline SmallGraph incidence_graph(const IncidenceStructure& s) {
  SmallGraph g(s.num_points + s.lines.size());
  for (std::size_t l = 0; l < s.lines.size(); ++l) {
    for (auto p : members(s.lines[l])) g.add_edge(p, s.num_points + l);
  }
  return g;
}

/// Point map of an isomorphism a -> b (lines map onto lines), found through the
/// color-preserving isomorphism of incidence graphs.
inline std::optional<std::vector<std::size_t>> find_structure_isomorphism(const IncidenceStructure& a,
                                                                          const IncidenceStructure& b) {
  if (a.num_points != b.num_points || a.lines.size() != b.lines.size()) return std::nullopt;
  std::vector<std::size_t> colors(a.num_points + a.lines.size(), 0);
  std::fill(colors.begin() + static_cast<std::ptrdiff_t>(a.num_points), colors.end(), 1);
  const auto map = find_isomorphism(incidence_graph(a), incidence_graph(b), colors, colors);
  if (!map) return std::nullopt;
  return std::vector<std::size_t>(map->begin(), map->begin() + static_cast<std::ptrdiff_t>(a.num_points));
}

inline bool is_structure_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b,
                                     const std::vector<std::size_t>& map) {
  if (map.size() != a.num_points || a.num_points != b.num_points || a.lines.size() != b.lines.size()) return false;
  std::vector<PointSet> mapped;
  for (auto l : a.lines) {
    PointSet image = 0;
    for (auto p : members(l)) image |= PointSet{1} << map[p];
    mapped.push_back(image);
  }
  auto target = b.lines;
  std::sort(mapped.begin(), mapped.end());
  std::sort(target.begin(), target.end());
  return mapped == target;
}

}  // namespace prl
