#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prl/bit_matrix.hpp"
#include "prl/ring.hpp"
#include "prl/sign_matrix.hpp"

namespace prl {

/// Row-major 2x2 matrix [[a, b], [c, d]] over a ring.
struct Matrix2R {
  RingElement a, b, c, d;
  friend bool operator==(const Matrix2R&, const Matrix2R&) = default;
};

/// An ordered pair (a, b) of ring elements; a row vector of R^2.
struct RingPair {
  RingElement a, b;
  friend auto operator<=>(const RingPair&, const RingPair&) = default;
};

enum class Relation { Distant, Neighbor };

inline char relation_symbol(Relation r) { return r == Relation::Distant ? '+' : '-'; }

/// The 2k x 2k bit matrix obtained by replacing each entry with its representation.
inline BitMatrix block_matrix(const RingSpec& r, const Matrix2R& m) {
  const std::size_t k = r.rep_dim;
  BitMatrix out(2 * k);
  const std::array<std::array<RingElement, 2>, 2> e{{{m.a, m.b}, {m.c, m.d}}};
  for (std::size_t br = 0; br < 2; ++br) {
    for (std::size_t i = 0; i < k; ++i) {
      out.set_row(br * k + i, r.rep_of(e[br][0]).row(i) | (r.rep_of(e[br][1]).row(i) << k));
    }
  }
  return out;
}

/// Membership in GL(2, R), decided by the rank of the block representation.
inline bool is_invertible_2x2(const RingSpec& r, const Matrix2R& m) { return block_matrix(r, m).invertible(); }

inline bool is_admissible(const RingSpec& r, RingElement a, RingElement b) {
  for (auto c : r.elements()) {
    for (auto d : r.elements()) {
      if (is_invertible_2x2(r, {a, b, c, d})) return true;
    }
  }
  return false;
}

/// Relation of two rows computed straight from the definition.
inline Relation relation_of(const RingSpec& r, RingPair x, RingPair y) {
  return is_invertible_2x2(r, {x.a, x.b, y.a, y.b}) ? Relation::Distant : Relation::Neighbor;
}

/// Left scaling (rho a, rho b).
inline RingPair scale(const RingSpec& r, RingElement rho, RingPair p) { return {r.mul(rho, p.a), r.mul(rho, p.b)}; }

/// Right action of a 2x2 matrix on a row vector: (a, b) g.
inline RingPair act(const RingSpec& r, RingPair p, const Matrix2R& g) {
  return {r.add(r.mul(p.a, g.a), r.mul(p.b, g.c)), r.add(r.mul(p.a, g.b), r.mul(p.b, g.d))};
}

struct PointClass {
  RingPair canonical;
  std::vector<RingPair> members;  // sorted
};

/// Points of P1(R) as left-unit orbits of admissible pairs, sorted by canonical
/// representative, with the distant/neighbor relation between them.
class ProjectiveLine {
 public:
  ProjectiveLine(RingSpec ring, std::vector<PointClass> points, std::vector<Relation> relation,
                 std::vector<std::int32_t> point_of_pair)
      : ring_(std::move(ring)),
        points_(std::move(points)),
        relation_(std::move(relation)),
        point_of_pair_(std::move(point_of_pair)) {}

  const RingSpec& ring() const { return ring_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<PointClass>& points() const { return points_; }
  const PointClass& point(std::size_t i) const { return points_.at(i); }

  Relation relation(std::size_t i, std::size_t j) const { return relation_[i * points_.size() + j]; }
  bool distant(std::size_t i, std::size_t j) const { return relation(i, j) == Relation::Distant; }

  /// Point containing the pair, or nullopt if the pair is not admissible.
  std::optional<std::size_t> find(RingPair p) const {
    if (p.a.index >= ring_.order || p.b.index >= ring_.order) return std::nullopt;
    const auto id = point_of_pair_[p.a.index * ring_.order + p.b.index];
    if (id < 0) return std::nullopt;
    return static_cast<std::size_t>(id);
  }

  std::size_t index_of(RingPair p) const {
    if (auto id = find(p)) return *id;
    throw std::invalid_argument("pair (" + ring_.label(p.a) + "," + ring_.label(p.b) + ") is not admissible over " +
                                ring_.name);
  }

  /// Relation matrix restricted to the given points, '+' for distant.
  SignMatrix induced(const std::vector<std::size_t>& ids) const {
    SignMatrix m(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = 0; j < ids.size(); ++j) m.set(i, j, distant(ids[i], ids[j]));
    }
    return m;
  }

  SignMatrix relation_matrix() const {
    std::vector<std::size_t> all(size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return induced(all);
  }

 private:
  RingSpec ring_;
  std::vector<PointClass> points_;
  std::vector<Relation> relation_;
  std::vector<std::int32_t> point_of_pair_;
};

inline ProjectiveLine enumerate_line(const RingSpec& r) {
  const auto unit_set = units(r);
  const std::size_t n = r.order;
  std::vector<std::int32_t> point_of_pair(n * n, -1);
  std::vector<PointClass> points;
  for (auto a : r.elements()) {
    for (auto b : r.elements()) {
      if (point_of_pair[a.index * n + b.index] != -1 || !is_admissible(r, a, b)) continue;
      PointClass pc;
      for (auto rho : unit_set) pc.members.push_back(scale(r, rho, {a, b}));
      std::sort(pc.members.begin(), pc.members.end());
      pc.members.erase(std::unique(pc.members.begin(), pc.members.end()), pc.members.end());
      pc.canonical = pc.members.front();
      for (auto m : pc.members) point_of_pair[m.a.index * n + m.b.index] = -2;
      points.push_back(std::move(pc));
    }
  }
  // Pairs are visited in lexicographic order, so the first pair of each orbit is
  // its minimum and points come out sorted by canonical representative.
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (auto m : points[i].members) point_of_pair[m.a.index * n + m.b.index] = static_cast<std::int32_t>(i);
  }
  std::vector<Relation> rel(points.size() * points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      rel[i * points.size() + j] = relation_of(r, points[i].canonical, points[j].canonical);
    }
  }
  return ProjectiveLine(r, std::move(points), std::move(rel), std::move(point_of_pair));
}

struct Subconfiguration {
  std::vector<std::size_t> distant_family;   // distant to both U and V, U and V excluded
  std::vector<std::size_t> neighbor_family;  // neighbor to both U and V
};

inline Subconfiguration simultaneous_subconfig(const ProjectiveLine& line, std::size_t u, std::size_t v) {
  if (u >= line.size() || v >= line.size()) throw std::out_of_range("point index out of range");
  if (u == v || !line.distant(u, v)) {
    throw std::invalid_argument("U and V must be two distinct distant points");
  }
  Subconfiguration out;
  for (std::size_t p = 0; p < line.size(); ++p) {
    if (p == u || p == v) continue;
    if (line.distant(p, u) && line.distant(p, v)) out.distant_family.push_back(p);
    if (!line.distant(p, u) && !line.distant(p, v)) out.neighbor_family.push_back(p);
  }
  return out;
}

/// GL(2, R) as an explicit list plus a membership bitmap indexed by (a, b, c, d).
class GeneralLinearGroup {
 public:
  explicit GeneralLinearGroup(const RingSpec& r) : order_(r.order), member_(order_ * order_ * order_ * order_, false) {
    for (auto a : r.elements())
      for (auto b : r.elements())
        for (auto c : r.elements())
          for (auto d : r.elements()) {
            const Matrix2R m{a, b, c, d};
            if (is_invertible_2x2(r, m)) {
              member_[key(m)] = true;
              elements_.push_back(m);
            }
          }
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<Matrix2R>& elements() const { return elements_; }
  bool contains(const Matrix2R& m) const { return member_[key(m)]; }

 private:
  std::size_t key(const Matrix2R& m) const {
    return ((m.a.index * order_ + m.b.index) * order_ + m.c.index) * order_ + m.d.index;
  }

  std::size_t order_;
  std::vector<bool> member_;
  std::vector<Matrix2R> elements_;
};

using PointTriple = std::array<std::size_t, 3>;

inline bool pairwise_distant(const ProjectiveLine& line, const PointTriple& t) {
  return t[0] != t[1] && t[0] != t[2] && t[1] != t[2] && line.distant(t[0], t[1]) && line.distant(t[0], t[2]) &&
         line.distant(t[1], t[2]);
}

/// The image of a point under the right action of g.
inline std::size_t act_on_point(const ProjectiveLine& line, std::size_t point, const Matrix2R& g) {
  return line.index_of(act(line.ring(), line.point(point).canonical, g));
}

/// Some g in GL(2, R) with from[i] g = to[i] for each i, as point classes.
/// Throws std::runtime_error if the group has no such element.
inline Matrix2R gl2_transitivity_witness(const ProjectiveLine& line, const GeneralLinearGroup& gl,
                                         const PointTriple& from, const PointTriple& to) {
  if (!pairwise_distant(line, from) || !pairwise_distant(line, to)) {
    throw std::invalid_argument("transitivity witness needs two pairwise distant triples");
  }
  for (const auto& g : gl.elements()) {
    if (act_on_point(line, from[0], g) == to[0] && act_on_point(line, from[1], g) == to[1] &&
        act_on_point(line, from[2], g) == to[2]) {
      return g;
    }
  }
  throw std::runtime_error("no element of GL(2," + line.ring().name + ") maps the first triple onto the second");
}

/// ((1,0), (0,1), (1,1)) as point indices.
inline PointTriple standard_triple(const ProjectiveLine& line) {
  const auto& r = line.ring();
  return {line.index_of({r.one, r.zero}), line.index_of({r.zero, r.one}), line.index_of({r.one, r.one})};
}

}  // namespace prl
