#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "prl/bit_matrix.hpp"

namespace prl {

/// Opaque label of an element inside its ring's tables.
struct RingElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

/// A finite associative ring with unity, given by its operation tables and a
/// faithful unital representation by bit matrices over GF(2).
struct RingSpec {
  std::string name;
  std::size_t order = 0;
  RingElement zero;
  RingElement one;
  std::vector<RingElement> add_table;  // row-major, order x order
  std::vector<RingElement> mul_table;  // row-major, order x order
  std::size_t rep_dim = 0;
  std::vector<BitMatrix> rep;          // indexed by element
  std::vector<std::string> labels;     // display names, indexed by element

  RingElement add(RingElement x, RingElement y) const { return add_table[x.index * order + y.index]; }
  RingElement mul(RingElement x, RingElement y) const { return mul_table[x.index * order + y.index]; }
  const BitMatrix& rep_of(RingElement x) const { return rep[x.index]; }

  RingElement element(std::size_t index) const {
    if (index >= order) {
      throw std::out_of_range("element " + std::to_string(index) + " not in ring " + name +
                              " of order " + std::to_string(order));
    }
    return RingElement{static_cast<std::uint32_t>(index)};
  }

  std::string label(RingElement x) const {
    return x.index < labels.size() ? labels[x.index] : std::to_string(x.index);
  }

  std::vector<RingElement> elements() const {
    std::vector<RingElement> out;
    out.reserve(order);
    for (std::size_t i = 0; i < order; ++i) out.push_back(RingElement{static_cast<std::uint32_t>(i)});
    return out;
  }
};

/// Builds a ring whose elements are the given bit matrices, closed under matrix
/// addition and multiplication. Element i is matrices[i]; tables are derived by
/// lookup. Throws if the set is not closed or lacks zero and identity.
inline RingSpec ring_from_matrices(std::string name, std::vector<BitMatrix> matrices,
                                   std::vector<std::string> labels = {}) {
  if (matrices.empty()) throw std::invalid_argument("ring " + name + " has no elements");
  const std::size_t dim = matrices.front().dim();
  auto key = [](const BitMatrix& m) {
    std::vector<std::uint32_t> k;
    for (std::size_t i = 0; i < m.dim(); ++i) k.push_back(m.row(i));
    return k;
  };
  std::map<std::vector<std::uint32_t>, std::uint32_t> index_of;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (matrices[i].dim() != dim) throw std::invalid_argument("ring " + name + ": mixed matrix sizes");
    if (!index_of.emplace(key(matrices[i]), static_cast<std::uint32_t>(i)).second) {
      throw std::invalid_argument("ring " + name + ": duplicate element " + std::to_string(i));
    }
  }
  auto lookup = [&](const BitMatrix& m, const char* what) {
    auto it = index_of.find(key(m));
    if (it == index_of.end()) throw std::invalid_argument("ring " + name + " is not closed under " + what);
    return RingElement{it->second};
  };

  RingSpec r;
  r.name = std::move(name);
  r.order = matrices.size();
  r.rep_dim = dim;
  r.zero = lookup(BitMatrix(dim), "zero");
  r.one = lookup(BitMatrix::identity(dim), "identity");
  r.add_table.reserve(r.order * r.order);
  r.mul_table.reserve(r.order * r.order);
  for (const auto& a : matrices) {
    for (const auto& b : matrices) {
      r.add_table.push_back(lookup(a + b, "addition"));
      r.mul_table.push_back(lookup(a * b, "multiplication"));
    }
  }
  r.rep = std::move(matrices);
  if (labels.empty()) {
    for (std::size_t i = 0; i < r.order; ++i) labels.push_back(std::to_string(i));
  }
  r.labels = std::move(labels);
  return r;
}

namespace detail {

inline BitMatrix mat2(int a, int b, int c, int d) {
  BitMatrix m(2);
  m.set(0, 0, a);
  m.set(0, 1, b);
  m.set(1, 0, c);
  m.set(1, 1, d);
  return m;
}

inline BitMatrix mat1(int a) {
  BitMatrix m(1);
  m.set(0, 0, a);
  return m;
}

}  // namespace detail

/// The full 2x2 matrix ring over GF(2), with the conventional labels 0..15.
/// Each label's representation is the labelled matrix itself.
inline RingSpec build_m2f2() {
  using detail::mat2;
  std::vector<BitMatrix> m = {
      mat2(0, 0, 0, 0),  // 0
      mat2(1, 0, 0, 1),  // 1
      mat2(0, 1, 1, 0),  // 2
      mat2(1, 1, 1, 1),  // 3
      mat2(0, 0, 1, 1),  // 4
      mat2(1, 0, 1, 0),  // 5
      mat2(0, 1, 0, 1),  // 6
      mat2(1, 1, 0, 0),  // 7
      mat2(0, 1, 0, 0),  // 8
      mat2(1, 1, 0, 1),  // 9
      mat2(0, 0, 1, 0),  // 10
      mat2(1, 0, 1, 1),  // 11
      mat2(0, 1, 1, 1),  // 12
      mat2(1, 1, 1, 0),  // 13
      mat2(0, 0, 0, 1),  // 14
      mat2(1, 0, 0, 0),  // 15
  };
  return ring_from_matrices("m2f2", std::move(m));
}

inline RingSpec build_gf2() {
  return ring_from_matrices("gf2", {detail::mat1(0), detail::mat1(1)}, {"0", "1"});
}

/// GF(4) = GF(2)[w]/(w^2+w+1), w embedded as the companion matrix of w^2+w+1.
inline RingSpec build_gf4() {
  using detail::mat2;
  return ring_from_matrices("gf4", {mat2(0, 0, 0, 0), mat2(1, 0, 0, 1), mat2(0, 1, 1, 1), mat2(1, 1, 1, 0)},
                            {"0", "1", "w", "w+1"});
}

/// GF(2) x GF(2) as diagonal matrices.
inline RingSpec build_gf2xgf2() {
  using detail::mat2;
  return ring_from_matrices("gf2xgf2", {mat2(0, 0, 0, 0), mat2(1, 0, 0, 1), mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)},
                            {"(0,0)", "(1,1)", "(1,0)", "(0,1)"});
}

/// GF(2)[x]/(x^2), a + b x embedded as [[a, b], [0, a]].
inline RingSpec build_dual_numbers() {
  using detail::mat2;
  return ring_from_matrices("gf2x_x2", {mat2(0, 0, 0, 0), mat2(1, 0, 0, 1), mat2(0, 1, 0, 0), mat2(1, 1, 0, 1)},
                            {"0", "1", "x", "1+x"});
}

struct SmallRings {
  RingSpec gf2;
  RingSpec gf4;
  RingSpec gf2xgf2;
  RingSpec dual_numbers;
};

inline SmallRings build_small_rings() {
  return {build_gf2(), build_gf4(), build_gf2xgf2(), build_dual_numbers()};
}

/// Names accepted by ring_by_name.
inline std::vector<std::string> ring_names() { return {"m2f2", "gf2", "gf4", "gf2xgf2", "gf2x_x2"}; }

inline RingSpec ring_by_name(const std::string& name) {
  if (name == "m2f2") return build_m2f2();
  if (name == "gf2") return build_gf2();
  if (name == "gf4") return build_gf4();
  if (name == "gf2xgf2") return build_gf2xgf2();
  if (name == "gf2x_x2") return build_dual_numbers();
  throw std::invalid_argument("unknown ring '" + name + "'");
}

/// Two-sided units, found from the multiplication table alone.
inline std::vector<RingElement> units(const RingSpec& r) {
  std::vector<RingElement> out;
  for (auto x : r.elements()) {
    for (auto y : r.elements()) {
      if (r.mul(x, y) == r.one && r.mul(y, x) == r.one) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

/// Everything that is not a unit, zero included.
inline std::vector<RingElement> zero_divisors(const RingSpec& r) {
  const auto u = units(r);
  std::vector<RingElement> out;
  for (auto x : r.elements()) {
    bool is_unit = false;
    for (auto y : u) is_unit = is_unit || (x == y);
    if (!is_unit) out.push_back(x);
  }
  return out;
}

/// Unit test through the representation: full GF(2) rank.
inline bool is_unit_by_rank(const RingSpec& r, RingElement x) { return r.rep_of(x).invertible(); }

inline bool is_commutative(const RingSpec& r) {
  for (auto x : r.elements()) {
    for (auto y : r.elements()) {
      if (r.mul(x, y) != r.mul(y, x)) return false;
    }
  }
  return true;
}

struct RingViolation {
  std::string law;
  std::vector<std::uint32_t> elements;
  std::string detail;
};

struct RingReport {
  std::vector<RingViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustively checks the ring axioms and the representation homomorphism.
/// Collects every violation instead of stopping at the first one.
inline RingReport validate_ring(const RingSpec& r) {
  RingReport report;
  auto fail = [&](std::string law, std::vector<std::uint32_t> elems, std::string detail) {
    report.violations.push_back({std::move(law), std::move(elems), std::move(detail)});
  };
  const std::size_t n = r.order;
  if (r.add_table.size() != n * n || r.mul_table.size() != n * n || r.rep.size() != n) {
    fail("shape", {}, "tables or representation do not match order " + std::to_string(n));
    return report;
  }
  if (r.zero.index >= n || r.one.index >= n) {
    fail("shape", {}, "zero or one out of range");
    return report;
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (r.add_table[i].index >= n || r.mul_table[i].index >= n) {
      const auto x = static_cast<std::uint32_t>(i / n), y = static_cast<std::uint32_t>(i % n);
      fail("closure", {x, y}, "table entry out of range at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  if (!report.ok()) return report;

  auto cell = [](const char* op, RingElement x, RingElement y) {
    std::ostringstream s;
    s << op << "(" << x.index << "," << y.index << ")";
    return s.str();
  };
  const auto elems = r.elements();
  for (auto x : elems) {
    if (r.add(r.zero, x) != x || r.add(x, r.zero) != x) fail("additive identity", {x.index}, "zero + x != x");
    if (r.mul(r.one, x) != x || r.mul(x, r.one) != x) fail("multiplicative identity", {x.index}, "one * x != x");
    bool has_negative = false;
    for (auto y : elems) {
      has_negative = has_negative || r.add(x, y) == r.zero;
      if (r.add(x, y) != r.add(y, x)) fail("additive commutativity", {x.index, y.index}, cell("add", x, y));
    }
    if (!has_negative) fail("additive inverse", {x.index}, "no negative");
  }
  for (auto x : elems) {
    for (auto y : elems) {
      for (auto z : elems) {
        const std::vector<std::uint32_t> t{x.index, y.index, z.index};
        if (r.add(r.add(x, y), z) != r.add(x, r.add(y, z))) fail("additive associativity", t, "");
        if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z))) fail("multiplicative associativity", t, "");
        if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z))) fail("left distributivity", t, "");
        if (r.mul(r.add(y, z), x) != r.add(r.mul(y, x), r.mul(z, x))) fail("right distributivity", t, "");
      }
    }
  }
  bool sized = true;
  for (auto x : elems) {
    if (r.rep_of(x).dim() != r.rep_dim) {
      fail("representation", {x.index}, "wrong matrix size");
      sized = false;
    }
  }
  if (!sized) return report;
  if (!(r.rep_of(r.one) == BitMatrix::identity(r.rep_dim))) fail("representation", {r.one.index}, "rep(one) != I");
  for (auto x : elems) {
    for (auto y : elems) {
      if (x < y && r.rep_of(x) == r.rep_of(y)) fail("representation injective", {x.index, y.index}, "equal images");
      if (!(r.rep_of(r.add(x, y)) == r.rep_of(x) + r.rep_of(y))) {
        fail("representation additive", {x.index, y.index}, cell("add", x, y));
      }
      if (!(r.rep_of(r.mul(x, y)) == r.rep_of(x) * r.rep_of(y))) {
        fail("representation multiplicative", {x.index, y.index}, cell("mul", x, y));
      }
    }
  }
  return report;
}

}  // namespace prl
