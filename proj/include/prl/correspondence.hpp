#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "prl/graph.hpp"
#include "prl/pauli.hpp"
#include "prl/projective_line.hpp"
#include "prl/quadrangle.hpp"
#include "prl/reference.hpp"
#include "prl/ring.hpp"
#include "prl/sign_matrix.hpp"

namespace prl {

/// One verified statement: what was checked, whether it held, and a short detail.
struct Check {
  std::string id;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

inline std::string point_name(std::size_t c_index) { return "C" + std::to_string(c_index + 1); }

inline std::string names_of(PointSet s) {
  std::string out;
  for (auto p : members(s)) out += (out.empty() ? "" : ",") + point_name(p);
  return "{" + out + "}";
}

inline SignMatrix reference_relation() {
  return SignMatrix::from_rows({reference::kConfigurationRelation.begin(), reference::kConfigurationRelation.end()});
}

/// Everything the three views are built from. The quadrangle's points are the
/// configuration labels C1..C15 (ids 0..14), and its lines come from the
/// neighbor graph of the ring geometry.
struct Model {
  ProjectiveLine line;
  std::size_t u = 0;
  std::size_t v = 0;
  std::array<std::size_t, 15> config{};  // point id of C1..C15 on the line
  SignMatrix geometric;                  // '+' = distant
  PauliLabeling labeling;
  SignMatrix commutation;                // '+' = non-commuting
  IncidenceStructure gq;
};

inline Model build_model(const PauliLabeling& labeling = standard_labeling()) {
  auto line = enumerate_line(build_m2f2());
  const auto& r = line.ring();
  const auto u = line.index_of({r.one, r.zero});
  const auto v = line.index_of({r.zero, r.one});
  std::array<std::size_t, 15> config{};
  for (std::size_t i = 0; i < 15; ++i) {
    const auto [a, b] = reference::kConfigurationPoints[i];
    config[i] = line.index_of({r.element(static_cast<std::size_t>(a)), r.element(static_cast<std::size_t>(b))});
  }
  auto geometric = line.induced({config.begin(), config.end()});
  auto gq = build_gq_from_graph(SmallGraph::from_sign_matrix(geometric, false));
  auto commutation = commutation_table(labeling);
  return Model{std::move(line), u, v, config, std::move(geometric), labeling, std::move(commutation), std::move(gq)};
}

/// '+' off the diagonal for points of the quadrangle that share no line.
inline SignMatrix non_collinearity(const IncidenceStructure& s) {
  const auto g = s.collinearity_graph();
  SignMatrix m(s.num_points);
  for (std::size_t i = 0; i < s.num_points; ++i) {
    for (std::size_t j = 0; j < s.num_points; ++j) m.set(i, j, i != j && !g.adjacent(i, j));
  }
  return m;
}

/// Neighbor graph (off-diagonal neighbor pairs) of a whole projective line.
inline SmallGraph neighbor_graph(const ProjectiveLine& line) {
  return SmallGraph::from_sign_matrix(line.relation_matrix(), false);
}

struct SourcedDiff {
  std::string comparison;
  CellDiff cell;
};

struct Table2Report {
  bool table2_match = false;
  std::vector<SourcedDiff> diffs;
  std::vector<Check> checks;
};

/// Compares the ring-geometry relation, the commutation table, the quadrangle's
/// non-collinearity and the reference fixture cell by cell.
inline Table2Report verify_table2(const Model& m, const SignMatrix& fixture = reference_relation()) {
  Table2Report rep;
  auto compare = [&](const std::string& name, const SignMatrix& a, const SignMatrix& b) {
    if (a.size() != b.size()) {
      rep.diffs.push_back({name, {0, 0, '?', '?'}});
      rep.checks.push_back({name, false, "size mismatch"});
      return;
    }
    const auto d = diff(a, b);
    for (const auto& c : d) rep.diffs.push_back({name, c});
    rep.checks.push_back({name, d.empty(), std::to_string(d.size()) + " differing cells of " +
                                               std::to_string(a.size() * a.size())});
  };
  compare("geometry vs operators", m.geometric, m.commutation);
  compare("geometry vs fixture", m.geometric, fixture);
  compare("operators vs fixture", m.commutation, fixture);
  compare("quadrangle vs geometry", non_collinearity(m.gq), m.geometric);
  rep.table2_match = rep.diffs.empty();

  const auto sub = simultaneous_subconfig(m.line, m.u, m.v);
  const std::vector<std::size_t> first(m.config.begin(), m.config.begin() + 6);
  std::set<std::size_t> second_expected(m.config.begin() + 6, m.config.end());
  std::set<std::size_t> second_found(sub.neighbor_family.begin(), sub.neighbor_family.end());
  rep.checks.push_back({"distant family is C1..C6 in order", sub.distant_family == first,
                        std::to_string(sub.distant_family.size()) + " points"});
  rep.checks.push_back({"neighbor family is C7..C15", second_found == second_expected,
                        std::to_string(sub.neighbor_family.size()) + " points"});

  bool degrees = true, diagonal = true;
  for (std::size_t i = 0; i < m.geometric.size(); ++i) {
    degrees = degrees && m.geometric.row_count(i, false) == 7 && m.geometric.row_count(i, true) == 8;
    diagonal = diagonal && !m.geometric.get(i, i) && !m.commutation.get(i, i);
  }
  rep.checks.push_back({"every point has 6 neighbors and 8 distant points", degrees, ""});
  rep.checks.push_back({"diagonal is neighbor / self-commuting", diagonal, ""});
  const auto clique = maximum_clique(SmallGraph::from_sign_matrix(m.geometric, false));
  rep.checks.push_back({"largest pairwise-neighbor set has 3 points", std::popcount(clique) == 3,
                        "found " + names_of(clique)});
  return rep;
}

struct Factorization96Report {
  std::optional<std::vector<std::size_t>> grid_isomorphism;  // nine points -> P1(GF(2)xGF(2))
  std::vector<std::pair<PointSet, PointSet>> splits;         // of C1..C6 into two GF(4) lines
  MerminResult mermin;
  std::vector<Check> checks;
};

inline PauliGrid pauli_grid(const PauliLabeling& l, const std::array<std::array<std::size_t, 3>, 3>& points) {
  auto at = [&](std::size_t r, std::size_t c) { return l.at(points[r][c]); };
  return {{{at(0, 0), at(0, 1), at(0, 2)}, {at(1, 0), at(1, 1), at(1, 2)}, {at(2, 0), at(2, 1), at(2, 2)}}};
}

/// The six points distant to U and V split into two lines over GF(4) through U
/// and V, with every cross pair neighbor; the nine points neighbor to both form
/// the line over GF(2)xGF(2), carrying a Mermin square.
inline Factorization96Report factorization_9_6(const Model& m) {
  Factorization96Report rep;
  const auto gf4_line = enumerate_line(build_gf4());
  const auto grid_line = enumerate_line(build_gf2xgf2());

  std::vector<std::size_t> nine;
  for (std::size_t i = 6; i < 15; ++i) nine.push_back(i);
  const auto nine_graph = SmallGraph::from_sign_matrix(m.geometric, false).induced(nine);
  rep.grid_isomorphism = find_isomorphism(nine_graph, neighbor_graph(grid_line));
  rep.checks.push_back({"C7..C15 is the line over GF(2)xGF(2)", rep.grid_isomorphism.has_value(),
                        std::to_string(grid_line.size()) + " points on that line"});
  bool four_four = true;
  for (std::size_t i = 0; i < nine_graph.size(); ++i) four_four = four_four && nine_graph.degree(i) == 4;
  rep.checks.push_back({"each of C7..C15 has 4 neighbors and 4 distant points among the nine", four_four, ""});

  // Split of C1..C6: fix C1 in the first triple to count each split once.
  const auto gf4_graph = neighbor_graph(gf4_line);
  for (PointSet t = 0; t < (PointSet{1} << 6); ++t) {
    if (std::popcount(t) != 3 || !(t & 1u)) continue;
    const PointSet rest = 0b111111u & ~t;
    bool ok = true;
    for (PointSet part : {t, rest}) {
      std::vector<std::size_t> ids{m.u, m.v};
      for (auto c : members(part)) ids.push_back(m.config[c]);
      const auto g = SmallGraph::from_sign_matrix(m.line.induced(ids), false);
      ok = ok && find_isomorphism(g, gf4_graph).has_value();
    }
    for (auto a : members(t)) {
      for (auto b : members(rest)) ok = ok && !m.geometric.get(a, b);
    }
    if (ok) rep.splits.emplace_back(t, rest);
  }
  std::string split_text;
  for (auto [a, b] : rep.splits) split_text += names_of(a) + " " + names_of(b) + " ";
  rep.checks.push_back({"C1..C6 split into two lines over GF(4) through U and V, cross pairs neighbor",
                        rep.splits.size() == 1, split_text});

  rep.mermin = mermin_square_check(pauli_grid(m.labeling, {{{6, 7, 8}, {9, 10, 11}, {12, 13, 14}}}));
  rep.checks.push_back({"rows (C7 C8 C9)(C10 C11 C12)(C13 C14 C15) form a magic square", rep.mermin.magic, ""});
  return rep;
}

struct OvoidSplit {
  PointSet ovoid = 0;
  bool meets_every_line_once = false;
  bool mutually_non_commuting = false;
  bool gf4_line = false;
  std::optional<std::vector<std::size_t>> petersen;  // complement vertex -> Kneser vertex
  bool ok() const { return meets_every_line_once && mutually_non_commuting && gf4_line && petersen.has_value(); }
};

inline OvoidSplit check_ovoid_split(const Model& m, PointSet ovoid) {
  OvoidSplit out;
  out.ovoid = ovoid;
  out.meets_every_line_once = meets_every_line_once(m.gq, ovoid);
  const auto pts = members(ovoid);
  out.mutually_non_commuting = true;
  for (auto a : pts) {
    for (auto b : pts) {
      if (a != b) out.mutually_non_commuting = out.mutually_non_commuting && !commutes(m.labeling.at(a), m.labeling.at(b));
    }
  }
  const auto g = SmallGraph::from_sign_matrix(m.geometric, false).induced(pts);
  out.gf4_line = find_isomorphism(g, neighbor_graph(enumerate_line(build_gf4()))).has_value();
  out.petersen = is_petersen(complement_graph_of_ovoid(m.gq, ovoid).graph);
  return out;
}

struct Factorization105Report {
  std::vector<OvoidSplit> splits;
  std::vector<Check> checks;
};

/// Every ovoid: five mutually non-commuting operators modelling P1(GF(4)),
/// leaving a Petersen graph on the other ten points.
inline Factorization105Report factorization_10_5(const Model& m) {
  Factorization105Report rep;
  const auto ovoids = enumerate_ovoids(m.gq);
  rep.checks.push_back({"six ovoids", ovoids.size() == 6, std::to_string(ovoids.size()) + " found"});
  for (const auto& o : ovoids) {
    rep.splits.push_back(check_ovoid_split(m, o.points));
    rep.checks.push_back({"ovoid " + names_of(o.points) + " + Petersen complement", rep.splits.back().ok(), ""});
  }
  return rep;
}

struct PerpReport {
  std::size_t center = 0;
  PointSet neighbors = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::optional<std::vector<std::size_t>> subline_isomorphism;  // onto P1(GF(2)[x]/(x^2))
  bool is_perp_hyperplane = false;
  bool ok() const { return pairs.size() == 3 && subline_isomorphism && is_perp_hyperplane; }
};

/// The six points neighbor to X: three neighbor pairs, otherwise distant,
/// modelling the line over GF(2)[x]/(x^2).
inline PerpReport perp_subline_check(const Model& m, std::size_t x) {
  if (x >= 15) throw std::out_of_range("configuration label must be C1..C15");
  PerpReport rep;
  rep.center = x;
  for (std::size_t j = 0; j < 15; ++j) {
    if (j != x && !m.geometric.get(x, j)) rep.neighbors |= PointSet{1} << j;
  }
  const auto six = members(rep.neighbors);
  for (std::size_t i = 0; i < six.size(); ++i) {
    for (std::size_t j = i + 1; j < six.size(); ++j) {
      if (!m.geometric.get(six[i], six[j])) rep.pairs.emplace_back(six[i], six[j]);
    }
  }
  const auto g = SmallGraph::from_sign_matrix(m.geometric, false).induced(six);
  rep.subline_isomorphism = find_isomorphism(g, neighbor_graph(enumerate_line(build_dual_numbers())));
  const auto h = classify_hyperplane(m.gq, rep.neighbors | (PointSet{1} << x));
  rep.is_perp_hyperplane = h && h->kind == HyperplaneKind::PerpSet && h->center == x;
  return rep;
}

struct MerminArrangement {
  std::array<std::array<std::size_t, 3>, 3> points{};
  MerminResult result;
};

/// Magic arrangement of a grid hyperplane: among all 72 ways to lay its six
/// lines out as rows and columns, the lexicographically least (by C index)
/// one that is magic.
inline std::optional<MerminArrangement> find_magic_arrangement(const IncidenceStructure& s, const PauliLabeling& l,
                                                               PointSet grid) {
  const auto classes = grid_classes(s, grid);
  if (!classes) return std::nullopt;
  std::optional<MerminArrangement> best;
  for (int orientation = 0; orientation < 2; ++orientation) {
    auto rows = orientation == 0 ? classes->rows : classes->cols;
    auto cols = orientation == 0 ? classes->cols : classes->rows;
    std::sort(rows.begin(), rows.end());
    do {
      std::sort(cols.begin(), cols.end());
      do {
        MerminArrangement a;
        for (std::size_t r = 0; r < 3; ++r) {
          for (std::size_t c = 0; c < 3; ++c) {
            a.points[r][c] = static_cast<std::size_t>(std::countr_zero(s.lines[rows[r]] & s.lines[cols[c]]));
          }
        }
        a.result = mermin_square_check(pauli_grid(l, a.points));
        if (a.result.magic && (!best || a.points < best->points)) best = a;
      } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
  }
  return best;
}

/// Pauli triples of the lines of a spread.
inline std::vector<PauliTriple> spread_triples(const Model& m, const std::vector<std::size_t>& spread) {
  std::vector<PauliTriple> out;
  for (auto l : spread) {
    const auto pts = members(m.gq.lines[l]);
    out.push_back({m.labeling.at(pts[0]), m.labeling.at(pts[1]), m.labeling.at(pts[2])});
  }
  return out;
}

struct TrinityRow {
  HyperplaneKind kind;
  std::size_t count = 0;
  std::string ring;
  std::string operators;
  bool verified = false;
};

struct TrinityReport {
  std::vector<TrinityRow> rows;
  std::vector<MerminArrangement> grids;
  std::size_t spreads = 0;
  std::size_t dual_ovoids = 0;
  std::vector<Check> checks;
};

/// Hyperplane kind <-> subline ring <-> operator family, with every cell checked.
inline TrinityReport trinity_report(const Model& m) {
  TrinityReport rep;
  const auto hyperplanes = enumerate_hyperplanes(m.gq);
  const auto nbr = SmallGraph::from_sign_matrix(m.geometric, false);
  const auto gf4 = neighbor_graph(enumerate_line(build_gf4()));
  const auto local = neighbor_graph(enumerate_line(build_dual_numbers()));
  const auto grid = neighbor_graph(enumerate_line(build_gf2xgf2()));

  TrinityRow ov{HyperplaneKind::Ovoid, 0, "gf4", "five mutually non-commuting operators", true};
  TrinityRow perp{HyperplaneKind::PerpSet, 0, "gf2x_x2", "six operators commuting with a given one", true};
  TrinityRow gr{HyperplaneKind::Grid, 0, "gf2xgf2", "nine operators of a Mermin square", true};
  for (const auto& h : hyperplanes) {
    switch (h.kind) {
      case HyperplaneKind::Ovoid: {
        ++ov.count;
        ov.verified = ov.verified && check_ovoid_split(m, h.points).ok() &&
                      find_isomorphism(nbr.induced(members(h.points)), gf4).has_value();
        break;
      }
      case HyperplaneKind::PerpSet: {
        ++perp.count;
        const auto pr = perp_subline_check(m, *h.center);
        perp.verified = perp.verified && pr.ok() &&
                        find_isomorphism(nbr.induced(members(pr.neighbors)), local).has_value();
        break;
      }
      case HyperplaneKind::Grid: {
        ++gr.count;
        const auto arrangement = find_magic_arrangement(m.gq, m.labeling, h.points);
        gr.verified = gr.verified && arrangement.has_value() &&
                      find_isomorphism(nbr.induced(members(h.points)), grid).has_value();
        if (arrangement) rep.grids.push_back(*arrangement);
        break;
      }
    }
  }
  ov.verified = ov.verified && ov.count == 6;
  perp.verified = perp.verified && perp.count == 15;
  gr.verified = gr.verified && gr.count == 10;
  rep.rows = {ov, perp, gr};
  for (const auto& row : rep.rows) {
    rep.checks.push_back({std::string(to_string(row.kind)) + " <-> P1(" + row.ring + ") <-> " + row.operators,
                          row.verified, std::to_string(row.count) + " hyperplanes"});
  }

  const auto spreads = enumerate_spreads(m.gq);
  rep.spreads = spreads.size();
  rep.dual_ovoids = enumerate_ovoids(dual(m.gq)).size();
  bool mub = !spreads.empty();
  for (const auto& sp : spreads) mub = mub && mub_spread_check(spread_triples(m, sp));
  rep.checks.push_back({"spreads are mutually unbiased bases", mub, std::to_string(spreads.size()) + " spreads"});
  rep.checks.push_back({"spread count equals ovoid count of the dual", rep.spreads == rep.dual_ovoids,
                        std::to_string(rep.spreads) + " vs " + std::to_string(rep.dual_ovoids)});
  return rep;
}

/// Random pairwise-distant triple of points on the line.
inline PointTriple sample_distant_triple(const ProjectiveLine& line, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, line.size() - 1);
  for (;;) {
    const PointTriple t{pick(rng), pick(rng), pick(rng)};
    if (pairwise_distant(line, t)) return t;
  }
}

struct Section {
  std::string title;
  std::vector<Check> checks;
};

struct Certificate {
  std::vector<Section> sections;
  bool passed() const {
    return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return all_passed(s.checks); });
  }
};

/// Runs every consistency check over the ring, the line, the operators and the
/// quadrangle. `transitivity_samples` random distant triples are matched
/// against the standard triple with a fixed seed.
inline Certificate verify_all(const Model& m, const SignMatrix& fixture = reference_relation(),
                              std::size_t transitivity_samples = 100, unsigned seed = 20070101) {
  Certificate cert;
  const auto& ring = m.line.ring();

  {
    Section s{"ring", {}};
    bool tables = true;
    for (std::size_t x = 0; x < 16; ++x) {
      for (std::size_t y = 0; y < 16; ++y) {
        tables = tables &&
                 ring.add(ring.element(x), ring.element(y)).index == static_cast<std::uint32_t>(reference::kM2F2Add[x][y]) &&
                 ring.mul(ring.element(x), ring.element(y)).index == static_cast<std::uint32_t>(reference::kM2F2Mul[x][y]);
      }
    }
    s.checks.push_back({"addition and multiplication tables match the reference", tables, "512 cells"});
    std::vector<std::uint32_t> u;
    for (auto e : units(ring)) u.push_back(e.index);
    const std::vector<std::uint32_t> expected(reference::kM2F2Units.begin(), reference::kM2F2Units.end());
    s.checks.push_back({"units are {1,2,9,11,12,13}", u == expected,
                        std::to_string(u.size()) + " units, " + std::to_string(zero_divisors(ring).size()) +
                            " zero-divisors"});
    s.checks.push_back({"ring axioms and representation", validate_ring(ring).ok(), ""});
    cert.sections.push_back(std::move(s));
  }

  {
    Section s{"line census", {}};
    bool orbits = m.line.size() == 35;
    for (const auto& p : m.line.points()) orbits = orbits && p.members.size() == 6;
    s.checks.push_back({"35 points with 6 pairs each", orbits, std::to_string(m.line.size()) + " points"});
    std::set<std::size_t> reps;
    for (auto [a, b] : reference::kLineRepresentatives) {
      if (auto id = m.line.find({ring.element(static_cast<std::size_t>(a)), ring.element(static_cast<std::size_t>(b))})) {
        reps.insert(*id);
      }
    }
    s.checks.push_back({"reference representatives hit all 35 points", reps.size() == 35, ""});
    const auto gf4 = enumerate_line(build_gf4());
    bool all_distant = true;
    for (std::size_t i = 0; i < gf4.size(); ++i) {
      for (std::size_t j = 0; j < gf4.size(); ++j) all_distant = all_distant && (i == j || gf4.distant(i, j));
    }
    s.checks.push_back({"P1(GF(4)) has 5 mutually distant points", gf4.size() == 5 && all_distant, ""});
    s.checks.push_back({"P1(GF(2)xGF(2)) has 9 points", enumerate_line(build_gf2xgf2()).size() == 9, ""});
    const auto local = enumerate_line(build_dual_numbers());
    const auto local_graph = neighbor_graph(local);
    s.checks.push_back({"P1(GF(2)[x]/(x^2)) has 6 points in 3 neighbor pairs",
                        local.size() == 6 && local_graph.edge_count() == 3 && is_regular(local_graph, 1), ""});
    s.checks.push_back({"P1(GF(2)) has 3 points", enumerate_line(build_gf2()).size() == 3, ""});
    cert.sections.push_back(std::move(s));
  }

  {
    const auto t2 = verify_table2(m, fixture);
    Section s{"configuration and operators", t2.checks};
    cert.sections.push_back(std::move(s));
  }

  {
    Section s{"quadrangle", {}};
    s.checks.push_back({"GQ(2,2) axioms", validate_gq_axioms(m.gq).ok(),
                        std::to_string(m.gq.num_points) + " points, " + std::to_string(m.gq.lines.size()) + " lines"});
    const auto srg = strongly_regular_parameters(m.gq.collinearity_graph());
    s.checks.push_back({"collinearity graph is SRG(15,6,1,3)", srg == std::optional<SrgParameters>{{15, 6, 1, 3}}, ""});
    const auto d = dual(m.gq);
    const auto self = find_structure_isomorphism(m.gq, d);
    s.checks.push_back({"self-dual", self && is_structure_isomorphism(m.gq, d, *self), ""});
    const auto hyperplanes = enumerate_hyperplanes(m.gq);
    std::array<std::size_t, 3> counts{};
    for (const auto& h : hyperplanes) ++counts[static_cast<std::size_t>(h.kind)];
    s.checks.push_back({"hyperplanes: 6 ovoids, 15 perp-sets, 10 grids",
                        counts == std::array<std::size_t, 3>{6, 15, 10} && hyperplanes.size() == 31,
                        std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" + std::to_string(counts[2])});
    s.checks.push_back({"ovoid search agrees with hyperplane census", enumerate_ovoids(m.gq).size() == counts[0], ""});
    cert.sections.push_back(std::move(s));
  }

  cert.sections.push_back({"9+6 factorization", factorization_9_6(m).checks});
  cert.sections.push_back({"10+5 factorization", factorization_10_5(m).checks});

  {
    Section s{"perp-sets", {}};
    const auto c13 = perp_subline_check(m, 12);
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{3, 4}, {6, 9}, {13, 14}};
    s.checks.push_back({"C13: pairs {C4,C5} {C7,C10} {C14,C15}", c13.pairs == expected && c13.ok(), ""});
    bool all = true;
    for (std::size_t x = 0; x < 15; ++x) all = all && perp_subline_check(m, x).ok();
    s.checks.push_back({"all 15 perp-sets model P1(GF(2)[x]/(x^2))", all, ""});
    cert.sections.push_back(std::move(s));
  }

  cert.sections.push_back({"hyperplanes, sublines, operators", trinity_report(m).checks});

  {
    Section s{"transitivity", {}};
    const GeneralLinearGroup gl(ring);
    s.checks.push_back({"|GL(2,R)| = 20160", gl.size() == 20160, std::to_string(gl.size())});
    std::mt19937 rng(seed);
    const auto standard = standard_triple(m.line);
    std::size_t found = 0;
    for (std::size_t k = 0; k < transitivity_samples; ++k) {
      const auto target = sample_distant_triple(m.line, rng);
      try {
        const auto g = gl2_transitivity_witness(m.line, gl, standard, target);
        found += gl.contains(g) ? 1 : 0;
      } catch (const std::runtime_error&) {
      }
    }
    s.checks.push_back({"witness for every sampled distant triple", found == transitivity_samples,
                        std::to_string(found) + "/" + std::to_string(transitivity_samples)});
    cert.sections.push_back(std::move(s));
  }
  return cert;
}

}  // namespace prl
