// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "prl/prl.hpp"
#include "prl/serialize.hpp"
#include "test_support.hpp"

namespace {

using namespace prl;

struct Outcome {
  bool passed;
  std::string detail;
};

class Criteria {
 public:
  void run(int id, const std::string& name, const std::function<Outcome()>& body) {
    Outcome o{false, ""};
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures_ += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << id << ". " << name;
    if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
    std::cout << '\n' << std::flush;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

SignMatrix fixture_table() { return sign_matrix_from_csv(test::read_fixture("relation_table.csv")); }

std::size_t point_of(const ProjectiveLine& line, std::pair<int, int> p) {
  const auto& r = line.ring();
  return line.index_of({r.element(static_cast<std::size_t>(p.first)), r.element(static_cast<std::size_t>(p.second))});
}

Outcome ring_fidelity() {
  const auto r = build_m2f2();
  const auto t = test::m2f2_tables();
  std::size_t cells = 0;
  for (std::size_t x = 0; x < 16; ++x) {
    for (std::size_t y = 0; y < 16; ++y) {
      cells += r.add(r.element(x), r.element(y)).index == t["add_table"][x][y].get<std::uint32_t>();
      cells += r.mul(r.element(x), r.element(y)).index == t["mul_table"][x][y].get<std::uint32_t>();
    }
  }
  std::set<std::uint32_t> u;
  for (auto e : units(r)) u.insert(e.index);
  const auto zd = zero_divisors(r);
  const bool zero_in = std::find(zd.begin(), zd.end(), r.zero) != zd.end();
  const bool ok = cells == 512 && u == std::set<std::uint32_t>{1, 2, 9, 11, 12, 13} && zd.size() == 10 && zero_in &&
                  validate_ring(r).ok();
  return {ok, std::to_string(cells) + "/512 cells, " + std::to_string(u.size()) + " units, " +
                  std::to_string(zd.size()) + " zero-divisors"};
}

Outcome line_census() {
  const auto line = enumerate_line(build_m2f2());
  bool orbits = true;
  for (const auto& p : line.points()) orbits = orbits && p.members.size() == 6;
  std::set<std::size_t> reps;
  for (auto p : reference::kLineRepresentatives) reps.insert(point_of(line, p));
  const auto gf4 = enumerate_line(build_gf4());
  bool gf4_distant = true;
  for (std::size_t i = 0; i < gf4.size(); ++i)
    for (std::size_t j = i + 1; j < gf4.size(); ++j) gf4_distant = gf4_distant && gf4.distant(i, j);
  const auto grid = enumerate_line(build_gf2xgf2());
  const auto local = enumerate_line(build_dual_numbers());
  std::size_t neighbor_pairs = 0;
  for (std::size_t i = 0; i < local.size(); ++i)
    for (std::size_t j = i + 1; j < local.size(); ++j) neighbor_pairs += !local.distant(i, j);
  const bool ok = line.size() == 35 && orbits && reps.size() == 35 && gf4.size() == 5 && gf4_distant &&
                  grid.size() == 9 && local.size() == 6 && neighbor_pairs == 3;
  return {ok, std::to_string(line.size()) + " points, " + std::to_string(reps.size()) +
                  " reference representatives matched, sublines " + std::to_string(gf4.size()) + "/" +
                  std::to_string(grid.size()) + "/" + std::to_string(local.size())};
}

Outcome subconfiguration() {
  const auto line = enumerate_line(build_m2f2());
  const auto u = point_of(line, {1, 0});
  const auto v = point_of(line, {0, 1});
  const auto sub = simultaneous_subconfig(line, u, v);
  std::vector<std::size_t> config;
  for (auto p : reference::kConfigurationPoints) config.push_back(point_of(line, p));
  const std::vector<std::size_t> first(config.begin(), config.begin() + 6);
  const std::set<std::size_t> second(config.begin() + 6, config.end());
  const std::set<std::size_t> found(sub.neighbor_family.begin(), sub.neighbor_family.end());
  const auto induced = line.induced(config);
  const auto d = diff(induced, fixture_table());
  bool degrees = true;
  for (std::size_t i = 0; i < 15; ++i) {
    degrees = degrees && induced.row_count(i, true) == 8 && induced.row_count(i, false) == 7;
  }
  const auto clique = std::popcount(maximum_clique(SmallGraph::from_sign_matrix(induced, false)));
  const bool ok = sub.distant_family == first && found == second && sub.neighbor_family.size() == 9 && d.empty() &&
                  degrees && clique == 3;
  return {ok, std::to_string(sub.distant_family.size()) + " + " + std::to_string(sub.neighbor_family.size()) +
                  " points, " + std::to_string(d.size()) + " differing cells, max clique " + std::to_string(clique)};
}

Outcome operator_correspondence(const Model& m) {
  const auto fixture = fixture_table();
  const auto comm = commutation_table(standard_labeling());
  const std::size_t diffs = diff(comm, m.geometric).size() + diff(m.geometric, comm).size() +
                            diff(comm, fixture).size() + diff(fixture, comm).size();
  // Cross-check the table against literal 4x4 matrix commutators.
  std::size_t matrix_agree = 0;
  for (std::size_t i = 0; i < 15; ++i) {
    for (std::size_t j = 0; j < 15; ++j) {
      const auto a = test::op(m.labeling.at(i).str()), b = test::op(m.labeling.at(j).str());
      matrix_agree += (test::matmul(a, b) != test::matmul(b, a)) == fixture.get(i, j);
    }
  }
  return {diffs == 0 && matrix_agree == 225,
          std::to_string(diffs) + " differing cells, " + std::to_string(matrix_agree) + "/225 matrix commutators"};
}

Outcome gq_structure(const Model& m) {
  const auto gq = build_gq_from_graph(SmallGraph::from_sign_matrix(m.geometric, false));
  const auto axioms = validate_gq_axioms(gq);
  const auto srg = strongly_regular_parameters(gq.collinearity_graph());
  const auto d = dual(gq);
  const auto iso = find_structure_isomorphism(gq, d);
  const bool ok = axioms.ok() && gq.num_points == 15 && gq.lines.size() == 15 && srg &&
                  *srg == SrgParameters{15, 6, 1, 3} && iso && is_structure_isomorphism(gq, d, *iso);
  return {ok, std::to_string(gq.num_points) + " points, " + std::to_string(gq.lines.size()) + " lines, " +
                  (srg ? "SRG(" + std::to_string(srg->n) + "," + std::to_string(srg->k) + "," +
                             std::to_string(srg->lambda) + "," + std::to_string(srg->mu) + ")"
                       : "not strongly regular") +
                  (iso ? ", self-dual" : ", no duality found")};
}

Outcome hyperplane_census(const Model& m) {
  std::size_t ov = 0, perp = 0, grid = 0;
  const auto hs = enumerate_hyperplanes(m.gq);
  for (const auto& h : hs) {
    ov += h.kind == HyperplaneKind::Ovoid;
    perp += h.kind == HyperplaneKind::PerpSet;
    grid += h.kind == HyperplaneKind::Grid;
  }
  const auto spreads = enumerate_spreads(m.gq).size();
  const auto dual_ovoids = enumerate_ovoids(dual(m.gq)).size();
  const bool ok = ov == 6 && perp == 15 && grid == 10 && hs.size() == 31 && spreads == 6 && dual_ovoids == spreads;
  return {ok, std::to_string(ov) + "/" + std::to_string(perp) + "/" + std::to_string(grid) + " (" +
                  std::to_string(hs.size()) + " total), " + std::to_string(spreads) + " spreads, " +
                  std::to_string(dual_ovoids) + " dual ovoids"};
}

Outcome petersen(const Model& m) {
  const auto ovoids = enumerate_ovoids(m.gq);
  std::size_t good = 0;
  for (const auto& o : ovoids) {
    const auto c = complement_graph_of_ovoid(m.gq, o.points).graph;
    const auto w = is_petersen(c);
    good += c.size() == 10 && is_regular(c, 3) && girth(c) == 5 && w && is_isomorphism(c, petersen_graph(), *w);
  }
  return {ovoids.size() == 6 && good == 6, std::to_string(good) + "/" + std::to_string(ovoids.size()) +
                                               " complements with verified Petersen witness"};
}

Outcome mermin(const Model& m) {
  const auto r = mermin_square_check(pauli_grid(m.labeling, {{{6, 7, 8}, {9, 10, 11}, {12, 13, 14}}}));
  int product = 1;
  for (int s : r.row_signs) product *= s;
  for (int s : r.col_signs) product *= s;
  std::size_t grids = 0, magic = 0;
  for (const auto& h : enumerate_hyperplanes(m.gq)) {
    if (h.kind != HyperplaneKind::Grid) continue;
    ++grids;
    magic += find_magic_arrangement(m.gq, m.labeling, h.points).has_value();
  }
  return {r.magic && product == -1 && grids == 10 && magic == 10,
          "sign product " + std::to_string(product) + ", " + std::to_string(magic) + "/" + std::to_string(grids) +
              " grids magic"};
}

Outcome mub(const Model& m) {
  const auto spreads = enumerate_spreads(m.gq);
  std::size_t good = 0;
  for (const auto& s : spreads) good += mub_spread_check(spread_triples(m, s));
  return {spreads.size() == 6 && good == 6,
          std::to_string(good) + "/" + std::to_string(spreads.size()) + " spreads unbiased"};
}

Outcome transitivity(const Model& m) {
  const auto start = std::chrono::steady_clock::now();
  GeneralLinearGroup gl(m.line.ring());
  const auto standard = standard_triple(m.line);
  std::mt19937 rng(20070101);
  std::size_t found = 0;
  for (int k = 0; k < 100; ++k) {
    const auto target = sample_distant_triple(m.line, rng);
    const auto g = gl2_transitivity_witness(m.line, gl, standard, target);
    bool maps = gl.contains(g);
    for (std::size_t i = 0; i < 3; ++i) maps = maps && act_on_point(m.line, standard[i], g) == target[i];
    found += maps;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {gl.size() == 20160 && found == 100 && seconds < 10.0,
          "|GL| = " + std::to_string(gl.size()) + ", " + std::to_string(found) + "/100 witnesses, " +
              std::to_string(static_cast<int>(seconds * 1000)) + " ms"};
}

}  // namespace

int main() {
  const auto model = build_model();
  Criteria c;
  c.run(1, "ring fidelity", ring_fidelity);
  c.run(2, "line census", line_census);
  c.run(3, "sub-configuration", subconfiguration);
  c.run(4, "operator correspondence", [&] { return operator_correspondence(model); });
  c.run(5, "quadrangle structure", [&] { return gq_structure(model); });
  c.run(6, "hyperplane census", [&] { return hyperplane_census(model); });
  c.run(7, "Petersen complements", [&] { return petersen(model); });
  c.run(8, "Mermin magic", [&] { return mermin(model); });
  c.run(9, "mutually unbiased bases", [&] { return mub(model); });
  c.run(10, "transitivity", [&] { return transitivity(model); });
  std::cout << (c.failures() == 0 ? "all 10 criteria passed" : std::to_string(c.failures()) + " criteria failed")
            << '\n';
  return c.failures() == 0 ? 0 : 1;
}
