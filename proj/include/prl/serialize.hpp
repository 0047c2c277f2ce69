#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "prl/correspondence.hpp"
#include "prl/graph.hpp"
#include "prl/projective_line.hpp"
#include "prl/quadrangle.hpp"
#include "prl/ring.hpp"
#include "prl/sign_matrix.hpp"

namespace prl {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json ring_to_json(const RingSpec& r) {
  json add = json::array(), mul = json::array(), rep = json::array();
  for (auto x : r.elements()) {
    json add_row = json::array(), mul_row = json::array();
    for (auto y : r.elements()) {
      add_row.push_back(r.add(x, y).index);
      mul_row.push_back(r.mul(x, y).index);
    }
    add.push_back(std::move(add_row));
    mul.push_back(std::move(mul_row));
    json m = json::array();
    for (std::size_t i = 0; i < r.rep_dim; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < r.rep_dim; ++j) row.push_back(r.rep_of(x).get(i, j) ? 1 : 0);
      m.push_back(std::move(row));
    }
    rep.push_back(std::move(m));
  }
  return {{"schema", kSchemaVersion}, {"name", r.name},      {"order", r.order},     {"zero", r.zero.index},
          {"one", r.one.index},       {"add_table", add},    {"mul_table", mul},     {"rep_dim", r.rep_dim},
          {"rep", rep},               {"labels", r.labels}};
}

/// Inverse of ring_to_json. Only shapes are checked here; use validate_ring
/// for the algebra.
inline RingSpec ring_from_json(const json& j) {
  RingSpec r;
  r.name = j.at("name").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.zero = RingElement{j.at("zero").get<std::uint32_t>()};
  r.one = RingElement{j.at("one").get<std::uint32_t>()};
  r.rep_dim = j.at("rep_dim").get<std::size_t>();
  auto table = [&](const char* key) {
    std::vector<RingElement> out;
    const auto& t = j.at(key);
    if (t.size() != r.order) throw std::invalid_argument(std::string(key) + " has the wrong number of rows");
    for (const auto& row : t) {
      if (row.size() != r.order) throw std::invalid_argument(std::string(key) + " has a row of the wrong length");
      for (const auto& v : row) out.push_back(RingElement{v.get<std::uint32_t>()});
    }
    return out;
  };
  r.add_table = table("add_table");
  r.mul_table = table("mul_table");
  const auto& rep = j.at("rep");
  if (rep.size() != r.order) throw std::invalid_argument("rep has the wrong number of matrices");
  for (const auto& m : rep) {
    BitMatrix b(r.rep_dim);
    if (m.size() != r.rep_dim) throw std::invalid_argument("rep matrix has the wrong size");
    for (std::size_t i = 0; i < r.rep_dim; ++i) {
      if (m[i].size() != r.rep_dim) throw std::invalid_argument("rep matrix has the wrong size");
      for (std::size_t k = 0; k < r.rep_dim; ++k) b.set(i, k, m[i][k].get<int>() != 0);
    }
    r.rep.push_back(b);
  }
  if (j.contains("labels")) r.labels = j.at("labels").get<std::vector<std::string>>();
  return r;
}

inline json pair_to_json(RingPair p) { return json::array({p.a.index, p.b.index}); }

/// Points with their orbits, and the relation as lower-triangular rows
/// (row i holds columns 0..i).
inline json line_to_json(const ProjectiveLine& line) {
  json points = json::array();
  for (std::size_t i = 0; i < line.size(); ++i) {
    json orbit = json::array();
    for (auto m : line.point(i).members) orbit.push_back(pair_to_json(m));
    points.push_back({{"id", i}, {"canonical", pair_to_json(line.point(i).canonical)}, {"orbit", orbit}});
  }
  json relation = json::array();
  for (std::size_t i = 0; i < line.size(); ++i) {
    std::string row;
    for (std::size_t j = 0; j <= i; ++j) row.push_back(relation_symbol(line.relation(i, j)));
    relation.push_back(row);
  }
  return {{"schema", kSchemaVersion}, {"ring", line.ring().name}, {"points", points}, {"relation", relation}};
}

/// CSV in the layout of a signed incidence table: header row of labels, then
/// one row per label.
inline std::string sign_matrix_to_csv(const SignMatrix& m, const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (const auto& l : labels) out << ',' << l;
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << labels.at(i);
    for (std::size_t j = 0; j < m.size(); ++j) out << ',' << m.symbol(i, j);
    out << '\n';
  }
  return out.str();
}

/// Reads the CSV written by sign_matrix_to_csv. Row and column labels are
/// skipped; only the '+'/'-' cells matter.
inline SignMatrix sign_matrix_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream cells(line);
    std::string cell, row;
    std::getline(cells, cell, ',');
    while (std::getline(cells, cell, ',')) {
      if (cell != "+" && cell != "-") throw std::invalid_argument("bad cell '" + cell + "' in relation CSV");
      row += cell;
    }
    rows.push_back(row);
  }
  return SignMatrix::from_rows(rows);
}

inline std::vector<std::string> configuration_labels(std::size_t n = 15) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(point_name(i));
  return out;
}

inline std::string graph_to_dot(const SmallGraph& g, const std::vector<std::string>& labels,
                                const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v) out << "  \"" << labels.at(v) << "\";\n";
  for (auto [u, v] : g.edges()) out << "  \"" << labels.at(u) << "\" -- \"" << labels.at(v) << "\";\n";
  out << "}\n";
  return out.str();
}

/// 1-based C indices of a point set.
inline json ids_to_json(PointSet s) {
  json out = json::array();
  for (auto p : members(s)) out.push_back(p + 1);
  return out;
}

inline json gq_to_json(const IncidenceStructure& s) {
  json lines = json::array();
  for (auto l : s.lines) lines.push_back(ids_to_json(l));
  return {{"schema", kSchemaVersion}, {"points", s.num_points}, {"lines", lines}};
}

/// Ovoids, perp-sets, grids as 1-based point ids; spreads as 1-based line ids
/// into `lines`.
inline json hyperplane_catalog_to_json(const IncidenceStructure& s) {
  json ovoids = json::array(), perps = json::array(), grids = json::array(), spreads = json::array();
  for (const auto& h : enumerate_hyperplanes(s)) {
    switch (h.kind) {
      case HyperplaneKind::Ovoid:
        ovoids.push_back(ids_to_json(h.points));
        break;
      case HyperplaneKind::PerpSet:
        perps.push_back({{"center", *h.center + 1}, {"ids", ids_to_json(h.points)}});
        break;
      case HyperplaneKind::Grid:
        grids.push_back(ids_to_json(h.points));
        break;
    }
  }
  for (const auto& sp : enumerate_spreads(s)) {
    json ids = json::array();
    for (auto l : sp) ids.push_back(l + 1);
    spreads.push_back(ids);
  }
  json lines = json::array();
  for (auto l : s.lines) lines.push_back(ids_to_json(l));
  return {{"schema", kSchemaVersion}, {"lines", lines},  {"ovoids", ovoids},
          {"perp_sets", perps},       {"grids", grids},  {"spreads", spreads}};
}

inline json checks_to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"check", c.id}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

inline json table2_report_to_json(const Table2Report& r) {
  json diffs = json::array();
  for (const auto& d : r.diffs) {
    diffs.push_back({{"comparison", d.comparison},
                     {"row", point_name(d.cell.row)},
                     {"col", point_name(d.cell.col)},
                     {"left", std::string(1, d.cell.left)},
                     {"right", std::string(1, d.cell.right)}});
  }
  return {{"schema", kSchemaVersion}, {"table2_match", r.table2_match}, {"diffs", diffs},
          {"checks", checks_to_json(r.checks)}};
}

inline json certificate_to_json(const Certificate& c) {
  json sections = json::array();
  for (const auto& s : c.sections) sections.push_back({{"section", s.title}, {"checks", checks_to_json(s.checks)}});
  return {{"schema", kSchemaVersion}, {"passed", c.passed()}, {"sections", sections}};
}

inline std::string certificate_to_text(const Certificate& c, bool header = true) {
  std::ostringstream out;
  if (header) out << "projective ring line / two-qubit verification certificate\n\n";
  for (const auto& s : c.sections) {
    out << "[" << s.title << "]\n";
    for (const auto& ch : s.checks) {
      out << "  " << (ch.passed ? "PASS" : "FAIL") << "  " << ch.id;
      if (!ch.detail.empty()) out << "  (" << ch.detail << ")";
      out << '\n';
    }
  }
  out << "\n" << (c.passed() ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << '\n';
  return out.str();
}

}  // namespace prl
