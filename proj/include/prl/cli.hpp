#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prl/prl.hpp"

namespace prl::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

struct Result {
  int code = kOk;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string ring = "m2f2";
  std::string ring_name;  // positional for `ring show|validate`
  std::string ring_file;
  std::string u = "1,0";
  std::string v = "0,1";
  std::string edges = "neighbor";
  std::string fixture;
  std::string grid;
  std::string what;
  std::string out_path;
  std::vector<std::string> factors;
  std::size_t ovoid = 1;
  std::size_t spread = 0;
  bool no_header = false;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : "|") + std::string(f);
  throw UsageError("format '" + o.format + "' not available here (use " + list + ")");
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline RingPair parse_pair(const RingSpec& r, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected a pair A,B but got '" + text + "'");
  try {
    return {r.element(std::stoul(text.substr(0, comma))), r.element(std::stoul(text.substr(comma + 1)))};
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument&) {
    throw UsageError("expected a pair of element indices but got '" + text + "'");
  }
}

inline RingSpec load_ring(const std::string& name) {
  try {
    return ring_by_name(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline std::string table_text(const RingSpec& r, bool multiplication) {
  std::ostringstream s;
  s << (multiplication ? "*" : "+");
  for (auto y : r.elements()) s << '\t' << r.label(y);
  s << '\n';
  for (auto x : r.elements()) {
    s << r.label(x);
    for (auto y : r.elements()) s << '\t' << r.label(multiplication ? r.mul(x, y) : r.add(x, y));
    s << '\n';
  }
  return s.str();
}

inline std::string table_csv(const RingSpec& r, bool multiplication) {
  std::ostringstream s;
  s << (multiplication ? "mul" : "add");
  for (auto y : r.elements()) s << ',' << y.index;
  s << '\n';
  for (auto x : r.elements()) {
    s << x.index;
    for (auto y : r.elements()) s << ',' << (multiplication ? r.mul(x, y) : r.add(x, y)).index;
    s << '\n';
  }
  return s.str();
}

inline Result ring_show(const Options& o) {
  require_format(o, {"text", "json", "csv"});
  const auto r = load_ring(o.ring_name);
  if (o.format == "json") return {kOk, dump(ring_to_json(r))};
  if (o.format == "csv") return {kOk, table_csv(r, false) + "\n" + table_csv(r, true)};
  std::ostringstream s;
  s << "ring " << r.name << ", order " << r.order << "\n";
  s << "units:";
  for (auto u : units(r)) s << ' ' << r.label(u);
  s << "\nzero-divisors:";
  for (auto z : zero_divisors(r)) s << ' ' << r.label(z);
  s << "\n\n" << table_text(r, false) << '\n' << table_text(r, true);
  return {kOk, s.str()};
}

inline Result ring_validate(const Options& o) {
  require_format(o, {"text", "json"});
  RingSpec r;
  if (!o.ring_file.empty()) {
    try {
      r = ring_from_json(json::parse(read_file(o.ring_file)));
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad ring file: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad ring file: ") + e.what());
    }
  } else {
    if (o.ring_name.empty()) throw UsageError("give a ring name or --file");
    r = load_ring(o.ring_name);
  }
  const auto report = validate_ring(r);
  const int code = report.ok() ? kOk : kMismatch;
  if (o.format == "json") {
    json v = json::array();
    for (const auto& x : report.violations) v.push_back({{"law", x.law}, {"elements", x.elements}, {"detail", x.detail}});
    return {code, dump({{"schema", kSchemaVersion}, {"ring", r.name}, {"ok", report.ok()}, {"violations", v}})};
  }
  std::ostringstream s;
  s << "ring " << r.name << ": " << (report.ok() ? "valid" : std::to_string(report.violations.size()) + " violations")
    << '\n';
  for (const auto& x : report.violations) {
    s << "  " << x.law;
    for (auto e : x.elements) s << ' ' << e;
    if (!x.detail.empty()) s << "  " << x.detail;
    s << '\n';
  }
  return {code, s.str()};
}

inline std::vector<std::string> point_labels(const ProjectiveLine& line) {
  std::vector<std::string> out;
  const auto& r = line.ring();
  for (const auto& p : line.points()) out.push_back("(" + r.label(p.canonical.a) + "," + r.label(p.canonical.b) + ")");
  return out;
}

inline Result line_enumerate(const Options& o) {
  require_format(o, {"text", "json", "csv"});
  const auto line = enumerate_line(load_ring(o.ring));
  if (o.format == "json") return {kOk, dump(line_to_json(line))};
  std::ostringstream s;
  if (o.format == "csv") {
    s << "id,a,b,orbit_size\n";
    for (std::size_t i = 0; i < line.size(); ++i) {
      const auto& p = line.point(i);
      s << i << ',' << p.canonical.a.index << ',' << p.canonical.b.index << ',' << p.members.size() << '\n';
    }
    return {kOk, s.str()};
  }
  s << "P1(" << line.ring().name << "): " << line.size() << " points\n";
  const auto labels = point_labels(line);
  for (std::size_t i = 0; i < line.size(); ++i) {
    s << "  " << i << "  " << labels[i] << "  orbit " << line.point(i).members.size() << '\n';
  }
  return {kOk, s.str()};
}

inline bool edges_are_neighbor(const Options& o) {
  if (o.edges == "neighbor") return true;
  if (o.edges == "distant") return false;
  throw UsageError("--edges must be neighbor or distant");
}

inline Result line_relations(const Options& o) {
  require_format(o, {"text", "json", "csv", "dot"});
  const auto line = enumerate_line(load_ring(o.ring));
  const auto m = line.relation_matrix();
  const auto labels = point_labels(line);
  if (o.format == "json") return {kOk, dump(line_to_json(line)["relation"])};
  if (o.format == "csv") return {kOk, sign_matrix_to_csv(m, labels)};
  if (o.format == "dot") {
    return {kOk, graph_to_dot(SmallGraph::from_sign_matrix(m, !edges_are_neighbor(o)), labels, "line")};
  }
  std::ostringstream s;
  for (std::size_t i = 0; i < m.size(); ++i) s << m.row_string(i) << "  " << labels[i] << '\n';
  return {kOk, s.str()};
}

inline Result line_subconfig(const Options& o) {
  require_format(o, {"text", "json", "csv", "dot"});
  const auto line = enumerate_line(load_ring(o.ring));
  const auto& r = line.ring();
  const auto u = line.find(parse_pair(r, o.u));
  const auto v = line.find(parse_pair(r, o.v));
  if (!u || !v) throw UsageError("U and V must be admissible pairs");
  Subconfiguration sub;
  try {
    sub = simultaneous_subconfig(line, *u, *v);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::size_t> ids = sub.distant_family;
  ids.insert(ids.end(), sub.neighbor_family.begin(), sub.neighbor_family.end());
  const auto labels = point_labels(line);
  std::vector<std::string> sub_labels;
  for (auto id : ids) sub_labels.push_back(labels[id]);
  const auto m = line.induced(ids);
  if (o.format == "csv") return {kOk, sign_matrix_to_csv(m, sub_labels)};
  if (o.format == "dot") {
    return {kOk, graph_to_dot(SmallGraph::from_sign_matrix(m, !edges_are_neighbor(o)), sub_labels, "subconfig")};
  }
  if (o.format == "json") {
    auto fam = [&](const std::vector<std::size_t>& f) {
      json a = json::array();
      for (auto id : f) a.push_back(pair_to_json(line.point(id).canonical));
      return a;
    };
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(m.row_string(i));
    return {kOk, dump({{"schema", kSchemaVersion},
                       {"ring", r.name},
                       {"u", pair_to_json(line.point(*u).canonical)},
                       {"v", pair_to_json(line.point(*v).canonical)},
                       {"distant_family", fam(sub.distant_family)},
                       {"neighbor_family", fam(sub.neighbor_family)},
                       {"relation", rows}})};
  }
  std::ostringstream s;
  s << "distant to U and V (" << sub.distant_family.size() << "):";
  for (auto id : sub.distant_family) s << ' ' << labels[id];
  s << "\nneighbor to U and V (" << sub.neighbor_family.size() << "):";
  for (auto id : sub.neighbor_family) s << ' ' << labels[id];
  s << "\n\n";
  for (std::size_t i = 0; i < m.size(); ++i) s << m.row_string(i) << "  " << sub_labels[i] << '\n';
  return {kOk, s.str()};
}

inline std::string line_names(const IncidenceStructure& s, const std::vector<std::size_t>& ids) {
  std::string out;
  for (auto l : ids) out += (out.empty() ? "" : " ") + names_of(s.lines[l]);
  return out;
}

inline Result gq_build(const Options& o, const Model& m) {
  require_format(o, {"text", "json", "dot"});
  if (o.format == "json") return {kOk, dump(gq_to_json(m.gq))};
  if (o.format == "dot") return {kOk, graph_to_dot(m.gq.collinearity_graph(), configuration_labels(), "gq")};
  std::ostringstream s;
  s << "GQ(2,2): " << m.gq.num_points << " points, " << m.gq.lines.size() << " lines\n";
  for (std::size_t l = 0; l < m.gq.lines.size(); ++l) s << "  L" << l + 1 << ' ' << names_of(m.gq.lines[l]) << '\n';
  return {kOk, s.str()};
}

inline Result gq_axioms(const Options& o, const Model& m) {
  require_format(o, {"text", "json"});
  const auto report = validate_gq_axioms(m.gq);
  const auto srg = strongly_regular_parameters(m.gq.collinearity_graph());
  const bool srg_ok = srg == std::optional<SrgParameters>{{15, 6, 1, 3}};
  const int code = report.ok() && srg_ok ? kOk : kMismatch;
  if (o.format == "json") {
    return {code, dump({{"schema", kSchemaVersion}, {"violations", report.violations}, {"srg_15_6_1_3", srg_ok}})};
  }
  std::ostringstream s;
  s << "axioms: " << (report.ok() ? "ok" : "violated") << '\n';
  for (const auto& v : report.violations) s << "  " << v << '\n';
  s << "collinearity graph SRG(15,6,1,3): " << (srg_ok ? "yes" : "no") << '\n';
  return {code, s.str()};
}

inline Result gq_ovoids(const Options& o, const Model& m) {
  require_format(o, {"text", "json"});
  const auto ovoids = enumerate_ovoids(m.gq);
  if (o.format == "json") {
    json a = json::array();
    for (const auto& h : ovoids) a.push_back(ids_to_json(h.points));
    return {kOk, dump({{"schema", kSchemaVersion}, {"ovoids", a}})};
  }
  std::ostringstream s;
  s << ovoids.size() << " ovoids\n";
  for (std::size_t i = 0; i < ovoids.size(); ++i) s << "  " << i + 1 << ' ' << names_of(ovoids[i].points) << '\n';
  return {kOk, s.str()};
}

inline Result gq_spreads(const Options& o, const Model& m) {
  require_format(o, {"text", "json"});
  const auto spreads = enumerate_spreads(m.gq);
  if (o.format == "json") {
    json a = json::array();
    for (const auto& sp : spreads) {
      json lines = json::array();
      for (auto l : sp) lines.push_back(ids_to_json(m.gq.lines[l]));
      a.push_back(lines);
    }
    return {kOk, dump({{"schema", kSchemaVersion}, {"spreads", a}})};
  }
  std::ostringstream s;
  s << spreads.size() << " spreads\n";
  for (std::size_t i = 0; i < spreads.size(); ++i) s << "  " << i + 1 << ' ' << line_names(m.gq, spreads[i]) << '\n';
  return {kOk, s.str()};
}

inline Result gq_hyperplanes(const Options& o, const Model& m) {
  require_format(o, {"text", "json"});
  if (o.format == "json") return {kOk, dump(hyperplane_catalog_to_json(m.gq))};
  const auto hs = enumerate_hyperplanes(m.gq);
  std::ostringstream s;
  s << hs.size() << " geometric hyperplanes\n";
  for (const auto& h : hs) {
    s << "  " << to_string(h.kind);
    if (h.center) s << '(' << point_name(*h.center) << ')';
    s << ' ' << names_of(h.points) << '\n';
  }
  return {kOk, s.str()};
}

inline Result gq_petersen(const Options& o, const Model& m) {
  require_format(o, {"text", "json", "dot"});
  const auto ovoids = enumerate_ovoids(m.gq);
  if (o.ovoid == 0 || o.ovoid > ovoids.size()) {
    throw UsageError("--ovoid must be between 1 and " + std::to_string(ovoids.size()));
  }
  const auto ovoid = ovoids[o.ovoid - 1].points;
  const auto induced = complement_graph_of_ovoid(m.gq, ovoid);
  const auto witness = is_petersen(induced.graph);
  const int code = witness ? kOk : kMismatch;
  std::vector<std::string> labels;
  for (auto p : induced.vertices) labels.push_back(point_name(p));
  if (o.format == "dot") return {code, graph_to_dot(induced.graph, labels, "petersen")};
  // Kneser vertex k is the k-th 2-subset of {1..5} in lexicographic order.
  std::vector<std::string> kneser;
  for (int a = 1; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) kneser.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  if (o.format == "json") {
    json w = json::object();
    if (witness) {
      for (std::size_t i = 0; i < labels.size(); ++i) w[labels[i]] = kneser[(*witness)[i]];
    }
    return {code, dump({{"schema", kSchemaVersion},
                        {"ovoid", ids_to_json(ovoid)},
                        {"petersen", witness.has_value()},
                        {"witness", w}})};
  }
  std::ostringstream s;
  s << "ovoid " << names_of(ovoid) << "; complement is " << (witness ? "" : "not ") << "the Petersen graph\n";
  if (witness) {
    for (std::size_t i = 0; i < labels.size(); ++i) s << "  " << labels[i] << " -> " << kneser[(*witness)[i]] << '\n';
  }
  return {code, s.str()};
}

inline Result pauli_table(const Options& o, const Model& m) {
  require_format(o, {"text", "json", "csv", "dot"});
  const auto labels = configuration_labels();
  if (o.format == "csv") return {kOk, sign_matrix_to_csv(m.commutation, labels)};
  if (o.format == "dot") {
    return {kOk, graph_to_dot(SmallGraph::from_sign_matrix(m.commutation, !edges_are_neighbor(o)), labels, "pauli")};
  }
  if (o.format == "json") {
    json ops = json::array(), rows = json::array();
    for (std::size_t i = 0; i < 15; ++i) {
      ops.push_back(m.labeling.at(i).str());
      rows.push_back(m.commutation.row_string(i));
    }
    return {kOk, dump({{"schema", kSchemaVersion}, {"operators", ops}, {"non_commuting", rows}})};
  }
  std::ostringstream s;
  for (std::size_t i = 0; i < 15; ++i) {
    s << m.commutation.row_string(i) << "  " << labels[i] << " = " << m.labeling.at(i).str() << '\n';
  }
  return {kOk, s.str()};
}

inline PauliGrid parse_grid(const std::string& text) {
  std::vector<std::string> cells;
  std::string cell;
  for (char ch : text) {
    if (ch == ',' || ch == ';' || ch == ' ') {
      if (!cell.empty()) cells.push_back(cell);
      cell.clear();
    } else {
      cell.push_back(ch);
    }
  }
  if (!cell.empty()) cells.push_back(cell);
  if (cells.size() != 9) throw UsageError("a grid needs 9 operators, rows separated by ';'");
  try {
    auto at = [&](std::size_t i) { return PauliOp::parse(cells[i]); };
    return {{{at(0), at(1), at(2)}, {at(3), at(4), at(5)}, {at(6), at(7), at(8)}}};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline Result pauli_mermin(const Options& o, const Model& m) {
  require_format(o, {"text", "json"});
  const PauliGrid grid =
      o.grid.empty() ? pauli_grid(m.labeling, {{{6, 7, 8}, {9, 10, 11}, {12, 13, 14}}}) : parse_grid(o.grid);
  MerminResult res;
  try {
    res = mermin_square_check(grid);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  if (o.format == "json") {
    json g = json::array();
    for (const auto& row : grid) g.push_back({row[0].str(), row[1].str(), row[2].str()});
    return {kOk, dump({{"schema", kSchemaVersion},
                       {"grid", g},
                       {"row_signs", res.row_signs},
                       {"col_signs", res.col_signs},
                       {"magic", res.magic}})};
  }
  std::ostringstream s;
  for (std::size_t r = 0; r < 3; ++r) {
    s << "  " << grid[r][0].str() << ' ' << grid[r][1].str() << ' ' << grid[r][2].str() << "   "
      << (res.row_signs[r] > 0 ? "+" : "-") << "1\n";
  }
  s << "  ";
  for (int c : res.col_signs) s << (c > 0 ? "+1 " : "-1 ");
  s << "\nmagic: " << (res.magic ? "yes" : "no") << '\n';
  return {kOk, s.str()};
}

inline Result pauli_mub(const Options& o, const Model& m) {
  require_format(o, {"text", "json"});
  const auto spreads = enumerate_spreads(m.gq);
  if (o.spread > spreads.size()) throw UsageError("--spread must be between 1 and " + std::to_string(spreads.size()));
  json results = json::array();
  std::ostringstream s;
  bool all = true;
  for (std::size_t i = 0; i < spreads.size(); ++i) {
    if (o.spread != 0 && o.spread != i + 1) continue;
    const auto triples = spread_triples(m, spreads[i]);
    const bool ok = mub_spread_check(triples);
    all = all && ok;
    json t = json::array();
    s << "spread " << i + 1 << ':';
    for (const auto& tr : triples) {
      t.push_back({tr[0].str(), tr[1].str(), tr[2].str()});
      s << " {" << tr[0].str() << ' ' << tr[1].str() << ' ' << tr[2].str() << '}';
    }
    s << "  " << (ok ? "mutually unbiased" : "NOT mutually unbiased") << '\n';
    results.push_back({{"spread", i + 1}, {"triples", t}, {"mutually_unbiased", ok}});
  }
  const int code = all ? kOk : kMismatch;
  if (o.format == "json") return {code, dump({{"schema", kSchemaVersion}, {"spreads", results}})};
  return {code, s.str()};
}

inline Result pauli_multiply(const Options& o) {
  require_format(o, {"text", "json"});
  if (o.factors.empty()) throw UsageError("give at least one operator, e.g. -iZX YY");
  PhasedPauli acc;
  try {
    for (const auto& f : o.factors) acc = acc * PhasedPauli::parse(f);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.format == "json") return {kOk, dump({{"product", acc.str()}})};
  return {kOk, acc.str() + "\n"};
}

inline SignMatrix load_fixture(const Options& o) {
  if (o.fixture.empty()) return reference_relation();
  try {
    auto m = sign_matrix_from_csv(read_file(o.fixture));
    if (m.size() != 15) throw UsageError("fixture must be 15x15");
    return m;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad fixture: ") + e.what());
  }
}

inline std::string checks_text(const std::string& title, const std::vector<Check>& checks) {
  Certificate c{{{title, checks}}};
  return certificate_to_text(c, false);
}

inline Result verify_table2_cmd(const Options& o, const Model& m) {
  require_format(o, {"text", "json"});
  const auto rep = verify_table2(m, load_fixture(o));
  const int code = rep.table2_match && all_passed(rep.checks) ? kOk : kMismatch;
  if (o.format == "json") return {code, dump(table2_report_to_json(rep))};
  std::ostringstream s;
  s << checks_text("relation table", rep.checks);
  for (const auto& d : rep.diffs) {
    s << "  diff " << d.comparison << " at " << point_name(d.cell.row) << ',' << point_name(d.cell.col) << ": "
      << d.cell.left << " vs " << d.cell.right << '\n';
  }
  return {code, s.str()};
}

inline Result checks_result(const Options& o, const std::string& title, const std::vector<Check>& checks) {
  require_format(o, {"text", "json"});
  const int code = all_passed(checks) ? kOk : kMismatch;
  if (o.format == "json") return {code, dump({{"schema", kSchemaVersion}, {"checks", checks_to_json(checks)}})};
  return {code, checks_text(title, checks)};
}

inline Result verify_trinity(const Options& o, const Model& m) {
  const auto rep = trinity_report(m);
  if (o.format != "text") return checks_result(o, "trinity", rep.checks);
  std::ostringstream s;
  s << "hyperplane  count  subline               operators\n";
  for (const auto& row : rep.rows) {
    s << "  " << to_string(row.kind) << "  " << row.count << "  P1(" << row.ring << ")  " << row.operators << "  "
      << (row.verified ? "PASS" : "FAIL") << '\n';
  }
  s << '\n' << checks_text("trinity", rep.checks);
  return {all_passed(rep.checks) ? kOk : kMismatch, s.str()};
}

inline Result verify_all_cmd(const Options& o, const Model& m) {
  require_format(o, {"text", "json"});
  const auto cert = verify_all(m, load_fixture(o));
  const int code = cert.passed() ? kOk : kMismatch;
  if (o.format == "json") return {code, dump(certificate_to_json(cert))};
  return {code, certificate_to_text(cert, !o.no_header)};
}

/// Operators such as "-iZX" look like flags to the parser, so the factors of
/// `pauli multiply` are moved behind a "--" separator, order preserved.
inline std::vector<std::string> separate_factors(const std::vector<std::string>& args) {
  const auto verb = std::find(args.begin(), args.end(), "multiply");
  if (verb == args.begin() || verb == args.end() || *(verb - 1) != "pauli") return args;
  std::vector<std::string> head(args.begin(), verb + 1), factors;
  for (auto it = verb + 1; it != args.end(); ++it) {
    bool is_factor = *it != "--";
    if (is_factor) {
      try {
        PhasedPauli::parse(*it);
      } catch (const std::invalid_argument&) {
        is_factor = false;
      }
    }
    if (*it != "--") (is_factor ? factors : head).push_back(*it);
  }
  if (factors.empty()) return args;
  head.push_back("--");
  head.insert(head.end(), factors.begin(), factors.end());
  return head;
}

}  // namespace detail

/// Runs one invocation. Output goes to `out`, diagnostics to `err`.
/// Exit codes: 0 all checks passed, 1 verification mismatch, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  Options o;
  CLI::App app{"Projective ring line over M2(GF(2)) and the two-qubit Pauli group", "prl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_flag("--no-header", o.no_header, "Omit the certificate header");

  std::function<Result()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Result()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto lazy_model = [] {
    static const Model model = build_model();
    return &model;
  };

  auto* ring = app.add_subcommand("ring", "Finite rings")->require_subcommand(1);
  auto* show = leaf(ring, "show", "Print tables", [&] { return ring_show(o); });
  show->add_option("name", o.ring_name, "Ring name")->required()->check(CLI::IsMember(ring_names()));
  auto* validate = leaf(ring, "validate", "Check the ring axioms", [&] { return ring_validate(o); });
  validate->add_option("name", o.ring_name, "Ring name");
  validate->add_option("--file", o.ring_file, "Ring JSON document");

  auto* line = app.add_subcommand("line", "Projective lines")->require_subcommand(1);
  for (auto* sub : {leaf(line, "enumerate", "List points", [&] { return line_enumerate(o); }),
                    leaf(line, "relations", "Distant/neighbor matrix", [&] { return line_relations(o); }),
                    leaf(line, "subconfig", "Points distant or neighbor to both U and V",
                         [&] { return line_subconfig(o); })}) {
    sub->add_option("--ring", o.ring, "Ring name")->check(CLI::IsMember(ring_names()));
    sub->add_option("--u", o.u, "First point as A,B");
    sub->add_option("--v", o.v, "Second point as C,D");
    sub->add_option("--edges", o.edges, "DOT edges: neighbor or distant");
  }

  auto* gq = app.add_subcommand("gq", "Generalized quadrangle of order two")->require_subcommand(1);
  leaf(gq, "build", "Lines", [&] { return gq_build(o, *lazy_model()); });
  leaf(gq, "axioms", "Axiom check", [&] { return gq_axioms(o, *lazy_model()); });
  leaf(gq, "ovoids", "Ovoids", [&] { return gq_ovoids(o, *lazy_model()); });
  leaf(gq, "spreads", "Spreads", [&] { return gq_spreads(o, *lazy_model()); });
  leaf(gq, "hyperplanes", "Geometric hyperplanes", [&] { return gq_hyperplanes(o, *lazy_model()); });
  leaf(gq, "petersen", "Graph left after removing an ovoid", [&] { return gq_petersen(o, *lazy_model()); })
      ->add_option("--ovoid", o.ovoid, "Ovoid number (1-based)");

  auto* pauli = app.add_subcommand("pauli", "Two-qubit Pauli operators")->require_subcommand(1);
  leaf(pauli, "table", "Commutation table", [&] { return pauli_table(o, *lazy_model()); })
      ->add_option("--edges", o.edges, "DOT edges: neighbor (commuting) or distant");
  leaf(pauli, "mermin", "Mermin square signs", [&] { return pauli_mermin(o, *lazy_model()); })
      ->add_option("--grid", o.grid, "Nine operators, e.g. \"XZ,YX,ZY;X1,XY,1Y;1Z,ZZ,Z1\"");
  leaf(pauli, "mub", "Mutual unbiasedness of spreads", [&] { return pauli_mub(o, *lazy_model()); })
      ->add_option("--spread", o.spread, "Spread number (1-based); all if omitted");
  leaf(pauli, "multiply", "Exact product of phased operators", [&] { return pauli_multiply(o); })
      ->add_option("factors", o.factors, "Operators such as -iZX YY 1Z")
      ->required();

  auto* verify = app.add_subcommand("verify", "Cross-checks")->require_subcommand(1);
  verify->add_option("--fixture", o.fixture, "Relation table CSV to compare against");
  leaf(verify, "table2", "Relation table: geometry vs operators vs fixture",
       [&] { return verify_table2_cmd(o, *lazy_model()); });
  leaf(verify, "factor96", "9+6 factorization",
       [&] { return checks_result(o, "9+6", factorization_9_6(*lazy_model()).checks); });
  leaf(verify, "factor105", "10+5 factorization",
       [&] { return checks_result(o, "10+5", factorization_10_5(*lazy_model()).checks); });
  leaf(verify, "trinity", "Hyperplanes, sublines and operator families",
       [&] { return verify_trinity(o, *lazy_model()); });
  leaf(verify, "all", "Every check", [&] { return verify_all_cmd(o, *lazy_model()); });

  auto* exp = leaf(&app, "export", "Write an object to a file", [&]() -> Result {
    const std::map<std::string, std::function<Result()>> objects{
        {"ring", [&] { o.ring_name = o.ring; return ring_show(o); }},
        {"line", [&] { return line_enumerate(o); }},
        {"relations", [&] { return line_relations(o); }},
        {"subconfig", [&] { return line_subconfig(o); }},
        {"gq", [&] { return gq_build(o, *lazy_model()); }},
        {"hyperplanes", [&] { return gq_hyperplanes(o, *lazy_model()); }},
        {"petersen", [&] { return gq_petersen(o, *lazy_model()); }},
        {"commutation", [&] { return pauli_table(o, *lazy_model()); }},
        {"certificate", [&] { return verify_all_cmd(o, *lazy_model()); }},
    };
    const auto it = objects.find(o.what);
    if (it == objects.end()) throw UsageError("unknown export object '" + o.what + "'");
    auto r = it->second();
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + o.out_path);
    file << r.out;
    return {r.code, ""};
  });
  exp->add_option("--what", o.what, "ring|line|relations|subconfig|gq|hyperplanes|petersen|commutation|certificate")
      ->required();
  exp->add_option("--out", o.out_path, "Output path")->required();
  exp->add_option("--ring", o.ring, "Ring name")->check(CLI::IsMember(ring_names()));
  exp->add_option("--ovoid", o.ovoid, "Ovoid number for petersen");

  const auto normalized = separate_factors(args);
  std::vector<std::string> reversed(normalized.rbegin(), normalized.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (!args.empty() && !args.front().starts_with("-") && !app.get_subcommand_no_throw(args.front())) {
      err << "error: unknown command '" << args.front() << "'\n";
      return kUsage;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!action) {
    err << "error: missing subcommand\n";
    return kUsage;
  }
  try {
    const auto r = action();
    out << r.out;
    return r.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace prl::cli
