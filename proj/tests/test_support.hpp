#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace prl::test {

inline std::string fixture_path(const std::string& name) { return std::string(PRL_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline nlohmann::json m2f2_tables() { return nlohmann::json::parse(read_fixture("m2f2_tables.json")); }

/// Rows of '+'/'-' from the CSV fixture, labels dropped.
inline std::vector<std::string> relation_rows(const std::string& name = "relation_table.csv") {
  std::istringstream in(read_fixture(name));
  std::string line;
  std::vector<std::string> rows;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::string row;
    for (std::size_t i = line.find(',') + 1; i < line.size(); ++i) {
      if (line[i] == '+' || line[i] == '-') row.push_back(line[i]);
    }
    if (!row.empty()) rows.push_back(row);
  }
  return rows;
}

/// Exact complex 4x4 matrices over Z[i], used as an independent oracle for the
/// Pauli algebra.
struct Cx {
  long re = 0, im = 0;
  friend Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator*(Cx a, Cx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend bool operator==(const Cx&, const Cx&) = default;
};

template <std::size_t N>
using CxMat = std::array<std::array<Cx, N>, N>;

template <std::size_t N>
CxMat<N> matmul(const CxMat<N>& a, const CxMat<N>& b) {
  CxMat<N> c{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

template <std::size_t N>
CxMat<N> scaled(const CxMat<N>& a, Cx s) {
  CxMat<N> c = a;
  for (auto& row : c)
    for (auto& x : row) x = x * s;
  return c;
}

inline CxMat<2> sigma(char which) {
  switch (which) {
    case '1':
      return {{{Cx{1, 0}, Cx{}}, {Cx{}, Cx{1, 0}}}};
    case 'X':
      return {{{Cx{}, Cx{1, 0}}, {Cx{1, 0}, Cx{}}}};
    case 'Y':
      return {{{Cx{}, Cx{0, -1}}, {Cx{0, 1}, Cx{}}}};
    case 'Z':
      return {{{Cx{1, 0}, Cx{}}, {Cx{}, Cx{-1, 0}}}};
  }
  throw std::invalid_argument("bad factor");
}

inline CxMat<4> kron(const CxMat<2>& a, const CxMat<2>& b) {
  CxMat<4> c{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) c[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return c;
}

/// "ZX" -> sigma_z (x) sigma_x.
inline CxMat<4> op(const std::string& label) { return kron(sigma(label[0]), sigma(label[1])); }

inline CxMat<4> identity4() { return op("11"); }

/// Sign s with m == s * I, or 0 if m is not a real multiple of the identity.
inline int identity_sign(const CxMat<4>& m) {
  if (m == identity4()) return 1;
  if (m == scaled(identity4(), Cx{-1, 0})) return -1;
  return 0;
}

}  // namespace prl::test
