#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace prl {

/// Square boolean matrix printed with '+' for set cells and '-' for clear ones.
/// Used for distant/neighbor relations ('+' = distant) and for commutation
/// tables ('+' = non-commuting).
class SignMatrix {
 public:
  SignMatrix() = default;
  explicit SignMatrix(std::size_t n) : n_(n), cells_(n * n, false) {}

  /// Parses rows of '+'/'-' characters; whitespace and '|' separators are ignored.
  static SignMatrix from_rows(const std::vector<std::string>& rows) {
    SignMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t j = 0;
      for (char ch : rows[i]) {
        if (ch == ' ' || ch == '|' || ch == '\t') continue;
        if (ch != '+' && ch != '-') {
          throw std::invalid_argument("row " + std::to_string(i + 1) + ": unexpected character '" +
                                      std::string(1, ch) + "'");
        }
        if (j >= m.n_) throw std::invalid_argument("row " + std::to_string(i + 1) + " is too long");
        m.set(i, j++, ch == '+');
      }
      if (j != m.n_) throw std::invalid_argument("row " + std::to_string(i + 1) + " is too short");
    }
    return m;
  }

  std::size_t size() const { return n_; }
  bool get(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, bool v) { cells_[i * n_ + j] = v; }
  char symbol(std::size_t i, std::size_t j) const { return get(i, j) ? '+' : '-'; }

  std::string row_string(std::size_t i) const {
    std::string s;
    for (std::size_t j = 0; j < n_; ++j) s.push_back(symbol(i, j));
    return s;
  }

  bool symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (get(i, j) != get(j, i)) return false;
      }
    }
    return true;
  }

  std::size_t row_count(std::size_t i, bool value) const {
    std::size_t c = 0;
    for (std::size_t j = 0; j < n_; ++j) c += get(i, j) == value;
    return c;
  }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> cells_;
};

struct CellDiff {
  std::size_t row = 0;
  std::size_t col = 0;
  char left = '?';
  char right = '?';
};

inline std::vector<CellDiff> diff(const SignMatrix& a, const SignMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sign matrices differ in size");
  std::vector<CellDiff> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.get(i, j) != b.get(i, j)) out.push_back({i, j, a.symbol(i, j), b.symbol(i, j)});
    }
  }
  return out;
}

}  // namespace prl
