#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace prl {

/// Square matrix over GF(2), stored row-major with one row per word.
/// Bit j of a row word is the entry in column j.
class BitMatrix {
 public:
  static constexpr std::size_t kMaxDim = 32;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t dim) : dim_(dim) {
    if (dim > kMaxDim) {
      throw std::invalid_argument("BitMatrix dimension " + std::to_string(dim) +
                                  " exceeds " + std::to_string(kMaxDim));
    }
  }

  static BitMatrix identity(std::size_t dim) {
    BitMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.rows_[i] = std::uint32_t{1} << i;
    return m;
  }

  std::size_t dim() const { return dim_; }

  bool get(std::size_t row, std::size_t col) const { return (rows_[row] >> col) & 1u; }
  void set(std::size_t row, std::size_t col, bool value) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    rows_[row] = value ? (rows_[row] | bit) : (rows_[row] & ~bit);
  }

  std::uint32_t row(std::size_t i) const { return rows_[i]; }
  void set_row(std::size_t i, std::uint32_t bits) { rows_[i] = bits & mask(); }

  /// Rank by word-XOR Gaussian elimination.
  std::size_t rank() const {
    auto rows = rows_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim_ && rank < dim_; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      std::size_t pivot = rank;
      while (pivot < dim_ && !(rows[pivot] & bit)) ++pivot;
      if (pivot == dim_) continue;
      std::swap(rows[rank], rows[pivot]);
      for (std::size_t i = 0; i < dim_; ++i) {
        if (i != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
      }
      ++rank;
    }
    return rank;
  }

  bool invertible() const { return rank() == dim_; }

  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    check_same_dim(a, b);
    BitMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) out.rows_[i] = a.rows_[i] ^ b.rows_[i];
    return out;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    check_same_dim(a, b);
    BitMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      std::uint32_t acc = 0;
      for (std::uint32_t bits = a.rows_[i]; bits != 0; bits &= bits - 1) {
        acc ^= b.rows_[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      out.rows_[i] = acc;
    }
    return out;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  std::uint32_t mask() const {
    return dim_ == kMaxDim ? ~std::uint32_t{0} : (std::uint32_t{1} << dim_) - 1;
  }
  static void check_same_dim(const BitMatrix& a, const BitMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("BitMatrix dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::array<std::uint32_t, kMaxDim> rows_{};
};

}  // namespace prl
