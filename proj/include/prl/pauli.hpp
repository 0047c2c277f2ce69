#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prl/sign_matrix.hpp"

namespace prl {

/// Bit layout of a two-qubit symplectic label: z1 x1 z2 x2, most significant first.
namespace pauli_bits {
inline constexpr std::uint8_t kZ1 = 0b1000;
inline constexpr std::uint8_t kX1 = 0b0100;
inline constexpr std::uint8_t kZ2 = 0b0010;
inline constexpr std::uint8_t kX2 = 0b0001;
}  // namespace pauli_bits

namespace detail {

// Single-qubit code: bit 1 = z, bit 0 = x.  0 = 1, 1 = X, 2 = Z, 3 = Y.
inline char factor_char(unsigned code) { return "1XZY"[code & 3u]; }

inline unsigned factor_code(char ch) {
  switch (ch) {
    case '1':
    case 'I':
      return 0;
    case 'X':
      return 1;
    case 'Z':
      return 2;
    case 'Y':
      return 3;
    default:
      throw std::invalid_argument(std::string("invalid Pauli factor '") + ch + "'");
  }
}

// Power of i picked up by the single-qubit product a.b (codes as above).
inline unsigned factor_product_phase(unsigned a, unsigned b) {
  if (a == 0 || b == 0 || a == b) return 0;
  // X.Y = iZ, Y.Z = iX, Z.X = iY; the reversed orders give -i.
  const bool cyclic = (a == 1 && b == 3) || (a == 3 && b == 2) || (a == 2 && b == 1);
  return cyclic ? 1 : 3;
}

}  // namespace detail

/// One of the 15 non-identity two-qubit Pauli operators.
class PauliOp {
 public:
  static PauliOp from_bits(std::uint8_t bits) {
    if (bits == 0 || bits > 15) throw std::invalid_argument("Pauli label must be one of 1..15");
    return PauliOp(bits);
  }

  /// Two factor characters from {1, I, X, Y, Z}, e.g. "ZX" or "1Y".
  static PauliOp parse(std::string_view text) {
    if (text.size() != 2) throw std::invalid_argument("Pauli label '" + std::string(text) + "' must have 2 factors");
    const unsigned q1 = detail::factor_code(text[0]);
    const unsigned q2 = detail::factor_code(text[1]);
    if (q1 == 0 && q2 == 0) throw std::invalid_argument("the identity is not one of the 15 operators");
    return PauliOp(static_cast<std::uint8_t>((q1 << 2) | q2));
  }

  std::uint8_t bits() const { return bits_; }
  bool z1() const { return bits_ & pauli_bits::kZ1; }
  bool x1() const { return bits_ & pauli_bits::kX1; }
  bool z2() const { return bits_ & pauli_bits::kZ2; }
  bool x2() const { return bits_ & pauli_bits::kX2; }

  /// Factor code of qubit 0 or 1 (0 = 1, 1 = X, 2 = Z, 3 = Y).
  unsigned factor(unsigned qubit) const { return qubit == 0 ? (bits_ >> 2) & 3u : bits_ & 3u; }

  std::string str() const {
    return {detail::factor_char(factor(0)), detail::factor_char(factor(1))};
  }

  friend auto operator<=>(const PauliOp&, const PauliOp&) = default;

 private:
  explicit PauliOp(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_;
};

/// All 15 operators in label order 1..15.
inline std::vector<PauliOp> all_paulis() {
  std::vector<PauliOp> out;
  for (std::uint8_t b = 1; b < 16; ++b) out.push_back(PauliOp::from_bits(b));
  return out;
}

/// Symplectic form: commute iff z1 x1' + x1 z1' + z2 x2' + x2 z2' = 0 mod 2.
inline bool commutes(PauliOp a, PauliOp b) {
  const unsigned form = (a.z1() & b.x1()) ^ (a.x1() & b.z1()) ^ (a.z2() & b.x2()) ^ (a.x2() & b.z2());
  return form == 0;
}

/// i^power for power in 0..3.
struct Phase {
  std::uint8_t power = 0;
  static Phase from_power(unsigned p) { return Phase{static_cast<std::uint8_t>(p & 3u)}; }
  friend Phase operator*(Phase a, Phase b) { return from_power(a.power + b.power); }
  friend bool operator==(const Phase&, const Phase&) = default;
  bool real() const { return (power & 1u) == 0; }
  int real_sign() const { return power == 0 ? 1 : -1; }
  std::string_view prefix() const {
    static constexpr std::array<std::string_view, 4> k{"", "i", "-", "-i"};
    return k[power];
  }
};

/// phase * body, where body may be the identity.
struct PhasedPauli {
  Phase phase;
  std::uint8_t body = 0;  // symplectic label, 0 = identity

  static PhasedPauli identity() { return {}; }
  static PhasedPauli of(PauliOp p, Phase ph = {}) { return {ph, p.bits()}; }

  /// "[phase]label", phase in {"", "i", "-", "-i"}, label "11" for the identity.
  static PhasedPauli parse(std::string_view text) {
    Phase ph;
    if (text.starts_with("-i")) {
      ph.power = 3;
      text.remove_prefix(2);
    } else if (text.starts_with("+i")) {
      ph.power = 1;
      text.remove_prefix(2);
    } else if (text.starts_with("i")) {
      ph.power = 1;
      text.remove_prefix(1);
    } else if (text.starts_with("-")) {
      ph.power = 2;
      text.remove_prefix(1);
    } else if (text.starts_with("+")) {
      text.remove_prefix(1);
    }
    if (text.size() != 2) throw std::invalid_argument("phased Pauli needs a 2-factor label");
    const unsigned q1 = detail::factor_code(text[0]);
    const unsigned q2 = detail::factor_code(text[1]);
    return {ph, static_cast<std::uint8_t>((q1 << 2) | q2)};
  }

  bool is_identity() const { return body == 0; }
  std::optional<PauliOp> op() const {
    if (is_identity()) return std::nullopt;
    return PauliOp::from_bits(body);
  }

  std::string str() const {
    const std::string label{detail::factor_char(body >> 2), detail::factor_char(body)};
    return std::string(phase.prefix()) + label;
  }

  /// Trace as i^k * value: 4 * phase for the identity, 0 otherwise.
  /// Returned as (real, imaginary) integers.
  std::array<int, 2> trace() const {
    if (!is_identity()) return {0, 0};
    static constexpr std::array<std::array<int, 2>, 4> k{{{4, 0}, {0, 4}, {-4, 0}, {0, -4}}};
    return k[phase.power];
  }

  friend bool operator==(const PhasedPauli&, const PhasedPauli&) = default;
};

/// Exact product, factor by factor.
inline PhasedPauli multiply(PhasedPauli a, PhasedPauli b) {
  unsigned power = a.phase.power + b.phase.power;
  power += detail::factor_product_phase((a.body >> 2) & 3u, (b.body >> 2) & 3u);
  power += detail::factor_product_phase(a.body & 3u, b.body & 3u);
  return {Phase::from_power(power), static_cast<std::uint8_t>(a.body ^ b.body)};
}

inline PhasedPauli operator*(PhasedPauli a, PhasedPauli b) { return multiply(a, b); }

/// Assignment of the 15 configuration labels C1..C15 to operators.
class PauliLabeling {
 public:
  explicit PauliLabeling(std::array<PauliOp, 15> ops) : ops_(ops) {
    std::uint32_t seen = 0;
    for (auto p : ops_) seen |= std::uint32_t{1} << p.bits();
    if (std::popcount(seen) != 15) throw std::invalid_argument("labeling is not a bijection onto the 15 operators");
  }

  static PauliLabeling parse(const std::vector<std::string>& labels) {
    if (labels.size() != 15) throw std::invalid_argument("labeling needs exactly 15 entries");
    std::vector<PauliOp> ops;
    for (const auto& l : labels) ops.push_back(PauliOp::parse(l));
    return PauliLabeling(to_array(ops, std::make_index_sequence<15>{}));
  }

  /// Operator of C_{index+1}.
  PauliOp at(std::size_t index) const { return ops_.at(index); }
  const std::array<PauliOp, 15>& ops() const { return ops_; }

  std::size_t index_of(PauliOp p) const {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (ops_[i] == p) return i;
    }
    throw std::logic_error("operator missing from a bijective labeling");
  }

  /// Swaps the operators attached to two labels.
  PauliLabeling swapped(std::size_t i, std::size_t j) const {
    auto ops = ops_;
    std::swap(ops.at(i), ops.at(j));
    return PauliLabeling(ops);
  }

 private:
  template <std::size_t... I>
  static std::array<PauliOp, 15> to_array(const std::vector<PauliOp>& v, std::index_sequence<I...>) {
    return {v[I]...};
  }

  std::array<PauliOp, 15> ops_;
};

/// The operator dictionary that makes the ring-line relation into commutation:
/// C1 = Z(x)X, C2 = Y(x)Y, ..., C15 = Z(x)1.
inline PauliLabeling standard_labeling() {
  return PauliLabeling::parse(
      {"ZX", "YY", "1X", "YZ", "Y1", "XX", "XZ", "YX", "ZY", "X1", "XY", "1Y", "1Z", "ZZ", "Z1"});
}

/// Cell (i, j) is '+' iff C_i and C_j do not commute.
inline SignMatrix commutation_table(const PauliLabeling& l) {
  SignMatrix m(15);
  for (std::size_t i = 0; i < 15; ++i) {
    for (std::size_t j = 0; j < 15; ++j) m.set(i, j, !commutes(l.at(i), l.at(j)));
  }
  return m;
}

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using PauliTriple = std::array<PauliOp, 3>;

/// Sign s with A B C = s * identity for three pairwise commuting operators.
inline int line_product_sign(const PauliTriple& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!commutes(t[i], t[j])) {
        throw PreconditionError(t[i].str() + " and " + t[j].str() + " do not commute");
      }
    }
  }
  const auto product = PhasedPauli::of(t[0]) * PhasedPauli::of(t[1]) * PhasedPauli::of(t[2]);
  if (!product.is_identity()) {
    throw PreconditionError("product of " + t[0].str() + " " + t[1].str() + " " + t[2].str() + " is " +
                            product.str() + ", not a multiple of the identity");
  }
  return product.phase.real_sign();
}

using PauliGrid = std::array<std::array<PauliOp, 3>, 3>;

struct MerminResult {
  std::array<int, 3> row_signs{};
  std::array<int, 3> col_signs{};
  bool magic = false;
};

/// Signs of the three rows and three columns; the square is magic when
/// their product is -1, so no +-1 assignment to the nine entries can match.
inline MerminResult mermin_square_check(const PauliGrid& grid) {
  MerminResult out;
  int total = 1;
  for (std::size_t r = 0; r < 3; ++r) {
    try {
      out.row_signs[r] = line_product_sign(grid[r]);
    } catch (const PreconditionError& e) {
      throw PreconditionError("row " + std::to_string(r + 1) + ": " + e.what());
    }
    total *= out.row_signs[r];
  }
  for (std::size_t c = 0; c < 3; ++c) {
    try {
      out.col_signs[c] = line_product_sign({grid[0][c], grid[1][c], grid[2][c]});
    } catch (const PreconditionError& e) {
      throw PreconditionError("column " + std::to_string(c + 1) + ": " + e.what());
    }
    total *= out.col_signs[c];
  }
  out.magic = total == -1;
  return out;
}

inline PauliGrid transpose(const PauliGrid& g) {
  PauliGrid t = g;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) t[r][c] = g[c][r];
  }
  return t;
}

/// Exact Gaussian integer.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator*(GaussInt a, GaussInt b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
  static GaussInt i_pow(unsigned p) {
    static constexpr std::array<std::array<std::int64_t, 2>, 4> k{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    return {k[p & 3u][0], k[p & 3u][1]};
  }
};

/// A 4x4 operator written as (1/denominator) * sum_b coeff[b] * Pauli(b),
/// b = 0 being the identity.
struct PauliSum {
  std::array<GaussInt, 16> coeff{};
  std::int64_t denominator = 1;

  static PauliSum of(PhasedPauli p) {
    PauliSum s;
    s.coeff[p.body] = GaussInt::i_pow(p.phase.power);
    return s;
  }

  friend PauliSum operator*(const PauliSum& a, const PauliSum& b) {
    PauliSum out;
    out.denominator = a.denominator * b.denominator;
    for (std::uint8_t i = 0; i < 16; ++i) {
      if (a.coeff[i] == GaussInt{}) continue;
      for (std::uint8_t j = 0; j < 16; ++j) {
        if (b.coeff[j] == GaussInt{}) continue;
        const auto p = PhasedPauli{{}, i} * PhasedPauli{{}, j};
        out.coeff[p.body] = out.coeff[p.body] + a.coeff[i] * b.coeff[j] * GaussInt::i_pow(p.phase.power);
      }
    }
    return out;
  }

  /// Trace = 4 * coeff[identity] / denominator, returned as (numerator, denominator).
  std::pair<GaussInt, std::int64_t> trace() const { return {coeff[0] * GaussInt{4, 0}, denominator}; }
};

/// (I + s A)(I + t B) / 4 for commuting A, B and signs s, t.
inline PauliSum stabilizer_projector(PauliOp a, PauliOp b, int s, int t) {
  PauliSum first = PauliSum::of(PhasedPauli::identity());
  first.coeff[a.bits()] = GaussInt{s, 0};
  first.denominator = 2;
  PauliSum second = PauliSum::of(PhasedPauli::identity());
  second.coeff[b.bits()] = GaussInt{t, 0};
  second.denominator = 2;
  return first * second;
}

/// True iff tr(p q) == num / den exactly.
inline bool trace_of_product_equals(const PauliSum& p, const PauliSum& q, std::int64_t num, std::int64_t den) {
  const auto [tr, tr_den] = (p * q).trace();
  return tr.im == 0 && tr.re * den == num * tr_den;
}

/// Checks that the eigenbases of five commuting triples that partition the 15
/// operators are mutually unbiased: tr(P P') = delta inside a basis and 1/4
/// across bases, over the 20 rank-one projectors.
inline bool mub_spread_check(const std::vector<PauliTriple>& spread) {
  if (spread.size() != 5) throw PreconditionError("a spread has exactly 5 triples");
  std::uint32_t seen = 0;
  for (std::size_t k = 0; k < spread.size(); ++k) {
    try {
      line_product_sign(spread[k]);
    } catch (const PreconditionError& e) {
      throw PreconditionError("triple " + std::to_string(k + 1) + ": " + e.what());
    }
    for (auto p : spread[k]) {
      if ((seen >> p.bits()) & 1u) {
        throw PreconditionError("triple " + std::to_string(k + 1) + ": " + p.str() + " appears twice");
      }
      seen |= std::uint32_t{1} << p.bits();
    }
  }

  std::vector<std::vector<PauliSum>> bases;
  for (const auto& t : spread) {
    std::vector<PauliSum> basis;
    for (int s : {1, -1}) {
      for (int u : {1, -1}) basis.push_back(stabilizer_projector(t[0], t[1], s, u));
    }
    bases.push_back(std::move(basis));
  }
  for (std::size_t a = 0; a < bases.size(); ++a) {
    for (std::size_t b = a; b < bases.size(); ++b) {
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          const bool ok = a == b ? trace_of_product_equals(bases[a][i], bases[b][j], i == j ? 1 : 0, 1)
                                 : trace_of_product_equals(bases[a][i], bases[b][j], 1, 4);
          if (!ok) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace prl
