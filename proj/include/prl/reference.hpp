#pragma once

#include <array>
#include <string_view>
#include <utility>

// Published reference data for the 2x2 matrix ring over GF(2) and its
// projective line. Kept verbatim so computed results can be diffed against it.

namespace prl::reference {

/// Addition table, row x column, in the 0..15 labelling.
inline constexpr std::array<std::array<int, 16>, 16> kM2F2Add{{
    { 0,  1,  2,  3,  4,  5,  6,  7,  8,  9, 10, 11, 12, 13, 14, 15},
    { 1,  0,  3,  2,  5,  4,  7,  6,  9,  8, 11, 10, 13, 12, 15, 14},
    { 2,  3,  0,  1,  6,  7,  4,  5, 10, 11,  8,  9, 14, 15, 12, 13},
    { 3,  2,  1,  0,  7,  6,  5,  4, 11, 10,  9,  8, 15, 14, 13, 12},
    { 4,  5,  6,  7,  0,  1,  2,  3, 12, 13, 14, 15,  8,  9, 10, 11},
    { 5,  4,  7,  6,  1,  0,  3,  2, 13, 12, 15, 14,  9,  8, 11, 10},
    { 6,  7,  4,  5,  2,  3,  0,  1, 14, 15, 12, 13, 10, 11,  8,  9},
    { 7,  6,  5,  4,  3,  2,  1,  0, 15, 14, 13, 12, 11, 10,  9,  8},
    { 8,  9, 10, 11, 12, 13, 14, 15,  0,  1,  2,  3,  4,  5,  6,  7},
    { 9,  8, 11, 10, 13, 12, 15, 14,  1,  0,  3,  2,  5,  4,  7,  6},
    {10, 11,  8,  9, 14, 15, 12, 13,  2,  3,  0,  1,  6,  7,  4,  5},
    {11, 10,  9,  8, 15, 14, 13, 12,  3,  2,  1,  0,  7,  6,  5,  4},
    {12, 13, 14, 15,  8,  9, 10, 11,  4,  5,  6,  7,  0,  1,  2,  3},
    {13, 12, 15, 14,  9,  8, 11, 10,  5,  4,  7,  6,  1,  0,  3,  2},
    {14, 15, 12, 13, 10, 11,  8,  9,  6,  7,  4,  5,  2,  3,  0,  1},
    {15, 14, 13, 12, 11, 10,  9,  8,  7,  6,  5,  4,  3,  2,  1,  0},
}};

/// Multiplication table, row x column.
inline constexpr std::array<std::array<int, 16>, 16> kM2F2Mul{{
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  1,  2,  3,  4,  5,  6,  7,  8,  9, 10, 11, 12, 13, 14, 15},
    { 0,  2,  1,  3,  7,  5,  6,  4, 14, 12, 15, 13,  9, 11,  8, 10},
    { 0,  3,  3,  0,  3,  0,  0,  3,  6,  5,  5,  6,  5,  6,  6,  5},
    { 0,  4,  4,  0,  4,  0,  0,  4, 14, 10, 10, 14, 10, 14, 14, 10},
    { 0,  5,  6,  3,  0,  5,  6,  3,  6,  3,  0,  5,  6,  3,  0,  5},
    { 0,  6,  5,  3,  3,  5,  6,  0,  0,  6,  5,  3,  3,  5,  6,  0},
    { 0,  7,  7,  0,  7,  0,  0,  7,  8, 15, 15,  8, 15,  8,  8, 15},
    { 0,  8, 15,  7,  7, 15,  8,  0,  0,  8, 15,  7,  7, 15,  8,  0},
    { 0,  9, 13,  4,  3, 10, 14,  7,  8,  1,  5, 12, 11,  2,  6, 15},
    { 0, 10, 14,  4,  0, 10, 14,  4, 14,  4,  0, 10, 14,  4,  0, 10},
    { 0, 11, 12,  7,  4, 15,  8,  3,  6, 13, 10,  1,  2,  9, 14,  5},
    { 0, 12, 11,  7,  3, 15,  8,  4, 14,  2,  5,  9, 13,  1,  6, 10},
    { 0, 13,  9,  4,  7, 10, 14,  3,  6, 11, 15,  2,  1, 12,  8,  5},
    { 0, 14, 10,  4,  4, 10, 14,  0,  0, 14, 10,  4,  4, 10, 14,  0},
    { 0, 15,  8,  7,  0, 15,  8,  7,  8,  7,  0, 15,  8,  7,  0, 15},
}};

inline constexpr std::array<int, 6> kM2F2Units{1, 2, 9, 11, 12, 13};

/// One representative per point of the line, as printed (not canonical).
inline constexpr std::array<std::pair<int, int>, 35> kLineRepresentatives{{
    {1, 1}, {1, 2}, {1, 9}, {1, 11}, {1, 12}, {1, 13},
    {1, 0}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 10}, {1, 14}, {1, 15},
    {0, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {10, 1}, {14, 1}, {15, 1},
    {3, 4}, {3, 10}, {3, 14}, {5, 4}, {5, 10}, {5, 14}, {6, 4}, {6, 10}, {6, 14},
}};

/// Points C1..C15 of the 15-point configuration for U = (1,0), V = (0,1):
/// C1..C6 are distant to both, C7..C15 neighbor to both.
inline constexpr std::array<std::pair<int, int>, 15> kConfigurationPoints{{
    {1, 1}, {1, 2}, {1, 9}, {1, 11}, {1, 12}, {1, 13},
    {3, 4}, {3, 10}, {3, 14}, {5, 4}, {5, 10}, {5, 14}, {6, 4}, {6, 10}, {6, 14},
}};

/// Relation among C1..C15: '+' distant / non-commuting, '-' neighbor / commuting.
inline constexpr std::array<std::string_view, 15> kConfigurationRelation{
    "----++-+++-+++-",
    "--++---++++-+-+",
    "-+-+--+-+-++++-",
    "-++---++-+-+-++",
    "+----++-+++--++",
    "+---+-++--+++-+",
    "--++++----++-++",
    "++-+-+---+-++-+",
    "+++-+----++-++-",
    "++-++--++----++",
    "-++-+++-+---+-+",
    "+-++-+++----++-",
    "+++--+-++-++---",
    "+-+++-+-++-+---",
    "-+-+++++-++----",
};

/// Operators attached to C1..C15.
inline constexpr std::array<std::string_view, 15> kOperatorLabels{
    "ZX", "YY", "1X", "YZ", "Y1", "XX", "XZ", "YX", "ZY", "X1", "XY", "1Y", "1Z", "ZZ", "Z1",
};

}  // namespace prl::reference
