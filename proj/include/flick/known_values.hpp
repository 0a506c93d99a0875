#pragma once

// Published prefixes of the sequences produced here, kept as plain integers so
// they can be compared without going through any of the generators.

#include <array>
#include <cstdint>
#include <vector>

namespace flick::known {

/// Todd(n,k) for n = 1..5, k = 1..8 (A394582).
inline constexpr std::array<std::array<std::int64_t, 8>, 5> todd_table = {{
    {1, 1, 1, 1, 1, 1, 1, 1},
    {1, 2, 5, 10, 21, 42, 85, 170},
    {1, 3, 14, 42, 147, 441, 1408, 4224},
    {1, 4, 30, 120, 627, 2508, 11440, 45760},
    {1, 5, 55, 275, 2002, 10010, 61490, 307450},
}};

/// T(n,k) for n = 1..10 (A395021).
inline const std::vector<std::vector<std::int64_t>> triangle_rows = {
    {1},
    {1, 1},
    {1, 0, 1},
    {1, 1, 2, 1},
    {1, 0, 5, 0, 1},
    {1, 1, 10, 5, 3, 1},
    {1, 0, 21, 0, 14, 0, 1},
    {1, 1, 42, 21, 42, 14, 4, 1},
    {1, 0, 85, 0, 147, 0, 30, 0, 1},
    {1, 1, 170, 85, 441, 147, 120, 30, 5, 1},
};

/// First five terms of Todd columns k = 1..9.
inline constexpr std::array<std::array<std::int64_t, 5>, 9> todd_columns = {{
    {1, 1, 1, 1, 1},
    {1, 2, 3, 4, 5},
    {1, 5, 14, 30, 55},
    {1, 10, 42, 120, 275},
    {1, 21, 147, 627, 2002},
    {1, 42, 441, 2508, 10010},
    {1, 85, 1408, 11440, 61490},
    {1, 170, 4224, 45760, 307450},
    {1, 341, 13013, 196053, 1733303},
}};

/// Row sums a(1..10) (A395022).
inline constexpr std::array<std::int64_t, 10> bell_prefix = {1, 2, 2, 5, 7, 21, 37, 126, 264, 1001};

struct KernelList {
  unsigned p;  // the published label; equals inverse-transform count + 1
  std::array<std::int64_t, 7> values;
};

inline constexpr std::array<KernelList, 5> kernels = {{
    {1, {1, 1, 2, 2, 5, 7, 21}},
    {3, {1, -1, 2, -6, 21, -75, 269}},
    {5, {1, -3, 10, -38, 165, -797, 4125}},
    {7, {1, -5, 26, -142, 821, -5039, 32709}},
    {9, {1, -7, 50, -366, 2757, -21441, 172421}},
}};

}  // namespace flick::known
