#pragma once

#include <array>
#include <cstdint>
#include <tuple>

namespace rotsym::testing {

/// (number of permutations, largest orbit, orbit count) for each published
/// 9-variable permutation class, in printed order.
using ClassTriple = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

inline constexpr std::array<ClassTriple, 30> kPublishedClasses = {{
    {1, 1, 512},     {945, 2, 272},   {1260, 2, 288},  {378, 2, 320},   {36, 2, 384},
    {2240, 3, 176},  {3360, 3, 192},  {168, 3, 256},   {11340, 4, 140}, {11340, 4, 168},
    {7560, 4, 176},  {756, 4, 192},   {3024, 5, 128},  {20160, 6, 100}, {30240, 6, 104},
    {10080, 6, 112}, {10080, 6, 144}, {2520, 6, 144},  {7560, 6, 160},  {2520, 6, 192},
    {25920, 7, 80},  {45360, 8, 72},  {40320, 9, 60},  {9072, 10, 80},  {18144, 10, 96},
    {15120, 12, 88}, {15120, 12, 96}, {25920, 14, 60}, {24192, 15, 64}, {18144, 20, 48},
}};

}  // namespace rotsym::testing
