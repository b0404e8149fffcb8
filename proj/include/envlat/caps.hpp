#pragma once

#include <cstdint>

namespace envlat {

// Weyl group enumeration refuses groups larger than this unless overridden.
// E6 (51840) and F4 (1152) are enumerable by default, E7/E8 are not.
inline constexpr std::uint64_t kDefaultWeylCap = 1'000'000;

// Cross-section lattice enumeration refuses diagrams of larger rank; the
// element scan visits 4^rank candidate pairs.
inline constexpr int kDefaultRankCap = 12;

}  // namespace envlat
