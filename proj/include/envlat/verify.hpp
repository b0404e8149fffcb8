#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "envlat/caps.hpp"
#include "envlat/lattice.hpp"

namespace envlat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t weyl_cap = kDefaultWeylCap;
  int rank_cap = kDefaultRankCap;
  int samples = 2000;          // sample count for randomized properties
  std::uint64_t seed = 20240915;  // fixed so identical invocations match byte for byte
};

// Brute-force bound scans over the enumerated poset; nullopt when the bound
// is not unique.  These are the arbiters for the meet/join formulas.
std::optional<std::size_t> glb_oracle(const CrossSectionLattice& L, std::size_t a,
                                      std::size_t b);
std::optional<std::size_t> lub_oracle(const CrossSectionLattice& L, std::size_t a,
                                      std::size_t b);

// Invariant battery for one diagram: diagram combinatorics, Weyl group
// oracles (when enumerable), lattice structure, classification theorems and
// Renner checks (at small rank).
std::vector<CheckResult> verify_diagram(const DynkinDiagram& d, const VerifyOptions& opts = {});

// Diagram-independent counting checks.
std::vector<CheckResult> verify_counting(const VerifyOptions& opts = {});

// All defined (kind, rank) pairs up to max_rank, plus the counting checks.
std::vector<CheckResult> verify_battery(int max_rank, const VerifyOptions& opts = {});

}  // namespace envlat
