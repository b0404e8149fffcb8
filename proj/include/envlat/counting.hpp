#pragma once

#include <vector>

#include "envlat/bigint.hpp"
#include "envlat/caps.hpp"

namespace envlat {

// Orbit counts for type A: d_n is the number of G x G orbits in the
// enveloping monoid of the rank-n diagram A_n, i.e. of SL_{n+1}; d_2 = 11 is
// the SL_3 lattice.  e_n counts the pairs with nonempty second coordinate,
// so d_n = 2^n + e_n for n >= 1 and d_0 = 1.
struct OrbitCountSeries {
  int max_n = 0;
  std::vector<BigInt> e_values;
  std::vector<BigInt> d_values;
};

OrbitCountSeries orbit_count_series(int max_n);

// e_n = 2 e_{n-1} + sum_{s=1}^{n-1} (2^{s+1} - 2) e_{n-(s+1)} + (n-1) 2^n + 1,
// with e_0 = 0, e_1 = 1.
BigInt e_seq(int n);

// The same numbers from the case-split recurrence
// e_n = 2 e_{n-1} + 2^n - 1 + sum_{s=1}^{n-1} 2 (2^s - 1)(e_{n-(s+1)} + 2^{n-(s+1)}).
BigInt e_seq_casewise(int n);

BigInt d_seq(int n);

// Coefficients of (1 - 2x + 2x^2) / (1 - 5x + 6x^2 - 4x^3) through the
// induced recurrence d_n = 5 d_{n-1} - 6 d_{n-2} + 4 d_{n-3} for n >= 3.
BigInt d_via_gf(int n);

// |Λ(A_n)| by direct enumeration of essential pairs.
BigInt d_via_enumeration(int n, int rank_cap = kDefaultRankCap);

// Truncated formal-series identities, exact integer arithmetic:
//   (Σ e_n x^n) · (1-2x)(1-5x+6x^2-4x^3) = x
//   (Σ d_n x^n) · (1-5x+6x^2-4x^3)       = 1 - 2x + 2x^2
bool gf_identity_check(int N);

}  // namespace envlat
