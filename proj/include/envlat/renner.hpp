#pragma once

#include <utility>
#include <vector>

#include "envlat/lattice.hpp"
#include "envlat/weyl.hpp"

namespace envlat {

// Standard form a e b^{-1} of an element of W e W, with a a minimal coset
// representative modulo W_{λ_*(e)} and b one modulo W_{λ(e)}.  Equality of
// standard forms is componentwise.
struct RennerElement {
  WeylGroup::Index a = 0;
  Idempotent e;
  WeylGroup::Index b = 0;
  bool operator==(const RennerElement&) const = default;
};

// Standard form of w1 · e · w2.
RennerElement standard_form(const WeylGroup& W, WeylGroup::Index w1, const Idempotent& e,
                            WeylGroup::Index w2);

bool is_standard_form(const WeylGroup& W, const RennerElement& x);

// Bruhat-Chevalley-Renner comparison of standard forms x = a e b^{-1} and
// y = c f d^{-1}:  e <= f and, for some w in W(f)·W(e), a <= cw and
// w^{-1} d^{-1} <= b^{-1}.  The existential is brute force over the
// materialized product set.
bool bcr_leq(const WeylGroup& W, const RennerElement& x, const RennerElement& y);

// W e W for a rank-1 idempotent: a single point when J = S, and otherwise
// all pairs over D_J ordered by Bruhat on the left and opposite Bruhat on
// the right.
struct Rank1OrbitPoset {
  Idempotent e;
  NodeSet J;  // λ(e)
  std::vector<std::pair<WeylGroup::Index, WeylGroup::Index>> elements;
};

Rank1OrbitPoset rank1_orbit_poset(const WeylGroup& W, const Idempotent& e);
bool rank1_leq(const WeylGroup& W, const Rank1OrbitPoset& P, std::size_t p, std::size_t q);

// dim G e G for rank-1 e: 1 when J = S, else 2 |W|/|W_J| + 1.
BigInt dim_GeG_rank1(const DynkinDiagram& d, const Idempotent& e);

// |R_1| = |S| + sum over s of (|W| / |W_{S\{s}}|)^2; needs rank >= 2 so that
// both atom families exist.
BigInt count_R1(const DynkinDiagram& d);

}  // namespace envlat
