// Renner monoid combinatorics: standard forms, the Bruhat-Chevalley-Renner
// comparison, and the rank-1 orbit posets with their counts.

#include "envlat/renner.hpp"

#include <algorithm>
#include <unordered_set>

#include "envlat/errors.hpp"

namespace envlat {

RennerElement standard_form(const WeylGroup& W, WeylGroup::Index w1, const Idempotent& e,
                            WeylGroup::Index w2) {
  const DynkinDiagram& d = W.diagram();
  TypeMapData tm = type_map(d, e);

  WeylGroup::Index w2i = W.inverse(w2);
  WeylGroup::Index b = W.min_coset_rep(w2i, tm.lambda);
  WeylGroup::Index u = W.mul(W.inverse(b), w2i);  // lands in W_{λ(e)}
  WeylGroup::Index a = W.min_coset_rep(W.mul(w1, W.inverse(u)), tm.lambda_lower);
  return RennerElement{a, e, b};
}

bool is_standard_form(const WeylGroup& W, const RennerElement& x) {
  TypeMapData tm = type_map(W.diagram(), x.e);
  for (int s : tm.lambda_lower.members())
    if (W.right_descent(x.a, s)) return false;
  for (int s : tm.lambda.members())
    if (W.right_descent(x.b, s)) return false;
  return true;
}

bool bcr_leq(const WeylGroup& W, const RennerElement& x, const RennerElement& y) {
  if (!leq(x.e, y.e)) return false;

  const DynkinDiagram& d = W.diagram();
  auto We = W.parabolic_elements(type_map(d, x.e).lambda);
  auto Wf = W.parabolic_elements(type_map(d, y.e).lambda);

  std::unordered_set<WeylGroup::Index> products;
  products.reserve(We.size() * Wf.size());
  for (WeylGroup::Index u : Wf)
    for (WeylGroup::Index v : We) products.insert(W.mul(u, v));

  WeylGroup::Index binv = W.inverse(x.b);
  WeylGroup::Index dinv = W.inverse(y.b);
  for (WeylGroup::Index w : products) {
    if (W.bruhat_leq(x.a, W.mul(y.a, w)) &&
        W.bruhat_leq(W.mul(W.inverse(w), dinv), binv))
      return true;
  }
  return false;
}

Rank1OrbitPoset rank1_orbit_poset(const WeylGroup& W, const Idempotent& e) {
  const DynkinDiagram& d = W.diagram();
  if (idempotent_rank(d, e) != 1)
    throw invalid_input("orbit poset is defined for rank-1 idempotents, got " + e.to_string());

  Rank1OrbitPoset P;
  P.e = e;
  P.J = type_map(d, e).lambda;

  if (P.J.is_full()) {
    P.elements.emplace_back(W.identity(), W.identity());
    return P;
  }
  auto reps = min_coset_reps(W, P.J).reps;
  P.elements.reserve(reps.size() * reps.size());
  for (WeylGroup::Index a : reps)
    for (WeylGroup::Index b : reps) P.elements.emplace_back(a, b);
  return P;
}

bool rank1_leq(const WeylGroup& W, const Rank1OrbitPoset& P, std::size_t p, std::size_t q) {
  // Bruhat on the left factor, opposite Bruhat on the right
  return W.bruhat_leq(P.elements[p].first, P.elements[q].first) &&
         W.bruhat_leq(P.elements[q].second, P.elements[p].second);
}

BigInt dim_GeG_rank1(const DynkinDiagram& d, const Idempotent& e) {
  if (idempotent_rank(d, e) != 1)
    throw invalid_input("orbit dimension formula needs a rank-1 idempotent, got " +
                        e.to_string());
  if (e.J.is_full()) return 1;
  return 2 * parabolic_index(d, e.J) + 1;
}

BigInt count_R1(const DynkinDiagram& d) {
  if (d.rank() < 2)
    throw invalid_input("|R_1| formula needs rank >= 2; at rank 1 the J = S atom family "
                        "is inessential");
  BigInt total = d.rank();
  for (int s = 1; s <= d.rank(); ++s) {
    BigInt idx = parabolic_index(d, d.nodes().without(s));
    total += idx * idx;
  }
  return total;
}

}  // namespace envlat
