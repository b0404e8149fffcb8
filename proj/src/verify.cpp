// Brute-force invariant batteries.  Each closed-form operation in the library
// is checked here against an independent scan of the enumerated structures;
// the CLI `verify` command and the acceptance suite both run these.

#include "envlat/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "envlat/classify.hpp"
#include "envlat/counting.hpp"
#include "envlat/errors.hpp"
#include "envlat/renner.hpp"
#include "envlat/weyl.hpp"

namespace envlat {

namespace {

using Idx = std::size_t;

void add(std::vector<CheckResult>& out, const std::string& name, bool pass,
         const std::string& detail = "") {
  out.push_back({name, pass, detail});
}

std::string fmt_pair(const DynkinDiagram& d, const Idempotent& e) {
  return d.name() + " " + e.to_string();
}

std::vector<std::uint32_t> all_subsets(int l) {
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << l);
  for (std::uint32_t m = 0; m < (UINT32_C(1) << l); ++m) out.push_back(m);
  return out;
}

// ---- dynkin ----------------------------------------------------------------

void check_dynkin(const DynkinDiagram& d, const VerifyOptions& opts,
                  std::vector<CheckResult>& out) {
  const int l = d.rank();
  std::mt19937_64 rng(opts.seed);

  bool sym = true;
  for (int a = 1; a <= l && sym; ++a)
    for (int b = 1; b <= l; ++b)
      if (d.adjacent(a, b) != d.adjacent(b, a)) {
        sym = false;
        break;
      }
  add(out, d.name() + "/dynkin/adjacency-symmetry", sym);

  std::vector<std::uint32_t> subsets;
  if (l <= 12) {
    subsets = all_subsets(l);
  } else {
    for (int i = 0; i < opts.samples; ++i)
      subsets.push_back(static_cast<std::uint32_t>(rng()) & ((UINT32_C(1) << l) - 1));
  }

  bool partition_ok = true, ends_ok = true;
  std::string bad;
  for (std::uint32_t m : subsets) {
    NodeSet K = NodeSet::from_bits(l, m);
    auto comps = connected_components(d, K);
    std::uint32_t seen = 0;
    int prev_min = 0;
    for (const NodeSet& c : comps) {
      if (c.empty() || (seen & c.bits()) || c.min_node() <= prev_min) partition_ok = false;
      prev_min = c.min_node();
      seen |= c.bits();
      // connectivity of the piece and no edges leaving it inside K
      auto sub = connected_components(d, c);
      if (sub.size() != 1) partition_ok = false;
      for (int u : c.members())
        if (d.adjacency_bits(u) & (K.bits() & ~c.bits())) partition_ok = false;
    }
    if (seen != K.bits()) partition_ok = false;
    if (!partition_ok && bad.empty()) bad = "K=" + K.to_string();

    NodeSet ends = end_nodes(d, K);
    if (!ends.subset_of(K)) ends_ok = false;
    if (K == d.nodes() && !ends.empty()) ends_ok = false;
  }
  add(out, d.name() + "/dynkin/components-partition", partition_ok, bad);
  add(out, d.name() + "/dynkin/end-nodes", ends_ok);

  auto cls = classify_subdiagram(d, d.nodes());
  add(out, d.name() + "/dynkin/classify-full-diagram",
      cls.size() == 1 && cls[0] == std::make_pair(d.kind(), l));
}

// ---- weyl ------------------------------------------------------------------

void check_weyl(const DynkinDiagram& d, const VerifyOptions& opts,
                std::vector<CheckResult>& out) {
  BigInt order = weyl_order(d, d.nodes());
  if (order > opts.weyl_cap) {
    add(out, d.name() + "/weyl/enumeration", true,
        "skipped: order " + order.str() + " exceeds cap " + std::to_string(opts.weyl_cap));
    return;
  }
  WeylGroup W = WeylGroup::enumerate(d, opts.weyl_cap);
  const int l = d.rank();
  std::mt19937_64 rng(opts.seed + 1);

  add(out, d.name() + "/weyl/order-vs-enumeration", BigInt(W.size()) == order,
      std::to_string(W.size()) + " vs " + order.str());

  int max_len = 0;
  std::size_t n_max = 0;
  bool inv_sym = true;
  for (WeylGroup::Index i = 0; i < W.size(); ++i) {
    if (W.length(i) > max_len) max_len = W.length(i);
    if (W.length(W.inverse(i)) != W.length(i)) inv_sym = false;
  }
  for (WeylGroup::Index i = 0; i < W.size(); ++i)
    if (W.length(i) == max_len) ++n_max;
  add(out, d.name() + "/weyl/unique-longest", n_max == 1 && W.length(W.longest()) == max_len);
  add(out, d.name() + "/weyl/length-inverse-symmetric", inv_sym);

  bool reps_ok = true;
  std::string reps_bad;
  for (std::uint32_t m = 0; m < (UINT32_C(1) << l); ++m) {
    NodeSet I = NodeSet::from_bits(l, m);
    auto reps = min_coset_reps(W, I).reps;
    BigInt want = parabolic_index(d, I);
    if (BigInt(reps.size()) != want) {
      reps_ok = false;
      reps_bad = "I=" + I.to_string() + ": " + std::to_string(reps.size()) + " vs " + want.str();
      break;
    }
    auto par = W.parabolic_elements(I);
    if (BigInt(par.size()) != weyl_order(d, I)) {
      reps_ok = false;
      reps_bad = "|W_I| mismatch at I=" + I.to_string();
      break;
    }
    if (reps.size() * par.size() <= 60000) {
      // (rep, u) -> rep·u must hit W bijectively with additive lengths
      std::vector<bool> hit(W.size(), false);
      for (auto r : reps)
        for (auto u : par) {
          WeylGroup::Index p = W.mul(r, u);
          if (hit[p] || W.length(p) != W.length(r) + W.length(u)) {
            reps_ok = false;
            reps_bad = "coset factorization fails at I=" + I.to_string();
            break;
          }
          hit[p] = true;
        }
      if (reps_ok && std::find(hit.begin(), hit.end(), false) != hit.end()) {
        reps_ok = false;
        reps_bad = "coset factorization misses elements at I=" + I.to_string();
      }
    }
    if (!reps_ok) break;
  }
  add(out, d.name() + "/weyl/coset-reps", reps_ok, reps_bad);

  auto rand_idx = [&]() { return static_cast<WeylGroup::Index>(rng() % W.size()); };
  bool bruhat_ok = true;
  for (int t = 0; t < opts.samples && bruhat_ok; ++t) {
    WeylGroup::Index u = rand_idx(), v = rand_idx(), w = rand_idx();
    if (!W.bruhat_leq(u, u)) bruhat_ok = false;
    if (W.bruhat_leq(u, v) && W.bruhat_leq(v, u) && u != v) bruhat_ok = false;
    if (W.bruhat_leq(u, v) && W.bruhat_leq(v, w) && !W.bruhat_leq(u, w)) bruhat_ok = false;
    if (W.bruhat_leq(u, v) && W.length(u) > W.length(v)) bruhat_ok = false;
    if (!W.bruhat_leq(0, u) || !W.bruhat_leq(u, W.longest())) bruhat_ok = false;
  }
  add(out, d.name() + "/weyl/bruhat-order-axioms", bruhat_ok);
}

// ---- lattice ---------------------------------------------------------------

void check_lattice(const DynkinDiagram& d, const CrossSectionLattice& L,
                   const VerifyOptions& opts, std::vector<CheckResult>& out) {
  const int l = d.rank();
  const std::size_t n = L.size();
  std::mt19937_64 rng(opts.seed + 2);

  {
    bool ok = L.element(L.bottom()) == Idempotent{NodeSet::full(l), NodeSet::full(l)} &&
              L.element(L.top()) == Idempotent{NodeSet(l), NodeSet(l)} &&
              L.rank(L.bottom()) == 0 && L.rank(L.top()) == 2 * l;
    // unique bottom and top in the order itself
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!leq(L.element(L.bottom()), L.element(i))) ok = false;
      if (!leq(L.element(i), L.element(L.top()))) ok = false;
    }
    add(out, d.name() + "/lattice/bounds", ok);
  }

  {
    auto at = atoms(L);
    auto co = coatoms(L);
    bool ok = true;
    std::ostringstream detail;
    if (l >= 2 && at.size() != std::size_t(2 * l)) ok = false;
    if (l == 1 && at.size() != 1) ok = false;
    if (co.size() != std::size_t(l)) ok = false;
    // expected coordinate forms
    for (std::size_t i : at) {
      const Idempotent& e = L.element(i);
      bool formI = e.J.is_full() && e.I.size() == l - 1;
      bool formJ = e.I.is_full() && e.J.size() == l - 1;
      if (!formI && !formJ) ok = false;
    }
    for (std::size_t i : co) {
      const Idempotent& e = L.element(i);
      if (!(e.I.size() == 1 && e.J.empty())) ok = false;
    }
    detail << at.size() << " atoms, " << co.size() << " coatoms";
    add(out, d.name() + "/lattice/atom-coatom-counts", ok, detail.str());
  }

  {
    bool graded = true;
    std::string bad;
    for (std::size_t i = 0; i < n && graded; ++i)
      for (std::size_t f : L.upper_covers(i))
        if (L.rank(f) != L.rank(i) + 1) {
          graded = false;
          bad = fmt_pair(d, L.element(i)) + " covered by " + L.element(f).to_string();
          break;
        }
    // bottom's covers are exactly the elements with |I|+|J| = 2l-1
    auto bc = L.upper_covers(L.bottom());
    std::vector<std::size_t> expect;
    for (std::size_t i = 0; i < n; ++i)
      if (L.element(i).I.size() + L.element(i).J.size() == 2 * l - 1) expect.push_back(i);
    if (bc != expect) {
      graded = false;
      bad = "bottom covers differ from the |I|+|J| = 2|S|-1 stratum";
    }
    add(out, d.name() + "/lattice/graded-covers", graded, bad);
  }

  {
    // meet/join against brute-force bounds; exhaustive when small
    bool exhaustive = n <= 250;
    bool ok = true;
    std::string bad;
    auto test_pair = [&](std::size_t a, std::size_t b) {
      Idempotent m = meet(d, L.element(a), L.element(b));
      Idempotent j = join(d, L.element(a), L.element(b));
      if (!is_essential_lambda(d, m.I, m.J) || !is_essential_lambda(d, j.I, j.J)) {
        ok = false;
        bad = "inessential bound for " + L.element(a).to_string() + ", " +
              L.element(b).to_string();
        return;
      }
      auto g = glb_oracle(L, a, b);
      auto u = lub_oracle(L, a, b);
      if (!g || !u || !(L.element(*g) == m) || !(L.element(*u) == j)) {
        ok = false;
        bad = "bound mismatch for " + L.element(a).to_string() + ", " +
              L.element(b).to_string();
      }
    };
    if (exhaustive) {
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = a; b < n && ok; ++b) test_pair(a, b);
    } else {
      for (int t = 0; t < opts.samples && ok; ++t) test_pair(rng() % n, rng() % n);
    }
    add(out, d.name() + "/lattice/meet-join-oracle", ok,
        bad.empty() ? (exhaustive ? "exhaustive" : "sampled") : bad);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Face f = to_face(L.element(i));
      if (!is_essential_face(d, f.I, f.J)) ok = false;
      if (!(from_face(f) == L.element(i))) ok = false;
      for (std::size_t j = 0; j < n; ++j)
        if (leq(L.element(i), L.element(j)) != face_leq(f, to_face(L.element(j)))) {
          ok = false;
          break;
        }
    }
    add(out, d.name() + "/lattice/face-order-isomorphism", ok);
  }

  if (l >= 2) {
    bool ok = true;
    std::string bad;
    for (std::size_t i = 1; i < n && ok; ++i) {
      auto dec = atomic_decomposition(d, L.element(i));
      Idempotent folded{NodeSet::full(l), NodeSet::full(l)};
      for (const Idempotent& a : dec) {
        folded = join(d, folded, a);
        auto ai = L.index_of(a);
        if (!ai || L.rank(*ai) != 1) ok = false;
      }
      if (!(folded == L.element(i))) ok = false;
      if (!ok) bad = fmt_pair(d, L.element(i));
    }
    add(out, d.name() + "/lattice/atomicity", ok, bad);
  } else {
    add(out, d.name() + "/lattice/atomicity", true,
        "skipped: the rank-1 top is not a join of atoms");
  }

  {
    bool ok = true;
    auto ridx = [&]() { return rng() % n; };
    for (std::size_t a = 0; a < n && ok && n <= 60; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!(meet(d, L.element(a), L.element(b)) == meet(d, L.element(b), L.element(a))) ||
            !(join(d, L.element(a), L.element(b)) == join(d, L.element(b), L.element(a)))) {
          ok = false;
          break;
        }
      }
    for (int t = 0; t < opts.samples && ok; ++t) {
      const Idempotent &x = L.element(ridx()), &y = L.element(ridx()), &z = L.element(ridx());
      if (!(meet(d, x, meet(d, y, z)) == meet(d, meet(d, x, y), z))) ok = false;
      if (!(join(d, x, join(d, y, z)) == join(d, join(d, x, y), z))) ok = false;
      if (!(meet(d, x, join(d, x, y)) == x)) ok = false;
      if (!(join(d, x, meet(d, x, y)) == x)) ok = false;
    }
    add(out, d.name() + "/lattice/lattice-axioms", ok);
  }
}

// ---- classify --------------------------------------------------------------

void check_classify(const DynkinDiagram& d, const CrossSectionLattice& L,
                    std::vector<CheckResult>& out) {
  const int l = d.rank();
  const std::size_t n = L.size();

  std::vector<bool> jco_oracle(n, false), jlin_oracle(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != L.top()) jco_oracle[i] = jcoirr_interval_oracle(L, L.element(i));
    jlin_oracle[i] = is_stabilizer_jlinear(L, L.element(i));
  }

  {
    bool ok = true;
    std::string bad;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == L.top()) continue;
      if ((L.element(i).I.size() == 1) != jco_oracle[i]) {
        ok = false;
        bad = fmt_pair(d, L.element(i));
        break;
      }
    }
    add(out, d.name() + "/classify/jcoirreducible-theorem", ok, bad);
  }

  {
    // the end-segment closed form must match the interval scan everywhere;
    // the leaf form must match it on the J = S stratum.  Leaf disagreements
    // elsewhere are collected, not failed: they are the documented ambiguity.
    bool ok = true;
    std::string bad;
    int leaf_mismatches = 0;
    std::ostringstream mismatch_list;
    for (std::size_t i = 0; i < n; ++i) {
      const Idempotent& e = L.element(i);
      if (e.I.size() != 1) continue;
      bool oracle = jlin_oracle[i];
      if (jlinear_end_segment_criterion(d, e) != oracle) {
        ok = false;
        bad = "end-segment criterion fails at " + fmt_pair(d, e);
        break;
      }
      auto leaf = jlinear_leaf_criterion(d, e);
      if (leaf.has_value()) {
        if (e.J.is_full() && *leaf != oracle) {
          ok = false;
          bad = "leaf criterion fails on the J=S stratum at " + fmt_pair(d, e);
          break;
        }
        if (*leaf != oracle) {
          ++leaf_mismatches;
          if (leaf_mismatches <= 8)
            mismatch_list << (leaf_mismatches > 1 ? "; " : "") << e.to_string() << " leaf="
                          << (*leaf ? "yes" : "no") << " interval=" << (oracle ? "yes" : "no");
        }
      }
    }
    std::string detail = bad;
    if (ok && leaf_mismatches > 0)
      detail = std::to_string(leaf_mismatches) +
               " leaf-vs-interval disagreements off the J=S stratum: " + mismatch_list.str();
    add(out, d.name() + "/classify/jlinear-strata", ok, detail);
  }

  {
    auto nv = navel(L);
    bool ok = nv.has_value() && L.element(*nv) == Idempotent{NodeSet::full(l), NodeSet(l)};
    if (ok) {
      auto lo = boolean_interval_check(L, L.element(*nv), IntervalSide::Lower);
      auto hi = boolean_interval_check(L, L.element(*nv), IntervalSide::Upper);
      ok = lo.first && lo.second == l && hi.first && hi.second == l;
    }
    add(out, d.name() + "/classify/navel", ok);
  }

  {
    bool ok = true;
    std::string bad;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (i == L.top() || !jco_oracle[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == L.top() || j == i) continue;
        if (leq(L.element(i), L.element(j)) && !jco_oracle[j]) {
          ok = false;
          bad = fmt_pair(d, L.element(i)) + " <= " + L.element(j).to_string();
          break;
        }
      }
    }
    add(out, d.name() + "/classify/jcoirr-monotone-upward", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Idempotent& e = L.element(i);
      StructureDescriptor sd = structure_descriptor(d, L, e);
      TypeMapData tm = type_map(d, e);
      LocalWeylData lw = local_weyl(d, e);
      if (!(lw.weyl_of_eMe == tm.lambda_upper) || !(lw.weyl_of_Me == tm.lambda_lower) ||
          lw.weyl_of_eMe.intersects(lw.weyl_of_Me) ||
          !(lw.weyl_of_eMe.united(lw.weyl_of_Me) == tm.lambda))
        ok = false;
      if (idempotent_rank(d, e) == 1 && !lw.weyl_of_eMe.empty()) ok = false;
      if (sd.shape != StructureDescriptor::Shape::General) {
        if (!sd.centralizer.torus_rank || !sd.stabilizer_identity.torus_rank ||
            !sd.unit_of_eMe.torus_rank ||
            *sd.centralizer.torus_rank !=
                *sd.stabilizer_identity.torus_rank + *sd.unit_of_eMe.torus_rank)
          ok = false;
      }
      if (!ok) bad = fmt_pair(d, e);
    }
    add(out, d.name() + "/classify/descriptor-consistency", ok, bad);
  }
}

// ---- renner ----------------------------------------------------------------

void check_renner(const DynkinDiagram& d, const CrossSectionLattice& L,
                  const VerifyOptions& opts, std::vector<CheckResult>& out) {
  BigInt order = weyl_order(d, d.nodes());
  if (order > opts.weyl_cap || order > 2000) {
    add(out, d.name() + "/renner/checks", true,
        "skipped: Weyl group order " + order.str() + " too large for the Renner battery");
    return;
  }
  WeylGroup W = WeylGroup::enumerate(d, opts.weyl_cap);
  std::mt19937_64 rng(opts.seed + 3);
  const int l = d.rank();

  {
    bool ok = true;
    BigInt direct = 0;
    for (std::size_t i : atoms(L)) {
      const Idempotent& e = L.element(i);
      Rank1OrbitPoset P = rank1_orbit_poset(W, e);
      BigInt want = e.J.is_full() ? BigInt(1)
                                  : parabolic_index(d, e.J) * parabolic_index(d, e.J);
      if (BigInt(P.elements.size()) != want) ok = false;
      direct += P.elements.size();
      // unique minimum and maximum of the product order
      std::size_t n_min = 0, n_max = 0;
      for (std::size_t p = 0; p < P.elements.size(); ++p) {
        bool mn = true, mx = true;
        for (std::size_t q = 0; q < P.elements.size(); ++q) {
          if (q == p) continue;
          if (rank1_leq(W, P, q, p)) mn = false;
          if (rank1_leq(W, P, p, q)) mx = false;
        }
        n_min += mn;
        n_max += mx;
      }
      if (n_min != 1 || n_max != 1) ok = false;
    }
    if (l >= 2 && direct != count_R1(d)) ok = false;
    add(out, d.name() + "/renner/rank1-orbit-sizes", ok,
        l >= 2 ? "|R_1| = " + count_R1(d).str() : "rank-1 diagram, formula not applicable");
  }

  {
    bool ok = true;
    std::string bad;
    auto rand_idx = [&]() { return static_cast<WeylGroup::Index>(rng() % W.size()); };
    for (int t = 0; t < opts.samples && ok; ++t) {
      const Idempotent& e = L.element(rng() % L.size());
      TypeMapData tm = type_map(d, e);
      auto Wlow = W.parabolic_elements(tm.lambda_lower);
      auto Wlam = W.parabolic_elements(tm.lambda);
      WeylGroup::Index w1 = rand_idx(), w2 = rand_idx();
      RennerElement x = standard_form(W, w1, e, w2);
      if (!is_standard_form(W, x)) {
        ok = false;
        bad = "membership fails at " + fmt_pair(d, e);
        break;
      }
      WeylGroup::Index v = Wlow[rng() % Wlow.size()];
      if (!(standard_form(W, W.mul(w1, v), e, w2) == x)) {
        ok = false;
        bad = "left absorption fails at " + fmt_pair(d, e);
        break;
      }
      WeylGroup::Index u = Wlam[rng() % Wlam.size()];
      if (!(standard_form(W, W.mul(w1, u), e, w2) == standard_form(W, w1, e, W.mul(u, w2)))) {
        ok = false;
        bad = "two-sided absorption fails at " + fmt_pair(d, e);
        break;
      }
      if (!(standard_form(W, x.a, e, W.inverse(x.b)) == x)) {
        ok = false;
        bad = "idempotence fails at " + fmt_pair(d, e);
        break;
      }
    }
    add(out, d.name() + "/renner/standard-form-invariants", ok, bad);
  }

  {
    // The Bruhat-Chevalley-Renner comparison restricted to one rank-1 orbit
    // must agree with the product order; run on the atoms with J = S\{s}.
    bool ok = true;
    int done = 0;
    for (std::size_t i : atoms(L)) {
      const Idempotent& e = L.element(i);
      if (e.J.is_full()) continue;
      Rank1OrbitPoset P = rank1_orbit_poset(W, e);
      if (P.elements.size() > 40) continue;
      for (std::size_t p = 0; p < P.elements.size() && ok; ++p)
        for (std::size_t q = 0; q < P.elements.size(); ++q) {
          RennerElement x{P.elements[p].first, e, P.elements[p].second};
          RennerElement y{P.elements[q].first, e, P.elements[q].second};
          if (bcr_leq(W, x, y) != rank1_leq(W, P, p, q)) {
            ok = false;
            break;
          }
        }
      ++done;
    }
    add(out, d.name() + "/renner/bcr-vs-product-order", ok,
        std::to_string(done) + " orbits compared exhaustively");
  }
}

}  // namespace

std::optional<std::size_t> glb_oracle(const CrossSectionLattice& L, std::size_t a,
                                      std::size_t b) {
  std::vector<Idx> bounds;
  for (Idx g = 0; g < L.size(); ++g)
    if (leq(L.element(g), L.element(a)) && leq(L.element(g), L.element(b)))
      bounds.push_back(g);
  std::vector<Idx> maximal;
  for (Idx g : bounds) {
    bool mx = true;
    for (Idx h : bounds)
      if (h != g && leq(L.element(g), L.element(h))) {
        mx = false;
        break;
      }
    if (mx) maximal.push_back(g);
  }
  if (maximal.size() != 1) return std::nullopt;
  return maximal[0];
}

std::optional<std::size_t> lub_oracle(const CrossSectionLattice& L, std::size_t a,
                                      std::size_t b) {
  std::vector<Idx> bounds;
  for (Idx g = 0; g < L.size(); ++g)
    if (leq(L.element(a), L.element(g)) && leq(L.element(b), L.element(g)))
      bounds.push_back(g);
  std::vector<Idx> minimal;
  for (Idx g : bounds) {
    bool mn = true;
    for (Idx h : bounds)
      if (h != g && leq(L.element(h), L.element(g))) {
        mn = false;
        break;
      }
    if (mn) minimal.push_back(g);
  }
  if (minimal.size() != 1) return std::nullopt;
  return minimal[0];
}

std::vector<CheckResult> verify_diagram(const DynkinDiagram& d, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  check_dynkin(d, opts, out);
  check_weyl(d, opts, out);
  if (d.rank() <= opts.rank_cap && d.rank() <= 6) {
    CrossSectionLattice L = CrossSectionLattice::enumerate(d, opts.rank_cap);
    check_lattice(d, L, opts, out);
    check_classify(d, L, out);
    check_renner(d, L, opts, out);
  } else {
    add(out, d.name() + "/lattice/checks", true,
        "skipped: rank " + std::to_string(d.rank()) + " beyond the lattice battery");
  }
  return out;
}

std::vector<CheckResult> verify_counting(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    std::string bad;
    for (int n = 0; n <= std::min(12, opts.rank_cap); ++n) {
      BigInt a = d_seq(n), b = d_via_gf(n), c = d_via_enumeration(n, opts.rank_cap);
      if (a != b || a != c) {
        ok = false;
        bad = "n=" + std::to_string(n);
        break;
      }
    }
    add(out, "counting/triple-agreement", ok, bad);
  }
  {
    bool ok = true;
    for (int n = 0; n <= 200; ++n)
      if (d_seq(n) != d_via_gf(n)) {
        ok = false;
        break;
      }
    add(out, "counting/rec-vs-gf-to-200", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n <= 50; ++n)
      if (e_seq(n) != e_seq_casewise(n)) {
        ok = false;
        break;
      }
    add(out, "counting/recurrence-forms-agree", ok);
  }
  add(out, "counting/gf-identity", gf_identity_check(40));
  {
    bool ok = true;
    OrbitCountSeries s = orbit_count_series(60);
    for (int n = 0; n <= 60; ++n) {
      if (s.d_values[n] <= 0) ok = false;
      if (n >= 1 && s.d_values[n] < (BigInt(1) << n)) ok = false;
    }
    add(out, "counting/growth-sanity", ok);
  }
  return out;
}

std::vector<CheckResult> verify_battery(int max_rank, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (DiagramKind k : {DiagramKind::A, DiagramKind::B, DiagramKind::C, DiagramKind::D,
                        DiagramKind::E, DiagramKind::F, DiagramKind::G}) {
    auto [lo, hi] = rank_range(k);
    for (int r = lo; r <= std::min(hi, max_rank); ++r) {
      auto part = verify_diagram(build_diagram(k, r), opts);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  auto cnt = verify_counting(opts);
  out.insert(out.end(), cnt.begin(), cnt.end());
  return out;
}

}  // namespace envlat
