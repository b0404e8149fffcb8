// Classification of the local monoids eMe and M_e: J-coirreducible
// stabilizers, the J-linear interval property, the navel, local Weyl data
// and symbolic unit-group structure.

#include "envlat/classify.hpp"

#include <algorithm>

#include "envlat/errors.hpp"

namespace envlat {

namespace {

// Indices of {g : e < g < top} in the lattice.
std::vector<std::size_t> open_upper_interval(const CrossSectionLattice& L, std::size_t ei) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < L.size(); ++g)
    if (g != ei && g != L.top() && leq(L.element(ei), L.element(g))) out.push_back(g);
  return out;
}

std::size_t count_maximal(const CrossSectionLattice& L, const std::vector<std::size_t>& S) {
  std::size_t n = 0;
  for (std::size_t g : S) {
    bool maximal = true;
    for (std::size_t h : S)
      if (h != g && leq(L.element(g), L.element(h))) {
        maximal = false;
        break;
      }
    if (maximal) ++n;
  }
  return n;
}

std::size_t count_minimal(const CrossSectionLattice& L, const std::vector<std::size_t>& S) {
  std::size_t n = 0;
  for (std::size_t g : S) {
    bool minimal = true;
    for (std::size_t h : S)
      if (h != g && leq(L.element(h), L.element(g))) {
        minimal = false;
        break;
      }
    if (minimal) ++n;
  }
  return n;
}

GroupDesc levi_desc(const DynkinDiagram& d, const NodeSet& K, std::optional<int> torus) {
  GroupDesc g;
  g.torus_rank = torus;
  if (K.empty()) {
    g.derived = GroupDesc::Derived::Trivial;
  } else if (K.is_full()) {
    g.derived = GroupDesc::Derived::WholeGroup;
  } else {
    g.derived = GroupDesc::Derived::Subdiagram;
    g.components = classify_subdiagram(d, K);
  }
  return g;
}

}  // namespace

std::string stabilizer_class_name(StabilizerClass::Kind k) {
  switch (k) {
    case StabilizerClass::Kind::TopElement: return "top";
    case StabilizerClass::Kind::MaximalJCoirreducible: return "maximal_jcoirreducible";
    case StabilizerClass::Kind::JCoirreducible: return "jcoirreducible";
    case StabilizerClass::Kind::General: return "general";
  }
  return "general";
}

StabilizerClass classify_stabilizer(const CrossSectionLattice& L, const Idempotent& e) {
  L.require_index(e);
  StabilizerClass out;
  if (e.I.empty()) {
    out.kind = StabilizerClass::Kind::TopElement;
  } else if (e.I.size() == 1) {
    out.s = e.I.min_node();
    out.kind = e.J.is_full() ? StabilizerClass::Kind::MaximalJCoirreducible
                             : StabilizerClass::Kind::JCoirreducible;
  } else {
    out.kind = StabilizerClass::Kind::General;
  }
  return out;
}

bool is_stabilizer_jcoirreducible(const CrossSectionLattice& L, const Idempotent& e) {
  std::size_t i = L.require_index(e);
  if (i == L.top())
    throw invalid_input("classification undefined for the top element " + e.to_string());
  return e.I.size() == 1;
}

bool jcoirr_interval_oracle(const CrossSectionLattice& L, const Idempotent& e) {
  std::size_t ei = L.require_index(e);
  if (ei == L.top())
    throw invalid_input("classification undefined for the top element " + e.to_string());
  std::vector<std::size_t> half_open = open_upper_interval(L, ei);
  half_open.push_back(ei);  // [e, top)
  return count_maximal(L, half_open) == 1;
}

bool is_maximal_jcoirr(const DynkinDiagram& d, const Idempotent& e) {
  (void)d;
  return e.I.size() == 1 && e.J.is_full();
}

NodeSet stabilizer_jcoirr_type(const DynkinDiagram& d, const Idempotent& e) {
  if (!is_maximal_jcoirr(d, e))
    throw invalid_input("type is defined for maximal J-coirreducible stabilizers only, got " +
                        e.to_string());
  return e.I.complement();
}

NodeSet stabilizer_jcoirr_type_oracle(const CrossSectionLattice& L, const Idempotent& e) {
  std::size_t ei = L.require_index(e);
  std::vector<std::size_t> half_open = open_upper_interval(L, ei);
  half_open.push_back(ei);
  std::vector<std::size_t> maximal;
  for (std::size_t g : half_open) {
    bool is_max = true;
    for (std::size_t h : half_open)
      if (h != g && leq(L.element(g), L.element(h))) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(g);
  }
  if (maximal.size() != 1)
    throw invalid_input("stabilizer of " + e.to_string() + " is not J-coirreducible");
  return type_map(L.diagram(), L.element(maximal[0])).lambda;
}

bool is_stabilizer_jlinear(const CrossSectionLattice& L, const Idempotent& e) {
  std::size_t ei = L.require_index(e);
  auto open = open_upper_interval(L, ei);
  if (open.empty()) return false;
  return count_minimal(L, open) == 1 && count_maximal(L, open) == 1;
}

std::optional<bool> jlinear_leaf_criterion(const DynkinDiagram& d, const Idempotent& e) {
  if (d.kind() == DiagramKind::D || d.kind() == DiagramKind::E) return std::nullopt;
  if (e.I.size() != 1) return false;
  return leaf_nodes(d).contains(e.I.min_node());
}

bool jlinear_end_segment_criterion(const DynkinDiagram& d, const Idempotent& e) {
  if (e.I.size() != 1 || e.J.empty()) return false;
  int s = e.I.min_node();
  if (!e.J.contains(s)) return false;  // inessential otherwise
  return is_path_subdiagram(d, e.J) && induced_degree(d, e.J, s) <= 1;
}

std::optional<std::size_t> navel(const CrossSectionLattice& L) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (type_map(L.diagram(), L.element(i)).lambda.empty()) {
      if (found) return std::nullopt;  // not unique; foreign to these lattices
      found = i;
    }
  }
  return found;
}

LocalWeylData local_weyl(const DynkinDiagram& d, const Idempotent& e) {
  TypeMapData tm = type_map(d, e);
  return LocalWeylData{tm.lambda_upper, tm.lambda_lower};
}

std::string shape_name(StructureDescriptor::Shape s) {
  switch (s) {
    case StructureDescriptor::Shape::Rank1JFull: return "rank1_j_full";
    case StructureDescriptor::Shape::Rank1IFull: return "rank1_i_full";
    case StructureDescriptor::Shape::MaximalJCoirr: return "maximal_jcoirreducible";
    case StructureDescriptor::Shape::Navel: return "navel";
    case StructureDescriptor::Shape::General: return "general";
  }
  return "general";
}

StructureDescriptor structure_descriptor(const DynkinDiagram& d,
                                         const CrossSectionLattice& L,
                                         const Idempotent& e) {
  L.require_index(e);
  const int l = d.rank();
  const int rk = idempotent_rank(d, e);

  StructureDescriptor out;
  out.eMe_affine_line = (rk == 1);

  auto whole = [&](int torus) {
    GroupDesc g;
    g.derived = GroupDesc::Derived::WholeGroup;
    g.torus_rank = torus;
    return g;
  };
  auto torus_only = [&](int torus) {
    GroupDesc g;
    g.derived = GroupDesc::Derived::Trivial;
    g.torus_rank = torus;
    return g;
  };

  if (e.I.is_full() && e.J.empty()) {
    out.shape = StructureDescriptor::Shape::Navel;
    out.centralizer = torus_only(2 * l);
    out.stabilizer_identity = torus_only(l);
    out.unit_of_eMe = torus_only(l);
    out.dim_eMe = l;
    out.torus_embedding_dims = std::make_pair(l, l);
  } else if (is_maximal_jcoirr(d, e)) {
    out.shape = StructureDescriptor::Shape::MaximalJCoirr;
    out.centralizer = whole(l - 1);
    out.stabilizer_identity = whole(0);
    out.unit_of_eMe = torus_only(l - 1);
    out.dim_eMe = l - 1;
  } else if (rk == 1 && e.J.is_full()) {
    out.shape = StructureDescriptor::Shape::Rank1JFull;
    out.centralizer = whole(l - 1);
    out.stabilizer_identity = whole(l - 2);
    out.unit_of_eMe = torus_only(1);
    out.dim_eMe = 1;
  } else if (rk == 1 && e.I.is_full()) {
    out.shape = StructureDescriptor::Shape::Rank1IFull;
    out.centralizer = levi_desc(d, e.J, l);
    out.stabilizer_identity = levi_desc(d, e.J, l - 1);
    out.unit_of_eMe = torus_only(1);
    out.dim_eMe = 1;
  } else {
    out.shape = StructureDescriptor::Shape::General;
    TypeMapData tm = type_map(d, e);
    out.centralizer = levi_desc(d, tm.lambda, std::nullopt);
    out.stabilizer_identity = levi_desc(d, tm.lambda_lower, std::nullopt);
    out.unit_of_eMe = levi_desc(d, tm.lambda_upper, std::nullopt);
  }
  return out;
}

std::pair<bool, int> boolean_interval_check(const CrossSectionLattice& L,
                                            const Idempotent& e, IntervalSide side) {
  std::size_t ei = L.require_index(e);
  std::vector<std::size_t> interval;
  for (std::size_t g = 0; g < L.size(); ++g) {
    bool in = (side == IntervalSide::Lower) ? leq(L.element(g), L.element(ei))
                                            : leq(L.element(ei), L.element(g));
    if (in) interval.push_back(g);
  }

  int lo = L.rank(interval.front()), hi = lo;
  for (std::size_t g : interval) {
    lo = std::min(lo, L.rank(g));
    hi = std::max(hi, L.rank(g));
  }
  const int span = hi - lo;

  // atoms of the interval: minimal elements of interval \ {interval bottom}
  std::size_t bottom_idx = interval.front();
  for (std::size_t g : interval)
    if (leq(L.element(g), L.element(bottom_idx))) bottom_idx = g;
  std::vector<std::size_t> rest;
  for (std::size_t g : interval)
    if (g != bottom_idx) rest.push_back(g);
  std::vector<std::size_t> interval_atoms;
  for (std::size_t g : rest) {
    bool minimal = true;
    for (std::size_t h : rest)
      if (h != g && leq(L.element(h), L.element(g))) {
        minimal = false;
        break;
      }
    if (minimal) interval_atoms.push_back(g);
  }

  const std::size_t k = interval_atoms.size();
  if (k > 25 || interval.size() != (std::size_t{1} << k)) return {false, span};

  // x -> set of interval atoms below x must be an order isomorphism onto 2^k
  std::vector<std::uint32_t> keys(interval.size());
  for (std::size_t p = 0; p < interval.size(); ++p) {
    std::uint32_t key = 0;
    for (std::size_t a = 0; a < k; ++a)
      if (leq(L.element(interval_atoms[a]), L.element(interval[p]))) key |= 1u << a;
    keys[p] = key;
  }
  auto distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end())
    return {false, span};
  for (std::size_t p = 0; p < interval.size(); ++p)
    for (std::size_t q = 0; q < interval.size(); ++q) {
      bool order = leq(L.element(interval[p]), L.element(interval[q]));
      bool sets = (keys[p] & ~keys[q]) == 0;
      if (order != sets) return {false, span};
    }
  return {true, static_cast<int>(k)};
}

}  // namespace envlat
