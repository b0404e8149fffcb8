// The cross-section lattice of an enveloping monoid as essential pairs, with
// order, grading, covers, type maps, meet/join and the face-coordinate view.

#include "envlat/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "envlat/errors.hpp"

namespace envlat {

namespace {

std::uint64_t pair_key(const NodeSet& I, const NodeSet& J) {
  return (static_cast<std::uint64_t>(I.bits()) << 32) | J.bits();
}

// Component bitmasks of the induced subdiagram on the mask, low node first.
std::vector<std::uint32_t> component_masks(const DynkinDiagram& d, std::uint32_t set) {
  std::vector<std::uint32_t> out;
  std::uint32_t rest = set;
  while (rest) {
    std::uint32_t comp = 0;
    std::uint32_t frontier = rest & (~rest + 1);
    while (frontier) {
      comp |= frontier;
      std::uint32_t next = 0;
      for (std::uint32_t m = frontier; m; m &= m - 1)
        next |= d.adjacency_bits(__builtin_ctz(m) + 1);
      frontier = next & set & ~comp;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

bool essential_lambda_masks(const std::vector<std::uint32_t>& j_comps, std::uint32_t i_bits) {
  for (std::uint32_t c : j_comps)
    if ((c & i_bits) == 0) return false;
  return true;
}

}  // namespace

std::string Idempotent::to_string() const {
  std::ostringstream os;
  os << "e{";
  bool first = true;
  for (int n : I.members()) {
    if (!first) os << ',';
    os << n;
    first = false;
  }
  os << '|';
  first = true;
  for (int n : J.members()) {
    if (!first) os << ',';
    os << n;
    first = false;
  }
  os << '}';
  return os.str();
}

bool is_essential_lambda(const DynkinDiagram& d, const NodeSet& I, const NodeSet& J) {
  assert(I.ambient_rank() == d.rank() && J.ambient_rank() == d.rank());
  return essential_lambda_masks(component_masks(d, J.bits()), I.bits());
}

bool is_essential_face(const DynkinDiagram& d, const NodeSet& I, const NodeSet& J) {
  // no component of the complement of J lies inside I
  for (std::uint32_t c : component_masks(d, J.complement().bits()))
    if ((c & ~I.bits()) == 0) return false;
  return true;
}

int idempotent_rank(const DynkinDiagram& d, const Idempotent& e) {
  return 2 * d.rank() - e.I.size() - e.J.size();
}

Idempotent meet(const DynkinDiagram& d, const Idempotent& a, const Idempotent& b) {
  (void)d;
  return Idempotent{a.I.united(b.I), a.J.united(b.J)};
}

Idempotent join(const DynkinDiagram& d, const Idempotent& a, const Idempotent& b) {
  NodeSet I = a.I.intersected(b.I);
  NodeSet J = a.J.intersected(b.J);
  std::uint32_t stranded = 0;
  for (std::uint32_t c : component_masks(d, J.bits()))
    if ((c & I.bits()) == 0) stranded |= c;
  return Idempotent{I, NodeSet::from_bits(d.rank(), J.bits() & ~stranded)};
}

TypeMapData type_map(const DynkinDiagram& d, const Idempotent& e) {
  NodeSet upper(d.rank());
  for (int s : e.I.complement().members()) {
    bool commutes = true;
    for (int t : e.J.members())
      if (t != s && d.adjacent(s, t)) {
        commutes = false;
        break;
      }
    if (commutes) upper.add(s);
  }
  assert(!upper.intersects(e.J));  // guaranteed by essentiality
  return TypeMapData{e.J, upper, e.J.united(upper)};
}

CrossSectionLattice CrossSectionLattice::enumerate(const DynkinDiagram& d, int rank_cap) {
  if (d.rank() > rank_cap) {
    std::ostringstream os;
    os << "lattice enumeration for " << d.name() << " needs rank <= " << rank_cap
       << " (4^" << d.rank() << " candidate pairs)";
    throw resource_limit(os.str());
  }

  CrossSectionLattice L(d);
  const int l = d.rank();
  const std::uint32_t full = (l == 0) ? 0u : (UINT32_C(1) << l) - 1;
  for (std::uint32_t j = 0;; ++j) {
    auto comps = component_masks(d, j);
    for (std::uint32_t i = 0;; ++i) {
      if (essential_lambda_masks(comps, i))
        L.elements_.push_back(
            Idempotent{NodeSet::from_bits(l, i), NodeSet::from_bits(l, j)});
      if (i == full) break;
    }
    if (j == full) break;
  }

  std::sort(L.elements_.begin(), L.elements_.end(),
            [&](const Idempotent& a, const Idempotent& b) {
              int ra = idempotent_rank(d, a), rb = idempotent_rank(d, b);
              if (ra != rb) return ra < rb;
              if (!(a.I == b.I)) return lex_less(a.I, b.I);
              return lex_less(a.J, b.J);
            });

  L.ranks_.reserve(L.elements_.size());
  L.index_.reserve(L.elements_.size() * 2);
  for (std::size_t i = 0; i < L.elements_.size(); ++i) {
    L.ranks_.push_back(idempotent_rank(d, L.elements_[i]));
    L.index_.emplace(pair_key(L.elements_[i].I, L.elements_[i].J), i);
  }
  return L;
}

std::optional<std::size_t> CrossSectionLattice::index_of(const Idempotent& e) const {
  auto it = index_.find(pair_key(e.I, e.J));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CrossSectionLattice::require_index(const Idempotent& e) const {
  auto idx = index_of(e);
  if (!idx)
    throw invalid_input("pair " + e.to_string() + " is not essential in " + diagram_.name());
  return *idx;
}

void CrossSectionLattice::ensure_covers() const {
  std::lock_guard<std::mutex> lock(covers_->mu);
  if (covers_->built) return;

  const std::size_t n = elements_.size();
  covers_->up.assign(n, {});
  covers_->down.assign(n, {});

  std::vector<std::size_t> above;
  for (std::size_t i = 0; i < n; ++i) {
    above.clear();
    for (std::size_t f = 0; f < n; ++f)
      if (f != i && leq(elements_[i], elements_[f])) above.push_back(f);
    // canonical order sorts by rank, so a strictly smaller element of the
    // up-set can only appear earlier in `above`; scanning downward meets the
    // adjacent rank first, where a witness is found soonest
    for (std::size_t p = 0; p < above.size(); ++p) {
      bool minimal = true;
      for (std::size_t q = p; q-- > 0;)
        if (leq(elements_[above[q]], elements_[above[p]])) {
          minimal = false;
          break;
        }
      if (minimal) {
        covers_->up[i].push_back(above[p]);
        covers_->down[above[p]].push_back(i);
      }
    }
  }
  for (auto& v : covers_->up) std::sort(v.begin(), v.end());
  for (auto& v : covers_->down) std::sort(v.begin(), v.end());
  covers_->built = true;
}

const std::vector<std::size_t>& CrossSectionLattice::upper_covers(std::size_t i) const {
  ensure_covers();
  return covers_->up[i];
}

const std::vector<std::size_t>& CrossSectionLattice::lower_covers(std::size_t i) const {
  ensure_covers();
  return covers_->down[i];
}

std::vector<std::pair<std::size_t, std::size_t>> CrossSectionLattice::hasse() const {
  ensure_covers();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t f : covers_->up[i]) out.emplace_back(i, f);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_essential_pairs(const DynkinDiagram& d) {
  const int l = d.rank();
  const std::uint32_t full = (l == 0) ? 0u : (UINT32_C(1) << l) - 1;
  std::uint64_t count = 0;
  for (std::uint32_t j = 0;; ++j) {
    auto comps = component_masks(d, j);
    for (std::uint32_t i = 0;; ++i) {
      if (essential_lambda_masks(comps, i)) ++count;
      if (i == full) break;
    }
    if (j == full) break;
  }
  return count;
}

std::vector<std::size_t> atoms(const CrossSectionLattice& L) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < L.size(); ++i)
    if (L.rank(i) == 1) out.push_back(i);
  return out;
}

std::vector<std::size_t> coatoms(const CrossSectionLattice& L) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < L.size(); ++i)
    if (L.rank(i) == L.height() - 1) out.push_back(i);
  return out;
}

std::vector<Idempotent> atomic_decomposition(const DynkinDiagram& d, const Idempotent& e) {
  const int l = d.rank();
  if (e == Idempotent{NodeSet::full(l), NodeSet::full(l)})
    throw invalid_input("the bottom element is not a join of atoms");

  Face f = to_face(e);
  std::vector<Idempotent> out;
  for (int i : f.I.members()) {
    // in lambda coordinates F_{{i},∅} is e_{S\{i}, S}; inessential only at rank 1
    NodeSet fi = NodeSet(l).add(i);
    if (is_essential_face(d, fi, NodeSet(l)))
      out.push_back(from_face(Face{fi, NodeSet(l)}));
  }
  for (int j : f.J.members())
    out.push_back(from_face(Face{NodeSet(l), NodeSet(l).add(j)}));

  Idempotent folded{NodeSet::full(l), NodeSet::full(l)};
  for (const Idempotent& a : out) folded = join(d, folded, a);
  if (!(folded == e))
    throw invalid_input("element " + e.to_string() + " is not a join of atoms in " +
                        d.name());
  return out;
}

}  // namespace envlat
