#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "envlat/caps.hpp"
#include "envlat/dynkin.hpp"

namespace envlat {

// An essential pair e_{I,J}: every connected component of J meets I.  These
// index the G x G orbits of the enveloping monoid of the simple group with
// the given diagram.
struct Idempotent {
  NodeSet I, J;
  bool operator==(const Idempotent&) const = default;
  std::string to_string() const;  // "e{1,2|1}"
};

// The same element in face coordinates F_{I,J}; essential here means no
// connected component of the complement of J lies inside I.
struct Face {
  NodeSet I, J;
  bool operator==(const Face&) const = default;
};

// lambda = lambda_lower ⊔ lambda_upper:
//   lambda_lower (λ_*) = J, the reflections absorbed by e;
//   lambda_upper (λ*)  = reflections outside I commuting with all of J, the
//                        Weyl group surviving in the local monoid eMe.
struct TypeMapData {
  NodeSet lambda_lower;
  NodeSet lambda_upper;
  NodeSet lambda;
};

bool is_essential_lambda(const DynkinDiagram& d, const NodeSet& I, const NodeSet& J);
bool is_essential_face(const DynkinDiagram& d, const NodeSet& I, const NodeSet& J);

// Reverse inclusion on both coordinates.
inline bool leq(const Idempotent& a, const Idempotent& b) {
  return b.I.subset_of(a.I) && b.J.subset_of(a.J);
}
inline bool face_leq(const Face& a, const Face& b) {
  return a.I.subset_of(b.I) && a.J.subset_of(b.J);
}

inline Face to_face(const Idempotent& e) {
  return Face{e.I.complement(), e.J.complement()};
}
inline Idempotent from_face(const Face& f) {
  return Idempotent{f.I.complement(), f.J.complement()};
}

int idempotent_rank(const DynkinDiagram& d, const Idempotent& e);  // 2l - |I| - |J|

// Greatest lower bound: union on both coordinates.
Idempotent meet(const DynkinDiagram& d, const Idempotent& a, const Idempotent& b);
// Least upper bound: intersection of both coordinates, with the components of
// J1 ∩ J2 stranded outside I1 ∩ I2 removed.
Idempotent join(const DynkinDiagram& d, const Idempotent& a, const Idempotent& b);

TypeMapData type_map(const DynkinDiagram& d, const Idempotent& e);

// Every essential pair of the diagram with rank, order and covers.  Elements
// are kept in canonical order (rank, then lexicographic on I, then on J), so
// indices are stable across runs.  The Hasse diagram is materialized on first
// use behind a mutex, without assuming gradedness; all other queries are pure.
class CrossSectionLattice {
 public:
  static CrossSectionLattice enumerate(const DynkinDiagram& d, int rank_cap = kDefaultRankCap);

  const DynkinDiagram& diagram() const { return diagram_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Idempotent>& elements() const { return elements_; }
  const Idempotent& element(std::size_t i) const { return elements_[i]; }
  int rank(std::size_t i) const { return ranks_[i]; }
  int height() const { return 2 * diagram_.rank(); }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }

  std::optional<std::size_t> index_of(const Idempotent& e) const;
  std::size_t require_index(const Idempotent& e) const;  // throws invalid_input

  const std::vector<std::size_t>& upper_covers(std::size_t i) const;
  const std::vector<std::size_t>& lower_covers(std::size_t i) const;
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const;  // (lower, upper)

 private:
  explicit CrossSectionLattice(const DynkinDiagram& d) : diagram_(d) {}
  void ensure_covers() const;

  struct CoverCache {
    std::mutex mu;
    bool built = false;
    std::vector<std::vector<std::size_t>> up, down;
  };

  DynkinDiagram diagram_;
  std::vector<Idempotent> elements_;
  std::vector<int> ranks_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::unique_ptr<CoverCache> covers_ = std::make_unique<CoverCache>();
};

// Number of essential pairs, without materializing the lattice.
std::uint64_t count_essential_pairs(const DynkinDiagram& d);

std::vector<std::size_t> atoms(const CrossSectionLattice& L);
std::vector<std::size_t> coatoms(const CrossSectionLattice& L);

// The atoms whose join reproduces e, via the face-coordinate decomposition
// F_{I,J} = ∨ F_{{i},∅} ∨ ∨ F_{∅,{j}}.  Throws invalid_input for the bottom
// element and for the one rank-1 top that is not a join of atoms.
std::vector<Idempotent> atomic_decomposition(const DynkinDiagram& d, const Idempotent& e);

}  // namespace envlat
