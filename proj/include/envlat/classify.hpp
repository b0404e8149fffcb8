#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "envlat/lattice.hpp"

namespace envlat {

// Shape of the connected stabilizer M_e read off the coordinates of e.
struct StabilizerClass {
  enum class Kind { TopElement, MaximalJCoirreducible, JCoirreducible, General };
  Kind kind = Kind::General;
  int s = 0;  // the singleton node of I for the J-coirreducible kinds
};

StabilizerClass classify_stabilizer(const CrossSectionLattice& L, const Idempotent& e);
std::string stabilizer_class_name(StabilizerClass::Kind k);

// Closed form |I| == 1; throws invalid_input for the top element, whose
// stabilizer lattice has no boundary orbit to speak of.
bool is_stabilizer_jcoirreducible(const CrossSectionLattice& L, const Idempotent& e);

// Brute-force arbiter: the stabilizer lattice {g : g >= e} has exactly one
// element covered by its maximum, i.e. {g : e <= g < top} has one maximal
// element.  (At a coatom that element is e itself.)
bool jcoirr_interval_oracle(const CrossSectionLattice& L, const Idempotent& e);

bool is_maximal_jcoirr(const DynkinDiagram& d, const Idempotent& e);  // I={s}, J=S

// type(M_e) = S \ {s} for a maximal J-coirreducible stabilizer.
NodeSet stabilizer_jcoirr_type(const DynkinDiagram& d, const Idempotent& e);
// Same value read off the lattice: lambda of the unique coatom of [e, top].
NodeSet stabilizer_jcoirr_type_oracle(const CrossSectionLattice& L, const Idempotent& e);

// The open interval (e, top) has exactly one minimal and one maximal element.
// This is the defining property, computed by interval scan; an empty interval
// fails it.
bool is_stabilizer_jlinear(const CrossSectionLattice& L, const Idempotent& e);

// Closed form "s is a leaf of the diagram", offered for kinds A,B,C,F,G;
// nullopt for D and E.  Valid exactly on the J = S stratum; the verification
// suite reports where it parts ways with the interval scan.
std::optional<bool> jlinear_leaf_criterion(const DynkinDiagram& d, const Idempotent& e);

// Closed form that matches the interval scan on every stratum: J nonempty,
// the subdiagram J is a path, and s sits at one of its ends.
bool jlinear_end_segment_criterion(const DynkinDiagram& d, const Idempotent& e);

// The unique element with empty type map, e_{S,∅} for these lattices.
std::optional<std::size_t> navel(const CrossSectionLattice& L);

struct LocalWeylData {
  NodeSet weyl_of_eMe;  // λ*(e)
  NodeSet weyl_of_Me;   // λ_*(e)
};
LocalWeylData local_weyl(const DynkinDiagram& d, const Idempotent& e);

// Symbolic group shape: a derived part (trivial, the whole group, or a list
// of component types) and an optional central torus rank.
struct GroupDesc {
  enum class Derived { Trivial, WholeGroup, Subdiagram };
  Derived derived = Derived::Trivial;
  std::vector<std::pair<DiagramKind, int>> components;
  std::optional<int> torus_rank;
};

struct StructureDescriptor {
  enum class Shape { Rank1JFull, Rank1IFull, MaximalJCoirr, Navel, General };
  Shape shape = Shape::General;
  GroupDesc centralizer;          // C_G(e)
  GroupDesc stabilizer_identity;  // G_e^0
  GroupDesc unit_of_eMe;          // G(eMe)
  std::optional<int> dim_eMe;
  bool eMe_affine_line = false;
  std::optional<std::pair<int, int>> torus_embedding_dims;  // (dim eMe, dim M_e)
};

StructureDescriptor structure_descriptor(const DynkinDiagram& d,
                                         const CrossSectionLattice& L,
                                         const Idempotent& e);
std::string shape_name(StructureDescriptor::Shape s);

enum class IntervalSide { Lower, Upper };

// Tests whether [bottom, e] or [e, top] is order-isomorphic to a Boolean
// lattice.  Returns (true, height) on success and (false, rank span) else.
std::pair<bool, int> boolean_interval_check(const CrossSectionLattice& L,
                                            const Idempotent& e, IntervalSide side);

}  // namespace envlat
