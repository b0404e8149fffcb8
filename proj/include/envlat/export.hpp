#pragma once

#include <string>

#include <json.hpp>

#include "envlat/classify.hpp"
#include "envlat/counting.hpp"
#include "envlat/lattice.hpp"
#include "envlat/renner.hpp"
#include "envlat/weyl.hpp"

namespace envlat {

// All emitters produce canonical, byte-stable output: elements in lattice
// order, edges sorted, keys in fixed insertion order.  Big integers are
// rendered as decimal strings.
using Json = nlohmann::ordered_json;

Json envelope(const std::string& command);

Json node_set_json(const NodeSet& s);
Json group_desc_json(const GroupDesc& g);
Json descriptor_json(const StructureDescriptor& sd);

Json lattice_json(const CrossSectionLattice& L);
std::string lattice_dot(const CrossSectionLattice& L);

Json classify_element_json(const CrossSectionLattice& L, std::size_t i);
Json classify_json(const CrossSectionLattice& L);

Json count_json(int max_n, const std::string& method, bool check, int rank_cap);

Json r1count_json(const DynkinDiagram& d);
std::string rank1_poset_dot(const WeylGroup& W, const Rank1OrbitPoset& P);

// Canonical reduced word, dot-separated ("1.2.1"); empty for the identity.
std::string word_string(const WeylGroup& W, WeylGroup::Index i);

}  // namespace envlat
