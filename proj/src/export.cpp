// JSON and DOT emission for the CLI; deterministic ordering throughout.

#include "envlat/export.hpp"

#include <map>
#include <sstream>

#include "envlat/errors.hpp"

namespace envlat {

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = "envlat/1";
  j["command"] = command;
  return j;
}

Json node_set_json(const NodeSet& s) { return Json(s.members()); }

Json group_desc_json(const GroupDesc& g) {
  Json j;
  switch (g.derived) {
    case GroupDesc::Derived::Trivial: j["derived"] = "trivial"; break;
    case GroupDesc::Derived::WholeGroup: j["derived"] = "G0"; break;
    case GroupDesc::Derived::Subdiagram: {
      Json comps = Json::array();
      for (auto [k, r] : g.components)
        comps.push_back(Json::array({std::string(1, letter(k)), r}));
      j["derived"] = comps;
      break;
    }
  }
  if (g.torus_rank)
    j["torus_rank"] = *g.torus_rank;
  else
    j["torus_rank"] = nullptr;
  return j;
}

Json descriptor_json(const StructureDescriptor& sd) {
  Json j;
  j["shape"] = shape_name(sd.shape);
  j["centralizer"] = group_desc_json(sd.centralizer);
  j["stabilizer_identity"] = group_desc_json(sd.stabilizer_identity);
  j["unit_of_eMe"] = group_desc_json(sd.unit_of_eMe);
  j["dim_eMe"] = sd.dim_eMe ? Json(*sd.dim_eMe) : Json(nullptr);
  j["eMe_affine_line"] = sd.eMe_affine_line;
  if (sd.torus_embedding_dims)
    j["torus_embedding_dims"] =
        Json::array({sd.torus_embedding_dims->first, sd.torus_embedding_dims->second});
  else
    j["torus_embedding_dims"] = nullptr;
  return j;
}

Json lattice_json(const CrossSectionLattice& L) {
  Json j = envelope("lattice");
  j["diagram"] = L.diagram().name();
  j["size"] = L.size();
  Json elems = Json::array();
  for (std::size_t i = 0; i < L.size(); ++i) {
    const Idempotent& e = L.element(i);
    TypeMapData tm = type_map(L.diagram(), e);
    Json rec;
    rec["index"] = i;
    rec["I"] = node_set_json(e.I);
    rec["J"] = node_set_json(e.J);
    rec["rank"] = L.rank(i);
    rec["lambda_lower"] = node_set_json(tm.lambda_lower);
    rec["lambda_upper"] = node_set_json(tm.lambda_upper);
    rec["covers"] = Json(L.upper_covers(i));
    elems.push_back(std::move(rec));
  }
  j["elements"] = std::move(elems);
  return j;
}

std::string lattice_dot(const CrossSectionLattice& L) {
  std::ostringstream os;
  os << "digraph \"lattice_" << L.diagram().name() << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < L.size(); ++i)
    os << "  n" << i << " [label=\"" << L.element(i).to_string() << "\"];\n";
  std::map<int, std::vector<std::size_t>> by_rank;
  for (std::size_t i = 0; i < L.size(); ++i) by_rank[L.rank(i)].push_back(i);
  for (const auto& [r, idxs] : by_rank) {
    os << "  { rank=same;";
    for (std::size_t i : idxs) os << " n" << i << ";";
    os << " }\n";
  }
  for (auto [lo, hi] : L.hasse()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

Json classify_element_json(const CrossSectionLattice& L, std::size_t i) {
  const Idempotent& e = L.element(i);
  StabilizerClass cls = classify_stabilizer(L, e);
  Json rec;
  rec["index"] = i;
  rec["I"] = node_set_json(e.I);
  rec["J"] = node_set_json(e.J);
  rec["class"] = stabilizer_class_name(cls.kind);
  if (cls.kind == StabilizerClass::Kind::TopElement)
    rec["jlinear"] = nullptr;
  else
    rec["jlinear"] = is_stabilizer_jlinear(L, e);
  rec["navel"] = type_map(L.diagram(), e).lambda.empty();
  rec["descriptor"] = descriptor_json(structure_descriptor(L.diagram(), L, e));
  return rec;
}

Json classify_json(const CrossSectionLattice& L) {
  Json j = envelope("classify");
  j["diagram"] = L.diagram().name();
  Json elems = Json::array();
  for (std::size_t i = 0; i < L.size(); ++i)
    elems.push_back(classify_element_json(L, i));
  j["elements"] = std::move(elems);
  return j;
}

Json count_json(int max_n, const std::string& method, bool check, int rank_cap) {
  Json j = envelope("count");
  j["max_n"] = max_n;
  j["method"] = method;
  OrbitCountSeries s = orbit_count_series(max_n);
  Json rows = Json::array();
  for (int n = 0; n <= max_n; ++n) {
    Json row;
    row["n"] = n;
    BigInt d = (method == "gf")     ? d_via_gf(n)
               : (method == "enum") ? d_via_enumeration(n, rank_cap)
                                    : s.d_values[n];
    row["d"] = d.str();
    row["e"] = s.e_values[n].str();
    if (method == "all") {
      row["d_gf"] = d_via_gf(n).str();
      row["d_enum"] = d_via_enumeration(n, rank_cap).str();
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  if (check) {
    bool triple = true;
    for (int n = 0; n <= std::min(max_n, rank_cap); ++n) {
      if (s.d_values[n] != d_via_gf(n) || s.d_values[n] != d_via_enumeration(n, rank_cap))
        triple = false;
    }
    bool rec_gf = true;
    for (int n = 0; n <= std::max(max_n, 200); ++n)
      if (d_seq(n) != d_via_gf(n)) rec_gf = false;
    Json chk;
    chk["triple_agreement"] = triple;
    chk["rec_vs_gf_to_200"] = rec_gf;
    chk["gf_identity"] = gf_identity_check(std::max(max_n, 40));
    j["check"] = std::move(chk);
  }
  return j;
}

Json r1count_json(const DynkinDiagram& d) {
  Json j = envelope("renner.r1count");
  j["diagram"] = d.name();
  j["count"] = count_R1(d).str();
  CrossSectionLattice L = CrossSectionLattice::enumerate(d);
  Json atom_list = Json::array();
  for (std::size_t i : atoms(L)) {
    const Idempotent& e = L.element(i);
    Json rec;
    rec["I"] = node_set_json(e.I);
    rec["J"] = node_set_json(e.J);
    rec["family"] = e.J.is_full() ? "J_full" : "I_full";
    BigInt size = e.J.is_full() ? BigInt(1)
                                : parabolic_index(d, e.J) * parabolic_index(d, e.J);
    rec["orbit_size"] = size.str();
    atom_list.push_back(std::move(rec));
  }
  j["atoms"] = std::move(atom_list);
  return j;
}

std::string word_string(const WeylGroup& W, WeylGroup::Index i) {
  std::ostringstream os;
  bool first = true;
  for (std::uint8_t s : W.word(i)) {
    if (!first) os << '.';
    os << int(s);
    first = false;
  }
  return os.str();
}

std::string rank1_poset_dot(const WeylGroup& W, const Rank1OrbitPoset& P) {
  std::ostringstream os;
  auto label = [&](std::size_t p) {
    std::string a = word_string(W, P.elements[p].first);
    std::string b = word_string(W, P.elements[p].second);
    if (a.empty()) a = "e";
    if (b.empty()) b = "e";
    return a + "|" + b;
  };
  os << "digraph \"rank1_" << W.diagram().name() << "_" << P.e.to_string() << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t p = 0; p < P.elements.size(); ++p)
    os << "  p" << p << " [label=\"" << label(p) << "\"];\n";
  // cover relations of the product order, brute force
  for (std::size_t p = 0; p < P.elements.size(); ++p)
    for (std::size_t q = 0; q < P.elements.size(); ++q) {
      if (p == q || !rank1_leq(W, P, p, q)) continue;
      bool cover = true;
      for (std::size_t r = 0; r < P.elements.size(); ++r)
        if (r != p && r != q && rank1_leq(W, P, p, r) && rank1_leq(W, P, r, q)) {
          cover = false;
          break;
        }
      if (cover) os << "  p" << p << " -> p" << q << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace envlat
