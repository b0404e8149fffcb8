// Dynkin diagrams of the finite simple types and subset combinatorics on them.

#include "envlat/dynkin.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "envlat/errors.hpp"

namespace envlat {

char letter(DiagramKind k) { return static_cast<char>(k); }

DiagramKind kind_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return DiagramKind::A;
    case 'B': return DiagramKind::B;
    case 'C': return DiagramKind::C;
    case 'D': return DiagramKind::D;
    case 'E': return DiagramKind::E;
    case 'F': return DiagramKind::F;
    case 'G': return DiagramKind::G;
    default:
      throw invalid_input(std::string("unknown diagram kind '") + c +
                          "', expected one of A,B,C,D,E,F,G");
  }
}

std::pair<int, int> rank_range(DiagramKind k) {
  switch (k) {
    case DiagramKind::A: return {1, 31};
    case DiagramKind::B: return {2, 31};
    case DiagramKind::C: return {3, 31};
    case DiagramKind::D: return {4, 31};
    case DiagramKind::E: return {6, 8};
    case DiagramKind::F: return {4, 4};
    case DiagramKind::G: return {2, 2};
  }
  return {0, -1};
}

bool rank_in_range(DiagramKind k, int rank) {
  auto [lo, hi] = rank_range(k);
  return rank >= lo && rank <= hi;
}

std::string type_name(DiagramKind k, int rank) {
  return std::string(1, letter(k)) + std::to_string(rank);
}

std::vector<int> NodeSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t m = bits_; m; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

int NodeSet::min_node() const {
  return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
}

std::string NodeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int n : members()) {
    if (!first) os << ',';
    os << n;
    first = false;
  }
  os << '}';
  return os.str();
}

bool lex_less(const NodeSet& a, const NodeSet& b) {
  assert(a.ambient_rank() == b.ambient_rank());
  std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Members below the smallest differing element x are shared.  If x lies in
  // a, then a wins exactly when b still has a larger member to compare it
  // against; if x lies in b, a wins exactly when it is the exhausted prefix.
  std::uint32_t x = diff & (~diff + 1);
  std::uint32_t above = ~((x << 1) - 1);
  if (a.bits() & x) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

DynkinDiagram::DynkinDiagram(DiagramKind k, int rank, std::vector<DiagramEdge> edges)
    : kind_(k), rank_(rank), edges_(std::move(edges)) {
  adj_.assign(static_cast<std::size_t>(rank_), 0u);
  cartan_.assign(static_cast<std::size_t>(rank_) * rank_, 0);
  for (int i = 1; i <= rank_; ++i) cartan_[(i - 1) * rank_ + (i - 1)] = 2;
  for (const DiagramEdge& e : edges_) {
    adj_[e.a - 1] |= UINT32_C(1) << (e.b - 1);
    adj_[e.b - 1] |= UINT32_C(1) << (e.a - 1);
    int ca_b, cb_a;  // cartan(a,b), cartan(b,a)
    if (e.multiplicity == 1) {
      ca_b = cb_a = -1;
    } else if (e.long_node == e.a) {
      ca_b = -1;
      cb_a = -e.multiplicity;
    } else {
      ca_b = -e.multiplicity;
      cb_a = -1;
    }
    cartan_[(e.a - 1) * rank_ + (e.b - 1)] = ca_b;
    cartan_[(e.b - 1) * rank_ + (e.a - 1)] = cb_a;
  }
}

int DynkinDiagram::edge_multiplicity(int a, int b) const {
  for (const DiagramEdge& e : edges_)
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.multiplicity;
  return 0;
}

DynkinDiagram build_diagram(DiagramKind k, int rank) {
  if (!rank_in_range(k, rank)) {
    auto [lo, hi] = rank_range(k);
    std::ostringstream os;
    os << "type " << letter(k) << " requires rank ";
    if (lo == hi)
      os << "= " << lo;
    else
      os << "in [" << lo << ", " << hi << "]";
    os << ", got " << rank;
    throw invalid_input(os.str());
  }

  std::vector<DiagramEdge> edges;
  auto simple = [&](int a, int b) { edges.push_back({a, b, 1, 0}); };
  switch (k) {
    case DiagramKind::A:
      for (int i = 1; i < rank; ++i) simple(i, i + 1);
      break;
    case DiagramKind::B:
      for (int i = 1; i < rank - 1; ++i) simple(i, i + 1);
      edges.push_back({rank - 1, rank, 2, rank - 1});
      break;
    case DiagramKind::C:
      for (int i = 1; i < rank - 1; ++i) simple(i, i + 1);
      edges.push_back({rank - 1, rank, 2, rank});
      break;
    case DiagramKind::D:
      for (int i = 1; i < rank - 2; ++i) simple(i, i + 1);
      simple(rank - 2, rank - 1);
      simple(rank - 2, rank);
      break;
    case DiagramKind::E:
      simple(1, 3);
      for (int i = 3; i < rank; ++i) simple(i, i + 1);
      simple(2, 4);
      break;
    case DiagramKind::F:
      simple(1, 2);
      edges.push_back({2, 3, 2, 2});
      simple(3, 4);
      break;
    case DiagramKind::G:
      edges.push_back({1, 2, 3, 2});
      break;
  }
  return DynkinDiagram(k, rank, std::move(edges));
}

DynkinDiagram parse_diagram(std::string_view spec) {
  std::size_t i = 0;
  while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
  if (i == spec.size())
    throw invalid_input("empty diagram spec, expected e.g. \"A4\"");
  DiagramKind k = kind_from_letter(spec[i]);
  ++i;
  std::size_t j = i;
  while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
  if (j == i)
    throw invalid_input("diagram spec '" + std::string(spec) + "' is missing a rank");
  std::size_t t = j;
  while (t < spec.size() && std::isspace(static_cast<unsigned char>(spec[t]))) ++t;
  if (t != spec.size())
    throw invalid_input("trailing characters in diagram spec '" + std::string(spec) + "'");
  long rank = std::stol(std::string(spec.substr(i, j - i)));
  if (rank > 31) rank = 32;  // out of range, reported by build_diagram
  return build_diagram(k, static_cast<int>(rank));
}

std::vector<NodeSet> connected_components(const DynkinDiagram& d, const NodeSet& K) {
  assert(K.ambient_rank() == d.rank());
  std::vector<NodeSet> out;
  std::uint32_t rest = K.bits();
  while (rest) {
    std::uint32_t comp = 0;
    std::uint32_t frontier = rest & (~rest + 1);  // lowest remaining node
    while (frontier) {
      comp |= frontier;
      std::uint32_t next = 0;
      for (std::uint32_t m = frontier; m; m &= m - 1)
        next |= d.adjacency_bits(std::countr_zero(m) + 1);
      frontier = next & K.bits() & ~comp;
    }
    out.push_back(NodeSet::from_bits(d.rank(), comp));
    rest &= ~comp;
  }
  return out;  // seeds taken low to high, so sorted by minimum label
}

NodeSet end_nodes(const DynkinDiagram& d, const NodeSet& K) {
  assert(K.ambient_rank() == d.rank());
  NodeSet out(d.rank());
  std::uint32_t outside = ~K.bits();
  for (std::uint32_t m = K.bits(); m; m &= m - 1) {
    int u = std::countr_zero(m) + 1;
    if (d.adjacency_bits(u) & outside & (d.rank() == 31 ? ~0u : (1u << d.rank()) - 1))
      out.add(u);
  }
  return out;
}

NodeSet leaf_nodes(const DynkinDiagram& d) {
  NodeSet out(d.rank());
  for (int u = 1; u <= d.rank(); ++u)
    if (d.degree(u) <= 1) out.add(u);
  return out;
}

int induced_degree(const DynkinDiagram& d, const NodeSet& K, int node) {
  assert(K.contains(node));
  return __builtin_popcount(d.adjacency_bits(node) & K.bits());
}

bool is_path_subdiagram(const DynkinDiagram& d, const NodeSet& K) {
  if (K.empty()) return false;
  auto comps = connected_components(d, K);
  if (comps.size() != 1) return false;
  for (int u : K.members())
    if (induced_degree(d, K, u) > 2) return false;
  return true;
}

namespace {

std::pair<DiagramKind, int> classify_component(const DynkinDiagram& d, const NodeSet& C) {
  const int k = C.size();
  if (k == 1) return {DiagramKind::A, 1};

  const DiagramEdge* multi = nullptr;
  for (const DiagramEdge& e : d.edges()) {
    if (!C.contains(e.a) || !C.contains(e.b)) continue;
    if (e.multiplicity == 3) return {DiagramKind::G, 2};
    if (e.multiplicity == 2) multi = &e;
  }

  if (multi != nullptr) {
    if (k == 2) return {DiagramKind::B, 2};
    int da = induced_degree(d, C, multi->a);
    int db = induced_degree(d, C, multi->b);
    if (da == 2 && db == 2) return {DiagramKind::F, 4};
    // the path ends at one endpoint of the double edge; its root length
    // decides between B (short end) and C (long end)
    int end = (da == 1) ? multi->a : multi->b;
    return {end == multi->long_node ? DiagramKind::C : DiagramKind::B, k};
  }

  bool has_branch = false;
  int branch = 0;
  for (int u : C.members()) {
    int deg = induced_degree(d, C, u);
    if (deg > 2) {
      has_branch = true;
      branch = u;
    }
  }
  if (!has_branch) return {DiagramKind::A, k};

  auto arms = connected_components(d, C.without(branch));
  std::vector<int> lens;
  for (const NodeSet& a : arms) lens.push_back(a.size());
  std::sort(lens.begin(), lens.end());
  if (lens.size() == 3 && lens[0] == 1) {
    if (lens[1] == 1) return {DiagramKind::D, k};
    if (lens[1] == 2 && lens[2] == 2) return {DiagramKind::E, 6};
    if (lens[1] == 2 && lens[2] == 3) return {DiagramKind::E, 7};
    if (lens[1] == 2 && lens[2] == 4) return {DiagramKind::E, 8};
  }
  throw std::logic_error("induced subdiagram is not of finite simple type");
}

}  // namespace

std::vector<std::pair<DiagramKind, int>> classify_subdiagram(const DynkinDiagram& d,
                                                             const NodeSet& K) {
  std::vector<std::pair<DiagramKind, int>> out;
  for (const NodeSet& C : connected_components(d, K))
    out.push_back(classify_component(d, C));
  return out;
}

}  // namespace envlat
