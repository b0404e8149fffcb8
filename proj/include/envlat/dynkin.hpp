#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace envlat {

enum class DiagramKind : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

char letter(DiagramKind k);
DiagramKind kind_from_letter(char c);  // throws invalid_input

// Inclusive rank range of a kind.  The types are kept disjoint: B starts at
// rank 2, C at 3, D at 4, so B2=C2 and D3=A3 never appear under two names.
std::pair<int, int> rank_range(DiagramKind k);
bool rank_in_range(DiagramKind k, int rank);

std::string type_name(DiagramKind k, int rank);  // "A4", "F4", ...

// A subset of the node set {1..l} of an ambient diagram of rank l.
// Set algebra stays inside the ambient rank.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(int ambient_rank) : rank_(ambient_rank) {
    assert(ambient_rank >= 0 && ambient_rank <= 31);
  }

  static NodeSet full(int ambient_rank) {
    return from_bits(ambient_rank,
                     ambient_rank == 0 ? 0u : (UINT32_C(1) << ambient_rank) - 1);
  }
  static NodeSet of(int ambient_rank, std::initializer_list<int> nodes) {
    NodeSet s(ambient_rank);
    for (int n : nodes) s.add(n);
    return s;
  }
  static NodeSet from_bits(int ambient_rank, std::uint32_t bits) {
    NodeSet s(ambient_rank);
    assert(ambient_rank == 31 || (bits >> ambient_rank) == 0);
    s.bits_ = bits;
    return s;
  }

  int ambient_rank() const { return rank_; }
  std::uint32_t bits() const { return bits_; }
  int size() const { return __builtin_popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return *this == full(rank_); }

  bool contains(int node) const {
    assert(node >= 1 && node <= rank_);
    return (bits_ >> (node - 1)) & 1u;
  }
  NodeSet& add(int node) {
    assert(node >= 1 && node <= rank_);
    bits_ |= UINT32_C(1) << (node - 1);
    return *this;
  }
  NodeSet& remove(int node) {
    assert(node >= 1 && node <= rank_);
    bits_ &= ~(UINT32_C(1) << (node - 1));
    return *this;
  }
  NodeSet with(int node) const { return NodeSet(*this).add(node); }
  NodeSet without(int node) const { return NodeSet(*this).remove(node); }

  NodeSet united(const NodeSet& o) const {
    assert(rank_ == o.rank_);
    return from_bits(rank_, bits_ | o.bits_);
  }
  NodeSet intersected(const NodeSet& o) const {
    assert(rank_ == o.rank_);
    return from_bits(rank_, bits_ & o.bits_);
  }
  NodeSet minus(const NodeSet& o) const {
    assert(rank_ == o.rank_);
    return from_bits(rank_, bits_ & ~o.bits_);
  }
  NodeSet complement() const { return full(rank_).minus(*this); }

  bool subset_of(const NodeSet& o) const {
    assert(rank_ == o.rank_);
    return (bits_ & ~o.bits_) == 0;
  }
  bool intersects(const NodeSet& o) const {
    assert(rank_ == o.rank_);
    return (bits_ & o.bits_) != 0;
  }

  std::vector<int> members() const;
  int min_node() const;  // smallest member, 0 if empty

  bool operator==(const NodeSet&) const = default;

  std::string to_string() const;  // "{1,2}" with sorted members
 private:
  int rank_ = 0;
  std::uint32_t bits_ = 0;
};

// Order on the ascending member lists:  {1,3} < {2},  {1} < {1,2},  {} first.
bool lex_less(const NodeSet& a, const NodeSet& b);

struct DiagramEdge {
  int a = 0, b = 0;      // endpoints, a < b
  int multiplicity = 1;  // 1, 2 or 3
  int long_node = 0;     // for multiplicity > 1: the longer-root endpoint
};

// A Coxeter-Dynkin diagram of simple type in Bourbaki numbering:
//   A_n : 1-2-...-n
//   B_n : 1-...-(n-1)=>n          (node n short)
//   C_n : 1-...-(n-1)<=n          (node n long)
//   D_n : 1-...-(n-2), with n-1 and n both joined to n-2
//   E_n : path 1-3-4-...-n, with 2 joined to 4
//   F_4 : 1-2=>3-4                (nodes 3,4 short)
//   G_2 : 1<=2 triple edge        (node 1 short)
class DynkinDiagram {
 public:
  DiagramKind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::string name() const { return type_name(kind_, rank_); }

  NodeSet nodes() const { return NodeSet::full(rank_); }
  const std::vector<DiagramEdge>& edges() const { return edges_; }

  bool adjacent(int a, int b) const {
    assert(a >= 1 && a <= rank_ && b >= 1 && b <= rank_);
    return a != b && ((adj_[a - 1] >> (b - 1)) & 1u);
  }
  int edge_multiplicity(int a, int b) const;  // 0 when not adjacent
  std::uint32_t adjacency_bits(int node) const {
    assert(node >= 1 && node <= rank_);
    return adj_[node - 1];
  }
  int degree(int node) const { return __builtin_popcount(adjacency_bits(node)); }

  // Cartan matrix in the convention  s_i(alpha_j) = alpha_j - c(i,j) alpha_i,
  // c(i,j) = 2(alpha_i,alpha_j)/(alpha_i,alpha_i).
  int cartan(int i, int j) const {
    assert(i >= 1 && i <= rank_ && j >= 1 && j <= rank_);
    return cartan_[(i - 1) * rank_ + (j - 1)];
  }

 private:
  DynkinDiagram(DiagramKind k, int rank, std::vector<DiagramEdge> edges);
  friend DynkinDiagram build_diagram(DiagramKind, int);

  DiagramKind kind_;
  int rank_;
  std::vector<DiagramEdge> edges_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> cartan_;
};

DynkinDiagram build_diagram(DiagramKind k, int rank);

// "A4", "f4", "D5" (case-insensitive).
DynkinDiagram parse_diagram(std::string_view spec);

// Maximal connected pieces of the induced subdiagram on K, sorted by their
// smallest label.  Empty K gives an empty list.
std::vector<NodeSet> connected_components(const DynkinDiagram& d, const NodeSet& K);

// Nodes of K adjacent to some node outside K.
NodeSet end_nodes(const DynkinDiagram& d, const NodeSet& K);

// Nodes of degree <= 1 in the full diagram.
NodeSet leaf_nodes(const DynkinDiagram& d);

// Isomorphism type of each connected component of the induced subdiagram on
// K, multiplicities and arrow directions respected; ordered by component.
std::vector<std::pair<DiagramKind, int>> classify_subdiagram(const DynkinDiagram& d,
                                                             const NodeSet& K);

int induced_degree(const DynkinDiagram& d, const NodeSet& K, int node);

// True when the induced subdiagram on K is connected with all induced
// degrees <= 2 (single nodes count as paths).
bool is_path_subdiagram(const DynkinDiagram& d, const NodeSet& K);

}  // namespace envlat
