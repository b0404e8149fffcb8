#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "envlat/bigint.hpp"
#include "envlat/caps.hpp"
#include "envlat/dynkin.hpp"

namespace envlat {

// An element of the Weyl group as its exact integer action on the simple-root
// basis: column j of mat holds the coordinates of w(alpha_j).  Products
// follow the column convention, mat(u*v) = mat(u) * mat(v), so u*v acts by v
// first; tests pin the convention through length(s1*s2) == 2 in A2.
struct WeylElement {
  int rank = 0;
  std::vector<std::int8_t> mat;  // row-major rank x rank
  int length = 0;

  bool operator==(const WeylElement& o) const { return mat == o.mat; }
  std::int8_t entry(int i, int j) const { return mat[(i - 1) * rank + (j - 1)]; }
};

// Complete enumeration of a finite Weyl group, breadth-first from the
// identity under right multiplication by the simple reflections.  Immutable
// once built; all queries are pure.
class WeylGroup {
 public:
  using Index = std::uint32_t;

  static WeylGroup enumerate(const DynkinDiagram& d, std::uint64_t cap = kDefaultWeylCap);

  const DynkinDiagram& diagram() const { return diagram_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& element(Index i) const { return elements_[i]; }

  Index identity() const { return 0; }
  Index generator(int s) const;  // index of the simple reflection s
  Index index_of(const WeylElement& w) const;

  int length(Index i) const { return elements_[i].length; }
  // Canonical reduced word, recovered by greedy descent-following (smallest
  // right descent first); empty for the identity.
  const std::vector<std::uint8_t>& word(Index i) const { return words_[i]; }

  Index mul(Index a, Index b) const;
  Index inverse(Index a) const { return inverse_[a]; }
  Index right_mul_gen(Index a, int s) const {
    return right_[a * static_cast<Index>(diagram_.rank()) + (s - 1)];
  }
  bool right_descent(Index a, int s) const {
    return length(right_mul_gen(a, s)) < length(a);
  }

  Index longest() const { return longest_; }

  Index from_word(const std::vector<int>& word) const;

  // Subword test against the cached reduced word of w (lifting property).
  bool bruhat_leq(Index u, Index w) const;

  // Minimal-length representative of the coset x W_I.
  Index min_coset_rep(Index x, const NodeSet& I) const;
  // The parabolic subgroup W_I as a sorted list of indices.
  std::vector<Index> parabolic_elements(const NodeSet& I) const;

 private:
  explicit WeylGroup(const DynkinDiagram& d) : diagram_(d) {}

  struct MatHash {
    std::size_t operator()(const std::vector<std::int8_t>& m) const {
      std::size_t h = 1469598103934665603ull;
      for (std::int8_t v : m) {
        h ^= static_cast<std::size_t>(static_cast<std::uint8_t>(v));
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  DynkinDiagram diagram_;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::vector<Index> right_;    // size() * rank, right multiplication table
  std::vector<Index> inverse_;
  Index longest_ = 0;
  std::unordered_map<std::vector<std::int8_t>, Index, MatHash> index_;
};

// D_I: the elements with no right descent in I, one per coset of W_I, sorted
// by group index.
struct CosetReps {
  NodeSet subset;
  std::vector<WeylGroup::Index> reps;
};
CosetReps min_coset_reps(const WeylGroup& W, const NodeSet& I);

// |W_K| as a product of the standard orders of the components of K.
BigInt weyl_order(const DynkinDiagram& d, const NodeSet& K);
BigInt weyl_order(DiagramKind k, int rank);

// |W| / |W_I|, exact.
BigInt parabolic_index(const DynkinDiagram& d, const NodeSet& I);

}  // namespace envlat
