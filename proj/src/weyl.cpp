// Exact Weyl group computation: orders by formula, breadth-first enumeration,
// length, Bruhat order and minimal coset representatives.

#include "envlat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "envlat/errors.hpp"

namespace envlat {

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Right multiplication by the simple reflection s on the matrix action:
// column j - cartan(s,j) * column s, taken against the old column s.
std::vector<std::int8_t> right_mul_matrix(const DynkinDiagram& d,
                                          const std::vector<std::int8_t>& m, int s) {
  const int l = d.rank();
  std::vector<std::int8_t> out = m;
  std::vector<int> col_s(static_cast<std::size_t>(l));
  for (int r = 0; r < l; ++r) col_s[r] = m[r * l + (s - 1)];
  for (int j = 1; j <= l; ++j) {
    int c = d.cartan(s, j);
    if (c == 0) continue;
    for (int r = 0; r < l; ++r)
      out[r * l + (j - 1)] = static_cast<std::int8_t>(out[r * l + (j - 1)] - c * col_s[r]);
  }
  return out;
}

std::vector<std::int8_t> identity_matrix(int l) {
  std::vector<std::int8_t> m(static_cast<std::size_t>(l) * l, 0);
  for (int i = 0; i < l; ++i) m[i * l + i] = 1;
  return m;
}

}  // namespace

BigInt weyl_order(DiagramKind k, int rank) {
  switch (k) {
    case DiagramKind::A: return factorial(rank + 1);
    case DiagramKind::B:
    case DiagramKind::C: return (BigInt(1) << rank) * factorial(rank);
    case DiagramKind::D: return (BigInt(1) << (rank - 1)) * factorial(rank);
    case DiagramKind::G: return 12;
    case DiagramKind::F: return 1152;
    case DiagramKind::E:
      switch (rank) {
        case 6: return 51840;
        case 7: return 2903040;
        default: return 696729600;
      }
  }
  return 1;
}

BigInt weyl_order(const DynkinDiagram& d, const NodeSet& K) {
  BigInt r = 1;
  for (auto [k, rank] : classify_subdiagram(d, K)) r *= weyl_order(k, rank);
  return r;
}

BigInt parabolic_index(const DynkinDiagram& d, const NodeSet& I) {
  BigInt whole = weyl_order(d, d.nodes());
  BigInt part = weyl_order(d, I);
  BigInt q, r;
  boost::multiprecision::divide_qr(whole, part, q, r);
  if (r != 0) throw std::logic_error("parabolic order does not divide the group order");
  return q;
}

WeylGroup WeylGroup::enumerate(const DynkinDiagram& d, std::uint64_t cap) {
  BigInt order = weyl_order(d, d.nodes());
  if (order > cap) {
    std::ostringstream os;
    os << "Weyl group of " << d.name() << " has order " << order
       << ", which exceeds the enumeration cap " << cap;
    throw resource_limit(os.str());
  }

  WeylGroup W(d);
  const int l = d.rank();
  const std::size_t n = static_cast<std::size_t>(order);
  W.elements_.reserve(n);
  W.right_.assign(n * l, 0);
  W.index_.reserve(n * 2);

  W.elements_.push_back({l, identity_matrix(l), 0});
  W.index_.emplace(W.elements_[0].mat, 0);

  for (Index i = 0; i < W.elements_.size(); ++i) {
    for (int s = 1; s <= l; ++s) {
      auto m = right_mul_matrix(d, W.elements_[i].mat, s);
      auto it = W.index_.find(m);
      Index j;
      if (it == W.index_.end()) {
        j = static_cast<Index>(W.elements_.size());
        W.elements_.push_back({l, std::move(m), W.elements_[i].length + 1});
        W.index_.emplace(W.elements_[j].mat, j);
      } else {
        j = it->second;
      }
      W.right_[i * l + (s - 1)] = j;
    }
  }
  if (W.elements_.size() != n)
    throw std::logic_error("enumeration closed at " + std::to_string(W.elements_.size()) +
                           " elements, formula order is " + order.str());

  // canonical reduced words by greedy descent-following
  W.words_.resize(n);
  for (Index i = 0; i < n; ++i) {
    std::vector<std::uint8_t> rev;
    Index w = i;
    while (W.elements_[w].length > 0) {
      for (int s = 1; s <= l; ++s) {
        Index ws = W.right_[w * l + (s - 1)];
        if (W.elements_[ws].length < W.elements_[w].length) {
          rev.push_back(static_cast<std::uint8_t>(s));
          w = ws;
          break;
        }
      }
    }
    W.words_[i].assign(rev.rbegin(), rev.rend());
  }

  W.inverse_.resize(n);
  int max_len = -1;
  for (Index i = 0; i < n; ++i) {
    Index v = 0;
    const auto& wd = W.words_[i];
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) v = W.right_[v * l + (*it - 1)];
    W.inverse_[i] = v;
    if (W.elements_[i].length > max_len) {
      max_len = W.elements_[i].length;
      W.longest_ = i;
    }
  }
  return W;
}

WeylGroup::Index WeylGroup::generator(int s) const {
  assert(s >= 1 && s <= diagram_.rank());
  return right_[0 * diagram_.rank() + (s - 1)];
}

WeylGroup::Index WeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w.mat);
  if (it == index_.end()) throw invalid_input("element does not belong to this Weyl group");
  return it->second;
}

WeylGroup::Index WeylGroup::mul(Index a, Index b) const {
  const int l = diagram_.rank();
  const auto& A = elements_[a].mat;
  const auto& B = elements_[b].mat;
  std::vector<std::int8_t> m(static_cast<std::size_t>(l) * l);
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) {
      int acc = 0;
      for (int k = 0; k < l; ++k) acc += int(A[r * l + k]) * int(B[k * l + c]);
      m[r * l + c] = static_cast<std::int8_t>(acc);
    }
  auto it = index_.find(m);
  if (it == index_.end()) throw std::logic_error("product left the enumerated group");
  return it->second;
}

WeylGroup::Index WeylGroup::from_word(const std::vector<int>& word) const {
  Index w = 0;
  for (int s : word) w = right_mul_gen(w, s);
  return w;
}

bool WeylGroup::bruhat_leq(Index u, Index w) const {
  if (length(u) > length(w)) return false;
  Index v = u;
  const auto& wd = words_[w];
  // consume the reduced word of w from the right; the lifting property keeps
  // the answer invariant at every step
  for (auto it = wd.rbegin(); it != wd.rend(); ++it) {
    int s = *it;
    Index vs = right_mul_gen(v, s);
    if (elements_[vs].length < elements_[v].length) v = vs;
  }
  return v == 0;
}

WeylGroup::Index WeylGroup::min_coset_rep(Index x, const NodeSet& I) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : I.members()) {
      Index xs = right_mul_gen(x, s);
      if (elements_[xs].length < elements_[x].length) {
        x = xs;
        moved = true;
        break;
      }
    }
  }
  return x;
}

CosetReps min_coset_reps(const WeylGroup& W, const NodeSet& I) {
  CosetReps out{I, {}};
  const auto nodes = I.members();
  for (WeylGroup::Index i = 0; i < W.size(); ++i) {
    bool rep = true;
    for (int s : nodes)
      if (W.right_descent(i, s)) {
        rep = false;
        break;
      }
    if (rep) out.reps.push_back(i);
  }
  return out;
}

std::vector<WeylGroup::Index> WeylGroup::parabolic_elements(const NodeSet& I) const {
  std::vector<Index> out{0};
  std::vector<bool> seen(elements_.size(), false);
  seen[0] = true;
  std::deque<Index> queue{0};
  const auto nodes = I.members();
  while (!queue.empty()) {
    Index w = queue.front();
    queue.pop_front();
    for (int s : nodes) {
      Index ws = right_mul_gen(w, s);
      if (!seen[ws]) {
        seen[ws] = true;
        out.push_back(ws);
        queue.push_back(ws);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace envlat
