#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "krows/bdd.hpp"

namespace krows {

/// A subset of the attainable cardinalities [0, n], stored as an (n+1)-bit
/// set so j+S shift-unions are single bitset operations.
class CardSet {
public:
  CardSet() = default;
  explicit CardSet(int n) : bits_(n + 1) {}

  static CardSet single(int n, int i) {
    CardSet s(n);
    s.add(i);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()) - 1; }
  bool empty() const { return bits_.none(); }
  size_t count() const { return bits_.count(); }
  bool contains(int i) const { return i >= 0 && i <= universe() && bits_.test(i); }

  void add(int i) {
    if (i >= 0 && i <= universe()) bits_.set(i);
  }

  /// j + S, clipped to [0, n].
  CardSet shifted_up(int j) const {
    CardSet out(*this);
    out.bits_ <<= j;
    return out;
  }

  /// S - j, clipped to [0, n].
  CardSet shifted_down(int j) const {
    CardSet out(*this);
    out.bits_ >>= j;
    return out;
  }

  CardSet& operator|=(const CardSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  CardSet& operator&=(const CardSet& o) {
    bits_ &= o.bits_;
    return *this;
  }

  int min() const { return static_cast<int>(bits_.find_first()); }
  int max() const {
    for (int i = universe(); i >= 0; --i)
      if (bits_.test(i)) return i;
    return -1;
  }

  std::vector<int> to_list() const {
    std::vector<int> out;
    for (size_t i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = bits_.find_next(i))
      out.push_back(static_cast<int>(i));
    return out;
  }

  /// Interval-list rendering: "[0,8]", "[2,2]", "[0,2],[5,7]", or "{}".
  std::string to_intervals() const {
    if (empty()) return "{}";
    std::ostringstream out;
    bool first = true;
    int i = 0;
    while (i <= universe()) {
      if (!bits_.test(i)) {
        ++i;
        continue;
      }
      int j = i;
      while (j + 1 <= universe() && bits_.test(j + 1)) ++j;
      out << (first ? "" : ",") << '[' << i << ',' << j << ']';
      first = false;
      i = j + 1;
    }
    return out.str();
  }

  friend bool operator==(const CardSet& a, const CardSet& b) { return a.bits_ == b.bits_; }

private:
  boost::dynamic_bitset<> bits_;
};

/// card1(alpha) for every branching node, at the node's own level: the set
/// of i with Mod(phi_alpha, i) nonempty. Computed by shelling from below:
///   card1(alpha) = U_{j=0}^{gap0} (j + card1(lo)) U U_{j=1}^{1+gap1} (j + card1(hi))
/// with card1(top) = {0}, card1(bot) = {} and terminals at level n+1.
inline std::vector<CardSet> compute_card1(const Bdd& bdd) {
  const int n = bdd.nvars();
  std::vector<CardSet> card1(bdd.num_nodes(), CardSet(n));

  auto son_set = [&](NodeId s) -> CardSet {
    if (s.is_top()) return CardSet::single(n, 0);
    if (s.is_bot()) return CardSet(n);
    return card1[s.index()];
  };

  for (int32_t i = 0; i < bdd.num_nodes(); ++i) {
    const BddNode& nd = bdd.node(i);
    CardSet acc(n);
    CardSet lo = son_set(nd.lo);
    for (int j = 0; j <= bdd.var_of(nd.lo) - nd.var - 1; ++j) acc |= lo.shifted_up(j);
    CardSet hi = son_set(nd.hi);
    for (int j = 1; j <= bdd.var_of(nd.hi) - nd.var; ++j) acc |= hi.shifted_up(j);
    card1[i] = acc;
  }
  return card1;
}

/// card1 of the whole function phi at the global level: the root's set
/// widened by the leading free variables. For terminal roots this is [0,n]
/// (constant true) or {} (constant false).
inline CardSet global_card1(const Bdd& bdd, const std::vector<CardSet>& card1) {
  const int n = bdd.nvars();
  CardSet base = bdd.root().is_top()   ? CardSet::single(n, 0)
                 : bdd.root().is_bot() ? CardSet(n)
                                       : card1[bdd.root().index()];
  CardSet out(n);
  for (int w = 0; w <= bdd.var_of(bdd.root()) - 1; ++w) out |= base.shifted_up(w);
  return out;
}

/// card2(alpha) for every branching node: the cardinalities whose model sets
/// are actually needed to assemble Mod(phi, k). Shelling from above: each
/// parent edge (beta, bit) with gap g contributes
///   S(beta) = U_{i in card2(beta)} U_{w=0}^{g} {i - bit - w}
/// and card2(alpha) = (U S(beta)) intersect card1(alpha). The root's leading
/// free variables act as a virtual parent edge with gap var(root)-1 and no
/// branch bit.
inline std::vector<CardSet> compute_card2(const Bdd& bdd, int k,
                                          const std::vector<CardSet>& card1) {
  const int n = bdd.nvars();
  if (k < 0 || k > n)
    throw std::out_of_range("k=" + std::to_string(k) + " out of [0," + std::to_string(n) + "]");
  std::vector<CardSet> card2(bdd.num_nodes(), CardSet(n));
  if (bdd.root().is_terminal()) return card2;

  const int32_t root = bdd.root().index();
  {
    CardSet target = CardSet::single(n, k);
    CardSet s(n);
    for (int w = 0; w <= bdd.node(root).var - 1; ++w) s |= target.shifted_down(w);
    s &= card1[root];
    card2[root] = s;
  }

  auto covers = upper_covers(bdd);
  // Reverse storage order visits every parent before its sons.
  for (int32_t i = bdd.num_nodes() - 1; i >= 0; --i) {
    if (i == root) continue;
    CardSet s(n);
    for (const ParentEdge& edge : covers[i]) {
      const BddNode& parent = bdd.node(edge.parent);
      const int gap = bdd.node(i).var - parent.var - 1;
      const CardSet& from = card2[edge.parent.index()];
      for (int w = 0; w <= gap; ++w) s |= from.shifted_down(edge.bit + w);
    }
    s &= card1[i];
    card2[i] = s;
  }
  return card2;
}

/// The full enumeration schedule for one target cardinality.
struct Schedule {
  int k = 0;
  std::vector<CardSet> card1; // per node, own level
  CardSet card1_root;         // whole function, global level
  std::vector<CardSet> card2; // per node, own level
};

inline Schedule make_schedule(const Bdd& bdd, int k) {
  Schedule s;
  s.k = k;
  s.card1 = compute_card1(bdd);
  s.card1_root = global_card1(bdd, s.card1);
  s.card2 = compute_card2(bdd, k, s.card1);
  return s;
}

} // namespace krows
