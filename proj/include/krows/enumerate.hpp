#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "krows/bdd.hpp"
#include "krows/counting.hpp"
#include "krows/row.hpp"
#include "krows/schedule.hpp"
#include "krows/types.hpp"

namespace krows {

/// Mod(phi) as an orthogonal DNF: one 012-row per root-to-T path (fixed bits
/// where the path branches, don't-cares elsewhere). Rows are pairwise
/// disjoint because distinct accepting paths differ in some tested bit.
inline RowSet path_dnf(const Bdd& bdd) {
  RowSet out;
  out.width = bdd.nvars();
  Row cur;
  cur.tokens.assign(bdd.nvars(), Token::any());

  std::function<void(NodeId)> walk = [&](NodeId u) {
    if (u.is_bot()) return;
    if (u.is_top()) {
      out.rows.push_back(cur);
      return;
    }
    const BddNode& nd = bdd.node(u);
    cur.tokens[nd.var - 1] = Token::zero();
    walk(nd.lo);
    cur.tokens[nd.var - 1] = Token::one();
    walk(nd.hi);
    cur.tokens[nd.var - 1] = Token::any();
  };
  walk(bdd.root());
  return out;
}

/// First enumeration method: sieve Mod(phi, k) out of the orthogonal DNF.
/// Each path row with f fixed ones and m don't-cares survives iff
/// 0 <= k-f <= m; its don't-care positions are then pinned to carry exactly
/// k-f ones (a single group, or a fixed run in the degenerate cases).
inline RowSet method1_sieve(const Bdd& bdd, int k) {
  if (k < 0 || k > bdd.nvars())
    throw std::out_of_range("k=" + std::to_string(k) + " out of [0," +
                            std::to_string(bdd.nvars()) + "]");
  RowSet out;
  out.width = bdd.nvars();
  for (const Row& path : path_dnf(bdd).rows) {
    int fixed_ones = 0;
    std::vector<int> dcs;
    for (int i = 0; i < path.width(); ++i) {
      if (path.tokens[i].kind == Token::fixed1) ++fixed_ones;
      else if (path.tokens[i].kind == Token::dontcare) dcs.push_back(i);
    }
    const int t = k - fixed_ones;
    if (t < 0 || t > static_cast<int>(dcs.size())) continue;

    Row sieved = path;
    if (t == 0 || t == static_cast<int>(dcs.size())) {
      for (int p : dcs) sieved.tokens[p] = t == 0 ? Token::zero() : Token::one();
    } else {
      for (int p : dcs) sieved.tokens[p] = Token::grp(0);
      sieved.ones_required = {static_cast<unsigned>(t)};
    }
    out.rows.push_back(std::move(sieved));
  }
  return out;
}

/// An ordered BDD over n variables accepting exactly the weight-k
/// bitstrings. States are (next variable, ones seen so far) with infeasible
/// states pruned, giving at most (k+1)(n-k+1) branching nodes.
inline Bdd exactly_k_bdd(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (k < 0 || k > n)
    throw std::out_of_range("k=" + std::to_string(k) + " out of [0," + std::to_string(n) + "]");

  BddBuilder builder(n);
  std::map<std::pair<int, int>, NodeId> state;

  // Terminal/son for "about to test x_i with j ones seen".
  auto resolve = [&](int i, int j) -> NodeId {
    if (j > k || k - j > n - i + 1) return NodeId::bot();
    if (i == n + 1) return j == k ? NodeId::top() : NodeId::bot();
    return state.at({i, j});
  };

  // Deep levels first so sons always exist before their parents.
  for (int i = n; i >= 1; --i) {
    const int jlo = std::max(0, k - (n - i + 1));
    const int jhi = std::min(i - 1, k);
    for (int j = jlo; j <= jhi; ++j)
      state[{i, j}] = builder.add_node(i, resolve(i + 1, j), resolve(i + 1, j + 1));
  }
  return std::move(builder).finish(resolve(1, 0));
}

namespace detail {

inline uint32_t node_code(NodeId x) {
  if (x.is_bot()) return 0;
  if (x.is_top()) return 1;
  return static_cast<uint32_t>(x.index()) + 2;
}

inline NodeId node_from_code(uint32_t c) {
  if (c == 0) return NodeId::bot();
  if (c == 1) return NodeId::top();
  return NodeId::branch(static_cast<int32_t>(c - 2));
}

} // namespace detail

/// Conjunction of two ordered BDDs over the same variables: the standard
/// recursive product with memoization on node pairs. Result nodes are
/// hash-consed, so the output is reduced even when the inputs are not.
inline Bdd apply_and(const Bdd& b1, const Bdd& b2) {
  if (b1.nvars() != b2.nvars())
    throw std::invalid_argument("apply_and requires equal nvars");
  const int n = b1.nvars();

  BddBuilder builder(n);
  std::unordered_map<uint64_t, NodeId> memo;   // (node1, node2) -> result
  std::unordered_map<uint64_t, NodeId> unique; // (var, lo, hi) -> node

  auto make_node = [&](int var, NodeId lo, NodeId hi) -> NodeId {
    if (lo == hi) return lo;
    assert(detail::node_code(lo) < (1u << 24) && detail::node_code(hi) < (1u << 24));
    const uint64_t key = (static_cast<uint64_t>(var) << 48) |
                         (static_cast<uint64_t>(detail::node_code(lo)) << 24) |
                         detail::node_code(hi);
    auto [it, fresh] = unique.try_emplace(key, NodeId::bot());
    if (fresh) it->second = builder.add_node(var, lo, hi);
    return it->second;
  };

  std::function<NodeId(NodeId, NodeId)> conj = [&](NodeId a, NodeId b) -> NodeId {
    if (a.is_bot() || b.is_bot()) return NodeId::bot();
    if (a.is_top() && b.is_top()) return NodeId::top();
    const uint64_t key =
        (static_cast<uint64_t>(detail::node_code(a)) << 32) | detail::node_code(b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int va = b1.var_of(a), vb = b2.var_of(b);
    const int v = std::min(va, vb);
    NodeId a0 = a, a1 = a, b0 = b, b1n = b;
    if (va == v) {
      a0 = b1.node(a).lo;
      a1 = b1.node(a).hi;
    }
    if (vb == v) {
      b0 = b2.node(b).lo;
      b1n = b2.node(b).hi;
    }
    NodeId result = make_node(v, conj(a0, b0), conj(a1, b1n));
    memo.emplace(key, result);
    return result;
  };

  NodeId root = conj(b1.root(), b2.root());
  return std::move(builder).finish(root);
}

/// Streams every model of the BDD in ascending lexicographic order,
/// branching 0 before 1 and spelling out variables the diagram skips.
inline void for_each_model(const Bdd& bdd, const std::function<void(const Bitstring&)>& emit) {
  const int n = bdd.nvars();
  Bitstring cur(n, 0);
  std::function<void(NodeId, int)> walk = [&](NodeId u, int pos) {
    if (u.is_bot()) return;
    if (pos > n) {
      if (u.is_top()) emit(cur);
      return;
    }
    if (pos < bdd.var_of(u)) { // skipped variable: both values extend
      cur[pos - 1] = 0;
      walk(u, pos + 1);
      cur[pos - 1] = 1;
      walk(u, pos + 1);
      return;
    }
    const BddNode& nd = bdd.node(u);
    cur[pos - 1] = 0;
    walk(nd.lo, pos + 1);
    cur[pos - 1] = 1;
    walk(nd.hi, pos + 1);
  };
  walk(bdd.root(), 1);
}

/// Second enumeration method: conjoin with the exactly-k BDD and stream the
/// models of the product one by one (no compression is possible here, every
/// accepting path of the product tests all n variables).
inline void method2_for_each(const Bdd& bdd, int k,
                             const std::function<void(const Bitstring&)>& emit) {
  if (k < 0 || k > bdd.nvars())
    throw std::out_of_range("k=" + std::to_string(k) + " out of [0," +
                            std::to_string(bdd.nvars()) + "]");
  for_each_model(apply_and(bdd, exactly_k_bdd(bdd.nvars(), k)), emit);
}

inline std::vector<Bitstring> method2_enumerate(const Bdd& bdd, int k) {
  std::vector<Bitstring> out;
  method2_for_each(bdd, k, [&](const Bitstring& u) { out.push_back(u); });
  return out;
}

/// Rows a node contributes, tagged with the (uniform) weight of every
/// bitstring each row denotes.
struct WeightedRowSet {
  int width = 0;
  std::vector<std::pair<Row, int>> entries;
};

/// Optional instrumentation for method3_enumerate: the per-node weighted
/// row sets as they were built, and which (node, weight) sub-results the
/// assembly actually consumed.
struct Method3Trace {
  std::vector<WeightedRowSet> per_node;
  std::vector<std::set<int>> consumed;
};

/// Third enumeration method: schedule-driven bottom-up assembly. For each
/// node alpha (shelling from below) and each weight i in card2(alpha), the
/// rows of Mod(phi_alpha, i) are built by prefixing son rows with gap
/// gadgets:
///
///   Mod(alpha, i) = U_w gadget(0, gap0, w) x Mod(lo, i-w)
///                 U U_w gadget(1, gap1, w) x Mod(hi, i-1-w)
///
/// keeping only son weights in the son's card2 set (which card2's
/// construction guarantees is everything nonempty that is ever needed).
/// A (node, weight) set is built once and shared by all upper covers. The
/// result is a disjoint union of fixed-weight-k rows covering Mod(phi, k).
inline RowSet method3_enumerate(const Bdd& bdd, int k, Method3Trace* trace = nullptr) {
  const int n = bdd.nvars();
  if (k < 0 || k > n)
    throw std::out_of_range("k=" + std::to_string(k) + " out of [0," + std::to_string(n) + "]");

  RowSet out;
  out.width = n;
  if (trace) {
    trace->per_node.assign(bdd.num_nodes(), WeightedRowSet{});
    trace->consumed.assign(bdd.num_nodes(), {});
  }

  if (bdd.root().is_bot()) return out;
  if (bdd.root().is_top()) {
    out.rows.push_back(gap_gadget(std::nullopt, n, k)); // n leading free variables
    return out;
  }

  const Schedule sched = make_schedule(bdd, k);
  std::vector<std::map<int, std::vector<Row>>> rows(bdd.num_nodes());

  // 0-son contributions before 1-son contributions, gadget weight ascending.
  auto son_contribution = [&](const BddNode& nd, NodeId son, int bit, int target,
                              std::vector<Row>& acc) {
    if (son.is_bot()) return;
    const int gap = bdd.var_of(son) - nd.var - 1;
    for (int w = 0; w <= gap; ++w) {
      const int j = target - bit - w;
      if (son.is_top()) {
        if (j == 0) acc.push_back(gap_gadget(bit, gap, w));
        continue;
      }
      if (!sched.card2[son.index()].contains(j)) continue;
      if (trace) trace->consumed[son.index()].insert(j);
      const Row prefix = gap_gadget(bit, gap, w);
      for (const Row& r : rows[son.index()].at(j)) acc.push_back(concat(prefix, r));
    }
  };

  for (int32_t i = 0; i < bdd.num_nodes(); ++i) {
    const CardSet& c2 = sched.card2[i];
    if (c2.empty()) continue; // pruned: no parent ever asks for this node
    const BddNode& nd = bdd.node(i);
    for (int weight : c2.to_list()) {
      std::vector<Row> acc;
      son_contribution(nd, nd.lo, 0, weight, acc);
      son_contribution(nd, nd.hi, 1, weight, acc);
      rows[i][weight] = std::move(acc);
    }
    if (trace) {
      WeightedRowSet& w = trace->per_node[i];
      w.width = n - nd.var + 1;
      for (const auto& [weight, rs] : rows[i])
        for (const Row& r : rs) w.entries.emplace_back(r, weight);
    }
  }

  // Root assembly: the leading free variables form a bitless gadget.
  const int32_t root = bdd.root().index();
  const int prefix_len = bdd.node(root).var - 1;
  for (int w = 0; w <= prefix_len; ++w) {
    const int j = k - w;
    if (!sched.card2[root].contains(j)) continue;
    if (trace) trace->consumed[root].insert(j);
    const Row prefix = gap_gadget(std::nullopt, prefix_len, w);
    for (const Row& r : rows[root].at(j)) out.rows.push_back(concat(prefix, r));
  }
  return out;
}

} // namespace krows
