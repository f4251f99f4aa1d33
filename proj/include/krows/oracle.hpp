#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "krows/bdd.hpp"
#include "krows/types.hpp"

namespace krows {

/// Result of a full 2^n truth-table sweep.
struct OracleReport {
  int n = 0;
  BigInt total_models = 0;
  std::vector<BigInt> per_weight;  // n+1 entries
  std::vector<Bitstring> models;   // filled only on request
};

/// Evaluates every bitstring in {0,1}^n through the diagram. The reference
/// everything else is checked against; refuses n > limit.
inline OracleReport brute_force(const Bdd& bdd, int limit = 20, bool collect_models = false) {
  const int n = bdd.nvars();
  if (n > limit)
    throw std::invalid_argument("n=" + std::to_string(n) + " exceeds oracle limit " +
                                std::to_string(limit));
  OracleReport report;
  report.n = n;
  report.per_weight.assign(n + 1, BigInt(0));

  Bitstring u(n, 0);
  for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
    for (int i = 0; i < n; ++i) u[i] = (bits >> i) & 1;
    if (!evaluate(bdd, u)) continue;
    report.total_models += 1;
    report.per_weight[weight_of(u)] += 1;
    if (collect_models) report.models.push_back(u);
  }
  if (collect_models) std::sort(report.models.begin(), report.models.end());
  return report;
}

/// Deterministic random ordered BDD for property tests. Node variables walk
/// down from x_n toward x_1; sons are picked among recently created nodes
/// with a bias toward nearby levels, so small and mid-size gaps (the
/// interesting gadget cases) show up often, with occasional terminal sons.
inline Bdd random_bdd(int n, int num_nodes, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (num_nodes < 0) throw std::invalid_argument("node count must be nonnegative");

  std::mt19937_64 rng(seed);
  BddBuilder builder(n);
  if (num_nodes == 0)
    return std::move(builder).finish(rng() % 2 ? NodeId::top() : NodeId::bot());

  std::vector<std::pair<NodeId, int>> pool; // (node, var), creation order
  for (int i = 0; i < num_nodes; ++i) {
    // Descending level target with jitter; the last node lands near x_1.
    int v = 1 + static_cast<int>((static_cast<int64_t>(num_nodes - 1 - i) * (n - 1)) /
                                 std::max(1, num_nodes - 1));
    v += static_cast<int>(rng() % 3) - 1;
    v = std::clamp(v, 1, n);

    auto pick_son = [&]() -> NodeId {
      if (rng() % 6 == 0 || pool.empty()) return rng() % 2 ? NodeId::top() : NodeId::bot();
      std::vector<NodeId> eligible;
      for (auto it = pool.rbegin(); it != pool.rend(); ++it)
        if (it->second > v) eligible.push_back(it->first);
      if (eligible.empty()) return rng() % 2 ? NodeId::top() : NodeId::bot();
      // Geometric walk from the most recent (nearest-level) candidate.
      size_t idx = 0;
      while (idx + 1 < eligible.size() && rng() % 2 == 0) ++idx;
      return eligible[idx];
    };

    NodeId node = builder.add_node(v, pick_son(), pick_son());
    pool.emplace_back(node, v);
  }
  return std::move(builder).finish(pool.back().first);
}

} // namespace krows
