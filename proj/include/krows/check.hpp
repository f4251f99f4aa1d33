#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "krows/bdd.hpp"
#include "krows/counting.hpp"
#include "krows/enumerate.hpp"
#include "krows/oracle.hpp"
#include "krows/row.hpp"
#include "krows/schedule.hpp"

namespace krows {

/// Outcome of the cross-validation suite on one BDD.
struct CheckReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_pass = true;

  void record(const std::string& label, bool ok) {
    checks.emplace_back(label, ok);
    all_pass = all_pass && ok;
  }
};

namespace detail {

inline std::vector<Bitstring> expand_sorted(const RowSet& rs) {
  std::vector<Bitstring> out;
  for (const Row& r : rs.rows) {
    auto part = expand(r);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool pairwise_disjoint(const RowSet& rs) {
  for (size_t i = 0; i < rs.rows.size(); ++i)
    for (size_t j = i + 1; j < rs.rows.size(); ++j)
      if (!rows_disjoint(rs.rows[i], rs.rows[j])) return false;
  return true;
}

inline bool fixed_weight(const Row& r, int k) {
  int ones = 0;
  for (const Token& t : r.tokens) {
    if (t.kind == Token::dontcare) return false;
    if (t.kind == Token::fixed1) ++ones;
  }
  for (unsigned t : r.ones_required) ones += static_cast<int>(t);
  return ones == k;
}

} // namespace detail

/// Cross-validates counting, the schedule, and all three enumeration
/// methods against the brute-force oracle, for every k up to kmax.
/// Every named invariant becomes one labeled pass/fail entry.
inline CheckReport run_checks(const Bdd& bdd, int kmax = -1, int limit = 20) {
  const int n = bdd.nvars();
  if (kmax < 0 || kmax > n) kmax = n;
  CheckReport report;

  const OracleReport oracle = brute_force(bdd, limit, /*collect_models=*/true);
  const GenPoly poly = gen_poly(bdd);

  report.record("count-vs-oracle", count_models(bdd) == oracle.total_models);

  {
    BigInt sum = 0;
    bool match = true;
    for (int k = 0; k <= n; ++k) {
      sum += poly[k];
      match = match && poly[k] == oracle.per_weight[k];
    }
    report.record("genpoly-vs-oracle", match);
    report.record("genpoly-sum", sum == oracle.total_models);
  }

  const auto card1 = compute_card1(bdd);
  {
    bool match = true;
    for (int32_t i = 0; i < bdd.num_nodes() && match; ++i) {
      const Bdd sub = sub_bdd(bdd, NodeId::branch(i));
      const OracleReport sub_oracle = brute_force(sub, limit);
      CardSet expected(n); // same universe as card1 for the comparison
      for (int w = 0; w <= sub.nvars(); ++w)
        if (sub_oracle.per_weight[w] > 0) expected.add(w);
      match = card1[i] == expected;
    }
    report.record("card1-vs-oracle", match);
  }

  bool m1_set = true, m1_disjoint = true, m1_conserved = true;
  bool m2_set = true, m2_weights = true;
  bool m3_set = true, m3_disjoint = true, m3_conserved = true, m3_weights = true;
  bool card2_subset = true, schedule_tight = true;

  for (int k = 0; k <= kmax; ++k) {
    std::vector<Bitstring> expected;
    for (const Bitstring& u : oracle.models)
      if (static_cast<int>(weight_of(u)) == k) expected.push_back(u);

    const RowSet m1 = method1_sieve(bdd, k);
    m1_set = m1_set && detail::expand_sorted(m1) == expected;
    m1_disjoint = m1_disjoint && detail::pairwise_disjoint(m1);
    m1_conserved = m1_conserved && m1.total_cardinality() == poly[k];

    const auto m2 = method2_enumerate(bdd, k);
    {
      auto sorted = m2;
      std::sort(sorted.begin(), sorted.end());
      m2_set = m2_set && sorted == expected;
      for (const Bitstring& u : m2)
        m2_weights = m2_weights && static_cast<int>(weight_of(u)) == k;
    }

    Method3Trace trace;
    const RowSet m3 = method3_enumerate(bdd, k, &trace);
    m3_set = m3_set && detail::expand_sorted(m3) == expected;
    m3_disjoint = m3_disjoint && detail::pairwise_disjoint(m3);
    m3_conserved = m3_conserved && m3.total_cardinality() == poly[k];
    for (const Row& r : m3.rows) m3_weights = m3_weights && detail::fixed_weight(r, k);

    const auto card2 = compute_card2(bdd, k, card1);
    for (int32_t i = 0; i < bdd.num_nodes(); ++i) {
      CardSet both = card2[i];
      both &= card1[i];
      card2_subset = card2_subset && both == card2[i];
      // The schedule is tight: assembly consumed exactly the card2 entries.
      std::vector<int> used(trace.consumed[i].begin(), trace.consumed[i].end());
      schedule_tight = schedule_tight && used == card2[i].to_list();
    }
  }

  report.record("method1-vs-oracle", m1_set);
  report.record("method1-disjoint", m1_disjoint);
  report.record("method1-conservation", m1_conserved);
  report.record("method2-vs-oracle", m2_set);
  report.record("method2-weights", m2_weights);
  report.record("method3-vs-oracle", m3_set);
  report.record("method3-disjoint", m3_disjoint);
  report.record("method3-conservation", m3_conserved);
  report.record("method3-weights", m3_weights);
  report.record("card2-subset-of-card1", card2_subset);
  report.record("schedule-tight", schedule_tight);
  return report;
}

} // namespace krows
