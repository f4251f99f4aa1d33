#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "krows/krows.hpp"

namespace krows::testing {

// 10-variable worked example used across the suites: six branching nodes
// a..f, two of them testing the same variable, shelling order a..f.
inline constexpr const char* kExampleText =
    "nvars 10\n"
    "node a 7 T F\n"
    "node b 8 F T\n"
    "node c 7 F b\n"
    "node d 4 T c\n"
    "node e 3 a b\n"
    "node f 1 e d\n"
    "root f\n";

inline Bdd make_example() { return parse_bdd(std::string_view(kExampleText)); }

inline std::vector<Bitstring> expand_sorted(const RowSet& rs) {
  return detail::expand_sorted(rs);
}

inline bool pairwise_disjoint(const RowSet& rs) { return detail::pairwise_disjoint(rs); }

inline std::vector<Bitstring> weight_slice(const std::vector<Bitstring>& models, int k) {
  std::vector<Bitstring> out;
  for (const Bitstring& u : models)
    if (static_cast<int>(weight_of(u)) == k) out.push_back(u);
  return out;
}

using WeightedRows = std::multiset<std::pair<int, std::string>>;

inline WeightedRows weighted_strings(const WeightedRowSet& ws) {
  WeightedRows out;
  for (const auto& [row, weight] : ws.entries) out.emplace(weight, row_to_string(row));
  return out;
}

// Weight-trimmed golden set for the fixture's node d over weights 1..3
// (width 7, variables x4..x10).
inline WeightedRows example_table_d() {
  return WeightedRows{
      {1, row_to_string(row_from_pattern("0aaaaaa", {1}))},
      {2, row_to_string(row_from_pattern("0aaaaaa", {2}))},
      {3, row_to_string(row_from_pattern("0aaaaaa", {3}))},
      {3, row_to_string(row_from_pattern("1001100"))},
  };
}

// Weight-trimmed golden set for node e over weights 3..4 (width 8, x3..x10).
inline WeightedRows example_table_e() {
  return WeightedRows{
      {3, row_to_string(row_from_pattern("00000111"))},
      {3, row_to_string(row_from_pattern("0aaa0bbb", {1, 2}))},
      {3, row_to_string(row_from_pattern("0aaa0bbb", {2, 1}))},
      {3, row_to_string(row_from_pattern("01110000"))},
      {3, row_to_string(row_from_pattern("100001aa", {1}))},
      {3, row_to_string(row_from_pattern("1aaaa100", {1}))},
      {4, row_to_string(row_from_pattern("0aaa0111", {1}))},
      {4, row_to_string(row_from_pattern("0aaa0bbb", {2, 2}))},
      {4, row_to_string(row_from_pattern("01110aaa", {1}))},
      {4, row_to_string(row_from_pattern("10000111"))},
      {4, row_to_string(row_from_pattern("1aaaa1bb", {1, 1}))},
      {4, row_to_string(row_from_pattern("1aaaa100", {2}))},
  };
}

} // namespace krows::testing
