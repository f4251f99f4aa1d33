#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "krows/bdd.hpp"
#include "krows/check.hpp"
#include "krows/counting.hpp"
#include "krows/dimacs.hpp"
#include "krows/enumerate.hpp"
#include "krows/oracle.hpp"
#include "krows/row.hpp"
#include "krows/schedule.hpp"

namespace krows {

namespace detail {

inline Bdd load_bdd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_bdd(in);
}

inline std::string bits_to_string(const Bitstring& u) {
  std::string s(u.size(), '0');
  for (size_t i = 0; i < u.size(); ++i) s[i] = u[i] ? '1' : '0';
  return s;
}

} // namespace detail

inline int cmd_count(const std::string& path, bool per_cardinality, std::ostream& out) {
  const Bdd bdd = detail::load_bdd(path);
  out << "models=" << count_models(bdd) << '\n';
  if (per_cardinality) {
    const GenPoly poly = gen_poly(bdd);
    for (size_t k = 0; k < poly.size(); ++k) out << (k ? " " : "") << poly[k];
    out << '\n';
  }
  return 0;
}

inline int cmd_enumerate(const std::string& path, int k, int method, std::string format,
                         std::ostream& out) {
  const Bdd bdd = detail::load_bdd(path);
  if (format.empty()) format = method == 2 ? "bits" : "rows";
  if (format != "rows" && format != "bits")
    throw std::invalid_argument("format must be rows or bits");
  if (method == 2 && format == "rows")
    throw std::invalid_argument("method 2 enumerates one-by-one; rows format unavailable");

  if (method == 2) {
    const Bdd product = apply_and(bdd, exactly_k_bdd(bdd.nvars(), k));
    out << "k=" << k << " models=" << count_models(product) << '\n';
    for_each_model(product,
                   [&](const Bitstring& u) { out << detail::bits_to_string(u) << '\n'; });
    return 0;
  }

  const RowSet rows = method == 1 ? method1_sieve(bdd, k) : method3_enumerate(bdd, k);
  if (format == "rows") {
    out << "k=" << k << " rows=" << rows.rows.size() << " models=" << rows.total_cardinality()
        << '\n';
    for (const Row& r : rows.rows) out << row_to_string(r) << '\n';
  } else {
    out << "k=" << k << " models=" << rows.total_cardinality() << '\n';
    std::vector<Bitstring> all;
    for (const Row& r : rows.rows) {
      auto part = expand(r);
      all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    for (const Bitstring& u : all) out << detail::bits_to_string(u) << '\n';
  }
  return 0;
}

inline int cmd_stats(const std::string& path, std::optional<int> k, std::ostream& out) {
  const Bdd bdd = detail::load_bdd(path);
  out << "nvars=" << bdd.nvars() << '\n';
  out << "nodes=" << bdd.num_nodes() << '\n';
  out << "root=" << bdd.name(bdd.root()) << '\n';
  if (k) out << "k=" << *k << '\n';

  const auto card1 = compute_card1(bdd);
  std::vector<CardSet> card2;
  if (k) card2 = compute_card2(bdd, *k, card1);
  for (int32_t i = 0; i < bdd.num_nodes(); ++i) {
    const BddNode& nd = bdd.node(i);
    out << "node " << bdd.name(i) << " var=" << nd.var << " lo=" << bdd.name(nd.lo)
        << " hi=" << bdd.name(nd.hi) << " card1(" << bdd.name(i)
        << ")=" << card1[i].to_intervals();
    if (k) out << " card2(" << bdd.name(i) << ")=" << card2[i].to_intervals();
    out << '\n';
  }
  return 0;
}

inline int cmd_check(const std::string& path, int kmax, int limit, std::ostream& out) {
  const Bdd bdd = detail::load_bdd(path);
  const CheckReport report = run_checks(bdd, kmax, limit);
  for (const auto& [label, ok] : report.checks)
    out << (ok ? "PASS " : "FAIL ") << label << '\n';
  return report.all_pass ? 0 : 1;
}

inline int cmd_from_cnf(const std::string& cnf_path, const std::string& out_path) {
  std::ifstream in(cnf_path);
  if (!in) throw std::runtime_error("cannot open '" + cnf_path + "'");
  const Bdd bdd = cnf_to_bdd(parse_dimacs(in));
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  write_bdd(bdd, out);
  return 0;
}

inline int cmd_gen_random(int n, int nodes, uint64_t seed, const std::string& out_path) {
  const Bdd bdd = random_bdd(n, nodes, seed);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  write_bdd(bdd, out);
  return 0;
}

} // namespace krows
