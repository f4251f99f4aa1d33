#pragma once

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "krows/bdd.hpp"
#include "krows/enumerate.hpp"

namespace krows {

/// A CNF instance: clauses of nonzero literals, +v / -v for x_v / not x_v.
struct Cnf {
  int nvars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Parses DIMACS CNF: 'c' comment lines, one 'p cnf <nvars> <nclauses>'
/// header, then 0-terminated clauses. The declared counts must match.
inline Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  bool have_header = false;
  long declared_clauses = 0;
  std::vector<int> clause;
  bool clause_open = false;
  std::string line;
  int lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0] == "c" || toks[0][0] == 'c') continue;
    if (toks[0] == "p") {
      if (have_header) throw parse_error(lineno, "duplicate problem line");
      long nv;
      if (toks.size() != 4 || toks[1] != "cnf" || !detail::parse_int(toks[2], nv) ||
          !detail::parse_int(toks[3], declared_clauses) || nv < 1 || declared_clauses < 0)
        throw parse_error(lineno, "expected 'p cnf <nvars> <nclauses>'");
      cnf.nvars = static_cast<int>(nv);
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error(lineno, "clause before problem line");
    for (const std::string& tok : toks) {
      long lit;
      if (!detail::parse_int(tok, lit)) throw parse_error(lineno, "bad literal '" + tok + "'");
      if (lit == 0) {
        cnf.clauses.push_back(clause);
        clause.clear();
        clause_open = false;
        continue;
      }
      if (std::abs(lit) > cnf.nvars)
        throw parse_error(lineno, "literal " + tok + " exceeds declared variable count " +
                                      std::to_string(cnf.nvars));
      clause.push_back(static_cast<int>(lit));
      clause_open = true;
    }
  }
  if (!have_header) throw parse_error(lineno, "missing problem line");
  if (clause_open) throw parse_error(lineno, "unterminated clause (missing 0)");
  if (static_cast<long>(cnf.clauses.size()) != declared_clauses)
    throw parse_error(lineno, "clause count " + std::to_string(cnf.clauses.size()) +
                                  " does not match declared " +
                                  std::to_string(declared_clauses));
  return cnf;
}

inline Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

/// BDD of a single clause: a chain over the clause's variables in ascending
/// order, escaping to T on the satisfying branch. Tautological clauses
/// collapse to T, the empty clause to F.
inline Bdd clause_bdd(int nvars, std::vector<int> clause) {
  std::sort(clause.begin(), clause.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b); });
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (size_t i = 0; i + 1 < clause.size(); ++i)
    if (clause[i] == -clause[i + 1]) return terminal_bdd(nvars, true);

  BddBuilder builder(nvars);
  NodeId rest = NodeId::bot();
  for (auto it = clause.rbegin(); it != clause.rend(); ++it) {
    const int var = std::abs(*it);
    rest = *it > 0 ? builder.add_node(var, rest, NodeId::top())
                   : builder.add_node(var, NodeId::top(), rest);
  }
  return std::move(builder).finish(rest);
}

/// CNF to BDD under the identity variable order: per-clause BDDs folded with
/// apply_and. No clauses means the constant-true function.
inline Bdd cnf_to_bdd(const Cnf& cnf) {
  Bdd acc = terminal_bdd(cnf.nvars, true);
  for (const auto& clause : cnf.clauses) acc = apply_and(acc, clause_bdd(cnf.nvars, clause));
  return acc;
}

} // namespace krows
