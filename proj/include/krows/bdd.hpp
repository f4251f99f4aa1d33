#pragma once

#include <cassert>
#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "krows/types.hpp"

namespace krows {

/// Identifies a node inside its owning Bdd: either a branching node
/// (dense index into the node array) or one of the terminals.
class NodeId {
public:
  constexpr NodeId() = default;

  static constexpr NodeId bot() { return NodeId(kBot); }
  static constexpr NodeId top() { return NodeId(kTop); }
  static constexpr NodeId branch(int32_t index) { return NodeId(index); }

  constexpr bool is_bot() const { return value_ == kBot; }
  constexpr bool is_top() const { return value_ == kTop; }
  constexpr bool is_terminal() const { return value_ < 0; }

  /// Dense index of a branching node; must not be called on terminals.
  constexpr int32_t index() const {
    assert(!is_terminal());
    return value_;
  }

  friend constexpr bool operator==(NodeId a, NodeId b) { return a.value_ == b.value_; }
  friend constexpr bool operator!=(NodeId a, NodeId b) { return a.value_ != b.value_; }

private:
  static constexpr int32_t kBot = -1;
  static constexpr int32_t kTop = -2;

  constexpr explicit NodeId(int32_t v) : value_(v) {}

  int32_t value_ = kBot;
};

/// One branching node: tested variable (1-based) and its two sons.
struct BddNode {
  int var = 0;
  NodeId lo;
  NodeId hi;
};

/// An ordered binary decision diagram over variables x_1..x_n.
///
/// Nodes are stored sons-before-parents, so the storage order is a valid
/// shelling from below. Variable indices strictly increase along every
/// edge; the diagram need not be reduced (duplicate (var,lo,hi) triples
/// and nodes with lo == hi are legal). Immutable once built.
class Bdd {
public:
  int nvars() const { return nvars_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  NodeId root() const { return root_; }

  const BddNode& node(NodeId id) const { return nodes_[id.index()]; }
  const BddNode& node(int32_t index) const { return nodes_[index]; }

  /// Variable index of a node; terminals count as n+1.
  int var_of(NodeId id) const { return id.is_terminal() ? nvars_ + 1 : nodes_[id.index()].var; }

  const std::string& name(int32_t index) const { return names_[index]; }
  std::string name(NodeId id) const {
    if (id.is_bot()) return "F";
    if (id.is_top()) return "T";
    return names_[id.index()];
  }

  /// Looks up a branching node by its textual name.
  std::optional<NodeId> find(std::string_view name) const {
    for (int32_t i = 0; i < num_nodes(); ++i)
      if (names_[i] == name) return NodeId::branch(i);
    return std::nullopt;
  }

private:
  friend class BddBuilder;

  int nvars_ = 1;
  std::vector<BddNode> nodes_;
  std::vector<std::string> names_;
  NodeId root_ = NodeId::bot();
};

/// Incrementally assembles a valid Bdd; every structural invariant is
/// enforced at add_node time so a finished Bdd never needs re-validation.
class BddBuilder {
public:
  explicit BddBuilder(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("nvars must be positive");
  }

  int nvars() const { return nvars_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }

  int var_of(NodeId id) const { return id.is_terminal() ? nvars_ + 1 : nodes_[id.index()].var; }

  NodeId add_node(int var, NodeId lo, NodeId hi) {
    return add_node(var, lo, hi, "n" + std::to_string(nodes_.size()));
  }

  NodeId add_node(int var, NodeId lo, NodeId hi, std::string name) {
    if (var < 1 || var > nvars_)
      throw std::invalid_argument("variable index " + std::to_string(var) + " out of [1," +
                                  std::to_string(nvars_) + "]");
    check_son(var, lo);
    check_son(var, hi);
    if (!name_index_.emplace(name, nodes_.size()).second)
      throw std::invalid_argument("duplicate node name '" + name + "'");
    nodes_.push_back(BddNode{var, lo, hi});
    names_.push_back(std::move(name));
    return NodeId::branch(static_cast<int32_t>(nodes_.size() - 1));
  }

  std::optional<NodeId> find(std::string_view name) const {
    auto it = name_index_.find(std::string(name));
    if (it == name_index_.end()) return std::nullopt;
    return NodeId::branch(it->second);
  }

  Bdd finish(NodeId root) && {
    if (!root.is_terminal() && root.index() >= num_nodes())
      throw std::invalid_argument("root refers to an unknown node");
    Bdd bdd;
    bdd.nvars_ = nvars_;
    bdd.nodes_ = std::move(nodes_);
    bdd.names_ = std::move(names_);
    bdd.root_ = root;
    return bdd;
  }

private:
  void check_son(int var, NodeId son) {
    if (son.is_terminal()) return;
    if (son.index() >= num_nodes())
      throw std::invalid_argument("son refers to an undeclared node");
    if (nodes_[son.index()].var <= var)
      throw std::invalid_argument("ordering violation: son var " +
                                  std::to_string(nodes_[son.index()].var) +
                                  " <= parent var " + std::to_string(var));
  }

  int nvars_;
  std::vector<BddNode> nodes_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int32_t> name_index_;
};

/// Error raised by parse_bdd / parse_dimacs, carrying the 1-based line number.
class parse_error : public std::runtime_error {
public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

inline bool valid_id(const std::string& s) {
  if (s.empty() || s == "T" || s == "F") return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline bool parse_int(const std::string& s, long& out) {
  try {
    size_t pos = 0;
    out = std::stol(s, &pos);
    return pos == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

} // namespace detail

/// Parses the BDD text format:
///
///   nvars <n>
///   node <id> <var> <lo> <hi>     # lo/hi are earlier ids, or T, or F
///   root <id|T|F>
///
/// '#' starts a comment. nvars comes first, sons are declared before their
/// parents, root comes last. File order becomes the storage (shelling) order.
inline Bdd parse_bdd(std::istream& in) {
  std::optional<BddBuilder> builder;
  std::optional<NodeId> root;
  std::string line;
  int lineno = 0;

  auto resolve = [&](const std::string& tok, int ln) -> NodeId {
    if (tok == "T") return NodeId::top();
    if (tok == "F") return NodeId::bot();
    if (auto id = builder->find(tok)) return *id;
    throw parse_error(ln, "reference to undeclared node '" + tok + "'");
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;

    if (root) throw parse_error(lineno, "directives after root");

    if (toks[0] == "nvars") {
      if (builder) throw parse_error(lineno, "duplicate nvars directive");
      long n;
      if (toks.size() != 2 || !detail::parse_int(toks[1], n) || n < 1)
        throw parse_error(lineno, "expected 'nvars <positive integer>'");
      builder.emplace(static_cast<int>(n));
    } else if (toks[0] == "node") {
      if (!builder) throw parse_error(lineno, "nvars must come first");
      long var;
      if (toks.size() != 5 || !detail::parse_int(toks[2], var))
        throw parse_error(lineno, "expected 'node <id> <var> <lo> <hi>'");
      if (!detail::valid_id(toks[1])) throw parse_error(lineno, "invalid node id '" + toks[1] + "'");
      NodeId lo = resolve(toks[3], lineno);
      NodeId hi = resolve(toks[4], lineno);
      try {
        builder->add_node(static_cast<int>(var), lo, hi, toks[1]);
      } catch (const std::invalid_argument& e) {
        throw parse_error(lineno, e.what());
      }
    } else if (toks[0] == "root") {
      if (!builder) throw parse_error(lineno, "nvars must come first");
      if (toks.size() != 2) throw parse_error(lineno, "expected 'root <id|T|F>'");
      root = resolve(toks[1], lineno);
    } else {
      throw parse_error(lineno, "unknown directive '" + toks[0] + "'");
    }
  }

  if (!builder) throw parse_error(lineno, "missing nvars directive");
  if (!root) throw parse_error(lineno, "missing root directive");
  return std::move(*builder).finish(*root);
}

inline Bdd parse_bdd(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_bdd(in);
}

/// Writes the same text format parse_bdd reads, nodes in shelling order.
/// write_bdd(parse_bdd(f)) reproduces a canonical f byte for byte.
inline void write_bdd(const Bdd& bdd, std::ostream& out) {
  out << "nvars " << bdd.nvars() << '\n';
  for (int32_t i = 0; i < bdd.num_nodes(); ++i) {
    const BddNode& nd = bdd.node(i);
    out << "node " << bdd.name(i) << ' ' << nd.var << ' ' << bdd.name(nd.lo) << ' '
        << bdd.name(nd.hi) << '\n';
  }
  out << "root " << bdd.name(bdd.root()) << '\n';
}

inline std::string to_text(const Bdd& bdd) {
  std::ostringstream out;
  write_bdd(bdd, out);
  return out.str();
}

/// Follows the decision path for u: lo on 0, hi on 1, skipped variables
/// ignored. True iff the path ends in the accepting terminal.
inline bool evaluate(const Bdd& bdd, const Bitstring& u) {
  if (static_cast<int>(u.size()) != bdd.nvars())
    throw std::invalid_argument("bitstring length " + std::to_string(u.size()) +
                                " != nvars " + std::to_string(bdd.nvars()));
  NodeId cur = bdd.root();
  while (!cur.is_terminal()) {
    const BddNode& nd = bdd.node(cur);
    cur = u[nd.var - 1] ? nd.hi : nd.lo;
  }
  return cur.is_top();
}

/// Storage order doubles as the canonical shelling from below: every node
/// appears after both of its non-terminal sons.
inline std::vector<NodeId> shelling_from_below(const Bdd& bdd) {
  std::vector<NodeId> order;
  order.reserve(bdd.num_nodes());
  for (int32_t i = 0; i < bdd.num_nodes(); ++i) order.push_back(NodeId::branch(i));
  return order;
}

/// An edge into a node from one of its parents ("upper covers").
struct ParentEdge {
  NodeId parent;
  int bit; // 0 = reached through the parent's lo slot, 1 = hi slot
};

/// For every branching node, the edges that reference it. The root (and any
/// node no son slot points at) gets an empty list. Edge order is
/// deterministic: parents in storage order, lo before hi.
inline std::vector<std::vector<ParentEdge>> upper_covers(const Bdd& bdd) {
  std::vector<std::vector<ParentEdge>> covers(bdd.num_nodes());
  for (int32_t i = 0; i < bdd.num_nodes(); ++i) {
    const BddNode& nd = bdd.node(i);
    if (!nd.lo.is_terminal()) covers[nd.lo.index()].push_back({NodeId::branch(i), 0});
    if (!nd.hi.is_terminal()) covers[nd.hi.index()].push_back({NodeId::branch(i), 1});
  }
  return covers;
}

/// Extracts the sub-diagram rooted at `at` as a standalone Bdd over the
/// trailing variables, rebased so the new root tests x_1. Node names are
/// preserved.
inline Bdd sub_bdd(const Bdd& bdd, NodeId at) {
  if (at.is_terminal()) throw std::invalid_argument("sub_bdd requires a branching node");
  const int base = bdd.node(at).var;

  std::vector<bool> keep(bdd.num_nodes(), false);
  keep[at.index()] = true;
  for (int32_t i = at.index(); i >= 0; --i) {
    if (!keep[i]) continue;
    const BddNode& nd = bdd.node(i);
    if (!nd.lo.is_terminal()) keep[nd.lo.index()] = true;
    if (!nd.hi.is_terminal()) keep[nd.hi.index()] = true;
  }

  BddBuilder builder(bdd.nvars() - base + 1);
  std::vector<NodeId> remap(bdd.num_nodes());
  for (int32_t i = 0; i <= at.index(); ++i) {
    if (!keep[i]) continue;
    const BddNode& nd = bdd.node(i);
    auto map_son = [&](NodeId s) { return s.is_terminal() ? s : remap[s.index()]; };
    remap[i] = builder.add_node(nd.var - base + 1, map_son(nd.lo), map_son(nd.hi), bdd.name(i));
  }
  return std::move(builder).finish(remap[at.index()]);
}

inline Bdd sub_bdd(const Bdd& bdd, std::string_view name) {
  auto id = bdd.find(name);
  if (!id) throw std::invalid_argument("no node named '" + std::string(name) + "'");
  return sub_bdd(bdd, *id);
}

/// A Bdd whose function is constantly true (root T) or false (root F).
inline Bdd terminal_bdd(int nvars, bool value) {
  return std::move(BddBuilder(nvars)).finish(value ? NodeId::top() : NodeId::bot());
}

} // namespace krows
