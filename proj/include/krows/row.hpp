#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "krows/types.hpp"

namespace krows {

/// One position of a 012g-row.
struct Token {
  enum Kind : uint8_t { fixed0, fixed1, dontcare, group } kind = dontcare;
  uint8_t gid = 0; // meaningful only when kind == group

  static Token zero() { return {fixed0, 0}; }
  static Token one() { return {fixed1, 0}; }
  static Token any() { return {dontcare, 0}; }
  static Token grp(uint8_t gid) { return {group, gid}; }
  static Token fixed(int bit) { return bit ? one() : zero(); }

  friend bool operator==(Token a, Token b) {
    return a.kind == b.kind && (a.kind != group || a.gid == b.gid);
  }
};

/// A 012g-row: a compressed set of equal-length bitstrings. Fixed tokens pin
/// a position to 0 or 1, don't-cares allow both, and each group g constrains
/// its positions to carry exactly ones_required[g] ones. Group ids are dense,
/// local to the row, and numbered in order of first appearance.
struct Row {
  std::vector<Token> tokens;
  std::vector<unsigned> ones_required; // indexed by group id

  int width() const { return static_cast<int>(tokens.size()); }
  size_t num_groups() const { return ones_required.size(); }

  friend bool operator==(const Row& a, const Row& b) {
    return a.tokens == b.tokens && a.ones_required == b.ones_required;
  }
};

/// Positions carrying each group, indexed by gid.
inline std::vector<std::vector<int>> group_positions(const Row& r) {
  std::vector<std::vector<int>> pos(r.num_groups());
  for (int i = 0; i < r.width(); ++i)
    if (r.tokens[i].kind == Token::group) pos[r.tokens[i].gid].push_back(i);
  return pos;
}

/// Structural validity: gids in range, dense, in first-appearance order, and
/// each group satisfies 1 <= t < |positions| (degenerate groups must have
/// been normalized away to fixed tokens).
inline bool row_valid(const Row& r) {
  uint8_t seen = 0;
  for (const Token& t : r.tokens) {
    if (t.kind != Token::group) continue;
    if (t.gid >= r.num_groups()) return false;
    if (t.gid > seen) return false;
    if (t.gid == seen) ++seen;
  }
  if (seen != r.num_groups()) return false;
  std::vector<unsigned> sizes(r.num_groups(), 0);
  for (const Token& t : r.tokens)
    if (t.kind == Token::group) ++sizes[t.gid];
  for (size_t g = 0; g < sizes.size(); ++g) {
    unsigned t = r.ones_required[g];
    if (t < 1 || t >= sizes[g]) return false;
  }
  return true;
}

/// |r| = 2^(#dontcare) * prod_g C(|positions(g)|, t(g)).
inline BigInt row_cardinality(const Row& r) {
  auto pos = group_positions(r);
  unsigned dontcares = 0;
  for (const Token& t : r.tokens)
    if (t.kind == Token::dontcare) ++dontcares;
  BigInt card = pow2(dontcares);
  for (size_t g = 0; g < pos.size(); ++g)
    card *= binomial(static_cast<unsigned>(pos[g].size()), r.ones_required[g]);
  return card;
}

/// Membership test: u matches every fixed token and hits each group's
/// required ones count exactly.
inline bool row_contains(const Row& r, const Bitstring& u) {
  if (static_cast<int>(u.size()) != r.width())
    throw std::invalid_argument("bitstring length != row width");
  std::vector<unsigned> got(r.num_groups(), 0);
  for (int i = 0; i < r.width(); ++i) {
    switch (r.tokens[i].kind) {
      case Token::fixed0:
        if (u[i]) return false;
        break;
      case Token::fixed1:
        if (!u[i]) return false;
        break;
      case Token::dontcare:
        break;
      case Token::group:
        got[r.tokens[i].gid] += u[i];
        break;
    }
  }
  for (size_t g = 0; g < got.size(); ++g)
    if (got[g] != r.ones_required[g]) return false;
  return true;
}

/// All bitstrings of the row in ascending lexicographic order. The caller
/// accepts output of size row_cardinality(r).
inline std::vector<Bitstring> expand(const Row& r) {
  auto pos = group_positions(r);
  // remaining[g] = group positions not yet decided, need[g] = ones still owed
  std::vector<unsigned> remaining(r.num_groups());
  std::vector<unsigned> need(r.ones_required);
  for (size_t g = 0; g < pos.size(); ++g) remaining[g] = static_cast<unsigned>(pos[g].size());

  std::vector<Bitstring> out;
  Bitstring u(r.width(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == r.width()) {
      out.push_back(u);
      return;
    }
    const Token& t = r.tokens[i];
    switch (t.kind) {
      case Token::fixed0:
      case Token::fixed1:
        u[i] = (t.kind == Token::fixed1);
        rec(i + 1);
        break;
      case Token::dontcare:
        u[i] = 0;
        rec(i + 1);
        u[i] = 1;
        rec(i + 1);
        break;
      case Token::group: {
        unsigned g = t.gid;
        --remaining[g];
        if (need[g] <= remaining[g]) { // can still place the owed ones later
          u[i] = 0;
          rec(i + 1);
        }
        if (need[g] > 0) {
          u[i] = 1;
          --need[g];
          rec(i + 1);
          ++need[g];
        }
        ++remaining[g];
        break;
      }
    }
  };
  rec(0);
  return out;
}

namespace detail {

// Exact feasibility search for a common bitstring of two overlap-free rows:
// distribute each r1-group's owed ones over the cells it shares with
// r2-groups / r2-dontcares, then check the r2-side sums.
class DisjointnessSearch {
public:
  DisjointnessSearch(const Row& a, const Row& b) : a_(a), b_(b) {}

  // True iff some bitstring lies in both rows. Assumes no fixed0/fixed1
  // conflict (caller has already fast-pathed that case).
  bool intersect() {
    const size_t na = a_.num_groups(), nb = b_.num_groups();
    need_a_.assign(na, 0);
    need_b_.assign(nb, 0);
    cell_.assign(na * nb, 0);
    cell_x_.assign(na * nb, 0);
    free_a_.assign(na, 0); // a-group positions where b is dontcare
    free_b_.assign(nb, 0);
    for (size_t g = 0; g < na; ++g) need_a_[g] = static_cast<int>(a_.ones_required[g]);
    for (size_t g = 0; g < nb; ++g) need_b_[g] = static_cast<int>(b_.ones_required[g]);

    for (int i = 0; i < a_.width(); ++i) {
      Token ta = a_.tokens[i], tb = b_.tokens[i];
      // Positions fixed on either side consume group budgets on the other.
      if (ta.kind == Token::group) {
        if (tb.kind == Token::fixed1) --need_a_[ta.gid];
        else if (tb.kind == Token::dontcare) ++free_a_[ta.gid];
        else if (tb.kind == Token::group) ++cell_[ta.gid * nb + tb.gid];
      }
      if (tb.kind == Token::group) {
        if (ta.kind == Token::fixed1) --need_b_[tb.gid];
        else if (ta.kind == Token::dontcare) ++free_b_[tb.gid];
      }
    }
    for (size_t g = 0; g < na; ++g)
      if (need_a_[g] < 0 || need_a_[g] > slack_a(g)) return false;
    for (size_t g = 0; g < nb; ++g)
      if (need_b_[g] < 0) return false;
    return place(0);
  }

private:
  int slack_a(size_t g) const {
    int cap = free_a_[g];
    for (size_t h = 0; h < b_.num_groups(); ++h) cap += cell_[g * b_.num_groups() + h];
    return cap;
  }

  // DFS over the weight put by a-group `g` into each shared cell, in
  // row-major order; a-rows close when their residue fits the free cells.
  bool place(size_t idx) {
    const size_t nb = b_.num_groups();
    const size_t na = a_.num_groups();
    if (idx == na * nb) {
      for (size_t g = 0; g < na; ++g) {
        int placed = 0;
        for (size_t h = 0; h < nb; ++h) placed += cell_x_[g * nb + h];
        int residue = need_a_[g] - placed;
        if (residue < 0 || residue > free_a_[g]) return false;
      }
      for (size_t h = 0; h < nb; ++h) {
        int placed = 0;
        for (size_t g = 0; g < na; ++g) placed += cell_x_[g * nb + h];
        int residue = need_b_[h] - placed;
        if (residue < 0 || residue > free_b_[h]) return false;
      }
      return true;
    }
    int hi = std::min(cell_[idx], need_a_[idx / nb]);
    for (int x = 0; x <= hi; ++x) {
      cell_x_[idx] = x;
      if (place(idx + 1)) return true;
    }
    cell_x_[idx] = 0;
    return false;
  }

  const Row& a_;
  const Row& b_;
  std::vector<int> need_a_, need_b_, free_a_, free_b_;
  std::vector<int> cell_, cell_x_;
};

} // namespace detail

/// True iff no bitstring lies in both rows. A fixed 0-vs-1 conflict decides
/// immediately; otherwise an exact bounded search over group weight
/// distributions settles it without full expansion.
inline bool rows_disjoint(const Row& r1, const Row& r2) {
  if (r1.width() != r2.width()) throw std::invalid_argument("rows of unequal width");
  for (int i = 0; i < r1.width(); ++i) {
    Token a = r1.tokens[i], b = r2.tokens[i];
    if ((a.kind == Token::fixed0 && b.kind == Token::fixed1) ||
        (a.kind == Token::fixed1 && b.kind == Token::fixed0))
      return true;
  }
  return !detail::DisjointnessSearch(r1, r2).intersect();
}

/// Appends suffix to prefix; suffix group ids are relabeled past the
/// prefix's. Cardinality is multiplicative.
inline Row concat(const Row& prefix, const Row& suffix) {
  if (prefix.num_groups() + suffix.num_groups() > 255)
    throw std::length_error("row would exceed 255 groups");
  Row out = prefix;
  out.tokens.reserve(prefix.tokens.size() + suffix.tokens.size());
  const uint8_t shift = static_cast<uint8_t>(prefix.num_groups());
  for (Token t : suffix.tokens) {
    if (t.kind == Token::group) t.gid = static_cast<uint8_t>(t.gid + shift);
    out.tokens.push_back(t);
  }
  out.ones_required.insert(out.ones_required.end(), suffix.ones_required.begin(),
                           suffix.ones_required.end());
  return out;
}

/// Builds the prefix row for one branch decision plus the variables skipped
/// on the way to a son: optional leading fixed bit, then gap_len positions
/// carrying exactly w ones. Degenerate weights are normalized to fixed runs
/// (w=0 -> all zeros, w=gap_len -> all ones), keeping t < |group|.
inline Row gap_gadget(std::optional<int> branch_bit, int gap_len, int w) {
  if (w < 0 || w > gap_len) throw std::out_of_range("gadget weight out of [0, gap_len]");
  Row r;
  if (branch_bit) r.tokens.push_back(Token::fixed(*branch_bit));
  if (w == 0 || w == gap_len) {
    r.tokens.insert(r.tokens.end(), gap_len, w == 0 ? Token::zero() : Token::one());
  } else {
    r.tokens.insert(r.tokens.end(), gap_len, Token::grp(0));
    r.ones_required.push_back(static_cast<unsigned>(w));
  }
  return r;
}

/// A finite disjoint union of equal-width rows.
struct RowSet {
  int width = 0;
  std::vector<Row> rows;

  BigInt total_cardinality() const {
    BigInt total = 0;
    for (const Row& r : rows) total += row_cardinality(r);
    return total;
  }
};

/// Renders a row in the text format: space-separated tokens (0, 1, *, or a
/// group letter), a legend when groups exist, and the exact model count.
/// Example: "0 1 0 a a a 0 b b b ; a=g(1) b=g(2) # count=9".
inline std::string row_to_string(const Row& r) {
  if (r.num_groups() > 26)
    throw std::invalid_argument("row text format supports at most 26 groups");
  std::ostringstream out;
  for (int i = 0; i < r.width(); ++i) {
    if (i) out << ' ';
    switch (r.tokens[i].kind) {
      case Token::fixed0: out << '0'; break;
      case Token::fixed1: out << '1'; break;
      case Token::dontcare: out << '*'; break;
      case Token::group: out << static_cast<char>('a' + r.tokens[i].gid); break;
    }
  }
  if (r.num_groups() > 0) {
    out << " ;";
    for (size_t g = 0; g < r.num_groups(); ++g)
      out << ' ' << static_cast<char>('a' + g) << "=g(" << r.ones_required[g] << ')';
  }
  out << " # count=" << row_cardinality(r);
  return out.str();
}

/// Convenience constructor from a compact pattern: one character per
/// position ('0', '1', '*', or a group letter 'a'..), plus the required ones
/// count per group in letter order. row_from_pattern("a01aa", {2}) is the
/// row (g2, 0, 1, g2, g2).
inline Row row_from_pattern(std::string_view pattern, std::vector<unsigned> ts = {}) {
  Row r;
  for (char c : pattern) {
    switch (c) {
      case '0': r.tokens.push_back(Token::zero()); break;
      case '1': r.tokens.push_back(Token::one()); break;
      case '*': case '2': r.tokens.push_back(Token::any()); break;
      default:
        if (c < 'a' || c > 'z') throw std::invalid_argument("bad pattern character");
        r.tokens.push_back(Token::grp(static_cast<uint8_t>(c - 'a')));
    }
  }
  r.ones_required = std::move(ts);
  if (!row_valid(r)) throw std::invalid_argument("pattern does not form a valid row");
  return r;
}

} // namespace krows
