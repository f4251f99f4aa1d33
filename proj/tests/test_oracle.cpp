#include <catch2/catch_amalgamated.hpp>

#include "fixture.hpp"

using namespace krows;
using krows::testing::make_example;

TEST_CASE("brute force sweep of the fixture", "[oracle]") {
  const OracleReport rep = brute_force(make_example());
  REQUIRE(rep.total_models == 576);
  REQUIRE(rep.per_weight == GenPoly{1, 8, 30, 70, 113, 132, 113, 70, 30, 8, 1});
  REQUIRE(rep.models.empty()); // not collected unless asked
}

TEST_CASE("brute force on terminal-rooted diagrams", "[oracle]") {
  const OracleReport bot = brute_force(terminal_bdd(6, false));
  REQUIRE(bot.total_models == 0);
  for (const BigInt& w : bot.per_weight) REQUIRE(w == 0);

  const OracleReport top = brute_force(terminal_bdd(3, true));
  REQUIRE(top.per_weight == GenPoly{1, 3, 3, 1});
}

TEST_CASE("brute force respects its variable limit", "[oracle]") {
  Bdd wide = terminal_bdd(21, true);
  REQUIRE_THROWS_AS(brute_force(wide), std::invalid_argument);
  REQUIRE(brute_force(terminal_bdd(10, true), 10).total_models == 1024);
}

TEST_CASE("collected model lists are sorted and complete", "[oracle]") {
  const OracleReport rep = brute_force(make_example(), 20, true);
  REQUIRE(BigInt(rep.models.size()) == rep.total_models);
  REQUIRE(std::is_sorted(rep.models.begin(), rep.models.end()));
  for (const Bitstring& u : rep.models) REQUIRE(evaluate(make_example(), u));
}

TEST_CASE("random diagrams are deterministic per seed", "[oracle]") {
  for (uint64_t seed : {1u, 2u, 40u}) {
    Bdd a = random_bdd(10, 6, seed);
    Bdd b = random_bdd(10, 6, seed);
    REQUIRE(to_text(a) == to_text(b));
    REQUIRE(to_text(a) != to_text(random_bdd(10, 6, seed + 1)));
    REQUIRE(to_text(parse_bdd(to_text(a))) == to_text(a));
  }
}

TEST_CASE("random diagrams exercise gaps and free prefixes", "[oracle]") {
  int with_gap2 = 0, with_prefix = 0;
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Bdd b = random_bdd(12, 10, seed);
    if (b.node(b.root()).var > 1) ++with_prefix;
    for (int32_t i = 0; i < b.num_nodes(); ++i) {
      const BddNode& nd = b.node(i);
      if (b.var_of(nd.lo) - nd.var - 1 >= 2 || b.var_of(nd.hi) - nd.var - 1 >= 2) {
        ++with_gap2;
        break;
      }
    }
  }
  REQUIRE(with_gap2 >= 30);  // wide gaps are routine, not rare
  REQUIRE(with_prefix >= 3); // some roots start above x1
}

TEST_CASE("random generator argument validation", "[oracle]") {
  REQUIRE_THROWS_AS(random_bdd(0, 3, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(random_bdd(5, -1, 1), std::invalid_argument);
  Bdd empty = random_bdd(5, 0, 9);
  REQUIRE(empty.num_nodes() == 0);
  REQUIRE(empty.root().is_terminal());
}

TEST_CASE("full verification suite passes on random instances", "[oracle]") {
  for (uint64_t seed : {12u, 34u, 56u}) {
    const int n = 6 + static_cast<int>(seed % 7);
    Bdd b = random_bdd(n, 12 + static_cast<int>(seed % 19), seed);
    const CheckReport rep = run_checks(b);
    for (const auto& [label, ok] : rep.checks) {
      INFO(label);
      REQUIRE(ok);
    }
  }
}

TEST_CASE("verification suite at the 16-variable edge", "[oracle]") {
  const CheckReport rep = run_checks(random_bdd(16, 20, 4242));
  for (const auto& [label, ok] : rep.checks) {
    INFO(label);
    REQUIRE(ok);
  }
}

TEST_CASE("a 30-node 12-variable instance satisfies every invariant", "[oracle]") {
  const CheckReport rep = run_checks(random_bdd(12, 30, 7));
  for (const auto& [label, ok] : rep.checks) {
    INFO(label);
    REQUIRE(ok);
  }
}

TEST_CASE("node count may exceed the level count", "[oracle]") {
  // duplicates across few levels are fine in a non-reduced diagram
  Bdd dense = random_bdd(2, 40, 3);
  REQUIRE(dense.num_nodes() == 40);
  REQUIRE(to_text(parse_bdd(to_text(dense))) == to_text(dense));
  REQUIRE(run_checks(dense).all_pass);
}
