#include <catch2/catch_amalgamated.hpp>

#include "fixture.hpp"

using namespace krows;
using krows::testing::make_example;

namespace {

const GenPoly kExamplePoly = {1, 8, 30, 70, 113, 132, 113, 70, 30, 8, 1};

}

TEST_CASE("model count of the fixture", "[counting]") {
  Bdd example = make_example();
  REQUIRE(count_models(example) == 576);
  REQUIRE(count_models(terminal_bdd(10, true)) == 1024);
  REQUIRE(count_models(terminal_bdd(17, false)) == 0);
}

TEST_CASE("acceptance probabilities in lowest terms", "[counting]") {
  Bdd example = make_example();
  REQUIRE(acceptance_probability(example) == Rational(9, 16));
  REQUIRE(acceptance_probability(sub_bdd(example, "a")) == Rational(1, 2));
  REQUIRE(acceptance_probability(sub_bdd(example, "b")) == Rational(1, 2));
  REQUIRE(acceptance_probability(sub_bdd(example, "c")) == Rational(1, 4));
  REQUIRE(acceptance_probability(sub_bdd(example, "d")) == Rational(5, 8));
  REQUIRE(acceptance_probability(sub_bdd(example, "e")) == Rational(1, 2));
  REQUIRE(acceptance_probability(terminal_bdd(6, true)) == 1);
  REQUIRE(acceptance_probability(terminal_bdd(6, false)) == 0);
}

TEST_CASE("counting polynomial of the fixture", "[counting]") {
  Bdd example = make_example();
  REQUIRE(gen_poly(example) == kExamplePoly);

  // sub-diagram at a over its 4 trailing variables: (1+z)^3
  REQUIRE(gen_poly(sub_bdd(example, "a")) == GenPoly{1, 3, 3, 1, 0});
  // sub-diagram at b over 3 variables: z(1+z)^2
  REQUIRE(gen_poly(sub_bdd(example, "b")) == GenPoly{0, 1, 2, 1});
}

TEST_CASE("counting polynomial of terminal-rooted diagrams", "[counting]") {
  REQUIRE(gen_poly(terminal_bdd(3, true)) == GenPoly{1, 3, 3, 1}); // binomials
  REQUIRE(gen_poly(terminal_bdd(3, false)) == GenPoly{0, 0, 0, 0});
}

TEST_CASE("leading free variables multiply in", "[counting]") {
  // root tests x3 of 6: two leading free variables contribute (1+z)^2 / factor 4
  Bdd gap = parse_bdd(std::string_view("nvars 6\nnode u 5 F T\nnode v 3 u T\nroot v\n"));
  REQUIRE(count_models(gap) == 4 * count_models(sub_bdd(gap, "v")));
  const OracleReport oracle = brute_force(gap);
  REQUIRE(gen_poly(gap) == oracle.per_weight);
  REQUIRE(count_models(gap) == oracle.total_models);
}

TEST_CASE("per-cardinality counts", "[counting]") {
  Bdd example = make_example();
  REQUIRE(count_k(example, 4) == 113);
  REQUIRE(count_k(example, 0) == 1);
  REQUIRE(count_k(terminal_bdd(9, false), 5) == 0);
  REQUIRE_THROWS_AS(count_k(example, 11), std::out_of_range);
  REQUIRE_THROWS_AS(count_k(example, -1), std::out_of_range);
}

TEST_CASE("coefficients sum to the model count and respect binomials", "[counting]") {
  for (uint64_t seed : {3u, 11u, 42u, 97u}) {
    const int n = 4 + static_cast<int>(seed % 9);
    Bdd b = random_bdd(n, 3 + static_cast<int>(seed % 20), seed);
    GenPoly poly = gen_poly(b);
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) {
      sum += poly[k];
      REQUIRE(poly[k] <= binomial(n, k));
    }
    REQUIRE(sum == count_models(b));
  }
}

TEST_CASE("counts agree with the oracle", "[counting]") {
  for (uint64_t seed : {5u, 29u, 61u}) {
    Bdd b = random_bdd(4 + seed % 11, 4 + seed % 24, seed);
    const OracleReport oracle = brute_force(b);
    REQUIRE(count_models(b) == oracle.total_models);
    REQUIRE(gen_poly(b) == oracle.per_weight);
  }
}

TEST_CASE("swapped sons corrupt the per-cardinality counts", "[counting]") {
  // mutation check: with f's sons exchanged the total count is unchanged
  // (the count recurrence is slot-symmetric) but the weight profile is not,
  // so the golden polynomial is the discriminating value.
  Bdd corrupted = parse_bdd(std::string_view(
      "nvars 10\n"
      "node a 7 T F\n"
      "node b 8 F T\n"
      "node c 7 F b\n"
      "node d 4 T c\n"
      "node e 3 a b\n"
      "node f 1 d e\n" // swapped: lo=d, hi=e
      "root f\n"));
  REQUIRE(count_models(corrupted) == 576);
  GenPoly poly = gen_poly(corrupted);
  REQUIRE(poly != kExamplePoly);
  REQUIRE(poly[4] == 118); // not 113
  REQUIRE(brute_force(corrupted).per_weight == poly); // internally consistent
}
