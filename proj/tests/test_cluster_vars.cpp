#include <catch2/catch_amalgamated.hpp>

#include "clusterex/cluster_vars.hpp"
#include "oracles.hpp"

using namespace clusterex;

namespace {
LaurentPoly x(int nv, int i, int power = 1) {
  return LaurentPoly::variable(nv, i, power);
}
}  // namespace

TEST_CASE("seed assigns fan diagonals and frozen boundary edges") {
  const Seed seed(2);
  CHECK(seed.nvars() == 7);
  CHECK(seed.cluster_index(Diagonal(1, 3)) == 1);
  CHECK(seed.cluster_index(Diagonal(1, 4)) == 2);
  CHECK(seed.frozen_index(BoundaryEdge(1, 2)) == 3);
  CHECK(seed.frozen_index(BoundaryEdge(2, 3)) == 4);
  CHECK(seed.frozen_index(BoundaryEdge(3, 4)) == 5);
  CHECK(seed.frozen_index(BoundaryEdge(4, 5)) == 6);
  CHECK(seed.frozen_index(BoundaryEdge(1, 5)) == 7);
  CHECK_THROWS_AS(seed.cluster_index(Diagonal(2, 4)), std::invalid_argument);
  CHECK_THROWS_AS(seed.frozen_index(BoundaryEdge(1, 3)),
                  std::invalid_argument);
}

TEST_CASE("the worked pentagon example, exactly") {
  const int nv = 7;
  const auto table = compute_table(2);

  CHECK(table.at(Diagonal(1, 3)) == x(nv, 1));
  CHECK(table.at(Diagonal(1, 4)) == x(nv, 2));

  const LaurentPoly x24 =
      exact_div(x(nv, 3) * x(nv, 5) + x(nv, 2) * x(nv, 4), x(nv, 1));
  CHECK(table.at(Diagonal(2, 4)) == x24);

  const LaurentPoly x25 = exact_div(
      x(nv, 1) * x(nv, 3) * x(nv, 6) + x(nv, 3) * x(nv, 5) * x(nv, 7) +
          x(nv, 2) * x(nv, 4) * x(nv, 7),
      x(nv, 1) * x(nv, 2));
  CHECK(table.at(Diagonal(2, 5)) == x25);

  const LaurentPoly x35 =
      exact_div(x(nv, 1) * x(nv, 6) + x(nv, 5) * x(nv, 7), x(nv, 2));
  CHECK(table.at(Diagonal(3, 5)) == x35);

  // The chain of exchanges around the pentagon, step by step.
  CHECK(exchange(x(nv, 1), x(nv, 3), x(nv, 4), x(nv, 5), x(nv, 2)) == x24);
  CHECK(exchange(x(nv, 2), x(nv, 3), x24, x(nv, 6), x(nv, 7)) == x25);
  CHECK(exchange(x24, x(nv, 4), x(nv, 5), x(nv, 6), x25) == x35);
  // The final exchange closes the cycle back to the seed variable.
  CHECK(exchange(x25, x(nv, 3), x(nv, 4), x35, x(nv, 7)) == x(nv, 1));
}

TEST_CASE("square case: the single flip") {
  const int nv = 5;
  const auto table = compute_table(1);
  CHECK(table.at(Diagonal(1, 3)) == x(nv, 1));
  CHECK(table.at(Diagonal(2, 4)) ==
        exact_div(x(nv, 2) * x(nv, 4) + x(nv, 3) * x(nv, 5), x(nv, 1)));
}

TEST_CASE("exchange propagates NotDivisible on inconsistent input") {
  const int nv = 7;
  CHECK_THROWS_AS(
      exchange(x(nv, 1) + x(nv, 2), x(nv, 3), x(nv, 4), x(nv, 5), x(nv, 6)),
      NotDivisible);
}

TEST_CASE("table covers every diagonal with consistent exchanges") {
  for (int n = 1; n <= 5; ++n) {
    const auto g = ExchangeGraph::build(n);
    const auto table = compute_table(g);
    CHECK(table.entries().size() == all_diagonals(n).size());
    CHECK(exchange_consistent(g, table));
    // Seed diagonals carry single variables.
    const auto seed_fan = fan(n, 1);
    for (const auto& d : seed_fan.diagonals())
      CHECK(table.at(d) == x(table.nvars(), d.b - 2));
  }
}

TEST_CASE("laurent phenomenon: frozen variables never in denominators") {
  for (int n = 1; n <= 6; ++n) {
    const auto table = compute_table(n);
    CHECK(laurent_phenomenon_holds(table));
    // Denominators are genuine monomials: for every entry some term must
    // have all mutable exponents at their minimum simultaneously.
    for (const auto& [d, p] : table.entries()) CHECK_FALSE(p.is_zero());
  }
}

TEST_CASE("variables are pairwise distinct and positive") {
  for (int n = 1; n <= 5; ++n) {
    const auto table = compute_table(n);
    CHECK(variables_distinct(table));
    CHECK(coefficients_positive(table));
  }
}

TEST_CASE("period five") {
  const auto rep = verify_period_five();
  CHECK(rep.ok);
  REQUIRE(rep.f.size() == 7);

  // f_3 = (x_2 + 1) / x_1.
  const int nv = 7;
  CHECK(rep.f[2] ==
        exact_div(x(nv, 2) + LaurentPoly::constant(nv, 1), x(nv, 1)));
  CHECK(rep.f[5] == x(nv, 1));
  CHECK(rep.f[6] == x(nv, 2));

  // Orbit at x_1 = x_2 = 1 against the direct rational recurrence.
  std::vector<Rational> orbit{1, 1};
  while (orbit.size() < 7) {
    const Rational next =
        (orbit[orbit.size() - 1] + 1) / orbit[orbit.size() - 2];
    orbit.push_back(next);
  }
  CHECK(orbit == std::vector<Rational>{1, 1, 2, 3, 2, 1, 1});
  CHECK(rep.unit_orbit == orbit);
}
