#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "clusterex/int_linalg.hpp"
#include "oracles.hpp"

using namespace clusterex;

namespace {

IntMat mat(int rows, int cols, std::initializer_list<int> vals) {
  IntMat m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = *it++;
  return m;
}

void check_witnesses(const IntMat& m, const SmithResult& s) {
  REQUIRE(s.has_witnesses);
  CHECK(s.u * m * s.v == s.diagonal(m.rows(), m.cols()));
  const Int du = determinant(s.u);
  const Int dv = determinant(s.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  const IntMat d23 = mat(2, 2, {2, 0, 0, 3});
  const auto s = smith_normal_form(d23, true);
  CHECK(s.factors == std::vector<Int>{1, 6});
  check_witnesses(d23, s);

  const auto z = smith_normal_form(IntMat(3, 2), true);
  CHECK(z.factors.empty());
  CHECK(z.rank == 0);

  const auto id = smith_normal_form(IntMat::identity(4), true);
  CHECK(id.factors == std::vector<Int>(4, Int(1)));
}

TEST_CASE("smith factors match the gcd-of-minors oracle on random matrices") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 150; ++trial) {
    const int r = 1 + trial % 4;
    const int c = 1 + (trial / 4) % 4;
    const IntMat m = oracles::random_matrix(rng, r, c);
    const auto s = smith_normal_form(m, true);
    CHECK(s.factors == oracles::smith_factors_by_minors(m));
    check_witnesses(m, s);
    CHECK(s.rank == static_cast<int>(s.factors.size()));
    // Divisibility chain.
    for (std::size_t i = 0; i + 1 < s.factors.size(); ++i)
      CHECK(s.factors[i + 1] % s.factors[i] == 0);
  }
}

TEST_CASE("kernel bases are exact and saturated") {
  const IntMat a = mat(1, 2, {1, -1});
  const IntMat ka = kernel_basis(a);
  REQUIRE(ka.cols() == 1);
  CHECK(abs(ka.at(0, 0)) == 1);
  CHECK(ka.at(0, 0) == ka.at(1, 0));

  CHECK(kernel_basis(IntMat::identity(2)).cols() == 0);

  // Saturation: [2, -2] has primitive kernel generator (1, 1), not (2, 2).
  const IntMat b = mat(1, 2, {2, -2});
  const IntMat kb = kernel_basis(b);
  REQUIRE(kb.cols() == 1);
  CHECK(abs(kb.at(0, 0)) == 1);
  // Bounded enumeration: every small kernel vector lies in the basis lattice.
  Lattice lat(kb);
  for (const auto& v : oracles::small_kernel_vectors(b, 3))
    CHECK(lat.contains(v));
}

TEST_CASE("kernel dimension and product on random matrices") {
  std::mt19937 rng(7777);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 1 + trial % 3;
    const int c = 1 + (trial / 3) % 5;
    const IntMat m = oracles::random_matrix(rng, r, c);
    const IntMat k = kernel_basis(m);
    CHECK((m * k).is_zero());
    CHECK(rank(m) + k.cols() == c);
    // Every bounded kernel vector is an integer combination of the basis.
    Lattice lat(k, true);
    for (const auto& v : oracles::small_kernel_vectors(m, 2)) {
      auto coeff = lat.coordinates(v);
      REQUIRE(coeff.has_value());
      CHECK(k.apply(*coeff) == v);
    }
  }
}

TEST_CASE("lattice membership with coefficients") {
  const IntMat b = IntMat::from_columns(2, {{Int(1), Int(1)}});
  auto c = lattice_contains(b, {Int(3), Int(3)});
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<Int>{3});
  CHECK_FALSE(lattice_contains(b, {Int(1), Int(0)}).has_value());
}

TEST_CASE("lattice equality via canonical Hermite forms") {
  const IntMat b1 = IntMat::from_columns(
      2, {{Int(2), Int(0)}, {Int(0), Int(2)}, {Int(1), Int(1)}});
  const IntMat b2 = IntMat::from_columns(2, {{Int(1), Int(1)}, {Int(2), Int(0)}});
  CHECK(lattice_equal(b1, b2));
  const IntMat b3 = IntMat::from_columns(2, {{Int(1), Int(0)}, {Int(0), Int(1)}});
  CHECK_FALSE(lattice_equal(b1, b3));
  CHECK(lattice_equal(b3, IntMat::identity(2)));
}

TEST_CASE("membership round-trips on random lattices") {
  std::mt19937 rng(1212);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 80; ++trial) {
    const IntMat b = oracles::random_matrix(rng, 4, 3);
    std::vector<Int> c(3);
    for (auto& x : c) x = coeff(rng);
    const auto v = b.apply(c);
    auto got = lattice_contains(b, v);
    REQUIRE(got.has_value());
    CHECK(b.apply(*got) == v);
  }
}

TEST_CASE("hermite form is canonical") {
  std::mt19937 rng(3434);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMat m = oracles::random_matrix(rng, 3, 4);
    const auto h = hermite_rows(m, true);
    CHECK(h.u * m == h.h);
    const Int du = determinant(h.u);
    CHECK((du == 1 || du == -1));
    // Pivots positive, entries above reduced.
    for (int r = 0; r < h.rank; ++r) {
      const int pc = h.pivot_cols[r];
      CHECK(h.h.at(r, pc) > 0);
      for (int i = 0; i < r; ++i) {
        CHECK(h.h.at(i, pc) >= 0);
        CHECK(h.h.at(i, pc) < h.h.at(r, pc));
      }
    }
  }
}

TEST_CASE("determinant by fraction-free elimination") {
  CHECK(determinant(IntMat::identity(3)) == 1);
  CHECK(determinant(mat(2, 2, {2, 0, 0, 3})) == 6);
  CHECK(determinant(mat(2, 2, {1, 2, 2, 4})) == 0);
  CHECK(determinant(mat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
  // 2x2 brute-force cross-check on random inputs.
  std::mt19937 rng(99);
  for (int t = 0; t < 50; ++t) {
    const IntMat m = oracles::random_matrix(rng, 2, 2);
    CHECK(determinant(m) == m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0));
  }
}
