#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parlearn/errors.hpp"
#include "parlearn/linalg.hpp"
#include "parlearn/rational.hpp"

using namespace parlearn;

TEST_SUITE("exact_linalg") {

TEST_CASE("rational parsing and canonical strings") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("2/-4"), ParseError);
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("solve examples") {
  CHECK(solve(Matrix{{1}}, {Rational(5)}) == Vector{Rational(5)});
  CHECK(solve(Matrix{{3, 1}, {1, 1}}, {Rational(1), Rational(1)}) ==
        Vector{Rational(0), Rational(1)});
  CHECK_THROWS_AS(solve(Matrix{{1, 1}, {2, 2}}, {Rational(1), Rational(1)}), Singular);
  CHECK_THROWS_AS(solve(Matrix(2, 3), Vector(2)), DimensionMismatch);
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(rank(Matrix{{3, 1}, {1, 1}}) == 2);
  CHECK(rank(Matrix{{1, 2, 3}, {2, 4, 6}}) == 1);
}

TEST_CASE("solve_matrix_system examples") {
  const Matrix i2 = Matrix::identity(2);
  {
    std::vector<Matrix> blocks{i2};
    auto s = solve_matrix_system(blocks, i2);
    CHECK(s.consistent);
    CHECK(s.coefficients == Vector{Rational(1)});
  }
  {
    std::vector<Matrix> blocks{i2, Matrix::unit(2, 0, 1)};
    auto s = solve_matrix_system(blocks, Matrix::unit(2, 0, 1));
    CHECK(s.consistent);
    CHECK(s.coefficients == Vector{Rational(0), Rational(1)});
  }
  {
    std::vector<Matrix> blocks{i2};
    auto s = solve_matrix_system(blocks, Matrix::unit(2, 0, 0));
    CHECK_FALSE(s.consistent);
    CHECK(s.coefficients == Vector{Rational(1, 2)});
  }
  {
    std::vector<Matrix> blocks{i2, i2 * Rational(2)};
    CHECK_THROWS_AS(solve_matrix_system(blocks, i2), DegenerateBlocks);
  }
}

TEST_CASE("least_squares examples") {
  CHECK(least_squares(Matrix{{3, 1}, {1, 1}}, {Rational(1), Rational(1)}) ==
        Vector{Rational(0), Rational(1)});
  CHECK(least_squares(Matrix{{1}, {1}}, {Rational(0), Rational(2)}) == Vector{Rational(1)});
  CHECK(least_squares(Matrix{{1}, {1}}, {Rational(3), Rational(3)}) == Vector{Rational(3)});
  CHECK_THROWS_AS(least_squares(Matrix{{1, 2}, {2, 4}}, {Rational(1), Rational(1)}),
                  DegenerateColumns);
}

TEST_CASE("property: M * solve(M, b) == b for random invertible M") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix m(n, n);
    Vector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = oracle::random_rational(rng, 5);
      for (std::size_t j = 0; j < n; ++j) m(i, j) = oracle::random_rational(rng, 5);
    }
    if (rank(m) < n) continue;
    CHECK(m * solve(m, b) == b);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("property: rank invariants") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    Matrix m(r, c);
    // Small range so rank deficiency happens often.
    std::uniform_int_distribution<int> d(-1, 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    const auto k = rank(m);
    CHECK(k == rank(m.transpose()));
    Matrix swapped = m;
    if (r >= 2)
      for (std::size_t j = 0; j < c; ++j) std::swap(swapped(0, j), swapped(r - 1, j));
    CHECK(rank(swapped) == k);
    Matrix scaled = m;
    for (std::size_t j = 0; j < c; ++j) scaled(0, j) *= Rational(-7, 3);
    CHECK(rank(scaled) == k);
  }
}

TEST_CASE("property: consistent flag implies exact reconstruction") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 2, count = 1 + trial % 3;
    std::vector<Matrix> blocks;
    for (std::size_t k = 0; k < count; ++k) {
      Matrix b(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = oracle::random_rational(rng, 3);
      blocks.push_back(b);
    }
    // Half the targets are built inside the span.
    Matrix target(n, n);
    if (trial % 2 == 0) {
      for (const auto& b : blocks) target += b * oracle::random_rational(rng, 3);
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) target(i, j) = oracle::random_rational(rng, 3);
    }
    MatrixSystemSolution s;
    try {
      s = solve_matrix_system(blocks, target);
    } catch (const DegenerateBlocks&) {
      continue;
    }
    if (trial % 2 == 0) CHECK(s.consistent);
    if (s.consistent) {
      Matrix sum(n, n);
      for (std::size_t k = 0; k < count; ++k) sum += blocks[k] * s.coefficients[k];
      CHECK(sum == target);
    }
  }
}

TEST_CASE("property: exact field axioms on random rationals") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = oracle::random_rational(rng, 1000), b = oracle::random_rational(rng, 1000),
                   c = oracle::random_rational(rng, 1000);
    CHECK(Rational((a + b) + c) == Rational(a + (b + c)));
    CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
  }
}

TEST_CASE("characteristic polynomial and rational roots") {
  // diag(1, 2, 3)
  Matrix d{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
  const auto p = characteristic_polynomial(d);
  CHECK(p == Polynomial{Rational(-6), Rational(11), Rational(-6), Rational(1)});
  auto roots = split_rational_roots(p);
  REQUIRE(roots);
  CHECK(*roots == std::vector<Rational>{1, 2, 3});
  // Non-integral rational roots: (2t - 1)(3t + 2) = 6t^2 + t - 2.
  roots = split_rational_roots({Rational(-2), Rational(1), Rational(6)});
  REQUIRE(roots);
  CHECK(*roots == std::vector<Rational>{Rational(-2, 3), Rational(1, 2)});
  CHECK_FALSE(split_rational_roots({Rational(-2), Rational(0), Rational(1)}));  // t^2 - 2
  CHECK_FALSE(split_rational_roots({Rational(1), Rational(-2), Rational(1)}));  // (t-1)^2
}

TEST_CASE("property: char poly vanishes at eigenvalues of random triangular matrices") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = oracle::random_rational(rng, 4);
    const auto p = characteristic_polynomial(m);
    for (std::size_t i = 0; i < n; ++i) CHECK(evaluate(p, m(i, i)) == 0);
  }
}

}  // TEST_SUITE
