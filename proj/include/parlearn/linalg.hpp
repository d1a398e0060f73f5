#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parlearn/matrix.hpp"

namespace parlearn {

/// Exact solution of m x = b by rational Gauss-Jordan elimination.
/// Throws Singular when m has no unique solution.
Vector solve(const Matrix& m, const Vector& b);

std::size_t rank(const Matrix& m);

/// Solves the normal equations A^T A x = A^T b exactly. Throws
/// DegenerateColumns if the columns of a are linearly dependent.
Vector least_squares(const Matrix& a, const Vector& b);

struct MatrixSystemSolution {
  Vector coefficients;
  /// True iff sum_k coefficients[k] * blocks[k] reproduces the target exactly.
  bool consistent = false;
};

/// Finds d with sum_k d_k * blocks[k] == target by flattening every block into
/// one column of an (r*c) x n system. Inconsistent systems get the exact
/// least-squares solution. Throws DegenerateBlocks if the flattened blocks are
/// linearly dependent.
MatrixSystemSolution solve_matrix_system(std::span<const Matrix> blocks,
                                         const Matrix& target);

/// Coefficients in increasing degree: p[0] + p[1] t + ...
using Polynomial = std::vector<Rational>;

Rational evaluate(const Polynomial& p, const Rational& t);

/// det(t I - m), monic of degree m.rows().
Polynomial characteristic_polynomial(const Matrix& m);

/// If p is squarefree and splits into linear factors over Q, returns its roots
/// in increasing order; otherwise nullopt.
std::optional<std::vector<Rational>> split_rational_roots(const Polynomial& p);

}  // namespace parlearn
