#include "parlearn/linalg.hpp"

#include <algorithm>
#include <utility>

#include "parlearn/errors.hpp"

namespace parlearn {

namespace {

// Reduces m in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / Rational(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Vector solve(const Matrix& m, const Vector& b) {
  if (!m.square()) throw DimensionMismatch("solve: matrix not square");
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  if (row_reduce(aug, n).size() != n) {
    throw Singular("solve: matrix of size " + std::to_string(n) +
                   " is singular");
  }
  return aug.column(n);
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return row_reduce(work, work.cols()).size();
}

Vector least_squares(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("least_squares: rhs");
  const Matrix at = a.transpose();
  try {
    return solve(at * a, at * b);
  } catch (const Singular&) {
    throw DegenerateColumns("least_squares: columns are linearly dependent");
  }
}

MatrixSystemSolution solve_matrix_system(std::span<const Matrix> blocks,
                                         const Matrix& target) {
  if (blocks.empty()) throw DimensionMismatch("solve_matrix_system: no blocks");
  std::vector<Vector> columns;
  columns.reserve(blocks.size());
  for (const auto& block : blocks) {
    if (block.rows() != target.rows() || block.cols() != target.cols()) {
      throw DimensionMismatch("solve_matrix_system: block shape");
    }
    columns.push_back(block.flat());
  }
  const Matrix a = Matrix::from_columns(columns);
  if (rank(a) < blocks.size()) {
    throw DegenerateBlocks("flattened blocks are linearly dependent");
  }
  MatrixSystemSolution out;
  out.coefficients = least_squares(a, target.flat());
  out.consistent = (a * out.coefficients) == target.flat();
  return out;
}

Rational evaluate(const Polynomial& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.square()) throw DimensionMismatch("characteristic_polynomial");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = m.rows();
  Polynomial c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const Matrix amk = m * mk;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

namespace {

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Polynomial remainder(Polynomial a, const Polynomial& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

int sign_of(const Rational& x) { return sgn(x); }

std::size_t sign_changes(const std::vector<Polynomial>& chain,
                         const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::optional<std::vector<Rational>> split_rational_roots(const Polynomial& p_in) {
  Polynomial p = p_in;
  trim(p);
  if (p.empty()) return std::nullopt;
  const std::size_t degree = p.size() - 1;
  if (degree == 0) return std::vector<Rational>{};

  // Primitive integer form, positive leading coefficient.
  mpz_class den_lcm = 1;
  for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                  c.get_den_mpz_t());
  std::vector<mpz_class> a(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    a[i] = p[i].get_num() * (den_lcm / p[i].get_den());
  }
  if (a.back() < 0)
    for (auto& x : a) x = -x;

  // Substituting u = lead * t gives a monic integer polynomial whose rational
  // roots are exactly lead * (roots of p), hence integers.
  const mpz_class lead = a.back();
  Polynomial monic(p.size());
  mpz_class scale = 1;
  for (std::size_t k = degree; k-- > 0;) {
    monic[k] = a[k] * scale;
    scale *= lead;
  }
  monic[degree] = 1;

  std::vector<Polynomial> chain{monic, derivative(monic)};
  while (true) {
    Polynomial r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  if (chain.back().size() > 1) return std::nullopt;  // repeated roots

  mpz_class bound = 0;
  for (std::size_t k = 0; k < degree; ++k) {
    const mpz_class v = abs(monic[k].get_num());
    if (v > bound) bound = v;
  }
  bound += 1;

  // Integers in (lo, hi] are bracketed by the half-integers lo + 1/2, hi + 1/2.
  const Rational half(1, 2);
  std::vector<Rational> roots;
  bool ok = true;
  auto count = [&](const mpz_class& lo, const mpz_class& hi) {
    return sign_changes(chain, Rational(lo) + half) -
           sign_changes(chain, Rational(hi) + half);
  };
  auto search = [&](auto&& self, const mpz_class& lo, const mpz_class& hi,
                    std::size_t roots_inside) -> void {
    if (!ok || roots_inside == 0) return;
    if (hi - lo == 1) {
      if (roots_inside != 1 || evaluate(monic, Rational(hi)) != 0) {
        ok = false;
        return;
      }
      roots.emplace_back(hi);
      return;
    }
    mpz_class mid = lo + (hi - lo) / 2;
    const std::size_t left = count(lo, mid);
    self(self, lo, mid, left);
    self(self, mid, hi, roots_inside - left);
  };
  const mpz_class lo = -bound - 1;
  const std::size_t total = count(lo, bound);
  if (total != degree) return std::nullopt;
  search(search, lo, bound, total);
  if (!ok || roots.size() != degree) return std::nullopt;
  for (auto& r : roots) r /= lead;
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace parlearn
