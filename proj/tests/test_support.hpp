#ifndef NILFORM_TEST_SUPPORT_HPP
#define NILFORM_TEST_SUPPORT_HPP

#include "nilform/matrix.hpp"
#include "nilform/rng.hpp"
#include "nilform/subspace.hpp"

namespace nilform::testing {

inline Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                            long lo = -4, long hi = 4) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.range(lo, hi));
  return m;
}

/// Unit lower * unit upper * permutation: always invertible, small entries.
inline Matrix random_invertible(SplitMix64& rng, std::size_t n, long lo = -2, long hi = 2) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) l(i, j) = Rational(rng.range(lo, hi));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = Rational(rng.range(lo, hi));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[std::size_t(rng.range(0, long(i) - 1))]);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = Rational(1);
  return l * u * p;
}

/// Membership of X in the unital algebra generated by M (span of powers).
inline bool in_generated_algebra(const Matrix& m, const Matrix& x) {
  const std::size_t n = m.rows();
  std::vector<Vec> rows;
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = p(i, j);
    rows.push_back(std::move(v));
    p = p * m;
  }
  Subspace span = Subspace::span(n * n, rows);
  Vec vx(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vx[i * n + j] = x(i, j);
  return span.contains(vx);
}

inline Subspace random_subspace(SplitMix64& rng, std::size_t ambient, std::size_t gens) {
  return Subspace::span_rows(ambient, random_matrix(rng, gens, ambient, -3, 3));
}

} // namespace nilform::testing

#endif
