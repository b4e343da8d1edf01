#ifndef NILFORM_BASIS_CHANGE_HPP
#define NILFORM_BASIS_CHANGE_HPP

#include <utility>

#include "nilform/errors.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/matrix.hpp"
#include "nilform/rng.hpp"

namespace nilform {

/// Structure constants in the basis f_a = sum_i P(i,a) e_i (P invertible).
inline LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p) {
  const std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n) throw validation_error("change_basis: shape mismatch");
  auto pinv = inverse(p);
  if (!pinv) throw validation_error("change_basis: matrix is singular");
  LieAlgebra out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec z = g.bracket(p.col(a), p.col(b));
      out.set_bracket(a, b, pinv->apply(z));
    }
  return out;
}

/// Gram matrix in the new basis: P^T G P.
inline Matrix change_gram(const Matrix& gram, const Matrix& p) {
  return p.transpose() * gram * p;
}

/// Random invertible matrix with small entries (unit triangular factors and
/// a permutation), deterministic per generator state.
inline Matrix random_change_of_basis(SplitMix64& rng, std::size_t n, long lo = -2, long hi = 2) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) l(i, j) = Rational(rng.range(lo, hi));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = Rational(rng.range(lo, hi));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[std::size_t(rng.range(0, long(i) - 1))]);
  Matrix pm(n, n);
  for (std::size_t i = 0; i < n; ++i) pm(i, perm[i]) = Rational(1);
  return l * u * pm;
}

} // namespace nilform

#endif
