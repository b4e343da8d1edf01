#ifndef NILFORM_JORDAN_HPP
#define NILFORM_JORDAN_HPP

#include <cstddef>

#include "nilform/errors.hpp"
#include "nilform/matrix.hpp"
#include "nilform/polynomial.hpp"

namespace nilform {

inline bool is_nilpotent_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw validation_error("nilpotency test on non-square matrix");
  Matrix p = m;
  std::size_t steps = 1;
  while (steps < 2 * m.rows() + 2) {
    if (p.is_zero()) return true;
    p = p * p;
    steps *= 2;
  }
  return p.is_zero();
}

/// Additive Jordan-Chevalley decomposition M = S + N with S semisimple,
/// N nilpotent, [S,N] = 0, both polynomials in M.
struct JordanParts {
  Matrix semisimple;
  Matrix nilpotent;
};

/// Computed entirely over Q: Newton lifting against the squarefree part of
/// the minimal polynomial, no eigenvalue extraction.
inline JordanParts jordan_chevalley(const Matrix& m) {
  if (m.rows() != m.cols()) throw validation_error("jordan_chevalley of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {m, m};
  const Poly mu = minimal_polynomial(m);
  const Poly f = squarefree_part(mu);
  if (f.degree() == mu.degree()) {
    // minimal polynomial already squarefree: M is semisimple
    return {m, Matrix::zero(n, n)};
  }
  // f is squarefree, so gcd(f, f') = 1: u f + v f' = 1.
  PolyEgcd e = poly_egcd(f, f.derivative());
  if (e.g.degree() != 0) throw internal_error("squarefree part not coprime with derivative");
  // x_{k+1} = x_k - v(x_k) f(x_k) converges to the semisimple part
  Matrix x = m;
  for (std::size_t iter = 0; iter <= 2 * n + 2; ++iter) {
    Matrix fx = f.eval_matrix(x);
    if (fx.is_zero()) {
      Matrix nil = m - x;
      return {std::move(x), std::move(nil)};
    }
    x = x - e.v.eval_matrix(x) * fx;
  }
  throw internal_error("Jordan-Chevalley iteration failed to converge");
}

} // namespace nilform

#endif
