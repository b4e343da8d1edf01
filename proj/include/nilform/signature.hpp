#ifndef NILFORM_SIGNATURE_HPP
#define NILFORM_SIGNATURE_HPP

#include <cstddef>
#include <string>

#include "nilform/errors.hpp"
#include "nilform/matrix.hpp"

namespace nilform {

/// Sylvester inertia triple (n_plus, n_minus, n_zero).
struct Signature {
  long n_plus = 0;
  long n_minus = 0;
  long n_zero = 0;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.n_plus == b.n_plus && a.n_minus == b.n_minus && a.n_zero == b.n_zero;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

  std::string str() const {
    return "(" + std::to_string(n_plus) + "," + std::to_string(n_minus) + "," +
           std::to_string(n_zero) + ")";
  }
};

/// Exact congruence diagonalization with symmetric pivoting. Handles the
/// all-zero-diagonal case by the row+column addition trick.
inline Signature signature(const Matrix& gram) {
  if (!gram.is_symmetric()) throw validation_error("signature of a non-symmetric matrix");
  Matrix g = gram;
  const std::size_t n = g.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    // find a nonzero diagonal pivot at or after position k
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!g(i, i).is_zero()) { piv = i; break; }
    if (piv == n) {
      // all remaining diagonal entries vanish; look for off-diagonal entry
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!g(i, j).is_zero()) { oi = i; oj = j; break; }
      if (oi == n) break; // trailing block is zero
      // congruence: row oi += row oj, col oi += col oj gives 2*g(oi,oj) on the diagonal
      for (std::size_t j = 0; j < n; ++j) g(oi, j) += g(oj, j);
      for (std::size_t i = 0; i < n; ++i) g(i, oi) += g(i, oj);
      piv = oi;
    }
    if (piv != k) {
      // symmetric swap of rows/cols piv <-> k
      for (std::size_t j = 0; j < n; ++j) std::swap(g(piv, j), g(k, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(g(i, piv), g(i, k));
    }
    const Rational d = g(k, k);
    if (d.sign() > 0) ++sig.n_plus; else ++sig.n_minus;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (g(i, k).is_zero()) continue;
      const Rational f = g(i, k) / d;
      for (std::size_t j = k; j < n; ++j)
        if (!g(k, j).is_zero()) g(i, j) -= f * g(k, j);
      for (std::size_t j = k; j < n; ++j)
        if (!g(j, k).is_zero()) g(j, i) -= f * g(j, k);
    }
  }
  sig.n_zero = long(n) - sig.n_plus - sig.n_minus;
  return sig;
}

} // namespace nilform

#endif
