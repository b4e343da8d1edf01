#ifndef NILFORM_IRREPS_HPP
#define NILFORM_IRREPS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/matrix.hpp"
#include "nilform/subspace.hpp"

namespace nilform {

namespace detail {

/// Monomials x^a y^b z^c with a+b+c = l, in lexicographic order.
struct MonomialBasis {
  long l;
  std::vector<std::array<long, 3>> exps;

  explicit MonomialBasis(long degree) : l(degree) {
    for (long a = degree; a >= 0; --a)
      for (long b = degree - a; b >= 0; --b) exps.push_back({a, b, degree - a - b});
  }

  std::size_t size() const { return exps.size(); }

  std::size_t index_of(long a, long b, long c) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i][0] == a && exps[i][1] == b && exps[i][2] == c) return i;
    throw internal_error("monomial not found");
  }
};

/// Matrix of the Laplacian P_l -> P_{l-2} between monomial bases.
inline Matrix laplacian_matrix(const MonomialBasis& from, const MonomialBasis& to) {
  Matrix m(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    const auto [a, b, c] = from.exps[j];
    if (a >= 2) m(to.index_of(a - 2, b, c), j) += Rational(a * (a - 1));
    if (b >= 2) m(to.index_of(a, b - 2, c), j) += Rational(b * (b - 1));
    if (c >= 2) m(to.index_of(a, b, c - 2), j) += Rational(c * (c - 1));
  }
  return m;
}

/// Rotation generator x_p d/dq - x_q d/dp on P_l (the action of E_pq - E_qp
/// on functions, f -> -grad(f).(Kx)).
inline Matrix rotation_operator(const MonomialBasis& basis, int p, int q) {
  const std::size_t n = basis.size();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::array<long, 3> e = basis.exps[j];
    // x_p * d/dx_q
    if (e[q] >= 1) {
      std::array<long, 3> t = e;
      t[q] -= 1;
      t[p] += 1;
      m(basis.index_of(t[0], t[1], t[2]), j) += Rational(e[q]);
    }
    // - x_q * d/dx_p
    if (e[p] >= 1) {
      std::array<long, 3> t = e;
      t[p] -= 1;
      t[q] += 1;
      m(basis.index_of(t[0], t[1], t[2]), j) -= Rational(e[p]);
    }
  }
  return m;
}

} // namespace detail

/// The real irreducible so3-module of dimension 2l+1, realized on harmonic
/// homogeneous polynomials of degree l. Returns the three action matrices
/// for the basis (E12-E21, E13-E31, E23-E32); exact rational entries, and the
/// matrices satisfy the same bracket relations as that basis.
inline std::array<Matrix, 3> build_so3_irrep(long l) {
  if (l < 0) throw validation_error("irrep label must be nonnegative");
  detail::MonomialBasis basis(l);
  Subspace harmonics = Subspace::full(basis.size());
  if (l >= 2) {
    detail::MonomialBasis lower(l - 2);
    harmonics = Subspace::kernel(detail::laplacian_matrix(basis, lower));
  }
  if (harmonics.dim() != std::size_t(2 * l + 1))
    throw internal_error("harmonic space has unexpected dimension");

  // generators matching (E12-E21, E13-E31, E23-E32): for K = E_ij - E_ji the
  // operator -grad(f).(Kx) is x_i d/dx_j - x_j d/dx_i
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  std::array<Matrix, 3> action{Matrix(), Matrix(), Matrix()};
  const std::size_t h = harmonics.dim();
  for (std::size_t k = 0; k < 3; ++k) {
    const Matrix op = detail::rotation_operator(basis, pairs[k].first, pairs[k].second);
    Matrix local(h, h);
    for (std::size_t col = 0; col < h; ++col) {
      Vec image = op.apply(harmonics.basis_vector(col));
      auto coords = harmonics.coordinates_of(image);
      if (!coords) throw internal_error("rotation does not preserve harmonics");
      for (std::size_t row = 0; row < h; ++row) local(row, col) = (*coords)[row];
    }
    action[k] = std::move(local);
  }
  return action;
}

} // namespace nilform

#endif
