#ifndef NILFORM_VERIFY_HPP
#define NILFORM_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/gallery.hpp"
#include "nilform/irreps.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/matrix.hpp"
#include "nilform/metric.hpp"
#include "nilform/signature.hpp"

namespace nilform {

namespace detail {

/// Index of the (i,j) entry, i <= j, among symmetric-matrix unknowns.
struct SymIndex {
  std::size_t n;
  explicit SymIndex(std::size_t dim) : n(dim) {}
  std::size_t count() const { return n * (n + 1) / 2; }
  std::size_t operator()(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  }
};

/// Skewness of phi as linear constraints on the symmetric Gram unknowns:
/// for each pair (i <= j): sum_a phi(a,i) g_{a,j} + sum_a phi(a,j) g_{i,a} = 0.
inline void append_skewness_rows(const Matrix& phi, const SymIndex& sym,
                                 IncrementalEchelon& ech) {
  const std::size_t n = phi.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec row(sym.count(), Rational(0));
      bool nonzero = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (!phi(a, i).is_zero()) {
          row[sym(a, j)] += phi(a, i);
          nonzero = true;
        }
        if (!phi(a, j).is_zero()) {
          row[sym(i, a)] += phi(a, j);
          nonzero = true;
        }
      }
      if (nonzero) ech.insert(std::move(row));
    }
}

inline Matrix gram_from_unknowns(const Vec& u, const SymIndex& sym) {
  Matrix g(sym.n, sym.n);
  for (std::size_t i = 0; i < sym.n; ++i)
    for (std::size_t j = i; j < sym.n; ++j) {
      g(i, j) = u[sym(i, j)];
      g(j, i) = u[sym(i, j)];
    }
  return g;
}

} // namespace detail

/// Exact solution of the nil-invariance constraint system on E_n. The
/// decisive generator set for a Euclidean algebra is ad of the translation
/// ideal: for n >= 3 the radical is the translations and is abelian; for
/// n = 2 the nilpotent elements of the hull are exactly ad(R^2); n = 1 is
/// abelian with no constraints at all.
struct EuclideanVerifyResult {
  long n = 0;
  std::size_t dim = 0;           // dim E_n
  std::size_t unknowns = 0;      // symmetric Gram entries
  std::size_t solution_dim = 0;  // dimension of the nil-invariant form space
  bool rn_in_kernel_all = false; // every solution kills the translation ideal
  bool exception_witness = false; // a nondegenerate invariant solution exists
  std::optional<Matrix> witness_gram;
  /// true when the computed outcome contradicts the obstruction (never on a
  /// correct build): some n outside {1,3} admitting a solution that does not
  /// kill R^n, or n in {1,3} without a nondegenerate invariant solution.
  bool contradiction = false;
  Matrix solution_basis; // rows: solutions in symmetric-unknown coordinates
};

inline EuclideanVerifyResult verify_euclidean(long n) {
  if (n < 1 || n > 8) throw validation_error("verify_euclidean supports 1 <= n <= 8");
  EuclideanVerifyResult res;
  res.n = n;
  LieAlgebra g = build_euclidean(n);
  const std::size_t dim = g.dim();
  const std::size_t so_dim = dim - std::size_t(n);
  res.dim = dim;
  detail::SymIndex sym(dim);
  res.unknowns = sym.count();
  IncrementalEchelon ech(sym.count());
  for (std::size_t t = 0; t < std::size_t(n); ++t)
    detail::append_skewness_rows(g.ad(unit_vec(dim, so_dim + t)), sym, ech);
  res.solution_dim = sym.count() - ech.rank();
  res.solution_basis = kernel_basis(ech.matrix());
  if (ech.rank() == 0) res.solution_basis = Matrix::identity(sym.count());

  res.rn_in_kernel_all = true;
  for (std::size_t r = 0; r < res.solution_basis.rows(); ++r) {
    Matrix gram = detail::gram_from_unknowns(res.solution_basis.row(r), sym);
    for (std::size_t t = 0; t < std::size_t(n); ++t)
      for (std::size_t i = 0; i < dim; ++i)
        if (!gram(i, so_dim + t).is_zero()) res.rn_in_kernel_all = false;
  }

  // known exceptional witnesses: the dual pairing on E3, the unit form on E1
  std::optional<Matrix> witness;
  if (n == 3) witness = gallery_get("e3-dual").form->gram;
  if (n == 1) witness = Matrix::identity(1);
  if (witness) {
    SymBilinearForm wform(*witness);
    bool solves = true;
    for (std::size_t t = 0; t < std::size_t(n); ++t) {
      const Matrix a = g.ad(unit_vec(dim, so_dim + t));
      if (!(a.transpose() * wform.gram + wform.gram * a).is_zero()) solves = false;
    }
    const bool nondeg = signature(wform.gram).n_zero == 0;
    const bool invariant = is_invariant(g, wform).invariant;
    res.exception_witness = solves && nondeg && invariant;
    if (res.exception_witness) res.witness_gram = *witness;
  }
  const bool expected_obstructed = (n != 1 && n != 3);
  res.contradiction =
      expected_obstructed ? !res.rn_in_kernel_all : !res.exception_witness;
  return res;
}

/// Solution space of the skew-pairing identity <x, y v> = -<y, x v> for
/// so3 against its (2l+1)-dimensional irreducible module.
struct SkewPairingResult {
  long l = 0;
  std::size_t module_dim = 0;
  std::size_t solution_dim = 0;
  /// For l = 1: the solution line is spanned by the Killing pairing under
  /// the adjoint intertwiner.
  bool killing_line = false;
  Matrix solution_basis; // rows: flattened 3 x (2l+1) pairing matrices
};

inline SkewPairingResult verify_skew_pairing(long l) {
  if (l < 0 || l > 6) throw validation_error("verify_skew_pairing supports 0 <= l <= 6");
  SkewPairingResult res;
  res.l = l;
  const auto rho = build_so3_irrep(l);
  const std::size_t m = std::size_t(2 * l + 1);
  res.module_dim = m;
  // unknowns B(i, a), flattened i * m + a
  IncrementalEchelon ech(3 * m);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j)
      for (std::size_t b = 0; b < m; ++b) {
        Vec row(3 * m, Rational(0));
        bool nonzero = false;
        for (std::size_t a = 0; a < m; ++a) {
          if (!rho[j](a, b).is_zero()) {
            row[i * m + a] += rho[j](a, b);
            nonzero = true;
          }
          if (!rho[i](a, b).is_zero()) {
            row[j * m + a] += rho[i](a, b);
            nonzero = true;
          }
        }
        if (nonzero) ech.insert(std::move(row));
      }
  res.solution_dim = 3 * m - ech.rank();
  res.solution_basis = kernel_basis(ech.matrix());
  if (ech.rank() == 0) res.solution_basis = Matrix::identity(3 * m);

  if (l == 1) {
    // adjoint intertwiner T: V -> so3 with T rho(x) = ad(x) T
    LieAlgebra so3 = build_so(3);
    Matrix system(0, 9);
    for (std::size_t k = 0; k < 3; ++k) {
      const Matrix adk = so3.ad_basis(k);
      // (T rho_k - ad_k T)(r,c) = sum_s T(r,s) rho_k(s,c) - ad_k(r,s) T(s,c)
      Matrix rows(9, 9);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
          Vec row(9, Rational(0));
          for (std::size_t s = 0; s < 3; ++s) {
            row[r * 3 + s] += rho[k](s, c);
            row[s * 3 + c] -= adk(r, s);
          }
          rows.set_row(r * 3 + c, row);
        }
      system = system.vstack(rows);
    }
    const Matrix tspace = kernel_basis(system);
    res.killing_line = false;
    if (tspace.rows() >= 1 && res.solution_dim == 1) {
      Matrix t(3, 3);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) t(r, c) = tspace(0, r * 3 + c);
      const Matrix kappa = so3.killing_gram();
      const Matrix killing_pairing = kappa * t; // B(i,a) = kappa(e_i, T e_a)
      // the solution line must be exactly the span of this pairing
      Vec flat(9);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t a = 0; a < 3; ++a) flat[i * 3 + a] = killing_pairing(i, a);
      Subspace line = Subspace::span_rows(9, res.solution_basis);
      res.killing_line = !killing_pairing.is_zero() && line.contains(flat);
    }
  }
  return res;
}

} // namespace nilform

#endif
