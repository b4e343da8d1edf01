#ifndef NILFORM_LEVI_HPP
#define NILFORM_LEVI_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/matrix.hpp"
#include "nilform/polynomial.hpp"
#include "nilform/rng.hpp"
#include "nilform/signature.hpp"
#include "nilform/structure.hpp"
#include "nilform/subspace.hpp"

namespace nilform {

namespace detail {

/// Levi complement when the radical is abelian: pick a vector-space
/// complement m, write the bracket defect as a 2-cocycle beta on m with
/// values in the radical, and solve beta = d(phi) for a linear correction
/// phi: m -> r. The corrected graph {x + phi(x)} is the Levi subalgebra;
/// solvability is Whitehead's lemma.
inline Subspace levi_space_abelian(const LieAlgebra& g, const Subspace& rad) {
  const std::size_t n = g.dim();
  const Subspace m = rad.complement_in(Subspace::full(n));
  const std::size_t dm = m.dim(), dr = rad.dim();

  // coordinates in the combined basis (m rows, then rad rows)
  Matrix combined = m.basis().vstack(rad.basis());
  auto inv = inverse(combined.transpose());
  if (!inv) throw internal_error("complement does not complete the radical to a basis");
  const Matrix& to_coords = *inv; // coords = to_coords * z

  // D_a[s][t]: [x_a, r_t] = sum_s D_a[s][t] r_s  (the radical is an ideal)
  std::vector<Matrix> action(dm, Matrix(dr, dr));
  for (std::size_t a = 0; a < dm; ++a) {
    const Vec xa = m.basis_vector(a);
    for (std::size_t t = 0; t < dr; ++t) {
      Vec z = g.bracket(xa, rad.basis_vector(t));
      auto coords = rad.coordinates_of(z);
      if (!coords) throw internal_error("radical is not an ideal");
      for (std::size_t s = 0; s < dr; ++s) action[a](s, t) = (*coords)[s];
    }
  }

  // mu and beta parts of [x_a, x_b]
  const std::size_t pairs = dm * (dm - 1) / 2;
  Matrix system(pairs * dr, dm * dr);
  Vec rhs(pairs * dr, Rational(0));
  std::size_t pair_index = 0;
  for (std::size_t a = 0; a < dm; ++a) {
    for (std::size_t b = a + 1; b < dm; ++b, ++pair_index) {
      Vec coords = to_coords.apply(g.bracket(m.basis_vector(a), m.basis_vector(b)));
      // coords[0..dm) = mu, coords[dm..dm+dr) = beta
      for (std::size_t s = 0; s < dr; ++s) {
        const std::size_t row = pair_index * dr + s;
        for (std::size_t t = 0; t < dr; ++t) {
          if (!action[a](s, t).is_zero()) system(row, b * dr + t) += action[a](s, t);
          if (!action[b](s, t).is_zero()) system(row, a * dr + t) -= action[b](s, t);
        }
        for (std::size_t c = 0; c < dm; ++c)
          if (!coords[c].is_zero()) system(row, c * dr + s) -= coords[c];
        rhs[row] = -coords[dm + s];
      }
    }
  }

  auto sol = solve_linear(system, rhs);
  if (!sol) throw internal_error("Levi cocycle equation is inconsistent");
  std::vector<Vec> levi_rows;
  levi_rows.reserve(dm);
  for (std::size_t a = 0; a < dm; ++a) {
    Vec row = m.basis_vector(a);
    Vec phi_a(n, Rational(0));
    for (std::size_t t = 0; t < dr; ++t) {
      const Rational& f = sol->particular[a * dr + t];
      if (f.is_zero()) continue;
      const Vec rt = rad.basis_vector(t);
      for (std::size_t j = 0; j < n; ++j)
        if (!rt[j].is_zero()) phi_a[j] += f * rt[j];
    }
    levi_rows.push_back(vec_add(row, phi_a));
  }
  return Subspace::span(n, levi_rows);
}

} // namespace detail

/// A Levi complement to the radical, by induction over the derived series
/// of the radical (each step quotients by [r,r] and solves one abelian step).
inline Subspace levi_subalgebra_space(const LieAlgebra& g) {
  Subspace rad = radical(g);
  if (rad.dim() == 0) return Subspace::full(g.dim());
  if (rad.is_full()) return Subspace::zero(g.dim());
  Subspace rad2 = g.bracket_subspace(rad, rad);
  if (rad2.is_zero()) return detail::levi_space_abelian(g, rad);

  QuotientAlgebra q = quotient_by_ideal(g, rad2);
  Subspace lbar = levi_subalgebra_space(q.algebra);
  std::vector<Vec> rows;
  rows.reserve(lbar.dim());
  for (std::size_t i = 0; i < lbar.dim(); ++i) rows.push_back(q.lift(lbar.basis_vector(i)));
  Subspace preimage = Subspace::span(g.dim(), rows).sum(rad2);
  RestrictedAlgebra sub = restrict_to_subalgebra(g, preimage);
  Subspace lp = levi_subalgebra_space(sub.algebra);
  return sub.map_to_ambient(lp);
}

namespace detail {

/// Commutant of the adjoint representation: all T with [T, ad(x)] = 0.
/// Returned as a basis of matrices. Any commuting T is block diagonal in an
/// adapted basis from the primary decomposition of one generic inner
/// derivation, which cuts the unknown count from n^2 to the block squares.
inline std::vector<Matrix> adjoint_commutant(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  if (n == 0) return {};
  Vec generic(n);
  for (std::size_t i = 0; i < n; ++i) generic[i] = Rational(long(i + 1));
  const Matrix a = l.ad(generic);
  std::vector<Subspace> blocks;
  try {
    std::size_t total = 0;
    for (const auto& [fac, mult] : factor_poly(minimal_polynomial(a))) {
      Poly power = Poly::constant(Rational(1));
      for (int e = 0; e < mult; ++e) power = power * fac;
      Subspace comp = Subspace::kernel(power.eval_matrix(a));
      total += comp.dim();
      blocks.push_back(std::move(comp));
    }
    if (total != n) blocks.clear();
  } catch (const validation_error&) {
    blocks.clear(); // factorization beyond desk-scale methods: single block
  }
  if (blocks.empty()) blocks.push_back(Subspace::full(n));

  // adapted basis: columns are the block basis vectors in order
  Matrix stacked(0, n);
  std::vector<std::size_t> block_of(n), offset_in_block(n), block_offset;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    block_offset.push_back(pos);
    for (std::size_t i = 0; i < blocks[k].dim(); ++i, ++pos) {
      block_of[pos] = k;
      offset_in_block[pos] = i;
    }
    stacked = stacked.vstack(blocks[k].basis());
  }
  const Matrix b = stacked.transpose();
  auto binv = inverse(b);
  if (!binv) throw internal_error("primary components do not span");

  // unknown layout: per block k, a dense dim_k x dim_k matrix
  std::vector<std::size_t> unknown_offset;
  std::size_t unknowns = 0;
  for (const auto& blk : blocks) {
    unknown_offset.push_back(unknowns);
    unknowns += blk.dim() * blk.dim();
  }
  auto unknown_index = [&](std::size_t r, std::size_t c) {
    // entry (r, c) of the block-diagonal T~, r and c in the same block
    const std::size_t k = block_of[r];
    return unknown_offset[k] + offset_in_block[r] * blocks[k].dim() + offset_in_block[c];
  };

  IncrementalEchelon ech(unknowns);
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix m = *binv * l.ad_basis(j) * b;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Vec row(unknowns, Rational(0));
        bool nonzero = false;
        const std::size_t kr = block_of[r], kc = block_of[c];
        // sum_k T(r,k) M(k,c) over k in block(r)
        for (std::size_t i = 0; i < blocks[kr].dim(); ++i) {
          const std::size_t k = block_offset[kr] + i;
          if (m(k, c).is_zero()) continue;
          row[unknown_index(r, k)] += m(k, c);
          nonzero = true;
        }
        // - sum_k M(r,k) T(k,c) over k in block(c)
        for (std::size_t i = 0; i < blocks[kc].dim(); ++i) {
          const std::size_t k = block_offset[kc] + i;
          if (m(r, k).is_zero()) continue;
          row[unknown_index(k, c)] -= m(r, k);
          nonzero = true;
        }
        if (nonzero) ech.insert(std::move(row));
      }
  }
  const Matrix ker = kernel_basis(ech.matrix());
  std::vector<Matrix> out;
  out.reserve(ker.rows());
  for (std::size_t v = 0; v < ker.rows(); ++v) {
    Matrix t(n, n);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const std::size_t d = blocks[k].dim();
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          t(block_offset[k] + r, block_offset[k] + c) =
              ker(v, unknown_offset[k] + r * d + c);
    }
    out.push_back(b * t * *binv);
  }
  return out;
}

/// Splits a semisimple algebra into its minimal (= simple) ideals. Probes
/// are drawn from the adjoint commutant: basis elements first, then pairwise
/// sums, then seeded random combinations; primary components of a probe are
/// ideals because polynomials in the probe commute with every ad(x).
inline void split_simple_ideals_local(const LieAlgebra& l, std::uint64_t seed,
                                      std::vector<Subspace>& out) {
  const std::size_t n = l.dim();
  if (n == 0) return;
  std::vector<Matrix> comm = adjoint_commutant(l);
  if (comm.size() <= 1) {
    out.push_back(Subspace::full(n));
    return;
  }
  std::vector<Matrix> probes;
  for (const auto& t : comm) probes.push_back(t);
  for (std::size_t i = 0; i < comm.size(); ++i)
    for (std::size_t j = i + 1; j < comm.size(); ++j) probes.push_back(comm[i] + comm[j]);
  SplitMix64 rng(seed ^ 0x5eed5eedULL);
  for (int k = 0; k < 24; ++k) {
    Matrix t(n, n);
    for (const auto& b : comm) {
      Rational f(rng.range(-4, 4));
      if (!f.is_zero()) t += f * b;
    }
    probes.push_back(std::move(t));
  }

  for (const Matrix& t : probes) {
    const Poly mu = minimal_polynomial(t);
    auto factors = factor_poly(mu);
    if (factors.size() < 2) continue;
    std::vector<Subspace> components;
    std::size_t total = 0;
    bool good = true;
    for (const auto& [fac, mult] : factors) {
      Poly power = Poly::constant(Rational(1));
      for (int e = 0; e < mult; ++e) power = power * fac;
      Subspace comp = Subspace::kernel(power.eval_matrix(t));
      if (comp.is_zero() || comp.is_full()) { good = false; break; }
      if (!comp.contains(l.bracket_subspace(Subspace::full(n), comp))) {
        good = false; // not an ideal: probe unusable
        break;
      }
      total += comp.dim();
      components.push_back(std::move(comp));
    }
    if (!good || total != n) continue;
    for (const auto& comp : components) {
      RestrictedAlgebra sub = restrict_to_subalgebra(l, comp);
      std::vector<Subspace> inner;
      split_simple_ideals_local(sub.algebra, seed, inner);
      for (const auto& s : inner) out.push_back(sub.map_to_ambient(s));
    }
    return;
  }
  // no probe split the algebra: commutant is a field, the algebra is simple
  out.push_back(Subspace::full(n));
}

} // namespace detail

/// Simple ideals of a semisimple algebra (Killing form must be nondegenerate).
inline std::vector<Subspace> split_simple_ideals(const LieAlgebra& semisimple,
                                                 std::uint64_t seed = 0) {
  Matrix kappa = semisimple.killing_gram();
  if (signature(kappa).n_zero != 0)
    throw hypothesis_error("split_simple_ideals: Killing form is degenerate, not semisimple");
  std::vector<Subspace> out;
  detail::split_simple_ideals_local(semisimple, seed, out);
  return out;
}

/// Radical, Levi complement, compact/noncompact split and simple ideals.
struct LeviDecomposition {
  SubalgebraHandle radical_part; // R
  SubalgebraHandle levi;
  SubalgebraHandle compact_part;    // K: sum of ideals with negative definite Killing form
  SubalgebraHandle noncompact_part; // S
  SubalgebraHandle gs;              // S + R
  std::vector<SubalgebraHandle> simple_ideals;
  std::vector<Signature> simple_signatures; // Killing signature per simple ideal
  bool radical_abelian = false;
};

inline LeviDecomposition levi_decompose(const LieAlgebra& g, std::uint64_t seed = 0) {
  g.require_valid();
  const std::size_t n = g.dim();
  LeviDecomposition d;
  Subspace rad = radical(g);
  Subspace levi = levi_subalgebra_space(g);
  if (!levi.intersect(rad).is_zero() || levi.sum(rad).dim() != n)
    throw internal_error("Levi complement does not complement the radical");
  d.radical_part = SubalgebraHandle::analyze(g, rad);
  d.levi = SubalgebraHandle::analyze(g, levi);
  if (!d.levi.is_subalgebra) throw internal_error("Levi complement is not a subalgebra");
  d.radical_abelian = d.radical_part.is_abelian;

  Subspace compact = Subspace::zero(n);
  Subspace noncompact = Subspace::zero(n);
  if (levi.dim() > 0) {
    RestrictedAlgebra lr = restrict_to_subalgebra(g, levi);
    Matrix kappa = lr.algebra.killing_gram();
    for (const Subspace& ideal_local : split_simple_ideals(lr.algebra, seed)) {
      // Killing form of the ideal as an algebra = restriction of the Levi's
      const Matrix b = ideal_local.basis();
      Matrix restricted = b * kappa * b.transpose();
      Signature sig = signature(restricted);
      Subspace ambient_ideal = lr.map_to_ambient(ideal_local);
      d.simple_signatures.push_back(sig);
      d.simple_ideals.push_back(SubalgebraHandle::analyze(g, ambient_ideal));
      if (sig.n_plus == 0 && sig.n_zero == 0)
        compact = compact.sum(ambient_ideal);
      else
        noncompact = noncompact.sum(ambient_ideal);
    }
  }
  d.compact_part = SubalgebraHandle::analyze(g, compact);
  d.noncompact_part = SubalgebraHandle::analyze(g, noncompact);
  d.gs = SubalgebraHandle::analyze(g, noncompact.sum(rad));
  return d;
}

} // namespace nilform

#endif
