#ifndef NILFORM_STRUCTURE_HPP
#define NILFORM_STRUCTURE_HPP

#include <utility>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/matrix.hpp"
#include "nilform/subspace.hpp"

namespace nilform {

/// Center Z(g) = {x : [x, g] = 0}.
inline Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix stacked(0, n);
  for (std::size_t j = 0; j < n; ++j) stacked = stacked.vstack(g.ad_basis(j));
  return Subspace::kernel(stacked);
}

/// Centralizer Z_g(h) = {x : [x, v] = 0 for all v in h}.
inline Subspace centralizer(const LieAlgebra& g, const Subspace& h) {
  if (h.ambient_dim() != g.dim()) throw validation_error("centralizer ambient mismatch");
  if (h.dim() == 0) return Subspace::full(g.dim());
  Matrix stacked(0, g.dim());
  for (std::size_t b = 0; b < h.dim(); ++b)
    stacked = stacked.vstack(g.ad(h.basis_vector(b)));
  return Subspace::kernel(stacked);
}

inline bool is_abelian_subspace(const LieAlgebra& g, const Subspace& u) {
  return g.bracket_subspace(u, u).is_zero();
}

/// Derived series g >= [g,g] >= ... down to stabilization.
inline std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> chain{Subspace::full(g.dim())};
  for (;;) {
    Subspace next = g.bracket_subspace(chain.back(), chain.back());
    if (next == chain.back()) break;
    chain.push_back(next);
    if (chain.back().is_zero()) break;
  }
  return chain;
}

/// Lower central series g >= [g,g] >= [g,[g,g]] >= ...
inline std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::full(g.dim());
  std::vector<Subspace> chain{whole};
  for (;;) {
    Subspace next = g.bracket_subspace(whole, chain.back());
    if (next == chain.back()) break;
    chain.push_back(next);
    if (chain.back().is_zero()) break;
  }
  return chain;
}

inline bool is_solvable_subspace(const LieAlgebra& g, Subspace u) {
  for (std::size_t guard = 0; guard <= g.dim() + 1; ++guard) {
    if (u.is_zero()) return true;
    Subspace next = g.bracket_subspace(u, u);
    if (next == u) return false;
    u = std::move(next);
  }
  return false;
}

/// Solvable radical via the Cartan criterion: {x : kappa(x, [g,g]) = 0}.
inline Subspace radical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Subspace derived = g.bracket_subspace(Subspace::full(n), Subspace::full(n));
  if (derived.is_zero()) return Subspace::full(n); // abelian
  Matrix kappa = g.killing_gram();
  // constraints (kappa * d_b)^T x = 0 for each derived-subalgebra basis vector
  Matrix constraints(derived.dim(), n);
  for (std::size_t b = 0; b < derived.dim(); ++b) {
    Vec col = kappa.apply(derived.basis_vector(b));
    constraints.set_row(b, col);
  }
  return Subspace::kernel(constraints);
}

/// Module of invariants V^h = {v in V : [x, v] = 0 for all x in h}.
/// Requires V to be h-stable.
inline Subspace invariants(const LieAlgebra& g, const Subspace& h, const Subspace& v) {
  if (h.ambient_dim() != g.dim() || v.ambient_dim() != g.dim())
    throw validation_error("invariants: ambient mismatch");
  for (std::size_t b = 0; b < h.dim(); ++b) {
    Subspace hb = Subspace::span(g.dim(), {h.basis_vector(b)});
    if (!v.contains(g.bracket_subspace(hb, v)))
      throw validation_error("invariants: module subspace is not stable under the subalgebra");
  }
  if (v.dim() == 0 || h.dim() == 0) return v;
  // work in V-coordinates: stack ad(x_b) restricted to V
  const Matrix vbasis_t = v.basis().transpose(); // ambient x dimV
  Matrix stacked(0, v.dim());
  for (std::size_t b = 0; b < h.dim(); ++b)
    stacked = stacked.vstack(g.ad(h.basis_vector(b)) * vbasis_t);
  Subspace t_kernel = Subspace::kernel(stacked);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < t_kernel.dim(); ++i)
    rows.push_back(v.from_coordinates(t_kernel.basis_vector(i)));
  return Subspace::span(g.dim(), rows);
}

/// Greatest fixed point of W <- {x in W : [g, x] <= W}; the unique maximal
/// ideal of g contained in W.
inline Subspace largest_ideal_in(const LieAlgebra& g, Subspace w) {
  const std::size_t n = g.dim();
  for (;;) {
    if (w.is_zero()) return w;
    // x in W with ad(e_i) x in W for all i: annihilator rows kill x and ad(e_i) x
    const Subspace ann = w.annihilator();
    Matrix stacked = ann.basis();
    for (std::size_t i = 0; i < n; ++i)
      stacked = stacked.vstack(ann.basis() * g.ad_basis(i));
    Subspace next = Subspace::kernel(stacked);
    if (next == w) return w;
    w = std::move(next);
  }
}

/// Subalgebra seen as an algebra in its own basis (the RREF basis rows of
/// the subspace become the new basis, in order).
struct RestrictedAlgebra {
  LieAlgebra algebra;
  Subspace space; // embedding data: basis rows are the new basis vectors

  Vec to_ambient(const Vec& local) const { return space.from_coordinates(local); }
  Subspace map_to_ambient(const Subspace& local) const {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < local.dim(); ++i)
      rows.push_back(space.from_coordinates(local.basis_vector(i)));
    return Subspace::span(space.ambient_dim(), rows);
  }
};

inline RestrictedAlgebra restrict_to_subalgebra(const LieAlgebra& g, const Subspace& u) {
  const std::size_t m = u.dim();
  LieAlgebra sub(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec z = g.bracket(u.basis_vector(a), u.basis_vector(b));
      auto coords = u.coordinates_of(z);
      if (!coords) throw validation_error("restrict_to_subalgebra: subspace is not closed under the bracket");
      sub.set_bracket(a, b, *coords);
    }
  return RestrictedAlgebra{std::move(sub), u};
}

/// Quotient g/I by an ideal, on the standard-basis complement of the ideal's
/// pivot coordinates (canonical given the RREF representative).
struct QuotientAlgebra {
  LieAlgebra algebra;
  Subspace ideal;
  std::vector<std::size_t> section_coords; // ambient coordinates carrying the quotient basis

  /// Quotient coordinates of an ambient vector.
  Vec project(const Vec& x) const {
    Vec rem = x;
    const Matrix& b = ideal.basis();
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      std::size_t p = 0;
      while (b(r, p).is_zero()) ++p;
      if (!rem[p].is_zero()) {
        const Rational f = rem[p];
        for (std::size_t j = 0; j < rem.size(); ++j)
          if (!b(r, j).is_zero()) rem[j] -= f * b(r, j);
      }
    }
    Vec q(section_coords.size());
    for (std::size_t i = 0; i < section_coords.size(); ++i) q[i] = rem[section_coords[i]];
    return q;
  }

  /// Canonical section: quotient coordinates land on the complement coordinates.
  Vec lift(const Vec& q) const {
    Vec x(ideal.ambient_dim(), Rational(0));
    for (std::size_t i = 0; i < section_coords.size(); ++i) x[section_coords[i]] = q[i];
    return x;
  }
};

inline QuotientAlgebra quotient_by_ideal(const LieAlgebra& g, const Subspace& ideal) {
  if (!ideal.contains(g.bracket_subspace(Subspace::full(g.dim()), ideal)))
    throw validation_error("quotient_by_ideal: subspace is not an ideal");
  const std::size_t n = g.dim();
  std::vector<bool> is_pivot(n, false);
  const Matrix& b = ideal.basis();
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    std::size_t p = 0;
    while (b(r, p).is_zero()) ++p;
    is_pivot[p] = true;
  }
  QuotientAlgebra q;
  q.ideal = ideal;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) q.section_coords.push_back(j);
  const std::size_t m = q.section_coords.size();
  LieAlgebra quot(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c) {
      Vec z = g.bracket(unit_vec(n, q.section_coords[a]), unit_vec(n, q.section_coords[c]));
      quot.set_bracket(a, c, q.project(z));
    }
  q.algebra = std::move(quot);
  return q;
}

} // namespace nilform

#endif
