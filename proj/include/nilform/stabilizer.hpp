#ifndef NILFORM_STABILIZER_HPP
#define NILFORM_STABILIZER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/levi.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/matrix.hpp"
#include "nilform/structure.hpp"
#include "nilform/subspace.hpp"

namespace nilform {

/// Structural audit of a stabilizer-style subalgebra h of g = K |x R
/// (compact-type Levi factor, abelian radical). phi is extracted on the
/// projection of h to the radical: h splits as (h cap K) + graph(phi).
struct StabilizerAudit {
  Subspace h;
  Subspace h_cap_k;
  Subspace radical_projection; // p_R(h)
  Matrix phi;                  // row j: phi of the j-th basis vector of p_R(h), in g-coordinates

  bool commutator_in_k = false;
  bool projects_onto_radical = false;
  bool is_graph_split = false;
  bool phi_is_homomorphism = false;
  bool phi_injective_on_center_part = false;
  bool phi_nontrivial = false;

  bool all_flags() const {
    return commutator_in_k && projects_onto_radical && is_graph_split &&
           phi_is_homomorphism && phi_injective_on_center_part && phi_nontrivial;
  }
};

/// designated_a: the annotated center part A inside the radical on which phi
/// must be injective (defaults to 0, making the check vacuous).
inline StabilizerAudit stabilizer_audit(const LieAlgebra& g, const Subspace& h,
                                        const LeviDecomposition& levi,
                                        const Subspace& designated_a) {
  const std::size_t n = g.dim();
  if (!levi.noncompact_part.space.is_zero())
    throw hypothesis_error("stabilizer_audit: Levi factor has a noncompact part");
  if (!levi.radical_abelian)
    throw hypothesis_error("stabilizer_audit: radical is not abelian");
  if (!h.contains(g.bracket_subspace(h, h)))
    throw validation_error("stabilizer_audit: h is not a subalgebra");
  if (designated_a.ambient_dim() != n)
    throw validation_error("stabilizer_audit: center-part annotation dimension mismatch");

  const Subspace& k = levi.levi.space; // = compact part here
  const Subspace& r = levi.radical_part.space;

  // projections along g = K + R
  Matrix combined = k.basis().vstack(r.basis());
  auto inv = inverse(combined.transpose());
  if (!inv) throw internal_error("Levi complement does not complete the radical");
  auto project = [&](const Vec& x, bool to_radical) {
    Vec coords = inv->apply(x); // first k.dim() coords: K-part, rest: R-part
    Vec out(n, Rational(0));
    const std::size_t lo = to_radical ? k.dim() : 0;
    const std::size_t hi = to_radical ? k.dim() + r.dim() : k.dim();
    for (std::size_t i = lo; i < hi; ++i) {
      if (coords[i].is_zero()) continue;
      const Vec base = i < k.dim() ? k.basis_vector(i) : r.basis_vector(i - k.dim());
      for (std::size_t j = 0; j < n; ++j)
        if (!base[j].is_zero()) out[j] += coords[i] * base[j];
    }
    return out;
  };

  StabilizerAudit audit;
  audit.h = h;
  audit.h_cap_k = h.intersect(k);
  audit.commutator_in_k = audit.h_cap_k.contains(g.bracket_subspace(h, h));

  std::vector<Vec> proj_rows;
  for (std::size_t b = 0; b < h.dim(); ++b)
    proj_rows.push_back(project(h.basis_vector(b), true));
  audit.radical_projection = Subspace::span(n, proj_rows);
  audit.projects_onto_radical = (audit.radical_projection == r);

  // phi on the domain p_R(h): solve for h-elements with prescribed R-part
  const std::size_t dom = audit.radical_projection.dim();
  Matrix proj_matrix(h.dim(), n);
  for (std::size_t b = 0; b < h.dim(); ++b) proj_matrix.set_row(b, proj_rows[b]);
  Matrix phi(dom, n);
  std::vector<Vec> graph_rows;
  for (std::size_t j = 0; j < dom; ++j) {
    const Vec target = audit.radical_projection.basis_vector(j);
    auto sol = solve_linear(proj_matrix.transpose(), target);
    if (!sol) throw internal_error("radical projection solve failed");
    Vec x(n, Rational(0));
    for (std::size_t b = 0; b < h.dim(); ++b) {
      if (sol->particular[b].is_zero()) continue;
      const Vec hb = h.basis_vector(b);
      for (std::size_t i = 0; i < n; ++i)
        if (!hb[i].is_zero()) x[i] += sol->particular[b] * hb[i];
    }
    const Vec kpart = project(x, false);
    phi.set_row(j, kpart);
    graph_rows.push_back(vec_add(kpart, target));
  }
  audit.phi = phi;
  const Subspace graph = Subspace::span(n, graph_rows);
  audit.is_graph_split =
      audit.h_cap_k.sum(graph) == h && audit.h_cap_k.intersect(graph).is_zero();

  // phi as a linear map on the domain
  auto phi_of = [&](const Vec& v) -> std::optional<Vec> {
    auto coords = audit.radical_projection.coordinates_of(v);
    if (!coords) return std::nullopt;
    Vec out(n, Rational(0));
    for (std::size_t j = 0; j < dom; ++j) {
      if ((*coords)[j].is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (!phi(j, i).is_zero()) out[i] += (*coords)[j] * phi(j, i);
    }
    return out;
  };

  // graph closure under the bracket: [phi x, phi y] = phi([phi x, y] - [phi y, x])
  audit.phi_is_homomorphism = true;
  for (std::size_t a = 0; a < dom && audit.phi_is_homomorphism; ++a)
    for (std::size_t b = a + 1; b < dom && audit.phi_is_homomorphism; ++b) {
      const Vec va = audit.radical_projection.basis_vector(a);
      const Vec vb = audit.radical_projection.basis_vector(b);
      const Vec lhs = g.bracket(phi.row(a), phi.row(b));
      const Vec arg = vec_sub(g.bracket(phi.row(a), vb), g.bracket(phi.row(b), va));
      auto rhs = phi_of(arg);
      if (!rhs || lhs != *rhs) audit.phi_is_homomorphism = false;
    }

  audit.phi_nontrivial = r.dim() == 0 || !phi.is_zero();

  // kernel of phi inside the domain, then meet the designated center part
  Subspace phi_kernel_domain = Subspace::kernel(phi.transpose()); // coords in domain basis
  std::vector<Vec> ker_rows;
  for (std::size_t i = 0; i < phi_kernel_domain.dim(); ++i)
    ker_rows.push_back(audit.radical_projection.from_coordinates(phi_kernel_domain.basis_vector(i)));
  const Subspace phi_kernel = Subspace::span(n, ker_rows);
  audit.phi_injective_on_center_part = phi_kernel.intersect(designated_a).is_zero();

  return audit;
}

inline StabilizerAudit stabilizer_audit(const LieAlgebra& g, const Subspace& h,
                                        const LeviDecomposition& levi) {
  return stabilizer_audit(g, h, levi, Subspace::zero(g.dim()));
}

} // namespace nilform

#endif
