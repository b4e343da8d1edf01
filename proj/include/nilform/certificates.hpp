#ifndef NILFORM_CERTIFICATES_HPP
#define NILFORM_CERTIFICATES_HPP

#include <string>
#include <utility>
#include <vector>

#include "nilform/levi.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/metric.hpp"
#include "nilform/structure.hpp"
#include "nilform/subspace.hpp"

namespace nilform {

enum class ClauseVerdict { holds, fails, not_applicable };

inline std::string to_string(ClauseVerdict v) {
  switch (v) {
    case ClauseVerdict::holds: return "holds";
    case ClauseVerdict::fails: return "fails";
    case ClauseVerdict::not_applicable: return "n/a";
  }
  return "?";
}

struct Clause {
  std::string name;
  ClauseVerdict verdict = ClauseVerdict::holds;
  std::string detail; // witness description on failure
};

/// A named bundle of machine-checked clauses.
struct Certificate {
  std::string name;
  bool applicable = true; // false: preconditions unmet, clauses not evaluated
  std::string note;       // why not applicable / which hypothesis failed
  std::vector<Clause> clauses;

  bool passed() const {
    if (!applicable) return false;
    for (const auto& c : clauses)
      if (c.verdict == ClauseVerdict::fails) return false;
    return true;
  }

  void add(std::string cname, bool ok, std::string detail = "") {
    clauses.push_back(Clause{std::move(cname),
                             ok ? ClauseVerdict::holds : ClauseVerdict::fails,
                             std::move(detail)});
  }
};

/// Center of a subalgebra U as an algebra: {x in U : [x, U] = 0}.
inline Subspace center_of_subalgebra(const LieAlgebra& g, const Subspace& u) {
  return u.intersect(centralizer(g, u));
}

namespace detail {

/// <[x,a],b> + <a,[x,b]> = 0 for all x in X-basis and all a,b in U-basis.
inline bool skew_on(const LieAlgebra& g, const SymBilinearForm& form, const Subspace& x,
                    const Subspace& u, std::string* detail = nullptr) {
  for (std::size_t xb = 0; xb < x.dim(); ++xb) {
    const Matrix a = g.ad(x.basis_vector(xb));
    const Matrix defect =
        u.basis() * (a.transpose() * form.gram + form.gram * a) * u.basis().transpose();
    if (!defect.is_zero()) {
      if (detail) *detail = "failing generator index " + std::to_string(xb);
      return false;
    }
  }
  return true;
}

} // namespace detail

/// Orthogonality relations S perp [K,g] and K perp [S,g] for nil-invariant forms.
inline Certificate levi_orthogonality_certificate(const LieAlgebra& g,
                                                  const SymBilinearForm& form,
                                                  const LeviDecomposition& levi) {
  Certificate cert;
  cert.name = "levi-orthogonality";
  const Subspace full = Subspace::full(g.dim());
  const Subspace kg = g.bracket_subspace(levi.compact_part.space, full);
  const Subspace sg = g.bracket_subspace(levi.noncompact_part.space, full);
  cert.add("S orth [K,g]", form.orthogonal(levi.noncompact_part.space, kg));
  cert.add("K orth [S,g]", form.orthogonal(levi.compact_part.space, sg));
  return cert;
}

/// Invariance consequences of nil-invariance: the restriction of the form to
/// gs = S + R is invariant under ad of all of g, and the full form is
/// invariant under ad(gs).
inline Certificate gs_invariance_certificate(const LieAlgebra& g, const SymBilinearForm& form,
                                             const LeviDecomposition& levi) {
  Certificate cert;
  cert.name = "gs-invariance";
  std::string detail;
  bool c1 = detail::skew_on(g, form, Subspace::full(g.dim()), levi.gs.space, &detail);
  cert.add("restriction to gs invariant under ad(g)", c1, c1 ? "" : detail);
  InvarianceResult c2 = is_invariant(g, form, levi.gs.space);
  cert.add("form invariant under ad(gs)", c2.invariant);
  return cert;
}

/// Kernel location: G-perp inside K + Z(gs), and [G-perp, gs] inside
/// Z(gs) intersect G-perp. Needs an effective kernel.
inline Certificate kernel_location_certificate(const LieAlgebra& g, const SymBilinearForm& form,
                                               const LeviDecomposition& levi,
                                               const FormAnalysis& analysis) {
  Certificate cert;
  cert.name = "kernel-location";
  if (!analysis.effective) {
    cert.applicable = false;
    cert.note = "kernel contains a nonzero ideal";
    return cert;
  }
  const Subspace z = center_of_subalgebra(g, levi.gs.space);
  cert.add("kernel inside K + Z(gs)",
           levi.compact_part.space.sum(z).contains(analysis.kernel));
  const Subspace bracket = g.bracket_subspace(analysis.kernel, levi.gs.space);
  cert.add("[kernel, gs] inside Z(gs) and kernel",
           z.intersect(analysis.kernel).contains(bracket));
  return cert;
}

/// With a kernel-invariant form, the kernel centralizes gs: [G-perp, gs] = 0.
inline Certificate kernel_centralizes_gs_certificate(const LieAlgebra& g,
                                                     const SymBilinearForm& form,
                                                     const LeviDecomposition& levi,
                                                     const FormAnalysis& analysis) {
  Certificate cert;
  cert.name = "kernel-centralizes-gs";
  if (!analysis.effective) {
    cert.applicable = false;
    cert.note = "kernel contains a nonzero ideal";
    return cert;
  }
  if (analysis.nil.verdict == NilVerdict::fails) {
    cert.applicable = false;
    cert.note = "form is not nil-invariant";
    return cert;
  }
  if (!is_invariant(g, form, analysis.kernel).invariant) {
    cert.applicable = false;
    cert.note = "form is not kernel-invariant";
    return cert;
  }
  cert.add("[kernel, gs] = 0", g.bracket_subspace(analysis.kernel, levi.gs.space).is_zero());
  return cert;
}

/// Structure forced at relative index <= 2: K x S x R as ideals, kernel
/// inside K x Z(R) and meeting R trivially, S perp (K x R), K perp [R,R].
inline Certificate low_index_structure_certificate(const LieAlgebra& g,
                                                   const SymBilinearForm& form,
                                                   const LeviDecomposition& levi,
                                                   const FormAnalysis& analysis) {
  Certificate cert;
  cert.name = "low-index-structure";
  if (analysis.relative_index > 2) {
    cert.applicable = false;
    cert.note = "relative index " + std::to_string(analysis.relative_index) + " > 2";
    return cert;
  }
  if (!analysis.effective) {
    cert.applicable = false;
    cert.note = "kernel contains a nonzero ideal";
    return cert;
  }
  if (analysis.nil.verdict == NilVerdict::fails) {
    cert.applicable = false;
    cert.note = "form is not nil-invariant";
    return cert;
  }
  const Subspace& r = levi.radical_part.space;
  const Subspace& k = levi.compact_part.space;
  const Subspace& s = levi.noncompact_part.space;
  cert.add("K x S x R direct product of ideals",
           g.bracket_subspace(k, r).is_zero() && g.bracket_subspace(s, r).is_zero());
  const Subspace zr = center_of_subalgebra(g, r);
  cert.add("kernel inside K x Z(R)", k.sum(zr).contains(analysis.kernel));
  cert.add("kernel meets R trivially", analysis.kernel.intersect(r).is_zero());
  cert.add("S orth (K x R)", form.orthogonal(s, k.sum(r)));
  cert.add("K orth [R,R]", form.orthogonal(k, g.bracket_subspace(r, r)));
  return cert;
}

} // namespace nilform

#endif
