#ifndef NILFORM_EUCLIDEAN_HPP
#define NILFORM_EUCLIDEAN_HPP

#include <string>

#include "nilform/levi.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/metric.hpp"
#include "nilform/structure.hpp"
#include "nilform/subspace.hpp"

namespace nilform {

/// For an algebra of Euclidean type K |x V with a nil-invariant and
/// kernel-invariant effective form, the kernel sits inside K0 x V where K0
/// kills V. The containment is computed even when a hypothesis fails; `ok`
/// records whether all of them held.
struct EuclideanTypeReport {
  bool ok = false;
  std::string violated;
  SubalgebraHandle K0;
  Subspace V;
  bool kernel_containment = false;
};

inline EuclideanTypeReport euclidean_type_analyze(const LieAlgebra& g,
                                                  const SymBilinearForm& form,
                                                  const LeviDecomposition& levi,
                                                  const FormAnalysis& analysis) {
  EuclideanTypeReport rep;
  rep.V = levi.radical_part.space;
  const Subspace& k = levi.compact_part.space;
  rep.K0 = SubalgebraHandle::analyze(g, k.intersect(centralizer(g, rep.V)));
  rep.kernel_containment = rep.K0.space.sum(rep.V).contains(analysis.kernel);

  if (!levi.noncompact_part.space.is_zero())
    rep.violated = "Levi factor has a noncompact part";
  else if (!levi.radical_abelian)
    rep.violated = "radical is not abelian";
  else if (analysis.nil.verdict != NilVerdict::holds)
    rep.violated = "form is not nil-invariant (verdict: " + to_string(analysis.nil.verdict) + ")";
  else if (!is_invariant(g, form, analysis.kernel).invariant)
    rep.violated = "form is not kernel-invariant";
  else if (!analysis.effective)
    rep.violated = "kernel contains a nonzero ideal";
  rep.ok = rep.violated.empty() && rep.kernel_containment;
  return rep;
}

} // namespace nilform

#endif
