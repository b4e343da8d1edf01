#ifndef NILFORM_DECOMPOSE_HPP
#define NILFORM_DECOMPOSE_HPP

#include <string>
#include <utility>
#include <vector>

#include "nilform/certificates.hpp"
#include "nilform/levi.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/metric.hpp"
#include "nilform/signature.hpp"
#include "nilform/structure.hpp"
#include "nilform/subspace.hpp"

namespace nilform {

/// Dimension + Killing signature + simple-ideal dimensions: the identity of
/// a factor up to the fingerprints the reports promise.
struct FactorFingerprint {
  std::size_t dim = 0;
  Signature killing;
  std::vector<std::size_t> simple_dims;

  friend bool operator==(const FactorFingerprint& a, const FactorFingerprint& b) {
    return a.dim == b.dim && a.killing == b.killing && a.simple_dims == b.simple_dims;
  }
};

inline FactorFingerprint fingerprint_of(const LieAlgebra& g, const Subspace& factor,
                                        std::uint64_t seed = 0) {
  FactorFingerprint fp;
  fp.dim = factor.dim();
  if (factor.dim() == 0) return fp;
  RestrictedAlgebra sub = restrict_to_subalgebra(g, factor);
  fp.killing = signature(sub.algebra.killing_gram());
  LeviDecomposition d = levi_decompose(sub.algebra, seed);
  for (const auto& ideal : d.simple_ideals) fp.simple_dims.push_back(ideal.space.dim());
  std::sort(fp.simple_dims.begin(), fp.simple_dims.end());
  return fp;
}

/// Orthogonal three-factor decomposition of a nil-invariant metric algebra
/// with abelian radical: G1 = K + A, G2 = S0, G3 = S1 + B.
struct DecompositionReport {
  bool ok = false;
  std::string violated; // first violated hypothesis / clause

  Subspace A, B, C;
  SubalgebraHandle S0, S1;
  SubalgebraHandle G1, G2, G3;
  std::vector<Certificate> certificates;
  FactorFingerprint fp1, fp2, fp3;
};

/// Coadjoint structure of an ideal S1 + B: B abelian totally isotropic,
/// restriction invariant and nondegenerate, S1 and B dually paired, and the
/// bracket action of S1 on B equal to the coadjoint action entrywise.
inline Certificate verify_metric_cotangent(const LieAlgebra& g, const SymBilinearForm& form,
                                           const Subspace& s1, const Subspace& b) {
  Certificate cert;
  cert.name = "metric-cotangent";
  const Subspace g3 = s1.sum(b);
  cert.add("dual part abelian", g.bracket_subspace(b, b).is_zero());
  cert.add("dual part is an ideal of the factor", b.contains(g.bracket_subspace(g3, b)));
  cert.add("factor closed under bracket", g3.contains(g.bracket_subspace(g3, g3)));
  cert.add("dual part totally isotropic", form.restricted_gram(b).is_zero());
  std::string detail;
  cert.add("restriction invariant", detail::skew_on(g, form, g3, g3, &detail), detail);
  cert.add("restriction nondegenerate", signature(form.restricted_gram(g3)).n_zero == 0);
  const Matrix pairing = s1.basis() * form.gram * b.basis().transpose();
  cert.add("dual pairing nondegenerate",
           s1.dim() == b.dim() && rank(pairing) == s1.dim());
  bool coadjoint = true;
  for (std::size_t a = 0; a < s1.dim() && coadjoint; ++a)
    for (std::size_t c = 0; c < s1.dim() && coadjoint; ++c)
      for (std::size_t x = 0; x < b.dim() && coadjoint; ++x) {
        const Vec s = s1.basis_vector(a), sp = s1.basis_vector(c), xi = b.basis_vector(x);
        // <[s,xi],s'> = -<xi,[s,s']>
        if (!(form.value(g.bracket(s, xi), sp) + form.value(xi, g.bracket(s, sp))).is_zero())
          coadjoint = false;
      }
  cert.add("bracket action equals the coadjoint action", coadjoint);
  return cert;
}

inline DecompositionReport abelian_radical_decompose(const LieAlgebra& g,
                                                     const SymBilinearForm& form,
                                                     const LeviDecomposition& levi,
                                                     const FormAnalysis& analysis,
                                                     std::uint64_t seed = 0) {
  DecompositionReport rep;
  const std::size_t n = g.dim();
  if (!levi.radical_abelian) {
    rep.violated = "radical is not abelian";
    return rep;
  }
  if (analysis.nil.verdict != NilVerdict::holds) {
    rep.violated = "form is not nil-invariant (verdict: " + to_string(analysis.nil.verdict) + ")";
    return rep;
  }
  if (!analysis.effective) {
    rep.violated = "kernel contains a nonzero ideal";
    return rep;
  }

  const Subspace& r = levi.radical_part.space;
  const Subspace& k = levi.compact_part.space;
  const Subspace& s = levi.noncompact_part.space;

  rep.A = invariants(g, s, r); // R^S
  const Subspace rk = invariants(g, k, r);
  rep.B = g.bracket_subspace(s, rk); // [S, R^K]
  rep.C = g.bracket_subspace(s, r).intersect(g.bracket_subspace(k, r));

  Certificate lemmas;
  lemmas.name = "radical-splitting";
  lemmas.add("C = [S,R] meet [K,R] vanishes", rep.C.is_zero());
  lemmas.add("R = A + B directly", rep.A.intersect(rep.B).is_zero() && rep.A.sum(rep.B) == r);
  lemmas.add("[K,R] inside A", rep.A.contains(g.bracket_subspace(k, r)));
  lemmas.add("[S,R] equals B", g.bracket_subspace(s, r) == rep.B);

  // S0 = kernel of the S-action on B; S1 its Killing-orthogonal complement in S
  Subspace s0 = s.intersect(centralizer(g, rep.B));
  Subspace s1 = Subspace::zero(n);
  if (s.dim() > 0) {
    RestrictedAlgebra ssub = restrict_to_subalgebra(g, s);
    const Matrix kappa_s = ssub.algebra.killing_gram();
    std::vector<Vec> s0_local;
    for (std::size_t i = 0; i < s0.dim(); ++i) {
      auto coords = s.coordinates_of(s0.basis_vector(i));
      if (!coords) throw internal_error("S0 is not inside S");
      s0_local.push_back(*coords);
    }
    if (s0_local.empty()) {
      s1 = s;
    } else {
      Matrix constraints(s0_local.size(), s.dim());
      for (std::size_t i = 0; i < s0_local.size(); ++i)
        constraints.set_row(i, kappa_s.apply(s0_local[i]));
      s1 = ssub.map_to_ambient(Subspace::kernel(constraints));
    }
  }
  lemmas.add("S = S0 x S1 directly",
             s0.intersect(s1).is_zero() && s0.sum(s1) == s &&
                 g.bracket_subspace(s0, s1).is_zero());
  lemmas.add("dim S1 = dim B", s1.dim() == rep.B.dim());

  rep.S0 = SubalgebraHandle::analyze(g, s0);
  rep.S1 = SubalgebraHandle::analyze(g, s1);
  rep.G1 = SubalgebraHandle::analyze(g, k.sum(rep.A));
  rep.G2 = rep.S0;
  rep.G3 = SubalgebraHandle::analyze(g, s1.sum(rep.B));

  Certificate structure;
  structure.name = "three-factor-structure";
  structure.add("G1 + G2 + G3 = g directly",
                rep.G1.space.sum(rep.G2.space).sum(rep.G3.space).is_full() &&
                    rep.G1.space.dim() + rep.G2.space.dim() + rep.G3.space.dim() == n);
  structure.add("G1 is an ideal", rep.G1.is_ideal);
  structure.add("G2 is an ideal", rep.G2.is_ideal);
  structure.add("G3 is an ideal", rep.G3.is_ideal);
  structure.add("G1 orth G2", form.orthogonal(rep.G1.space, rep.G2.space));
  structure.add("G1 orth G3", form.orthogonal(rep.G1.space, rep.G3.space));
  structure.add("G2 orth G3", form.orthogonal(rep.G2.space, rep.G3.space));
  structure.add("kernel inside G1", rep.G1.space.contains(analysis.kernel));

  Certificate restrictions;
  restrictions.name = "factor-restrictions";
  {
    std::string detail;
    bool inv2 = detail::skew_on(g, form, rep.G2.space, rep.G2.space, &detail);
    restrictions.add("restriction to G2 invariant", inv2, inv2 ? "" : detail);
    restrictions.add("restriction to G2 nondegenerate",
                     signature(form.restricted_gram(rep.G2.space)).n_zero == 0);
    bool inv3 = detail::skew_on(g, form, rep.G3.space, rep.G3.space, &detail);
    restrictions.add("restriction to G3 invariant", inv3, inv3 ? "" : detail);
    restrictions.add("restriction to G3 nondegenerate",
                     signature(form.restricted_gram(rep.G3.space)).n_zero == 0);
    restrictions.add("B totally isotropic", form.restricted_gram(rep.B).is_zero());
  }

  Certificate cotangent = verify_metric_cotangent(g, form, s1, rep.B);

  rep.certificates = {lemmas, structure, restrictions, cotangent};
  rep.ok = true;
  for (const auto& cert : rep.certificates) {
    if (cert.passed()) continue;
    rep.ok = false;
    for (const auto& clause : cert.clauses)
      if (clause.verdict == ClauseVerdict::fails) {
        rep.violated = cert.name + ": " + clause.name;
        break;
      }
    break;
  }
  if (rep.ok) {
    rep.fp1 = fingerprint_of(g, rep.G1.space, seed);
    rep.fp2 = fingerprint_of(g, rep.G2.space, seed);
    rep.fp3 = fingerprint_of(g, rep.G3.space, seed);
  }
  return rep;
}

} // namespace nilform

#endif
