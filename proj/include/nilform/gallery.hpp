#ifndef NILFORM_GALLERY_HPP
#define NILFORM_GALLERY_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/irreps.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/matrix.hpp"
#include "nilform/metric.hpp"
#include "nilform/signature.hpp"
#include "nilform/subspace.hpp"

namespace nilform {

// ---------------------------------------------------------------------------
// building blocks

/// so(n) on the basis E_ij - E_ji, (i,j) lexicographic with i < j.
inline LieAlgebra build_so(long n) {
  if (n < 2) throw validation_error("build_so requires n >= 2");
  const std::size_t nn = std::size_t(n);
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i + 1; j < nn; ++j) {
      idx.emplace_back(i, j);
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const std::size_t dim = idx.size();
  auto as_matrix = [&](std::size_t a) {
    Matrix m(nn, nn);
    m(idx[a].first, idx[a].second) = Rational(1);
    m(idx[a].second, idx[a].first) = Rational(-1);
    return m;
  };
  LieAlgebra g(dim, labels);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      Matrix comm = as_matrix(a) * as_matrix(b) - as_matrix(b) * as_matrix(a);
      Vec coeffs(dim, Rational(0));
      for (std::size_t c = 0; c < dim; ++c) coeffs[c] = comm(idx[c].first, idx[c].second);
      g.set_bracket(a, b, coeffs);
    }
  return g;
}

/// sl2 on the basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieAlgebra build_sl2() {
  LieAlgebra g(3, {"e", "h", "f"});
  g.set_bracket(0, 1, Vec{Rational(-2), Rational(0), Rational(0)}); // [e,h] = -2e
  g.set_bracket(0, 2, Vec{Rational(0), Rational(1), Rational(0)});  // [e,f] = h
  g.set_bracket(1, 2, Vec{Rational(0), Rational(0), Rational(-2)}); // [h,f] = -2f
  return g;
}

/// Semidirect product K |x V for an abelian module V with action matrices
/// rho_i per K-basis element (rho must be a homomorphism; validated).
inline LieAlgebra semidirect_abelian(const LieAlgebra& k, const std::vector<Matrix>& rho,
                                     std::vector<std::string> module_labels = {}) {
  const std::size_t dk = k.dim();
  if (rho.size() != dk) throw validation_error("semidirect: one action matrix per basis element");
  const std::size_t m = rho.empty() ? 0 : rho.front().rows();
  std::vector<std::string> labels = k.labels();
  for (std::size_t a = 0; a < m; ++a)
    labels.push_back(module_labels.size() == m ? module_labels[a]
                                               : "v" + std::to_string(a + 1));
  LieAlgebra g(dk + m, labels);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = i + 1; j < dk; ++j) {
      Vec coeffs(dk + m, Rational(0));
      for (std::size_t c = 0; c < dk; ++c) coeffs[c] = k.c(i, j, c);
      g.set_bracket(i, j, coeffs);
    }
  for (std::size_t i = 0; i < dk; ++i) {
    if (rho[i].rows() != m || rho[i].cols() != m)
      throw validation_error("semidirect: action matrix shape mismatch");
    for (std::size_t a = 0; a < m; ++a) {
      Vec coeffs(dk + m, Rational(0));
      for (std::size_t b = 0; b < m; ++b) coeffs[dk + b] = rho[i](b, a);
      g.set_bracket(i, dk + a, coeffs);
    }
  }
  g.require_valid();
  return g;
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l);
  LieAlgebra g(a.dim() + b.dim(), labels);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vec coeffs(g.dim(), Rational(0));
      for (std::size_t c = 0; c < a.dim(); ++c) coeffs[c] = a.c(i, j, c);
      g.set_bracket(i, j, coeffs);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vec coeffs(g.dim(), Rational(0));
      for (std::size_t c = 0; c < b.dim(); ++c) coeffs[a.dim() + c] = b.c(i, j, c);
      g.set_bracket(a.dim() + i, a.dim() + j, coeffs);
    }
  return g;
}

/// Standard action of so(n) on R^n: (E_ij - E_ji) e_k = d_jk e_i - d_ik e_j.
inline std::vector<Matrix> so_standard_action(long n) {
  const std::size_t nn = std::size_t(n);
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i + 1; j < nn; ++j) {
      Matrix m(nn, nn);
      m(i, j) = Rational(1);
      m(j, i) = Rational(-1);
      rho.push_back(std::move(m));
    }
  return rho;
}

/// Euclidean algebra E_n = so(n) |x R^n.
inline LieAlgebra build_euclidean(long n) {
  if (n < 1) throw validation_error("build_euclidean requires n >= 1");
  if (n == 1) return LieAlgebra(1, {"v1"});
  return semidirect_abelian(build_so(n), so_standard_action(n));
}

/// Adjoint action matrices of an algebra on itself.
inline std::vector<Matrix> adjoint_action(const LieAlgebra& l) {
  std::vector<Matrix> rho;
  rho.reserve(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) rho.push_back(l.ad_basis(i));
  return rho;
}

/// Cotangent algebra L |x L^* (coadjoint action) with the canonical dual
/// pairing as the invariant form: <x, xi> = xi(x), L and L^* isotropic.
inline std::pair<LieAlgebra, SymBilinearForm> build_cotangent(const LieAlgebra& l) {
  const std::size_t m = l.dim();
  std::vector<Matrix> rho;
  rho.reserve(m);
  for (std::size_t i = 0; i < m; ++i) rho.push_back(-l.ad_basis(i).transpose());
  std::vector<std::string> duals;
  for (std::size_t i = 0; i < m; ++i) duals.push_back(l.label(i) + "*");
  LieAlgebra g = semidirect_abelian(l, rho, duals);
  Matrix gram(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    gram(i, m + i) = Rational(1);
    gram(m + i, i) = Rational(1);
  }
  return {std::move(g), SymBilinearForm(std::move(gram))};
}

// ---------------------------------------------------------------------------
// gallery entries

struct ExpectedAnalysis {
  Signature sig;
  std::size_t kernel_dim = 0;
  bool invariant = false;
  NilVerdict nil = NilVerdict::holds;
  bool effective = false;
};

struct GalleryEntry {
  std::string name;
  std::string description;
  LieAlgebra algebra;
  std::optional<SymBilinearForm> form;
  std::optional<ExpectedAnalysis> expected;
  std::optional<Matrix> stabilizer_h;  // rows: basis of an annotated subalgebra h
  std::optional<Matrix> center_part_a; // rows: designated center part A inside the radical
};

/// (so3 |x V1) x V0 with V1 carrying the (co)adjoint action in so3
/// coordinates; the form pairs K with V1 and -K with V0 and vanishes on all
/// other blocks. Signature (3,3,3); the kernel is the diagonal of V1 x V0.
inline GalleryEntry build_example_3_8() {
  LieAlgebra so3 = build_so(3);
  std::vector<Matrix> rho = adjoint_action(so3);
  LieAlgebra kv1 = semidirect_abelian(so3, rho, {"u1", "u2", "u3"});
  LieAlgebra v0(3, {"w1", "w2", "w3"});
  LieAlgebra g = direct_sum(kv1, v0);
  Matrix gram(9, 9);
  for (std::size_t i = 0; i < 3; ++i) {
    gram(i, 3 + i) = Rational(1);
    gram(3 + i, i) = Rational(1);
    gram(i, 6 + i) = Rational(-1);
    gram(6 + i, i) = Rational(-1);
  }
  GalleryEntry e;
  e.name = "ex-3-8";
  e.description = "(so3 |x V1) x V0 with a degenerate nil-invariant form, signature (3,3,3)";
  e.algebra = std::move(g);
  e.form = SymBilinearForm(std::move(gram));
  e.expected = ExpectedAnalysis{Signature{3, 3, 3}, 3, false, NilVerdict::holds, true};
  Matrix h(3, 9);
  for (std::size_t i = 0; i < 3; ++i) {
    h(i, 3 + i) = Rational(1);
    h(i, 6 + i) = Rational(1);
  }
  e.stabilizer_h = std::move(h);
  return e;
}

/// (so3 |x V1) x so6: V0 of the previous entry embedded as the standard
/// maximal torus of so6 (coordinate-plane rotations 12, 34, 56), the form
/// extended positive definite on the Killing-orthogonal complement of the
/// torus. Signature (15,3,3).
inline GalleryEntry build_example_3_9() {
  LieAlgebra so3 = build_so(3);
  LieAlgebra kv1 = semidirect_abelian(so3, adjoint_action(so3), {"u1", "u2", "u3"});
  LieAlgebra so6 = build_so(6);
  LieAlgebra g = direct_sum(kv1, so6);
  const std::size_t n = g.dim(); // 21
  // torus basis inside so6: pairs (1,2), (3,4), (5,6) -> lexicographic indices
  auto so6_index = [](std::size_t i, std::size_t j) {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b) {
        if (a == i && b == j) return idx;
        ++idx;
      }
    throw internal_error("bad so6 pair");
  };
  const std::size_t torus[3] = {so6_index(0, 1), so6_index(2, 3), so6_index(4, 5)};
  Matrix gram(n, n);
  for (std::size_t i = 0; i < 3; ++i) {
    gram(i, 3 + i) = Rational(1); // K x V1 dual pairing
    gram(3 + i, i) = Rational(1);
    const std::size_t t = 6 + torus[i];
    gram(i, t) = Rational(-1); // K x torus, mirroring K x V0
    gram(t, i) = Rational(-1);
  }
  // definite extension on the complement of the torus: the trace form
  // -tr(xy)/2 is the identity on the E_ij - E_ji basis
  for (std::size_t a = 0; a < 15; ++a) {
    bool in_torus = a == torus[0] || a == torus[1] || a == torus[2];
    if (!in_torus) gram(6 + a, 6 + a) = Rational(1);
  }
  GalleryEntry e;
  e.name = "ex-3-9";
  e.description = "(so3 |x V1) x so6 with the torus-embedded form, signature (15,3,3)";
  e.algebra = std::move(g);
  e.form = SymBilinearForm(std::move(gram));
  e.expected = ExpectedAnalysis{Signature{15, 3, 3}, 3, false, NilVerdict::holds, true};
  Matrix h(3, n);
  for (std::size_t i = 0; i < 3; ++i) {
    h(i, 3 + i) = Rational(1);
    h(i, 6 + torus[i]) = Rational(1);
  }
  e.stabilizer_h = std::move(h);
  return e;
}

/// E3 with the dual-pairing form: R^3 identified with so3^* through the
/// cross-product intertwiner, so3 block zero, translations isotropic.
inline GalleryEntry build_e3_dual() {
  LieAlgebra g = build_euclidean(3);
  Matrix gram(6, 6);
  // T: standard basis of R^3 -> so3 basis (E12-E21, E13-E31, E23-E32):
  // e1 -> -E23+E32 slot, e2 -> E13-E31, e3 -> -(E12-E21)
  const long t[3][3] = {{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      gram(i, 3 + j) = Rational(t[i][j]);
      gram(3 + j, i) = Rational(t[i][j]);
    }
  GalleryEntry e;
  e.name = "e3-dual";
  e.description = "Euclidean algebra E3 with its invariant dual pairing, signature (3,3,0)";
  e.algebra = std::move(g);
  e.form = SymBilinearForm(std::move(gram));
  e.expected = ExpectedAnalysis{Signature{3, 3, 0}, 0, true, NilVerdict::holds, true};
  return e;
}

inline Matrix so_killing_positive_gram(const LieAlgebra& so_n, const Rational& scale) {
  // -kappa/(2(n-2)) is the identity on the E-basis; any positive multiple works
  Matrix kappa = so_n.killing_gram();
  Matrix gram = -kappa;
  gram *= scale;
  return gram;
}

inline std::vector<GalleryEntry> gallery_entries() {
  std::vector<GalleryEntry> out;

  {
    GalleryEntry e;
    e.name = "so3-biinvariant";
    e.description = "so3 with the positive definite invariant form -kappa";
    e.algebra = build_so(3);
    e.form = SymBilinearForm(-e.algebra.killing_gram());
    e.expected = ExpectedAnalysis{Signature{3, 0, 0}, 0, true, NilVerdict::holds, true};
    out.push_back(std::move(e));
  }
  {
    GalleryEntry e;
    e.name = "so3-killing";
    e.description = "so3 with its Killing form (negative definite)";
    e.algebra = build_so(3);
    e.form = SymBilinearForm(e.algebra.killing_gram());
    e.expected = ExpectedAnalysis{Signature{0, 3, 0}, 0, true, NilVerdict::holds, true};
    out.push_back(std::move(e));
  }
  {
    GalleryEntry e;
    e.name = "sl2-killing";
    e.description = "sl2 with its Killing form, signature (2,1,0)";
    e.algebra = build_sl2();
    e.form = SymBilinearForm(e.algebra.killing_gram());
    e.expected = ExpectedAnalysis{Signature{2, 1, 0}, 0, true, NilVerdict::holds, true};
    out.push_back(std::move(e));
  }
  {
    GalleryEntry e;
    e.name = "so4";
    e.description = "so4 (two compact simple ideals), no form";
    e.algebra = build_so(4);
    out.push_back(std::move(e));
  }
  for (long n = 2; n <= 6; ++n) {
    GalleryEntry e;
    e.name = "e" + std::to_string(n);
    e.description = "Euclidean algebra E" + std::to_string(n) + ", no form";
    e.algebra = build_euclidean(n);
    out.push_back(std::move(e));
  }
  out.push_back(build_e3_dual());
  {
    // -kappa on so4, zero on R^4: nil-invariant, kernel is the ideal R^4
    GalleryEntry e;
    e.name = "e4-definite";
    e.description = "E4 with the definite form on so4 and zero on R^4 (kernel contains R^4)";
    e.algebra = build_euclidean(4);
    Matrix gram(10, 10);
    LieAlgebra so4 = build_so(4);
    Matrix pos = so_killing_positive_gram(so4, Rational(1, 4)); // identity on basis
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) gram(i, j) = pos(i, j);
    e.form = SymBilinearForm(std::move(gram));
    e.expected = ExpectedAnalysis{Signature{6, 0, 4}, 4, true, NilVerdict::holds, false};
    out.push_back(std::move(e));
  }
  {
    // Killing on so4 plus positive definite on R^4: not nil-invariant
    GalleryEntry e;
    e.name = "e4-killing-definite";
    e.description = "E4 with Killing on so4 and a positive definite form on R^4 (not nil-invariant)";
    e.algebra = build_euclidean(4);
    Matrix gram(10, 10);
    LieAlgebra so4 = build_so(4);
    Matrix kappa = so4.killing_gram();
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) gram(i, j) = kappa(i, j);
    for (std::size_t i = 6; i < 10; ++i) gram(i, i) = Rational(1);
    e.form = SymBilinearForm(std::move(gram));
    e.expected = ExpectedAnalysis{Signature{4, 6, 0}, 0, false, NilVerdict::fails, true};
    out.push_back(std::move(e));
  }
  {
    auto [g, form] = build_cotangent(LieAlgebra(1, {"x"}));
    GalleryEntry e;
    e.name = "cotangent-r1";
    e.description = "cotangent algebra of the abelian line: 2-dim abelian, hyperbolic form";
    e.algebra = std::move(g);
    e.form = std::move(form);
    e.expected = ExpectedAnalysis{Signature{1, 1, 0}, 0, true, NilVerdict::holds, true};
    out.push_back(std::move(e));
  }
  {
    auto [g, form] = build_cotangent(build_so(3));
    GalleryEntry e;
    e.name = "cotangent-so3";
    e.description = "metric cotangent algebra of so3 with the dual pairing";
    e.algebra = std::move(g);
    e.form = std::move(form);
    e.expected = ExpectedAnalysis{Signature{3, 3, 0}, 0, true, NilVerdict::holds, true};
    out.push_back(std::move(e));
  }
  {
    auto [g, form] = build_cotangent(build_sl2());
    GalleryEntry e;
    e.name = "cotangent-sl2";
    e.description = "metric cotangent algebra of sl2 with the dual pairing";
    e.algebra = std::move(g);
    e.form = std::move(form);
    e.expected = ExpectedAnalysis{Signature{3, 3, 0}, 0, true, NilVerdict::holds, true};
    out.push_back(std::move(e));
  }
  {
    GalleryEntry e;
    e.name = "so3xr3-riemannian";
    e.description = "so3 x R^3 (trivial action) with -kappa + identity, relative index 0";
    LieAlgebra so3 = build_so(3);
    e.algebra = direct_sum(so3, LieAlgebra(3, {"v1", "v2", "v3"}));
    Matrix gram(6, 6);
    Matrix pos = so_killing_positive_gram(so3, Rational(1, 2)); // diag(1,1,1)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) gram(i, j) = pos(i, j);
    for (std::size_t i = 3; i < 6; ++i) gram(i, i) = Rational(1);
    e.form = SymBilinearForm(std::move(gram));
    e.expected = ExpectedAnalysis{Signature{6, 0, 0}, 0, true, NilVerdict::holds, true};
    out.push_back(std::move(e));
  }
  {
    GalleryEntry e;
    e.name = "abelian-lorentz";
    e.description = "abelian R^2 with the Lorentzian form diag(1,-1)";
    e.algebra = LieAlgebra(2, {"v1", "v2"});
    Matrix gram(2, 2);
    gram(0, 0) = Rational(1);
    gram(1, 1) = Rational(-1);
    e.form = SymBilinearForm(std::move(gram));
    e.expected = ExpectedAnalysis{Signature{1, 1, 0}, 0, true, NilVerdict::holds, true};
    out.push_back(std::move(e));
  }
  out.push_back(build_example_3_8());
  out.push_back(build_example_3_9());
  {
    GalleryEntry e = build_example_3_9();
    e.name = "ex-4-7";
    e.description =
        "(so3 |x V1) x so6 with the stabilizer h = {(0, v, i(v))}, i embedding V1 onto the torus";
    out.push_back(std::move(e));
  }
  {
    GalleryEntry e = build_example_3_9();
    e.name = "ex-4-7-h-radical";
    e.description = "ex-4-7 negative control: h = the radical V1";
    Matrix h(3, e.algebra.dim());
    for (std::size_t i = 0; i < 3; ++i) h(i, 3 + i) = Rational(1);
    e.stabilizer_h = std::move(h);
    out.push_back(std::move(e));
  }
  {
    GalleryEntry e = build_example_3_9();
    e.name = "ex-4-7-h-levi";
    e.description = "ex-4-7 negative control: h = the Levi factor so3 x so6";
    Matrix h(18, e.algebra.dim());
    for (std::size_t i = 0; i < 3; ++i) h(i, i) = Rational(1);
    for (std::size_t i = 0; i < 15; ++i) h(3 + i, 6 + i) = Rational(1);
    e.stabilizer_h = std::move(h);
    out.push_back(std::move(e));
  }
  return out;
}

inline GalleryEntry gallery_get(const std::string& name) {
  for (auto& e : gallery_entries())
    if (e.name == name) return e;
  std::ostringstream os;
  os << "unknown gallery entry '" << name << "'; known entries:";
  for (const auto& e : gallery_entries()) os << " " << e.name;
  throw validation_error(os.str());
}

} // namespace nilform

#endif
