#ifndef NILFORM_RANDOM_INSTANCE_HPP
#define NILFORM_RANDOM_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nilform/basis_change.hpp"
#include "nilform/decompose.hpp"
#include "nilform/errors.hpp"
#include "nilform/gallery.hpp"
#include "nilform/levi.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/metric.hpp"
#include "nilform/rng.hpp"

namespace nilform {

enum class InstanceProfile { euclidean_type, cotangent, mixed_three_factor };

inline InstanceProfile instance_profile_from_string(const std::string& s) {
  if (s == "euclidean-type") return InstanceProfile::euclidean_type;
  if (s == "cotangent") return InstanceProfile::cotangent;
  if (s == "mixed-three-factor") return InstanceProfile::mixed_three_factor;
  throw validation_error("unknown instance profile '" + s + "'");
}

/// A seeded instance: scrambled algebra and form plus the construction-time
/// truth the round-trip tests compare against.
struct RandomInstance {
  LieAlgebra algebra;
  Matrix gram;
  Signature expected_signature;
  std::size_t dim_g1 = 0, dim_g2 = 0, dim_g3 = 0;
  FactorFingerprint fp1, fp2, fp3;

  SymBilinearForm form() const { return SymBilinearForm(gram); }
};

namespace detail {

struct Block {
  LieAlgebra algebra;
  Matrix gram;
};

/// Euclidean-type block (so3 |x (adjoint + trivial modules)) carrying an
/// admissible nil-invariant form in the shape of the degenerate gallery
/// example: dual pairings on adjoint summands, free pairings against the
/// trivial part, free symmetric block on K and on the trivial part.
inline Block euclidean_type_block(SplitMix64& rng, bool force_effective) {
  const long adj = 1;
  const long triv = rng.range(1, 2);
  LieAlgebra so3 = build_so(3);
  std::vector<Matrix> rho;
  const std::size_t m = std::size_t(3 * adj + triv);
  for (std::size_t i = 0; i < 3; ++i) {
    Matrix big(m, m);
    Matrix a = so3.ad_basis(i);
    for (long c = 0; c < adj; ++c)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 3; ++s) big(3 * c + r, 3 * c + s) = a(r, s);
    rho.push_back(std::move(big));
  }
  Block block;
  block.algebra = semidirect_abelian(so3, rho);
  const std::size_t n = block.algebra.dim();
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix gram(n, n);
    // free symmetric block on K
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        Rational v(rng.range(-2, 2));
        gram(i, j) = v;
        gram(j, i) = v;
      }
    // dual pairing on each adjoint summand, nonzero coefficient
    for (long c = 0; c < adj; ++c) {
      Rational alpha(rng.range(0, 1) ? rng.range(1, 2) : -rng.range(1, 2));
      for (std::size_t i = 0; i < 3; ++i) {
        gram(i, 3 + 3 * c + i) = alpha;
        gram(3 + 3 * c + i, i) = alpha;
      }
    }
    // free pairings K x trivial and symmetric block on the trivial part
    for (long t = 0; t < triv; ++t) {
      const std::size_t col = std::size_t(3 + 3 * adj + t);
      for (std::size_t i = 0; i < 3; ++i) {
        Rational v(rng.range(-2, 2));
        gram(i, col) = v;
        gram(col, i) = v;
      }
      for (long t2 = t; t2 < triv; ++t2) {
        const std::size_t col2 = std::size_t(3 + 3 * adj + t2);
        Rational v(rng.range(-2, 2));
        gram(col, col2) = v;
        gram(col2, col) = v;
      }
    }
    block.gram = gram;
    if (!force_effective) return block;
    SymBilinearForm form(gram);
    if (largest_ideal_in(block.algebra, form.kernel()).is_zero()) return block;
  }
  throw internal_error("no effective euclidean-type form found");
}

/// Noncompact simple factor with a multiple of its Killing form.
inline Block invariant_sl2_block(SplitMix64& rng) {
  Block block;
  block.algebra = build_sl2();
  Rational c(rng.range(0, 1) ? rng.range(1, 2) : -rng.range(1, 2));
  block.gram = block.algebra.killing_gram();
  block.gram *= c;
  return block;
}

/// Metric cotangent factor: dual pairing plus an optional Killing multiple
/// on the base (both invariant; the dual part stays totally isotropic).
inline Block cotangent_block(SplitMix64& rng) {
  auto [g, form] = build_cotangent(build_sl2());
  Block block;
  block.algebra = std::move(g);
  block.gram = form.gram;
  Rational c(rng.range(-1, 1));
  if (!c.is_zero()) {
    Matrix kappa = build_sl2().killing_gram();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) block.gram(i, j) += c * kappa(i, j);
  }
  return block;
}

inline Block orthogonal_sum(const Block& a, const Block& b) {
  Block out;
  out.algebra = direct_sum(a.algebra, b.algebra);
  const std::size_t n = out.algebra.dim();
  out.gram = Matrix(n, n);
  for (std::size_t i = 0; i < a.algebra.dim(); ++i)
    for (std::size_t j = 0; j < a.algebra.dim(); ++j) out.gram(i, j) = a.gram(i, j);
  for (std::size_t i = 0; i < b.algebra.dim(); ++i)
    for (std::size_t j = 0; j < b.algebra.dim(); ++j)
      out.gram(a.algebra.dim() + i, a.algebra.dim() + j) = b.gram(i, j);
  return out;
}

} // namespace detail

/// Deterministic per (seed, profile): a block instance in the shape of the
/// three-factor decomposition, scrambled by a random invertible basis change.
inline RandomInstance random_instance(std::uint64_t seed, InstanceProfile profile) {
  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x1234567ULL);
  detail::Block combined;
  RandomInstance inst;
  switch (profile) {
    case InstanceProfile::euclidean_type: {
      combined = detail::euclidean_type_block(rng, true);
      inst.dim_g1 = combined.algebra.dim();
      inst.fp1 = fingerprint_of(combined.algebra, Subspace::full(combined.algebra.dim()), seed);
      break;
    }
    case InstanceProfile::cotangent: {
      combined = detail::cotangent_block(rng);
      inst.dim_g3 = combined.algebra.dim();
      inst.fp3 = fingerprint_of(combined.algebra, Subspace::full(combined.algebra.dim()), seed);
      break;
    }
    case InstanceProfile::mixed_three_factor: {
      detail::Block g1 = detail::euclidean_type_block(rng, true);
      detail::Block g2 = detail::invariant_sl2_block(rng);
      detail::Block g3 = detail::cotangent_block(rng);
      inst.dim_g1 = g1.algebra.dim();
      inst.dim_g2 = g2.algebra.dim();
      inst.dim_g3 = g3.algebra.dim();
      inst.fp1 = fingerprint_of(g1.algebra, Subspace::full(g1.algebra.dim()), seed);
      inst.fp2 = fingerprint_of(g2.algebra, Subspace::full(g2.algebra.dim()), seed);
      inst.fp3 = fingerprint_of(g3.algebra, Subspace::full(g3.algebra.dim()), seed);
      combined = detail::orthogonal_sum(detail::orthogonal_sum(g1, g2), g3);
      break;
    }
  }
  inst.expected_signature = signature(combined.gram);
  const Matrix p = random_change_of_basis(rng, combined.algebra.dim());
  inst.algebra = change_basis(combined.algebra, p);
  inst.gram = change_gram(combined.gram, p);
  return inst;
}

/// Seeded semidirect product with abelian radical in a scrambled basis, for
/// the Levi round-trip suite. Returns the algebra and the expected Levi and
/// radical dimensions.
struct SemidirectInstance {
  LieAlgebra algebra;
  std::size_t levi_dim = 0;
  std::size_t radical_dim = 0;
};

inline SemidirectInstance random_semidirect(std::uint64_t seed) {
  SplitMix64 rng(seed * 0x2545f4914f6cdd1dULL + 0xabcdefULL);
  LieAlgebra base;
  std::vector<Matrix> gens; // defining action building blocks per base choice
  switch (rng.range(0, 3)) {
    case 0: base = build_so(3); break;
    case 1: base = build_sl2(); break;
    case 2: base = build_so(4); break;
    default: base = direct_sum(build_so(3), build_sl2()); break;
  }
  const std::size_t dk = base.dim();
  // module: a few copies of small exact modules plus trivial directions
  std::vector<std::vector<Matrix>> summands;
  auto add_adjoint = [&]() { summands.push_back(adjoint_action(base)); };
  auto add_trivial = [&](std::size_t count) {
    std::vector<Matrix> z;
    for (std::size_t i = 0; i < dk; ++i) z.push_back(Matrix::zero(count, count));
    summands.push_back(std::move(z));
  };
  add_adjoint();
  if (rng.range(0, 1)) add_adjoint();
  add_trivial(std::size_t(rng.range(1, 3)));
  std::size_t m = 0;
  for (const auto& s : summands) m += s.front().rows();
  std::vector<Matrix> rho(dk, Matrix());
  for (std::size_t i = 0; i < dk; ++i) {
    Matrix big(m, m);
    std::size_t off = 0;
    for (const auto& s : summands) {
      const Matrix& a = s[i];
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) big(off + r, off + c) = a(r, c);
      off += a.rows();
    }
    rho[i] = std::move(big);
  }
  LieAlgebra g = semidirect_abelian(base, rho);
  SemidirectInstance inst;
  inst.levi_dim = dk;
  inst.radical_dim = m;
  inst.algebra = change_basis(g, random_change_of_basis(rng, g.dim()));
  return inst;
}

} // namespace nilform

#endif
