#include <catch2/catch_amalgamated.hpp>

#include "nilform/basis_change.hpp"
#include "nilform/gallery.hpp"
#include "nilform/levi.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/structure.hpp"

#include "test_support.hpp"

using namespace nilform;

namespace {

/// so3 with cyclic constants [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
LieAlgebra so3_cyclic() {
  LieAlgebra g(3);
  g.set_bracket(0, 1, Vec{Rational(0), Rational(0), Rational(1)});
  g.set_bracket(1, 2, Vec{Rational(1), Rational(0), Rational(0)});
  g.set_bracket(2, 0, Vec{Rational(0), Rational(1), Rational(0)});
  return g;
}

Subspace coordinate_subspace(std::size_t ambient, std::size_t from, std::size_t count) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < count; ++i) rows.push_back(unit_vec(ambient, from + i));
  return Subspace::span(ambient, rows);
}

} // namespace

TEST_CASE("validate accepts so3 and reports violations") {
  CHECK_FALSE(so3_cyclic().validate().has_value());
  CHECK_FALSE(build_so(3).validate().has_value());
  CHECK_FALSE(build_sl2().validate().has_value());
  CHECK_FALSE(build_euclidean(4).validate().has_value());

  // antisymmetry violation at (0,1)
  LieAlgebra bad = so3_cyclic();
  bad.set_structure_constant_raw(1, 0, 2, Rational(1)); // c[1][0] = +e3 as well
  auto issue = bad.validate();
  REQUIRE(issue);
  CHECK(issue->kind == LieAlgebra::ValidationIssue::Kind::antisymmetry);
  CHECK(issue->i == 0);
  CHECK(issue->j == 1);

  // perturbing one constant breaks Jacobi
  LieAlgebra jac = so3_cyclic();
  jac.set_bracket(0, 1, Vec{Rational(0), Rational(1, 2), Rational(1)});
  auto jissue = jac.validate();
  REQUIRE(jissue);
  CHECK(jissue->kind == LieAlgebra::ValidationIssue::Kind::jacobi);
}

TEST_CASE("Killing forms of the standard small algebras") {
  Matrix minus2 = Matrix::identity(3);
  minus2 *= Rational(-2);
  CHECK(so3_cyclic().killing_gram() == minus2);
  CHECK(build_so(3).killing_gram() == minus2);
  CHECK(LieAlgebra(4).killing_gram().is_zero());
  // sl2 in the (e,h,f) basis: kappa(h,h)=8, kappa(e,f)=4
  Matrix expected(3, 3);
  expected(1, 1) = Rational(8);
  expected(0, 2) = Rational(4);
  expected(2, 0) = Rational(4);
  CHECK(build_sl2().killing_gram() == expected);
  CHECK(signature(build_sl2().killing_gram()) == Signature{2, 1, 0});
}

TEST_CASE("radical via the Cartan criterion") {
  CHECK(radical(build_sl2()).is_zero());
  CHECK(radical(LieAlgebra(5)).is_full());
  LieAlgebra e3 = build_euclidean(3);
  CHECK(radical(e3) == coordinate_subspace(6, 3, 3));
  // E2 is solvable: the radical is everything
  CHECK(radical(build_euclidean(2)).is_full());
}

TEST_CASE("series and centers") {
  CHECK(center(so3_cyclic()).is_zero());
  GalleryEntry ex38 = build_example_3_8();
  CHECK(center(ex38.algebra) == coordinate_subspace(9, 6, 3)); // the V0 factor
  auto chain = derived_series(LieAlgebra(4));
  REQUIRE(chain.size() == 2);
  CHECK(chain[1].is_zero());
  CHECK(is_abelian_subspace(LieAlgebra(4), Subspace::full(4)));
  // centralizer of the so3 part of so3 x R^3 is R^3
  LieAlgebra prod = direct_sum(build_so(3), LieAlgebra(3));
  CHECK(centralizer(prod, coordinate_subspace(6, 0, 3)) == coordinate_subspace(6, 3, 3));
}

TEST_CASE("modules of invariants") {
  // trivial action: everything is invariant
  LieAlgebra prod = direct_sum(build_so(3), LieAlgebra(3));
  Subspace k = coordinate_subspace(6, 0, 3);
  Subspace r = coordinate_subspace(6, 3, 3);
  CHECK(invariants(prod, k, r) == r);

  // standard so3-module has no invariants
  LieAlgebra e3 = build_euclidean(3);
  CHECK(invariants(e3, coordinate_subspace(6, 0, 3), coordinate_subspace(6, 3, 3)).is_zero());

  // example 3.8: R^K = V0
  GalleryEntry ex38 = build_example_3_8();
  Subspace k38 = coordinate_subspace(9, 0, 3);
  Subspace r38 = coordinate_subspace(9, 3, 6);
  CHECK(invariants(ex38.algebra, k38, r38) == coordinate_subspace(9, 6, 3));

  // non-stable module is rejected
  CHECK_THROWS_AS(invariants(e3, coordinate_subspace(6, 3, 3), coordinate_subspace(6, 0, 3)),
                  validation_error);

  // every returned vector really commutes with the subalgebra
  for (std::size_t b = 0; b < 3; ++b)
    CHECK(is_zero_vec(ex38.algebra.bracket(unit_vec(9, b), unit_vec(9, 6 + b))));
}

TEST_CASE("largest ideal inside a subspace") {
  GalleryEntry ex38 = build_example_3_8();
  REQUIRE(ex38.form);
  Subspace kernel = ex38.form->kernel();
  CHECK(kernel.dim() == 3);
  CHECK(largest_ideal_in(ex38.algebra, kernel).is_zero());

  LieAlgebra e4 = build_euclidean(4);
  Subspace r4 = coordinate_subspace(10, 6, 4);
  CHECK(largest_ideal_in(e4, r4) == r4);

  LieAlgebra so3 = so3_cyclic();
  CHECK(largest_ideal_in(so3, Subspace::span(3, {unit_vec(3, 0)})).is_zero());
}

TEST_CASE("largest ideal agrees with subset enumeration on small instances") {
  SplitMix64 rng(101);
  LieAlgebra e3 = build_euclidean(3);
  for (int trial = 0; trial < 10; ++trial) {
    Subspace w = nilform::testing::random_subspace(rng, 6, 1 + std::size_t(rng.range(0, 4)));
    Subspace best = largest_ideal_in(e3, w);
    CHECK(w.contains(best));
    CHECK(best.contains(e3.bracket_subspace(Subspace::full(6), best)));
    // enumerate ideals generated by subsets of w's basis
    const std::size_t d = w.dim();
    for (std::size_t mask = 1; mask < (1u << d); ++mask) {
      std::vector<Vec> gens;
      for (std::size_t b = 0; b < d; ++b)
        if (mask & (1u << b)) gens.push_back(w.basis_vector(b));
      Subspace closure = Subspace::span(6, gens);
      for (int it = 0; it < 7; ++it)
        closure = closure.sum(e3.bracket_subspace(Subspace::full(6), closure));
      if (w.contains(closure)) CHECK(best.contains(closure));
    }
  }
}

TEST_CASE("Levi subalgebra of the easy cases") {
  CHECK(levi_subalgebra_space(build_sl2()).is_full());
  CHECK(levi_subalgebra_space(LieAlgebra(4)).is_zero());
  LieAlgebra e3 = build_euclidean(3);
  CHECK(levi_subalgebra_space(e3) == coordinate_subspace(6, 0, 3));
}

TEST_CASE("Levi subalgebra of scrambled semidirect products") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    LieAlgebra e3 = build_euclidean(3);
    Matrix p = random_change_of_basis(rng, 6);
    LieAlgebra scr = change_basis(e3, p);
    REQUIRE_FALSE(scr.validate().has_value());
    Subspace rad = radical(scr);
    CHECK(rad.dim() == 3);
    Subspace levi = levi_subalgebra_space(scr);
    CHECK(levi.dim() == 3);
    CHECK(levi.intersect(rad).is_zero());
    CHECK(levi.sum(rad).is_full());
    RestrictedAlgebra sub = restrict_to_subalgebra(scr, levi); // throws unless a subalgebra
    Matrix kappa = sub.algebra.killing_gram();
    CHECK(signature(kappa) == Signature{0, 3, 0}); // so3 fingerprint
  }
}

TEST_CASE("simple ideal splitting") {
  // so4 = so3 x so3
  auto ideals = split_simple_ideals(build_so(4));
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].dim() == 3);
  CHECK(ideals[1].dim() == 3);

  auto sl2_ideals = split_simple_ideals(build_sl2());
  REQUIRE(sl2_ideals.size() == 1);

  CHECK_THROWS_AS(split_simple_ideals(build_euclidean(3)), hypothesis_error);
}

TEST_CASE("full Levi decomposition classifies compact and noncompact parts") {
  LieAlgebra mixed = direct_sum(build_so(3), build_sl2());
  LeviDecomposition d = levi_decompose(mixed);
  CHECK(d.radical_part.space.is_zero());
  CHECK(d.levi.space.is_full());
  REQUIRE(d.simple_ideals.size() == 2);
  CHECK(d.compact_part.space == Subspace::span(6, {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)}));
  CHECK(d.noncompact_part.space ==
        Subspace::span(6, {unit_vec(6, 3), unit_vec(6, 4), unit_vec(6, 5)}));
  CHECK(d.gs.space == d.noncompact_part.space);

  // so4: both ideals compact, each with so3's Killing signature
  LeviDecomposition so4 = levi_decompose(build_so(4));
  REQUIRE(so4.simple_ideals.size() == 2);
  for (const auto& sig : so4.simple_signatures) CHECK(sig == Signature{0, 3, 0});
  CHECK(so4.compact_part.space.is_full());
  CHECK(so4.noncompact_part.space.is_zero());

  // pairwise brackets of distinct simple ideals vanish; Killing block-diagonal
  RestrictedAlgebra lr = restrict_to_subalgebra(mixed, d.levi.space);
  CHECK(mixed
            .bracket_subspace(d.simple_ideals[0].space, d.simple_ideals[1].space)
            .is_zero());
  Matrix kappa = mixed.killing_gram();
  CHECK((d.simple_ideals[0].space.basis() * kappa *
         d.simple_ideals[1].space.basis().transpose())
            .is_zero());
}

TEST_CASE("quotient by the radical has zero radical") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 4; ++trial) {
    LieAlgebra g = change_basis(build_euclidean(3), random_change_of_basis(rng, 6));
    Subspace rad = radical(g);
    // the derived series of the radical reaches zero
    RestrictedAlgebra rsub = restrict_to_subalgebra(g, rad);
    auto chain = derived_series(rsub.algebra);
    CHECK(chain.back().is_zero());
    QuotientAlgebra q = quotient_by_ideal(g, rad);
    CHECK(radical(q.algebra).is_zero());
  }
}

TEST_CASE("subalgebra handles cache correct flags") {
  LieAlgebra e3 = build_euclidean(3);
  SubalgebraHandle r = SubalgebraHandle::analyze(e3, coordinate_subspace(6, 3, 3));
  CHECK(r.is_subalgebra);
  CHECK(r.is_ideal);
  CHECK(r.is_abelian);
  SubalgebraHandle k = SubalgebraHandle::analyze(e3, coordinate_subspace(6, 0, 3));
  CHECK(k.is_subalgebra);
  CHECK_FALSE(k.is_ideal);
  CHECK_FALSE(k.is_abelian);
}
