#include <catch2/catch_amalgamated.hpp>

#include "nilform/jordan.hpp"
#include "nilform/matrix.hpp"
#include "nilform/polynomial.hpp"
#include "nilform/rational.hpp"
#include "nilform/signature.hpp"
#include "nilform/subspace.hpp"

#include "test_support.hpp"

using namespace nilform;
using nilform::testing::in_generated_algebra;
using nilform::testing::random_invertible;
using nilform::testing::random_matrix;
using nilform::testing::random_subspace;

TEST_CASE("rationals stay reduced with positive denominators") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("-12/8").str() == "-3/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK((Rational(1, 3) + Rational(2, 5)).str() == "11/15");
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse(""), validation_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), validation_error);
  CHECK_THROWS_AS(Rational::parse("a/b"), validation_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), validation_error);
}

TEST_CASE("solve_linear on the identity") {
  Vec b{Rational(1), Rational(2), Rational(3)};
  auto sol = solve_linear(Matrix::identity(3), b);
  REQUIRE(sol);
  CHECK(sol->particular == b);
  CHECK(sol->kernel.rows() == 0);
}

TEST_CASE("solve_linear on the zero map") {
  auto sol = solve_linear(Matrix::zero(2, 2), Vec{Rational(0), Rational(0)});
  REQUIRE(sol);
  CHECK(sol->kernel.rows() == 2);
}

TEST_CASE("solve_linear on a rank-one system") {
  Matrix a{{1, 1}, {2, 2}};
  Vec b{Rational(1), Rational(2)};
  auto sol = solve_linear(a, b);
  REQUIRE(sol);
  // frozen by hand elimination: x = (1,0), kernel spanned by (1,-1)
  CHECK(sol->particular == Vec{Rational(1), Rational(0)});
  REQUIRE(sol->kernel.rows() == 1);
  CHECK(sol->kernel.row(0) == Vec{Rational(1), Rational(-1)});
  // substitution oracle
  CHECK(a.apply(sol->particular) == b);
  CHECK(is_zero_vec(a.apply(sol->kernel.row(0))));
}

TEST_CASE("solve_linear reports inconsistency as an empty set") {
  Matrix a{{1, 1}, {2, 2}};
  CHECK_FALSE(solve_linear(a, Vec{Rational(1), Rational(3)}).has_value());
}

TEST_CASE("solve_linear solutions re-substitute exactly") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + std::size_t(rng.range(0, 5));
    const std::size_t cols = 1 + std::size_t(rng.range(0, 5));
    Matrix a = random_matrix(rng, rows, cols);
    Vec x0 = random_matrix(rng, 1, cols).row(0);
    Vec b = a.apply(x0); // consistent by construction
    auto sol = solve_linear(a, b);
    REQUIRE(sol);
    CHECK(a.apply(sol->particular) == b);
    for (std::size_t k = 0; k < sol->kernel.rows(); ++k)
      CHECK(is_zero_vec(a.apply(sol->kernel.row(k))));
    CHECK(sol->kernel.rows() + rank(a) == cols);
  }
}

TEST_CASE("coordinate-plane intersection") {
  Subspace xy = Subspace::span(3, {Vec{Rational(1), Rational(0), Rational(0)},
                                   Vec{Rational(0), Rational(1), Rational(0)}});
  Subspace yz = Subspace::span(3, {Vec{Rational(0), Rational(1), Rational(0)},
                                   Vec{Rational(0), Rational(0), Rational(1)}});
  Subspace expected = Subspace::span(3, {Vec{Rational(0), Rational(1), Rational(0)}});
  CHECK(xy.intersect(yz) == expected);
}

TEST_CASE("sum is idempotent") {
  Subspace e1 = Subspace::span(2, {Vec{Rational(1), Rational(0)}});
  CHECK(e1.sum(e1) == e1);
}

TEST_CASE("complement gives a direct sum") {
  Subspace u = Subspace::span(2, {Vec{Rational(1), Rational(1)}});
  Subspace c = u.complement_in(Subspace::full(2));
  CHECK(c.dim() == 1);
  CHECK(u.sum(c) == Subspace::full(2));
  CHECK(u.intersect(c).is_zero());
}

TEST_CASE("subspace ambient mismatch is a dimension error") {
  CHECK_THROWS_AS(Subspace::full(2).sum(Subspace::full(3)), validation_error);
  CHECK_THROWS_AS(Subspace::full(2).intersect(Subspace::full(3)), validation_error);
}

TEST_CASE("subspace lattice laws on random instances") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + std::size_t(rng.range(0, 4));
    Subspace u = random_subspace(rng, n, std::size_t(rng.range(0, long(n))));
    Subspace w = random_subspace(rng, n, std::size_t(rng.range(0, long(n))));
    Subspace s = u.sum(w), i = u.intersect(w);
    CHECK(u.dim() + w.dim() == s.dim() + i.dim()); // modularity dimension identity
    CHECK(s.contains(u));
    CHECK(u.contains(i));
    // canonical-form equality: a re-spanned basis yields the identical representative
    Matrix respanned =
        u.dim() > 0 ? random_invertible(rng, u.dim()) * u.basis() : u.basis();
    CHECK(Subspace::span_rows(n, respanned) == u);
    CHECK((u.contains(w) && w.contains(u)) == (u == w));
  }
}

TEST_CASE("annihilator duality") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + std::size_t(rng.range(0, 4));
    Subspace u = random_subspace(rng, n, std::size_t(rng.range(0, long(n))));
    CHECK(u.annihilator().annihilator() == u);
    CHECK(u.annihilator().dim() == n - u.dim());
  }
}

TEST_CASE("jordan decomposition of a diagonal matrix") {
  Matrix m{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
  auto [s, nil] = jordan_chevalley(m);
  CHECK(s == m);
  CHECK(nil.is_zero());
}

TEST_CASE("jordan decomposition of a nilpotent block") {
  Matrix m{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  auto [s, nil] = jordan_chevalley(m);
  CHECK(s.is_zero());
  CHECK(nil == m);
}

TEST_CASE("jordan decomposition of a 2x2 Jordan block") {
  Matrix m{{1, 1}, {0, 1}};
  auto [s, nil] = jordan_chevalley(m);
  CHECK(s == Matrix::identity(2));
  Matrix e12{{0, 1}, {0, 0}};
  CHECK(nil == e12);
  CHECK(s * nil == nil * s);
  CHECK(is_nilpotent_matrix(nil));
  CHECK(s + nil == m);
}

TEST_CASE("jordan parts commute, sum to the input and are polynomial in it") {
  SplitMix64 rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + std::size_t(rng.range(0, 3));
    Matrix m = random_matrix(rng, n, n, -2, 2);
    auto [s, nil] = jordan_chevalley(m);
    CHECK(s + nil == m);
    CHECK(s * nil == nil * s);
    CHECK(is_nilpotent_matrix(nil));
    // nilpotency index bound: nil^dim = 0
    Matrix p = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) p = p * nil;
    CHECK(p.is_zero());
    CHECK(in_generated_algebra(m, s));
    CHECK(in_generated_algebra(m, nil));
    // semisimple part has squarefree minimal polynomial
    Poly mu = minimal_polynomial(s);
    CHECK(poly_gcd(mu, mu.derivative()).degree() == 0);
  }
}

TEST_CASE("signature of definite, zero and mixed forms") {
  Matrix so3_killing{{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}};
  CHECK(signature(so3_killing) == Signature{0, 3, 0});
  CHECK(signature(Matrix::zero(4, 4)) == Signature{0, 0, 4});
  Matrix hyperbolic{{0, 1}, {1, 0}};
  CHECK(signature(hyperbolic) == Signature{1, 1, 0});
  Matrix nonsym{{0, 1}, {2, 0}};
  CHECK_THROWS_AS(signature(nonsym), validation_error);
}

TEST_CASE("signature is congruence invariant") {
  SplitMix64 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + std::size_t(rng.range(0, 4));
    Matrix a = random_matrix(rng, n, n, -3, 3);
    Matrix g = a + a.transpose(); // symmetric
    Matrix p = random_invertible(rng, n);
    CHECK(signature(p.transpose() * g * p) == signature(g));
  }
  // n_zero equals the kernel dimension
  Matrix g{{1, 1, 0}, {1, 1, 0}, {0, 0, 5}};
  CHECK(signature(g).n_zero == long(Subspace::kernel(g).dim()));
}

TEST_CASE("squarefree part via gcd with the derivative") {
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  Poly p{2, -3, 0, 1};
  // expected: (x-1)(x+2) = x^2 + x - 2
  CHECK(squarefree_part(p) == Poly{-2, 1, 1});
  CHECK_THROWS_AS(squarefree_part(Poly::zero()), validation_error);
}

TEST_CASE("x^2+1 is irreducible") {
  auto f = factor_poly(Poly{1, 0, 1});
  REQUIRE(f.size() == 1);
  CHECK(f[0].factor == Poly{1, 0, 1});
  CHECK(f[0].multiplicity == 1);
}

TEST_CASE("factorization products reassemble the input") {
  // x(x^2+1)(x-3)^2
  Poly p = Poly{0, 1} * Poly{1, 0, 1} * Poly{-3, 1} * Poly{-3, 1};
  auto fs = factor_poly(p);
  Poly prod = Poly::constant(Rational(1));
  int count = 0;
  for (const auto& [fac, mult] : fs) {
    for (int i = 0; i < mult; ++i) prod = prod * fac;
    count += mult;
  }
  CHECK(prod == p.monic());
  CHECK(count == 4);
}

TEST_CASE("quartic splits into quadratics when possible") {
  Poly p = Poly{1, 1, 1} * Poly{1, -1, 1}; // x^4 + x^2 + 1
  auto fs = factor_poly(p);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].factor * fs[1].factor == p);
  // x^4 - 2 stays irreducible
  auto g = factor_poly(Poly{-2, 0, 0, 0, 1});
  REQUIRE(g.size() == 1);
  CHECK(g[0].factor.degree() == 4);
}

TEST_CASE("charpoly and minimal polynomial agree on companion data") {
  Matrix m{{0, 1}, {-1, 0}}; // rotation: x^2 + 1
  CHECK(charpoly(m) == Poly{1, 0, 1});
  CHECK(minimal_polynomial(m) == Poly{1, 0, 1});
  Matrix diag{{2, 0}, {0, 2}};
  CHECK(charpoly(diag) == Poly{4, -4, 1});
  CHECK(minimal_polynomial(diag) == Poly{-2, 1});
}
