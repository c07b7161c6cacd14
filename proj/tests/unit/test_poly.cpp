#include <doctest.h>

#include "samejulia/classify.hpp"
#include "samejulia/errors.hpp"
#include "samejulia/poly.hpp"
#include "support.hpp"

using namespace samejulia;
using testsupport::Rng;

TEST_CASE("evaluate") {
  CHECK(evaluate(Poly::monomial(1.0, 2), 3.0) == Complex(9.0));
  CHECK(evaluate(testsupport::quintic_root(), 1.0) == Complex(2.0));
  // T3(0.5) = cos(3 arccos 0.5) = cos(pi)
  const Poly t3({0.0, -3.0, 0.0, 4.0});
  CHECK(std::abs(evaluate(t3, 0.5) - std::cos(3.0 * std::acos(0.5))) < 1e-15);
  CHECK(std::abs(evaluate(t3, 0.5) - Complex(-1.0)) < 1e-15);
}

TEST_CASE("compose") {
  const Poly t2({-1.0, 0.0, 2.0});
  CHECK(compose(t2, t2) == Poly({1.0, 0.0, -8.0, 0.0, 8.0}));
  CHECK(compose(Poly::monomial(1.0, 2), Poly::monomial(1.0, 3)) == Poly::monomial(1.0, 6));
  CHECK(compose(Poly({0.0, 2.0}), Poly::monomial(1.0, 2)) == Poly::monomial(2.0, 2));
}

TEST_CASE("iterate") {
  CHECK(iterate(Poly::monomial(1.0, 2), 3) == Poly::monomial(1.0, 8));
  const Poly r = testsupport::quintic_root();
  const auto oracle = testsupport::expand_compose(testsupport::coeffs(r), testsupport::coeffs(r));
  CHECK(poly_equal(iterate(r, 2), Poly(oracle)));
  CHECK(iterate(r, 2).degree() == 25);
  CHECK(poly_equal(iterate(tchebycheff(2), 2), tchebycheff(4)));

  CHECK_THROWS_AS(iterate(r, 0), InputError);
  CHECK(iterate(r, 0, /*allow_identity=*/true) == Poly::identity());
}

TEST_CASE("conjugate") {
  const Poly z2 = Poly::monomial(1.0, 2);
  // (z+1)^2 - 1, expanded by the oracle
  const auto shifted = testsupport::expand_compose({0.0, 0.0, 1.0}, {1.0, 1.0});
  auto expected = shifted;
  expected[0] -= 1.0;
  CHECK(poly_equal(conjugate(z2, {1.0, 1.0}), Poly(expected)));
  CHECK(poly_equal(conjugate(z2, {1.0, 1.0}), Poly({0.0, 2.0, 1.0})));
  CHECK(poly_equal(conjugate(tchebycheff(2), AffineMap::scaling(2.0)), Poly({-0.5, 0.0, 4.0})));

  Rng rng(11);
  const Poly p = rng.poly(4);
  CHECK(conjugate(p, AffineMap::identity()) == p);
  CHECK_THROWS_AS(conjugate(p, {0.0, 1.0}), InputError);
}

TEST_CASE("center") {
  const Centering c = center(Poly({0.0, 2.0, 1.0}));
  CHECK(c.centered == Poly::monomial(1.0, 2));
  CHECK(c.map.A == Complex(1.0));
  CHECK(c.map.B == Complex(-1.0));
  // f(z - 1) + 1 = z^2 by the expansion oracle
  auto back = testsupport::expand_compose({0.0, 2.0, 1.0}, {-1.0, 1.0});
  back[0] += 1.0;
  CHECK(poly_equal(Poly(back), Poly::monomial(1.0, 2)));

  const Poly basilica({-1.0, 0.0, 1.0});
  const Centering same = center(basilica);
  CHECK(same.centered == basilica);
  CHECK(same.map.B == Complex(0.0));
  CHECK(center(tchebycheff(3)).centered == tchebycheff(3));

  CHECK_THROWS_AS(center(Poly({1.0, 2.0})), InputError);
}

TEST_CASE("poly_equal") {
  const Poly z2 = Poly::monomial(1.0, 2);
  CHECK(poly_equal(z2, z2));
  CHECK(poly_equal(z2, Poly({1e-15, 0.0, 1.0})));
  CHECK_FALSE(poly_equal(z2, Poly::monomial(1.0, 3)));
  CHECK_FALSE(poly_equal(z2, Poly({1e-6, 0.0, 1.0})));
}

TEST_CASE("construction invariants") {
  CHECK(Poly({1.0, 2.0, 0.0, 0.0}).degree() == 1);
  CHECK(Poly({0.0, 0.0}).is_zero());
  CHECK_THROWS_AS(Poly({1.0, std::nan("")}), NumericError);
  CHECK_THROWS_AS(Poly({1.0, INFINITY}), NumericError);
  CHECK(canonicalize(Poly({1e-14, 1.0, 1e-13})).degree() == 1);
}

TEST_CASE("property: composition algebra") {
  Rng rng(20240611);
  NumericContext ctx;
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = rng.poly(rng.integer(1, 4));
    const Poly q = rng.poly(rng.integer(1, 4));
    const Poly r = rng.poly(rng.integer(1, 4));
    CAPTURE(trial);
    CHECK(poly_equal(compose(compose(p, q), r), compose(p, compose(q, r)), ctx));
    CHECK(compose(p, q).degree() == p.degree() * q.degree());
    CHECK(poly_equal(compose(p, q), Poly(testsupport::expand_compose(testsupport::coeffs(p), testsupport::coeffs(q))), ctx));
    for (int k = 0; k < 5; ++k) {
      const Complex z = rng.in_disc(1.5);
      const Complex direct = evaluate(compose(p, q), z);
      const Complex nested = evaluate(p, evaluate(q, z));
      CHECK(std::abs(direct - nested) <= 1e-12 * std::max(1.0, std::abs(nested)));
    }
  }
}

TEST_CASE("property: conjugation round trip and centering idempotence") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = rng.poly(rng.integer(2, 5));
    const AffineMap L{rng.leading(0.5, 2.0), rng.in_disc()};
    CAPTURE(trial);
    const Poly there = conjugate(p, L);
    CHECK(there.degree() == p.degree());
    CHECK(poly_equal(conjugate(there, L.inverse()), p));

    const Centering c = center(p);
    CHECK(is_centered(c.centered));
    const Centering again = center(c.centered);
    CHECK(again.centered == c.centered);
    CHECK(again.map.B == Complex(0.0));
    CHECK(again.map.A == Complex(1.0));
  }
}
