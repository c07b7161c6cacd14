#include <doctest.h>

#include "samejulia/classify.hpp"
#include "samejulia/decompose.hpp"
#include "samejulia/errors.hpp"
#include "samejulia/symmetry.hpp"
#include "support.hpp"

using namespace samejulia;
using testsupport::omega3;
using testsupport::Rng;

namespace {

AffineMap random_affine(Rng& rng) { return {rng.leading(0.5, 2.0), rng.in_disc(1.0)}; }

}  // namespace

TEST_CASE("tchebycheff") {
  CHECK(tchebycheff(1) == Poly::identity());
  CHECK(tchebycheff(2) == Poly({-1.0, 0.0, 2.0}));
  CHECK(tchebycheff(3) == Poly({0.0, -3.0, 0.0, 4.0}));
  CHECK(tchebycheff(0) == Poly::constant(1.0));
  for (int n = 1; n <= 30; ++n) {
    const Poly t = tchebycheff(n);
    CHECK(t.degree() == n);
    for (const Complex& c : t.coefficients()) CHECK(c.real() == std::round(c.real()));
    for (double theta : {0.1, 0.7, 1.3, 2.9}) {
      if (n > 15) break;  // cancellation in the monomial basis
      CHECK(evaluate(t, std::cos(theta)).real() == doctest::Approx(std::cos(n * theta)).epsilon(1e-9));
    }
  }
}

TEST_CASE("classify examples") {
  const Classification c = classify(Poly::monomial(3.0, 4));
  CHECK(c.kind == Classification::Kind::Circle);
  CHECK(c.circle_radius == doctest::Approx(std::pow(3.0, -1.0 / 3.0)));
  REQUIRE(c.conjugacy);
  CHECK(is_monomial(conjugate(Poly::monomial(3.0, 4), *c.conjugacy)));

  const AffineMap L{Complex(0.7, -1.1), Complex(0.4, 2.0)};
  const Poly t5 = conjugate(tchebycheff(5), L.inverse());
  const Classification ci = classify(t5);
  CHECK(ci.kind == Classification::Kind::Interval);
  REQUIRE(ci.conjugacy);
  CHECK(poly_equal(conjugate(t5, *ci.conjugacy), ci.sign_or_sigma * tchebycheff(5)));

  const Classification g = classify(Poly({-1.0, 0.0, 1.0}));
  CHECK(g.kind == Classification::Kind::General);
  REQUIRE(g.decomposition);
  CHECK(g.decomposition->minimal);
  CHECK_FALSE(g.conjugacy);

  const Classification r = classify(testsupport::quintic_root());
  CHECK(r.kind == Classification::Kind::General);
  CHECK(r.decomposition->minimal);

  CHECK(classify(-1.0 * tchebycheff(4)).kind == Classification::Kind::Interval);
  CHECK(classify(Poly({-2.0, 0.0, 1.0})).kind == Classification::Kind::Interval);
  CHECK_THROWS_AS(classify(Poly({1.0, 2.0})), InputError);
}

TEST_CASE("commutes") {
  CHECK(commutes(tchebycheff(2), tchebycheff(3)));
  CHECK(commutes(Poly::monomial(1.0, 2), Poly::monomial(1.0, 3)));
  const Poly r = testsupport::quintic_root();
  const Poly f = omega3() * iterate(r, 2);
  for (int j = 0; j < 3; ++j) {
    const Complex s = std::pow(omega3(), j);
    CAPTURE(j);
    CHECK_FALSE(commutes(s * r, f));
  }
  CHECK_FALSE(commutes(Poly({-1.0, 0.0, 1.0}), Poly({1.0, 0.0, 1.0})));
}

TEST_CASE("same_julia_set examples") {
  const Complex s = std::polar(1.0, 0.83);
  const SameJuliaVerdict circle = same_julia_set(Poly::monomial(1.0, 2), Poly::monomial(s, 3));
  CHECK(circle.same);
  CHECK(circle.reason == SameJuliaVerdict::Reason::CircleRadius);
  CHECK_FALSE(circle.witness_sigma);

  const Poly r = testsupport::quintic_root();
  const SameJuliaVerdict pair = same_julia_set(omega3() * iterate(r, 2), r);
  CHECK(pair.same);
  CHECK(pair.reason == SameJuliaVerdict::Reason::SigmaCommuting);
  REQUIRE(pair.witness_sigma);
  CHECK(is_symmetry(omega3() * iterate(r, 2), *pair.witness_sigma));

  const SameJuliaVerdict no = same_julia_set(Poly({-1.0, 0.0, 1.0}), Poly({1.0, 0.0, 1.0}));
  CHECK_FALSE(no.same);

  const SameJuliaVerdict interval = same_julia_set(tchebycheff(2), tchebycheff(3));
  CHECK(interval.same);
  CHECK(interval.reason == SameJuliaVerdict::Reason::IntervalConjugacy);

  CHECK(same_julia_set(Poly({-1.0, 0.0, 1.0}), Poly({0.0, 0.0, 1.0, 0.0, 1.0})).reason ==
        SameJuliaVerdict::Reason::IdentityFailure);
  CHECK(same_julia_set(Poly({-1.0, 0.0, 1.0}), Poly({0.0, 1.0, 0.0, 1.0})).reason ==
        SameJuliaVerdict::Reason::DegreeObstruction);
  CHECK(same_julia_set(Poly({-1.0, 0.0, 1.0}), Poly({0.0, 1.0, 1.0})).reason ==
        SameJuliaVerdict::Reason::CenteringMismatch);
  CHECK(same_julia_set(Poly::monomial(1.0, 2), Poly::monomial(2.0, 2)).same == false);
  CHECK(same_julia_set(Poly::monomial(1.0, 2), Poly({-1.0, 0.0, 1.0})).same == false);
}

TEST_CASE("same_julia_representatives") {
  const Poly r = testsupport::quintic_root();
  const auto reps = same_julia_representatives(r, 1);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == r);
  CHECK(poly_equal(reps[1], omega3() * r));
  CHECK(poly_equal(reps[2], omega3() * omega3() * r));

  const Poly q({-1.0, 0.0, 1.0});
  const auto q1 = same_julia_representatives(q, 1);
  REQUIRE(q1.size() == 2);
  CHECK(poly_equal(q1[1], Poly({1.0, 0.0, -1.0})));
  const auto q2 = same_julia_representatives(q, 2);
  REQUIRE(q2.size() == 2);
  CHECK(poly_equal(q2[0], Poly({0.0, 0.0, -2.0, 0.0, 1.0})));

  CHECK_THROWS_AS(same_julia_representatives(Poly::monomial(1.0, 2), 1), InputError);
  CHECK_THROWS_AS(same_julia_representatives(q, 0), InputError);
}

TEST_CASE("admissible_degrees") {
  CHECK(admissible_degrees(Poly({-1.0, 0.0, 1.0}), 20) == std::vector<int>{2, 4, 8, 16});
  CHECK(admissible_degrees(testsupport::quintic_root(), 30) == std::vector<int>{5, 25});
  CHECK(admissible_degrees(Poly({0.0, 1.0, 0.0, 1.0}), 8) == std::vector<int>{3});
  CHECK_THROWS_AS(admissible_degrees(Poly::monomial(1.0, 2), 10), InputError);
  CHECK_THROWS_AS(admissible_degrees(tchebycheff(3), 10), InputError);
  CHECK_THROWS_AS(admissible_degrees(iterate(Poly({-1.0, 0.0, 1.0}), 2), 10), InputError);
  CHECK_THROWS_AS(admissible_degrees(Poly({0.0, 1.0, 1.0}), 10), InputError);
}

TEST_CASE("property: commuting iterates share the Julia set") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly r = rng.centered_poly(rng.integer(2, 3));
    const int i = rng.integer(1, 2);
    const int j = rng.integer(1, 3);
    const Poly f = iterate(r, i, true);
    const Poly g = iterate(r, j, true);
    CAPTURE(trial);
    CHECK(commutes(f, g));
    CHECK(same_julia_set(f, g).same);
  }
}

TEST_CASE("property: composites of same-Julia pairs") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly r = rng.centered_poly(2);
    const SymmetryGroup grp = symmetry_group(iterate(r, 2));
    const Poly f = grp.element(rng.integer(0, grp.order - 1)) * iterate(r, 2);
    const Poly g = r;
    CAPTURE(trial);
    REQUIRE(same_julia_set(f, g).same);
    CHECK(same_julia_set(compose(f, g), f).same);
    CHECK(same_julia_set(compose(g, f), f).same);
  }
  const Poly r = testsupport::quintic_root();
  const Poly f = omega3() * iterate(r, 2);
  CHECK(same_julia_set(compose(f, r), f).same);
  CHECK(same_julia_set(compose(r, f), f).same);
}

TEST_CASE("property: rotations that preserve the Julia set are exactly the symmetries") {
  Rng rng(13);
  std::vector<Poly> pool{testsupport::quintic_root(), Poly({-1.0, 0.0, 1.0}), Poly({0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0})};
  for (int k = 0; k < 6; ++k) pool.push_back(rng.centered_poly(rng.integer(3, 6)));
  int checked = 0;
  for (const Poly& f : pool) {
    if (is_monomial(f)) continue;
    for (int k = 1; k <= 12; ++k) {
      for (int j = 0; j < k; ++j) {
        const Complex s = std::polar(1.0, 2.0 * std::numbers::pi * j / k);
        CAPTURE(k);
        CAPTURE(j);
        CHECK(same_julia_set(f, s * f).same == is_symmetry(f, s));
        ++checked;
      }
    }
  }
  CHECK(checked == 9 * 78);
}

TEST_CASE("property: representatives are symmetries times commuting maps") {
  Rng rng(14);
  std::vector<Poly> pool{testsupport::quintic_root(), Poly({-1.0, 0.0, 1.0})};
  for (int k = 0; k < 5; ++k) pool.push_back(rng.centered_poly(rng.integer(2, 4)));
  for (const Poly& f : pool) {
    const SymmetryGroup grp = symmetry_group(f);
    for (int i = 1; i <= 2; ++i) {
      const auto reps = same_julia_representatives(f, i);
      CHECK(static_cast<int>(reps.size()) == grp.order);
      const Poly h = iterate(f, i, true);
      CHECK(commutes(h, f));
      for (std::size_t j = 0; j < reps.size(); ++j) {
        CHECK(is_symmetry(f, grp.element(static_cast<int>(j))));
        CHECK(poly_equal(reps[j], grp.element(static_cast<int>(j)) * h));
        CHECK(same_julia_set(reps[j], f).same);
      }
    }
  }
}

TEST_CASE("property: same degree and same Julia set forces a scalar multiple") {
  Rng rng(15);
  int positives = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rng.integer(2, 5);
    const Poly f = rng.centered_poly(n);
    // candidates: symmetric rotations (true) and perturbations (false)
    const SymmetryGroup grp = symmetry_group(f);
    Poly g = grp.element(rng.integer(0, grp.order - 1)) * f;
    if (rng.integer(0, 1) == 1) g = g + Poly::constant(rng.in_disc(0.5));
    const SameJuliaVerdict v = same_julia_set(f, g);
    CAPTURE(trial);
    if (v.same) {
      ++positives;
      CHECK(poly_equal(g, (g.leading() / f.leading()) * f));
    }
  }
  CHECK(positives > 30);
}

TEST_CASE("property: classification is conjugation covariant") {
  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(2, 5);
    const bool circle = rng.integer(0, 1) == 0;
    const Poly base = circle ? Poly::monomial(rng.on_circle(), n) : (rng.integer(0, 1) ? 1.0 : -1.0) * tchebycheff(n);
    const Classification k0 = classify(base);
    const AffineMap L = random_affine(rng);
    const Poly f = conjugate(base, L);
    const Classification k1 = classify(f);
    CAPTURE(trial);
    CHECK(k0.kind == k1.kind);
    REQUIRE(k1.conjugacy);
    const Poly normal = conjugate(f, *k1.conjugacy);
    if (circle) {
      CHECK(is_monomial(normal));
      CHECK(std::abs(std::abs(normal.leading()) - 1.0) < 1e-9);
    } else {
      CHECK(poly_equal(normal, k1.sign_or_sigma * tchebycheff(n)));
    }
  }
}
