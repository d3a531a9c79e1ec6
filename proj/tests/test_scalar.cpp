#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "helpers.hpp"
#include "qmb/scalar.hpp"

using qmb::Rational;
using qmb::Scalar;

TEST_CASE("rational arithmetic is reduced and guarded") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2, 5)) == Rational(1, 5));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("scalar canonical form") {
  CHECK((Scalar::q_pow(2) * Scalar::q_pow(-2)) == Scalar::one());
  CHECK((Scalar::q_pow(2) - Scalar::q_pow(2)).is_zero());
  const Scalar half = Scalar::rational(Rational(1, 2));
  CHECK((half + half) == Scalar::one());
  // (1 - q^2)(1 + q^2) = 1 - q^4
  const Scalar lhs = (Scalar::one() - Scalar::q_pow(2)) * (Scalar::one() + Scalar::q_pow(2));
  CHECK(lhs == (Scalar::one() - Scalar::q_pow(4)));
}

TEST_CASE("involution fixes q and inverts phase units") {
  const Scalar s = Scalar::of(Rational(3, 2), 3, 2, -1);
  CHECK(s.star() == Scalar::of(Rational(3, 2), 3, -2, 1));
  CHECK_FALSE(Scalar::q_pow(5).has_phase());
  CHECK(Scalar::u1_pow(1).has_phase());

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Scalar r = testutil::random_scalar(rng);
    CHECK(r.star().star() == r);
  }
}

TEST_CASE("numeric evaluation is a *-homomorphism") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  for (int i = 0; i < 50; ++i) {
    const Scalar a = testutil::random_scalar(rng);
    const Scalar b = testutil::random_scalar(rng);
    const double p1 = angle(rng), p2 = angle(rng);
    const auto ea = a.eval(0.5, p1, p2), eb = b.eval(0.5, p1, p2);
    CHECK(std::abs((a * b).eval(0.5, p1, p2) - ea * eb) < 1e-12);
    CHECK(std::abs((a + b).eval(0.5, p1, p2) - (ea + eb)) < 1e-12);
    CHECK(std::abs(a.star().eval(0.5, p1, p2) - std::conj(ea)) < 1e-12);
  }
  CHECK(std::abs(Scalar::u1_pow(3).eval(0.5, 0.7)) == Catch::Approx(1.0));
  CHECK_THROWS_AS(Scalar::one().eval(1.5), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::one().eval(0.0), std::invalid_argument);
}
