#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "qmb/op_norm.hpp"
#include "qmb/rep_checks.hpp"
#include "qmb/representation.hpp"

using namespace qmb;
using Catch::Approx;

namespace {

constexpr double kQ = 0.5;

Vec vacuum(const Representation& r) {
  long D = 1;
  for (int n : r.dims) D *= n;
  Vec v = Vec::Zero(D);
  v(0) = 1.0;
  return v;
}

Vec random_vec(long D, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(D);
  for (long i = 0; i < D; ++i) v(i) = cplx(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_CASE("generator images match their defining displays") {
  const Representation rho = build_rep("rho", {0.7, 1.9}, 12, kQ);
  const Mat z21 = evaluate(rho, NCPoly::gen(rho.preset, polmat2_id(2, 1))).materialize();
  CHECK((z21 - detail::phase(0.7) * fm_d(12, kQ).mat).norm() == Approx(0.0).margin(1e-14));
  const Mat z11 = evaluate(rho, NCPoly::gen(rho.preset, polmat2_id(1, 1))).materialize();
  CHECK((z11 + detail::phase(2.6) * 2.0 * fm_SsC(12, kQ).mat).norm() ==
        Approx(0.0).margin(1e-13));

  const Representation gam = build_rep("gamma", {0.3, 1.1}, 0, kQ);
  CHECK(std::abs(evaluate(gam, NCPoly::gen(gam.preset, polmat2_id(1, 1))).materialize()(0, 0) -
                 detail::phase(1.1) * 2.0) < 1e-14);
  CHECK(evaluate(gam, NCPoly::gen(gam.preset, polmat2_id(2, 1))).materialize()(0, 0) ==
        cplx(0.0, 0.0));

  const Representation pi = build_rep("csu2-pi", {0.4}, 12, kQ);
  const Mat t21 = evaluate(pi, NCPoly::gen(pi.preset, csu2_id(2, 1))).materialize();
  for (int k = 0; k < 12; ++k)
    CHECK(std::abs(t21(k, k) - detail::phase(0.4) * std::pow(kQ, k)) < 1e-14);
  const Mat t12 = evaluate(pi, NCPoly::gen(pi.preset, csu2_id(1, 2))).materialize();
  CHECK(std::abs(t12(0, 0) + kQ * detail::phase(-0.4)) < 1e-14);

  // unit maps to the identity; vacuum is killed by (z_2^2)* after z_2^2... gone
  const Representation piF = build_rep("piF", {}, 4, kQ);
  CHECK((evaluate(piF, NCPoly::one(piF.preset)).materialize() -
         Mat::Identity(256, 256))
            .norm() == Approx(0.0).margin(1e-14));
  NCPoly zz = NCPoly::gen(piF.preset, polmat2_id(2, 2)) *
              NCPoly::gen(piF.preset, polmat2_id(2, 2)).adjoint();
  CHECK(evaluate(piF, zz).apply(vacuum(piF)).norm() == Approx(0.0).margin(1e-15));

  CHECK_THROWS_AS(build_rep("nope", {}, 4, kQ), std::invalid_argument);
  CHECK_THROWS_AS(build_rep("rho", {0.1}, 4, kQ), std::invalid_argument);
}

TEST_CASE("every family satisfies its defining relations on interior vectors") {
  struct Case {
    const char* family;
    std::vector<double> angles;
    int N;
  };
  const std::vector<Case> cases = {
      {"piF", {}, 8},          {"tau", {0.7}, 10},      {"nu1", {2.1}, 12},
      {"nu2", {2.1}, 12},      {"rho", {0.7, 1.9}, 16}, {"theta", {1.3}, 16},
      {"gamma", {0.3, 1.1}, 0}, {"polC-fock", {}, 16},   {"polC-onedim", {0.8}, 0},
      {"csu2-xi", {0.8}, 0},   {"csu2-pi", {0.8}, 16},
  };
  for (const auto& c : cases) {
    const Representation rep = build_rep(c.family, c.angles, c.N, kQ);
    const ResidualReport rr = relation_residuals(rep, 3, 60, 42);
    INFO(c.family << " max residual " << rr.max_residual);
    CHECK(rr.pass(1e-10));
    CHECK(rr.items.size() == relation_polys(rep.preset).size());
  }
}

TEST_CASE("interior padding is what makes the residuals small") {
  // at the top truncation layer the quadratic diagonal relation fails by
  // almost exactly 1: the shift has nowhere to go
  const int N = 8;
  const Representation piF = build_rep("piF", {}, N, kQ);
  const auto rels = relation_polys(piF.preset);
  const auto it = std::find_if(rels.begin(), rels.end(),
                               [](const Relation& r) { return r.label == "ff2.4"; });
  REQUIRE(it != rels.end());
  const TensorOperator T = evaluate(piF, it->poly);
  Vec top = Vec::Zero(N * N * N * N);
  top((N - 1) * N * N * N) = 1.0;  // e_{N-1} x e_0 x e_0 x e_0
  CHECK(T.apply(top).norm() == Approx(1.0 - std::pow(kQ, 2.0 * N)).epsilon(1e-12));

  CHECK_THROWS_AS(relation_residuals(piF, 1, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_interior({4, 4}, 4, 10, 1), std::invalid_argument);
}

TEST_CASE("evaluation is a star-homomorphism on random polynomials") {
  std::mt19937_64 rng(23);
  const std::vector<Representation> reps = {
      build_rep("tau", {0.7}, 6, kQ),
      build_rep("rho", {0.7, 1.9}, 10, kQ),
      build_rep("csu2-pi", {0.4}, 8, kQ),
      build_rep("gamma", {0.3, 1.1}, 0, kQ),
  };
  for (const auto& rep : reps) {
    long D = 1;
    for (int n : rep.dims) D *= n;
    for (int trial = 0; trial < 8; ++trial) {
      const NCPoly p = testutil::random_poly(rep.preset, rng, 2, 3);
      const NCPoly r = testutil::random_poly(rep.preset, rng, 2, 3);
      const Vec v = random_vec(D, rng);
      const double scale = std::max(1.0, v.norm());
      const Vec lhs_mul = evaluate(rep, p * r, 0.2, 0.9).apply(v);
      const Vec rhs_mul =
          evaluate(rep, p, 0.2, 0.9).apply(evaluate(rep, r, 0.2, 0.9).apply(v));
      CHECK((lhs_mul - rhs_mul).norm() <= 1e-8 * scale);
      const Vec lhs_add = evaluate(rep, p + r, 0.2, 0.9).apply(v);
      const Vec rhs_add = (evaluate(rep, p, 0.2, 0.9) + evaluate(rep, r, 0.2, 0.9)).apply(v);
      CHECK((lhs_add - rhs_add).norm() <= 1e-8 * scale);
      const Vec lhs_star = evaluate(rep, p.adjoint(), 0.2, 0.9).apply(v);
      const Vec rhs_star = evaluate(rep, p, 0.2, 0.9).adjoint().apply(v);
      CHECK((lhs_star - rhs_star).norm() <= 1e-8 * scale);
    }
  }
}

TEST_CASE("unbound phase units are rejected, bound ones evaluated") {
  const Representation rho = build_rep("rho", {0.0, 0.0}, 8, kQ);
  const NCPoly p = NCPoly::gen(rho.preset, polmat2_id(2, 2)).scaled(Scalar::u1_pow(1));
  CHECK_THROWS_AS(evaluate(rho, p), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(rho, p.scaled(Scalar::u2_pow(1)), 0.3), std::invalid_argument);
  const Mat m = evaluate(rho, p, 0.3).materialize();
  CHECK((m - detail::phase(0.3) * fm_CS(8, kQ).mat).norm() == Approx(0.0).margin(1e-14));
}

TEST_CASE("vacuum is coherent for the three-slot family") {
  for (double phi : {0.0, M_PI / 3, M_PI}) {
    const Representation tau = build_rep("tau", {phi}, 10, kQ);
    const CoherentReport cr = coherent_check(tau);
    INFO("phi = " << phi);
    CHECK(cr.pass(1e-14));
  }
  // phi = 0 pins (z_1^1)* Omega = Omega on the nose
  const Representation tau0 = build_rep("tau", {0.0}, 10, kQ);
  const Vec omega = vacuum(tau0);
  const Vec got = tau0.images[7 - polmat2_id(1, 1)].apply(omega);
  CHECK((got - omega).norm() == Approx(0.0).margin(1e-15));

  CHECK_THROWS_AS(coherent_check(build_rep("rho", {0, 0}, 8, kQ)), std::invalid_argument);
}

TEST_CASE("gram matrices: frozen entries and sensitivity to the angle") {
  const Representation tau = build_rep("tau", {0.7}, 12, kQ);
  // ||Z_2^2 Omega||^2 = 1 - q^2
  const Vec v = evaluate(tau, NCPoly::gen(tau.preset, polmat2_id(2, 2))).apply(vacuum(tau));
  CHECK(v.squaredNorm() == Approx(0.75).epsilon(1e-12));

  CHECK(gram_equivalence(tau, tau, 2).max_defect == 0.0);
  const GramReport same = gram_equivalence(tau, build_rep("tau", {0.7}, 12, kQ), 2);
  CHECK(same.word_count == 73);
  CHECK(same.pass(1e-14));
  // different angles give genuinely different Gram data
  const GramReport diff = gram_equivalence(tau, build_rep("tau", {M_PI + 0.7}, 12, kQ), 1);
  CHECK(diff.max_defect > 0.1);
}

TEST_CASE("the boundary family's off-diagonal pair is jointly diagonal") {
  const Representation rho = build_rep("rho", {0.7, 1.9}, 16, kQ);
  const SpectrumReport sr = joint_spectrum_check(rho, 10);
  CHECK(sr.pass(1e-12));
  CHECK(sr.commutator_norm == Approx(0.0).margin(1e-15));
  CHECK_THROWS_AS(joint_spectrum_check(build_rep("theta", {0.1}, 8, kQ), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(joint_spectrum_check(rho, 16), std::invalid_argument);
}

TEST_CASE("image norms grow toward their untruncated values") {
  double prev = 0.0;
  for (int N : {4, 8, 16}) {
    const Representation th = build_rep("theta", {0.2}, N, kQ);
    const double n11 = op_norm(evaluate(th, NCPoly::gen(th.preset, polmat2_id(1, 1))));
    CHECK(n11 == Approx(2.0 * std::sqrt(1.0 - std::pow(kQ, 2.0 * (N - 1)))).epsilon(1e-10));
    CHECK(n11 > prev);
    CHECK(n11 < 2.0);  // the scalar family value q^{-1} is the supremum
    prev = n11;
  }
}
