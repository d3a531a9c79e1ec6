#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "qmb/fock.hpp"
#include "qmb/op_norm.hpp"
#include "qmb/scd.hpp"
#include "qmb/tensor_operator.hpp"

using namespace qmb;
using Catch::Approx;

namespace {

Vec basis(int N, int j) {
  Vec e = Vec::Zero(N);
  e(j) = 1.0;
  return e;
}

FactorMatrix random_factor(int N, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m(i, j) = cplx(g(rng), g(rng));
  return {std::move(m), "R", false};
}

TensorOperator random_operator(const std::vector<int>& dims, int nterms, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 3);
  TensorOperator T(dims);
  for (int t = 0; t < nterms; ++t) {
    std::vector<FactorMatrix> f;
    for (int d : dims)
      f.push_back(coin(rng) == 0 ? fm_identity(d) : random_factor(d, rng));
    T.add_term(cplx(g(rng), g(rng)), std::move(f));
  }
  return T;
}

Vec random_vec(long D, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(D);
  for (long i = 0; i < D; ++i) v(i) = cplx(g(rng), g(rng));
  return v;
}

// Dense matrix of one operator term via the independent Kronecker oracle.
Mat oracle_dense(const TensorOperator& T) {
  Mat acc = Mat::Zero(T.total_dim(), T.total_dim());
  for (const auto& term : T.terms()) {
    Mat m = Mat::Identity(1, 1);
    for (const auto& f : term.factors) m = testutil::kron(m, f.mat);
    acc += term.coeff * m;
  }
  return acc;
}

}  // namespace

TEST_CASE("factor matrices act on basis vectors as specified") {
  const int N = 8;
  const double q = 0.5;

  CHECK((fm_S(N).mat * basis(N, 0) - basis(N, 1)).norm() == Approx(0.0).margin(1e-15));
  CHECK(fm_S(N).mat.col(N - 1).norm() == 0.0);  // hard truncation
  CHECK(fm_C(N, q).mat.col(0).norm() == 0.0);
  CHECK((fm_C(N, q).mat * basis(N, 2) - std::sqrt(1.0 - 0.0625) * basis(N, 2)).norm() ==
        Approx(0.0).margin(1e-15));
  CHECK((fm_d(N, q).mat * basis(N, 2) - 0.25 * basis(N, 2)).norm() ==
        Approx(0.0).margin(1e-15));
  CHECK((fm_CS(N, q).mat * basis(N, 0) - std::sqrt(0.75) * basis(N, 1)).norm() ==
        Approx(0.0).margin(1e-15));
  CHECK((fm_SsC(N, q).mat * basis(N, 1) - std::sqrt(0.75) * basis(N, 0)).norm() ==
        Approx(0.0).margin(1e-15));
  CHECK(fm_SsC(N, q).mat.col(0).norm() == 0.0);

  CHECK(fm_S(N).label == "S");
  CHECK(fm_S(N).adjointed().label == "S*");
  CHECK(fm_identity(N).times(fm_d(N, q)).label == "d");
  CHECK(build_factor("C", N, q).mat == fm_C(N, q).mat);

  CHECK_THROWS_AS(fm_S(0), std::invalid_argument);
  CHECK_THROWS_AS(fm_C(4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fm_C(4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_factor("X", 4, q), std::invalid_argument);
}

TEST_CASE("structured tensor apply matches the dense Kronecker oracle") {
  std::mt19937_64 rng(7);
  for (const auto& dims : {std::vector<int>{3, 4, 2}, std::vector<int>{5}, std::vector<int>{2, 2, 3, 2}}) {
    const TensorOperator T = random_operator(dims, 3, rng);
    const Mat dense = oracle_dense(T);
    CHECK((T.materialize() - dense).norm() == Approx(0.0).margin(1e-10));
    for (int trial = 0; trial < 4; ++trial) {
      const Vec v = random_vec(T.total_dim(), rng);
      CHECK((T.apply(v) - dense * v).norm() <= 1e-10 * std::max(1.0, v.norm()));
    }
  }

  TensorOperator T({2, 3});
  CHECK_THROWS_AS(T.apply(Vec::Zero(5)), std::invalid_argument);
  CHECK_THROWS_AS(T.add_term(cplx(1, 0), {fm_identity(2)}), std::invalid_argument);
  CHECK_THROWS_AS(T.add_term(cplx(1, 0), {fm_identity(2), fm_identity(4)}),
                  std::invalid_argument);
}

TEST_CASE("adjoint, compose, sum and scaling match dense arithmetic") {
  std::mt19937_64 rng(11);
  const std::vector<int> dims{3, 2, 2};
  const TensorOperator A = random_operator(dims, 3, rng);
  const TensorOperator B = random_operator(dims, 2, rng);
  const Mat da = oracle_dense(A), db = oracle_dense(B);

  CHECK((A.adjoint().materialize() - da.adjoint()).norm() == Approx(0.0).margin(1e-10));
  CHECK((A.compose(B).materialize() - da * db).norm() == Approx(0.0).margin(1e-9));
  CHECK(((A + B).materialize() - (da + db)).norm() == Approx(0.0).margin(1e-10));
  const cplx s(0.5, -2.0);
  CHECK((A.scaled(s).materialize() - s * da).norm() == Approx(0.0).margin(1e-10));
  CHECK(A.scaled(cplx(0.0, 0.0)).terms().empty());

  const Vec v = random_vec(A.total_dim(), rng);
  CHECK((A.adjoint().apply(v) - da.adjoint() * v).norm() <= 1e-9);

  const TensorOperator C = random_operator({4}, 2, rng);
  CHECK_THROWS_AS(A.compose(C), std::invalid_argument);
}

TEST_CASE("zero-slot operators are scalars") {
  TensorOperator sc(std::vector<int>{});
  CHECK(sc.total_dim() == 1);
  sc.add_term(cplx(2.0, 1.0), {});
  Vec v(1);
  v(0) = cplx(3.0, 0.0);
  CHECK(sc.apply(v)(0) == cplx(6.0, 3.0));
  CHECK(sc.materialize()(0, 0) == cplx(2.0, 1.0));
  CHECK(sc.adjoint().materialize()(0, 0) == cplx(2.0, -1.0));
  CHECK(op_norm(sc) == Approx(std::sqrt(5.0)));
}

TEST_CASE("block operators stack block rows and columns") {
  std::mt19937_64 rng(13);
  const std::vector<int> dims{3, 2};
  std::vector<TensorOperator> blocks;
  for (int k = 0; k < 4; ++k) blocks.push_back(random_operator(dims, 2, rng));
  const BlockOperator B(2, blocks);
  CHECK(B.block_dim() == 6);
  CHECK(B.total_dim() == 12);

  Mat dense = Mat::Zero(12, 12);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) dense.block(i * 6, j * 6, 6, 6) = oracle_dense(blocks[i * 2 + j]);
  CHECK((B.materialize() - dense).norm() == Approx(0.0).margin(1e-10));
  const Vec v = random_vec(12, rng);
  CHECK((B.apply(v) - dense * v).norm() <= 1e-9);
  CHECK((B.adjoint().materialize() - dense.adjoint()).norm() == Approx(0.0).margin(1e-10));

  CHECK_THROWS_AS(BlockOperator(2, {blocks[0], blocks[1], blocks[2]}), std::invalid_argument);
}

TEST_CASE("operator norm: dense oracle and power iteration agree") {
  std::mt19937_64 rng(17);

  // ||CS|| on dimension N has singular values (1-q^{2k})^{1/2}, k < N.
  for (int N : {2, 4, 8, 16}) {
    TensorOperator T({N});
    T.add_term(cplx(1.0, 0.0), {fm_CS(N, 0.5)});
    const NormResult r = op_norm_full(T);
    CHECK(r.dense);
    CHECK(r.value == Approx(std::sqrt(1.0 - std::pow(0.5, 2.0 * (N - 1)))).epsilon(1e-12));
  }
  {
    TensorOperator T({4});
    T.add_term(cplx(1.0, 0.0), {fm_CS(4, 0.5)});
    CHECK(op_norm(T) == Approx(std::sqrt(63.0 / 64.0)).epsilon(1e-12));
    // strict contraction, approaching 1 from below as N grows
    TensorOperator T16({16});
    T16.add_term(cplx(1.0, 0.0), {fm_CS(16, 0.5)});
    CHECK(op_norm(T) < op_norm(T16));
    CHECK(op_norm(T16) < 1.0);
  }

  // Iterative path against the dense oracle, small and large.
  for (int trial = 0; trial < 3; ++trial) {
    const TensorOperator T = random_operator({3, 3, 2}, 3, rng);
    const double exact = dense_norm(T).value;
    const NormResult pi = power_iteration_norm(T);
    CHECK(pi.converged);
    CHECK(pi.value == Approx(exact).epsilon(1e-7));
  }
  {
    const TensorOperator T = random_operator({6, 6, 6, 4}, 3, rng);  // 864 > dense cutoff
    const NormResult full = op_norm_full(T);
    CHECK_FALSE(full.dense);
    CHECK(full.converged);
    CHECK(full.value == Approx(dense_norm(T).value).epsilon(1e-7));
  }
}

TEST_CASE("shift-weight expressions realize as operators") {
  const int N = 8;
  const double q = 0.5;
  const NCPoly S = scd_gen("S"), C = scd_gen("C"), d = scd_gen("d");

  const TensorOperator T = scd_operator(S.adjoint() * C, N, q);
  CHECK((T.materialize() - fm_SsC(N, q).mat).norm() == Approx(0.0).margin(1e-14));

  // phase units in coefficients bind through the numeric evaluation
  const NCPoly p = d.scaled(Scalar::u1_pow(1));
  const double phi = 0.9;
  const Mat m = scd_operator(p, N, q, phi).materialize();
  CHECK((m - cplx(std::cos(phi), std::sin(phi)) * fm_d(N, q).mat).norm() ==
        Approx(0.0).margin(1e-14));

  CHECK_THROWS_AS(scd_operator(NCPoly::one(build_preset("csu2")), N, q), std::invalid_argument);
}

TEST_CASE("boundary character on shift-weight symbols") {
  const double q = 0.5, phi = 0.7;
  const NCPoly S = scd_gen("S"), C = scd_gen("C"), d = scd_gen("d");

  CHECK(std::abs(theta_char(S, phi, q) - cplx(std::cos(phi), std::sin(phi))) < 1e-15);
  CHECK(std::abs(theta_char(S.adjoint() * C, phi, q) - cplx(std::cos(phi), -std::sin(phi))) <
        1e-15);
  CHECK(std::abs(theta_char(d, phi, q)) == 0.0);
  CHECK(std::abs(theta_char(C * C, phi, q) - cplx(1.0, 0.0)) < 1e-15);

  // multiplicative on the free algebra
  std::mt19937_64 rng(19);
  const auto* A = scd_preset();
  for (int trial = 0; trial < 20; ++trial) {
    const NCPoly p = testutil::random_poly(A, rng), r = testutil::random_poly(A, rng);
    const cplx lhs = theta_char(p * r, phi, q);
    const cplx rhs = theta_char(p, phi, q) * theta_char(r, phi, q);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
  }

  // the exact character specializes to the numeric one
  CHECK(theta_char_symbolic(S.adjoint() * C, 1) == Scalar::u1_pow(-1));
  for (int trial = 0; trial < 20; ++trial) {
    const NCPoly p = testutil::random_poly(A, rng);
    const cplx sym = theta_char_symbolic(p, 1).eval(q, phi, 0.3);
    const cplx num = theta_char(p, phi, q, phi, 0.3);
    CHECK(std::abs(sym - num) <= 1e-9 * std::max(1.0, std::abs(num)));
  }

  CHECK_THROWS_AS(theta_char(NCPoly::one(build_preset("csu2")), phi, q), std::invalid_argument);
  CHECK_THROWS_AS(theta_char_symbolic(S, 3), std::invalid_argument);
}

TEST_CASE("weight operators match their shift-series expansions within geometric tails") {
  const CFormulaReport rep = c_formula_check(32, 0.5, 20);
  CHECK(rep.pass);
  CHECK(rep.c_interior <= 1e-12);  // exact below the cutoff
  CHECK(rep.d_interior <= 1e-12);
  CHECK(rep.c_bound == Approx(std::pow(2.0, -42.0)));
  CHECK(rep.d_bound == Approx(std::pow(2.0, -21.0)));
  CHECK(rep.c_residual <= rep.c_bound + 1e-12);
  CHECK(rep.d_residual <= rep.d_bound + 1e-12);
  // the d tail bound is attained at e_{K+1}
  CHECK(rep.d_residual == Approx(rep.d_bound).epsilon(1e-9));

  const CFormulaReport coarse = c_formula_check(32, 0.5, 5);
  CHECK(coarse.pass);
  CHECK(coarse.d_residual == Approx(std::pow(0.5, 6.0)).epsilon(1e-9));
  CHECK(coarse.d_residual > rep.d_residual);

  CHECK_THROWS_AS(c_formula_check(8, 0.5, 8), std::invalid_argument);
  CHECK_THROWS_AS(c_formula_check(8, 0.5, -1), std::invalid_argument);
}
