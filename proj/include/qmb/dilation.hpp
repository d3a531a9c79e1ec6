#pragma once

// Finite unitary power dilations of a contraction and the two slot
// replacements that upgrade the shift part of a representation to a
// unitary.  Compressing back to the base space reproduces the original
// operators on all products of undaggered generators up to the dilation
// order; daggered products break the identity, and a negative check
// documents that boundary.

#include <random>

#include "qmb/boundary.hpp"
#include "qmb/op_norm.hpp"

namespace qmb {

// Square root of a positive semidefinite matrix by eigendecomposition.
// Float noise may push eigenvalues slightly negative; values above -tol
// are clamped to zero, anything lower is rejected.
inline Mat sqrt_psd(const Mat& a, double tol = 1e-12) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  if (es.info() != Eigen::Success) throw std::runtime_error("sqrt_psd: eigensolver failed");
  Eigen::VectorXd lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < -tol) throw std::invalid_argument("sqrt_psd: matrix not positive");
    lam(i) = std::sqrt(std::max(0.0, lam(i)));
  }
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

namespace detail {

inline void require_contraction(const Mat& t) {
  if (t.rows() != t.cols()) throw std::invalid_argument("dilation: matrix must be square");
  Eigen::BDCSVD<Mat> svd(t);
  if (t.rows() > 0 && svd.singularValues()(0) > 1.0 + 1e-12)
    throw std::invalid_argument("dilation: operator norm exceeds 1");
}

}  // namespace detail

// One-step unitary [[T, D_{T*}], [D_T, -T*]] on two copies of the space.
inline Mat julia_block(const Mat& t) {
  detail::require_contraction(t);
  const long h = t.rows();
  const Mat dT = sqrt_psd(Mat::Identity(h, h) - t.adjoint() * t);
  const Mat dTs = sqrt_psd(Mat::Identity(h, h) - t * t.adjoint());
  Mat u(2 * h, 2 * h);
  u.topLeftCorner(h, h) = t;
  u.topRightCorner(h, h) = dTs;
  u.bottomLeftCorner(h, h) = dT;
  u.bottomRightCorner(h, h) = -t.adjoint();
  return u;
}

struct FiniteDilation {
  Mat T;  // the dilated contraction, dim h
  Mat U;  // unitary on (m+1) blocks of dim h
  int m = 0;
};

// Block unitary whose powers up to m compress to the powers of T: block
// column 0 feeds T and its defect, columns 1..m-1 shift down, and the
// last column closes the loop through the adjoint defect.  A round trip
// away from block 0 takes m+1 steps, so P0 U^n E0 = T^n for n <= m.
inline FiniteDilation egervary_unitary(const Mat& t, int m) {
  if (m < 1) throw std::invalid_argument("egervary_unitary: m must be >= 1");
  detail::require_contraction(t);
  const long h = t.rows();
  const Mat dT = sqrt_psd(Mat::Identity(h, h) - t.adjoint() * t);
  const Mat dTs = sqrt_psd(Mat::Identity(h, h) - t * t.adjoint());
  Mat u = Mat::Zero(h * (m + 1), h * (m + 1));
  auto block = [&](int i, int j) { return u.block(i * h, j * h, h, h); };
  block(0, 0) = t;
  block(1, 0) = dT;
  block(0, m) = dTs;
  block(1, m) = -t.adjoint();
  for (int k = 1; k <= m - 1; ++k) block(k + 1, k) = Mat::Identity(h, h);
  return {t, std::move(u), m};
}

inline double unitarity_defect(const Mat& u) {
  return (u.adjoint() * u - Mat::Identity(u.rows(), u.cols())).norm();
}

// || P0 U^n E0 - T^n ||
inline double power_defect(const FiniteDilation& fd, int n) {
  if (n < 0) throw std::invalid_argument("power_defect: n must be >= 0");
  const long h = fd.T.rows();
  Mat un = Mat::Identity(fd.U.rows(), fd.U.cols());
  Mat tn = Mat::Identity(h, h);
  for (int i = 0; i < n; ++i) {
    un = fd.U * un;
    tn = fd.T * tn;
  }
  return (un.topLeftCorner(h, h) - tn).norm();
}

namespace detail {

// Swap the shift-type factor at one slot of every image for a dense
// replacement (and its adjoint for the daggered occurrences).  The slot
// must otherwise carry only identities, which holds for the two families
// dilated here.
inline Representation replace_slot(const Representation& base, int slot, const Mat& repl,
                                   const std::string& family) {
  const Mat cs = fm_CS(base.dims[slot], base.q).mat;
  Representation out;
  out.preset = base.preset;
  out.family = family;
  out.angles = base.angles;
  out.q = base.q;
  out.dims = base.dims;
  out.dims[slot] = int(repl.rows());
  out.images.reserve(base.images.size());
  for (const auto& img : base.images) {
    TensorOperator t(out.dims);
    for (const auto& term : img.terms()) {
      std::vector<FactorMatrix> fs = term.factors;
      const FactorMatrix& f = fs[slot];
      if (f.identity)
        fs[slot] = fm_identity(int(repl.rows()));
      else if ((f.mat - cs).norm() < 1e-14)
        fs[slot] = FactorMatrix{repl, "U", false};
      else if ((f.mat - cs.adjoint()).norm() < 1e-14)
        fs[slot] = FactorMatrix{repl.adjoint(), "U*", false};
      else
        throw std::logic_error("replace_slot: unexpected factor at dilated slot");
      t.add_term(term.coeff, std::move(fs));
    }
    out.images.push_back(std::move(t));
  }
  return out;
}

// Compress the dilated slot of an operator back to the leading block.
inline TensorOperator compress_slot(const TensorOperator& op, int slot, int N) {
  std::vector<int> dims = op.slot_dims();
  dims[slot] = N;
  TensorOperator out(dims);
  for (const auto& term : op.terms()) {
    std::vector<FactorMatrix> fs = term.factors;
    if (fs[slot].identity)
      fs[slot] = fm_identity(N);
    else
      fs[slot] = FactorMatrix{fs[slot].mat.topLeftCorner(N, N), fs[slot].label, false};
    out.add_term(term.coeff, std::move(fs));
  }
  return out;
}

inline TensorOperator evaluate_word(const Representation& rep, const FactorWord& w) {
  TensorOperator acc = TensorOperator::identity(rep.dims);
  for (char ch : w) acc = acc.compose(rep.images[(unsigned char)ch]);
  return acc;
}

}  // namespace detail

struct CompressionReport {
  int step = 0;
  double phi = 0.0;
  int m = 0, deg = 0;
  struct Item {
    std::string word;
    double defect = 0.0;
  };
  std::vector<Item> words;
  double max_word_defect = 0.0;
  ResidualReport relations;     // the dilated map is itself a representation
  double starred_defect = 0.0;  // defect of z1^1 (z1^1)* at the vacuum; must stay visibly nonzero
  bool pass(double tol) const {
    return max_word_defect <= tol && relations.pass(std::max(tol, 1e-10)) &&
           starred_defect >= 0.1;
  }
};

// Step 1 dilates the final slot of the four-slot Fock family; step 2
// dilates the leading slot of the induced Fock-type composition.  For
// every sampled word in undaggered generators of length <= deg <= m the
// compression of the dilated image equals the base image; the relation
// residuals certify that the dilated map is a representation in its own
// right; and the daggered word z1^1 (z1^1)* keeps a unit defect at the
// vacuum, which is exactly why the argument is restricted to the
// holomorphic subalgebra.
inline CompressionReport psi_compression_check(int step, double phi, int m, int deg,
                                               int samples, uint64_t seed, int N, double q,
                                               double tol = 1e-12) {
  if (step != 1 && step != 2) throw std::invalid_argument("psi_compression_check: step");
  if (deg > m)
    throw std::invalid_argument("psi_compression_check: need deg <= m for the identity");
  const Mat t = fm_CS(N, q).mat;
  const FiniteDilation fd = egervary_unitary(t, m);

  const Representation base =
      step == 1 ? build_rep("piF", {}, N, q) : build_induced_fock(phi, N, q);
  const int slot = step == 1 ? 3 : 0;
  const Representation psi =
      detail::replace_slot(base, slot, fd.U, step == 1 ? "psi-step1" : "psi-step2");

  CompressionReport rep;
  rep.step = step;
  rep.phi = phi;
  rep.m = m;
  rep.deg = deg;

  long D = 1;
  for (int n : base.dims) D *= n;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto probe = [&](const TensorOperator& diff) {
    double worst = 0.0;
    for (int v = 0; v < 6; ++v) {
      Vec x(D);
      for (long i = 0; i < D; ++i) x(i) = cplx(gauss(rng), gauss(rng));
      x /= x.norm();
      worst = std::max(worst, diff.apply(x).norm());
    }
    return worst;
  };

  std::uniform_int_distribution<int> len(1, deg), letter(0, 3);
  const auto* A = build_preset("polMat2");
  for (int s = 0; s < samples; ++s) {
    FactorWord w;
    const int L = len(rng);
    for (int i = 0; i < L; ++i) w += char(letter(rng));
    const TensorOperator compressed =
        detail::compress_slot(detail::evaluate_word(psi, w), slot, N);
    const TensorOperator target = detail::evaluate_word(base, w);
    std::string label;
    for (char ch : w) label += A->letters[(unsigned char)ch].code + " ";
    CompressionReport::Item it{label, probe(compressed + target.scaled(-1.0))};
    rep.max_word_defect = std::max(rep.max_word_defect, it.defect);
    rep.words.push_back(std::move(it));
  }

  rep.relations = relation_residuals(psi, 4, std::max(20, samples), seed + 1);

  FactorWord starred;
  starred += char(polmat2_id(1, 1));
  starred += char(7 - polmat2_id(1, 1));
  const TensorOperator sdiff =
      detail::compress_slot(detail::evaluate_word(psi, starred), slot, N) +
      detail::evaluate_word(base, starred).scaled(-1.0);
  Vec vac = Vec::Zero(D);
  vac(0) = 1.0;
  rep.starred_defect = sdiff.apply(vac).norm();
  return rep;
}

}  // namespace qmb
