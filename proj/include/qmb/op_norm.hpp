#pragma once

// Operator norms.  Power iteration on T*T is the workhorse; a dense SVD
// oracle takes over automatically for small total dimensions and doubles
// as the independent cross-check for the iterative path.

#include <cstdint>
#include <random>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "qmb/tensor_operator.hpp"

namespace qmb {

inline constexpr long kDenseNormThreshold = 512;

struct NormResult {
  double value = 0.0;
  int iterations = 0;
  bool converged = true;
  bool dense = false;
};

template <class Op>
inline NormResult dense_norm(const Op& T) {
  const Mat m = T.materialize();
  Eigen::BDCSVD<Mat> svd(m);  // falls back to Jacobi below its internal cutoff
  NormResult r;
  r.value = m.rows() == 0 ? 0.0 : svd.singularValues()(0);
  r.dense = true;
  return r;
}

template <class Op>
inline NormResult power_iteration_norm(const Op& T, double tol = 1e-10, int max_iter = 5000,
                                       uint64_t seed = 42) {
  const long D = T.total_dim();
  const auto Tadj = T.adjoint();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(D);
  for (long i = 0; i < D; ++i) v(i) = cplx(gauss(rng), gauss(rng));
  v.normalize();

  NormResult r;
  double prev = -1.0;
  for (int it = 1; it <= max_iter; ++it) {
    r.iterations = it;
    const Vec u = T.apply(v);
    const double s = u.norm();  // ||T v||, v normalized
    if (s < 1e-300) {
      r.value = 0.0;
      return r;
    }
    Vec w = Tadj.apply(u);
    const double wn = w.norm();
    if (wn < 1e-300) {
      r.value = s;
      return r;
    }
    v = w / wn;
    if (prev >= 0.0 && std::abs(s - prev) <= tol * std::max(1.0, s)) {
      r.value = s;
      return r;
    }
    prev = s;
    r.value = s;
  }
  r.converged = false;
  return r;
}

template <class Op>
inline NormResult op_norm_full(const Op& T, double tol = 1e-10, int max_iter = 5000,
                               uint64_t seed = 42) {
  if (T.total_dim() <= kDenseNormThreshold) return dense_norm(T);
  return power_iteration_norm(T, tol, max_iter, seed);
}

template <class Op>
inline double op_norm(const Op& T, double tol = 1e-10, int max_iter = 5000, uint64_t seed = 42) {
  return op_norm_full(T, tol, max_iter, seed).value;
}

}  // namespace qmb
