#pragma once

// Dense factor matrices on a truncated Fock space of dimension N:
//
//   S  shift,           S e_n = e_{n+1}  (the top basis vector maps to 0)
//   C  weight,          C e_n = (1 - q^{2n})^{1/2} e_n
//   d  geometric decay, d e_n = q^n e_n
//
// Truncation is hard: identities that move mass past index N-1 only hold
// on interior vectors, which is why the residual checks sample away from
// the top.

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qmb {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct FactorMatrix {
  Mat mat;
  std::string label;
  bool identity = false;

  int dim() const { return int(mat.rows()); }
  FactorMatrix adjointed() const { return {mat.adjoint(), label + "*", identity}; }
  FactorMatrix times(const FactorMatrix& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("FactorMatrix: dimension mismatch");
    if (identity) return o;
    if (o.identity) return *this;
    return {mat * o.mat, label + o.label, false};
  }
};

namespace detail {
inline void check_Nq(int N, double q) {
  if (N < 1) throw std::invalid_argument("factor matrix: N must be >= 1");
  if (q <= 0.0 || q >= 1.0) throw std::invalid_argument("factor matrix: q outside (0,1)");
}
}  // namespace detail

inline FactorMatrix fm_identity(int N) {
  if (N < 1) throw std::invalid_argument("factor matrix: N must be >= 1");
  return {Mat::Identity(N, N), "1", true};
}

inline FactorMatrix fm_S(int N) {
  if (N < 1) throw std::invalid_argument("factor matrix: N must be >= 1");
  Mat m = Mat::Zero(N, N);
  for (int n = 0; n + 1 < N; ++n) m(n + 1, n) = 1.0;
  return {std::move(m), "S", false};
}

inline FactorMatrix fm_C(int N, double q) {
  detail::check_Nq(N, q);
  Mat m = Mat::Zero(N, N);
  for (int n = 0; n < N; ++n) m(n, n) = std::sqrt(1.0 - std::pow(q, 2.0 * n));
  return {std::move(m), "C", false};
}

inline FactorMatrix fm_d(int N, double q) {
  detail::check_Nq(N, q);
  Mat m = Mat::Zero(N, N);
  for (int n = 0; n < N; ++n) m(n, n) = std::pow(q, double(n));
  return {std::move(m), "d", false};
}

// The two composites every representation in this library is built from.
inline FactorMatrix fm_CS(int N, double q) {
  auto f = fm_C(N, q).times(fm_S(N));
  f.label = "CS";
  return f;
}
inline FactorMatrix fm_SsC(int N, double q) {
  FactorMatrix f{fm_S(N).mat.adjoint() * fm_C(N, q).mat, "S*C", false};
  return f;
}

inline FactorMatrix build_factor(const std::string& kind, int N, double q) {
  if (kind == "I" || kind == "1") return fm_identity(N);
  if (kind == "S") return fm_S(N);
  if (kind == "C") return fm_C(N, q);
  if (kind == "d") return fm_d(N, q);
  throw std::invalid_argument("build_factor: unknown kind '" + kind + "'");
}

}  // namespace qmb
