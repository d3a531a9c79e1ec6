#pragma once

// Shared test utilities: random symbolic data and an independent dense
// Kronecker oracle the structured operator kernel is checked against.

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "qmb/ncpoly.hpp"
#include "qmb/preset.hpp"
#include "qmb/scalar.hpp"

namespace testutil {

inline qmb::Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-3, 3), num(-5, 5), den(1, 5), nterms(1, 3);
  qmb::Scalar s = qmb::Scalar::zero();
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    s += qmb::Scalar::of(qmb::Rational(num(rng), den(rng)), exp(rng), exp(rng), exp(rng));
  return s;
}

inline qmb::Word random_word(const qmb::AlgebraPreset* A, std::mt19937_64& rng, int max_len = 4) {
  qmb::Word w(A->factor_count());
  for (int f = 0; f < A->factor_count(); ++f) {
    const auto& F = *A->factor(f);
    std::uniform_int_distribution<int> len(0, max_len),
        letter(0, int(F.letters.size()) - 1);
    const int L = len(rng);
    for (int i = 0; i < L; ++i) w.parts[f] += char(letter(rng));
  }
  return w;
}

inline qmb::NCPoly random_poly(const qmb::AlgebraPreset* A, std::mt19937_64& rng,
                               int max_terms = 3, int max_len = 4) {
  qmb::NCPoly p(A);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(random_word(A, rng, max_len), random_scalar(rng));
  return p;
}

// Dense Kronecker product, written independently of the library kernel.
inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace testutil
