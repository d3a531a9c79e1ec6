#pragma once

// Numeric verification of a representation: defining-relation residuals on
// interior basis vectors, coherent-state equalities at the vacuum, Gram
// matrices over bounded-length words, and the joint spectrum of the
// commuting off-diagonal pair in the boundary family.

#include <random>

#include "qmb/op_norm.hpp"
#include "qmb/representation.hpp"
#include "qmb/rewrite.hpp"

namespace qmb {

// Flat indices of basis vectors whose every slot index is < dim - pad.
// Hard truncation breaks relation identities only on the top pad layers.
inline std::vector<long> sample_interior(const std::vector<int>& dims, int pad, int samples,
                                         uint64_t seed) {
  if (dims.empty()) return {0};
  for (int d : dims)
    if (d - pad < 1) throw std::invalid_argument("sample_interior: pad too large for dims");
  std::mt19937_64 rng(seed);
  std::vector<long> out;
  out.reserve(samples);
  for (int s = 0; s < samples; ++s) {
    long idx = 0;
    for (int d : dims) {
      std::uniform_int_distribution<int> pick(0, d - pad - 1);
      idx = idx * d + pick(rng);
    }
    out.push_back(idx);
  }
  return out;
}

struct ResidualReport {
  std::string family;
  int pad = 0, samples = 0;
  struct Item {
    std::string label;
    double residual = 0.0;
  };
  std::vector<Item> items;
  double max_residual = 0.0;
  bool pass(double tol) const { return max_residual <= tol; }
};

// Max over sampled interior basis vectors of ||rep(L - R) v|| per relation.
inline ResidualReport relation_residuals(const Representation& rep, int pad, int samples,
                                         uint64_t seed) {
  if (pad < 2) throw std::invalid_argument("relation_residuals: pad must be >= 2");
  ResidualReport rep_out;
  rep_out.family = rep.family;
  rep_out.pad = pad;
  rep_out.samples = samples;
  const auto idxs = sample_interior(rep.dims, pad, samples, seed);
  const long D = rep.dims.empty() ? 1 : [&] {
    long d = 1;
    for (int n : rep.dims) d *= n;
    return d;
  }();
  for (const auto& rel : relation_polys(rep.preset)) {
    const TensorOperator T = evaluate(rep, rel.poly);
    double worst = 0.0;
    Vec e = Vec::Zero(D);
    for (long idx : idxs) {
      e(idx) = 1.0;
      worst = std::max(worst, T.apply(e).norm());
      e(idx) = 0.0;
    }
    rep_out.items.push_back({rel.label, worst});
    rep_out.max_residual = std::max(rep_out.max_residual, worst);
  }
  return rep_out;
}

struct CoherentReport {
  double r22 = 0.0, r21 = 0.0, r12 = 0.0, r11 = 0.0;
  double max_residual = 0.0;
  bool pass(double tol) const { return max_residual <= tol; }
};

// Vacuum equalities for the three-slot families: the starred generators
// kill the vacuum except (z_1^1)*, which scales it by the conjugate phase.
inline CoherentReport coherent_check(const Representation& rep) {
  if (rep.preset != build_preset("polMat2") || rep.dims.size() != 3)
    throw std::invalid_argument("coherent_check: need a 3-slot family");
  const double phi = rep.angles.at(0);
  Vec omega = Vec::Zero(rep.dims[0] * rep.dims[1] * rep.dims[2]);
  omega(0) = 1.0;
  auto star_apply = [&](int lower, int upper) {
    return rep.images[7 - polmat2_id(lower, upper)].apply(omega);
  };
  CoherentReport r;
  r.r22 = star_apply(2, 2).norm();
  r.r21 = star_apply(2, 1).norm();
  r.r12 = star_apply(1, 2).norm();
  r.r11 = (star_apply(1, 1) - detail::phase(-phi) * omega).norm();
  r.max_residual = std::max({r.r22, r.r21, r.r12, r.r11});
  return r;
}

struct GramReport {
  int word_count = 0;
  double max_defect = 0.0;
  bool pass(double tol) const { return max_defect <= tol; }
};

namespace detail {

inline void all_words(const AlgebraPreset* A, int max_len, std::vector<Word>& out) {
  out.push_back(Word(1));
  size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (size_t l = 0; l < A->letters.size(); ++l) {
        Word w = out[i];
        w.parts[0] += char(l);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
}

inline Mat gram_matrix(const Representation& rep, const std::vector<Word>& words) {
  const long D = [&] {
    long d = 1;
    for (int n : rep.dims) d *= n;
    return d;
  }();
  Vec omega = Vec::Zero(D);
  omega(0) = 1.0;
  Mat M(D, long(words.size()));
  for (size_t i = 0; i < words.size(); ++i) {
    const NCPoly mono = NCPoly::monomial(rep.preset, words[i], Scalar::one());
    M.col(long(i)) = evaluate(rep, mono).apply(omega);
  }
  return M.adjoint() * M;
}

}  // namespace detail

// Entrywise comparison of <X(w) Omega, X(w') Omega> over all words of
// length <= max_len in generators and stars: the computable consequence
// of unitary equivalence with a shared cyclic vector.
inline GramReport gram_equivalence(const Representation& a, const Representation& b,
                                   int max_len) {
  if (a.preset != b.preset || a.dims != b.dims)
    throw std::invalid_argument("gram_equivalence: reps must share preset and dims");
  std::vector<Word> words;
  detail::all_words(a.preset, max_len, words);
  const Mat ga = detail::gram_matrix(a, words);
  const Mat gb = detail::gram_matrix(b, words);
  GramReport r;
  r.word_count = int(words.size());
  r.max_defect = (ga - gb).cwiseAbs().maxCoeff();
  return r;
}

struct SpectrumReport {
  int k_max = 0;
  double max_pair_defect = 0.0;   // diagonal entries vs (e^{i phi2} q^k, e^{i phi1} q^k)
  double max_offdiag = 0.0;
  double commutator_norm = 0.0;
  double normality = 0.0;
  bool pass(double tol) const {
    return std::max({max_pair_defect, max_offdiag, commutator_norm, normality}) <= tol;
  }
};

// The off-diagonal pair in the boundary family is simultaneously diagonal;
// its joint eigenvalue list is the geometric bi-sequence of phases.
inline SpectrumReport joint_spectrum_check(const Representation& rep, int k_max) {
  if (rep.family != "rho") throw std::invalid_argument("joint_spectrum_check: rho family only");
  const int N = rep.dims[0];
  if (k_max >= N) throw std::invalid_argument("joint_spectrum_check: k_max must be < N");
  const Mat A = rep.images[polmat2_id(1, 2)].materialize();
  const Mat B = rep.images[polmat2_id(2, 1)].materialize();
  SpectrumReport r;
  r.k_max = k_max;
  const cplx u1 = detail::phase(rep.angles[0]), u2 = detail::phase(rep.angles[1]);
  for (int k = 0; k <= k_max; ++k) {
    const double qk = std::pow(rep.q, double(k));
    r.max_pair_defect = std::max(r.max_pair_defect, std::abs(A(k, k) - u2 * qk));
    r.max_pair_defect = std::max(r.max_pair_defect, std::abs(B(k, k) - u1 * qk));
  }
  Mat offA = A, offB = B;
  offA.diagonal().setZero();
  offB.diagonal().setZero();
  r.max_offdiag = std::max(offA.cwiseAbs().maxCoeff(), offB.cwiseAbs().maxCoeff());
  r.commutator_norm = (A * B - B * A).norm();
  r.normality = std::max((A * A.adjoint() - A.adjoint() * A).norm(),
                         (B * B.adjoint() - B.adjoint() * B).norm());
  return r;
}

}  // namespace qmb
