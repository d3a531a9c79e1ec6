#pragma once

// Expressions in the Fock factor symbols S, C, d and their stars, their
// numeric realization, and the boundary character that sends S to a
// unimodular scalar, C to 1 and d to 0.  The series identities expanding
// C^2 and d through shift monomials are verified here with explicit
// geometric tail bounds.

#include <optional>

#include "qmb/ncpoly.hpp"
#include "qmb/preset.hpp"
#include "qmb/tensor_operator.hpp"

namespace qmb {

inline const AlgebraPreset* scd_preset() { return build_preset("scd"); }

inline NCPoly scd_gen(const std::string& code) { return NCPoly::gen(scd_preset(), code); }

// One-slot operator realization of an SCd expression at truncation N.
// Phase units in the coefficients are bound through phi1/phi2.
inline TensorOperator scd_operator(const NCPoly& p, int N, double q, double phi1 = 0.0,
                                   double phi2 = 0.0) {
  if (p.preset() != scd_preset()) throw std::invalid_argument("scd_operator: wrong preset");
  const FactorMatrix base[3] = {fm_S(N), fm_C(N, q), fm_d(N, q)};
  TensorOperator out({N});
  for (const auto& [w, c] : p.terms()) {
    FactorMatrix acc = fm_identity(N);
    for (char ch : w.parts[0]) {
      const int id = (unsigned char)ch;
      const FactorMatrix f = id < 3 ? base[id] : base[id - 3].adjointed();
      acc = acc.times(f);
    }
    out.add_term(c.eval(q, phi1, phi2), {acc});
  }
  return out;
}

// Character value: S -> e^{i phi}, C -> 1, d -> 0 (stars conjugate).
inline cplx theta_char(const NCPoly& p, double phi, double q, double phi1 = 0.0,
                       double phi2 = 0.0) {
  if (p.preset() != scd_preset()) throw std::invalid_argument("theta_char: wrong preset");
  cplx acc{0.0, 0.0};
  for (const auto& [w, c] : p.terms()) {
    cplx val{1.0, 0.0};
    for (char ch : w.parts[0]) {
      switch ((unsigned char)ch) {
        case 0: val *= cplx(std::cos(phi), std::sin(phi)); break;    // S
        case 3: val *= cplx(std::cos(phi), -std::sin(phi)); break;   // S*
        case 1: case 4: break;                                       // C, C*
        default: val = cplx(0.0, 0.0);                               // d, d*
      }
      if (val == cplx(0.0, 0.0)) break;
    }
    acc += c.eval(q, phi1, phi2) * val;
  }
  return acc;
}

// Exact character: S maps to the formal phase unit u1 or u2, so identities
// involving the character can be checked in the coefficient ring itself.
inline Scalar theta_char_symbolic(const NCPoly& p, int unit) {
  if (p.preset() != scd_preset()) throw std::invalid_argument("theta_char_symbolic: wrong preset");
  if (unit != 1 && unit != 2) throw std::invalid_argument("theta_char_symbolic: unit is 1 or 2");
  auto u_pow = [unit](int k) { return unit == 1 ? Scalar::u1_pow(k) : Scalar::u2_pow(k); };
  Scalar acc = Scalar::zero();
  for (const auto& [w, c] : p.terms()) {
    Scalar val = Scalar::one();
    for (char ch : w.parts[0]) {
      switch ((unsigned char)ch) {
        case 0: val *= u_pow(1); break;   // S
        case 3: val *= u_pow(-1); break;  // S*
        case 1: case 4: break;            // C, C*
        default: val = Scalar::zero();    // d, d*
      }
      if (val.is_zero()) break;
    }
    acc += c * val;
  }
  return acc;
}

// Residuals of the truncated series identities
//   C^2    = (1-q^2) sum_n q^{2n} S^{n+1} S*^{n+1}
//   d      = sum_n q^n (S^n S*^n - S^{n+1} S*^{n+1})
// summed to n = K.  On basis vectors e_j with j <= K the partial sums are
// exact (interior residuals are machine zeros); over the whole space the
// residual obeys the geometric tail bounds q^{2(K+1)} resp. q^{K+1}, the
// latter attained at e_{K+1}.
struct CFormulaReport {
  int N = 0, K = 0;
  double q = 0.0;
  double c_residual = 0.0, d_residual = 0.0;          // max over all columns
  double c_interior = 0.0, d_interior = 0.0;          // max over columns <= K
  double c_bound = 0.0, d_bound = 0.0;
  bool pass = false;
};

inline CFormulaReport c_formula_check(int N, double q, int K, double slack = 1e-12) {
  if (K < 0 || K >= N) throw std::invalid_argument("c_formula_check: need 0 <= K < N");
  detail::check_Nq(N, q);
  CFormulaReport rep;
  rep.N = N;
  rep.K = K;
  rep.q = q;

  const Mat S = fm_S(N).mat;
  const Mat C = fm_C(N, q).mat;
  const Mat d = fm_d(N, q).mat;
  Mat c_sum = Mat::Zero(N, N);
  Mat d_sum = Mat::Zero(N, N);
  Mat Sk = Mat::Identity(N, N);  // S^n
  for (int n = 0; n <= K; ++n) {
    const Mat Pn = Sk * Sk.adjoint();          // S^n S*^n
    const Mat Sk1 = S * Sk;                    // S^{n+1}
    const Mat Pn1 = Sk1 * Sk1.adjoint();       // S^{n+1} S*^{n+1}
    c_sum += (1.0 - q * q) * std::pow(q, 2.0 * n) * Pn1;
    d_sum += std::pow(q, double(n)) * (Pn - Pn1);
    Sk = Sk1;
  }
  const Mat c_diff = C * C - c_sum;
  const Mat d_diff = d - d_sum;
  for (int j = 0; j < N; ++j) {
    rep.c_residual = std::max(rep.c_residual, c_diff.col(j).norm());
    rep.d_residual = std::max(rep.d_residual, d_diff.col(j).norm());
    if (j <= K) {
      rep.c_interior = std::max(rep.c_interior, c_diff.col(j).norm());
      rep.d_interior = std::max(rep.d_interior, d_diff.col(j).norm());
    }
  }
  rep.c_bound = std::pow(q, 2.0 * (K + 1));
  rep.d_bound = std::pow(q, double(K + 1));
  rep.pass = rep.c_residual <= rep.c_bound + slack && rep.d_residual <= rep.d_bound + slack;
  return rep;
}

}  // namespace qmb
