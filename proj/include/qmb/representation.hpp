#pragma once

// The irreducible-representation catalog: for each family, the generator
// images as structured tensor operators on truncated Fock slots, plus the
// evaluation map extending them to arbitrary polynomials.  Star letters
// are mapped to adjoints of their partners' images, so evaluation never
// needs to rewrite first.

#include <optional>
#include <string>
#include <vector>

#include "qmb/ncpoly.hpp"
#include "qmb/preset.hpp"
#include "qmb/tensor_operator.hpp"

namespace qmb {

// Tensor product: concatenates slot lists, multiplies term coefficients.
inline TensorOperator tensor_product(const TensorOperator& a, const TensorOperator& b) {
  std::vector<int> dims = a.slot_dims();
  dims.insert(dims.end(), b.slot_dims().begin(), b.slot_dims().end());
  TensorOperator out(dims);
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      std::vector<FactorMatrix> f = ta.factors;
      f.insert(f.end(), tb.factors.begin(), tb.factors.end());
      out.add_term(ta.coeff * tb.coeff, std::move(f));
    }
  return out;
}

struct Representation {
  const AlgebraPreset* preset = nullptr;
  std::string family;
  std::vector<double> angles;
  std::vector<int> dims;
  double q = 0.0;
  std::vector<TensorOperator> images;  // indexed by letter id
};

namespace detail {

inline cplx phase(double a) { return {std::cos(a), std::sin(a)}; }

// Fills images for starred letters as adjoints of their partners.
inline void fill_star_images(Representation& r) {
  const auto& letters = r.preset->letters;
  for (size_t i = 0; i < letters.size(); ++i)
    if (letters[i].starred) r.images[i] = r.images[letters[i].partner].adjoint();
}

}  // namespace detail

// Families: piF | tau | nu1 | nu2 | rho | theta | gamma over polMat2;
// polC-fock | polC-onedim over polC(1); csu2-xi | csu2-pi over csu2.
// N is the per-slot truncation (ignored by zero-slot families).
inline Representation build_rep(const std::string& family, std::vector<double> angles, int N,
                                double q) {
  using detail::phase;
  auto need = [&](size_t n) {
    if (angles.size() != n)
      throw std::invalid_argument("build_rep: family '" + family + "' takes " +
                                  std::to_string(n) + " angle(s)");
  };
  Representation r;
  r.family = family;
  r.angles = angles;
  r.q = q;

  auto one_term = [&](cplx c, std::vector<FactorMatrix> f) {
    TensorOperator t(r.dims);
    t.add_term(c, std::move(f));
    return t;
  };
  auto scalar_op = [&](cplx c) {
    TensorOperator t(r.dims);
    t.add_term(c, {});
    return t;
  };

  if (family == "piF" || family == "tau" || family == "nu1" || family == "nu2" ||
      family == "rho" || family == "theta" || family == "gamma") {
    r.preset = build_preset("polMat2");
    r.images.resize(8);
    const Letter z22 = polmat2_id(2, 2), z21 = polmat2_id(2, 1), z12 = polmat2_id(1, 2),
                 z11 = polmat2_id(1, 1);
    if (family == "piF") {
      need(0);
      r.dims = {N, N, N, N};
      const auto CS = fm_CS(N, q), d = fm_d(N, q), SsC = fm_SsC(N, q), I = fm_identity(N);
      r.images[z22] = one_term(1.0, {CS, I, I, I});
      r.images[z21] = one_term(1.0, {d, CS, I, I});
      r.images[z12] = one_term(1.0, {d, I, CS, I});
      r.images[z11] = one_term(1.0, {I, d, d, CS}) +
                      one_term(-1.0 / q, {SsC, CS, CS, I});
    } else if (family == "tau") {
      need(1);
      r.dims = {N, N, N};
      const auto CS = fm_CS(N, q), d = fm_d(N, q), SsC = fm_SsC(N, q), I = fm_identity(N);
      r.images[z22] = one_term(1.0, {CS, I, I});
      r.images[z21] = one_term(1.0, {d, CS, I});
      r.images[z12] = one_term(1.0, {d, I, CS});
      r.images[z11] = one_term(phase(angles[0]), {I, d, d}) +
                      one_term(-1.0 / q, {SsC, CS, CS});
    } else if (family == "nu1" || family == "nu2") {
      need(1);
      r.dims = {N, N};
      const auto CS = fm_CS(N, q), d = fm_d(N, q), SsC = fm_SsC(N, q), I = fm_identity(N);
      const cplx u = phase(angles[0]);
      r.images[z22] = one_term(1.0, {CS, I});
      if (family == "nu1") {
        r.images[z21] = one_term(u, {d, I});
        r.images[z12] = one_term(1.0, {d, CS});
      } else {
        r.images[z21] = one_term(1.0, {d, CS});
        r.images[z12] = one_term(u, {d, I});
      }
      r.images[z11] = one_term(-u / q, {SsC, CS});
    } else if (family == "rho") {
      need(2);
      r.dims = {N};
      r.images[z22] = one_term(1.0, {fm_CS(N, q)});
      r.images[z21] = one_term(phase(angles[0]), {fm_d(N, q)});
      r.images[z12] = one_term(phase(angles[1]), {fm_d(N, q)});
      r.images[z11] = one_term(-phase(angles[0] + angles[1]) / q, {fm_SsC(N, q)});
    } else if (family == "theta") {
      need(1);
      r.dims = {N};
      r.images[z22] = one_term(phase(angles[0]), {fm_identity(N)});
      r.images[z21] = TensorOperator(r.dims);
      r.images[z12] = TensorOperator(r.dims);
      r.images[z11] = one_term(1.0 / q, {fm_CS(N, q)});
    } else {  // gamma
      need(2);
      r.dims = {};
      r.images[z22] = scalar_op(phase(angles[0]));
      r.images[z21] = TensorOperator(r.dims);
      r.images[z12] = TensorOperator(r.dims);
      r.images[z11] = scalar_op(phase(angles[1]) / q);
    }
  } else if (family == "polC-fock" || family == "polC-onedim") {
    r.preset = build_preset("polC(1)");
    r.images.resize(2);
    if (family == "polC-fock") {
      need(0);
      r.dims = {N};
      r.images[0] = one_term(1.0, {fm_CS(N, q)});
    } else {
      need(1);
      r.dims = {};
      r.images[0] = scalar_op(phase(angles[0]));
    }
  } else if (family == "csu2-xi" || family == "csu2-pi") {
    need(1);
    r.preset = build_preset("csu2");
    r.images.resize(8);
    const Letter t11 = csu2_id(1, 1), t12 = csu2_id(1, 2), t21 = csu2_id(2, 1),
                 t22 = csu2_id(2, 2);
    const cplx u = phase(angles[0]);
    if (family == "csu2-xi") {
      r.dims = {};
      r.images[t11] = scalar_op(u);
      r.images[t22] = scalar_op(std::conj(u));
      r.images[t12] = TensorOperator(r.dims);
      r.images[t21] = TensorOperator(r.dims);
    } else {
      r.dims = {N};
      r.images[t11] = one_term(1.0, {fm_SsC(N, q)});
      r.images[t21] = one_term(u, {fm_d(N, q)});
      r.images[t22] = one_term(1.0, {fm_CS(N, q)});
      r.images[t12] = one_term(-q * std::conj(u), {fm_d(N, q)});
    }
  } else {
    throw std::invalid_argument("build_rep: unknown family '" + family + "'");
  }

  // zero-term placeholders above were built before dims were known; rebuild
  for (auto& img : r.images)
    if (img.terms().empty()) img = TensorOperator(r.dims);
  detail::fill_star_images(r);
  return r;
}

// Binds the formal phase units of a coefficient to numeric angles.
inline cplx bind_scalar(const Scalar& s, double q, std::optional<double> phi1,
                        std::optional<double> phi2) {
  if (s.has_u1() && !phi1) throw std::invalid_argument("bind_scalar: unbound phase unit u1");
  if (s.has_u2() && !phi2) throw std::invalid_argument("bind_scalar: unbound phase unit u2");
  return s.eval(q, phi1.value_or(0.0), phi2.value_or(0.0));
}

// Linear multiplicative extension of the generator images.  No rewriting:
// star letters carry their own (adjoint) images.
inline TensorOperator evaluate(const Representation& rep, const NCPoly& p,
                               std::optional<double> phi1 = {},
                               std::optional<double> phi2 = {}) {
  if (p.preset() != rep.preset) throw std::invalid_argument("evaluate: preset mismatch");
  TensorOperator out(rep.dims);
  for (const auto& [w, c] : p.terms()) {
    TensorOperator acc = TensorOperator::identity(rep.dims);
    for (char ch : w.parts[0]) acc = acc.compose(rep.images[(unsigned char)ch]);
    out = out + acc.scaled(bind_scalar(c, rep.q, phi1, phi2));
  }
  return out;
}

}  // namespace qmb
