#pragma once

// The two structure maps: the coproduct-style embedding D into
// polMat2 (x) csu2 (x) csu2 and the diagonal evaluation Pi onto polC(1),
// verified exactly by rewriting; plus the representations they induce and
// the exact character bridge from the boundary family to the scalar one.

#include <optional>

#include "qmb/rep_checks.hpp"
#include "qmb/representation.hpp"
#include "qmb/rewrite.hpp"
#include "qmb/scd.hpp"

namespace qmb {

struct HomSpec {
  std::string name;
  const AlgebraPreset* source = nullptr;
  const AlgebraPreset* target = nullptr;
  std::vector<NCPoly> images;  // per source letter id
};

// Substitutes letter images and reduces to target normal form.
inline NCPoly apply_hom(const HomSpec& h, const NCPoly& p) {
  if (p.preset() != h.source) throw std::invalid_argument("apply_hom: wrong source preset");
  NCPoly out(h.target);
  for (const auto& [w, c] : p.terms()) {
    NCPoly acc = NCPoly::one(h.target);
    for (char ch : w.parts[0]) acc = acc * h.images[(unsigned char)ch];
    out = out + acc.scaled(c);
  }
  return normal_form(out);
}

// D: z(lower j, upper i) -> sum_{a,b} z(lower b, upper a) (x) t_{bj} (x) t_{ai}.
// Pi: z(1,1) -> q^{-1} z, z(2,2) -> the formal phase u2, off-diagonal -> 0.
inline HomSpec build_hom(const std::string& name) {
  HomSpec h;
  h.name = name;
  if (name == "D") {
    h.source = build_preset("polMat2");
    h.target = build_preset("tensor(polMat2,csu2,csu2)");
    h.images.resize(8, NCPoly(h.target));
    for (int lower = 1; lower <= 2; ++lower)
      for (int upper = 1; upper <= 2; ++upper) {
        NCPoly img(h.target);
        for (int a = 1; a <= 2; ++a)
          for (int b = 1; b <= 2; ++b) {
            Word w(3);
            w.parts[0] += char(polmat2_id(b, a));
            w.parts[1] += char(csu2_id(b, lower));
            w.parts[2] += char(csu2_id(a, upper));
            img.add_term(w, Scalar::one());
          }
        h.images[polmat2_id(lower, upper)] = std::move(img);
      }
  } else if (name == "Pi") {
    h.source = build_preset("polMat2");
    h.target = build_preset("polC(1)");
    h.images.resize(8, NCPoly(h.target));
    h.images[polmat2_id(1, 1)] = NCPoly::gen(h.target, Letter(0)).scaled(Scalar::q_pow(-1));
    h.images[polmat2_id(2, 2)] = NCPoly::one(h.target).scaled(Scalar::u2_pow(1));
  } else {
    throw std::invalid_argument("build_hom: unknown hom '" + name + "'");
  }
  for (const auto& l : h.source->letters)
    if (l.starred) {
      const Letter id = h.source->letter_id(l.code);
      h.images[id] = normal_form(h.images[l.partner].adjoint());
    }
  return h;
}

struct HomCheckReport {
  std::string name;
  struct Item {
    std::string label;
    bool exact = false;
  };
  std::vector<Item> items;
  int failures = 0;
  bool pass() const { return failures == 0; }
};

// Exact verification: every defining relation of the source maps to zero.
inline HomCheckReport check_hom(const HomSpec& h) {
  HomCheckReport rep;
  rep.name = h.name;
  for (const auto& rel : relation_polys(h.source)) {
    const bool ok = is_zero(apply_hom(h, rel.poly));
    rep.items.push_back({rel.label, ok});
    if (!ok) ++rep.failures;
  }
  return rep;
}

// Pulls a representation of the target back along the hom.
inline Representation compose_rep(const HomSpec& h, const Representation& base,
                                  const std::string& family, std::vector<double> angles,
                                  std::optional<double> phi1 = {},
                                  std::optional<double> phi2 = {}) {
  if (base.preset != h.target) throw std::invalid_argument("compose_rep: base preset mismatch");
  Representation r;
  r.preset = h.source;
  r.family = family;
  r.angles = std::move(angles);
  r.dims = base.dims;
  r.q = base.q;
  r.images.resize(h.source->letters.size());
  for (size_t i = 0; i < h.images.size(); ++i)
    r.images[i] = evaluate(base, h.images[i], phi1, phi2);
  return r;
}

// Evaluates a polynomial over a tensor preset against one representation
// per factor, tensoring the slot-wise results.
inline TensorOperator evaluate_tensor(const std::vector<Representation>& factors,
                                      const NCPoly& p, std::optional<double> phi1 = {},
                                      std::optional<double> phi2 = {}) {
  const AlgebraPreset* A = p.preset();
  if (!A->is_tensor() || A->factor_count() != int(factors.size()))
    throw std::invalid_argument("evaluate_tensor: factor mismatch");
  std::vector<int> dims;
  for (const auto& f : factors) dims.insert(dims.end(), f.dims.begin(), f.dims.end());
  for (int k = 0; k < A->factor_count(); ++k)
    if (factors[k].preset != A->factor(k))
      throw std::invalid_argument("evaluate_tensor: factor preset mismatch");
  TensorOperator out(dims);
  for (const auto& [w, c] : p.terms()) {
    TensorOperator acc(std::vector<int>{});
    acc.add_term(bind_scalar(c, factors[0].q, phi1, phi2), {});
    for (size_t k = 0; k < factors.size(); ++k) {
      TensorOperator part = TensorOperator::identity(factors[k].dims);
      for (char ch : w.parts[k]) part = part.compose(factors[k].images[(unsigned char)ch]);
      acc = tensor_product(acc, part);
    }
    out = out + acc;
  }
  return out;
}

// Generator-wise composition (factor reps) o hom, as a Representation.
inline Representation induced_rep(const HomSpec& h, const std::vector<Representation>& factors,
                                  const std::string& family, std::vector<double> angles) {
  Representation r;
  r.preset = h.source;
  r.family = family;
  r.angles = std::move(angles);
  r.q = factors.at(0).q;
  for (const auto& f : factors) {
    if (f.q != r.q) throw std::invalid_argument("induced_rep: inconsistent q");
    r.dims.insert(r.dims.end(), f.dims.begin(), f.dims.end());
  }
  r.images.resize(h.source->letters.size());
  for (size_t i = 0; i < h.images.size(); ++i)
    r.images[i] = evaluate_tensor(factors, h.images[i]);
  return r;
}

// The two compositions studied in depth: base slot through Pi (Fock or
// one-dimensional), then D against two copies of the infinite csu2 family
// at angle zero.
inline Representation build_induced_fock(double phi, int N, double q) {
  const HomSpec Pi = build_hom("Pi"), D = build_hom("D");
  const Representation F = compose_rep(Pi, build_rep("polC-fock", {}, N, q), "F", {phi}, {}, phi);
  const Representation pi0 = build_rep("csu2-pi", {0.0}, N, q);
  return induced_rep(D, {F, pi0, pi0}, "induced-fock", {phi});
}

inline Representation build_induced_chi(double phi1, double phi2, int N, double q) {
  const HomSpec Pi = build_hom("Pi"), D = build_hom("D");
  const Representation chi = compose_rep(Pi, build_rep("polC-onedim", {phi1}, N, q), "chi",
                                         {phi1, phi2}, {}, phi2);
  const Representation pi0 = build_rep("csu2-pi", {0.0}, N, q);
  return induced_rep(D, {chi, pi0, pi0}, "induced-chi", {phi1, phi2});
}

struct BridgeReport {
  struct Item {
    std::string generator;
    bool exact = false;
  };
  std::vector<Item> items;
  bool pass() const {
    for (const auto& i : items)
      if (!i.exact) return false;
    return !items.empty();
  }
};

// Shift-weight expressions of the boundary family with formal phases u1,
// u2; the second angle shifted by pi enters as an explicit sign.
inline std::vector<NCPoly> rho_scd_images(bool shift_phi2_by_pi) {
  const auto* A = scd_preset();
  const Scalar sgn = shift_phi2_by_pi ? -Scalar::one() : Scalar::one();
  auto mono = [&](std::initializer_list<int> letters, Scalar c) {
    Word w(1);
    for (int l : letters) w.parts[0] += char(l);
    return NCPoly::monomial(A, w, std::move(c));
  };
  std::vector<NCPoly> img(8, NCPoly(A));
  img[polmat2_id(2, 2)] = mono({1, 0}, Scalar::one());                       // CS
  img[polmat2_id(2, 1)] = mono({2}, Scalar::u1_pow(1));                      // u1 d
  img[polmat2_id(1, 2)] = mono({2}, sgn * Scalar::u2_pow(1));                // +-u2 d
  img[polmat2_id(1, 1)] =                                                    // -u1(+-u2)/q S*C
      mono({3, 1}, -(sgn * Scalar::u1_pow(1) * Scalar::u2_pow(1) * Scalar::q_pow(-1)));
  for (int id = 4; id < 8; ++id) img[id] = img[7 - id].adjoint();
  return img;
}

// Exact character identity: applying the boundary character (phase unit
// u1) to the shifted boundary family reproduces the scalar family.
inline BridgeReport theta_gamma_bridge() {
  const std::vector<NCPoly> img = rho_scd_images(true);
  std::vector<Scalar> gamma(8);
  gamma[polmat2_id(2, 2)] = Scalar::u1_pow(1);
  gamma[polmat2_id(2, 1)] = Scalar::zero();
  gamma[polmat2_id(1, 2)] = Scalar::zero();
  gamma[polmat2_id(1, 1)] = Scalar::u2_pow(1) * Scalar::q_pow(-1);
  for (int id = 4; id < 8; ++id) gamma[id] = gamma[7 - id].star();
  BridgeReport rep;
  const auto* A = build_preset("polMat2");
  for (int id = 0; id < 8; ++id)
    rep.items.push_back({A->letters[id].code, theta_char_symbolic(img[id], 1) == gamma[id]});
  return rep;
}

}  // namespace qmb
