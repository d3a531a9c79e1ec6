#pragma once

// Coefficient ring for the symbolic layer: Laurent polynomials in the
// deformation parameter q and two formal unimodular phase units u1, u2,
// with rational coefficients.  The involution fixes q and inverts the
// phase units.  Numeric evaluation substitutes q -> q0 in (0,1) and
// u_k -> exp(i*phi_k).

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmb/rational.hpp"

namespace qmb {

struct Exponents {
  int q = 0;
  int u1 = 0;
  int u2 = 0;
  auto operator<=>(const Exponents&) const = default;
};

class Scalar {
 public:
  Scalar() = default;

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return integer(1); }
  static Scalar integer(long long n) { return of(Rational(n), 0, 0, 0); }
  static Scalar rational(Rational r) { return of(r, 0, 0, 0); }
  static Scalar q_pow(int k) { return of(Rational(1), k, 0, 0); }
  static Scalar u1_pow(int k) { return of(Rational(1), 0, k, 0); }
  static Scalar u2_pow(int k) { return of(Rational(1), 0, 0, k); }

  static Scalar of(Rational r, int eq, int eu1, int eu2) {
    Scalar s;
    if (!r.is_zero()) s.terms_.push_back({Exponents{eq, eu1, eu2}, r});
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  bool has_phase() const {
    for (const auto& [e, r] : terms_)
      if (e.u1 != 0 || e.u2 != 0) return true;
    return false;
  }
  bool has_u1() const {
    for (const auto& [e, r] : terms_)
      if (e.u1 != 0) return true;
    return false;
  }
  bool has_u2() const {
    for (const auto& [e, r] : terms_)
      if (e.u2 != 0) return true;
    return false;
  }

  const std::vector<std::pair<Exponents, Rational>>& terms() const { return terms_; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar out;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        out.terms_.push_back(*ib++);
      } else {
        Rational r = ia->second + ib->second;
        if (!r.is_zero()) out.terms_.push_back({ia->first, r});
        ++ia; ++ib;
      }
    }
    return out;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  Scalar operator-() const {
    Scalar out;
    out.terms_.reserve(terms_.size());
    for (const auto& [e, r] : terms_) out.terms_.push_back({e, -r});
    return out;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [ea, ra] : a.terms_)
      for (const auto& [eb, rb] : b.terms_) {
        Scalar t = of(ra * rb, ea.q + eb.q, ea.u1 + eb.u1, ea.u2 + eb.u2);
        out = out + t;
      }
    return out;
  }

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  // Involution: q is real, the phase units are unimodular.
  Scalar star() const {
    Scalar out;
    for (const auto& [e, r] : terms_) out = out + of(r, e.q, -e.u1, -e.u2);
    return out;
  }

  std::complex<double> eval(double q, double phi1 = 0.0, double phi2 = 0.0) const {
    if (q <= 0.0 || q >= 1.0) throw std::invalid_argument("Scalar::eval: q outside (0,1)");
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, r] : terms_) {
      const double mag = r.to_double() * std::pow(q, double(e.q));
      const double ang = e.u1 * phi1 + e.u2 * phi2;
      acc += mag * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, r] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += r.str();
      if (e.q != 0) s += "*q^" + std::to_string(e.q);
      if (e.u1 != 0) s += "*u1^" + std::to_string(e.u1);
      if (e.u2 != 0) s += "*u2^" + std::to_string(e.u2);
    }
    return s;
  }

 private:
  // Sorted by exponent triple, no zero coefficients.
  std::vector<std::pair<Exponents, Rational>> terms_;
};

}  // namespace qmb
