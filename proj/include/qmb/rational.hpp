#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator pairs.
// Values stay tiny in this codebase; overflow is still guarded so a
// silent wrap can never corrupt a symbolic identity.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qmb {

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(__int128(a.num) * b.den + __int128(b.num) * a.den),
                    checked(__int128(a.den) * b.den));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(__int128(a.num) * b.num), checked(__int128(a.den) * b.den));
  }

  double to_double() const { return double(num) / double(den); }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static long long checked(__int128 v) {
    if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
      throw std::overflow_error("Rational: 64-bit overflow");
    return (long long)v;
  }
};

}  // namespace qmb
