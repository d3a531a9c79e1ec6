#pragma once

// Noncommutative polynomials: finite Scalar-linear combinations of words
// over a preset's alphabet.  Multiplication is the free product
// (factor-wise concatenation); reduction modulo the relations lives in
// rewrite.hpp.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qmb/preset.hpp"
#include "qmb/scalar.hpp"
#include "qmb/word.hpp"

namespace qmb {

class NCPoly {
 public:
  NCPoly() : preset_(nullptr) {}
  explicit NCPoly(const AlgebraPreset* preset) : preset_(preset) {}

  static NCPoly zero(const AlgebraPreset* A) { return NCPoly(A); }
  static NCPoly one(const AlgebraPreset* A) {
    return monomial(A, Word(A->factor_count()), Scalar::one());
  }
  static NCPoly monomial(const AlgebraPreset* A, Word w, Scalar c) {
    if (int(w.parts.size()) != A->factor_count())
      throw std::invalid_argument("NCPoly: word factor count mismatch");
    NCPoly p(A);
    if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
    return p;
  }
  // Generator of a single-factor preset, by id or by code.
  static NCPoly gen(const AlgebraPreset* A, Letter id) {
    if (A->is_tensor()) throw std::invalid_argument("NCPoly::gen: tensor preset");
    if (id >= A->letters.size()) throw std::invalid_argument("NCPoly::gen: bad letter id");
    return monomial(A, Word::single(FactorWord(1, char(id))), Scalar::one());
  }
  static NCPoly gen(const AlgebraPreset* A, const std::string& code) {
    return gen(A, A->letter_id(code));
  }

  const AlgebraPreset* preset() const { return preset_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const Scalar& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(w, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.preset_ == b.preset_ && a.terms_ == b.terms_;
  }

  friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    check_match(a, b);
    NCPoly out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
  }
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    check_match(a, b);
    NCPoly out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
    return out;
  }
  NCPoly operator-() const {
    NCPoly out(preset_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
  }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    check_match(a, b);
    NCPoly out(a.preset_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add_term(wa.concat(wb), ca * cb);
    return out;
  }

  NCPoly scaled(const Scalar& s) const {
    NCPoly out(preset_);
    for (const auto& [w, c] : terms_) out.add_term(w, c * s);
    return out;
  }

  // Involution: reverse each word, push the star through letterwise via
  // the preset's involution table, and star the coefficients.  No
  // reduction modulo the relations is performed here.
  NCPoly adjoint() const {
    NCPoly out(preset_);
    const int nf = preset_->factor_count();
    for (const auto& [w, c] : terms_) {
      // Per-factor adjoint as a FactorPoly, then the tensor combination.
      std::vector<FactorPoly> parts(nf);
      for (int f = 0; f < nf; ++f)
        parts[f] = adjoint_factor_word(*preset_->factor(f), w.parts[f]);
      NCPoly piece = NCPoly::monomial(preset_, Word(nf), c.star());
      for (int f = 0; f < nf; ++f) {
        NCPoly next(preset_);
        for (const auto& [pw, pc] : piece.terms_)
          for (const auto& [fw2, fc] : parts[f]) {
            Word nw = pw;
            nw.parts[f] = fw2;
            next.add_term(nw, pc * fc);
          }
        piece = std::move(next);
      }
      for (const auto& [pw, pc] : piece.terms_) out.add_term(pw, pc);
    }
    return out;
  }

  static FactorPoly adjoint_factor_word(const AlgebraPreset& A, const FactorWord& w) {
    FactorPoly acc;
    acc.emplace(FactorWord{}, Scalar::one());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const FactorPoly& img = A.involution[(unsigned char)*it];
      FactorPoly next;
      for (const auto& [aw, ac] : acc)
        for (const auto& [iw, ic] : img) fp_add(next, aw + iw, ac * ic);
      acc = std::move(next);
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += "  +  ";
      s += "(" + c.str() + ")";
      for (size_t f = 0; f < w.parts.size(); ++f)
        for (char ch : w.parts[f]) {
          s += " ";
          if (w.parts.size() > 1) s += std::to_string(f) + ":";
          s += preset_->factor(int(f))->letters[(unsigned char)ch].code;
        }
    }
    return s;
  }

 private:
  static void check_match(const NCPoly& a, const NCPoly& b) {
    if (a.preset_ != b.preset_) throw std::invalid_argument("NCPoly: preset mismatch");
  }

  const AlgebraPreset* preset_;
  std::map<Word, Scalar> terms_;
};

}  // namespace qmb
