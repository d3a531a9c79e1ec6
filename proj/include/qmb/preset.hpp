#pragma once

// Algebra presets: alphabet, involution table and oriented rewrite rules
// for each supported *-algebra, plus tensor products of them.
//
//   polC(n)  quantum complex space, generators z_1..z_n and stars
//   csu2     quantum SU(2), generators t_11,t_12,t_21,t_22 (stars are
//            eliminated eagerly through the involution table)
//   polMat2  quantum 2x2 matrix space, generators z_a^alpha and stars
//
// Every rule rewrites a word of length <= 2 into a polynomial that is
// strictly smaller in the degree-lex order induced by the declared
// alphabet order; that order is the termination witness.  Letter ids are
// assigned in ascending alphabet order.

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmb/scalar.hpp"
#include "qmb/word.hpp"

namespace qmb {

using FactorPoly = std::map<FactorWord, Scalar>;

inline void fp_add(FactorPoly& p, const FactorWord& w, const Scalar& c) {
  auto it = p.find(w);
  if (it == p.end()) {
    if (!c.is_zero()) p.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

struct LetterInfo {
  std::string code;
  bool starred = false;
  Letter partner = 0;  // the letter this one is the star of (and vice versa)
};

struct RewriteRule {
  FactorWord lhs;  // length 1 (star elimination) or 2
  FactorPoly rhs;
  std::string label;
  bool defining = true;  // appears in the preset's relation list
};

struct AlgebraPreset {
  std::string name;
  std::vector<LetterInfo> letters;
  std::vector<RewriteRule> rules;
  std::vector<FactorPoly> involution;           // letter id -> image of its star
  std::vector<const AlgebraPreset*> factors;    // nonempty for tensor presets

  bool is_tensor() const { return !factors.empty(); }
  int factor_count() const { return is_tensor() ? int(factors.size()) : 1; }
  const AlgebraPreset* factor(int f) const { return is_tensor() ? factors[f] : this; }

  Letter letter_id(const std::string& code) const {
    for (size_t i = 0; i < letters.size(); ++i)
      if (letters[i].code == code) return Letter(i);
    throw std::invalid_argument(name + ": unknown generator '" + code + "'");
  }
};

namespace detail {

inline FactorWord fw() { return {}; }
inline FactorWord fw(int a) { return FactorWord(1, char(a)); }
inline FactorWord fw(int a, int b) {
  FactorWord w(2, char(0));
  w[0] = char(a);
  w[1] = char(b);
  return w;
}

inline FactorPoly fp(std::initializer_list<std::pair<FactorWord, Scalar>> items) {
  FactorPoly p;
  for (const auto& [w, c] : items) fp_add(p, w, c);
  return p;
}

inline std::unique_ptr<AlgebraPreset> make_polC(int n) {
  using detail::fw;
  if (n < 1) throw std::invalid_argument("polC(n): need n >= 1");
  auto A = std::make_unique<AlgebraPreset>();
  A->name = "polC(" + std::to_string(n) + ")";
  // Alphabet order: z_n < ... < z_1 < z_1* < ... < z_n*.
  auto zid = [n](int j) { return n - j; };          // id of z_j
  auto sid = [n](int j) { return n - 1 + j; };      // id of z_j*
  A->letters.resize(2 * n);
  for (int j = 1; j <= n; ++j) {
    A->letters[zid(j)] = {"z" + std::to_string(j), false, Letter(sid(j))};
    A->letters[sid(j)] = {"z" + std::to_string(j) + "*", true, Letter(zid(j))};
  }
  A->involution.resize(2 * n);
  for (size_t i = 0; i < A->letters.size(); ++i)
    A->involution[i] = fp({{fw(int(A->letters[i].partner)), Scalar::one()}});

  const Scalar q = Scalar::q_pow(1);
  const Scalar q2 = Scalar::q_pow(2);
  const Scalar c1 = Scalar::one() - q2;  // 1 - q^2
  auto code = [&](int id) { return A->letters[id].code; };
  auto lab = [&](const FactorWord& lhs) {
    std::string s;
    for (char c : lhs) s += (s.empty() ? "" : " ") + code((unsigned char)c);
    return s;
  };
  auto rule = [&](FactorWord lhs, FactorPoly rhs) {
    A->rules.push_back({lhs, std::move(rhs), lab(lhs), true});
  };

  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      rule(fw(zid(j), zid(k)), fp({{fw(zid(k), zid(j)), q}}));       // z_j z_k -> q z_k z_j
      rule(fw(sid(k), sid(j)), fp({{fw(sid(j), sid(k)), q}}));       // adjoint pair
    }
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      if (k != j)
        rule(fw(sid(j), zid(k)), fp({{fw(zid(k), sid(j)), q}}));     // z_j* z_k -> q z_k z_j*
    }
  for (int j = 1; j <= n; ++j) {
    FactorPoly rhs = fp({{fw(zid(j), sid(j)), q2}, {fw(), c1}});
    for (int k = j + 1; k <= n; ++k) fp_add(rhs, fw(zid(k), sid(k)), -c1);
    rule(fw(sid(j), zid(j)), std::move(rhs));                        // z_j* z_j -> ...
  }
  return A;
}

inline std::unique_ptr<AlgebraPreset> make_csu2() {
  using detail::fw;
  auto A = std::make_unique<AlgebraPreset>();
  A->name = "csu2";
  // Alphabet order: t12 < t21 < t11 < t22, starred letters above them.
  A->letters = {
      {"t12", false, 4}, {"t21", false, 5}, {"t11", false, 6}, {"t22", false, 7},
      {"t12*", true, 0}, {"t21*", true, 1}, {"t11*", true, 2}, {"t22*", true, 3},
  };
  const Scalar one = Scalar::one();
  const Scalar q = Scalar::q_pow(1);
  const Scalar qi = Scalar::q_pow(-1);
  // Involution table: t11* = t22, t12* = -q t21 (and consequences).
  A->involution.resize(8);
  A->involution[0] = fp({{fw(1), -q}});   // (t12)* = -q t21
  A->involution[1] = fp({{fw(0), -qi}});  // (t21)* = -q^{-1} t12
  A->involution[2] = fp({{fw(3), one}});  // (t11)* = t22
  A->involution[3] = fp({{fw(2), one}});  // (t22)* = t11
  for (int i = 0; i < 4; ++i) A->involution[4 + i] = fp({{fw(i), one}});

  // Star elimination is definitional, not a relation.
  auto elim = [&](int sid, FactorPoly rhs) {
    A->rules.push_back({fw(sid), std::move(rhs), A->letters[sid].code, false});
  };
  elim(4, fp({{fw(1), -q}}));
  elim(5, fp({{fw(0), -qi}}));
  elim(6, fp({{fw(3), one}}));
  elim(7, fp({{fw(2), one}}));

  auto rule = [&](const char* label, FactorWord lhs, FactorPoly rhs) {
    A->rules.push_back({lhs, std::move(rhs), label, true});
  };
  rule("t11 t21", fw(2, 1), fp({{fw(1, 2), q}}));
  rule("t11 t12", fw(2, 0), fp({{fw(0, 2), q}}));
  rule("t21 t12", fw(1, 0), fp({{fw(0, 1), one}}));
  rule("t22 t21", fw(3, 1), fp({{fw(1, 3), qi}}));
  rule("t22 t12", fw(3, 0), fp({{fw(0, 3), qi}}));
  rule("t11 t22", fw(2, 3), fp({{fw(), one}, {fw(0, 1), q}}));
  rule("t22 t11", fw(3, 2), fp({{fw(), one}, {fw(0, 1), qi}}));
  return A;
}

inline std::unique_ptr<AlgebraPreset> make_polMat2() {
  using detail::fw;
  auto A = std::make_unique<AlgebraPreset>();
  A->name = "polMat2";
  // Alphabet order: z2^2 < z1^2 < z2^1 < z1^1 < (z1^1)* < (z2^1)* < (z1^2)* < (z2^2)*.
  A->letters = {
      {"z2^2", false, 7}, {"z1^2", false, 6}, {"z2^1", false, 5}, {"z1^1", false, 4},
      {"z1^1*", true, 3}, {"z2^1*", true, 2}, {"z1^2*", true, 1}, {"z2^2*", true, 0},
  };
  A->involution.resize(8);
  for (int i = 0; i < 8; ++i)
    A->involution[i] = fp({{fw(int(A->letters[i].partner)), Scalar::one()}});

  const Scalar one = Scalar::one();
  const Scalar q = Scalar::q_pow(1);
  const Scalar q2 = Scalar::q_pow(2);
  const Scalar c1 = Scalar::one() - q2;                  // 1 - q^2
  const Scalar qmqi = q - Scalar::q_pow(-1);             // q - q^{-1}
  const Scalar qm2c1c1 = Scalar::q_pow(-2) * c1 * c1;    // q^{-2}(1-q^2)^2

  auto rule = [&](const char* label, FactorWord lhs, FactorPoly rhs) {
    A->rules.push_back({lhs, std::move(rhs), label, true});
  };

  // Relations among the unstarred generators.
  rule("ff1.1", fw(3, 2), fp({{fw(2, 3), q}}));
  rule("ff1.2", fw(2, 1), fp({{fw(1, 2), one}}));
  rule("ff1.3", fw(3, 1), fp({{fw(1, 3), q}}));
  rule("ff1.4", fw(2, 0), fp({{fw(0, 2), q}}));
  rule("ff1.5", fw(3, 0), fp({{fw(0, 3), one}, {fw(1, 2), qmqi}}));
  rule("ff1.6", fw(1, 0), fp({{fw(0, 1), q}}));
  // Their adjoints, relations among the starred generators.
  rule("ff1.1*", fw(5, 4), fp({{fw(4, 5), q}}));
  rule("ff1.2*", fw(6, 5), fp({{fw(5, 6), one}}));
  rule("ff1.3*", fw(6, 4), fp({{fw(4, 6), q}}));
  rule("ff1.4*", fw(7, 5), fp({{fw(5, 7), q}}));
  rule("ff1.5*", fw(7, 4), fp({{fw(4, 7), one}, {fw(5, 6), qmqi}}));
  rule("ff1.6*", fw(7, 6), fp({{fw(6, 7), q}}));
  // Diagonal mixed relations.
  rule("ff2.1", fw(4, 3),
       fp({{fw(3, 4), q2}, {fw(2, 5), -c1}, {fw(1, 6), -c1}, {fw(0, 7), qm2c1c1}, {fw(), c1}}));
  rule("ff2.2", fw(5, 2), fp({{fw(2, 5), q2}, {fw(0, 7), -c1}, {fw(), c1}}));
  rule("ff2.3", fw(6, 1), fp({{fw(1, 6), q2}, {fw(0, 7), -c1}, {fw(), c1}}));
  rule("ff2.4", fw(7, 0), fp({{fw(0, 7), q2}, {fw(), c1}}));
  // Off-diagonal mixed relations.
  rule("ff3.1", fw(4, 2), fp({{fw(2, 4), q}, {fw(0, 6), qmqi}}));
  rule("ff3.2", fw(7, 2), fp({{fw(2, 7), q}}));
  rule("ff3.3", fw(4, 1), fp({{fw(1, 4), q}, {fw(0, 5), qmqi}}));
  rule("ff3.4", fw(7, 1), fp({{fw(1, 7), q}}));
  rule("ff3.5", fw(4, 0), fp({{fw(0, 4), one}}));
  rule("ff3.6", fw(5, 1), fp({{fw(1, 5), one}}));
  // Their adjoints, covering the remaining starred/unstarred pairs.
  rule("ff3.1*", fw(5, 3), fp({{fw(3, 5), q}, {fw(1, 7), qmqi}}));
  rule("ff3.2*", fw(5, 0), fp({{fw(0, 5), q}}));
  rule("ff3.3*", fw(6, 3), fp({{fw(3, 6), q}, {fw(2, 7), qmqi}}));
  rule("ff3.4*", fw(6, 0), fp({{fw(0, 6), q}}));
  rule("ff3.5*", fw(7, 3), fp({{fw(3, 7), one}}));
  rule("ff3.6*", fw(6, 2), fp({{fw(2, 6), one}}));
  return A;
}

// Free *-algebra on the Fock factor symbols; no rewrite rules.  Used for
// expressions in the shift/weight operators that feed the boundary
// character.
inline std::unique_ptr<AlgebraPreset> make_scd() {
  using detail::fw;
  auto A = std::make_unique<AlgebraPreset>();
  A->name = "scd";
  A->letters = {
      {"S", false, 3}, {"C", false, 4}, {"d", false, 5},
      {"S*", true, 0}, {"C*", true, 1}, {"d*", true, 2},
  };
  A->involution.resize(6);
  for (int i = 0; i < 6; ++i)
    A->involution[i] = fp({{fw(int(A->letters[i].partner)), Scalar::one()}});
  return A;
}

}  // namespace detail

// Preset catalog.  Instances are cached, so pointer identity doubles as
// preset identity.
inline const AlgebraPreset* build_preset(const std::string& name) {
  static std::map<std::string, std::unique_ptr<AlgebraPreset>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second.get();

  std::unique_ptr<AlgebraPreset> A;
  if (name.rfind("polC(", 0) == 0 && name.back() == ')') {
    const int n = std::stoi(name.substr(5, name.size() - 6));
    A = detail::make_polC(n);
  } else if (name == "csu2") {
    A = detail::make_csu2();
  } else if (name == "polMat2") {
    A = detail::make_polMat2();
  } else if (name == "scd") {
    A = detail::make_scd();
  } else if (name.rfind("tensor(", 0) == 0 && name.back() == ')') {
    A = std::make_unique<AlgebraPreset>();
    A->name = name;
    std::stringstream ss(name.substr(7, name.size() - 8));
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) throw std::invalid_argument("build_preset: bad tensor spec " + name);
      A->factors.push_back(build_preset(part));
    }
    if (A->factors.size() < 2)
      throw std::invalid_argument("build_preset: tensor needs >= 2 factors");
  } else {
    throw std::invalid_argument("build_preset: unknown preset '" + name + "'");
  }
  auto* raw = A.get();
  cache.emplace(name, std::move(A));
  return raw;
}

// Generator id helpers for the two concrete matrix algebras.
inline Letter polmat2_id(int lower, int upper) {
  if (lower < 1 || lower > 2 || upper < 1 || upper > 2)
    throw std::invalid_argument("polmat2_id: indices must be 1 or 2");
  return Letter(2 * (2 - upper) + (2 - lower));
}
inline Letter csu2_id(int i, int j) {
  if (i == 1 && j == 1) return 2;
  if (i == 1 && j == 2) return 0;
  if (i == 2 && j == 1) return 1;
  if (i == 2 && j == 2) return 3;
  throw std::invalid_argument("csu2_id: indices must be 1 or 2");
}

}  // namespace qmb
