#pragma once

// JSON serialization of symbolic polynomials.  A polynomial is a list of
// {word, coeff} entries; a coefficient is a list of exact monomials
// [num, den, e_q, e_u1, e_u2].  Tensor-word letters carry their factor
// index as a "f:" prefix.

#include <string>

#include "json.hpp"
#include "qmb/ncpoly.hpp"

namespace qmb {

inline nlohmann::ordered_json scalar_to_json(const Scalar& s) {
  nlohmann::ordered_json monos = nlohmann::ordered_json::array();
  for (const auto& [e, r] : s.terms())
    monos.push_back({r.num, r.den, e.q, e.u1, e.u2});
  return nlohmann::ordered_json{{"monomials", monos}};
}

inline Scalar scalar_from_json(const nlohmann::json& j) {
  Scalar s = Scalar::zero();
  for (const auto& m : j.at("monomials")) {
    if (m.size() != 5) throw std::invalid_argument("scalar_from_json: monomial needs 5 entries");
    s += Scalar::of(Rational(m[0].get<long long>(), m[1].get<long long>()),
                    m[2].get<int>(), m[3].get<int>(), m[4].get<int>());
  }
  return s;
}

inline nlohmann::ordered_json ncpoly_to_json(const NCPoly& p) {
  const AlgebraPreset* A = p.preset();
  const bool tensor = A->is_tensor();
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [w, c] : p.terms()) {
    nlohmann::ordered_json letters = nlohmann::ordered_json::array();
    for (size_t f = 0; f < w.parts.size(); ++f)
      for (char ch : w.parts[f]) {
        const std::string code = A->factor(int(f))->letters[(unsigned char)ch].code;
        letters.push_back(tensor ? std::to_string(f) + ":" + code : code);
      }
    out.push_back({{"word", letters}, {"coeff", scalar_to_json(c)}});
  }
  return out;
}

inline NCPoly ncpoly_from_json(const nlohmann::json& j, const AlgebraPreset* A) {
  NCPoly p(A);
  for (const auto& term : j) {
    Word w(A->factor_count());
    for (const auto& lj : term.at("word")) {
      std::string code = lj.get<std::string>();
      int f = 0;
      if (A->is_tensor()) {
        const auto colon = code.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("ncpoly_from_json: tensor letter needs factor prefix");
        f = std::stoi(code.substr(0, colon));
        code = code.substr(colon + 1);
        if (f < 0 || f >= A->factor_count())
          throw std::invalid_argument("ncpoly_from_json: factor index out of range");
      }
      w.parts[f] += char(A->factor(f)->letter_id(code));
    }
    p.add_term(w, scalar_from_json(term.at("coeff")));
  }
  return p;
}

}  // namespace qmb
