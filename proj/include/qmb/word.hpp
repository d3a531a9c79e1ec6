#pragma once

// Words over a generator alphabet.  A letter is one byte (its index in
// the preset's ordered alphabet), a single-factor word is a byte string,
// and a word of a tensor-product preset is one byte string per factor.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace qmb {

using Letter = unsigned char;
using FactorWord = std::string;  // bytes are letter ids

struct Word {
  std::vector<FactorWord> parts;

  Word() = default;
  explicit Word(int factor_count) : parts(factor_count) {}
  static Word single(FactorWord w) {
    Word out(1);
    out.parts[0] = std::move(w);
    return out;
  }

  int degree() const {
    int d = 0;
    for (const auto& p : parts) d += int(p.size());
    return d;
  }
  bool empty() const { return degree() == 0; }

  friend bool operator==(const Word& a, const Word& b) { return a.parts == b.parts; }

  // Degree first, then factor-wise lexicographic comparison; letter ids are
  // assigned in ascending alphabet order, so byte order is the letter order.
  friend bool operator<(const Word& a, const Word& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.parts < b.parts;
  }

  Word concat(const Word& o) const {
    Word out = *this;
    for (size_t f = 0; f < parts.size(); ++f) out.parts[f] += o.parts[f];
    return out;
  }
};

// Degree-lex order on single-factor words; the rewrite systems strictly
// decrease it, which is the termination witness.
inline bool deg_lex_less(const FactorWord& a, const FactorWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace qmb
