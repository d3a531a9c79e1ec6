#pragma once

// Reduction to normal form.  The deterministic strategy rewrites the
// leftmost reducible position, trying rules in declared order; a seeded
// randomized strategy is used by the confluence probe to check that the
// result does not depend on the application order.

#include <optional>
#include <random>
#include <vector>

#include "qmb/ncpoly.hpp"
#include "qmb/preset.hpp"

namespace qmb {

namespace detail {

// Index of the first rule matching word w at position pos, or -1.
inline int match_at(const AlgebraPreset& A, const FactorWord& w, size_t pos) {
  for (size_t r = 0; r < A.rules.size(); ++r) {
    const FactorWord& lhs = A.rules[r].lhs;
    if (pos + lhs.size() > w.size()) continue;
    if (w.compare(pos, lhs.size(), lhs) == 0) return int(r);
  }
  return -1;
}

inline void apply_rule(FactorPoly& out, const FactorWord& w, size_t pos, const RewriteRule& rule,
                       const Scalar& coeff) {
  const FactorWord prefix = w.substr(0, pos);
  const FactorWord suffix = w.substr(pos + rule.lhs.size());
  for (const auto& [rw, rc] : rule.rhs) fp_add(out, prefix + rw + suffix, coeff * rc);
}

}  // namespace detail

// Normal form of a single-factor word: fully reduce, merging parallel
// branches by word so supports stay small.
inline FactorPoly reduce_factor_word(const AlgebraPreset& A, const FactorWord& w0) {
  FactorPoly work, done;
  fp_add(work, w0, Scalar::one());
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const FactorWord& w = node.key();
    const Scalar& c = node.mapped();
    bool reduced = false;
    for (size_t pos = 0; pos < w.size(); ++pos) {
      const int r = detail::match_at(A, w, pos);
      if (r >= 0) {
        detail::apply_rule(work, w, pos, A.rules[r], c);
        reduced = true;
        break;
      }
    }
    if (!reduced) fp_add(done, w, c);
  }
  return done;
}

inline NCPoly normal_form(const NCPoly& p) {
  const AlgebraPreset* A = p.preset();
  const int nf = A->factor_count();
  NCPoly out(A);
  for (const auto& [w, c] : p.terms()) {
    NCPoly piece = NCPoly::monomial(A, Word(nf), c);
    for (int f = 0; f < nf; ++f) {
      FactorPoly red = reduce_factor_word(*A->factor(f), w.parts[f]);
      NCPoly next(A);
      for (const auto& [pw, pc] : piece.terms())
        for (const auto& [fw2, fc] : red) {
          Word nw = pw;
          nw.parts[f] = fw2;
          next.add_term(nw, pc * fc);
        }
      piece = std::move(next);
    }
    for (const auto& [pw, pc] : piece.terms()) out.add_term(pw, pc);
  }
  return out;
}

inline bool is_zero(const NCPoly& p) { return normal_form(p).empty(); }

// Oriented relations of a single-factor preset as lhs - rhs polynomials.
struct Relation {
  std::string label;
  NCPoly poly;  // lhs - rhs; zero in the quotient algebra
};

inline std::vector<Relation> relation_polys(const AlgebraPreset* A) {
  if (A->is_tensor()) throw std::invalid_argument("relation_polys: tensor preset");
  std::vector<Relation> out;
  for (const auto& rule : A->rules) {
    if (!rule.defining) continue;
    NCPoly p = NCPoly::monomial(A, Word::single(rule.lhs), Scalar::one());
    for (const auto& [rw, rc] : rule.rhs) p.add_term(Word::single(rw), -rc);
    out.push_back({rule.label, std::move(p)});
  }
  return out;
}

// Randomized reduction of a single-factor word: at every step pick a
// uniformly random redex (position and applicable rule) of a random
// pending word.  Termination follows from the same degree-lex decrease
// as the deterministic strategy.
inline FactorPoly reduce_factor_word_random(const AlgebraPreset& A, const FactorWord& w0,
                                            std::mt19937_64& rng) {
  FactorPoly work, done;
  fp_add(work, w0, Scalar::one());
  while (!work.empty()) {
    auto it = work.begin();
    std::advance(it, std::uniform_int_distribution<size_t>(0, work.size() - 1)(rng));
    auto node = work.extract(it);
    const FactorWord& w = node.key();
    const Scalar& c = node.mapped();
    std::vector<std::pair<size_t, int>> redexes;
    for (size_t pos = 0; pos < w.size(); ++pos)
      for (size_t r = 0; r < A.rules.size(); ++r) {
        const FactorWord& lhs = A.rules[r].lhs;
        if (pos + lhs.size() <= w.size() && w.compare(pos, lhs.size(), lhs) == 0)
          redexes.push_back({pos, int(r)});
      }
    if (redexes.empty()) {
      fp_add(done, w, c);
      continue;
    }
    const auto& [pos, r] =
        redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(rng)];
    detail::apply_rule(work, w, pos, A.rules[r], c);
  }
  return done;
}

inline NCPoly normal_form_random(const NCPoly& p, std::mt19937_64& rng) {
  const AlgebraPreset* A = p.preset();
  const int nf = A->factor_count();
  NCPoly out(A);
  for (const auto& [w, c] : p.terms()) {
    NCPoly piece = NCPoly::monomial(A, Word(nf), c);
    for (int f = 0; f < nf; ++f) {
      FactorPoly red = reduce_factor_word_random(*A->factor(f), w.parts[f], rng);
      NCPoly next(A);
      for (const auto& [pw, pc] : piece.terms())
        for (const auto& [fw2, fc] : red) {
          Word nw = pw;
          nw.parts[f] = fw2;
          next.add_term(nw, pc * fc);
        }
      piece = std::move(next);
    }
    for (const auto& [pw, pc] : piece.terms()) out.add_term(pw, pc);
  }
  return out;
}

struct ConfluenceReport {
  int samples = 0;
  int failures = 0;
  bool pass() const { return failures == 0; }
};

// Draw random triples (a, b, c) of words, reduce the product in the two
// association orders with intermediate normal forms, and additionally
// reduce with the randomized strategy; all results must coincide.
inline ConfluenceReport confluence_probe(const AlgebraPreset* A, int samples, uint64_t seed,
                                         int max_len = 4) {
  std::mt19937_64 rng(seed);
  ConfluenceReport rep;
  rep.samples = samples;
  const int nf = A->factor_count();
  auto random_word = [&]() {
    Word w(nf);
    for (int f = 0; f < nf; ++f) {
      const AlgebraPreset& F = *A->factor(f);
      const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
      for (int i = 0; i < len; ++i)
        w.parts[f] += char(std::uniform_int_distribution<int>(0, int(F.letters.size()) - 1)(rng));
    }
    return w;
  };
  for (int s = 0; s < samples; ++s) {
    const NCPoly a = NCPoly::monomial(A, random_word(), Scalar::one());
    const NCPoly b = NCPoly::monomial(A, random_word(), Scalar::one());
    const NCPoly c = NCPoly::monomial(A, random_word(), Scalar::one());
    const NCPoly left = normal_form(normal_form(a * b) * c);
    const NCPoly right = normal_form(a * normal_form(b * c));
    const NCPoly direct = normal_form(a * b * c);
    const NCPoly randomized = normal_form_random(a * b * c, rng);
    if (!(left == right && left == direct && left == randomized)) ++rep.failures;
  }
  return rep;
}

}  // namespace qmb
