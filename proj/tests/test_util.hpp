#pragma once

#include <random>
#include <vector>

#include "piwb/freealg.hpp"

namespace piwb::testutil {

/// Random polynomial over a fixed small variable set with small integer
/// coefficients; deterministic for a given engine state.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, unsigned max_terms = 4,
                        unsigned max_len = 3) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Poly p;
  unsigned n = nterms(rng);
  for (unsigned t = 0; t < n; ++t) {
    Word w;
    unsigned l = len(rng);
    for (unsigned i = 0; i < l; ++i) w.push_back(vars[pick(rng)]);
    p.add_term(w, Scalar(coeff(rng)));
  }
  return p;
}

/// Random multilinear polynomial in exactly the given variables (every word a
/// permutation of them), with small coefficients.
inline Poly random_multilinear(std::mt19937_64& rng, const std::vector<Var>& vars,
                               unsigned max_terms = 4) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Poly p;
  unsigned n = nterms(rng);
  for (unsigned t = 0; t < n; ++t) {
    Word w(vars);
    std::shuffle(w.begin(), w.end(), rng);
    int c = coeff(rng);
    p.add_term(w, Scalar(c == 0 ? 1 : c));
  }
  return p;
}

/// Random nonzero alternating polynomial in `alt_vars` (antisymmetrization of
/// a random multilinear polynomial, retried until nonzero).
inline Poly random_alternating(std::mt19937_64& rng, const std::vector<Var>& alt_vars) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Poly p = alternator(random_multilinear(rng, alt_vars), alt_vars);
    if (!p.is_zero()) return p;
  }
  throw std::runtime_error("random_alternating: failed to produce a nonzero polynomial");
}

}  // namespace piwb::testutil
