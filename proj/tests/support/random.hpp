#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "catkit/laurent.hpp"
#include "catkit/rational.hpp"
#include "catkit/sparse_matrix.hpp"

namespace catkit::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Up to `terms` monomials with exponents in [-span, span] and small coefficients.
inline LaurentPoly random_laurent(Rng& rng, int terms = 3, int span = 3) {
  LaurentPoly p;
  const int n = uniform(rng, 0, terms);
  for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(uniform(rng, -4, 4), uniform(rng, -span, span));
  return p;
}

inline Rational random_rational(Rng& rng) {
  return Rational(BigInt(uniform(rng, -6, 6)), BigInt(uniform(rng, 1, 4)));
}

inline SparseMat random_sparse(Rng& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  SparseMat m = SparseMat::zero(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng, density)) m.set(i, j, random_laurent(rng));
  return m;
}

inline QMatrix random_qmatrix(Rng& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  QMatrix m = QMatrix::zero(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng, density)) m.set(i, j, random_rational(rng));
  return m;
}

/// A random braid word with letters in +-[1, strands-1].
inline std::vector<int> random_word(Rng& rng, int strands, int length) {
  std::vector<int> w;
  if (strands < 2) return w;
  for (int i = 0; i < length; ++i) {
    const int g = uniform(rng, 1, strands - 1);
    w.push_back(coin(rng) ? g : -g);
  }
  return w;
}

}  // namespace catkit::testing
