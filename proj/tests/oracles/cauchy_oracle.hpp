#pragma once

// Cauchy product of class functions evaluated literally: for a permutation
// sigma of each cycle type, sum f(sigma|S) g(sigma|S^c) over the subsets S of
// {0..n-1} with sigma(S) = S and |S| = deg f.

#include <algorithm>
#include <functional>
#include <vector>

#include "catkit/species.hpp"

namespace catkit::oracle {

namespace detail {
inline std::vector<int> cycle_lengths_on(const std::vector<int>& sigma, unsigned mask) {
  std::vector<int> lengths;
  std::vector<bool> done(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!((mask >> i) & 1U) || done[i]) continue;
    int len = 0;
    for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(sigma[j])) {
      done[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}
}  // namespace detail

inline species::ClassFunction cauchy_by_invariant_subsets(const species::ClassFunction& f,
                                                          const species::ClassFunction& g) {
  const int a = f.degree(), n = f.degree() + g.degree();
  auto out = species::ClassFunction::zero(n);
  for (const auto& [lambda, unused] : out.values()) {
    (void)unused;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    int pos = 0;
    for (int part : lambda.parts) {
      for (int i = 0; i < part; ++i) sigma[static_cast<std::size_t>(pos + i)] = pos + (i + 1) % part;
      pos += part;
    }
    Rational sum;
    for (unsigned s = 0; s < (1U << n); ++s) {
      if (__builtin_popcount(s) != a) continue;
      bool invariant = true;
      for (int i = 0; i < n && invariant; ++i)
        if (((s >> i) & 1U) && !((s >> sigma[static_cast<std::size_t>(i)]) & 1U)) invariant = false;
      if (!invariant) continue;
      const unsigned rest = ((1U << n) - 1) & ~s;
      sum += f.at(species::Partition(detail::cycle_lengths_on(sigma, s))) *
             g.at(species::Partition(detail::cycle_lengths_on(sigma, rest)));
    }
    out.set(lambda, sum);
  }
  return out;
}

}  // namespace catkit::oracle
