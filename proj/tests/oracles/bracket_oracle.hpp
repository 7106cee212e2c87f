#pragma once

// State sum for the Jones polynomial of a braid closure, worked directly on the
// braid picture: each letter +-i is resolved either as the identity on strands
// i, i+1 or as a cap over a cup, with
//   s_i     = A id + A^-1 e_i
//   s_i^-1  = A^-1 id + A e_i
// and the closed picture's loops are counted with a union-find. Shares no code
// with the planar-diagram bracket in the library.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "catkit/laurent.hpp"

namespace catkit::oracle {

namespace detail {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};
}  // namespace detail

/// Bracket of the closure in the variable A, normalized so one circle is 1.
inline LaurentPoly braid_closure_bracket(int strands, const std::vector<int>& word) {
  const int k = static_cast<int>(word.size());
  if (k > 20) throw std::invalid_argument("braid too long for the state sum");
  const int n = strands;
  const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  // Point (level, position); level 0 is the bottom, level k the top. Letter
  // word[k-1-j] sits between levels j and j+1 (the last letter acts first).
  auto point = [n](int level, int pos) { return level * n + pos; };
  LaurentPoly total;
  for (long state = 0; state < (1L << k); ++state) {
    detail::UnionFind uf((k + 1) * n);
    int exponent = 0;
    for (int j = 0; j < k; ++j) {
      const int letter = word[static_cast<std::size_t>(k - 1 - j)];
      const int i = (letter > 0 ? letter : -letter) - 1;
      const int sign = letter > 0 ? 1 : -1;
      const bool cupcap = (state >> j) & 1L;
      exponent += cupcap ? -sign : sign;
      for (int p = 0; p < n; ++p) {
        if (cupcap && (p == i || p == i + 1)) continue;
        uf.unite(point(j, p), point(j + 1, p));
      }
      if (cupcap) {
        uf.unite(point(j, i), point(j, i + 1));
        uf.unite(point(j + 1, i), point(j + 1, i + 1));
      }
    }
    for (int p = 0; p < n; ++p) uf.unite(point(k, p), point(0, p));
    int loops = 0;
    for (int x = 0; x < (k + 1) * n; ++x)
      if (uf.find(x) == x) ++loops;
    total += LaurentPoly::v(exponent) * delta.pow(loops - 1);
  }
  return total;
}

/// (-A^3)^-w <closure>, then A^2 -> v.
inline LaurentPoly braid_closure_jones(int strands, const std::vector<int>& word) {
  int w = 0;
  for (int g : word) w += g > 0 ? 1 : -1;
  const LaurentPoly factor = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return (factor * braid_closure_bracket(strands, word)).compress_exponents(2);
}

}  // namespace catkit::oracle
