#pragma once

#include <vector>

#include "catkit/serialize.hpp"

namespace catkit::braid {

// Braid words on n strands. Letter +i is the positive crossing s_i (strand i
// passes over strand i+1), -i is its inverse. A word is read as a composite,
// so in [g1, g2, ..., gk] the last letter gk acts first (sits at the bottom of
// the picture).

struct BraidWord {
  int strands = 1;
  std::vector<int> word;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Throws DomainError unless strands >= 1 and every letter satisfies 0 < |g| < strands.
void validate(const BraidWord& b);

/// A bijection of {1..n}: images[i-1] is the final position of the strand that
/// starts at position i.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images.at(i - 1); }
  bool is_bijection() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Function composition: (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// Cancels adjacent pairs s_i s_i^-1 until none remain.
std::vector<int> free_reduce(const std::vector<int>& word);

/// a . b (b first), with free reduction. Throws DimensionError on a strand mismatch.
BraidWord braid_compose(const BraidWord& a, const BraidWord& b);
/// Side-by-side: b's letters shifted by a.strands.
BraidWord braid_tensor(const BraidWord& a, const BraidWord& b);
BraidWord braid_inverse(const BraidWord& b);

/// Positive braid on m+n strands carrying the last n strands over the first m.
BraidWord braiding_gamma(int m, int n);

Permutation underlying_perm(const BraidWord& b);
int writhe(const BraidWord& b);

/// c . b . c^-1 (free reduced).
BraidWord conjugate(const BraidWord& b, const BraidWord& c);
/// b on strands+1 strands followed by s_n^sign, sign = +1 or -1.
BraidWord stabilize(const BraidWord& b, int sign);

// {"strands": n, "word": [...]}
Json to_json(const BraidWord& b);
BraidWord braid_from_json(const Json& j);

}  // namespace catkit::braid
