#pragma once

// Subspace counts of F_q^n found by growing spans one vector at a time as
// explicit sets of vectors, with hand-written arithmetic for q = 2, 3, 4, 5, and the
// q-binomial from its product formula.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace catkit::oracle {

class SmallField {
 public:
  explicit SmallField(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 4 && q != 5) throw std::invalid_argument("unsupported q");
  }
  int q() const { return q_; }
  int add(int a, int b) const { return q_ == 4 ? (a ^ b) : (a + b) % q_; }
  int mul(int a, int b) const {
    if (q_ != 4) return (a * b) % q_;
    // F_4 = {0, 1, x, x+1} coded 0..3 with x^2 = x + 1.
    static const int table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return table[a][b];
  }

 private:
  int q_;
};

/// Number of k-dimensional subspaces of F_q^n, for n with q^n <= 1024.
inline std::uint64_t count_subspaces(int n, int k, int q) {
  const SmallField f(q);
  int size = 1;
  for (int i = 0; i < n; ++i) size *= q;
  auto decode = [&](int code) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = code % q;
      code /= q;
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int c = 0;
    for (int x : v) c = c * q + x;
    return c;
  };
  // S + F v, for S a subspace given by its membership vector.
  auto extend = [&](const std::vector<bool>& s, int v) {
    std::vector<bool> out(static_cast<std::size_t>(size), false);
    const auto vv = decode(v);
    for (int a = 0; a < size; ++a) {
      if (!s[static_cast<std::size_t>(a)]) continue;
      const auto va = decode(a);
      for (int c = 0; c < q; ++c) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          w[static_cast<std::size_t>(i)] = f.add(va[static_cast<std::size_t>(i)], f.mul(c, vv[static_cast<std::size_t>(i)]));
        out[static_cast<std::size_t>(encode(w))] = true;
      }
    }
    return out;
  };
  int target = 1;
  for (int i = 0; i < k; ++i) target *= q;
  std::vector<bool> zero(static_cast<std::size_t>(size), false);
  zero[0] = true;
  std::set<std::vector<bool>> layer{zero};
  for (int d = 0; d < k; ++d) {
    std::set<std::vector<bool>> next;
    for (const auto& s : layer)
      for (int v = 1; v < size; ++v) {
        if (s[static_cast<std::size_t>(v)]) continue;
        next.insert(extend(s, v));
      }
    layer = std::move(next);
  }
  std::uint64_t count = 0;
  for (const auto& s : layer) {
    int members = 0;
    for (bool b : s) members += b ? 1 : 0;
    if (members == target) ++count;
  }
  return count;
}

/// prod_(i<k) (q^(n-i) - 1) / (q^(i+1) - 1).
inline std::uint64_t q_binomial(int n, int k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  std::uint64_t num = 1, den = 1;
  auto pw = [q](int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  };
  for (int i = 0; i < k; ++i) {
    num *= pw(n - i) - 1;
    den *= pw(i + 1) - 1;
  }
  return num / den;
}

}  // namespace catkit::oracle
