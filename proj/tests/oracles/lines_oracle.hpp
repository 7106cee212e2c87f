#pragma once

// Number of lines of F_q^n fixed by a matrix, for prime q: nonzero vectors x
// with sigma x a multiple of x, divided by q - 1.

#include <vector>

namespace catkit::oracle {

inline int invariant_lines(const std::vector<std::vector<int>>& sigma, int q) {
  const int n = static_cast<int>(sigma.size());
  int total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  int fixed = 0;
  for (int code = 1; code < total; ++code) {
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int i = n - 1, c = code; i >= 0; --i, c /= q) x[static_cast<std::size_t>(i)] = c % q;
    std::vector<int> y(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        y[static_cast<std::size_t>(i)] = (y[static_cast<std::size_t>(i)] + sigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)]) % q;
    bool proportional = false;
    for (int c = 0; c < q && !proportional; ++c) {
      bool same = true;
      for (int i = 0; i < n; ++i) same = same && y[static_cast<std::size_t>(i)] == (c * x[static_cast<std::size_t>(i)]) % q;
      proportional = same;
    }
    if (proportional) ++fixed;
  }
  return fixed / (q - 1);
}

}  // namespace catkit::oracle
