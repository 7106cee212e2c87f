#include "catkit/subspace.hpp"

#include <algorithm>
#include <functional>

#include "catkit/errors.hpp"

namespace catkit::hall {

Subspace Subspace::span(const FiniteField& f, const FqMatrix& rows) {
  Subspace s;
  s.basis_ = rref(f, rows, &s.pivots_);
  return s;
}

Subspace Subspace::zero(int n) {
  Subspace s;
  s.basis_ = FqMatrix(0, n);
  return s;
}

Subspace Subspace::whole(int n) {
  Subspace s;
  s.basis_ = FqMatrix::identity(n);
  for (int i = 0; i < n; ++i) s.pivots_.push_back(i);
  return s;
}

std::vector<int> Subspace::non_pivots() const {
  std::vector<int> out;
  for (int c = 0; c < ambient(); ++c)
    if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) out.push_back(c);
  return out;
}

namespace {

// x minus its projection along the RREF rows, which zeroes the pivot columns.
std::vector<int> reduce(const FiniteField& f, const FqMatrix& basis, const std::vector<int>& pivots,
                        std::vector<int> x) {
  for (int r = 0; r < basis.rows; ++r) {
    const int t = x[pivots[r]];
    if (t == 0) continue;
    for (int j = 0; j < basis.cols; ++j) x[j] = f.sub(x[j], f.mul(t, basis(r, j)));
  }
  return x;
}

}  // namespace

bool Subspace::contains(const FiniteField& f, const std::vector<int>& x) const {
  if (static_cast<int>(x.size()) != ambient()) throw DimensionError("vector length differs from ambient dimension");
  const auto rest = reduce(f, basis_, pivots_, x);
  return std::all_of(rest.begin(), rest.end(), [](int c) { return c == 0; });
}

bool Subspace::invariant_under(const FiniteField& f, const FqMatrix& sigma) const {
  for (int r = 0; r < dim(); ++r)
    if (!contains(f, apply(f, sigma, basis_.row(r)))) return false;
  return true;
}

std::vector<int> Subspace::quotient_coords(const FiniteField& f, const std::vector<int>& x) const {
  const auto rest = reduce(f, basis_, pivots_, x);
  std::vector<int> out;
  for (int c : non_pivots()) out.push_back(rest[c]);
  return out;
}

std::vector<int> Subspace::coords(const FiniteField& f, const std::vector<int>& x) const {
  if (!contains(f, x)) throw DomainError("vector is not in the subspace");
  std::vector<int> out;
  for (int p : pivots_) out.push_back(x[p]);
  return out;
}

bool enumeration_feasible(int n, int q) { return n >= 0 && ((n <= 4 && q <= 3) || n <= 3); }

std::vector<Subspace> enumerate_subspaces(int n, int k, const FiniteField& f) {
  if (k < 0 || k > n) throw DomainError("enumerate_subspaces: need 0 <= k <= n");
  if (!enumeration_feasible(n, f.q()))
    throw CapExceeded("enumerate_subspaces: n = " + std::to_string(n) + " over F_" + std::to_string(f.q()) +
                      " is beyond the enumeration cap");
  std::vector<Subspace> out;
  std::vector<int> pivots;
  // Choose pivot columns, then fill the free slots of each row.
  std::function<void(int, int)> choose = [&](int start, int left) {
    if (left == 0) {
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[r] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      std::vector<int> digits(free.size(), 0);
      while (true) {
        FqMatrix m(k, n);
        for (int r = 0; r < k; ++r) m(r, pivots[r]) = 1;
        for (std::size_t t = 0; t < free.size(); ++t) m(free[t].first, free[t].second) = digits[t];
        out.push_back(Subspace::span(f, m));
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == f.q()) digits[t++] = 0;
        if (t == digits.size()) break;
      }
      return;
    }
    for (int c = start; c <= n - left; ++c) {
      pivots.push_back(c);
      choose(c + 1, left - 1);
      pivots.pop_back();
    }
  };
  choose(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) throw DomainError("gaussian_binomial: need 0 <= k <= n");
  // Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentPoly> next(static_cast<std::size_t>(m + 1));
    for (int j = 0; j <= m; ++j) {
      if (j > 0) next[j] += row[j - 1];
      if (j < m) next[j] += LaurentPoly::q(j) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

BigInt gaussian_binomial_at(int n, int k, int q) {
  const Rational r = gaussian_binomial(n, k).evaluate_q(Rational(q));
  return r.numerator();
}

bool is_direct_sum(const FiniteField& f, const Subspace& u, const Subspace& v) {
  const int n = u.ambient();
  if (v.ambient() != n || u.dim() + v.dim() != n) return false;
  FqMatrix both(n, n);
  for (int r = 0; r < u.dim(); ++r)
    for (int c = 0; c < n; ++c) both(r, c) = u.basis()(r, c);
  for (int r = 0; r < v.dim(); ++r)
    for (int c = 0; c < n; ++c) both(u.dim() + r, c) = v.basis()(r, c);
  return rank(f, both) == n;
}

std::vector<DirectSumPair> direct_sum_pairs(int n, const FiniteField& f, int k) {
  std::vector<DirectSumPair> out;
  for (int a = 0; a <= n; ++a) {
    if (k >= 0 && a != k) continue;
    const auto us = enumerate_subspaces(n, a, f);
    const auto vs = enumerate_subspaces(n, n - a, f);
    for (const auto& u : us) {
      for (const auto& v : vs) {
        if (!is_direct_sum(f, u, v)) continue;
        DirectSumPair p{u, v, FqMatrix(a, a), FqMatrix(n - a, n - a)};
        // r: u_j -> its class in C/V.
        for (int j = 0; j < a; ++j) {
          const auto c = v.quotient_coords(f, u.basis().row(j));
          for (int i = 0; i < a; ++i) p.r(i, j) = c[i];
        }
        // s: class of e_c in C/U -> the V-component of e_c in C = U (+) V.
        FqMatrix stacked(n, n);  // columns: basis of U then basis of V
        for (int j = 0; j < a; ++j)
          for (int i = 0; i < n; ++i) stacked(i, j) = u.basis()(j, i);
        for (int j = 0; j < n - a; ++j)
          for (int i = 0; i < n; ++i) stacked(i, a + j) = v.basis()(j, i);
        const auto nps = u.non_pivots();
        for (int j = 0; j < n - a; ++j) {
          std::vector<int> e(static_cast<std::size_t>(n), 0);
          e[nps[j]] = 1;
          const auto x = solve(f, stacked, e);
          for (int i = 0; i < n - a; ++i) p.s(i, j) = (*x)[a + i];
        }
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace catkit::hall
