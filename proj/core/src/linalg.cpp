#include "catkit/linalg.hpp"

#include <algorithm>

namespace catkit {

RowEchelon row_reduce(const QMatrix& m) {
  auto a = m.to_dense();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RowEchelon out;
  out.cols = cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const QMatrix& m) { return row_reduce(m).pivots.size(); }

QMatrix kernel(const QMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis.set(f, k, Rational(1));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.set(e.pivots[r], k, -e.rows[r][f]);
  }
  return basis;
}

Quotient quotient_by_columns(std::size_t ambient, const std::vector<QMatrix>& relation_blocks) {
  // Stack relation vectors as rows and reduce.
  std::size_t total = 0;
  for (const auto& b : relation_blocks) {
    if (b.rows() != ambient) throw DimensionError("relation block has wrong ambient dimension");
    total += b.cols();
  }
  QMatrix stacked(total, ambient);
  std::size_t offset = 0;
  for (const auto& b : relation_blocks) {
    for (const auto& t : b.triplets()) stacked.set(offset + t.col, t.row, t.value);
    offset += b.cols();
  }
  const RowEchelon e = row_reduce(stacked);
  std::vector<long> pivot_row(ambient, -1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<long>(r);
  std::vector<std::size_t> keep;
  std::vector<long> keep_index(ambient, -1);
  for (std::size_t c = 0; c < ambient; ++c) {
    if (pivot_row[c] < 0) {
      keep_index[c] = static_cast<long>(keep.size());
      keep.push_back(c);
    }
  }
  Quotient q{QMatrix(keep.size(), ambient), QMatrix(ambient, keep.size())};
  for (std::size_t c = 0; c < ambient; ++c) {
    if (pivot_row[c] < 0) {
      q.project.set(static_cast<std::size_t>(keep_index[c]), c, Rational(1));
    } else {
      // e_c = row - (row - e_c): reduce by the pivot row, keeping the free coordinates.
      const auto& row = e.rows[static_cast<std::size_t>(pivot_row[c])];
      for (std::size_t k = 0; k < keep.size(); ++k) q.project.set(k, c, -row[keep[k]]);
    }
  }
  for (std::size_t k = 0; k < keep.size(); ++k) q.section.set(keep[k], k, Rational(1));
  return q;
}

namespace {

using DenseL = std::vector<std::vector<LaurentPoly>>;

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto r = divide_exact(a, b);
  if (!r) throw Error("Bareiss elimination produced an inexact division");
  return *r;
}

// Fraction-free forward elimination of [a | rhs]; returns the signed determinant.
LaurentPoly bareiss(DenseL& a, DenseL& rhs) {
  const std::size_t n = a.size();
  LaurentPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return LaurentPoly();
    if (p != k) {
      std::swap(a[p], a[k]);
      std::swap(rhs[p], rhs[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      for (std::size_t j = 0; j < rhs[i].size(); ++j)
        rhs[i][j] = exact(a[k][k] * rhs[i][j] - a[i][k] * rhs[k][j], prev);
      a[i][k] = LaurentPoly();
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace

LaurentPoly determinant(const SparseMat& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return LaurentPoly(1);
  DenseL a = m.to_dense();
  DenseL rhs(m.rows());
  return bareiss(a, rhs);
}

std::optional<SparseMat> invert(const SparseMat& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  DenseL a = m.to_dense();
  DenseL rhs(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) rhs[i][i] = LaurentPoly(1);
  const LaurentPoly det = bareiss(a, rhs);
  if (det.is_zero() || !det.is_unit()) return std::nullopt;
  // The triangular factor's last pivot carries the determinant up to sign.
  const LaurentPoly scale = a[n - 1][n - 1];
  SparseMat inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<LaurentPoly> y(n);  // y = scale * x
    for (std::size_t i = n; i-- > 0;) {
      LaurentPoly acc = scale * rhs[i][col];
      for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * y[j];
      y[i] = exact(acc, a[i][i]);
    }
    const LaurentPoly scale_inv = scale.inverse();
    for (std::size_t i = 0; i < n; ++i) inv.set(i, col, y[i] * scale_inv);
  }
  return inv;
}

}  // namespace catkit
