#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "catkit/errors.hpp"
#include "catkit/laurent.hpp"
#include "catkit/rational.hpp"

namespace catkit {

/// Coefficient types usable in SparseMatrix: exact commutative rings with an
/// explicit zero test.
template <class T>
concept ExactRing = std::regular<T> && requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
  T(0);
  T(1);
};

/// Sparse matrix over an exact ring. A linear map X -> Y is stored as a
/// (dim Y) x (dim X) matrix acting on column vectors; zero entries are never stored.
template <ExactRing T>
class SparseMatrix {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    T value;
  };
  using Row = std::map<std::size_t, T>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace(i, T(1));
    return m;
  }
  static SparseMatrix zero(std::size_t rows, std::size_t cols) { return SparseMatrix(rows, cols); }
  static SparseMatrix scalar(const T& value) {
    SparseMatrix m(1, 1);
    m.set(0, 0, value);
    return m;
  }
  static SparseMatrix diagonal(const std::vector<T>& values) {
    SparseMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
    return m;
  }
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    const std::vector<Triplet>& entries) {
    SparseMatrix m(rows, cols);
    for (const auto& t : entries) m.add_to(t.row, t.col, t.value);
    return m;
  }
  static SparseMatrix from_dense(const std::vector<std::vector<T>>& dense) {
    SparseMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i].size() != m.cols_) throw DimensionError("ragged dense matrix");
      for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, dense[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }
  bool is_zero() const { return nnz() == 0; }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  const Row& row(std::size_t i) const { return rows_.at(i); }

  T at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? T(0) : it->second;
  }

  void set(std::size_t i, std::size_t j, const T& value) {
    check_index(i, j);
    if (value.is_zero()) {
      rows_[i].erase(j);
    } else {
      rows_[i].insert_or_assign(j, value);
    }
  }

  void add_to(std::size_t i, std::size_t j, const T& value) {
    check_index(i, j);
    if (value.is_zero()) return;
    auto [it, inserted] = rows_[i].try_emplace(j, value);
    if (!inserted) {
      it->second = it->second + value;
      if (it->second.is_zero()) rows_[i].erase(it);
    }
  }

  /// Entries in row-major order.
  std::vector<Triplet> triplets() const {
    std::vector<Triplet> out;
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : rows_[i]) out.push_back({i, j, v});
    return out;
  }

  std::vector<std::vector<T>> to_dense() const {
    std::vector<std::vector<T>> d(rows(), std::vector<T>(cols_, T(0)));
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : rows_[i]) d[i][j] = v;
    return d;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace(i, v);
    return t;
  }

  SparseMatrix scaled(const T& s) const {
    SparseMatrix m(rows(), cols_);
    if (s.is_zero()) return m;
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : rows_[i]) m.set(i, j, v * s);
    return m;
  }

  SparseMatrix& operator+=(const SparseMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : o.rows_[i]) add_to(i, j, v);
    return *this;
  }
  SparseMatrix& operator-=(const SparseMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : o.rows_[i]) add_to(i, j, -v);
    return *this;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  SparseMatrix operator-() const { return scaled(T(-1)); }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows() || j >= cols_) throw DomainError("matrix index out of range");
  }
  void require_same_shape(const SparseMatrix& o) const {
    if (rows() != o.rows() || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

using SparseMat = SparseMatrix<LaurentPoly>;
using QMatrix = SparseMatrix<Rational>;

/// Composite a . b: b is applied first, then a. Requires a.cols() == b.rows().
template <ExactRing T>
SparseMatrix<T> compose(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("compose: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " after " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  SparseMatrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::map<std::size_t, T> acc;
    for (const auto& [k, x] : a.row(i)) {
      for (const auto& [j, y] : b.row(k)) {
        auto [it, inserted] = acc.try_emplace(j, x * y);
        if (!inserted) it->second = it->second + x * y;
      }
    }
    for (const auto& [j, v] : acc) out.set(i, j, v);
  }
  return out;
}

/// Composite of a chain written in the usual order: compose_all({f, g, h}) = f . g . h.
template <ExactRing T>
SparseMatrix<T> compose_all(const std::vector<SparseMatrix<T>>& chain) {
  if (chain.empty()) throw DimensionError("compose_all: empty chain");
  SparseMatrix<T> out = chain.back();
  for (std::size_t k = chain.size() - 1; k-- > 0;) out = compose(chain[k], out);
  return out;
}

/// Kronecker product with row-major index convention: row (i * b.rows() + i'),
/// column (j * b.cols() + j'). The left factor is the most significant digit.
template <ExactRing T>
SparseMatrix<T> kron(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  SparseMatrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& [j, x] : a.row(i))
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (const auto& [j2, y] : b.row(i2)) out.set(i * b.rows() + i2, j * b.cols() + j2, x * y);
  return out;
}

template <ExactRing T>
SparseMatrix<T> kron_all(const std::vector<SparseMatrix<T>>& factors) {
  SparseMatrix<T> out = SparseMatrix<T>::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

template <ExactRing T>
T trace(const SparseMatrix<T>& a) {
  if (!a.is_square()) throw DimensionError("trace of a non-square matrix");
  T sum(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto& r = a.row(i);
    if (auto it = r.find(i); it != r.end()) sum = sum + it->second;
  }
  return sum;
}

/// Contracts tensor factor `site` (1-based) of a square matrix acting on
/// dims[0] (x) dims[1] (x) ... (row-major, first factor most significant).
template <ExactRing T>
SparseMatrix<T> partial_trace(const SparseMatrix<T>& a, std::size_t site,
                              const std::vector<std::size_t>& dims) {
  if (!a.is_square()) throw DimensionError("partial_trace of a non-square matrix");
  if (site < 1 || site > dims.size()) throw DimensionError("partial_trace: site out of range");
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (total != a.rows()) throw DimensionError("partial_trace: factor dims do not match matrix size");
  std::size_t inner = 1;  // product of dims after the traced site
  for (std::size_t k = site; k < dims.size(); ++k) inner *= dims[k];
  const std::size_t traced = dims[site - 1];
  const std::size_t outer = total / (inner * traced);
  auto split = [&](std::size_t idx) {
    const std::size_t lo = idx % inner;
    const std::size_t mid = (idx / inner) % traced;
    const std::size_t hi = idx / (inner * traced);
    return std::array<std::size_t, 3>{hi, mid, lo};
  };
  SparseMatrix<T> out(outer * inner, outer * inner);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto [ih, im, il] = split(i);
    for (const auto& [j, v] : a.row(i)) {
      const auto [jh, jm, jl] = split(j);
      if (im == jm) out.add_to(ih * inner + il, jh * inner + jl, v);
    }
  }
  return out;
}

}  // namespace catkit
