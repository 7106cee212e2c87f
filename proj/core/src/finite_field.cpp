#include "catkit/finite_field.hpp"

#include "catkit/errors.hpp"

namespace catkit::hall {

FiniteField::FiniteField(int q) : q_(q) {
  if (q != 2 && q != 3 && q != 4 && q != 5)
    throw DomainError("finite field of order " + std::to_string(q) + " is not supported (use 2, 3, 4 or 5)");
  const auto n = static_cast<std::size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (q == 4) {
        add_[a * q + b] = a ^ b;
        // (a0 + a1 x)(b0 + b1 x) with x^2 = x + 1
        const int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
        const int c0 = (a0 & b0) ^ (a1 & b1);
        const int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        mul_[a * q + b] = c0 | (c1 << 1);
      } else {
        add_[a * q + b] = (a + b) % q;
        mul_[a * q + b] = (a * b) % q;
      }
    }
  }
  neg_.assign(n, -1);
  inv_.assign(n, -1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul(a, b) == 1) inv_[a] = b;
    }

  // Field axioms on the tables.
  for (int a = 0; a < q; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || neg_[a] < 0 || (a != 0 && inv_[a] < 0))
      throw DomainError("finite field tables violate the unit or inverse laws");
    for (int b = 0; b < q; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) throw DomainError("finite field is not commutative");
      for (int c = 0; c < q; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)) || mul(mul(a, b), c) != mul(a, mul(b, c)) ||
            mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw DomainError("finite field tables violate associativity or distributivity");
      }
    }
  }
  for (int g = 2; g < q; ++g) {
    int order = 1;
    for (int x = g; x != 1; x = mul(x, g)) ++order;
    if (order == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw DomainError("division by zero in F_q");
  return inv_[a];
}

FqMatrix FqMatrix::identity(int n) {
  FqMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<int> FqMatrix::row(int i) const {
  return {data.begin() + i * cols, data.begin() + (i + 1) * cols};
}

std::vector<int> FqMatrix::column(int j) const {
  std::vector<int> c(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
  return c;
}

FqMatrix mul(const FiniteField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols != b.rows) throw DimensionError("F_q matrix product shape mismatch");
  FqMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const int x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  return out;
}

std::vector<int> apply(const FiniteField& f, const FqMatrix& a, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != a.cols) throw DimensionError("F_q matrix-vector shape mismatch");
  std::vector<int> y(static_cast<std::size_t>(a.rows), 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) y[i] = f.add(y[i], f.mul(a(i, j), x[j]));
  return y;
}

FqMatrix rref(const FiniteField& f, FqMatrix m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(p, j));
    const int s = f.inv(m(r, c));
    for (int j = 0; j < m.cols; ++j) m(r, j) = f.mul(s, m(r, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const int t = m(i, c);
      for (int j = 0; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  FqMatrix out(r, m.cols);
  std::copy(m.data.begin(), m.data.begin() + r * m.cols, out.data.begin());
  return out;
}

int rank(const FiniteField& f, const FqMatrix& m) { return rref(f, m).rows; }

std::optional<FqMatrix> inverse(const FiniteField& f, const FqMatrix& m) {
  if (m.rows != m.cols) throw DimensionError("inverse of a non-square F_q matrix");
  const int n = m.rows;
  FqMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv;
  FqMatrix red = rref(f, aug, &piv);
  if (red.rows < n || piv.back() >= n) return std::nullopt;
  FqMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = red(i, n + j);
  return out;
}

std::optional<std::vector<int>> solve(const FiniteField& f, const FqMatrix& a, const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != a.rows) throw DimensionError("solve: right-hand side has the wrong length");
  FqMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  std::vector<int> piv;
  FqMatrix red = rref(f, aug, &piv);
  std::vector<int> x(static_cast<std::size_t>(a.cols), 0);
  for (int r = 0; r < red.rows; ++r) {
    if (piv[r] == a.cols) return std::nullopt;
    x[piv[r]] = red(r, a.cols);
  }
  return x;
}

std::uint64_t encode(const FqMatrix& m, int q) {
  std::uint64_t code = 0;
  for (int x : m.data) code = code * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(x);
  return code;
}

FqMatrix decode(std::uint64_t code, int n, int q) {
  FqMatrix m(n, n);
  for (std::size_t k = m.data.size(); k-- > 0;) {
    m.data[k] = static_cast<int>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  return m;
}

}  // namespace catkit::hall
