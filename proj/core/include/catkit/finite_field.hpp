#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace catkit::hall {

/// The field with q elements for q in {2, 3, 4, 5}. Elements are 0..q-1;
/// for q = 4 the element a0 + 2 a1 stands for a0 + a1 x in F_2[x]/(x^2 + x + 1).
class FiniteField {
 public:
  /// Builds the tables and checks the field axioms; throws DomainError for other q.
  explicit FiniteField(int q);

  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  /// Throws DomainError on 0.
  int inv(int a) const;
  /// A generator of the multiplicative group.
  int primitive() const { return primitive_; }

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.q_ == b.q_; }

 private:
  int q_;
  int primitive_ = 1;
  std::vector<int> add_, mul_, neg_, inv_;
};

/// Dense matrix over F_q, row-major. A linear map acts on column vectors.
struct FqMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> data;

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r * c), 0) {}
  static FqMatrix identity(int n);

  int& operator()(int i, int j) { return data[static_cast<std::size_t>(i * cols + j)]; }
  int operator()(int i, int j) const { return data[static_cast<std::size_t>(i * cols + j)]; }
  std::vector<int> row(int i) const;
  std::vector<int> column(int j) const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
  friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;
};

FqMatrix mul(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);
std::vector<int> apply(const FiniteField& f, const FqMatrix& a, const std::vector<int>& x);

/// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
FqMatrix rref(const FiniteField& f, FqMatrix m, std::vector<int>* pivots = nullptr);
int rank(const FiniteField& f, const FqMatrix& m);
std::optional<FqMatrix> inverse(const FiniteField& f, const FqMatrix& m);

/// Some x with a x = b, or nullopt.
std::optional<std::vector<int>> solve(const FiniteField& f, const FqMatrix& a, const std::vector<int>& b);

/// Base-q code of the entries in row-major order (the first entry most significant).
std::uint64_t encode(const FqMatrix& m, int q);
FqMatrix decode(std::uint64_t code, int n, int q);

}  // namespace catkit::hall
