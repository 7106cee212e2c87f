#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "catkit/sparse_matrix.hpp"

namespace catkit {

/// Reduced row echelon form of the rows of a rational matrix.
struct RowEchelon {
  std::vector<std::vector<Rational>> rows;  // nonzero rows only
  std::vector<std::size_t> pivots;          // pivot column of each row
  std::size_t cols = 0;
};

RowEchelon row_reduce(const QMatrix& m);
std::size_t rank(const QMatrix& m);

/// Basis of the kernel {x : m x = 0}, as the columns of the returned matrix.
QMatrix kernel(const QMatrix& m);

/// Q^n / span(columns of relations): `project` maps Q^n onto the quotient
/// coordinates and `section` maps quotient coordinates back to chosen
/// representatives, so project . section = 1.
struct Quotient {
  QMatrix project;
  QMatrix section;
  std::size_t dim() const { return project.rows(); }
};

Quotient quotient_by_columns(std::size_t ambient, const std::vector<QMatrix>& relation_blocks);

/// Determinant over Z[v, v^-1] by fraction-free (Bareiss) elimination.
LaurentPoly determinant(const SparseMat& m);

/// Inverse over Z[v, v^-1]; nullopt when the determinant is not a unit +-v^k.
std::optional<SparseMat> invert(const SparseMat& m);

}  // namespace catkit
