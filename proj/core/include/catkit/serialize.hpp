#pragma once

#include <nlohmann/json.hpp>

#include "catkit/laurent.hpp"
#include "catkit/rational.hpp"
#include "catkit/sparse_matrix.hpp"

namespace catkit {

using Json = nlohmann::json;

// Text formats for the exact-algebra types.
//
//   LaurentPoly  {"<exponent>": <coefficient>, ...}   coefficients are JSON
//                integers, or decimal strings once they leave int64 range
//   Rational     "p/q" or an integer
//   SparseMat    {"nrows": r, "ncols": c, "entries": [[i, j, <poly>], ...]}
//
// Matrix entries are emitted in row-major order, so equal values always
// serialize to identical text.

Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const SparseMat& m);
SparseMat sparse_mat_from_json(const Json& j);

Json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

}  // namespace catkit
