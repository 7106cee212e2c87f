#include "catkit/serialize.hpp"

#include <string>

#include "catkit/errors.hpp"

namespace catkit {

namespace {

Json bigint_to_json(const BigInt& c) {
  if (c.fits_slong_p()) return Json(c.get_si());
  return Json(c.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError("expected an integer coefficient, got " + j.dump());
}

int exponent_from_key(const std::string& key) {
  std::size_t used = 0;
  int e = 0;
  try {
    e = std::stoi(key, &used);
  } catch (const std::exception&) {
    throw ParseError("bad exponent key '" + key + "'");
  }
  if (used != key.size()) throw ParseError("bad exponent key '" + key + "'");
  return e;
}

template <class T, class Parse>
SparseMatrix<T> matrix_from_json(const Json& j, Parse parse) try {
  if (!j.is_object() || !j.contains("nrows") || !j.contains("ncols") || !j.contains("entries"))
    throw ParseError("matrix needs nrows, ncols and entries");
  const auto rows = j.at("nrows").get<std::size_t>();
  const auto cols = j.at("ncols").get<std::size_t>();
  SparseMatrix<T> m(rows, cols);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("matrix entry must be [i, j, value]");
    const auto r = e[0].get<std::size_t>();
    const auto c = e[1].get<std::size_t>();
    if (r >= rows || c >= cols) throw ParseError("matrix entry index out of range");
    m.add_to(r, c, parse(e[2]));
  }
  return m;
} catch (const Json::exception& e) {
  throw ParseError(std::string("matrix: ") + e.what());
}

template <class T, class Emit>
Json matrix_to_json(const SparseMatrix<T>& m, Emit emit) {
  Json entries = Json::array();
  for (const auto& t : m.triplets()) entries.push_back(Json::array({t.row, t.col, emit(t.value)}));
  return Json{{"nrows", m.rows()}, {"ncols", m.cols()}, {"entries", entries}};
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  // Keys sort as strings in nlohmann::json; the output is still deterministic.
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = bigint_to_json(c);
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return LaurentPoly(bigint_from_json(j));
  if (!j.is_object()) throw ParseError("Laurent polynomial must be an {exponent: coefficient} object");
  LaurentPoly::Terms terms;
  for (const auto& [key, value] : j.items()) terms[exponent_from_key(key)] += bigint_from_json(value);
  return LaurentPoly(std::move(terms));
}

Json to_json(const Rational& r) {
  if (r.is_integer()) return bigint_to_json(r.numerator());
  return Json(r.str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected a rational, got " + j.dump());
}

Json to_json(const SparseMat& m) {
  return matrix_to_json(m, [](const LaurentPoly& p) { return to_json(p); });
}

SparseMat sparse_mat_from_json(const Json& j) { return matrix_from_json<LaurentPoly>(j, laurent_from_json); }

Json to_json(const QMatrix& m) {
  return matrix_to_json(m, [](const Rational& r) { return to_json(r); });
}

QMatrix qmatrix_from_json(const Json& j) { return matrix_from_json<Rational>(j, rational_from_json); }

}  // namespace catkit
