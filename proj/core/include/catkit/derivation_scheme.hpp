#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "catkit/finite_category.hpp"

namespace catkit::duoidal {

/// A 2-cell of a derivation scheme, kept as a nested tuple.
///
///   Atom  a named cell
///   Star  horizontal pair (x, y) with x : beta => beta', y : gamma => gamma';
///         morphs = {beta, beta', gamma, gamma'}
///   Circ  vertical pair (x, y) with x : alpha => alpha', y : alpha' => alpha'';
///         morphs = {alpha'}
struct Cell {
  enum class Kind { Atom, Star, Circ };
  Kind kind = Kind::Atom;
  std::string label;
  std::vector<int> morphs;
  std::vector<Cell> parts;

  static Cell atom(std::string label) { return Cell{Kind::Atom, std::move(label), {}, {}}; }
  static Cell star(int beta, int beta2, int gamma, int gamma2, Cell x, Cell y);
  static Cell circ(int middle, Cell x, Cell y);

  std::strong_ordering operator<=>(const Cell& o) const;
  bool operator==(const Cell& o) const { return (*this <=> o) == 0; }
};

std::string cell_string(const Cell& c, const FiniteCategory& cat);

/// Parallel pair (alpha, alpha') of morphism indices.
using Pair = std::pair<int, int>;

/// For each parallel pair, a finite sorted list of distinct cells.
/// Pairs with no cells may be absent.
class DerivationScheme {
 public:
  explicit DerivationScheme(std::shared_ptr<const FiniteCategory> cat) : cat_(std::move(cat)) {}

  const FiniteCategory& category() const { return *cat_; }
  const std::shared_ptr<const FiniteCategory>& category_ptr() const { return cat_; }
  /// Inserts a cell; throws DomainError if the pair is not parallel.
  void add(Pair p, Cell c);
  /// Builds a scheme from unsorted lists (duplicates are merged).
  static DerivationScheme from_lists(std::shared_ptr<const FiniteCategory> cat, std::map<Pair, std::vector<Cell>> lists);
  const std::vector<Cell>& cells(Pair p) const;
  /// Position of c in cells(p), or -1.
  int index_of(Pair p, const Cell& c) const;
  /// Every parallel pair of the category, ascending.
  std::vector<Pair> pairs() const;
  std::size_t total() const;
  /// Throws DomainError if some pair is not parallel or a list is unsorted.
  void validate() const;

  const std::map<Pair, std::vector<Cell>>& raw() const { return cells_; }

 private:
  std::shared_ptr<const FiniteCategory> cat_;
  std::map<Pair, std::vector<Cell>> cells_;
};

bool operator==(const DerivationScheme& a, const DerivationScheme& b);

/// A morphism of derivation schemes: for each pair, image positions.
struct SchemeMap {
  std::map<Pair, std::vector<std::size_t>> images;

  std::size_t at(Pair p, std::size_t i) const { return images.at(p).at(i); }
};

bool operator==(const SchemeMap& a, const SchemeMap& b);

/// Every pair of x covered with in-range images into y.
bool is_total(const SchemeMap& f, const DerivationScheme& x, const DerivationScheme& y);
bool is_bijection(const SchemeMap& f, const DerivationScheme& x, const DerivationScheme& y);
/// g after f.
SchemeMap compose(const SchemeMap& g, const SchemeMap& f);
SchemeMap identity_map(const DerivationScheme& x);

using CatPtr = std::shared_ptr<const FiniteCategory>;

/// J: one cell at each (1_a, 1_a).
DerivationScheme unit_star(CatPtr c);
/// 1: one cell at each (alpha, alpha).
DerivationScheme unit_circ(CatPtr c);
/// One cell at every parallel pair.
DerivationScheme terminal_scheme(CatPtr c);

/// (X * Y)_(alpha, alpha'): cells x : beta => beta', y : gamma => gamma' with
/// alpha = gamma beta and alpha' = gamma' beta'.
DerivationScheme ds_star(const DerivationScheme& x, const DerivationScheme& y);
/// (X o Y)_(alpha, alpha''): x : alpha => alpha', y : alpha' => alpha''.
DerivationScheme ds_circ(const DerivationScheme& x, const DerivationScheme& y);

/// f * g : X * Y -> X' * Y'.
SchemeMap star_map(const SchemeMap& f, const SchemeMap& g, const DerivationScheme& x, const DerivationScheme& y,
                   const DerivationScheme& x2, const DerivationScheme& y2);
/// f o g : X o Y -> X' o Y'.
SchemeMap circ_map(const SchemeMap& f, const SchemeMap& g, const DerivationScheme& x, const DerivationScheme& y,
                   const DerivationScheme& x2, const DerivationScheme& y2);

// Canonical bijections, built by reindexing nested tuples.
SchemeMap star_associator(const DerivationScheme& x, const DerivationScheme& y, const DerivationScheme& z);  // (XY)Z -> X(YZ)
SchemeMap circ_associator(const DerivationScheme& x, const DerivationScheme& y, const DerivationScheme& z);
SchemeMap star_left_unitor(const DerivationScheme& x);   // J * X -> X
SchemeMap star_right_unitor(const DerivationScheme& x);  // X * J -> X
SchemeMap circ_left_unitor(const DerivationScheme& x);   // 1 o X -> X
SchemeMap circ_right_unitor(const DerivationScheme& x);  // X o 1 -> X

/// The interchange (A o B) * (C o D) -> (A * C) o (B * D).
SchemeMap ds_interchange(const DerivationScheme& a, const DerivationScheme& b, const DerivationScheme& c,
                         const DerivationScheme& d);

/// mu : 1 * 1 -> 1.
SchemeMap unit_mu(CatPtr c);
/// tau : J -> 1.
SchemeMap unit_tau(CatPtr c);
/// delta : J -> J o J.
SchemeMap unit_delta(CatPtr c);

// {"cells": [{"source": alpha, "target": alpha', "labels": [...]}]} with atom cells only.
Json to_json(const DerivationScheme& x);
DerivationScheme scheme_from_json(CatPtr c, const Json& j);

}  // namespace catkit::duoidal
