#pragma once

#include <string>
#include <vector>

#include "catkit/derivation_scheme.hpp"

namespace catkit::duoidal {

/// A derivation scheme A with a horizontal monoid (mu_h : A * A -> A,
/// eta_h : J -> A) and a vertical monoid (mu_v : A o A -> A, eta_v : 1 -> A).
/// Map positions index the canonical cell lists of ds_star(A, A),
/// unit_star, ds_circ(A, A) and unit_circ.
struct DuoidData {
  DerivationScheme a;
  SchemeMap mu_h, eta_h, mu_v, eta_v;
};

struct DuoidReport {
  bool shapes = true;
  bool horizontal_assoc = true;
  bool horizontal_unit = true;
  bool vertical_assoc = true;
  bool vertical_unit = true;
  bool mu_v_morphism = true;   // mu_v is a horizontal monoid morphism
  bool eta_v_morphism = true;  // eta_v is a horizontal monoid morphism
  std::vector<std::string> failures;

  bool ok() const {
    return shapes && horizontal_assoc && horizontal_unit && vertical_assoc && vertical_unit && mu_v_morphism &&
           eta_v_morphism;
  }
};

/// Checks both monoid structures and the compatibility of mu_v, eta_v with *
/// as equalities of scheme maps.
DuoidReport duoid_validate(const DuoidData& d);

/// Reads d as 2-cells with vertical composition mu_v and horizontal
/// composition mu_h, and checks the 2-category axioms cell by cell.
/// Throws DomainError if a structure map is not total.
bool two_category_check(const DuoidData& d);

/// The terminal scheme with its unique maps.
DuoidData terminal_duoid(CatPtr c);
/// The scheme 1 (only identity 2-cells): the locally discrete 2-category.
DuoidData discrete_duoid(CatPtr c);
/// Z/m of 2-cells on every parallel pair, both compositions by addition.
DuoidData cyclic_duoid(CatPtr c, int m);

enum class DuoidPart { MuH, EtaH, MuV, EtaV };

/// Copy of d with one image of the chosen map moved to the next cell of its
/// pair. The n-th eligible entry (mod the number of eligible entries) is
/// changed; throws DomainError if none is eligible.
DuoidData corrupt(const DuoidData& d, DuoidPart part, std::size_t n = 0);

Json to_json(const DuoidReport& r);

// {"category": <category>,
//  "cells": [{"source": f, "target": g, "labels": [...]}],
//  "vertical":   [[x, y, x;y], ...],
//  "horizontal": [[x, y, x*y], ...],
//  "vertical_units":   [[f, id_f], ...],
//  "horizontal_units": [[a, id_a], ...]}
// where each cell reference is [source, target, label].
Json to_json(const DuoidData& d);
DuoidData duoid_from_json(const Json& j);

}  // namespace catkit::duoidal
