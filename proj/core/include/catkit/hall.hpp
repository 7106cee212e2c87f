#pragma once

#include <map>

#include "catkit/laurent.hpp"
#include "catkit/serialize.hpp"

namespace catkit::hall {

/// A finitely supported function on isomorphism classes of finite F_q-vector
/// spaces, i.e. on dimensions. Zero values are not stored.
class HallElement {
 public:
  HallElement() = default;
  /// Indicator of dimension d.
  static HallElement delta(int d);

  LaurentPoly at(int d) const;
  void set(int d, const LaurentPoly& value);
  const std::map<int, LaurentPoly>& values() const { return values_; }

  HallElement& operator+=(const HallElement& o);
  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  HallElement scaled(const LaurentPoly& c) const;

  friend bool operator==(const HallElement&, const HallElement&) = default;

 private:
  std::map<int, LaurentPoly> values_;
};

/// Multiplicative Euler form of F_q^a and F_q^b. Every higher Ext vanishes for
/// vector spaces, so its square is q^(ab) and the positive root is v^(ab).
LaurentPoly euler_form(int a, int b);

/// (f . g)[n] = sum_(a+b=n) v^(ab) [n choose a]_q f(a) g(b).
HallElement hall_product(const HallElement& f, const HallElement& g);

// {"<dim>": <LaurentPoly>, ...}
Json to_json(const HallElement& h);
HallElement hall_element_from_json(const Json& j);

}  // namespace catkit::hall
