#include "catkit/hall.hpp"

#include "catkit/errors.hpp"
#include "catkit/subspace.hpp"

namespace catkit::hall {

HallElement HallElement::delta(int d) {
  HallElement h;
  h.set(d, LaurentPoly(1));
  return h;
}

LaurentPoly HallElement::at(int d) const {
  auto it = values_.find(d);
  return it == values_.end() ? LaurentPoly() : it->second;
}

void HallElement::set(int d, const LaurentPoly& value) {
  if (d < 0) throw DomainError("Hall element supported on a negative dimension");
  if (value.is_zero()) {
    values_.erase(d);
  } else {
    values_[d] = value;
  }
}

HallElement& HallElement::operator+=(const HallElement& o) {
  for (const auto& [d, x] : o.values_) set(d, at(d) + x);
  return *this;
}

HallElement HallElement::scaled(const LaurentPoly& c) const {
  HallElement out;
  for (const auto& [d, x] : values_) out.set(d, x * c);
  return out;
}

LaurentPoly euler_form(int a, int b) { return LaurentPoly::v(a * b); }

HallElement hall_product(const HallElement& f, const HallElement& g) {
  std::map<int, LaurentPoly> acc;
  for (const auto& [a, x] : f.values())
    for (const auto& [b, y] : g.values()) acc[a + b] += euler_form(a, b) * gaussian_binomial(a + b, a) * x * y;
  HallElement out;
  for (const auto& [n, val] : acc) out.set(n, val);
  return out;
}

Json to_json(const HallElement& h) {
  Json j = Json::object();
  for (const auto& [d, x] : h.values()) j[std::to_string(d)] = to_json(x);
  return j;
}

HallElement hall_element_from_json(const Json& j) {
  HallElement h;
  try {
    for (const auto& [key, val] : j.items()) h.set(std::stoi(key), laurent_from_json(val));
  } catch (const std::invalid_argument&) {
    throw ParseError("Hall element keys must be dimensions");
  }
  return h;
}

}  // namespace catkit::hall
