#pragma once

#include <array>
#include <vector>

#include "catkit/braid.hpp"
#include "catkit/laurent.hpp"
#include "catkit/serialize.hpp"

namespace catkit::braid {

/// One oriented crossing X[a,b,c,d]; see conventions.hpp for the arc order and sign rule.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// An oriented link diagram. Components without crossings are counted in free_loops.
struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;

  std::size_t size() const { return crossings.size(); }
  int writhe() const;
  /// Number of link components.
  int components() const;
};

/// Throws DomainError unless every arc label occurs exactly twice and each arc
/// enters exactly one crossing and leaves exactly one.
void validate(const PlanarDiagram& pd);

/// Trace closure: top of strand i is joined to the bottom of strand i.
/// Arc labels are 1..k, numbered in order of first appearance.
PlanarDiagram markov_closure(const BraidWord& b);

/// Bracket <D> as a Laurent polynomial in A, normalized so the crossingless
/// unknot is 1. Throws CapExceeded beyond conventions::kMaxBracketCrossings.
LaurentPoly kauffman_bracket_in_a(const PlanarDiagram& pd);

/// Jones polynomial (-A^3)^-w <D> with A^2 -> v.
LaurentPoly kauffman_bracket(const PlanarDiagram& pd);

// {"crossings": [[a,b,c,d,sign], ...], "free_loops": k}
Json to_json(const PlanarDiagram& pd);
PlanarDiagram diagram_from_json(const Json& j);

}  // namespace catkit::braid
