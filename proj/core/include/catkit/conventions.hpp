#pragma once

#include <cstddef>

// Every sign and variable convention used by the link invariants lives here.
//
// Variables. The bracket variable is A. The library variable is v = A^2, and
// q = v^2 = A^4. The Jones variable t of the skein relation
// t^-1 V(L+) - t V(L-) = (t^1/2 - t^-1/2) V(L0) is t = q^-1 = v^-2, so the
// right-handed trefoil is -q^-4 + q^-3 + q^-1.
//
// Crossings. s_i is positive: strand i passes over strand i+1, strands run
// upward. In a PD code X[a,b,c,d] the four arcs are listed counterclockwise
// starting from the incoming under-strand, so the under-strand runs a -> c.
// The crossing is positive iff the over-strand runs d -> b.
//
// Bracket. A-smoothing joins (a,b) and (c,d); B-smoothing joins (a,d) and
// (b,c). <D> = sum over states A^(#A - #B) d^(loops - 1) with d = -A^2 - A^-2.
// Jones(D) = (-A^3)^(-writhe) <D>, then A^2 -> v.
//
// Yang-Baxter operator on V = span(e0, e1), basis of V (x) V ordered e_i (x) e_j -> 2i + j:
//   R(e0 e0) = q e0 e0            R(e1 e1) = q e1 e1
//   R(e0 e1) = e1 e0              R(e1 e0) = q e0 e1 + (q - 1) e1 e0
// so R^2 = (q - 1) R + q. Enhancement: mu = diag(v, v^-1), alpha = -v^3,
// beta = -1. The trace form alpha^-w beta^-n tr(rho(b) mu^(x)n) takes the value
// -(v + v^-1) on the unknot; the invariant reported is that value divided by
// the unknot value, which agrees with the bracket normalization above.

namespace catkit::conventions {

inline constexpr int kJonesAlphaSign = -1;
inline constexpr int kJonesAlphaExponent = 3;
inline constexpr int kJonesBeta = -1;

/// Largest diagram accepted by the state-sum bracket (2^c states).
inline constexpr std::size_t kMaxBracketCrossings = 16;

}  // namespace catkit::conventions
