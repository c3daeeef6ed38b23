#pragma once

#include "domipoly/graph.hpp"
#include "domipoly/poly.hpp"

namespace domipoly {

// Forced membership constraints for conditional polynomials. forced_in and
// forced_out must be disjoint subsets of the vertex set.
struct ConstraintSet {
    VertexSet forced_in = 0;
    VertexSet forced_out = 0;
};

// Default / hard ceilings on the subset enumeration (2^n leaf visits).
constexpr int kDefaultOracleCap = 25;
constexpr int kHardOracleCap = 30;

namespace oracle {

// Ground truth by enumeration: sum of x^|W| y^|N(W)| over subsets W with
// forced_in included and forced_out avoided. N(W) is taken in the full
// graph, so forbidden vertices still count as dominated neighbors.
// Throws GraphTooLarge above the cap.
BivariatePolynomial j_conditional(const Graph& g, const ConstraintSet& c,
                                  int cap = kDefaultOracleCap);

BivariatePolynomial j(const Graph& g, int cap = kDefaultOracleCap);

}  // namespace oracle

}  // namespace domipoly
