#ifndef WHEELCHECK_ALON_TARSI_HPP
#define WHEELCHECK_ALON_TARSI_HPP

#include "wheelcheck/poly.hpp"

namespace wheelcheck {

constexpr int kDefaultEdgeBudget = 26;

// Signed count of the orientations whose out-degree vector equals d: each
// edge either points from the earlier vertex to the later one (positive
// pick) or is reversed (sign -1). Equals the uncapped graph-polynomial
// coefficient of d. Vectors with total != |E| give 0.
Coeff coefficient_by_orientations(const PlaneGraph& g, const std::vector<VertexId>& ordering,
                                  const ExponentVector& d,
                                  int edge_budget = kDefaultEdgeBudget);

// Full signed orientation count table, one plain pass over all 2^|E|
// orientations. Deliberately kept as the naive route, independent of the
// incremental capped product in graph_polynomial.
SparsePolynomial orientation_expansion(const PlaneGraph& g, const std::vector<VertexId>& ordering,
                                       int edge_budget = kDefaultEdgeBudget);

// Least k such that the graph polynomial has a nonzero monomial with all
// exponents < k; searched by increasing k from 1.
int at_number(const PlaneGraph& g, int edge_budget = kDefaultEdgeBudget);

}  // namespace wheelcheck

#endif
