#ifndef WHEELCHECK_ENUMERATE_HPP
#define WHEELCHECK_ENUMERATE_HPP

#include <functional>

#include "wheelcheck/graph.hpp"

namespace wheelcheck {

struct EnumerateOptions {
    int max_interior = 0;
    long long instance_budget = 1'000'000;
    // true: one representative per isomorphism class of the marked
    // boundary (up to rotation/reflection), ordered by canonical code.
    // false: the raw labeled stream in generation order.
    bool dedup = true;
};

// Every near-triangulation with the given outer length and at most
// max_interior interior vertices. Recursive disk triangulation: the
// triangle on a fixed region edge has its apex at an existing boundary
// vertex or a fresh interior vertex; each labeled instance is generated
// exactly once.
void enumerate_near_triangulations(int outer_len, const EnumerateOptions& opts,
                                   const std::function<void(const PlaneGraph&)>& emit);

std::vector<PlaneGraph> enumerate_near_triangulations(int outer_len,
                                                      const EnumerateOptions& opts);

}  // namespace wheelcheck

#endif
