#ifndef WHEELCHECK_COLORING_HPP
#define WHEELCHECK_COLORING_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "wheelcheck/poly.hpp"

namespace wheelcheck {

struct ListAssignment {
    std::vector<std::vector<int>> lists;  // nonempty color set per vertex
};

struct ColoringOptions {
    long long node_budget = 10'000'000;
};

// Proper coloring from the lists via exhaustive backtracking
// (smallest-list-first, then lowest index), or nullopt.
std::optional<std::vector<int>> list_colorable(const PlaneGraph& g, const ListAssignment& L,
                                               const ColoringOptions& opts = {});

struct CnCheckReport {
    long long trials = 0;
    long long failures = 0;
    uint64_t seed = 0;
    std::vector<ListAssignment> failing;  // fatal inconsistency evidence
    bool ok() const { return failures == 0; }
};

// Combinatorial Nullstellensatz bridge: every list assignment with
// |L(v)| = exponent(v)+1 must be colorable when `term` is a nonzero term
// of P(G) (caller-attested). Random mode samples from the color universe
// 1..2*max(list length); per-trial seeds derive from `seed`.
CnCheckReport cn_implication_check(const PlaneGraph& g, const ExponentVector& term,
                                   long long trials, uint64_t seed,
                                   const ColoringOptions& opts = {});

// Exhaustive mode over all assignments from the universe 1..max_color.
CnCheckReport cn_implication_check_exhaustive(const PlaneGraph& g, const ExponentVector& term,
                                              int max_color, const ColoringOptions& opts = {});

enum class ColourRelation { AlwaysEqual, AlwaysDifferent, Neither };

// Classification of x,y over all proper 3-colorings, by exhaustive
// enumeration. Throws NotThreeColorable when none exist.
ColourRelation colour_relation(const PlaneGraph& g, VertexId x, VertexId y);

// File format: `lists` header, then one `<v>: c1 c2 ...` line per vertex.
ListAssignment read_lists(std::istream& in, int n);
void write_lists(std::ostream& out, const ListAssignment& L);

}  // namespace wheelcheck

#endif
