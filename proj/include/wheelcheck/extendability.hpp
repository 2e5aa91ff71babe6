#ifndef WHEELCHECK_EXTENDABILITY_HPP
#define WHEELCHECK_EXTENDABILITY_HPP

#include <optional>
#include <string>

#include "wheelcheck/poly.hpp"
#include "wheelcheck/wheels.hpp"

namespace wheelcheck {

// Exponent caps of the main theorem: principal-path vertices, other
// boundary vertices, interior vertices. The statement fixes 0/2/4;
// exposed for experimentation.
struct ExtendCaps {
    int path = 0;
    int boundary = 2;
    int interior = 4;
};

// Outcome of the main-theorem check: a witness monomial or a located
// generalized wheel, never both, never neither.
struct Verdict {
    enum class Outcome { Extendable, Blocked };
    Outcome outcome = Outcome::Extendable;
    std::optional<Term> witness;        // set when Extendable
    std::optional<WheelWitness> wheel;  // set when Blocked
    bool both_checks_ran = true;

    bool extendable() const { return outcome == Outcome::Extendable; }
};

// Runs both the monomial search on P(G - path) under 0/2/4 caps and the
// generalized-wheel recognizer; exactly one must succeed, anything else
// throws TheoremViolation with a reproducible dump.
Verdict check_3path_extendable(const PlaneGraph& g, const PrincipalPath& p,
                               const ExtendCaps& caps = {});

// Witness with x^0 y^0, other boundary <= 2, interior <= 4 in P(G - xy);
// guaranteed for near-triangulations, absence is a TheoremViolation.
Term check_2path_witness(const PlaneGraph& g, VertexId x, VertexId y);

// Witness with all boundary exponents 0 and interior <= 4 in
// P(G - E(C(G))). Requires |C| in {3,4,5}, no chord, and for |C| = 5 no
// interior vertex adjacent to the whole outer cycle.
Term check_short_outer_cycle(const PlaneGraph& g);

// Lift of a boundary monomial: a term of P(G) with exactly the boundary
// exponents of boundary_term and interior <= 4. Same hypotheses as
// check_short_outer_cycle; boundary_term must be a term of P(C(G)).
Term check_small_cycle_lift(const PlaneGraph& g, const ExponentVector& boundary_term);

// Witness with path exponents 0, boundary <= 2, interior <= 4 in
// P(wheel - path - e) for a non-outer edge e of a generalized wheel with
// boundary > 4 and no rim-3 ordinary component.
Term check_wheel_minus_edge(const WheelSpec& spec, EdgePair e);

// All terms of P(G - path) with path exponents 0, other boundary <= 2,
// u <= 3 and remaining interior <= 4.
std::vector<Term> u_special_monomials(const PlaneGraph& g, const PrincipalPath& p, VertexId u);

struct LemmaInstance {
    std::vector<int> params;
    bool pass = false;
    std::string detail;  // failure explanation with a reproducible dump
};

struct LemmaReport {
    std::string lemma;
    std::vector<LemmaInstance> instances;
    bool all_pass() const {
        for (const auto& i : instances)
            if (!i.pass) return false;
        return true;
    }
};

// Machine verification of one named lemma over a parameter range.
// Ids: signsymmetry, 012, 030, final, no_030_even, all_040_even,
// even_wheels, odd_wheels, all_121_odd, broken5, ordinary2k1.
LemmaReport verify_lemma(const std::string& id, int k_lo, int k_hi);

const std::vector<std::string>& lemma_ids();

}  // namespace wheelcheck

#endif
