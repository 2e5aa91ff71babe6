#include <doctest.h>

#include <random>

#include "wheelcheck/alon_tarsi.hpp"
#include "wheelcheck/wheels.hpp"

using namespace wheelcheck;

namespace {

PlaneGraph cycle_graph(int k) {
    std::vector<VertexId> outer(k);
    std::vector<std::vector<VertexId>> rot(k);
    std::vector<EdgePair> edges;
    for (int i = 0; i < k; ++i) {
        outer[i] = i;
        rot[i] = {(i + 1) % k, (i + k - 1) % k};
        edges.push_back(make_edge(i, (i + 1) % k));
    }
    return build_plane_graph(k, edges, rot, outer);
}

}  // namespace

TEST_CASE("orientation counts on the triangle") {
    auto t = build_broken_wheel(3);
    auto id3 = identity_ordering(3);
    CHECK(coefficient_by_orientations(t.graph, id3, ExponentVector::of({2, 1, 0})) == 1);
    CHECK(coefficient_by_orientations(t.graph, id3, ExponentVector::of({1, 1, 1})) == 0);
    // wrong total degree -> 0 by contract
    CHECK(coefficient_by_orientations(t.graph, id3, ExponentVector::of({1, 0, 0})) == 0);

    auto r = remove_path_edges(t.graph, t.path);  // single edge (1,2)
    CHECK(coefficient_by_orientations(r, id3, ExponentVector::of({0, 1, 0})) == 1);
    CHECK(coefficient_by_orientations(r, id3, ExponentVector::of({0, 0, 1})) == -1);
}

TEST_CASE("oracle agrees with the polynomial engine") {
    std::mt19937 rng(99);
    for (const auto& built : {build_broken_wheel(3), build_broken_wheel(6),
                              build_ordinary_wheel(4), build_ordinary_wheel(5),
                              build_split_hub_graph(5, 3)}) {
        const auto& g = built.graph;
        int n = g.vertex_count();
        auto ordering = identity_ordering(n);
        std::shuffle(ordering.begin(), ordering.end(), rng);
        auto p = graph_polynomial(g, ordering, CapVector::unbounded(n));
        auto o = orientation_expansion(g, ordering);
        REQUIRE(p.terms().size() == o.terms().size());
        for (size_t i = 0; i < p.terms().size(); ++i) {
            CHECK(p.terms()[i].exps == o.terms()[i].exps);
            CHECK(p.terms()[i].coeff == o.terms()[i].coeff);
        }
        // spot-check the single-vector API against both
        for (int trial = 0; trial < 5 && !p.terms().empty(); ++trial) {
            const auto& t = p.terms()[rng() % p.terms().size()];
            CHECK(coefficient_by_orientations(g, ordering, t.exps) == t.coeff);
        }
    }
}

TEST_CASE("at_number derived values") {
    CHECK(at_number(cycle_graph(4)) == 2);
    CHECK(at_number(cycle_graph(5)) == 3);
    CHECK(at_number(build_ordinary_wheel(3).graph) == 4);  // K4
    CHECK(at_number(build_broken_wheel(3).graph) == 3);    // triangle
    CHECK(at_number(build_ordinary_wheel(5).graph) <= 5);
}

TEST_CASE("edge budget") {
    auto w = build_ordinary_wheel(5);
    CHECK_THROWS_AS(coefficient_by_orientations(w.graph, identity_ordering(6),
                                                ExponentVector(6), 3),
                    Error);
    CHECK_THROWS_AS(at_number(w.graph, 3), Error);
}
