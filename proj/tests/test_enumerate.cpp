#include <doctest.h>

#include <set>

#include "wheelcheck/enumerate.hpp"
#include "wheelcheck/graph.hpp"

using namespace wheelcheck;

namespace {

EnumerateOptions labeled(int m) {
    EnumerateOptions o;
    o.max_interior = m;
    o.dedup = false;
    return o;
}

EnumerateOptions classes(int m) {
    EnumerateOptions o;
    o.max_interior = m;
    o.dedup = true;
    return o;
}

}  // namespace

TEST_CASE("polygon triangulation counts are Catalan") {
    CHECK(enumerate_near_triangulations(3, labeled(0)).size() == 1);
    CHECK(enumerate_near_triangulations(4, labeled(0)).size() == 2);
    CHECK(enumerate_near_triangulations(5, labeled(0)).size() == 5);
    CHECK(enumerate_near_triangulations(6, labeled(0)).size() == 14);
    CHECK(enumerate_near_triangulations(7, labeled(0)).size() == 42);
}

TEST_CASE("dedup by marked-boundary symmetry") {
    CHECK(enumerate_near_triangulations(3, classes(0)).size() == 1);
    CHECK(enumerate_near_triangulations(4, classes(0)).size() == 1);
    // hexagon: fan, strip, central-triangle
    CHECK(enumerate_near_triangulations(6, classes(0)).size() == 3);
}

TEST_CASE("interior vertices") {
    // triangle: bare (i=0) or K4-with-center (i=1)
    auto g1 = enumerate_near_triangulations(3, labeled(1));
    REQUIRE(g1.size() == 2);
    int with_interior = 0;
    for (const auto& g : g1)
        if (g.vertex_count() == 4) ++with_interior;
    CHECK(with_interior == 1);
    CHECK(enumerate_near_triangulations(3, classes(1)).size() == 2);
}

TEST_CASE("every enumerated graph is a valid near-triangulation") {
    for (int k = 3; k <= 6; ++k) {
        for (int m = 0; m <= 2; ++m) {
            auto all = enumerate_near_triangulations(k, labeled(m));
            std::set<std::string> codes;
            for (const auto& g : all) {
                int interior = g.vertex_count() - k;
                CHECK(g.edge_count() == 2 * k + 3 * interior - 3);
                auto rep = validate_near_triangulation(g);
                CHECK(rep.is_near_triangulation);
                for (const auto& f : rep.inner_faces) CHECK(f.size() == 3);
                codes.insert(canonical_code(g));
            }
            // dedup mode agrees with the labeled stream's code classes
            auto reps = enumerate_near_triangulations(k, classes(m));
            CHECK(reps.size() == codes.size());
        }
    }
}

TEST_CASE("instance budget") {
    EnumerateOptions o;
    o.max_interior = 0;
    o.dedup = false;
    o.instance_budget = 5;
    CHECK_THROWS_AS(enumerate_near_triangulations(6, o), Error);
}
