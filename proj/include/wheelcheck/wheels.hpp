#ifndef WHEELCHECK_WHEELS_HPP
#define WHEELCHECK_WHEELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wheelcheck/graph.hpp"

namespace wheelcheck {

struct WheelComponentSpec {
    enum class Kind { Ordinary, Broken };
    Kind kind;
    // Rim length for Ordinary, total vertex count for Broken.
    int size;
};

// Declarative wheel description. One component is an ordinary or broken
// wheel on its own; two or more make a multiple wheel, glued left to
// right by identifying the central vertex and one principal edge per
// junction.
struct WheelSpec {
    std::vector<WheelComponentSpec> components;

    bool is_generalized() const;

    // Text syntax: `B<k>` / `O<r>` joined by `+`, e.g. "B6+O5+B4".
    static WheelSpec parse(const std::string& text);
    std::string to_string() const;
};

struct BuiltWheel {
    PlaneGraph graph;
    PrincipalPath path;
    bool is_generalized = false;
    // A chain of broken components only, which is just a broken wheel.
    bool collapses_to_broken = false;
};

BuiltWheel build_ordinary_wheel(int rim_len);
BuiltWheel build_broken_wheel(int k);
BuiltWheel build_multiple_wheel(const WheelSpec& spec);
// Dispatches on component count.
BuiltWheel build_wheel(const WheelSpec& spec);

// Outer cycle v_1..v_k, interior u adjacent to v and v_1..v_i, interior v
// adjacent to u and v_i..v_k,v_1.
BuiltWheel build_split_hub_graph(int k, int i);

struct WheelComponentWitness {
    WheelComponentSpec::Kind kind;
    // The component's rim on the host outer cycle, ordered from the v_2
    // side to the v_k side. Consecutive rim vertices are adjacent in the
    // host (outer edges or chords), so arc vertices may be skipped;
    // endpoints are split points adjacent to the central vertex.
    std::vector<VertexId> segment;
    VertexId hub = -1;  // set for Ordinary components
};

// A located generalized-wheel subgraph: central vertex (the image of
// v_1), the principal path, and the component chain along the boundary.
struct WheelWitness {
    VertexId central = -1;
    PrincipalPath path;
    std::vector<WheelComponentWitness> components;
    bool degenerate_triangle = false;  // v_2 ~ v_k, triangle as broken wheel

    std::vector<EdgePair> edges() const;
    // All wheel vertices are distinct and every wheel edge is in the host.
    bool validate(const PlaneGraph& host) const;
};

// Exhaustive search for a generalized-wheel subgraph with the given
// principal path and all wheel-boundary vertices on the host outer
// cycle. Minimizes component count, then split points lexicographically.
std::optional<WheelWitness> find_generalized_wheel(const PlaneGraph& g, const PrincipalPath& p);

}  // namespace wheelcheck

#endif
