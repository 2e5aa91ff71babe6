#ifndef WHEELCHECK_GRAPH_HPP
#define WHEELCHECK_GRAPH_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wheelcheck/errors.hpp"

namespace wheelcheck {

using VertexId = int;
using EdgePair = std::pair<VertexId, VertexId>;  // normalized a < b

inline EdgePair make_edge(VertexId a, VertexId b) {
    return a < b ? EdgePair{a, b} : EdgePair{b, a};
}

// Ordered outer-cycle triple (v_k, v_1, v_2); the two path edges
// v_k v_1 and v_1 v_2 are the ones deleted before monomial queries.
struct PrincipalPath {
    VertexId vk = -1;
    VertexId v1 = -1;
    VertexId v2 = -1;

    bool operator==(const PrincipalPath&) const = default;
};

// Plane graph given by a rotation system (counter-clockwise neighbor
// order at every vertex) plus a marked outer cycle. After edge surgery
// the outer sequence survives as a marker even when it is no longer a
// cycle of the graph.
class PlaneGraph {
public:
    PlaneGraph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(VertexId a, VertexId b) const { return adj_[idx(a, b)]; }
    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }

    const std::vector<VertexId>& neighbors(VertexId v) const { return rotation_[v]; }
    const std::vector<std::vector<VertexId>>& rotation() const { return rotation_; }
    const std::vector<VertexId>& outer() const { return outer_; }

    bool on_outer(VertexId v) const { return on_outer_[v]; }
    // Position of v on the outer sequence, or -1.
    int outer_position(VertexId v) const { return outer_pos_[v]; }

    std::vector<EdgePair> edges() const;

    // Raw constructor: trusts the caller, only builds derived tables.
    // Validating path is build_plane_graph below.
    static PlaneGraph unchecked(int n, std::vector<std::vector<VertexId>> rotation,
                                std::vector<VertexId> outer);

private:
    size_t idx(VertexId a, VertexId b) const {
        return static_cast<size_t>(a) * n_ + b;
    }

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<VertexId>> rotation_;
    std::vector<VertexId> outer_;
    std::vector<char> adj_;
    std::vector<char> on_outer_;
    std::vector<int> outer_pos_;
};

// Findings of validate_near_triangulation. Chords join non-consecutive
// outer vertices; a separating cycle has nonempty interior and exterior.
struct StructureReport {
    bool is_near_triangulation = false;
    std::vector<EdgePair> chords;
    std::vector<std::vector<VertexId>> separating_triangles;
    std::vector<std::vector<VertexId>> separating_4cycles;
    std::vector<std::vector<VertexId>> inner_faces;
};

// Validates simplicity, rotation consistency, connectivity, Euler count
// and the outer face walk before constructing. Throws Error with one of
// NonSimple / RotationMismatch / OuterNotACycle / EmbeddingInconsistent.
PlaneGraph build_plane_graph(int n, const std::vector<EdgePair>& edges,
                             const std::vector<std::vector<VertexId>>& rotation,
                             const std::vector<VertexId>& outer);

// Every face orbit of the rotation system, as vertex sequences. With CCW
// rotations inner faces come out CCW and the outer face clockwise.
std::vector<std::vector<VertexId>> trace_faces(const PlaneGraph& g);

StructureReport validate_near_triangulation(const PlaneGraph& g);

// Cheap checks used on hot paths: face condition only / chord list only.
bool is_near_triangulation(const PlaneGraph& g);
std::vector<EdgePair> outer_chords(const PlaneGraph& g);

// All cycles of the given length (3 or 4) with at least one vertex
// strictly inside and one strictly outside.
std::vector<std::vector<VertexId>> separating_cycles(const PlaneGraph& g, int len);

// Vertices strictly inside / strictly outside the given cycle (outside
// includes outer-cycle vertices not on it).
std::pair<std::vector<VertexId>, std::vector<VertexId>> cycle_sides(
    const PlaneGraph& g, const std::vector<VertexId>& cycle);

// Throws BadParameter unless the triple lies consecutively on the outer
// cycle with both path edges present.
void require_principal_path(const PlaneGraph& g, const PrincipalPath& p);

// Same vertex set, path edges removed, outer kept as a marker sequence.
PlaneGraph remove_path_edges(const PlaneGraph& g, const PrincipalPath& p);

// Internal-ish helper shared with tests: delete one edge, keep outer marker.
PlaneGraph remove_edge(const PlaneGraph& g, VertexId a, VertexId b);

// One side of a chord split; vertices are re-compacted, to_original maps
// side labels back to the host graph.
struct SplitSide {
    PlaneGraph graph;
    std::vector<VertexId> to_original;
};

// Cuts along a chord of the outer cycle into the two enclosed
// near-triangulations; both sides keep the chord edge. The first side is
// the one whose outer cycle runs a .. b along the original boundary.
std::pair<SplitSide, SplitSide> split_along_chord(const PlaneGraph& g, VertexId a,
                                                  VertexId b);

// Assembles a plane graph from its inner triangle list (vertex order per
// triangle irrelevant; a consistent orientation is inferred from the
// outer cycle).
PlaneGraph plane_graph_from_triangles(int n, const std::vector<VertexId>& outer,
                                      const std::vector<std::array<VertexId, 3>>& triangles);

// Canonical serialization of the embedding, minimized over all
// rotations/reflections of the marked outer cycle. Equal codes ==
// isomorphic respecting the marked boundary.
std::string canonical_code(const PlaneGraph& g);

// --- text interchange ---------------------------------------------------
// Record format: `ptri <n>`, one `outer ...` line, one `rot <v> ...` line
// per vertex (CCW). `#` starts a comment. Edges are implied by rotation.

PlaneGraph read_ptri(std::istream& in);
std::optional<PlaneGraph> read_ptri_optional(std::istream& in);  // empty stream -> nullopt
std::vector<PlaneGraph> read_ptri_stream(std::istream& in);
void write_ptri(std::ostream& out, const PlaneGraph& g);
PlaneGraph read_ptri_file(const std::string& path);

std::string to_dot(const PlaneGraph& g, const PrincipalPath* path = nullptr);

}  // namespace wheelcheck

#endif
