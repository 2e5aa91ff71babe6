#include "wheelcheck/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace wheelcheck {

PlaneGraph PlaneGraph::unchecked(int n, std::vector<std::vector<VertexId>> rotation,
                                 std::vector<VertexId> outer) {
    PlaneGraph g;
    g.n_ = n;
    g.rotation_ = std::move(rotation);
    g.outer_ = std::move(outer);
    g.adj_.assign(static_cast<size_t>(n) * n, 0);
    g.on_outer_.assign(n, 0);
    g.outer_pos_.assign(n, -1);
    int twice_edges = 0;
    for (VertexId v = 0; v < n; ++v) {
        twice_edges += static_cast<int>(g.rotation_[v].size());
        for (VertexId u : g.rotation_[v]) g.adj_[g.idx(v, u)] = 1;
    }
    g.edge_count_ = twice_edges / 2;
    for (size_t i = 0; i < g.outer_.size(); ++i) {
        g.on_outer_[g.outer_[i]] = 1;
        g.outer_pos_[g.outer_[i]] = static_cast<int>(i);
    }
    return g;
}

std::vector<EdgePair> PlaneGraph::edges() const {
    std::vector<EdgePair> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < n_; ++v)
        for (VertexId u : rotation_[v])
            if (v < u) out.emplace_back(v, u);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Position of u in rotation[v]; -1 if absent.
int rot_index(const std::vector<VertexId>& rot, VertexId u) {
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == u) return static_cast<int>(i);
    return -1;
}

// Face successor: arriving at v from u, leave along the CCW-predecessor
// of u at v. Traces every face as a directed cycle with the face on the
// left; inner faces come out CCW.
std::pair<VertexId, VertexId> face_next(const PlaneGraph& g, VertexId u, VertexId v) {
    const auto& rot = g.neighbors(v);
    int i = rot_index(rot, u);
    assert(i >= 0);
    int d = static_cast<int>(rot.size());
    return {v, rot[(i + d - 1) % d]};
}

std::vector<VertexId> face_orbit(const PlaneGraph& g, VertexId u, VertexId v) {
    std::vector<VertexId> orbit;
    VertexId a = u, b = v;
    do {
        orbit.push_back(a);
        auto [na, nb] = face_next(g, a, b);
        a = na;
        b = nb;
    } while (!(a == u && b == v));
    return orbit;
}

bool is_connected(int n, const std::vector<std::vector<VertexId>>& rotation) {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : rotation[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

// True when `walk` is a rotation of `target` (both read forward).
bool cyclic_equal(const std::vector<VertexId>& walk, const std::vector<VertexId>& target) {
    if (walk.size() != target.size()) return false;
    size_t k = target.size();
    for (size_t s = 0; s < k; ++s) {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i)
            if (walk[(s + i) % k] != target[i]) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace

PlaneGraph build_plane_graph(int n, const std::vector<EdgePair>& edges,
                             const std::vector<std::vector<VertexId>>& rotation,
                             const std::vector<VertexId>& outer) {
    if (n < 1) throw Error(ErrorCode::BadParameter, "vertex count must be positive");

    auto in_range = [n](VertexId v) { return v >= 0 && v < n; };

    std::set<EdgePair> edge_set;
    for (auto [a, b] : edges) {
        if (!in_range(a) || !in_range(b))
            throw Error(ErrorCode::BadParameter, "edge endpoint out of range");
        if (a == b) throw Error(ErrorCode::NonSimple, "loop edge");
        if (!edge_set.insert(make_edge(a, b)).second)
            throw Error(ErrorCode::NonSimple, "duplicate edge");
    }

    if (static_cast<int>(rotation.size()) != n)
        throw Error(ErrorCode::RotationMismatch, "rotation must list every vertex");
    std::set<EdgePair> rot_edges;
    std::vector<int> half_count(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        std::set<VertexId> seen;
        for (VertexId u : rotation[v]) {
            if (!in_range(u))
                throw Error(ErrorCode::RotationMismatch, "rotation neighbor out of range");
            if (u == v) throw Error(ErrorCode::NonSimple, "vertex lists itself as neighbor");
            if (!seen.insert(u).second)
                throw Error(ErrorCode::NonSimple, "neighbor repeated in rotation");
            rot_edges.insert(make_edge(v, u));
            ++half_count[v];
        }
    }
    if (rot_edges != edge_set)
        throw Error(ErrorCode::RotationMismatch, "rotation does not cover exactly the edge set");
    // Symmetry: every edge contributes one entry at each endpoint.
    int total_halves = 0;
    for (int c : half_count) total_halves += c;
    if (total_halves != 2 * static_cast<int>(edge_set.size()))
        throw Error(ErrorCode::RotationMismatch, "rotation entries are not symmetric");
    for (auto [a, b] : edge_set)
        if (rot_index(rotation[a], b) < 0 || rot_index(rotation[b], a) < 0)
            throw Error(ErrorCode::RotationMismatch, "edge missing from one endpoint's rotation");

    if (outer.size() < 3) throw Error(ErrorCode::OuterNotACycle, "outer cycle needs >= 3 vertices");
    std::set<VertexId> outer_seen;
    for (size_t i = 0; i < outer.size(); ++i) {
        VertexId v = outer[i];
        if (!in_range(v)) throw Error(ErrorCode::OuterNotACycle, "outer vertex out of range");
        if (!outer_seen.insert(v).second)
            throw Error(ErrorCode::OuterNotACycle, "outer vertex repeated");
        VertexId w = outer[(i + 1) % outer.size()];
        if (!edge_set.count(make_edge(v, w)))
            throw Error(ErrorCode::OuterNotACycle, "consecutive outer vertices not adjacent");
    }

    if (!is_connected(n, rotation))
        throw Error(ErrorCode::EmbeddingInconsistent, "graph is not connected");

    PlaneGraph g = PlaneGraph::unchecked(n, rotation, outer);

    // Count face orbits and find the outer one.
    std::set<std::pair<VertexId, VertexId>> visited;
    int faces = 0;
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : g.neighbors(v))
            if (!visited.count({v, u})) {
                auto orbit = face_orbit(g, v, u);
                ++faces;
                for (size_t i = 0; i < orbit.size(); ++i)
                    visited.insert({orbit[i], orbit[(i + 1) % orbit.size()]});
            }
    if (n - g.edge_count() + faces != 2)
        throw Error(ErrorCode::EmbeddingInconsistent, "rotation system is not planar (Euler)");

    // The face left of (outer[1] -> outer[0]) must be the outer face,
    // i.e. the reversed outer cycle.
    auto outer_walk = face_orbit(g, outer[1], outer[0]);
    std::vector<VertexId> reversed(outer.rbegin(), outer.rend());
    if (!cyclic_equal(outer_walk, reversed))
        throw Error(ErrorCode::EmbeddingInconsistent,
                    "face walk contradicts outer cycle (is it counter-clockwise?)");

    return g;
}

std::vector<std::vector<VertexId>> trace_faces(const PlaneGraph& g) {
    std::vector<std::vector<VertexId>> out;
    std::set<std::pair<VertexId, VertexId>> visited;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId u : g.neighbors(v))
            if (!visited.count({v, u})) {
                auto orbit = face_orbit(g, v, u);
                for (size_t i = 0; i < orbit.size(); ++i)
                    visited.insert({orbit[i], orbit[(i + 1) % orbit.size()]});
                out.push_back(std::move(orbit));
            }
    return out;
}

namespace {

// Splits the face list into (outer face index, inner faces) using the
// directed edge (outer[1] -> outer[0]) as the outer-face anchor.
int outer_face_index(const PlaneGraph& g, const std::vector<std::vector<VertexId>>& faces) {
    const auto& outer = g.outer();
    for (size_t f = 0; f < faces.size(); ++f) {
        const auto& orb = faces[f];
        for (size_t i = 0; i < orb.size(); ++i)
            if (orb[i] == outer[1] && orb[(i + 1) % orb.size()] == outer[0])
                return static_cast<int>(f);
    }
    throw Error(ErrorCode::EmbeddingInconsistent, "outer face not found");
}

}  // namespace

StructureReport validate_near_triangulation(const PlaneGraph& g) {
    StructureReport rep;
    auto faces = trace_faces(g);
    int outer_idx = outer_face_index(g, faces);
    rep.is_near_triangulation = true;
    for (size_t f = 0; f < faces.size(); ++f) {
        if (static_cast<int>(f) == outer_idx) continue;
        rep.inner_faces.push_back(faces[f]);
        if (faces[f].size() != 3) rep.is_near_triangulation = false;
    }

    rep.chords = outer_chords(g);
    rep.separating_triangles = separating_cycles(g, 3);
    rep.separating_4cycles = separating_cycles(g, 4);
    return rep;
}

bool is_near_triangulation(const PlaneGraph& g) {
    auto faces = trace_faces(g);
    int outer_idx = outer_face_index(g, faces);
    for (size_t f = 0; f < faces.size(); ++f)
        if (static_cast<int>(f) != outer_idx && faces[f].size() != 3) return false;
    return true;
}

std::vector<EdgePair> outer_chords(const PlaneGraph& g) {
    std::vector<EdgePair> chords;
    int k = static_cast<int>(g.outer().size());
    for (auto [a, b] : g.edges()) {
        if (!g.on_outer(a) || !g.on_outer(b)) continue;
        int d = std::abs(g.outer_position(a) - g.outer_position(b));
        if (d != 1 && d != k - 1) chords.emplace_back(a, b);
    }
    return chords;
}

// Vertices strictly inside / strictly outside the given cycle, found by
// flooding faces from the outer face across edges not on the cycle.
std::pair<std::vector<VertexId>, std::vector<VertexId>> cycle_sides(
    const PlaneGraph& g, const std::vector<VertexId>& cycle) {
    auto faces = trace_faces(g);
    int outer_idx = outer_face_index(g, faces);

    std::set<EdgePair> cycle_edges;
    std::set<VertexId> cycle_verts(cycle.begin(), cycle.end());
    for (size_t i = 0; i < cycle.size(); ++i)
        cycle_edges.insert(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));

    // edge -> incident faces
    std::map<EdgePair, std::vector<int>> edge_faces;
    for (size_t f = 0; f < faces.size(); ++f)
        for (size_t i = 0; i < faces[f].size(); ++i)
            edge_faces[make_edge(faces[f][i], faces[f][(i + 1) % faces[f].size()])].push_back(
                static_cast<int>(f));

    std::vector<char> outside(faces.size(), 0);
    std::vector<int> stack{outer_idx};
    outside[outer_idx] = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        const auto& orb = faces[f];
        for (size_t i = 0; i < orb.size(); ++i) {
            EdgePair e = make_edge(orb[i], orb[(i + 1) % orb.size()]);
            if (cycle_edges.count(e)) continue;
            for (int f2 : edge_faces[e])
                if (!outside[f2]) {
                    outside[f2] = 1;
                    stack.push_back(f2);
                }
        }
    }

    std::set<VertexId> in_set, out_set;
    for (size_t f = 0; f < faces.size(); ++f)
        for (VertexId v : faces[f]) {
            if (cycle_verts.count(v)) continue;
            (outside[f] ? out_set : in_set).insert(v);
        }
    return {std::vector<VertexId>(in_set.begin(), in_set.end()),
            std::vector<VertexId>(out_set.begin(), out_set.end())};
}

namespace {

std::vector<VertexId> normalize_cycle(std::vector<VertexId> c) {
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
    if (c.size() > 2 && c[1] > c.back()) {
        std::reverse(c.begin() + 1, c.end());
    }
    return c;
}

}  // namespace

std::vector<std::vector<VertexId>> separating_cycles(const PlaneGraph& g, int len) {
    if (len != 3 && len != 4)
        throw Error(ErrorCode::UnsupportedLength, "only lengths 3 and 4 are supported");

    int n = g.vertex_count();
    std::set<std::vector<VertexId>> cycles;
    if (len == 3) {
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b) {
                if (!g.adjacent(a, b)) continue;
                for (VertexId c = b + 1; c < n; ++c)
                    if (g.adjacent(a, c) && g.adjacent(b, c))
                        cycles.insert({a, b, c});
            }
    } else {
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = 0; b < n; ++b) {
                if (b == a || !g.adjacent(a, b)) continue;
                for (VertexId c = 0; c < n; ++c) {
                    if (c == a || c == b || !g.adjacent(b, c)) continue;
                    for (VertexId d = 0; d < n; ++d) {
                        if (d == a || d == b || d == c) continue;
                        if (g.adjacent(c, d) && g.adjacent(d, a))
                            cycles.insert(normalize_cycle({a, b, c, d}));
                    }
                }
            }
    }

    std::vector<std::vector<VertexId>> out;
    for (const auto& c : cycles) {
        auto [inside, outside] = cycle_sides(g, c);
        if (!inside.empty() && !outside.empty()) out.push_back(c);
    }
    return out;
}

void require_principal_path(const PlaneGraph& g, const PrincipalPath& p) {
    auto in_range = [&](VertexId v) { return v >= 0 && v < g.vertex_count(); };
    if (!in_range(p.vk) || !in_range(p.v1) || !in_range(p.v2))
        throw Error(ErrorCode::BadParameter, "principal path vertex out of range");
    if (!g.on_outer(p.v1) || !g.on_outer(p.v2) || !g.on_outer(p.vk))
        throw Error(ErrorCode::BadParameter, "principal path must lie on the outer cycle");
    const auto& outer = g.outer();
    int k = static_cast<int>(outer.size());
    int pos1 = g.outer_position(p.v1);
    VertexId nxt = outer[(pos1 + 1) % k], prv = outer[(pos1 + k - 1) % k];
    if (!((nxt == p.v2 && prv == p.vk) || (nxt == p.vk && prv == p.v2)))
        throw Error(ErrorCode::BadParameter, "principal path vertices must be consecutive");
    if (!g.adjacent(p.vk, p.v1) || !g.adjacent(p.v1, p.v2))
        throw Error(ErrorCode::BadParameter, "principal path edges missing");
}

PlaneGraph remove_edge(const PlaneGraph& g, VertexId a, VertexId b) {
    if (!g.adjacent(a, b)) throw Error(ErrorCode::MissingPathEdge, "edge not present");
    auto rotation = g.rotation();
    std::erase(rotation[a], b);
    std::erase(rotation[b], a);
    return PlaneGraph::unchecked(g.vertex_count(), std::move(rotation), g.outer());
}

PlaneGraph remove_path_edges(const PlaneGraph& g, const PrincipalPath& p) {
    if (!g.adjacent(p.vk, p.v1) || !g.adjacent(p.v1, p.v2))
        throw Error(ErrorCode::MissingPathEdge, "principal path edge not present");
    return remove_edge(remove_edge(g, p.vk, p.v1), p.v1, p.v2);
}

std::pair<SplitSide, SplitSide> split_along_chord(const PlaneGraph& g, VertexId a, VertexId b) {
    if (!g.on_outer(a) || !g.on_outer(b) || !g.adjacent(a, b))
        throw Error(ErrorCode::NotAChord, "chord must join two outer-cycle vertices");
    const auto& outer = g.outer();
    int k = static_cast<int>(outer.size());
    int pa = g.outer_position(a), pb = g.outer_position(b);
    int d = std::abs(pa - pb);
    if (d == 1 || d == k - 1) throw Error(ErrorCode::NotAChord, "outer edge is not a chord");

    auto faces = trace_faces(g);
    int outer_idx = outer_face_index(g, faces);
    EdgePair chord = make_edge(a, b);

    std::map<EdgePair, std::vector<int>> edge_faces;
    for (size_t f = 0; f < faces.size(); ++f) {
        if (static_cast<int>(f) == outer_idx) continue;
        for (size_t i = 0; i < faces[f].size(); ++i)
            edge_faces[make_edge(faces[f][i], faces[f][(i + 1) % faces[f].size()])].push_back(
                static_cast<int>(f));
    }
    const auto& chord_faces = edge_faces[chord];
    assert(chord_faces.size() == 2);

    // Flood inner faces from one chord face without crossing the chord.
    std::vector<int> region(faces.size(), -1);
    for (int which = 0; which < 2; ++which) {
        std::vector<int> stack{chord_faces[which]};
        region[chord_faces[which]] = which;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            const auto& orb = faces[f];
            for (size_t i = 0; i < orb.size(); ++i) {
                EdgePair e = make_edge(orb[i], orb[(i + 1) % orb.size()]);
                if (e == chord) continue;
                for (int f2 : edge_faces[e])
                    if (region[f2] < 0) {
                        region[f2] = which;
                        stack.push_back(f2);
                    }
            }
        }
    }

    // Boundary arcs: a..b forward along the outer cycle, and b..a.
    std::vector<VertexId> arc_fwd, arc_bwd;
    for (int i = pa;; i = (i + 1) % k) {
        arc_fwd.push_back(outer[i]);
        if (i == pb) break;
    }
    for (int i = pb;; i = (i + 1) % k) {
        arc_bwd.push_back(outer[i]);
        if (i == pa) break;
    }

    auto build_side = [&](int which, const std::vector<VertexId>& arc) -> SplitSide {
        std::set<VertexId> verts(arc.begin(), arc.end());
        std::set<EdgePair> side_edges{chord};
        for (size_t f = 0; f < faces.size(); ++f) {
            if (region[f] != which) continue;
            for (size_t i = 0; i < faces[f].size(); ++i) {
                verts.insert(faces[f][i]);
                side_edges.insert(make_edge(faces[f][i], faces[f][(i + 1) % faces[f].size()]));
            }
        }
        std::vector<VertexId> to_original(verts.begin(), verts.end());
        std::vector<int> to_local(g.vertex_count(), -1);
        for (size_t i = 0; i < to_original.size(); ++i) to_local[to_original[i]] = (int)i;

        std::vector<EdgePair> edges;
        for (auto [x, y] : side_edges) edges.push_back(make_edge(to_local[x], to_local[y]));

        std::vector<std::vector<VertexId>> rotation(to_original.size());
        for (size_t i = 0; i < to_original.size(); ++i)
            for (VertexId u : g.neighbors(to_original[i]))
                if (to_local[u] >= 0 && side_edges.count(make_edge(to_original[i], u)))
                    rotation[i].push_back(to_local[u]);

        std::vector<VertexId> side_outer;
        for (VertexId v : arc) side_outer.push_back(to_local[v]);
        return {build_plane_graph(static_cast<int>(to_original.size()), edges, rotation,
                                  side_outer),
                to_original};
    };

    // The side whose region contains the first forward-arc edge gets the
    // forward arc as its boundary.
    EdgePair first_fwd = make_edge(arc_fwd[0], arc_fwd[1]);
    int fwd_region = -1;
    for (int f2 : edge_faces[first_fwd]) fwd_region = region[f2];
    assert(fwd_region >= 0);

    SplitSide s1 = build_side(fwd_region, arc_fwd);
    SplitSide s2 = build_side(1 - fwd_region, arc_bwd);
    return {std::move(s1), std::move(s2)};
}

PlaneGraph plane_graph_from_triangles(int n, const std::vector<VertexId>& outer,
                                      const std::vector<std::array<VertexId, 3>>& triangles) {
    int k = static_cast<int>(outer.size());
    std::map<EdgePair, std::vector<int>> edge_tris;
    for (size_t t = 0; t < triangles.size(); ++t) {
        const auto& tr = triangles[t];
        for (int i = 0; i < 3; ++i)
            edge_tris[make_edge(tr[i], tr[(i + 1) % 3])].push_back(static_cast<int>(t));
    }
    for (const auto& [e, ts] : edge_tris)
        if (ts.size() > 2)
            throw Error(ErrorCode::EmbeddingInconsistent, "edge shared by more than two triangles");

    std::set<EdgePair> boundary;
    for (int i = 0; i < k; ++i) boundary.insert(make_edge(outer[i], outer[(i + 1) % k]));

    // Orient triangles consistently: the one on the first outer edge gets
    // the forward direction, neighbors propagate reversed shared edges.
    std::vector<std::array<VertexId, 3>> oriented(triangles.size());
    std::vector<char> done(triangles.size(), 0);
    EdgePair seed_edge = make_edge(outer[0], outer[1]);
    auto it = edge_tris.find(seed_edge);
    if (it == edge_tris.end() || it->second.size() != 1)
        throw Error(ErrorCode::EmbeddingInconsistent, "outer edge not covered by one triangle");

    auto orient_containing = [](const std::array<VertexId, 3>& tr, VertexId x,
                                VertexId y) -> std::array<VertexId, 3> {
        // Rotate/flip so the directed edge (x, y) appears.
        for (int i = 0; i < 3; ++i) {
            if (tr[i] == x && tr[(i + 1) % 3] == y)
                return {tr[i], tr[(i + 1) % 3], tr[(i + 2) % 3]};
            if (tr[i] == y && tr[(i + 1) % 3] == x)
                return {tr[(i + 1) % 3], tr[i], tr[(i + 2) % 3]};
        }
        throw Error(ErrorCode::EmbeddingInconsistent, "triangle does not contain edge");
    };

    int seed = it->second[0];
    oriented[seed] = orient_containing(triangles[seed], outer[0], outer[1]);
    done[seed] = 1;
    std::vector<int> stack{seed};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        const auto& tr = oriented[t];
        for (int i = 0; i < 3; ++i) {
            VertexId x = tr[i], y = tr[(i + 1) % 3];
            for (int t2 : edge_tris[make_edge(x, y)]) {
                if (t2 == t) continue;
                auto o2 = orient_containing(triangles[t2], y, x);
                if (done[t2]) {
                    bool same = false;
                    for (int s = 0; s < 3; ++s)
                        if (oriented[t2][s] == o2[0] && oriented[t2][(s + 1) % 3] == o2[1]) same = true;
                    if (!same)
                        throw Error(ErrorCode::EmbeddingInconsistent,
                                    "triangle orientations conflict");
                } else {
                    oriented[t2] = o2;
                    done[t2] = 1;
                    stack.push_back(t2);
                }
            }
        }
    }
    for (char c : done)
        if (!c) throw Error(ErrorCode::EmbeddingInconsistent, "triangle set is not edge-connected");

    // succ[v][a] = b for each CCW triangle (v, a, b): b follows a in the
    // CCW rotation at v.
    std::vector<std::map<VertexId, VertexId>> succ(n);
    std::vector<std::set<VertexId>> nbrs(n);
    for (const auto& tr : oriented)
        for (int i = 0; i < 3; ++i) {
            VertexId v = tr[i], a1 = tr[(i + 1) % 3], b1 = tr[(i + 2) % 3];
            succ[v][a1] = b1;
            nbrs[v].insert(a1);
            nbrs[v].insert(b1);
        }

    std::vector<int> pos_on_outer(n, -1);
    for (int i = 0; i < k; ++i) pos_on_outer[outer[i]] = i;

    std::vector<std::vector<VertexId>> rotation(n);
    for (VertexId v = 0; v < n; ++v) {
        if (nbrs[v].empty()) throw Error(ErrorCode::EmbeddingInconsistent, "isolated vertex");
        VertexId start;
        if (pos_on_outer[v] >= 0) {
            start = outer[(pos_on_outer[v] + 1) % k];  // chain begins at outer successor
        } else {
            start = *nbrs[v].begin();
        }
        VertexId cur = start;
        for (size_t cnt = 0; cnt < nbrs[v].size(); ++cnt) {
            rotation[v].push_back(cur);
            auto itn = succ[v].find(cur);
            if (itn == succ[v].end()) {
                if (cnt + 1 != nbrs[v].size())
                    throw Error(ErrorCode::EmbeddingInconsistent, "rotation chain broken");
                break;
            }
            cur = itn->second;
        }
        if (rotation[v].size() != nbrs[v].size())
            throw Error(ErrorCode::EmbeddingInconsistent, "rotation chain incomplete");
    }

    std::vector<EdgePair> edges;
    for (const auto& [e, ts] : edge_tris) edges.push_back(e);
    return build_plane_graph(n, edges, rotation, outer);
}

std::string canonical_code(const PlaneGraph& g) {
    const auto& outer = g.outer();
    int n = g.vertex_count();
    int k = static_cast<int>(outer.size());

    std::vector<int> best;
    for (int s = 0; s < k; ++s) {
        for (int dir : {+1, -1}) {
            std::vector<int> label(n, -1);
            std::vector<VertexId> by_label(n, -1);
            for (int t = 0; t < k; ++t) {
                VertexId v = outer[((s + dir * t) % k + k) % k];
                label[v] = t;
                by_label[t] = v;
            }
            int next = k;
            // Deterministic sweep: process vertices in label order, walking
            // each rotation (reflections walk it reversed) from the
            // smallest-labelled neighbor.
            for (int l = 0; l < n; ++l) {
                VertexId v = by_label[l];
                assert(v >= 0);
                const auto& rot = g.neighbors(v);
                int deg = static_cast<int>(rot.size());
                int anchor = -1, anchor_label = n + 1;
                for (int i = 0; i < deg; ++i)
                    if (label[rot[i]] >= 0 && label[rot[i]] < anchor_label) {
                        anchor_label = label[rot[i]];
                        anchor = i;
                    }
                assert(anchor >= 0);
                for (int t = 0; t < deg; ++t) {
                    VertexId u = rot[((anchor + dir * t) % deg + deg) % deg];
                    if (label[u] < 0) {
                        label[u] = next;
                        by_label[next] = u;
                        ++next;
                    }
                }
            }
            assert(next == n);

            std::vector<int> code{n, k};
            for (int l = 0; l < n; ++l) {
                VertexId v = by_label[l];
                const auto& rot = g.neighbors(v);
                int deg = static_cast<int>(rot.size());
                int anchor = 0, anchor_label = n + 1;
                for (int i = 0; i < deg; ++i)
                    if (label[rot[i]] < anchor_label) {
                        anchor_label = label[rot[i]];
                        anchor = i;
                    }
                code.push_back(deg);
                for (int t = 0; t < deg; ++t)
                    code.push_back(label[rot[((anchor + dir * t) % deg + deg) % deg]]);
            }
            if (best.empty() || code < best) best = std::move(code);
        }
    }

    std::ostringstream os;
    for (size_t i = 0; i < best.size(); ++i) {
        if (i) os << ' ';
        os << best[i];
    }
    return os.str();
}

// --- text interchange ----------------------------------------------------

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool next_tokens(std::istream& in, std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        tokens.clear();
        std::string t;
        while (ls >> t) tokens.push_back(t);
        if (!tokens.empty()) return true;
    }
    return false;
}

int parse_int(const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "expected integer, got '" + s + "'");
    }
}

}  // namespace

std::optional<PlaneGraph> read_ptri_optional(std::istream& in) {
    std::vector<std::string> tok;
    if (!next_tokens(in, tok)) return std::nullopt;
    if (tok.size() != 2 || tok[0] != "ptri")
        throw Error(ErrorCode::ParseError, "expected 'ptri <n>' header");
    int n = parse_int(tok[1]);
    if (n < 1) throw Error(ErrorCode::ParseError, "vertex count must be positive");

    std::vector<VertexId> outer;
    std::vector<std::vector<VertexId>> rotation(n);
    std::vector<char> have_rot(n, 0);
    bool have_outer = false;
    int rot_lines = 0;
    while (rot_lines < n || !have_outer) {
        if (!next_tokens(in, tok)) throw Error(ErrorCode::ParseError, "truncated ptri record");
        if (tok[0] == "outer") {
            if (have_outer) throw Error(ErrorCode::ParseError, "duplicate outer line");
            for (size_t i = 1; i < tok.size(); ++i) outer.push_back(parse_int(tok[i]));
            have_outer = true;
        } else if (tok[0] == "rot") {
            if (tok.size() < 2) throw Error(ErrorCode::ParseError, "rot line needs a vertex");
            int v = parse_int(tok[1]);
            if (v < 0 || v >= n) throw Error(ErrorCode::ParseError, "rot vertex out of range");
            if (have_rot[v]) throw Error(ErrorCode::ParseError, "duplicate rot line");
            have_rot[v] = 1;
            ++rot_lines;
            for (size_t i = 2; i < tok.size(); ++i) rotation[v].push_back(parse_int(tok[i]));
        } else {
            throw Error(ErrorCode::ParseError, "unexpected line '" + tok[0] + "'");
        }
    }

    std::set<EdgePair> edge_set;
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : rotation[v]) {
            if (u < 0 || u >= n) throw Error(ErrorCode::ParseError, "neighbor out of range");
            edge_set.insert(make_edge(v, u));
        }
    return build_plane_graph(n, {edge_set.begin(), edge_set.end()}, rotation, outer);
}

PlaneGraph read_ptri(std::istream& in) {
    auto g = read_ptri_optional(in);
    if (!g) throw Error(ErrorCode::ParseError, "empty input");
    return *g;
}

std::vector<PlaneGraph> read_ptri_stream(std::istream& in) {
    std::vector<PlaneGraph> out;
    while (auto g = read_ptri_optional(in)) out.push_back(std::move(*g));
    return out;
}

PlaneGraph read_ptri_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_ptri(in);
}

void write_ptri(std::ostream& out, const PlaneGraph& g) {
    out << "ptri " << g.vertex_count() << "\n";
    out << "outer";
    for (VertexId v : g.outer()) out << ' ' << v;
    out << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "rot " << v;
        for (VertexId u : g.neighbors(v)) out << ' ' << u;
        out << "\n";
    }
}

std::string to_dot(const PlaneGraph& g, const PrincipalPath* path) {
    std::ostringstream os;
    os << "graph G {\n  layout=neato;\n  node [shape=circle];\n";
    int k = static_cast<int>(g.outer().size());
    for (int i = 0; i < k; ++i) {
        double ang = 2.0 * 3.14159265358979 * i / k;
        os << "  " << g.outer()[i] << " [pos=\"" << 2.0 * std::cos(ang) << ','
           << 2.0 * std::sin(ang) << "!\"];\n";
    }
    std::set<EdgePair> path_edges;
    if (path) {
        path_edges.insert(make_edge(path->vk, path->v1));
        path_edges.insert(make_edge(path->v1, path->v2));
    }
    for (auto [a, b] : g.edges()) {
        os << "  " << a << " -- " << b;
        if (path_edges.count({a, b})) os << " [color=red, penwidth=2]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace wheelcheck
