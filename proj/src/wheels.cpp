#include "wheelcheck/wheels.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace wheelcheck {

bool WheelSpec::is_generalized() const {
    if (components.empty()) return false;
    for (const auto& c : components)
        if (c.kind == WheelComponentSpec::Kind::Ordinary && c.size % 2 == 0) return false;
    return true;
}

WheelSpec WheelSpec::parse(const std::string& text) {
    WheelSpec spec;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, '+')) {
        if (token.size() < 2 || (token[0] != 'B' && token[0] != 'O'))
            throw Error(ErrorCode::BadParameter, "wheel component must be B<k> or O<r>: " + token);
        int size = 0;
        try {
            size = std::stoi(token.substr(1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadParameter, "bad wheel component size: " + token);
        }
        spec.components.push_back({token[0] == 'B' ? WheelComponentSpec::Kind::Broken
                                                   : WheelComponentSpec::Kind::Ordinary,
                                   size});
    }
    if (spec.components.empty())
        throw Error(ErrorCode::BadParameter, "empty wheel spec");
    return spec;
}

std::string WheelSpec::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << '+';
        os << (components[i].kind == WheelComponentSpec::Kind::Broken ? 'B' : 'O')
           << components[i].size;
    }
    return os.str();
}

BuiltWheel build_ordinary_wheel(int rim_len) {
    if (rim_len < 3) throw Error(ErrorCode::BadParameter, "rim length must be >= 3");
    int hub = rim_len;
    std::vector<VertexId> outer(rim_len);
    for (int i = 0; i < rim_len; ++i) outer[i] = i;
    std::vector<std::array<VertexId, 3>> tris;
    for (int i = 0; i < rim_len; ++i) tris.push_back({i, (i + 1) % rim_len, hub});
    BuiltWheel w{plane_graph_from_triangles(rim_len + 1, outer, tris),
                 PrincipalPath{rim_len - 1, 0, 1},
                 rim_len % 2 == 1,
                 false};
    return w;
}

BuiltWheel build_broken_wheel(int k) {
    if (k < 3) throw Error(ErrorCode::BadParameter, "broken wheel needs k >= 3");
    std::vector<VertexId> outer(k);
    for (int i = 0; i < k; ++i) outer[i] = i;
    std::vector<std::array<VertexId, 3>> tris;
    for (int j = 1; j <= k - 2; ++j) tris.push_back({0, j, j + 1});
    return {plane_graph_from_triangles(k, outer, tris), PrincipalPath{k - 1, 0, 1}, true, true};
}

BuiltWheel build_multiple_wheel(const WheelSpec& spec) {
    if (spec.components.size() < 2)
        throw Error(ErrorCode::BadParameter, "multiple wheel needs >= 2 components");
    for (const auto& c : spec.components) {
        int min_size = 3;
        if (c.size < min_size) throw Error(ErrorCode::BadParameter, "component too small");
    }

    // Central vertex 0, boundary arc 1..A left to right, hubs appended.
    std::vector<std::array<VertexId, 3>> tris;
    int next_arc = 1;
    std::vector<int> hub_of(spec.components.size(), -1);
    std::vector<std::pair<int, int>> arc_span(spec.components.size());

    // First pass: arc extents. Component boundary contributes size-1 arc
    // vertices (its own central is the shared vertex 0); adjacent
    // components share the junction arc vertex.
    for (size_t t = 0; t < spec.components.size(); ++t) {
        int seg = spec.components[t].size - 1;
        int left = (t == 0) ? next_arc : arc_span[t - 1].second;
        int right = left + seg - 1;
        arc_span[t] = {left, right};
        next_arc = right + 1;
    }
    int arc_end = arc_span.back().second;
    int next_free = arc_end + 1;
    for (size_t t = 0; t < spec.components.size(); ++t)
        if (spec.components[t].kind == WheelComponentSpec::Kind::Ordinary) hub_of[t] = next_free++;

    for (size_t t = 0; t < spec.components.size(); ++t) {
        auto [a, b] = arc_span[t];
        if (spec.components[t].kind == WheelComponentSpec::Kind::Broken) {
            for (int j = a; j < b; ++j) tris.push_back({0, j, j + 1});
        } else {
            int h = hub_of[t];
            tris.push_back({h, 0, a});
            for (int j = a; j < b; ++j) tris.push_back({h, j, j + 1});
            tris.push_back({h, b, 0});
        }
    }

    std::vector<VertexId> outer(arc_end + 1);
    for (int i = 0; i <= arc_end; ++i) outer[i] = i;

    bool all_broken = std::all_of(spec.components.begin(), spec.components.end(), [](auto& c) {
        return c.kind == WheelComponentSpec::Kind::Broken;
    });
    return {plane_graph_from_triangles(next_free, outer, tris), PrincipalPath{arc_end, 0, 1},
            spec.is_generalized(), all_broken};
}

BuiltWheel build_wheel(const WheelSpec& spec) {
    if (spec.components.empty()) throw Error(ErrorCode::BadParameter, "empty wheel spec");
    if (spec.components.size() == 1) {
        const auto& c = spec.components[0];
        return c.kind == WheelComponentSpec::Kind::Broken ? build_broken_wheel(c.size)
                                                          : build_ordinary_wheel(c.size);
    }
    return build_multiple_wheel(spec);
}

BuiltWheel build_split_hub_graph(int k, int i) {
    if (i < 3 || i > k - 1) throw Error(ErrorCode::BadParameter, "need 3 <= i <= k-1");
    int u = k, v = k + 1;
    std::vector<VertexId> outer(k);
    for (int t = 0; t < k; ++t) outer[t] = t;
    std::vector<std::array<VertexId, 3>> tris;
    for (int j = 1; j <= i - 1; ++j) tris.push_back({j - 1, j, u});
    for (int j = i; j <= k - 1; ++j) tris.push_back({j - 1, j, v});
    tris.push_back({k - 1, 0, v});
    tris.push_back({0, u, v});
    tris.push_back({u, i - 1, v});
    return {plane_graph_from_triangles(k + 2, outer, tris), PrincipalPath{k - 1, 0, 1}, false,
            false};
}

std::vector<EdgePair> WheelWitness::edges() const {
    std::set<EdgePair> out;
    out.insert(make_edge(path.v1, path.v2));
    out.insert(make_edge(path.vk, path.v1));
    if (degenerate_triangle) {
        out.insert(make_edge(path.v2, path.vk));
        return {out.begin(), out.end()};
    }
    for (const auto& c : components) {
        for (size_t i = 0; i + 1 < c.segment.size(); ++i)
            out.insert(make_edge(c.segment[i], c.segment[i + 1]));
        if (c.kind == WheelComponentSpec::Kind::Broken) {
            for (VertexId w : c.segment) out.insert(make_edge(central, w));
        } else {
            out.insert(make_edge(central, c.segment.front()));
            out.insert(make_edge(central, c.segment.back()));
            out.insert(make_edge(c.hub, central));
            for (VertexId w : c.segment) out.insert(make_edge(c.hub, w));
        }
    }
    return {out.begin(), out.end()};
}

bool WheelWitness::validate(const PlaneGraph& host) const {
    for (auto [a, b] : edges())
        if (a < 0 || b < 0 || a >= host.vertex_count() || b >= host.vertex_count() ||
            !host.adjacent(a, b))
            return false;
    // Distinct wheel vertices: central, segment vertices, hubs.
    std::set<VertexId> seen{central};
    if (degenerate_triangle) return true;
    for (const auto& c : components) {
        for (size_t i = 0; i < c.segment.size(); ++i) {
            // Junction vertices are shared between adjacent components.
            bool shared = (i == 0 && &c != &components.front());
            if (!shared && !seen.insert(c.segment[i]).second) return false;
        }
        if (c.kind == WheelComponentSpec::Kind::Ordinary) {
            if (c.hub < 0 || !seen.insert(c.hub).second) return false;
            if ((c.segment.size() + 1) % 2 == 0) return false;  // rim must be odd
        }
    }
    return true;
}

std::optional<WheelWitness> find_generalized_wheel(const PlaneGraph& g, const PrincipalPath& p) {
    require_principal_path(g, p);
    const auto& outer = g.outer();
    int k = static_cast<int>(outer.size());
    int pos1 = g.outer_position(p.v1);
    VertexId nxt = outer[(pos1 + 1) % k];

    // Triangle as a degenerate broken wheel.
    if (g.adjacent(p.v2, p.vk)) {
        WheelWitness w;
        w.central = p.v1;
        w.path = p;
        w.degenerate_triangle = true;
        w.components.push_back(
            {WheelComponentSpec::Kind::Broken, {p.v2, p.vk}, -1});
        return w;
    }

    // Boundary arc from v_2 to v_k avoiding v_1. A component's rim is a
    // monotone position sequence along this arc; consecutive rim vertices
    // are joined by outer edges or chords, so rims may skip arc vertices.
    int dir = (nxt == p.v2) ? +1 : -1;
    std::vector<VertexId> arc;
    for (int t = 1; t < k; ++t) arc.push_back(outer[((pos1 + dir * t) % k + k) % k]);
    int m = static_cast<int>(arc.size());
    assert(arc.front() == p.v2 && arc.back() == p.vk);

    std::vector<char> split(m, 0);
    for (int t = 0; t < m; ++t) split[t] = g.adjacent(p.v1, arc[t]) ? 1 : 0;
    assert(split[0] && split[m - 1]);

    auto pos_adj = [&](int s, int s2) { return g.adjacent(arc[s], arc[s2]); };

    // Broken component between split points: a monotone path through
    // v_1-adjacent positions. Returns the lexicographically smallest rim.
    auto broken_rim = [&](int t, int t2) -> std::optional<std::vector<int>> {
        std::vector<char> reach(m, 0);
        reach[t2] = 1;
        for (int s = t2 - 1; s >= t; --s) {
            if (!split[s]) continue;
            for (int s2 = s + 1; s2 <= t2 && !reach[s]; ++s2)
                if (split[s2] && reach[s2] && pos_adj(s, s2)) reach[s] = 1;
        }
        if (!reach[t]) return std::nullopt;
        std::vector<int> rim{t};
        int cur = t;
        while (cur != t2) {
            for (int s = cur + 1; s <= t2; ++s)
                if (split[s] && reach[s] && pos_adj(cur, s)) {
                    rim.push_back(s);
                    cur = s;
                    break;
                }
        }
        return rim;
    };

    // Odd ordinary component with hub u: a monotone path through
    // u-adjacent positions with an odd number of rim edges, so the rim
    // cycle through v_1 has odd length.
    auto ordinary_rim = [&](int t, int t2, VertexId u) -> std::optional<std::vector<int>> {
        std::vector<std::array<char, 2>> reach(m, {0, 0});
        auto in_p = [&](int s) { return g.adjacent(arc[s], u); };
        if (!in_p(t) || !in_p(t2)) return std::nullopt;
        reach[t2][0] = 1;
        for (int s = t2 - 1; s >= t; --s) {
            if (!in_p(s)) continue;
            for (int s2 = s + 1; s2 <= t2; ++s2)
                if (in_p(s2) && pos_adj(s, s2)) {
                    reach[s][0] |= reach[s2][1];
                    reach[s][1] |= reach[s2][0];
                }
        }
        if (!reach[t][1]) return std::nullopt;
        std::vector<int> rim{t};
        int cur = t, need = 1;
        while (cur != t2) {
            for (int s = cur + 1; s <= t2; ++s)
                if (in_p(s) && pos_adj(cur, s) && reach[s][(need + 1) % 2]) {
                    rim.push_back(s);
                    cur = s;
                    need = (need + 1) % 2;
                    break;
                }
        }
        return rim;
    };

    struct Transition {
        WheelComponentSpec::Kind kind;
        VertexId hub;
        std::vector<int> rim;
    };
    // Deterministic preference: broken before ordinary, then smallest hub.
    auto transition = [&](int t, int t2) -> std::optional<Transition> {
        if (auto rim = broken_rim(t, t2))
            return Transition{WheelComponentSpec::Kind::Broken, -1, std::move(*rim)};
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            if (g.on_outer(u) || !g.adjacent(u, p.v1)) continue;
            if (auto rim = ordinary_rim(t, t2, u))
                return Transition{WheelComponentSpec::Kind::Ordinary, u, std::move(*rim)};
        }
        return std::nullopt;
    };

    const int INF = m + 10;
    // suffix[t] = fewest components covering [t .. m-1] starting at split t.
    std::vector<int> suffix(m, INF);
    suffix[m - 1] = 0;
    for (int t = m - 2; t >= 0; --t) {
        if (!split[t]) continue;
        for (int t2 = t + 1; t2 < m; ++t2) {
            if (!split[t2] || suffix[t2] >= INF || 1 + suffix[t2] >= suffix[t]) continue;
            if (transition(t, t2)) suffix[t] = 1 + suffix[t2];
        }
    }
    if (suffix[0] >= INF) return std::nullopt;

    WheelWitness w;
    w.central = p.v1;
    w.path = p;
    int cur = 0;
    while (cur != m - 1) {
        for (int t2 = cur + 1; t2 < m; ++t2) {
            if (!split[t2] || suffix[t2] != suffix[cur] - 1) continue;
            auto tr = transition(cur, t2);
            if (!tr) continue;
            WheelComponentWitness comp;
            comp.kind = tr->kind;
            comp.hub = tr->hub;
            for (int s : tr->rim) comp.segment.push_back(arc[s]);
            w.components.push_back(std::move(comp));
            cur = t2;
            break;
        }
    }
    assert(w.validate(g));
    return w;
}

}  // namespace wheelcheck
