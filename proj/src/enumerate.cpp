#include "wheelcheck/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wheelcheck {

namespace {

struct Generator {
    int outer_len;
    int max_interior;
    long long budget;
    long long produced = 0;
    std::set<EdgePair> edges;
    std::vector<std::array<VertexId, 3>> triangles;
    std::vector<std::vector<VertexId>> regions;
    int next_vertex;
    const std::function<void(const PlaneGraph&)>* sink;

    bool has_edge(VertexId a, VertexId b) const { return edges.count(make_edge(a, b)) > 0; }

    void emit() {
        if (produced >= budget)
            throw Error(ErrorCode::BoundsExceeded,
                        "instance budget " + std::to_string(budget) + " exceeded");
        ++produced;
        std::vector<VertexId> outer(outer_len);
        for (int i = 0; i < outer_len; ++i) outer[i] = i;
        (*sink)(plane_graph_from_triangles(next_vertex, outer, triangles));
    }

    void recurse(int used_interior) {
        if (regions.empty()) {
            emit();
            return;
        }
        std::vector<VertexId> region = std::move(regions.back());
        regions.pop_back();
        int m = static_cast<int>(region.size());
        VertexId p0 = region[0], p1 = region[1];

        // Apex at an existing region vertex: the two triangle sides must
        // be region boundary edges or brand-new chords.
        for (int j = 2; j < m; ++j) {
            VertexId w = region[j];
            bool need_a = j != 2;      // side (p1, w)
            bool need_b = j != m - 1;  // side (w, p0)
            if (need_a && has_edge(p1, w)) continue;
            if (need_b && has_edge(w, p0)) continue;

            if (need_a) edges.insert(make_edge(p1, w));
            if (need_b) edges.insert(make_edge(w, p0));
            triangles.push_back({p0, p1, w});
            size_t saved_regions = regions.size();
            if (j >= 3) regions.push_back({region.begin() + 1, region.begin() + j + 1});
            if (j <= m - 2) {
                std::vector<VertexId> b(region.begin() + j, region.end());
                b.push_back(p0);
                regions.push_back(std::move(b));
            }

            recurse(used_interior);

            regions.resize(saved_regions);
            triangles.pop_back();
            if (need_a) edges.erase(make_edge(p1, w));
            if (need_b) edges.erase(make_edge(w, p0));
        }

        // Apex at a fresh interior vertex.
        if (used_interior < max_interior) {
            VertexId x = next_vertex++;
            edges.insert(make_edge(p0, x));
            edges.insert(make_edge(p1, x));
            triangles.push_back({p0, p1, x});
            std::vector<VertexId> r2(region.begin() + 1, region.end());
            r2.push_back(p0);
            r2.push_back(x);
            regions.push_back(std::move(r2));

            recurse(used_interior + 1);

            regions.pop_back();
            triangles.pop_back();
            edges.erase(make_edge(p0, x));
            edges.erase(make_edge(p1, x));
            --next_vertex;
        }

        regions.push_back(std::move(region));
    }
};

}  // namespace

void enumerate_near_triangulations(int outer_len, const EnumerateOptions& opts,
                                   const std::function<void(const PlaneGraph&)>& emit) {
    if (outer_len < 3) throw Error(ErrorCode::BadParameter, "outer length must be >= 3");
    if (opts.max_interior < 0) throw Error(ErrorCode::BadParameter, "negative interior budget");

    Generator gen;
    gen.outer_len = outer_len;
    gen.max_interior = opts.max_interior;
    gen.budget = opts.instance_budget;
    gen.next_vertex = outer_len;

    std::vector<VertexId> outer(outer_len);
    for (int i = 0; i < outer_len; ++i) outer[i] = i;
    for (int i = 0; i < outer_len; ++i)
        gen.edges.insert(make_edge(outer[i], outer[(i + 1) % outer_len]));
    gen.regions.push_back(outer);

    if (!opts.dedup) {
        gen.sink = &emit;
        gen.recurse(0);
        return;
    }

    std::map<std::string, PlaneGraph> classes;
    std::function<void(const PlaneGraph&)> collect = [&](const PlaneGraph& g) {
        classes.emplace(canonical_code(g), g);
    };
    gen.sink = &collect;
    gen.recurse(0);
    for (const auto& [code, g] : classes) emit(g);
}

std::vector<PlaneGraph> enumerate_near_triangulations(int outer_len,
                                                      const EnumerateOptions& opts) {
    std::vector<PlaneGraph> out;
    enumerate_near_triangulations(outer_len, opts,
                                  [&](const PlaneGraph& g) { out.push_back(g); });
    return out;
}

}  // namespace wheelcheck
