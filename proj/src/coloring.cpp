#include "wheelcheck/coloring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace wheelcheck {

namespace {

struct Backtracker {
    const PlaneGraph& g;
    const std::vector<std::vector<int>>& lists;
    std::vector<int> order;  // static: by list size, then index
    std::vector<int> color;
    long long nodes = 0;
    long long budget;

    Backtracker(const PlaneGraph& graph, const std::vector<std::vector<int>>& ls, long long b)
        : g(graph), lists(ls), color(graph.vertex_count(), 0), budget(b) {
        order.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int c) {
            if (lists[a].size() != lists[c].size()) return lists[a].size() < lists[c].size();
            return a < c;
        });
    }

    bool solve(size_t i) {
        if (i == order.size()) return true;
        int v = order[i];
        for (int c : lists[v]) {
            if (++nodes > budget) throw Error(ErrorCode::BudgetExceeded, "coloring node budget");
            bool clash = false;
            for (VertexId u : g.neighbors(v))
                if (color[u] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[v] = c;
            if (solve(i + 1)) return true;
            color[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> list_colorable(const PlaneGraph& g, const ListAssignment& L,
                                               const ColoringOptions& opts) {
    if (static_cast<int>(L.lists.size()) != g.vertex_count())
        throw Error(ErrorCode::BadParameter, "one list per vertex required");
    for (const auto& l : L.lists)
        if (l.empty()) throw Error(ErrorCode::BadParameter, "empty color list");
    // colors must not collide with the 0 = uncolored sentinel
    for (const auto& l : L.lists)
        for (int c : l)
            if (c == 0) throw Error(ErrorCode::BadParameter, "color 0 is reserved");

    Backtracker bt(g, L.lists, opts.node_budget);
    if (bt.solve(0)) return bt.color;
    return std::nullopt;
}

namespace {

CnCheckReport run_cn_trials(const PlaneGraph& g, const std::vector<ListAssignment>& assignments,
                            const ColoringOptions& opts, uint64_t seed) {
    CnCheckReport rep;
    rep.seed = seed;
    for (const auto& L : assignments) {
        ++rep.trials;
        if (!list_colorable(g, L, opts)) {
            ++rep.failures;
            rep.failing.push_back(L);
        }
    }
    return rep;
}

}  // namespace

CnCheckReport cn_implication_check(const PlaneGraph& g, const ExponentVector& term,
                                   long long trials, uint64_t seed,
                                   const ColoringOptions& opts) {
    int n = g.vertex_count();
    if (term.size() != n) throw Error(ErrorCode::BadParameter, "term size mismatch");
    int max_len = 1;
    for (int v = 0; v < n; ++v) max_len = std::max(max_len, term[v] + 1);
    int universe = 2 * max_len;

    std::vector<ListAssignment> assignments;
    for (long long t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + static_cast<uint64_t>(t));
        ListAssignment L;
        L.lists.resize(n);
        std::vector<int> colors(universe);
        for (int c = 0; c < universe; ++c) colors[c] = c + 1;
        for (int v = 0; v < n; ++v) {
            std::shuffle(colors.begin(), colors.end(), rng);
            L.lists[v].assign(colors.begin(), colors.begin() + term[v] + 1);
            std::sort(L.lists[v].begin(), L.lists[v].end());
        }
        assignments.push_back(std::move(L));
    }
    return run_cn_trials(g, assignments, opts, seed);
}

CnCheckReport cn_implication_check_exhaustive(const PlaneGraph& g, const ExponentVector& term,
                                              int max_color, const ColoringOptions& opts) {
    int n = g.vertex_count();
    if (term.size() != n) throw Error(ErrorCode::BadParameter, "term size mismatch");

    // per-vertex list of all size-(e+1) subsets of 1..max_color
    std::vector<std::vector<std::vector<int>>> choices(n);
    double total = 1;
    for (int v = 0; v < n; ++v) {
        int size = term[v] + 1;
        if (size > max_color)
            throw Error(ErrorCode::BadParameter, "list longer than the color universe");
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i + 1;
        while (true) {
            choices[v].push_back(comb);
            int i = size - 1;
            while (i >= 0 && comb[i] == max_color - (size - 1 - i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
        total *= static_cast<double>(choices[v].size());
        if (total > 5e7) throw Error(ErrorCode::BudgetExceeded, "exhaustive sweep too large");
    }

    CnCheckReport rep;
    std::vector<size_t> idx(n, 0);
    while (true) {
        ListAssignment L;
        L.lists.resize(n);
        for (int v = 0; v < n; ++v) L.lists[v] = choices[v][idx[v]];
        ++rep.trials;
        if (!list_colorable(g, L, opts)) {
            ++rep.failures;
            rep.failing.push_back(L);
        }
        int v = n - 1;
        while (v >= 0 && idx[v] + 1 == choices[v].size()) idx[v--] = 0;
        if (v < 0) break;
        ++idx[v];
    }
    return rep;
}

ColourRelation colour_relation(const PlaneGraph& g, VertexId x, VertexId y) {
    int n = g.vertex_count();
    if (x < 0 || y < 0 || x >= n || y >= n || x == y)
        throw Error(ErrorCode::BadParameter, "need two distinct vertices");

    bool seen_any = false, seen_equal = false, seen_diff = false;
    std::vector<int> color(n, 0);
    // plain exhaustive enumeration of proper 3-colorings
    auto rec = [&](auto&& rec, int v) -> void {
        if (seen_equal && seen_diff) return;
        if (v == n) {
            seen_any = true;
            (color[x] == color[y] ? seen_equal : seen_diff) = true;
            return;
        }
        for (int c = 1; c <= 3; ++c) {
            bool clash = false;
            for (VertexId u : g.neighbors(v))
                if (u >= 0 && u < v && color[u] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[v] = c;
            rec(rec, v + 1);
            color[v] = 0;
        }
    };
    rec(rec, 0);

    if (!seen_any) throw Error(ErrorCode::NotThreeColorable, "no proper 3-coloring exists");
    if (seen_equal && seen_diff) return ColourRelation::Neither;
    return seen_equal ? ColourRelation::AlwaysEqual : ColourRelation::AlwaysDifferent;
}

ListAssignment read_lists(std::istream& in, int n) {
    std::string line;
    bool header = false;
    ListAssignment L;
    L.lists.resize(n);
    std::vector<char> seen(n, 0);
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!header) {
            if (first != "lists") throw Error(ErrorCode::ParseError, "expected 'lists' header");
            header = true;
            continue;
        }
        if (first.back() != ':')
            throw Error(ErrorCode::ParseError, "expected '<v>:' line, got " + first);
        int v = 0;
        try {
            v = std::stoi(first.substr(0, first.size() - 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad vertex: " + first);
        }
        if (v < 0 || v >= n) throw Error(ErrorCode::ParseError, "vertex out of range");
        if (seen[v]) throw Error(ErrorCode::ParseError, "duplicate list line");
        seen[v] = 1;
        int c;
        while (ls >> c) L.lists[v].push_back(c);
        if (L.lists[v].empty()) throw Error(ErrorCode::ParseError, "empty list");
    }
    if (!header) throw Error(ErrorCode::ParseError, "missing 'lists' header");
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw Error(ErrorCode::ParseError, "missing list for vertex " + std::to_string(v));
    return L;
}

void write_lists(std::ostream& out, const ListAssignment& L) {
    out << "lists\n";
    for (size_t v = 0; v < L.lists.size(); ++v) {
        out << v << ':';
        for (int c : L.lists[v]) out << ' ' << c;
        out << '\n';
    }
}

}  // namespace wheelcheck
