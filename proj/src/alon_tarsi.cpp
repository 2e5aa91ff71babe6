#include "wheelcheck/alon_tarsi.hpp"

#include <algorithm>
#include <map>

namespace wheelcheck {

namespace {

// Edge list as (positive pick, negative pick) per the ordering.
std::vector<std::pair<VertexId, VertexId>> signed_edges(const PlaneGraph& g,
                                                        const std::vector<VertexId>& ordering) {
    int n = g.vertex_count();
    if (static_cast<int>(ordering.size()) != n)
        throw Error(ErrorCode::BadParameter, "ordering must list every vertex");
    std::vector<int> rank(n, -1);
    for (int i = 0; i < n; ++i) {
        VertexId v = ordering[i];
        if (v < 0 || v >= n || rank[v] >= 0)
            throw Error(ErrorCode::BadParameter, "ordering is not a permutation");
        rank[v] = i;
    }
    std::vector<std::pair<VertexId, VertexId>> out;
    for (auto [a, b] : g.edges())
        out.push_back(rank[a] < rank[b] ? std::pair{a, b} : std::pair{b, a});
    return out;
}

void check_budget(const PlaneGraph& g, int edge_budget) {
    if (g.edge_count() > edge_budget)
        throw Error(ErrorCode::EdgeBudgetExceeded,
                    std::to_string(g.edge_count()) + " edges exceeds budget " +
                        std::to_string(edge_budget));
}

void orient_rec(const std::vector<std::pair<VertexId, VertexId>>& edges, size_t i,
                std::vector<int>& out_deg, const ExponentVector& d, int sign, long long& total) {
    if (i == edges.size()) {
        total += sign;
        return;
    }
    auto [lo, hi] = edges[i];
    if (out_deg[lo] < d[lo]) {
        ++out_deg[lo];
        orient_rec(edges, i + 1, out_deg, d, sign, total);
        --out_deg[lo];
    }
    if (out_deg[hi] < d[hi]) {
        ++out_deg[hi];
        orient_rec(edges, i + 1, out_deg, d, -sign, total);
        --out_deg[hi];
    }
}

}  // namespace

Coeff coefficient_by_orientations(const PlaneGraph& g, const std::vector<VertexId>& ordering,
                                  const ExponentVector& d, int edge_budget) {
    check_budget(g, edge_budget);
    if (d.size() != g.vertex_count())
        throw Error(ErrorCode::BadParameter, "exponent vector size mismatch");
    if (d.total_degree() != g.edge_count()) return 0;
    auto edges = signed_edges(g, ordering);
    std::vector<int> out_deg(g.vertex_count(), 0);
    long long total = 0;
    orient_rec(edges, 0, out_deg, d, +1, total);
    return total;
}

SparsePolynomial orientation_expansion(const PlaneGraph& g, const std::vector<VertexId>& ordering,
                                       int edge_budget) {
    check_budget(g, edge_budget);
    auto edges = signed_edges(g, ordering);
    int n = g.vertex_count();
    int m = static_cast<int>(edges.size());

    std::map<ExponentVector, Coeff> acc;
    for (uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        ExponentVector e(n);
        int reversed = 0;
        for (int i = 0; i < m; ++i) {
            bool rev = (mask >> i) & 1;
            VertexId v = rev ? edges[i].second : edges[i].first;
            reversed += rev;
            e.set(v, e[v] + 1);
        }
        acc[e] += (reversed % 2 == 0) ? 1 : -1;
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });

    std::vector<Term> terms;
    for (auto& [e, c] : acc) terms.push_back({e, std::move(c)});
    return SparsePolynomial(n, ordering, CapVector::unbounded(n), std::move(terms));
}

int at_number(const PlaneGraph& g, int edge_budget) {
    check_budget(g, edge_budget);
    int n = g.vertex_count();
    int max_deg = 0;
    for (VertexId v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    for (int k = 1; k <= max_deg + 1; ++k) {
        auto p = graph_polynomial(g, identity_ordering(n), CapVector::uniform(n, k - 1));
        if (!p.is_zero()) return k;
    }
    throw Error(ErrorCode::TheoremViolation, "graph polynomial vanished at every cap");
}

}  // namespace wheelcheck
