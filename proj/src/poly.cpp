#include "wheelcheck/poly.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace wheelcheck {

std::vector<VertexId> identity_ordering(int n) {
    std::vector<VertexId> o(n);
    for (int i = 0; i < n; ++i) o[i] = i;
    return o;
}

SparsePolynomial SparsePolynomial::constant(int nvars, const Coeff& c, const CapVector& caps,
                                            std::vector<VertexId> ordering) {
    std::vector<Term> terms;
    if (c != 0) terms.push_back({ExponentVector(nvars), c});
    if (ordering.empty()) ordering = identity_ordering(nvars);
    return SparsePolynomial(nvars, std::move(ordering), caps, std::move(terms));
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().exps.total_degree();
    for (const auto& t : terms_)
        if (t.exps.total_degree() != d) return false;
    return true;
}

namespace {

constexpr int kPackedMaxVars = 15;
constexpr int kPackedMaxExp = 15;

uint64_t pack(const ExponentVector& e) {
    uint64_t k = 0;
    for (int v = 0; v < e.size(); ++v) k |= static_cast<uint64_t>(e[v]) << (4 * v);
    return k;
}

ExponentVector unpack(uint64_t key, int n) {
    ExponentVector e(n);
    for (int v = 0; v < n; ++v) e.set(v, static_cast<int>((key >> (4 * v)) & 0xF));
    return e;
}

std::vector<Term> map_to_terms_packed(std::unordered_map<uint64_t, Coeff>& m, int n) {
    std::vector<Term> out;
    out.reserve(m.size());
    for (auto& [k, c] : m)
        if (c != 0) out.push_back({unpack(k, n), std::move(c)});
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.exps < b.exps; });
    return out;
}

std::vector<Term> map_to_terms_wide(std::map<ExponentVector, Coeff>& m) {
    std::vector<Term> out;
    out.reserve(m.size());
    for (auto& [e, c] : m)
        if (c != 0) out.push_back({e, std::move(c)});
    return out;  // std::map iterates in lexicographic order already
}

// Edge processing order: finish low-cap vertices as early as possible so
// the cap pruning bites sooner. Result is order-independent.
std::vector<EdgePair> pruning_edge_order(int n, std::vector<EdgePair> edges,
                                         const CapVector& caps) {
    std::vector<int> vrank(n);
    {
        std::vector<VertexId> by_cap(n);
        for (int v = 0; v < n; ++v) by_cap[v] = v;
        std::sort(by_cap.begin(), by_cap.end(), [&](VertexId a, VertexId b) {
            if (caps.cap(a) != caps.cap(b)) return caps.cap(a) < caps.cap(b);
            return a < b;
        });
        for (int i = 0; i < n; ++i) vrank[by_cap[i]] = i;
    }
    std::sort(edges.begin(), edges.end(), [&](const EdgePair& e, const EdgePair& f) {
        int me = std::max(vrank[e.first], vrank[e.second]);
        int mf = std::max(vrank[f.first], vrank[f.second]);
        if (me != mf) return me < mf;
        int se = std::min(vrank[e.first], vrank[e.second]);
        int sf = std::min(vrank[f.first], vrank[f.second]);
        if (se != sf) return se < sf;
        return e < f;
    });
    return edges;
}

}  // namespace

SparsePolynomial graph_polynomial(const PlaneGraph& g, const std::vector<VertexId>& ordering,
                                  const CapVector& caps) {
    return polynomial_of_edges(g.vertex_count(), g.edges(), ordering, caps);
}

SparsePolynomial polynomial_of_edges(int n, const std::vector<EdgePair>& edge_list,
                                     const std::vector<VertexId>& ordering,
                                     const CapVector& caps) {
    if (static_cast<int>(ordering.size()) != n)
        throw Error(ErrorCode::BadParameter, "ordering must list every vertex");
    std::vector<int> rank(n, -1);
    for (int i = 0; i < n; ++i) {
        VertexId v = ordering[i];
        if (v < 0 || v >= n || rank[v] >= 0)
            throw Error(ErrorCode::BadParameter, "ordering is not a permutation");
        rank[v] = i;
    }
    if (caps.size() != n) throw Error(ErrorCode::BadParameter, "cap vector size mismatch");

    std::vector<int> degree(n, 0);
    for (auto [a, b] : edge_list) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw Error(ErrorCode::BadParameter, "bad edge");
        ++degree[a];
        ++degree[b];
    }

    // Effective per-vertex exponent ceiling: never above the degree.
    std::vector<int> eff(n);
    bool packable = n <= kPackedMaxVars;
    for (int v = 0; v < n; ++v) {
        eff[v] = std::min(caps.cap(v), degree[v]);
        if (eff[v] > kPackedMaxExp) packable = false;
    }

    auto edges = pruning_edge_order(n, edge_list, caps);

    std::vector<Term> terms;
    if (packable) {
        std::unordered_map<uint64_t, Coeff> cur;
        cur.emplace(0, 1);
        for (auto [a, b] : edges) {
            VertexId lo = rank[a] < rank[b] ? a : b;  // positive variable
            VertexId hi = rank[a] < rank[b] ? b : a;
            std::unordered_map<uint64_t, Coeff> next;
            next.reserve(cur.size() * 2);
            uint64_t unit_lo = 1ULL << (4 * lo), unit_hi = 1ULL << (4 * hi);
            for (auto& [key, c] : cur) {
                if (static_cast<int>((key >> (4 * lo)) & 0xF) < eff[lo]) next[key + unit_lo] += c;
                if (static_cast<int>((key >> (4 * hi)) & 0xF) < eff[hi]) next[key + unit_hi] -= c;
            }
            std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
            cur = std::move(next);
        }
        terms = map_to_terms_packed(cur, n);
    } else {
        std::map<ExponentVector, Coeff> cur;
        cur.emplace(ExponentVector(n), 1);
        for (auto [a, b] : edges) {
            VertexId lo = rank[a] < rank[b] ? a : b;
            VertexId hi = rank[a] < rank[b] ? b : a;
            std::map<ExponentVector, Coeff> next;
            for (auto& [e, c] : cur) {
                if (e[lo] < eff[lo]) {
                    ExponentVector e2 = e;
                    e2.set(lo, e[lo] + 1);
                    next[e2] += c;
                }
                if (e[hi] < eff[hi]) {
                    ExponentVector e2 = e;
                    e2.set(hi, e[hi] + 1);
                    next[e2] -= c;
                }
            }
            std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
            cur = std::move(next);
        }
        terms = map_to_terms_wide(cur);
    }

    return SparsePolynomial(n, ordering, caps, std::move(terms));
}

Coeff coefficient(const SparsePolynomial& p, const ExponentVector& e) {
    if (e.size() != p.nvars()) throw Error(ErrorCode::BadParameter, "exponent vector size");
    if (!p.caps().within(e))
        throw Error(ErrorCode::ExceedsCaps, "query outside the truncation region");
    const auto& terms = p.terms();
    auto it = std::lower_bound(terms.begin(), terms.end(), e,
                               [](const Term& t, const ExponentVector& x) { return t.exps < x; });
    if (it != terms.end() && it->exps == e) return it->coeff;
    return 0;
}

SparsePolynomial multiply(const SparsePolynomial& p, const SparsePolynomial& q,
                          const CapVector& caps) {
    int n = p.nvars();
    if (q.nvars() != n || caps.size() != n)
        throw Error(ErrorCode::BadParameter, "variable count mismatch");
    if (!p.ordering().empty() && !q.ordering().empty() && p.ordering() != q.ordering())
        throw Error(ErrorCode::BadParameter, "ordering context mismatch");
    auto ordering = p.ordering().empty() ? q.ordering() : p.ordering();

    std::vector<int> max_p(n, 0), max_q(n, 0);
    for (const auto& t : p.terms())
        for (int v = 0; v < n; ++v) max_p[v] = std::max(max_p[v], t.exps[v]);
    for (const auto& t : q.terms())
        for (int v = 0; v < n; ++v) max_q[v] = std::max(max_q[v], t.exps[v]);

    bool packable = n <= kPackedMaxVars;
    std::vector<int> check;  // vertices whose cap can actually cut
    for (int v = 0; v < n; ++v) {
        if (max_p[v] + max_q[v] > kPackedMaxExp) packable = false;
        if (caps.cap(v) < max_p[v] + max_q[v]) check.push_back(v);
    }

    std::vector<Term> terms;
    if (packable) {
        std::unordered_map<uint64_t, Coeff> acc;
        acc.reserve(p.terms().size() * 2);
        std::vector<uint64_t> qkeys(q.terms().size());
        for (size_t j = 0; j < q.terms().size(); ++j) qkeys[j] = pack(q.terms()[j].exps);
        for (const auto& tp : p.terms()) {
            uint64_t kp = pack(tp.exps);
            for (size_t j = 0; j < q.terms().size(); ++j) {
                uint64_t k = kp + qkeys[j];
                bool ok = true;
                for (int v : check)
                    if (static_cast<int>((k >> (4 * v)) & 0xF) > caps.cap(v)) {
                        ok = false;
                        break;
                    }
                if (ok) acc[k] += tp.coeff * q.terms()[j].coeff;
            }
        }
        terms = map_to_terms_packed(acc, n);
    } else {
        std::map<ExponentVector, Coeff> acc;
        for (const auto& tp : p.terms())
            for (const auto& tq : q.terms()) {
                ExponentVector e(n);
                bool ok = true;
                for (int v = 0; v < n; ++v) {
                    int s = tp.exps[v] + tq.exps[v];
                    if (s > caps.cap(v)) {
                        ok = false;
                        break;
                    }
                    e.set(v, s);
                }
                if (ok) acc[e] += tp.coeff * tq.coeff;
            }
        terms = map_to_terms_wide(acc);
    }

    return SparsePolynomial(n, std::move(ordering), caps, std::move(terms));
}

std::optional<Term> find_monomial(const SparsePolynomial& p, const std::vector<VertexId>& zero_set,
                                  const CapVector& bound) {
    int n = p.nvars();
    if (bound.size() != n) throw Error(ErrorCode::BadParameter, "bound size mismatch");
    std::vector<char> zero(n, 0);
    for (VertexId v : zero_set) {
        if (v < 0 || v >= n) throw Error(ErrorCode::BadParameter, "zero_set vertex out of range");
        zero[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!zero[v] && bound.cap(v) > p.caps().cap(v))
            throw Error(ErrorCode::ExceedsCaps, "bound exceeds the polynomial's caps");

    for (const auto& t : p.terms()) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (zero[v] ? t.exps[v] != 0 : t.exps[v] > bound.cap(v)) ok = false;
        }
        if (ok) return t;
    }
    return std::nullopt;
}

Coeff evaluate(const SparsePolynomial& p, const std::vector<Coeff>& values) {
    if (static_cast<int>(values.size()) != p.nvars())
        throw Error(ErrorCode::BadParameter, "value count mismatch");
    Coeff total = 0;
    for (const auto& t : p.terms()) {
        Coeff prod = t.coeff;
        for (int v = 0; v < p.nvars(); ++v)
            for (int i = 0; i < t.exps[v]; ++i) prod *= values[v];
        total += prod;
    }
    return total;
}

void dump_polynomial(std::ostream& out, const SparsePolynomial& p) {
    for (const auto& t : p.terms()) {
        out << t.coeff;
        for (int v = 0; v < p.nvars(); ++v) out << ' ' << t.exps[v];
        out << '\n';
    }
}

std::vector<Term> parse_polynomial_dump(std::istream& in, int nvars) {
    std::vector<Term> terms;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string coeff_str;
        if (!(ls >> coeff_str)) continue;
        Coeff c;
        try {
            c = Coeff(coeff_str);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad coefficient: " + coeff_str);
        }
        ExponentVector e(nvars);
        for (int v = 0; v < nvars; ++v) {
            int x;
            if (!(ls >> x)) throw Error(ErrorCode::ParseError, "truncated exponent vector");
            e.set(v, x);
        }
        terms.push_back({std::move(e), std::move(c)});
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exps < b.exps; });
    return terms;
}

}  // namespace wheelcheck
