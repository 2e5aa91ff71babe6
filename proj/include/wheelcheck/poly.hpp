#ifndef WHEELCHECK_POLY_HPP
#define WHEELCHECK_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "wheelcheck/graph.hpp"

namespace wheelcheck {

using Coeff = boost::multiprecision::cpp_int;

// Per-vertex exponents of one monomial; value semantics, lexicographic order.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(int n) : e_(n, 0) {}
    static ExponentVector of(const std::vector<int>& e) {
        ExponentVector v(static_cast<int>(e.size()));
        for (size_t i = 0; i < e.size(); ++i) v.set(static_cast<int>(i), e[i]);
        return v;
    }

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int v) const { return e_[v]; }
    void set(int v, int exp) {
        if (exp < 0 || exp > 255) throw Error(ErrorCode::BadParameter, "exponent out of range");
        e_[v] = static_cast<uint8_t>(exp);
    }
    int total_degree() const {
        int t = 0;
        for (uint8_t x : e_) t += x;
        return t;
    }

    auto operator<=>(const ExponentVector&) const = default;

private:
    std::vector<uint8_t> e_;
};

// Per-vertex exponent caps; kUnbounded means no cap for that vertex.
class CapVector {
public:
    static constexpr int kUnbounded = 1 << 20;

    CapVector() = default;
    static CapVector unbounded(int n) { return CapVector(n, kUnbounded); }
    static CapVector uniform(int n, int cap) { return CapVector(n, cap); }
    static CapVector of(const std::vector<int>& caps) {
        CapVector c(static_cast<int>(caps.size()), 0);
        for (size_t i = 0; i < caps.size(); ++i) c.set(static_cast<int>(i), caps[i]);
        return c;
    }

    int size() const { return static_cast<int>(c_.size()); }
    int cap(int v) const { return c_[v]; }
    bool is_unbounded(int v) const { return c_[v] >= kUnbounded; }
    void set(int v, int cap) {
        if (cap < 0) throw Error(ErrorCode::BadParameter, "negative cap");
        c_[v] = cap >= kUnbounded ? kUnbounded : cap;
    }

    bool within(const ExponentVector& e) const {
        for (int v = 0; v < size(); ++v)
            if (e[v] > c_[v]) return false;
        return true;
    }
    // Every cap of `tight` is at most ours.
    bool covers(const CapVector& tight) const {
        for (int v = 0; v < size(); ++v)
            if (tight.c_[v] > c_[v]) return false;
        return true;
    }

    bool operator==(const CapVector&) const = default;

private:
    CapVector(int n, int cap) : c_(n, cap >= kUnbounded ? kUnbounded : cap) {}
    std::vector<int> c_;
};

struct Term {
    ExponentVector exps;
    Coeff coeff;
};

// Finite monomial -> coefficient map under a cap vector. Terms are kept
// sorted lexicographically by exponent vector with no zero coefficients.
// The ordering records which vertex comes first in each edge factor.
class SparsePolynomial {
public:
    SparsePolynomial() = default;
    SparsePolynomial(int nvars, std::vector<VertexId> ordering, CapVector caps,
                     std::vector<Term> sorted_terms)
        : nvars_(nvars),
          ordering_(std::move(ordering)),
          caps_(std::move(caps)),
          terms_(std::move(sorted_terms)) {}

    static SparsePolynomial constant(int nvars, const Coeff& c, const CapVector& caps,
                                     std::vector<VertexId> ordering = {});

    int nvars() const { return nvars_; }
    const std::vector<VertexId>& ordering() const { return ordering_; }
    const CapVector& caps() const { return caps_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // True when every term has the same total degree (zero polynomial counts).
    bool is_homogeneous() const;

private:
    int nvars_ = 0;
    std::vector<VertexId> ordering_;
    CapVector caps_;
    std::vector<Term> terms_;
};

std::vector<VertexId> identity_ordering(int n);

// Capped expansion of the product over edges {a,b}, a before b in the
// ordering, of (x_a - x_b). Monomials exceeding the caps are dropped as
// soon as they appear; sound because exponents only grow.
SparsePolynomial graph_polynomial(const PlaneGraph& g, const std::vector<VertexId>& ordering,
                                  const CapVector& caps);

// Same expansion over an explicit edge list (the variable space may be
// larger than the vertices actually touched).
SparsePolynomial polynomial_of_edges(int nvars, const std::vector<EdgePair>& edges,
                                     const std::vector<VertexId>& ordering,
                                     const CapVector& caps);

// Stored coefficient or 0. Queries outside the caps are unanswerable and
// throw ExceedsCaps.
Coeff coefficient(const SparsePolynomial& p, const ExponentVector& e);

SparsePolynomial multiply(const SparsePolynomial& p, const SparsePolynomial& q,
                          const CapVector& caps);

// Nonzero term with exponent 0 on zero_set and exponents <= bound
// elsewhere; lexicographically smallest exponent vector when several.
std::optional<Term> find_monomial(const SparsePolynomial& p,
                                  const std::vector<VertexId>& zero_set, const CapVector& bound);

Coeff evaluate(const SparsePolynomial& p, const std::vector<Coeff>& values);

// Dump format: one term per line, `<coeff> <e0> ... <en-1>`, sorted
// lexicographically by exponent vector.
void dump_polynomial(std::ostream& out, const SparsePolynomial& p);
std::vector<Term> parse_polynomial_dump(std::istream& in, int nvars);

}  // namespace wheelcheck

#endif
