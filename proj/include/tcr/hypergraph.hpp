#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcr {

using VertexId = int;
using Triple = std::array<int, 3>;

inline Triple make_triple(int a, int b, int c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
        throw std::invalid_argument("triple must have three distinct vertices");
    return t;
}

// Exact rational with canonical (reduced, positive-denominator) form.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool operator==(const Rational&) const = default;
};

inline bool operator==(const Rational& r, long long v) { return r.den == 1 && r.num == v; }

// A finite 3-uniform hypergraph: vertices {0..n-1} and a canonically
// sorted duplicate-free list of 3-element edges. Immutable once built.
class Hypergraph3 {
public:
    Hypergraph3() = default;

    Hypergraph3(int num_vertices, std::vector<Triple> edges)
        : n_(num_vertices), edges_(std::move(edges)) {
        if (n_ < 0) throw std::invalid_argument("negative vertex count");
        for (Triple& e : edges_) {
            std::sort(e.begin(), e.end());
            if (e[0] == e[1] || e[1] == e[2])
                throw std::invalid_argument("edge with a repeated vertex");
            if (e[0] < 0 || e[2] >= n_)
                throw std::invalid_argument("edge vertex out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Triple>& edges() const { return edges_; }

    bool has_edge(int a, int b, int c) const {
        Triple t = make_triple(a, b, c);
        return std::binary_search(edges_.begin(), edges_.end(), t);
    }
    bool has_edge(const Triple& t) const { return has_edge(t[0], t[1], t[2]); }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (const Triple& e : edges_)
            if (e[0] == v || e[1] == v || e[2] == v) ++d;
        return d;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }

    bool operator==(const Hypergraph3&) const = default;

private:
    int n_ = 0;
    std::vector<Triple> edges_;
};

// Tight cycle on Z_s: edges {i, i+1, i+2} mod s.
inline Hypergraph3 tight_cycle(int s) {
    if (s < 4) throw std::invalid_argument("tight cycle requires s >= 4");
    std::vector<Triple> edges;
    edges.reserve(s);
    for (int i = 0; i < s; ++i)
        edges.push_back(make_triple(i, (i + 1) % s, (i + 2) % s));
    return Hypergraph3(s, std::move(edges));
}

inline Hypergraph3 complete(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                edges.push_back(Triple{a, b, c});
    return Hypergraph3(n, std::move(edges));
}

// Five vertices labeled (a,b,u,v,w) = (0,1,2,3,4).
inline Hypergraph3 h5() {
    return Hypergraph3(5, {Triple{0, 1, 2}, Triple{0, 1, 3}, Triple{0, 1, 4},
                           Triple{0, 2, 3}, Triple{1, 2, 4}});
}

// Six vertices labeled (a,b,u,v,w,x) = (0,1,2,3,4,5).
inline Hypergraph3 h6() {
    return Hypergraph3(6, {Triple{0, 1, 2}, Triple{0, 1, 3}, Triple{0, 1, 4},
                           Triple{0, 1, 5}, Triple{0, 2, 3}, Triple{1, 4, 5}});
}

// K_4 with the lexicographically last edge {1,2,3} removed.
inline Hypergraph3 k4_minus_e() {
    return Hypergraph3(4, {Triple{0, 1, 2}, Triple{0, 1, 3}, Triple{0, 2, 3}});
}

inline int codegree(const Hypergraph3& h, int a, int b) {
    h.check_vertex(a);
    h.check_vertex(b);
    if (a == b) throw std::invalid_argument("codegree of a vertex with itself");
    int d = 0;
    for (const Triple& e : h.edges()) {
        bool has_a = e[0] == a || e[1] == a || e[2] == a;
        bool has_b = e[0] == b || e[1] == b || e[2] == b;
        if (has_a && has_b) ++d;
    }
    return d;
}

// N(a,b): the third vertices of edges through both a and b, ascending.
inline std::vector<int> pair_link(const Hypergraph3& h, int a, int b) {
    h.check_vertex(a);
    h.check_vertex(b);
    if (a == b) throw std::invalid_argument("pair link of a vertex with itself");
    std::vector<int> link;
    for (const Triple& e : h.edges()) {
        bool has_a = e[0] == a || e[1] == a || e[2] == a;
        bool has_b = e[0] == b || e[1] == b || e[2] == b;
        if (has_a && has_b)
            for (int x : e)
                if (x != a && x != b) link.push_back(x);
    }
    std::sort(link.begin(), link.end());
    return link;
}

// Induced subgraph plus the relabeling back to the original vertices:
// new vertex i was original[i].
struct InducedSubgraph {
    Hypergraph3 graph;
    std::vector<int> original;
};

inline InducedSubgraph induced(const Hypergraph3& h, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) h.check_vertex(v);
    auto local = [&s](int v) {
        return static_cast<int>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
    };
    auto inside = [&s](int v) { return std::binary_search(s.begin(), s.end(), v); };
    std::vector<Triple> edges;
    for (const Triple& e : h.edges())
        if (inside(e[0]) && inside(e[1]) && inside(e[2]))
            edges.push_back(Triple{local(e[0]), local(e[1]), local(e[2])});
    return {Hypergraph3(static_cast<int>(s.size()), std::move(edges)), std::move(s)};
}

inline bool is_independent(const Hypergraph3& h, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) h.check_vertex(v);
    auto inside = [&s](int v) { return std::binary_search(s.begin(), s.end(), v); };
    for (const Triple& e : h.edges())
        if (inside(e[0]) && inside(e[1]) && inside(e[2])) return false;
    return true;
}

// 3|E|/|V| as an exact rational.
inline Rational average_degree(const Hypergraph3& h) {
    if (h.num_vertices() == 0)
        throw std::invalid_argument("average degree of an empty vertex set");
    return Rational(3 * static_cast<long long>(h.num_edges()), h.num_vertices());
}

}  // namespace tcr
