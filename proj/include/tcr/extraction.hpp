#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <utility>

#include "tcr/bignat.hpp"
#include "tcr/coloring.hpp"
#include "tcr/hypergraph.hpp"

namespace tcr {

// N >= 4^n (n!)^2 guarantees extraction never fails at parameter n.
struct GuaranteeThreshold {
    int n = 0;
    BigNat bound;
};

inline GuaranteeThreshold threshold(int n) {
    if (n < 1) throw std::invalid_argument("threshold requires n >= 1");
    BigNat b(1);
    for (int i = 1; i <= n; ++i) b *= 4ull * i * i;  // 4^n (n!)^2 = prod of 4i^2
    return {n, b};
}

namespace detail {

using u128 = unsigned __int128;

inline u128 isqrt(u128 x) {
    u128 r = 0, bit = (u128)1 << 126;
    while (bit > x) bit >>= 2;
    while (bit != 0) {
        if (x >= r + bit) {
            x -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

// Inclusion probability 1/sqrt(D) as a fraction num/den <= the true value:
// exact when n/(3m) is a square of a rational, otherwise floor at a
// power-of-two denominator large enough that the ceiling guarantee is kept.
inline std::pair<std::uint64_t, std::uint64_t> inclusion_probability(std::uint64_t n,
                                                                     std::uint64_t m) {
    std::uint64_t g = std::gcd(n, 3 * m);
    std::uint64_t a = n / g, b = 3 * m / g;
    std::uint64_t ra = (std::uint64_t)isqrt(a), rb = (std::uint64_t)isqrt(b);
    if (ra * ra == a && rb * rb == b) return {ra, rb};
    int shift = 33;
    while (shift > 1 && ((u128)(n + 7 * m) << (3 * shift)) >= ((u128)1 << 124)) --shift;
    std::uint64_t den = 1ull << shift;
    std::uint64_t num = (std::uint64_t)isqrt((u128)den * den * n / (3 * m));
    return {num, den};
}

}  // namespace detail

// Exact integer form of the guarantee floor: the least k with
// k >= (2/3) N / sqrt(max(D, 1)) where D = 3m/N is the average degree.
inline int spencer_bound(int n, std::uint64_t m) {
    if (n <= 0) return 0;
    std::uint64_t nn = static_cast<std::uint64_t>(n);
    if (3 * m < nn) return static_cast<int>((2 * nn + 2) / 3);  // ceil(2N/3)
    // least k with 27 k^2 m >= 4 N^3
    detail::u128 lhs_target = (detail::u128)4 * nn * nn * nn;
    std::uint64_t k = (std::uint64_t)detail::isqrt(lhs_target / (27 * m));
    while ((detail::u128)27 * k * k * m < lhs_target) ++k;
    return static_cast<int>(k);
}

// Independent set of size >= spencer_bound(N, |E|), found deterministically:
// the method of conditional expectations on |S| - e(S) with inclusion
// probability 1/sqrt(D), then one deletion per surviving internal edge.
// When D < 1 every vertex is kept and only deletions run.
inline std::vector<int> spencer_independent_set(const Hypergraph3& h) {
    const int n = h.num_vertices();
    if (n == 0) throw std::invalid_argument("empty vertex set");
    const auto& edges = h.edges();
    const std::uint64_t m = edges.size();

    std::vector<char> in_set(n, 1);

    if (m > 0 && 3 * m >= static_cast<std::uint64_t>(n)) {
        auto [num, den] = detail::inclusion_probability(n, m);

        std::vector<std::vector<int>> incident(n);
        for (std::size_t e = 0; e < edges.size(); ++e)
            for (int v : edges[e]) incident[v].push_back(static_cast<int>(e));

        std::vector<std::uint8_t> undecided(edges.size(), 3);
        std::vector<char> alive(edges.size(), 1);

        // scaled marginal edge cost of keeping v: sum of p^{u-1}; keep while <= 1
        const detail::u128 one = (detail::u128)den * den * den;
        const detail::u128 term[3] = {one, (detail::u128)num * den * den,
                                      (detail::u128)num * num * den};
        for (int v = 0; v < n; ++v) {
            detail::u128 cost = 0;
            bool keep = true;
            for (int e : incident[v]) {
                if (!alive[e]) continue;
                cost += term[undecided[e] - 1];
                if (cost > one) {
                    keep = false;
                    break;
                }
            }
            if (keep) {
                for (int e : incident[v])
                    if (alive[e]) --undecided[e];
            } else {
                in_set[v] = 0;
                for (int e : incident[v]) alive[e] = 0;
            }
        }
    }

    // delete the largest vertex of every edge still inside the set
    for (const Triple& e : edges)
        if (in_set[e[0]] && in_set[e[1]] && in_set[e[2]]) in_set[e[2]] = 0;

    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (in_set[v]) out.push_back(v);
    return out;
}

enum class RedPattern { k4, h5, h6 };

inline Hypergraph3 pattern_graph(RedPattern p) {
    switch (p) {
        case RedPattern::k4: return complete(4);
        case RedPattern::h5: return h5();
        case RedPattern::h6: return h6();
    }
    throw std::logic_error("bad pattern");
}

inline const char* pattern_name(RedPattern p) {
    switch (p) {
        case RedPattern::k4: return "K4";
        case RedPattern::h5: return "H5";
        case RedPattern::h6: return "H6";
    }
    throw std::logic_error("bad pattern");
}

inline std::vector<std::string> pattern_roles(RedPattern p) {
    switch (p) {
        case RedPattern::k4: return {"a", "b", "u", "v"};
        case RedPattern::h5: return {"a", "b", "u", "v", "w"};
        case RedPattern::h6: return {"a", "b", "u", "v", "w", "x"};
    }
    throw std::logic_error("bad pattern");
}

// Outcome of extraction: an embedded red pattern, a blue clique (equally:
// an independent set of the red hypergraph), or a diagnosed failure, which
// is only reachable below the guarantee threshold.
struct Witness {
    enum class Kind { red_copy, blue_clique, failure };

    Kind kind = Kind::failure;
    RedPattern pattern = RedPattern::k4;      // red_copy only
    std::vector<int> vertices;                // red: image per pattern vertex; blue: the set
    std::vector<std::string> diagnostics;     // failure only

    static Witness red_copy(RedPattern p, std::vector<int> vs) {
        Witness w;
        w.kind = Kind::red_copy;
        w.pattern = p;
        w.vertices = std::move(vs);
        return w;
    }
    static Witness blue_clique(std::vector<int> vs) {
        Witness w;
        w.kind = Kind::blue_clique;
        w.vertices = std::move(vs);
        return w;
    }
    static Witness failure(std::vector<std::string> diag) {
        Witness w;
        w.kind = Kind::failure;
        w.diagnostics = std::move(diag);
        return w;
    }

    bool operator==(const Witness&) const = default;
};

namespace detail {

// Red triples seen either through an explicit hypergraph or a coloring.
class RedView {
public:
    explicit RedView(const Hypergraph3& g) : graph_(&g) {}
    explicit RedView(const Coloring& c) : col_(&c) {}

    bool red(int a, int b, int c) const {
        return graph_ != nullptr ? graph_->has_edge(a, b, c) : col_->is_red(a, b, c);
    }
    bool never_red() const {
        return col_ != nullptr && col_->kind() == Coloring::Kind::all_blue;
    }
    // whether the red triples can be listed without scanning all of [V]^3
    bool enumerable() const {
        return graph_ != nullptr || col_->is_explicit();
    }
    const std::vector<Triple>& red_list() const {
        return graph_ != nullptr ? graph_->edges() : col_->red_triples();
    }

private:
    const Hypergraph3* graph_ = nullptr;
    const Coloring* col_ = nullptr;
};

// min(4^{n-1}((n-1)!)^2 + 1, |V|); codegrees never reach |V| - 1, so the
// saturated value keeps every comparison meaningful without big arithmetic.
inline std::uint64_t heavy_pair_threshold(int n, std::uint64_t n_vertices) {
    BigNat d = threshold(n - 1).bound;
    if (d.compare_u64(n_vertices) >= 0) return n_vertices;
    return d.to_u64() + 1;
}

inline bool contains_sorted(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

// Lexicographically first pair of v_set with red codegree >= dplus1 inside
// v_set, or nothing.
inline std::optional<std::pair<int, int>> first_heavy_pair(const RedView& view,
                                                           const std::vector<int>& v_set,
                                                           std::uint64_t dplus1) {
    const std::size_t nv = v_set.size();
    if (nv < 3 || dplus1 + 2 > nv || view.never_red()) return std::nullopt;

    if (view.enumerable()) {
        std::unordered_map<std::uint64_t, std::uint64_t> counts;
        auto key = [](int a, int b) {
            return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
        };
        for (const Triple& t : view.red_list()) {
            if (!contains_sorted(v_set, t[0]) || !contains_sorted(v_set, t[1]) ||
                !contains_sorted(v_set, t[2]))
                continue;
            ++counts[key(t[0], t[1])];
            ++counts[key(t[0], t[2])];
            ++counts[key(t[1], t[2])];
        }
        std::uint64_t best = UINT64_MAX;
        for (const auto& [k, c] : counts)
            if (c >= dplus1 && k < best) best = k;
        if (best == UINT64_MAX) return std::nullopt;
        return std::make_pair(static_cast<int>(best >> 32),
                              static_cast<int>(best & 0xffffffffu));
    }

    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
            std::uint64_t count = 0;
            for (std::size_t k = 0; k < nv && count < dplus1; ++k) {
                if (k == i || k == j) continue;
                if (view.red(v_set[i], v_set[j], v_set[k])) ++count;
            }
            if (count >= dplus1) return std::make_pair(v_set[i], v_set[j]);
        }
    }
    return std::nullopt;
}

// Red subhypergraph induced on v_set (ascending), in local labels.
inline Hypergraph3 red_subgraph_on(const RedView& view, const std::vector<int>& v_set) {
    const int k = static_cast<int>(v_set.size());
    std::vector<Triple> edges;
    if (view.never_red()) return Hypergraph3(k, {});
    if (view.enumerable()) {
        auto local = [&v_set](int v) {
            return static_cast<int>(std::lower_bound(v_set.begin(), v_set.end(), v) -
                                    v_set.begin());
        };
        for (const Triple& t : view.red_list())
            if (contains_sorted(v_set, t[0]) && contains_sorted(v_set, t[1]) &&
                contains_sorted(v_set, t[2]))
                edges.push_back(Triple{local(t[0]), local(t[1]), local(t[2])});
    } else {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l)
                    if (view.red(v_set[i], v_set[j], v_set[l]))
                        edges.push_back(Triple{i, j, l});
    }
    return Hypergraph3(k, std::move(edges));
}

inline bool extension_independent(const RedView& view, const std::vector<int>& s, int x) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (view.red(x, s[i], s[j])) return false;
    return true;
}

inline std::pair<int, int> first_red_pair(const RedView& view, const std::vector<int>& s,
                                          int x) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (view.red(x, s[i], s[j])) return {s[i], s[j]};
    throw std::logic_error("no red edge through a blocked extension vertex");
}

inline std::vector<int> with_vertex(std::vector<int> s, int x) {
    s.push_back(x);
    std::sort(s.begin(), s.end());
    return s;
}

inline Witness extract_core(const RedView& view, const std::vector<int>& v_set, int n,
                            std::vector<std::string>& trace) {
    if (n < 1) throw std::invalid_argument("extraction requires n >= 1");
    const std::string level = "n=" + std::to_string(n) + " |V|=" +
                              std::to_string(v_set.size());
    if (v_set.empty()) {
        trace.push_back(level + ": empty vertex set");
        return Witness::failure(trace);
    }

    if (n <= 2 && static_cast<int>(v_set.size()) >= n) {
        trace.push_back(level + ": base case");
        return Witness::blue_clique(std::vector<int>(v_set.begin(), v_set.begin() + n));
    }

    if (n >= 3) {
        std::uint64_t dplus1 = heavy_pair_threshold(n, v_set.size());
        auto heavy = first_heavy_pair(view, v_set, dplus1);
        if (heavy) {
            auto [a, b] = *heavy;
            std::vector<int> link;
            for (int x : v_set)
                if (x != a && x != b && view.red(a, b, x)) link.push_back(x);
            trace.push_back(level + ": pair (" + std::to_string(a) + "," +
                            std::to_string(b) + ") has codegree " +
                            std::to_string(link.size()) + " >= " + std::to_string(dplus1));

            Witness sub = extract_core(view, link, n - 1, trace);
            if (sub.kind == Witness::Kind::red_copy) return sub;
            if (sub.kind == Witness::Kind::blue_clique) {
                const std::vector<int>& s = sub.vertices;  // independent, size n-1
                if (extension_independent(view, s, a))
                    return Witness::blue_clique(with_vertex(s, a));
                if (extension_independent(view, s, b))
                    return Witness::blue_clique(with_vertex(s, b));

                auto [u1, v1] = first_red_pair(view, s, a);
                auto [w1, x1] = first_red_pair(view, s, b);
                std::vector<int> uni{u1, v1, w1, x1};
                std::sort(uni.begin(), uni.end());
                uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
                if (uni.size() == 2)
                    return Witness::red_copy(RedPattern::k4, {a, b, u1, v1});
                if (uni.size() == 3) {
                    int shared = (u1 == w1 || u1 == x1) ? u1 : v1;
                    int other_a = u1 == shared ? v1 : u1;
                    int other_b = w1 == shared ? x1 : w1;
                    return Witness::red_copy(RedPattern::h5,
                                             {a, b, shared, other_a, other_b});
                }
                return Witness::red_copy(RedPattern::h6, {a, b, u1, v1, w1, x1});
            }
            trace.push_back(level + ": recursion failed, falling back to deletion bound");
        }
    }

    Hypergraph3 sub = red_subgraph_on(view, v_set);
    std::vector<int> ind = spencer_independent_set(sub);
    if (static_cast<int>(ind.size()) >= n) {
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) out[i] = v_set[ind[i]];
        trace.push_back(level + ": deletion bound found an independent set of size " +
                        std::to_string(ind.size()));
        return Witness::blue_clique(std::move(out));
    }
    trace.push_back(level + ": no heavy pair and the deletion bound reached only " +
                    std::to_string(ind.size()) + " < " + std::to_string(n) +
                    " (possible only below the 4^n (n!)^2 guarantee)");
    return Witness::failure(trace);
}

}  // namespace detail

// Red pattern copy or independent set in H's own labels (blue_clique here
// means an independent set of H).
inline Witness find_red_or_independent(const Hypergraph3& h, int n) {
    if (n < 1) throw std::invalid_argument("extraction requires n >= 1");
    if (h.num_vertices() == 0) throw std::invalid_argument("hypergraph has no vertices");
    detail::RedView view(h);
    std::vector<int> v_set(h.num_vertices());
    std::iota(v_set.begin(), v_set.end(), 0);
    std::vector<std::string> trace;
    return detail::extract_core(view, v_set, n, trace);
}

// Runs extraction against the red hypergraph of a coloring, consulting the
// oracle directly; the red edge set is never materialized for oracle forms.
inline Witness ramsey_witness(const Coloring& c, int n) {
    if (n < 1) throw std::invalid_argument("extraction requires n >= 1");
    if (c.num_vertices() < 1) throw std::invalid_argument("coloring has no vertices");
    detail::RedView view(c);
    std::vector<int> v_set(c.num_vertices());
    std::iota(v_set.begin(), v_set.end(), 0);
    std::vector<std::string> trace;
    return detail::extract_core(view, v_set, n, trace);
}

// Independent check of a witness against a coloring. Never throws on a
// malformed witness; it just fails.
inline bool verify_witness(const Coloring& c, int n, const Witness& w) {
    const int big_n = c.num_vertices();
    switch (w.kind) {
        case Witness::Kind::failure:
            return false;
        case Witness::Kind::red_copy: {
            Hypergraph3 pat = pattern_graph(w.pattern);
            if (static_cast<int>(w.vertices.size()) != pat.num_vertices()) return false;
            std::vector<int> sorted = w.vertices;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                return false;
            if (sorted.front() < 0 || sorted.back() >= big_n) return false;
            for (const Triple& e : pat.edges())
                if (!c.is_red(w.vertices[e[0]], w.vertices[e[1]], w.vertices[e[2]]))
                    return false;
            return true;
        }
        case Witness::Kind::blue_clique: {
            if (static_cast<int>(w.vertices.size()) != n) return false;
            std::vector<int> sorted = w.vertices;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                return false;
            if (n > 0 && (sorted.front() < 0 || sorted.back() >= big_n)) return false;
            for (std::size_t i = 0; i < sorted.size(); ++i)
                for (std::size_t j = i + 1; j < sorted.size(); ++j)
                    for (std::size_t k = j + 1; k < sorted.size(); ++k)
                        if (c.is_red(sorted[i], sorted[j], sorted[k])) return false;
            return true;
        }
    }
    return false;
}

}  // namespace tcr
