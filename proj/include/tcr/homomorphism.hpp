#pragma once

#include <functional>
#include <optional>

#include "tcr/blowup.hpp"
#include "tcr/hypergraph.hpp"

namespace tcr {

// Total vertex map between two 3-graphs. Valid when every source edge
// maps to a target edge through three distinct images.
struct Homomorphism {
    Hypergraph3 source;
    Hypergraph3 target;
    std::vector<int> map;  // map[source vertex] = target vertex

    bool operator==(const Homomorphism&) const = default;
};

struct HomCheck {
    bool ok = true;
    std::optional<Triple> violating;  // first source edge that fails
    explicit operator bool() const { return ok; }
};

inline HomCheck verify_homomorphism(const Homomorphism& phi) {
    if (static_cast<int>(phi.map.size()) != phi.source.num_vertices())
        throw std::invalid_argument("map is not total on the source vertices");
    for (int img : phi.map)
        if (img < 0 || img >= phi.target.num_vertices())
            throw std::invalid_argument("map image out of target range");
    for (const Triple& e : phi.source.edges()) {
        int a = phi.map[e[0]], b = phi.map[e[1]], c = phi.map[e[2]];
        if (a == b || b == c || a == c) return {false, e};
        if (!phi.target.has_edge(a, b, c)) return {false, e};
    }
    return {true, std::nullopt};
}

namespace detail {
inline Homomorphism checked(Homomorphism phi, const char* what) {
    if (!verify_homomorphism(phi))
        throw std::logic_error(std::string(what) + ": constructed map is not a homomorphism");
    return phi;
}
}  // namespace detail

// The explicit map C_8^3 -> H_6. In 1-based cycle labels:
// 1->u, 2->v, 3->a, 4->b, 5->x, 6->w, 7->b, 8->a.
inline Homomorphism phi_cycle8_to_h6() {
    return detail::checked({tight_cycle(8), h6(), {2, 3, 0, 1, 5, 4, 1, 0}},
                           "phi_cycle8_to_h6");
}

// C_{s+3}^3 -> C_s^3: identity on the first s vertices, the three extra
// vertices fold back onto the last three (1-based: s+1 -> s-2, s+2 -> s-1,
// s+3 -> s).
inline Homomorphism phi_stretch(int s) {
    if (s < 5) throw std::invalid_argument("stretch requires s >= 5");
    std::vector<int> map(s + 3);
    for (int j = 0; j < s; ++j) map[j] = j;
    map[s] = s - 3;
    map[s + 1] = s - 2;
    map[s + 2] = s - 1;
    return detail::checked({tight_cycle(s + 3), tight_cycle(s), std::move(map)},
                           "phi_stretch");
}

// C_{2s}^3 -> C_s^3: reduce modulo s; every target vertex gets exactly two
// preimages.
inline Homomorphism phi_double(int s) {
    if (s < 4) throw std::invalid_argument("double requires s >= 4");
    std::vector<int> map(2 * s);
    for (int j = 0; j < 2 * s; ++j) map[j] = j % s;
    return detail::checked({tight_cycle(2 * s), tight_cycle(s), std::move(map)},
                           "phi_double");
}

// g after f; requires f's target and g's source to be the same hypergraph.
inline Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose: middle hypergraphs differ");
    std::vector<int> map(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i]];
    return detail::checked({f.source, g.target, std::move(map)}, "compose");
}

// Largest preimage count over target vertices.
inline int multiplicity(const Homomorphism& phi) {
    std::vector<int> count(phi.target.num_vertices(), 0);
    for (int img : phi.map) ++count[img];
    int m = 0;
    for (int c : count) m = std::max(m, c);
    return m;
}

// Injective map of the source into blowup(target, multiplicity(phi)):
// the j-th preimage (ascending) of each target vertex takes clone j.
inline std::vector<int> lift_to_blowup(const Homomorphism& phi) {
    if (!verify_homomorphism(phi))
        throw std::invalid_argument("lift_to_blowup: map is not a homomorphism");
    const int p = multiplicity(phi);
    std::vector<int> next_clone(phi.target.num_vertices(), 0);
    std::vector<int> lifted(phi.map.size());
    for (std::size_t v = 0; v < phi.map.size(); ++v) {
        int t = phi.map[v];
        lifted[v] = t * p + next_clone[t]++;
    }
    return lifted;
}

// Backtracking search for a homomorphism F -> G, assigning source vertices
// in ascending order and target candidates in ascending order; returns the
// lexicographically first solution. cap bounds the preimage count of every
// target vertex.
inline std::optional<Homomorphism> find_homomorphism(const Hypergraph3& f,
                                                     const Hypergraph3& g,
                                                     std::optional<int> cap = std::nullopt) {
    const int nf = f.num_vertices();
    const int ng = g.num_vertices();
    if (nf == 0) return Homomorphism{f, g, {}};
    if (ng == 0) return std::nullopt;

    // edges become checkable once their largest vertex is assigned
    std::vector<std::vector<Triple>> ready(nf);
    for (const Triple& e : f.edges()) ready[e[2]].push_back(e);

    std::vector<int> map(nf, -1);
    std::vector<int> preimages(ng, 0);

    std::function<bool(int)> assign = [&](int v) -> bool {
        if (v == nf) return true;
        for (int t = 0; t < ng; ++t) {
            if (cap && preimages[t] >= *cap) continue;
            map[v] = t;
            bool ok = true;
            for (const Triple& e : ready[v]) {
                int a = map[e[0]], b = map[e[1]], c = map[e[2]];
                if (a == b || b == c || a == c || !g.has_edge(a, b, c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ++preimages[t];
                if (assign(v + 1)) return true;
                --preimages[t];
            }
            map[v] = -1;
        }
        return false;
    };

    if (!assign(0)) return std::nullopt;
    return Homomorphism{f, g, std::move(map)};
}

// s values for which the stretch/double chain out of the C_8 -> H_6 base
// map exists: s not divisible by 3, and s >= 16 or s in {8, 11, 14}.
inline bool valid_s(int s) {
    return s % 3 != 0 && (s >= 16 || s == 8 || s == 11 || s == 14);
}

// A verified embedding C_s^3 into a blowup of H_6: the chain homomorphism,
// its preimage multiplicity p, and the lifted injective vertex map.
struct EmbeddingCertificate {
    int s = 0;
    Homomorphism hom;
    int p = 0;
    std::vector<int> lifted;
};

inline EmbeddingCertificate embedding_chain(int s) {
    if (!valid_s(s)) {
        if (s % 3 == 0)
            throw std::invalid_argument(
                "s = " + std::to_string(s) +
                " is divisible by 3: the 3-partite regime has polynomial Ramsey growth "
                "and no chain is defined");
        throw std::invalid_argument("s = " + std::to_string(s) +
                                    " is an open small case (s in {4,5,7,10,13})");
    }
    Homomorphism hom = phi_cycle8_to_h6();
    int t = 8;
    if (s % 3 == 1) {
        hom = compose(phi_double(8), hom);
        t = 16;
    }
    while (t < s) {
        hom = compose(phi_stretch(t), hom);
        t += 3;
    }
    int p = multiplicity(hom);
    std::vector<int> lifted = lift_to_blowup(hom);
    return {s, std::move(hom), p, std::move(lifted)};
}

}  // namespace tcr
