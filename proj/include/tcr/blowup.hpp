#pragma once

#include "tcr/hypergraph.hpp"

namespace tcr {

// A cloning/blowup result together with the clone-origin of every result
// vertex. origin viewed as a vertex map result -> base is a homomorphism.
struct BlowupMap {
    Hypergraph3 base;
    Hypergraph3 result;
    std::vector<int> origin;  // origin[result vertex] = base vertex
};

// Replace v's incidences by a fresh clone w appended as the last vertex:
// every edge through v is duplicated with w in v's place, and no edge
// contains both v and w.
inline BlowupMap clone(const Hypergraph3& f, int v) {
    f.check_vertex(v);
    const int w = f.num_vertices();
    std::vector<Triple> edges = f.edges();
    for (const Triple& e : f.edges()) {
        if (e[0] == v || e[1] == v || e[2] == v) {
            Triple swapped = e;
            for (int& x : swapped)
                if (x == v) x = w;
            std::sort(swapped.begin(), swapped.end());
            edges.push_back(swapped);
        }
    }
    std::vector<int> origin(w + 1);
    for (int i = 0; i < w; ++i) origin[i] = i;
    origin[w] = v;
    return {f, Hypergraph3(w + 1, std::move(edges)), std::move(origin)};
}

// F(p): every base vertex u becomes the clone block {u*p, ..., u*p+p-1};
// edges pick one clone of each vertex of each base edge.
inline BlowupMap blowup(const Hypergraph3& f, int p) {
    if (p < 1) throw std::invalid_argument("blowup multiplicity must be >= 1");
    const int nv = f.num_vertices() * p;
    std::vector<Triple> edges;
    edges.reserve(f.num_edges() * static_cast<std::size_t>(p) * p * p);
    for (const Triple& e : f.edges())
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                for (int k = 0; k < p; ++k)
                    edges.push_back(make_triple(e[0] * p + i, e[1] * p + j, e[2] * p + k));
    std::vector<int> origin(nv);
    for (int i = 0; i < nv; ++i) origin[i] = i / p;
    return {f, Hypergraph3(nv, std::move(edges)), std::move(origin)};
}

// True iff no edge contains both v and w and swapping v <-> w maps the
// edge set onto itself.
inline bool is_clone(const Hypergraph3& h, int v, int w) {
    h.check_vertex(v);
    h.check_vertex(w);
    if (v == w) throw std::invalid_argument("is_clone of a vertex with itself");
    for (const Triple& e : h.edges()) {
        bool has_v = e[0] == v || e[1] == v || e[2] == v;
        bool has_w = e[0] == w || e[1] == w || e[2] == w;
        if (has_v && has_w) return false;
        if (has_v || has_w) {
            Triple swapped = e;
            for (int& x : swapped) {
                if (x == v) x = w;
                else if (x == w) x = v;
            }
            if (!h.has_edge(swapped)) return false;
        }
    }
    return true;
}

// Membership test for blowup(base, p).result edges without materializing
// the blowup: origins must be distinct and form a base edge.
inline bool blowup_has_edge(const Hypergraph3& base, int p, const Triple& t) {
    if (p < 1) throw std::invalid_argument("blowup multiplicity must be >= 1");
    for (int x : t)
        if (x < 0 || x >= base.num_vertices() * p) return false;
    int a = t[0] / p, b = t[1] / p, c = t[2] / p;
    if (a == b || b == c || a == c) return false;
    return base.has_edge(a, b, c);
}

}  // namespace tcr
