#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "tcr/hypergraph.hpp"

namespace tcr {

// Propositional encoding over one variable per triple of [0, N); variable
// true means the triple is red.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    int universe = 0;                 // N when triple-indexed, else 0
    std::vector<Triple> var_triples;  // var i+1 <-> var_triples[i]

    bool operator==(const CnfFormula&) const = default;
};

// Nonempty family of 3-graphs, each with at least one edge.
struct FamilySpec {
    std::vector<Hypergraph3> members;

    explicit FamilySpec(std::vector<Hypergraph3> ms) : members(std::move(ms)) {
        if (members.empty()) throw std::invalid_argument("family must be nonempty");
        for (const Hypergraph3& f : members)
            if (f.num_edges() == 0)
                throw std::invalid_argument("family member with no edges");
    }
};

namespace detail {

// injective maps of [0, nf) into [0, big_n), lexicographic order
template <class Fn>
inline void for_each_injection(int nf, int big_n, Fn&& fn) {
    std::vector<int> image(nf, -1);
    std::vector<char> used(big_n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == nf) {
            fn(image);
            return;
        }
        for (int t = 0; t < big_n; ++t) {
            if (used[t]) continue;
            used[t] = 1;
            image[v] = t;
            self(self, v + 1);
            used[t] = 0;
        }
    };
    rec(rec, 0);
}

template <class Fn>
inline void for_each_subset(int big_n, int k, Fn&& fn) {
    std::vector<int> subset(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            fn(subset);
            return;
        }
        for (int v = start; v <= big_n - (k - pos); ++v) {
            subset[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace detail

// Satisfiable iff some red/blue coloring of the triples of [0, N) has no
// red copy of any family member and no blue n-clique. Red copies are
// forbidden by one all-negative clause per distinct image edge set; every
// n-subset contributes one all-positive clause (some internal triple red).
inline CnfFormula encode_avoidance(const FamilySpec& family, int n, int big_n) {
    if (n < 3) throw std::invalid_argument("encode_avoidance requires n >= 3");
    if (big_n < 3) throw std::invalid_argument("encode_avoidance requires N >= 3");

    CnfFormula f;
    f.universe = big_n;
    std::map<Triple, int> var_of;
    for (int a = 0; a < big_n; ++a)
        for (int b = a + 1; b < big_n; ++b)
            for (int c = b + 1; c < big_n; ++c) {
                f.var_triples.push_back(Triple{a, b, c});
                var_of[Triple{a, b, c}] = static_cast<int>(f.var_triples.size());
            }
    f.num_vars = static_cast<int>(f.var_triples.size());

    std::set<std::vector<int>> red_clauses;
    for (const Hypergraph3& member : family.members) {
        if (member.num_vertices() > big_n) continue;  // no injective image
        detail::for_each_injection(member.num_vertices(), big_n, [&](const std::vector<int>& image) {
            std::vector<int> clause;
            clause.reserve(member.num_edges());
            for (const Triple& e : member.edges())
                clause.push_back(-var_of.at(make_triple(image[e[0]], image[e[1]], image[e[2]])));
            std::sort(clause.begin(), clause.end(), [](int x, int y) {
                return std::abs(x) < std::abs(y);
            });
            red_clauses.insert(std::move(clause));
        });
    }
    for (const std::vector<int>& clause : red_clauses) f.clauses.push_back(clause);

    detail::for_each_subset(big_n, n, [&](const std::vector<int>& subset) {
        std::vector<int> clause;
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = i + 1; j < subset.size(); ++j)
                for (std::size_t k = j + 1; k < subset.size(); ++k)
                    clause.push_back(var_of.at(Triple{subset[i], subset[j], subset[k]}));
        std::sort(clause.begin(), clause.end());
        f.clauses.push_back(std::move(clause));
    });

    return f;
}

// Standard DIMACS CNF; comment lines record the triple <-> variable
// bijection so assignments can be decoded back into colorings.
inline std::string export_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    if (f.universe > 0 && f.var_triples.size() == static_cast<std::size_t>(f.num_vars)) {
        out << "c N " << f.universe << "\n";
        for (std::size_t i = 0; i < f.var_triples.size(); ++i)
            out << "c var " << i + 1 << " = " << f.var_triples[i][0] << " "
                << f.var_triples[i][1] << " " << f.var_triples[i][2] << "\n";
    }
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const std::vector<int>& clause : f.clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

inline CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula f;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    std::size_t num_clauses = 0;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::istringstream ls(line);
            std::string c, tag;
            ls >> c >> tag;
            if (tag == "N") {
                if (!(ls >> f.universe)) throw std::runtime_error("bad 'c N' line");
            } else if (tag == "var") {
                int idx, a, b, cc;
                std::string eq;
                if (!(ls >> idx >> eq >> a >> b >> cc) || eq != "=")
                    throw std::runtime_error("bad 'c var' line");
                if (idx != static_cast<int>(f.var_triples.size()) + 1)
                    throw std::runtime_error("variable comments out of order");
                f.var_triples.push_back(make_triple(a, b, cc));
            }
            continue;
        }
        if (!have_header) {
            std::istringstream ls(line);
            std::string p, cnf;
            if (!(ls >> p >> cnf >> f.num_vars >> num_clauses) || p != "p" || cnf != "cnf")
                throw std::runtime_error("missing 'p cnf' header");
            have_header = true;
            continue;
        }
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(pending);
                pending.clear();
            } else {
                if (std::abs(lit) > f.num_vars)
                    throw std::runtime_error("literal out of range");
                pending.push_back(lit);
            }
        }
    }
    if (!have_header) throw std::runtime_error("missing 'p cnf' header");
    if (!pending.empty()) throw std::runtime_error("clause not terminated by 0");
    if (f.clauses.size() != num_clauses)
        throw std::runtime_error("clause count does not match header");
    if (!f.var_triples.empty() &&
        f.var_triples.size() != static_cast<std::size_t>(f.num_vars))
        throw std::runtime_error("incomplete variable comments");
    return f;
}

}  // namespace tcr
