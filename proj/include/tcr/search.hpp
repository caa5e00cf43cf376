#pragma once

#include <chrono>
#include <cstdlib>
#include <optional>

#include "tcr/cnf.hpp"
#include "tcr/coloring.hpp"
#include "tcr/homomorphism.hpp"

namespace tcr {

// Wall-clock cutoff; default-constructed budgets never expire.
class Budget {
public:
    Budget() = default;

    static Budget seconds(double s) {
        Budget b;
        b.deadline_ = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(s));
        return b;
    }

    bool expired() const {
        return deadline_ && std::chrono::steady_clock::now() >= *deadline_;
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

enum class SolveStatus { sat, unsat, aborted };

struct SolveResult {
    SolveStatus status = SolveStatus::unsat;
    std::vector<bool> assignment;  // per variable, valid when sat
};

namespace detail {

struct Dpll {
    const std::vector<std::vector<int>>& clauses;
    const Budget& budget;
    std::vector<signed char> val;  // index by variable, -1 unknown
    std::vector<int> trail;
    unsigned steps = 0;

    Dpll(const CnfFormula& f, const Budget& b)
        : clauses(f.clauses), budget(b), val(f.num_vars + 1, -1) {}

    void assign(int lit) {
        val[std::abs(lit)] = lit > 0 ? 1 : 0;
        trail.push_back(std::abs(lit));
    }

    void undo(std::size_t mark) {
        while (trail.size() > mark) {
            val[trail.back()] = -1;
            trail.pop_back();
        }
    }

    // false on conflict
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const std::vector<int>& clause : clauses) {
                bool satisfied = false;
                int unassigned = 0, last = 0;
                for (int lit : clause) {
                    signed char v = val[std::abs(lit)];
                    if (v == -1) {
                        ++unassigned;
                        last = lit;
                    } else if ((v == 1) == (lit > 0)) {
                        satisfied = true;
                        break;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    assign(last);
                    changed = true;
                }
            }
        }
        return true;
    }

    // branch on the lowest-index unassigned variable, false before true
    SolveStatus run() {
        if ((++steps & 0xffu) == 0 && budget.expired()) return SolveStatus::aborted;
        std::size_t mark = trail.size();
        if (!propagate()) {
            undo(mark);
            return SolveStatus::unsat;
        }
        int branch = 0;
        for (int v = 1; v < static_cast<int>(val.size()); ++v)
            if (val[v] == -1) {
                branch = v;
                break;
            }
        if (branch == 0) return SolveStatus::sat;
        for (int b : {0, 1}) {
            std::size_t inner = trail.size();
            val[branch] = static_cast<signed char>(b);
            trail.push_back(branch);
            SolveStatus st = run();
            if (st != SolveStatus::unsat) return st;  // keep the model on sat
            undo(inner);
        }
        undo(mark);
        return SolveStatus::unsat;
    }
};

}  // namespace detail

// Complete, deterministic DPLL with unit propagation only.
inline SolveResult solve(const CnfFormula& f, const Budget& budget = Budget()) {
    SolveResult r;
    if (budget.expired()) {
        r.status = SolveStatus::aborted;
        return r;
    }
    detail::Dpll dpll(f, budget);
    r.status = dpll.run();
    if (r.status == SolveStatus::sat) {
        r.assignment.resize(f.num_vars);
        for (int v = 1; v <= f.num_vars; ++v) r.assignment[v - 1] = dpll.val[v] == 1;
    }
    return r;
}

// SAT assignment -> the coloring it describes, via the formula's triple index.
inline Coloring decode_coloring(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (f.universe <= 0 || f.var_triples.size() != static_cast<std::size_t>(f.num_vars))
        throw std::invalid_argument("formula has no triple index to decode against");
    if (assignment.size() != static_cast<std::size_t>(f.num_vars))
        throw std::invalid_argument("assignment size mismatch");
    std::vector<Triple> red;
    for (int i = 0; i < f.num_vars; ++i)
        if (assignment[i]) red.push_back(f.var_triples[i]);
    return Coloring::explicit_red(f.universe, std::move(red));
}

// The common solver "v"-line payload: space-separated signed literals with
// an optional trailing 0.
inline std::vector<bool> parse_assignment_line(const std::string& text, int num_vars) {
    std::istringstream in(text);
    std::vector<bool> assignment(num_vars, false);
    std::vector<bool> seen(num_vars, false);
    int lit;
    while (in >> lit) {
        if (lit == 0) break;
        int v = std::abs(lit);
        if (v < 1 || v > num_vars) throw std::runtime_error("literal out of range");
        assignment[v - 1] = lit > 0;
        seen[v - 1] = true;
    }
    for (int i = 0; i < num_vars; ++i)
        if (!seen[i]) throw std::runtime_error("assignment leaves variable " +
                                               std::to_string(i + 1) + " unset");
    return assignment;
}

// Explicit red hypergraph of a coloring (desk-scale only for oracle forms).
inline Hypergraph3 red_subgraph(const Coloring& c) {
    const int n = c.num_vertices();
    if (c.is_explicit()) return Hypergraph3(n, c.red_triples());
    std::vector<Triple> red;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int d = b + 1; d < n; ++d)
                if (c.is_red(a, b, d)) red.push_back(Triple{a, b, d});
    return Hypergraph3(n, std::move(red));
}

inline bool has_red_copy(const Coloring& c, const Hypergraph3& f) {
    return find_homomorphism(f, red_subgraph(c), 1).has_value();
}

inline bool has_blue_clique(const Coloring& c, int n) {
    const int big_n = c.num_vertices();
    if (n > big_n) return false;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(chosen.size()) == n) return true;
        for (int v = start; v <= big_n - (n - static_cast<int>(chosen.size())); ++v) {
            bool blue = true;
            for (std::size_t i = 0; i < chosen.size() && blue; ++i)
                for (std::size_t j = i + 1; j < chosen.size() && blue; ++j)
                    if (c.is_red(chosen[i], chosen[j], v)) blue = false;
            if (!blue) continue;
            chosen.push_back(v);
            if (self(self, v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

// Independent check that a coloring avoids every red family member and any
// blue n-clique.
inline bool avoids(const Coloring& c, const FamilySpec& family, int n) {
    if (has_blue_clique(c, n)) return false;
    for (const Hypergraph3& f : family.members)
        if (has_red_copy(c, f)) return false;
    return true;
}

struct RamseyResult {
    std::optional<int> value;      // empty means unknown
    int last_sat = 0;              // largest N confirmed satisfiable (0 = none)
    bool budget_exhausted = false;
};

// Smallest N at which avoidance becomes unsatisfiable, walking N upward
// from 3 so every smaller N is confirmed satisfiable on the way.
inline RamseyResult ramsey_exact(const FamilySpec& family, int n, int max_vertices,
                                 const Budget& budget = Budget()) {
    if (n < 3) throw std::invalid_argument("ramsey_exact requires n >= 3");
    if (max_vertices < 3) throw std::invalid_argument("ramsey_exact requires max_N >= 3");
    RamseyResult r;
    for (int big_n = 3; big_n <= max_vertices; ++big_n) {
        CnfFormula f = encode_avoidance(family, n, big_n);
        SolveResult s = solve(f, budget);
        if (s.status == SolveStatus::aborted) {
            r.budget_exhausted = true;
            return r;
        }
        if (s.status == SolveStatus::unsat) {
            r.value = big_n;
            return r;
        }
        r.last_sat = big_n;
    }
    return r;
}

}  // namespace tcr
