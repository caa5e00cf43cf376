// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tcr/blowup.hpp"
#include "tcr/cnf.hpp"
#include "tcr/coloring.hpp"
#include "tcr/extraction.hpp"
#include "tcr/homomorphism.hpp"
#include "tcr/hypergraph.hpp"
#include "tcr/io.hpp"
#include "tcr/search.hpp"

using namespace tcr;

namespace {

struct Criterion {
    int failures = 0;
    long long checks = 0;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
    void note(const std::string& line) { notes.push_back(line); }
};

int global_failures = 0;

void run(int id, const std::string& name, double budget_seconds,
         const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = dt <= budget_seconds;
    bool pass = c.failures == 0 && in_budget;
    std::printf("%s  %2d  %-46s  %lld checks  %8.3f s / %g s\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), c.checks, dt, budget_seconds);
    if (!in_budget) std::printf("          over the runtime budget\n");
    for (const std::string& n : c.notes) std::printf("          %s\n", n.c_str());
    if (!pass) ++global_failures;
}

// ---- shared helpers (independent re-implementations where they act as oracles) ----

std::optional<std::vector<int>> brute_force_hom(const Hypergraph3& f, const Hypergraph3& g) {
    const int nf = f.num_vertices();
    const int ng = g.num_vertices();
    if (nf == 0) return std::vector<int>{};
    if (ng == 0) return std::nullopt;
    std::vector<int> map(nf, 0);
    while (true) {
        bool ok = true;
        for (const Triple& e : f.edges()) {
            int a = map[e[0]], b = map[e[1]], c = map[e[2]];
            if (a == b || b == c || a == c || !g.has_edge(a, b, c)) {
                ok = false;
                break;
            }
        }
        if (ok) return map;
        int pos = nf - 1;
        while (pos >= 0 && map[pos] == ng - 1) map[pos--] = 0;
        if (pos < 0) return std::nullopt;
        ++map[pos];
    }
}

std::vector<int> chain_map_oracle(int s) {
    std::vector<int> cur{2, 3, 0, 1, 5, 4, 1, 0};
    int t = 8;
    if (s % 3 == 1) {
        std::vector<int> doubled(16);
        for (int j = 0; j < 16; ++j) doubled[j] = cur[j % 8];
        cur = doubled;
        t = 16;
    }
    while (t < s) {
        std::vector<int> stretched(t + 3);
        for (int j = 0; j < t; ++j) stretched[j] = cur[j];
        stretched[t] = cur[t - 3];
        stretched[t + 1] = cur[t - 2];
        stretched[t + 2] = cur[t - 1];
        cur = stretched;
        t += 3;
    }
    return cur;
}

bool certificate_sound(Criterion& c, const EmbeddingCertificate& cert) {
    bool ok = true;
    if (!verify_homomorphism(cert.hom).ok) ok = false;
    if (cert.p != multiplicity(cert.hom)) ok = false;
    std::vector<int> sorted = cert.lifted;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) ok = false;
    for (const Triple& e : cert.hom.source.edges())
        if (!blowup_has_edge(cert.hom.target, cert.p,
                             make_triple(cert.lifted[e[0]], cert.lifted[e[1]],
                                         cert.lifted[e[2]])))
            ok = false;
    c.require(ok, "certificate for s=" + std::to_string(cert.s) + " is unsound");
    return ok;
}

// all 2^{C(N,3)} colorings, checked directly with bitmasks
bool brute_avoidance_exists(const FamilySpec& family, int n, int big_n) {
    std::vector<Triple> triples;
    std::map<Triple, int> bit_of;
    for (int a = 0; a < big_n; ++a)
        for (int b = a + 1; b < big_n; ++b)
            for (int c = b + 1; c < big_n; ++c) {
                bit_of[Triple{a, b, c}] = static_cast<int>(triples.size());
                triples.push_back(Triple{a, b, c});
            }

    std::set<std::uint64_t> copy_masks;
    for (const Hypergraph3& member : family.members) {
        const int k = member.num_vertices();
        if (k > big_n) continue;
        std::vector<int> image(k, -1);
        std::vector<char> used(big_n, 0);
        auto rec = [&](auto&& self, int v) -> void {
            if (v == k) {
                std::uint64_t mask = 0;
                for (const Triple& e : member.edges())
                    mask |= 1ull
                            << bit_of.at(make_triple(image[e[0]], image[e[1]], image[e[2]]));
                copy_masks.insert(mask);
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

    std::vector<std::uint64_t> clique_masks;
    std::vector<int> subset;
    auto subsets = [&](auto&& self, int start) -> void {
        if (static_cast<int>(subset.size()) == n) {
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < subset.size(); ++i)
                for (std::size_t j = i + 1; j < subset.size(); ++j)
                    for (std::size_t k = j + 1; k < subset.size(); ++k)
                        mask |= 1ull << bit_of.at(Triple{subset[i], subset[j], subset[k]});
            clique_masks.push_back(mask);
            return;
        }
        for (int v = start; v < big_n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    subsets(subsets, 0);

    for (std::uint64_t red = 0; red < (1ull << triples.size()); ++red) {
        bool bad = false;
        for (std::uint64_t mask : copy_masks)
            if ((red & mask) == mask) {
                bad = true;
                break;
            }
        if (!bad)
            for (std::uint64_t mask : clique_masks)
                if ((red & mask) == 0) {
                    bad = true;
                    break;
                }
        if (!bad) return true;
    }
    return false;
}

Hypergraph3 random_graph(std::mt19937_64& rng, int min_vertices, int max_vertices,
                         int denom) {
    int n = min_vertices + static_cast<int>(rng() % (max_vertices - min_vertices + 1));
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (static_cast<int>(rng() % denom) == 0) edges.push_back(Triple{a, b, c});
    return Hypergraph3(n, std::move(edges));
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");

    // 1. The explicit C8 -> H6 map, exactly as displayed, with its lift.
    run(1, "C8 -> H6 map fidelity and lift", 0.001, [](Criterion& c) {
        Hypergraph3 h6_2 = blowup(h6(), 2).result;  // prebuilt, outside the hot path
        Homomorphism phi = phi_cycle8_to_h6();
        c.require(phi.map == std::vector<int>{2, 3, 0, 1, 5, 4, 1, 0},
                  "map differs from the displayed assignment");
        c.require(verify_homomorphism(phi).ok, "map is not a homomorphism");
        c.require(multiplicity(phi) == 2, "multiplicity is not 2");
        std::vector<int> lifted = lift_to_blowup(phi);
        std::vector<int> sorted = lifted;
        std::sort(sorted.begin(), sorted.end());
        c.require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                  "lift is not injective");
        for (const Triple& e : phi.source.edges())
            c.require(h6_2.has_edge(lifted[e[0]], lifted[e[1]], lifted[e[2]]),
                      "a lifted edge is missing from the 2-blowup");
    });

    // 2. Every chain certificate up to s = 200.
    run(2, "chain coverage for all valid s <= 200", 1.0, [](Criterion& c) {
        int count = 0;
        for (int s = 1; s <= 200; ++s) {
            if (!valid_s(s)) continue;
            ++count;
            EmbeddingCertificate cert = embedding_chain(s);
            if (!certificate_sound(c, cert)) continue;
            c.require(cert.hom.map == chain_map_oracle(s),
                      "chain map differs from the raw-formula reconstruction at s=" +
                          std::to_string(s));
            std::vector<int> census(6, 0);
            int census_max = 0;
            for (int v : cert.hom.map) census_max = std::max(census_max, ++census[v]);
            c.require(cert.p == census_max,
                      "p_s disagrees with the preimage census at s=" + std::to_string(s));
        }
        c.note("valid s values covered: " + std::to_string(count));
        c.require(count == 127, "valid_s count up to 200 changed");
        c.require(embedding_chain(8).p == 2, "p_8 != 2");
        c.require(embedding_chain(11).p == 3, "p_11 != 3");
        c.require(embedding_chain(14).p == 4, "p_14 != 4");
    });

    // 3. H6 embeds into K4(2) and H5(2).
    run(3, "H6 into K4(2) and H5(2)", 1.0, [](Criterion& c) {
        for (const Hypergraph3& target : {complete(4), h5()}) {
            auto phi = find_homomorphism(h6(), target, 2);
            c.require(phi.has_value(), "no capped homomorphism found");
            if (!phi) continue;
            c.require(verify_homomorphism(*phi).ok, "found map does not verify");
            c.require(multiplicity(*phi) <= 2, "preimage cap violated");
            std::vector<int> lifted = lift_to_blowup(*phi);
            Hypergraph3 doubled = blowup(target, 2).result;
            std::vector<int> sorted = lifted;
            std::sort(sorted.begin(), sorted.end());
            c.require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                      "lift not injective");
            for (const Triple& e : phi->source.edges())
                c.require(doubled.has_edge(lifted[e[0]], lifted[e[1]], lifted[e[2]]),
                          "lifted edge missing in the 2-blowup");
        }
    });

    // 4. Search agrees with exhaustive map enumeration.
    run(4, "homomorphism search vs exhaustive oracle", 30.0, [](Criterion& c) {
        std::mt19937_64 rng(20240613);
        for (int trial = 0; trial < 200; ++trial) {
            Hypergraph3 f = random_graph(rng, 1, 5, 3);
            Hypergraph3 g = random_graph(rng, 1, 5, 3);
            auto found = find_homomorphism(f, g);
            auto expected = brute_force_hom(f, g);
            c.require(found.has_value() == expected.has_value(),
                      "existence disagrees at trial " + std::to_string(trial));
            if (found)
                c.require(verify_homomorphism(*found).ok,
                          "witness fails verification at trial " + std::to_string(trial));
        }
    });

    // 5. The derandomized deletion bound meets its exact ceiling.
    run(5, "independent-set bound on 100 random graphs", 60.0, [](Criterion& c) {
        std::mt19937_64 rng(20240614);
        int fallback = 0;
        for (int trial = 0; trial < 100; ++trial) {
            int n = 1 + static_cast<int>(rng() % 200);
            Hypergraph3 g = random_graph(rng, std::max(n, 3), std::max(n, 3),
                                         1 + static_cast<int>(rng() % 40));
            std::vector<int> ind = spencer_independent_set(g);
            c.require(is_independent(g, ind), "output set is not independent");
            int bound = spencer_bound(g.num_vertices(), g.num_edges());
            c.require(static_cast<int>(ind.size()) >= bound - 1,
                      "output below even the -1 fallback at trial " + std::to_string(trial));
            if (static_cast<int>(ind.size()) < bound) {
                ++fallback;
                c.note("fallback instance: trial " + std::to_string(trial) + " N=" +
                       std::to_string(g.num_vertices()) + " m=" +
                       std::to_string(g.num_edges()) + " got " +
                       std::to_string(ind.size()) + " < " + std::to_string(bound));
            }
        }
        c.note("rounding-rule fallback instances: " + std::to_string(fallback));
    });

    // 6. Unconditional soundness of extraction on random colorings.
    run(6, "extraction soundness, 1000 random colorings", 120.0, [](Criterion& c) {
        std::mt19937_64 rng(20240615);
        int invalid = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            int n_vertices = 1 + static_cast<int>(rng() % 40);
            int n = 1 + static_cast<int>(rng() % 4);
            std::uint64_t p_num = rng() % 101;
            Coloring col = Coloring::random(n_vertices, p_num, 100, rng());
            Witness w = ramsey_witness(col, n);
            if (w.kind != Witness::Kind::failure && !verify_witness(col, n, w)) ++invalid;
        }
        c.require(invalid == 0,
                  std::to_string(invalid) + " non-failure witnesses failed verification");
    });

    // 7. Completeness in the guarantee regime N >= 4^n (n!)^2.
    run(7, "extraction completeness at n=3, N=2304", 600.0, [](Criterion& c) {
        std::vector<Coloring> colorings{Coloring::all_red(2304)};
        for (std::uint64_t p_num : {3, 5, 9})
            for (std::uint64_t seed : {1, 2, 3})
                colorings.push_back(Coloring::random(2304, p_num, 10, seed));
        for (const Coloring& col : colorings) {
            auto t0 = std::chrono::steady_clock::now();
            Witness w = ramsey_witness(col, 3);
            double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            c.require(w.kind != Witness::Kind::failure,
                      "failure in the guarantee regime (" + col.spec_string() + ")");
            c.require(verify_witness(col, 3, w),
                      "witness fails verification (" + col.spec_string() + ")");
            c.require(dt < 600.0, "instance over its 10-minute budget");
        }

        // n = 2, N = 64 through an explicit .col3 round trip
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Triple> red;
        Coloring sampler = Coloring::random(64, 5, 10, 7);
        for (int a = 0; a < 64; ++a)
            for (int b = a + 1; b < 64; ++b)
                for (int d = b + 1; d < 64; ++d)
                    if (sampler.is_red(a, b, d)) red.push_back(Triple{a, b, d});
        Coloring explicit_col = parse_col3(write_col3(Coloring::explicit_red(64, red)));
        Witness w = ramsey_witness(explicit_col, 2);
        c.require(w.kind != Witness::Kind::failure, "n=2 explicit instance failed");
        c.require(verify_witness(explicit_col, 2, w), "n=2 witness fails verification");
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.require(dt < 1.0, "n=2, N=64 instance took " + std::to_string(dt) + " s >= 1 s");
    });

    // 8. Tiny exact Ramsey values and solver-vs-enumeration agreement.
    run(8, "tiny exact Ramsey values and DPLL oracle", 60.0, [](Criterion& c) {
        RamseyResult k4 = ramsey_exact(FamilySpec({complete(4)}), 3, 10);
        c.require(k4.value && *k4.value == 4, "r({K4}, K_3) != 4");
        RamseyResult edge = ramsey_exact(FamilySpec({complete(3)}), 3, 10);
        c.require(edge.value && *edge.value == 3, "r({edge}, K_3) != 3");

        struct Case {
            FamilySpec family;
            int n;
        };
        std::vector<Case> cases{{FamilySpec({complete(4)}), 3},
                                {FamilySpec({complete(3)}), 3},
                                {FamilySpec({k4_minus_e()}), 4}};
        for (const Case& cs : cases)
            for (int big_n = 3; big_n <= 5; ++big_n) {
                bool via_solver =
                    solve(encode_avoidance(cs.family, cs.n, big_n)).status == SolveStatus::sat;
                bool via_enumeration = brute_avoidance_exists(cs.family, cs.n, big_n);
                c.require(via_solver == via_enumeration,
                          "DPLL disagrees with enumeration at N=" + std::to_string(big_n));
            }
    });

    // 9. The cloning inequality, both sides computed exactly.
    run(9, "supersaturation desk check (single edge, f=3)", 300.0, [](Criterion& c) {
        FamilySpec base({complete(3)});
        RamseyResult r_base = ramsey_exact(base, 3, 10);
        c.require(r_base.value.has_value(), "base Ramsey value not determined");
        Hypergraph3 cloned = clone(complete(3), 2).result;
        RamseyResult r_cloned = ramsey_exact(FamilySpec({cloned}), 3, 40);
        c.require(r_cloned.value.has_value(), "cloned Ramsey value not determined");
        if (r_base.value && r_cloned.value) {
            long long rhs = 1;
            for (int i = 0; i < 3; ++i) rhs *= *r_base.value;
            rhs += 3;
            c.require(*r_cloned.value < rhs,
                      "r(F(v)) = " + std::to_string(*r_cloned.value) +
                          " does not beat r(F)^3 + 3 = " + std::to_string(rhs));
            c.note("r(F) = " + std::to_string(*r_base.value) +
                   ", r(F(v)) = " + std::to_string(*r_cloned.value) +
                   ", bound = " + std::to_string(rhs));
        }
    });

    // 10. Every text format round-trips exactly.
    run(10, "format round trips", 10.0, [](Criterion& c) {
        for (const Hypergraph3& g : {tight_cycle(8), h6(), blowup(h5(), 2).result}) {
            std::string text = write_h3(g);
            c.require(parse_h3(text) == g, ".h3 value round trip");
            c.require(write_h3(parse_h3(text)) == text, ".h3 byte round trip");
        }

        HomFile hf = hom_file(embedding_chain(11).hom);
        c.require(parse_hom(write_hom(hf)) == hf, ".hom value round trip");
        c.require(write_hom(parse_hom(write_hom(hf))) == write_hom(hf),
                  ".hom byte round trip");

        BlowupMap b = blowup(h6(), 3);
        c.require(parse_map(write_map(b.origin)) == b.origin, ".map round trip");

        Coloring col = Coloring::explicit_red(
            9, {Triple{0, 1, 2}, Triple{2, 5, 8}, Triple{3, 4, 5}});
        c.require(parse_col3(write_col3(col)) == col, ".col3 value round trip");
        c.require(write_col3(parse_col3(write_col3(col))) == write_col3(col),
                  ".col3 byte round trip");

        std::vector<Witness> witnesses{
            Witness::red_copy(RedPattern::k4, {4, 7, 1, 2}),
            Witness::red_copy(RedPattern::h6, {0, 1, 2, 4, 6, 7}),
            Witness::blue_clique({0, 3, 9}),
            Witness::failure({"n=5 |V|=30: no heavy pair", "second line"})};
        for (const Witness& w : witnesses) {
            c.require(parse_wit(write_wit(w)) == w, ".wit value round trip");
            c.require(write_wit(parse_wit(write_wit(w))) == write_wit(w),
                      ".wit byte round trip");
        }

        CnfFormula f = encode_avoidance(FamilySpec({complete(4)}), 3, 4);
        std::string dimacs = export_dimacs(f);
        c.require(parse_dimacs(dimacs) == f, "DIMACS value round trip");
        c.require(export_dimacs(parse_dimacs(dimacs)) == dimacs, "DIMACS byte round trip");
    });

    std::printf("%s: %d criterion failure(s)\n",
                global_failures == 0 ? "acceptance PASSED" : "acceptance FAILED",
                global_failures);
    return global_failures;
}
