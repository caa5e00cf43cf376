#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "tcr/blowup.hpp"
#include "tcr/cnf.hpp"
#include "tcr/extraction.hpp"
#include "tcr/homomorphism.hpp"
#include "tcr/hypergraph.hpp"
#include "tcr/io.hpp"
#include "tcr/search.hpp"

namespace {

// exit codes: 0 success, 1 usage, 2 legitimate failure, 3 verification mismatch
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailure = 2;
constexpr int kMismatch = 3;

struct Globals {
    bool quiet = false;
    double budget_seconds = 0;  // 0 = unlimited
    std::uint64_t seed = 0;
    std::string out;  // empty = per-command default
};

void info(const Globals& g, const std::string& line) {
    if (!g.quiet) std::cerr << line << "\n";
}

tcr::Budget make_budget(const Globals& g) {
    return g.budget_seconds > 0 ? tcr::Budget::seconds(g.budget_seconds) : tcr::Budget();
}

// writes to a file, or to stdout when the path is "-"
void emit(const Globals& g, const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    tcr::write_file(path, text);
    info(g, "wrote " + path);
}

std::string map_sidecar_path(const std::string& h3_path) {
    std::string stem = h3_path;
    if (stem.size() > 3 && stem.substr(stem.size() - 3) == ".h3")
        stem.resize(stem.size() - 3);
    return stem + ".map";
}

long long parse_int(const std::string& s) {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

tcr::Hypergraph3 family_token(const std::string& token) {
    if (token == "k4") return tcr::complete(4);
    if (token == "edge") return tcr::complete(3);
    if (token == "k4e") return tcr::k4_minus_e();
    if (token == "h5") return tcr::h5();
    if (token == "h6") return tcr::h6();
    if (token.rfind("cycle:", 0) == 0)
        return tcr::tight_cycle(static_cast<int>(parse_int(token.substr(6))));
    if (token.rfind("complete:", 0) == 0)
        return tcr::complete(static_cast<int>(parse_int(token.substr(9))));
    if (token.size() > 3 && token.substr(token.size() - 3) == ".h3")
        return tcr::parse_h3(tcr::read_file(token));
    throw std::invalid_argument("unknown family member '" + token +
                                "' (try k4, edge, k4e, h5, h6, cycle:<s>, complete:<n>, "
                                "or a .h3 path)");
}

tcr::FamilySpec parse_family(const std::string& spec) {
    std::vector<tcr::Hypergraph3> members;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        std::string token = spec.substr(start, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - start);
        if (!token.empty()) members.push_back(family_token(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return tcr::FamilySpec(std::move(members));
}

// "all-red" | "all-blue" | "random:<p>[:<seed>]" | path to a .col3 file
tcr::Coloring coloring_from_cli(int n, const std::string& spec, const Globals& g) {
    if (spec.rfind("random:", 0) == 0 && spec.find(':', 7) == std::string::npos) {
        auto [num, den] = tcr::Coloring::parse_probability(spec.substr(7));
        return tcr::Coloring::random(n, num, den, g.seed);
    }
    if (spec == "all-red" || spec == "all-blue" || spec.rfind("random:", 0) == 0)
        return tcr::Coloring::from_spec(n, spec);
    tcr::Coloring c = tcr::parse_col3(tcr::read_file(spec));
    if (c.num_vertices() != n)
        throw std::invalid_argument("coloring file has N = " +
                                    std::to_string(c.num_vertices()) +
                                    " but the command was given N = " + std::to_string(n));
    return c;
}

int run_gen(const Globals& g, const std::vector<std::string>& args) {
    const std::string& kind = args[0];
    auto want = [&](std::size_t n) {
        if (args.size() != n + 1)
            throw std::invalid_argument("gen " + kind + " takes " + std::to_string(n) +
                                        " parameter(s)");
    };

    if (kind == "blowup") {
        if (args.size() < 3) throw std::invalid_argument("usage: gen blowup <base> [param] <p>");
        const std::string& base_kind = args[1];
        tcr::Hypergraph3 base;
        std::size_t next = 2;
        if (base_kind == "cycle" || base_kind == "complete") {
            if (args.size() < 4)
                throw std::invalid_argument("gen blowup " + base_kind +
                                            " needs a parameter and p");
            int param = static_cast<int>(parse_int(args[2]));
            base = base_kind == "cycle" ? tcr::tight_cycle(param) : tcr::complete(param);
            next = 3;
        } else {
            base = family_token(base_kind);
        }
        if (args.size() != next + 1)
            throw std::invalid_argument("gen blowup: too many parameters");
        int p = static_cast<int>(parse_int(args[next]));
        tcr::BlowupMap b = tcr::blowup(base, p);

        std::string stem = "blowup-" + base_kind;
        for (std::size_t i = 2; i < next; ++i) stem += args[i];
        stem += "-" + std::to_string(p);
        std::string out = g.out.empty() ? stem + ".h3" : g.out;
        if (out == "-")
            throw std::invalid_argument("gen blowup needs a file path for the .map sidecar");
        emit(g, out, tcr::write_h3(b.result));
        emit(g, map_sidecar_path(out), tcr::write_map(b.origin));
        return kOk;
    }

    tcr::Hypergraph3 graph;
    std::string stem;
    if (kind == "cycle") {
        want(1);
        int s = static_cast<int>(parse_int(args[1]));
        graph = tcr::tight_cycle(s);
        stem = "cycle" + std::to_string(s);
    } else if (kind == "complete") {
        want(1);
        int n = static_cast<int>(parse_int(args[1]));
        graph = tcr::complete(n);
        stem = "complete" + std::to_string(n);
    } else if (kind == "h5" || kind == "h6" || kind == "k4e") {
        want(0);
        graph = family_token(kind);
        stem = kind;
    } else {
        throw std::invalid_argument("unknown kind '" + kind +
                                    "' (cycle, complete, h5, h6, k4e, blowup)");
    }
    emit(g, g.out.empty() ? stem + ".h3" : g.out, tcr::write_h3(graph));
    return kOk;
}

int run_embed(const Globals& g, int s) {
    tcr::EmbeddingCertificate cert;
    try {
        cert = tcr::embedding_chain(s);
    } catch (const std::invalid_argument& e) {
        std::cerr << "embed: " << e.what() << "\n";
        return kFailure;
    }

    // re-verify everything before printing
    if (!tcr::verify_homomorphism(cert.hom).ok || cert.p != tcr::multiplicity(cert.hom)) {
        std::cerr << "embed: certificate failed re-verification\n";
        return kMismatch;
    }
    std::vector<int> sorted = cert.lifted;
    std::sort(sorted.begin(), sorted.end());
    bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    bool edges_ok = true;
    for (const tcr::Triple& e : cert.hom.source.edges())
        if (!tcr::blowup_has_edge(cert.hom.target, cert.p,
                                  tcr::make_triple(cert.lifted[e[0]], cert.lifted[e[1]],
                                                   cert.lifted[e[2]])))
            edges_ok = false;
    if (!injective || !edges_ok) {
        std::cerr << "embed: lifted embedding failed re-verification\n";
        return kMismatch;
    }

    std::ostringstream out;
    out << tcr::write_hom(tcr::hom_file(cert.hom));
    out << "p_s = " << cert.p << "\n";
    out << "lift " << s << " " << cert.hom.target.num_vertices() * cert.p << "\n";
    for (std::size_t i = 0; i < cert.lifted.size(); ++i)
        out << i << " -> " << cert.lifted[i] << "\n";
    emit(g, g.out.empty() ? "-" : g.out, out.str());
    info(g, "verified C_" + std::to_string(s) + " embedding with p_s = " +
                std::to_string(cert.p));
    // human-readable summary in 1-based circular labels
    for (int t = 0; t < cert.hom.target.num_vertices(); ++t) {
        std::string preimages;
        int count = 0;
        for (std::size_t v = 0; v < cert.hom.map.size(); ++v)
            if (cert.hom.map[v] == t) {
                preimages += (count++ ? ", " : "") + std::to_string(v + 1);
            }
        if (count >= 2)
            info(g, "target " + std::to_string(t) + " folds cycle vertices {" + preimages +
                        "} (1-based)");
    }
    return kOk;
}

int run_hom(const Globals& g, const std::string& source_path, const std::string& target_path,
            std::optional<int> cap) {
    tcr::Hypergraph3 source = tcr::parse_h3(tcr::read_file(source_path));
    tcr::Hypergraph3 target = tcr::parse_h3(tcr::read_file(target_path));
    auto found = tcr::find_homomorphism(source, target, cap);
    if (!found) {
        std::cerr << "hom: no homomorphism found\n";
        return kFailure;
    }
    if (!tcr::verify_homomorphism(*found).ok) {
        std::cerr << "hom: search result failed re-verification\n";
        return kMismatch;
    }
    std::ostringstream out;
    out << tcr::write_hom(tcr::hom_file(*found));
    out << "multiplicity = " << tcr::multiplicity(*found) << "\n";
    emit(g, g.out.empty() ? "-" : g.out, out.str());
    return kOk;
}

int run_extract(const Globals& g, int n, int big_n, const std::string& spec) {
    tcr::Coloring c = coloring_from_cli(big_n, spec, g);
    tcr::Witness w = tcr::ramsey_witness(c, n);
    emit(g, g.out.empty() ? "witness.wit" : g.out, tcr::write_wit(w));
    if (w.kind == tcr::Witness::Kind::failure) {
        std::cerr << "extract: no witness found (N below the guarantee threshold?)\n";
        return kFailure;
    }
    if (!tcr::verify_witness(c, n, w)) {
        std::cerr << "extract: witness failed re-verification\n";
        return kMismatch;
    }
    info(g, std::string("verified ") +
                (w.kind == tcr::Witness::Kind::red_copy
                     ? std::string("red ") + tcr::pattern_name(w.pattern) + " witness"
                     : "blue clique witness"));
    return kOk;
}

int run_verify(const Globals& g, const std::string& wit_path, int big_n,
               const std::string& spec, std::optional<int> n_flag) {
    tcr::Witness w = tcr::parse_wit(tcr::read_file(wit_path));
    tcr::Coloring c = coloring_from_cli(big_n, spec, g);
    int n = n_flag ? *n_flag
                   : (w.kind == tcr::Witness::Kind::blue_clique
                          ? static_cast<int>(w.vertices.size())
                          : 0);
    if (tcr::verify_witness(c, n, w)) {
        std::cout << "valid\n";
        return kOk;
    }
    std::cout << "invalid\n";
    return kFailure;
}

int run_cnf(const Globals& g, const std::string& family_str, int n, int big_n,
            const std::string& assignment_path, const std::string& col3_out) {
    tcr::FamilySpec family = parse_family(family_str);
    tcr::CnfFormula f = tcr::encode_avoidance(family, n, big_n);

    if (!assignment_path.empty()) {
        // import an external solver's model and export the coloring it encodes
        std::string payload;
        for (const std::string& line :
             tcr::detail::split_lines(tcr::read_file(assignment_path), nullptr)) {
            std::string body = line;
            if (!body.empty() && (body[0] == 'v' || body[0] == 'V')) body = body.substr(1);
            payload += body + " ";
        }
        std::vector<bool> assignment = tcr::parse_assignment_line(payload, f.num_vars);
        bool satisfies = true;
        for (const std::vector<int>& clause : f.clauses) {
            bool sat = false;
            for (int lit : clause)
                if ((lit > 0) == assignment[std::abs(lit) - 1]) sat = true;
            if (!sat) satisfies = false;
        }
        if (!satisfies) {
            std::cerr << "cnf: assignment does not satisfy the formula\n";
            return kFailure;
        }
        tcr::Coloring c = tcr::decode_coloring(f, assignment);
        emit(g, col3_out.empty() ? "-" : col3_out, tcr::write_col3(c));
        return kOk;
    }

    emit(g, g.out.empty() ? "-" : g.out, tcr::export_dimacs(f));
    return kOk;
}

int run_ramsey(const Globals& g, const std::string& family_str, int n, int max_n) {
    tcr::FamilySpec family = parse_family(family_str);
    tcr::RamseyResult r = tcr::ramsey_exact(family, n, max_n, make_budget(g));

    if (r.value && r.last_sat > 0) {
        // re-verify the last satisfiable level through the independent checker
        tcr::CnfFormula f = tcr::encode_avoidance(family, n, r.last_sat);
        tcr::SolveResult s = tcr::solve(f);
        if (s.status != tcr::SolveStatus::sat ||
            !tcr::avoids(tcr::decode_coloring(f, s.assignment), family, n)) {
            std::cerr << "ramsey: witness coloring failed re-verification\n";
            return kMismatch;
        }
    }

    if (r.value) {
        std::cout << "r = " << *r.value;
        if (r.last_sat > 0)
            std::cout << " (SAT at N=" << r.last_sat << ", UNSAT at N=" << *r.value << ")\n";
        else
            std::cout << " (UNSAT at N=" << *r.value << ", the smallest N searched)\n";
    } else if (r.budget_exhausted) {
        std::cout << "unknown (budget exhausted; last SAT N=" << r.last_sat << ")\n";
    } else {
        std::cout << "unknown (still SAT at N=" << r.last_sat << ", raise --max-N)\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tcr: tight cycles, blowups, and Ramsey witnesses over 3-graphs"};
    app.require_subcommand(1);

    Globals g;
    app.add_flag("--quiet", g.quiet, "suppress informational output");
    app.add_option("--budget-seconds", g.budget_seconds,
                   "wall-clock budget for solver-backed commands (0 = unlimited)");
    app.add_option("--seed", g.seed, "seed for 'random:<p>' coloring specs without one");
    app.add_option("--out", g.out, "output path ('-' = stdout)");

    auto* gen = app.add_subcommand("gen", "write a named 3-graph as .h3 (+ .map for blowups)");
    std::vector<std::string> gen_args;
    gen->add_option("args", gen_args,
                    "cycle <s> | complete <n> | h5 | h6 | k4e | blowup <base> [param] <p>")
        ->required()
        ->expected(-1);
    gen->fallthrough();

    auto* embed = app.add_subcommand("embed", "certify the tight-cycle embedding chain for s");
    int embed_s = 0;
    embed->add_option("s", embed_s, "cycle length")->required();
    embed->fallthrough();

    auto* hom = app.add_subcommand("hom", "search for a homomorphism between two .h3 files");
    std::string hom_src, hom_tgt;
    int hom_cap = 0;
    hom->add_option("source", hom_src, "source .h3")->required();
    hom->add_option("target", hom_tgt, "target .h3")->required();
    hom->add_option("--cap", hom_cap, "max preimages per target vertex");
    hom->fallthrough();

    auto* extract = app.add_subcommand("extract",
                                       "find a red K4/H5/H6 or a blue n-clique in a coloring");
    int ext_n = 0, ext_big_n = 0;
    std::string ext_spec;
    extract->add_option("n", ext_n, "blue clique size")->required();
    extract->add_option("N", ext_big_n, "number of vertices")->required();
    extract
        ->add_option("coloring", ext_spec, "all-red | all-blue | random:<p>:<seed> | file.col3")
        ->required();
    extract->fallthrough();

    auto* verify = app.add_subcommand("verify", "re-check a .wit witness against a coloring");
    std::string ver_wit, ver_spec;
    int ver_big_n = 0, ver_n = -1;
    verify->add_option("witness", ver_wit, "path to .wit")->required();
    verify->add_option("N", ver_big_n, "number of vertices")->required();
    verify->add_option("coloring", ver_spec, "coloring spec or .col3 path")->required();
    verify->add_option("--n", ver_n, "expected blue clique size (default: from the file)");
    verify->fallthrough();

    auto* cnf = app.add_subcommand("cnf", "export the avoidance encoding as DIMACS");
    std::string cnf_family, cnf_assignment, cnf_col3_out;
    int cnf_n = 0, cnf_big_n = 0;
    cnf->add_option("--family", cnf_family, "comma-separated members")->required();
    cnf->add_option("--n", cnf_n, "blue clique size")->required();
    cnf->add_option("--N", cnf_big_n, "number of vertices")->required();
    cnf->add_option("--decode-assignment", cnf_assignment,
                    "solver model file to convert into a coloring");
    cnf->add_option("--out-col3", cnf_col3_out, "where to write the decoded .col3");
    cnf->fallthrough();

    auto* ramsey = app.add_subcommand("ramsey", "exact Ramsey number by increasing N");
    std::string ram_family;
    int ram_n = 0, ram_max = 12;
    ramsey->add_option("--family", ram_family, "comma-separated members")->required();
    ramsey->add_option("--n", ram_n, "blue clique size")->required();
    ramsey->add_option("--max-N", ram_max, "give up (unknown) beyond this N");
    ramsey->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) return run_gen(g, gen_args);
        if (embed->parsed()) return run_embed(g, embed_s);
        if (hom->parsed())
            return run_hom(g, hom_src, hom_tgt,
                           hom->count("--cap") ? std::optional<int>(hom_cap) : std::nullopt);
        if (extract->parsed()) return run_extract(g, ext_n, ext_big_n, ext_spec);
        if (verify->parsed())
            return run_verify(g, ver_wit, ver_big_n, ver_spec,
                              verify->count("--n") ? std::optional<int>(ver_n) : std::nullopt);
        if (cnf->parsed())
            return run_cnf(g, cnf_family, cnf_n, cnf_big_n, cnf_assignment, cnf_col3_out);
        if (ramsey->parsed()) return run_ramsey(g, ram_family, ram_n, ram_max);
    } catch (const std::exception& e) {
        std::cerr << argv[0] << ": " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
