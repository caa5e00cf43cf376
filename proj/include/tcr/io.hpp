#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "tcr/coloring.hpp"
#include "tcr/extraction.hpp"
#include "tcr/homomorphism.hpp"
#include "tcr/hypergraph.hpp"

namespace tcr {

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text, bool* ends_with_newline) {
    if (ends_with_newline) *ends_with_newline = !text.empty() && text.back() == '\n';
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
    return lines;
}

inline bool exact_ints(const std::string& line, std::vector<long long>& out, std::size_t count) {
    std::istringstream in(line);
    out.clear();
    long long v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) return false;
    return out.size() == count;
}

}  // namespace detail

// ---- .h3: "h3 <nv> <ne>" then sorted edge lines "a b c"; '#' comments ----

inline std::string write_h3(const Hypergraph3& h) {
    std::ostringstream out;
    out << "h3 " << h.num_vertices() << " " << h.num_edges() << "\n";
    for (const Triple& e : h.edges()) out << e[0] << " " << e[1] << " " << e[2] << "\n";
    return out.str();
}

inline Hypergraph3 parse_h3(const std::string& text) {
    bool newline_terminated = false;
    std::vector<std::string> raw = detail::split_lines(text, &newline_terminated);
    if (!newline_terminated) throw std::runtime_error(".h3: trailing newline required");
    std::vector<std::string> lines;
    for (std::string& line : raw)
        if (line.empty() || line[0] != '#') lines.push_back(std::move(line));
    if (lines.empty()) throw std::runtime_error(".h3: missing header");

    std::istringstream header(lines[0]);
    std::string magic;
    long long nv = -1, ne = -1;
    if (!(header >> magic >> nv >> ne) || magic != "h3" || nv < 0 || ne < 0)
        throw std::runtime_error(".h3: bad header '" + lines[0] + "'");
    if (lines.size() != static_cast<std::size_t>(ne) + 1)
        throw std::runtime_error(".h3: edge count does not match header");

    std::vector<Triple> edges;
    Triple prev{-1, -1, -1};
    std::vector<long long> v;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (!detail::exact_ints(lines[i], v, 3))
            throw std::runtime_error(".h3: bad edge line '" + lines[i] + "'");
        if (!(v[0] < v[1] && v[1] < v[2]))
            throw std::runtime_error(".h3: edge not strictly sorted: '" + lines[i] + "'");
        if (v[0] < 0 || v[2] >= nv)
            throw std::runtime_error(".h3: edge vertex out of range: '" + lines[i] + "'");
        Triple e{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
        if (!(prev < e))
            throw std::runtime_error(".h3: edges not sorted or duplicated at '" + lines[i] + "'");
        prev = e;
        edges.push_back(e);
    }
    return Hypergraph3(static_cast<int>(nv), std::move(edges));
}

// ---- .map: one "result_vertex base_vertex" line per result vertex ----

inline std::string write_map(const std::vector<int>& origin) {
    std::ostringstream out;
    for (std::size_t i = 0; i < origin.size(); ++i) out << i << " " << origin[i] << "\n";
    return out.str();
}

inline std::vector<int> parse_map(const std::string& text) {
    std::vector<std::string> lines = detail::split_lines(text, nullptr);
    std::vector<int> origin;
    std::vector<long long> v;
    for (const std::string& line : lines) {
        if (line.empty() || line[0] == '#') continue;
        if (!detail::exact_ints(line, v, 2))
            throw std::runtime_error(".map: bad line '" + line + "'");
        if (v[0] != static_cast<long long>(origin.size()))
            throw std::runtime_error(".map: result vertices out of order");
        origin.push_back(static_cast<int>(v[1]));
    }
    return origin;
}

// ---- .hom: "hom <src> <tgt>" then "i -> j" per source vertex, ascending ----

struct HomFile {
    int source_vertices = 0;
    int target_vertices = 0;
    std::vector<int> map;

    bool operator==(const HomFile&) const = default;
};

inline HomFile hom_file(const Homomorphism& phi) {
    return {phi.source.num_vertices(), phi.target.num_vertices(), phi.map};
}

inline std::string write_hom(const HomFile& f) {
    std::ostringstream out;
    out << "hom " << f.source_vertices << " " << f.target_vertices << "\n";
    for (std::size_t i = 0; i < f.map.size(); ++i) out << i << " -> " << f.map[i] << "\n";
    return out.str();
}

inline HomFile parse_hom(const std::string& text) {
    std::vector<std::string> lines = detail::split_lines(text, nullptr);
    if (lines.empty()) throw std::runtime_error(".hom: missing header");
    std::istringstream header(lines[0]);
    std::string magic;
    HomFile f;
    if (!(header >> magic >> f.source_vertices >> f.target_vertices) || magic != "hom" ||
        f.source_vertices < 0 || f.target_vertices < 0)
        throw std::runtime_error(".hom: bad header '" + lines[0] + "'");
    if (lines.size() != static_cast<std::size_t>(f.source_vertices) + 1)
        throw std::runtime_error(".hom: line count does not match header");
    for (int i = 0; i < f.source_vertices; ++i) {
        std::istringstream in(lines[i + 1]);
        int src, tgt;
        std::string arrow;
        if (!(in >> src >> arrow >> tgt) || arrow != "->" || src != i)
            throw std::runtime_error(".hom: bad line '" + lines[i + 1] + "'");
        if (tgt < 0 || tgt >= f.target_vertices)
            throw std::runtime_error(".hom: image out of range in '" + lines[i + 1] + "'");
        f.map.push_back(tgt);
    }
    return f;
}

// ---- .col3: "col3 <N> <num_red>" then sorted red triples ----

inline std::string write_col3(const Coloring& c) {
    const std::vector<Triple>& red = c.red_triples();  // explicit colorings only
    std::ostringstream out;
    out << "col3 " << c.num_vertices() << " " << red.size() << "\n";
    for (const Triple& t : red) out << t[0] << " " << t[1] << " " << t[2] << "\n";
    return out.str();
}

inline Coloring parse_col3(const std::string& text) {
    std::vector<std::string> lines = detail::split_lines(text, nullptr);
    std::size_t at = 0;
    while (at < lines.size() && (lines[at].empty() || lines[at][0] == '#')) ++at;
    if (at == lines.size()) throw std::runtime_error(".col3: missing header");
    std::istringstream header(lines[at]);
    std::string magic;
    long long n = -1, num_red = -1;
    if (!(header >> magic >> n >> num_red) || magic != "col3" || n < 0 || num_red < 0)
        throw std::runtime_error(".col3: bad header '" + lines[at] + "'");
    std::vector<Triple> red;
    Triple prev{-1, -1, -1};
    std::vector<long long> v;
    for (++at; at < lines.size(); ++at) {
        if (lines[at].empty() || lines[at][0] == '#') continue;
        if (!detail::exact_ints(lines[at], v, 3))
            throw std::runtime_error(".col3: bad triple line '" + lines[at] + "'");
        if (!(v[0] < v[1] && v[1] < v[2]) || v[0] < 0 || v[2] >= n)
            throw std::runtime_error(".col3: bad triple '" + lines[at] + "'");
        Triple t{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
        if (!(prev < t)) throw std::runtime_error(".col3: triples not sorted or duplicated");
        prev = t;
        red.push_back(t);
    }
    if (red.size() != static_cast<std::size_t>(num_red))
        throw std::runtime_error(".col3: red count does not match header");
    return Coloring::explicit_red(static_cast<int>(n), std::move(red));
}

// ---- .wit: "red K4|H5|H6" + role lines, "blue <n>" + vertex list, or
// "failure" + diagnostic lines ----

inline std::string write_wit(const Witness& w) {
    std::ostringstream out;
    switch (w.kind) {
        case Witness::Kind::red_copy: {
            out << "red " << pattern_name(w.pattern) << "\n";
            std::vector<std::string> roles = pattern_roles(w.pattern);
            for (std::size_t i = 0; i < roles.size(); ++i)
                out << roles[i] << " " << w.vertices[i] << "\n";
            break;
        }
        case Witness::Kind::blue_clique: {
            out << "blue " << w.vertices.size() << "\n";
            for (std::size_t i = 0; i < w.vertices.size(); ++i)
                out << (i == 0 ? "" : " ") << w.vertices[i];
            out << "\n";
            break;
        }
        case Witness::Kind::failure:
            out << "failure\n";
            for (const std::string& line : w.diagnostics) out << line << "\n";
            break;
    }
    return out.str();
}

inline Witness parse_wit(const std::string& text) {
    std::vector<std::string> lines = detail::split_lines(text, nullptr);
    if (lines.empty()) throw std::runtime_error(".wit: empty file");
    std::istringstream header(lines[0]);
    std::string kind;
    header >> kind;

    if (kind == "red") {
        std::string name;
        if (!(header >> name)) throw std::runtime_error(".wit: missing pattern name");
        RedPattern pat;
        if (name == "K4") pat = RedPattern::k4;
        else if (name == "H5") pat = RedPattern::h5;
        else if (name == "H6") pat = RedPattern::h6;
        else throw std::runtime_error(".wit: unknown pattern '" + name + "'");
        std::vector<std::string> roles = pattern_roles(pat);
        if (lines.size() != roles.size() + 1)
            throw std::runtime_error(".wit: wrong number of role lines");
        std::vector<int> vertices(roles.size());
        for (std::size_t i = 0; i < roles.size(); ++i) {
            std::istringstream in(lines[i + 1]);
            std::string role;
            int v;
            if (!(in >> role >> v) || role != roles[i])
                throw std::runtime_error(".wit: bad role line '" + lines[i + 1] + "'");
            vertices[i] = v;
        }
        return Witness::red_copy(pat, std::move(vertices));
    }

    if (kind == "blue") {
        long long n = -1;
        if (!(header >> n) || n < 1) throw std::runtime_error(".wit: bad blue size");
        if (lines.size() != 2) throw std::runtime_error(".wit: blue witness needs one vertex line");
        std::vector<long long> v;
        if (!detail::exact_ints(lines[1], v, static_cast<std::size_t>(n)))
            throw std::runtime_error(".wit: vertex list does not match size");
        std::vector<int> vertices(v.begin(), v.end());
        return Witness::blue_clique(std::move(vertices));
    }

    if (kind == "failure") {
        std::vector<std::string> diag(lines.begin() + 1, lines.end());
        return Witness::failure(std::move(diag));
    }

    throw std::runtime_error(".wit: unknown witness kind '" + kind + "'");
}

// ---- whole-file helpers ----

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace tcr
