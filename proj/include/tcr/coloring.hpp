#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "tcr/hypergraph.hpp"

namespace tcr {

// splitmix64 step: golden-ratio increment followed by Stafford's mix13.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based hash of a sorted triple under a seed. Pure function of its
// arguments, so colorings derived from it reproduce bit-exactly everywhere.
inline std::uint64_t triple_hash(std::uint64_t seed, int a, int b, int c) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ static_cast<std::uint64_t>(a));
    h = mix64(h ^ static_cast<std::uint64_t>(b));
    h = mix64(h ^ static_cast<std::uint64_t>(c));
    return h;
}

// Red/blue 2-coloring of the triples of [0, N): either an explicit red set
// or a pure deterministic oracle. Unlisted triples of an explicit coloring
// are blue.
class Coloring {
public:
    enum class Kind { explicit_set, all_red, all_blue, random_p };

    static Coloring all_red(int n) { return Coloring(n, Kind::all_red); }
    static Coloring all_blue(int n) { return Coloring(n, Kind::all_blue); }

    // Red iff triple_hash(seed, a, b, c) / 2^64 < p_num / p_den, compared in
    // exact integer arithmetic.
    static Coloring random(int n, std::uint64_t p_num, std::uint64_t p_den,
                           std::uint64_t seed) {
        if (p_den == 0 || p_num > p_den)
            throw std::invalid_argument("probability must lie in [0, 1]");
        Coloring c(n, Kind::random_p);
        c.p_num_ = p_num;
        c.p_den_ = p_den;
        c.seed_ = seed;
        return c;
    }

    static Coloring explicit_red(int n, std::vector<Triple> red) {
        if (n >= (1 << 21))
            throw std::invalid_argument("explicit coloring limited to N < 2^21");
        Coloring c(n, Kind::explicit_set);
        for (Triple& t : red) {
            std::sort(t.begin(), t.end());
            if (t[0] == t[1] || t[1] == t[2])
                throw std::invalid_argument("red triple with a repeated vertex");
            if (t[0] < 0 || t[2] >= n)
                throw std::invalid_argument("red triple out of range");
        }
        std::sort(red.begin(), red.end());
        red.erase(std::unique(red.begin(), red.end()), red.end());
        c.red_lookup_.reserve(red.size() * 2);
        for (const Triple& t : red) c.red_lookup_.insert(pack(t[0], t[1], t[2]));
        c.red_ = std::move(red);
        return c;
    }

    // "all-red" | "all-blue" | "random:<p>:<seed>" with p a decimal in [0,1]
    static Coloring from_spec(int n, const std::string& spec) {
        if (spec == "all-red") return all_red(n);
        if (spec == "all-blue") return all_blue(n);
        const std::string prefix = "random:";
        if (spec.rfind(prefix, 0) == 0) {
            std::string rest = spec.substr(prefix.size());
            std::size_t colon = rest.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("random spec needs a seed: random:<p>:<seed>");
            auto [num, den] = parse_probability(rest.substr(0, colon));
            std::uint64_t seed = parse_u64(rest.substr(colon + 1));
            return random(n, num, den, seed);
        }
        throw std::invalid_argument("unknown coloring spec '" + spec + "'");
    }

    int num_vertices() const { return n_; }
    Kind kind() const { return kind_; }
    std::uint64_t p_num() const { return p_num_; }
    std::uint64_t p_den() const { return p_den_; }
    std::uint64_t seed() const { return seed_; }

    bool is_red(int a, int b, int c) const {
        Triple t = make_triple(a, b, c);
        if (t[0] < 0 || t[2] >= n_) throw std::out_of_range("triple out of range");
        switch (kind_) {
            case Kind::all_red: return true;
            case Kind::all_blue: return false;
            case Kind::explicit_set:
                return red_lookup_.count(pack(t[0], t[1], t[2])) != 0;
            case Kind::random_p: {
                std::uint64_t h = triple_hash(seed_, t[0], t[1], t[2]);
                return (unsigned __int128)h * p_den_ <
                       ((unsigned __int128)p_num_ << 64);
            }
        }
        return false;
    }
    bool is_red(const Triple& t) const { return is_red(t[0], t[1], t[2]); }

    bool is_explicit() const { return kind_ == Kind::explicit_set; }

    const std::vector<Triple>& red_triples() const {
        if (!is_explicit())
            throw std::logic_error("red_triples() requires an explicit coloring");
        return red_;
    }

    std::string spec_string() const {
        switch (kind_) {
            case Kind::all_red: return "all-red";
            case Kind::all_blue: return "all-blue";
            case Kind::random_p:
                return "random:" + std::to_string(p_num_) + "/" + std::to_string(p_den_) +
                       ":" + std::to_string(seed_);
            case Kind::explicit_set: return "explicit";
        }
        return "";
    }

    bool operator==(const Coloring& o) const {
        return n_ == o.n_ && kind_ == o.kind_ && red_ == o.red_ && p_num_ == o.p_num_ &&
               p_den_ == o.p_den_ && seed_ == o.seed_;
    }

    // decimal probability -> exact num/den with den a power of ten
    static std::pair<std::uint64_t, std::uint64_t> parse_probability(const std::string& s) {
        std::size_t dot = s.find('.');
        std::string whole = dot == std::string::npos ? s : s.substr(0, dot);
        std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw std::invalid_argument("empty probability");
        if (frac.size() > 18) throw std::invalid_argument("probability has too many digits");
        std::uint64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::uint64_t num = parse_u64(whole.empty() ? "0" : whole) * den +
                            (frac.empty() ? 0 : parse_u64(frac));
        if (num > den) throw std::invalid_argument("probability must lie in [0, 1]");
        return {num, den};
    }

private:
    Coloring(int n, Kind kind) : n_(n), kind_(kind) {
        if (n_ < 0) throw std::invalid_argument("negative vertex count");
    }

    static std::uint64_t pack(int a, int b, int c) {
        return (static_cast<std::uint64_t>(a) << 42) |
               (static_cast<std::uint64_t>(b) << 21) | static_cast<std::uint64_t>(c);
    }

    static std::uint64_t parse_u64(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty number");
        std::uint64_t v = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit in '" + s + "'");
            std::uint64_t d = static_cast<std::uint64_t>(ch - '0');
            if (v > (UINT64_MAX - d) / 10) throw std::invalid_argument("number overflow");
            v = v * 10 + d;
        }
        return v;
    }

    int n_ = 0;
    Kind kind_ = Kind::all_blue;
    std::vector<Triple> red_;                     // explicit form, sorted
    std::unordered_set<std::uint64_t> red_lookup_;
    std::uint64_t p_num_ = 0, p_den_ = 1, seed_ = 0;
};

}  // namespace tcr
