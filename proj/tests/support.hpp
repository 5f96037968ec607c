#pragma once

#include "coterie/coterie.hpp"
#include "coterie/faces.hpp"
#include "coterie/root_system.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace testing {

using coterie::Rational;
using coterie::Vector;

inline constexpr std::uint64_t kSeed = 20240611;

/// p/q with q in [1, max_den] and p/q in [lo, hi].
inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 60) {
    std::uniform_int_distribution<int> den(1, max_den);
    const int q = den(rng);
    std::uniform_int_distribution<long> num(static_cast<long>(lo) * q, static_cast<long>(hi) * q);
    return Rational(num(rng), q);
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, int lo = -2, int hi = 4, int max_den = 60) {
    Vector v(n);
    for (auto& q : v) q = random_rational(rng, lo, hi, max_den);
    return v;
}

/// Strictly positive weights in (0, hi].
inline Vector random_weights(std::mt19937_64& rng, std::size_t n, int hi = 3, int max_den = 60) {
    Vector v(n);
    for (auto& q : v) {
        do q = random_rational(rng, 0, hi, max_den);
        while (q <= 0);
    }
    return v;
}

/// Positive combination of every extremal ray: an interior point of the cone.
inline Vector interior_point(const coterie::ExtremalRays& rays, std::mt19937_64& rng) {
    const std::size_t n = rays.rays.front().ray.size();
    const Vector w = random_weights(rng, rays.rays.size());
    Vector x(n);
    for (std::size_t k = 0; k < rays.rays.size(); ++k) x = coterie::add(x, coterie::scale(w[k], rays.rays[k].ray));
    return x;
}

/// Strictly dominant vector: a positive combination of fundamental weights.
inline Vector strictly_dominant(const coterie::RootSystem& rs, std::mt19937_64& rng) {
    const Vector w = random_weights(rng, rs.rank());
    Vector x(rs.rank());
    for (std::size_t a = 0; a < rs.rank(); ++a) x = coterie::add(x, coterie::scale(w[a], coterie::fundamental_weight(rs, a)));
    return x;
}

/// (beta, alpha, ratio) with 0-based nodes: a_beta > ratio * a_alpha.
using Single = std::tuple<std::size_t, std::size_t, Rational>;

/// Splits "r a_o > s a_m > t a_o" (or a single "p a_b > q a_c") into single
/// inequalities. Written independently of the library's formatter.
inline std::set<Single> parse_conditions(const std::string& text) {
    static const std::regex term_re(R"(\s*(\d*)\s*a_?\{?(\d+)\}?\s*)");
    std::vector<std::pair<Rational, std::size_t>> terms;
    std::size_t start = 0;
    while (true) {
        const std::size_t gt = text.find('>', start);
        const std::string piece = text.substr(start, gt == std::string::npos ? std::string::npos : gt - start);
        std::smatch m;
        if (!std::regex_match(piece, m, term_re)) throw std::runtime_error("bad term '" + piece + "' in " + text);
        const Rational coeff = m[1].str().empty() ? Rational(1) : Rational(std::stol(m[1].str()));
        terms.emplace_back(coeff, std::stoul(m[2].str()) - 1);
        if (gt == std::string::npos) break;
        start = gt + 1;
    }
    std::set<Single> out;
    for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
        // c1 a_b > c2 a_c  <=>  a_b > (c2/c1) a_c
        out.emplace(terms[k].second, terms[k + 1].second, terms[k + 1].first / terms[k].first);
    }
    return out;
}

inline std::set<Single> as_singles(const std::vector<coterie::PairInequality>& pairs) {
    std::set<Single> out;
    for (const auto& p : pairs) out.emplace(p.beta, p.alpha, p.ratio);
    return out;
}

/// Transcription of the published edge conditions for the generic ranks.
/// Classical families are written from their rank-n patterns at the rank used.
inline std::set<Single> reference_table(const std::string& type) {
    std::set<Single> out;
    auto add = [&out](int beta, int alpha, Rational r) { out.emplace(beta - 1, alpha - 1, r); };
    if (type == "A4") {
        const int n = 4;
        for (int j = 1; j < n; ++j) add(j, j + 1, Rational(j, j + 1));
        for (int j = 2; j <= n; ++j) add(j, j - 1, Rational(n + 1 - j, n + 2 - j));
    } else if (type == "B4") {
        const int n = 4;
        for (int j = 1; j < n; ++j) add(j, j + 1, Rational(j, j + 1));
        for (int j = 2; j <= n; ++j) add(j, j - 1, Rational(1));
    } else if (type == "C4") {
        const int n = 4;
        for (int j = 2; j < n; ++j) add(j, j - 1, Rational(1));
        for (int j = 1; j < n - 1; ++j) add(j, j + 1, Rational(j, j + 1));
        add(n, n - 1, Rational(1, 2));
        add(n - 1, n, Rational(2 * (n - 1), n));
    } else if (type == "D5") {
        const int n = 5;
        for (int j = 1; j < n - 2; ++j) add(j, j + 1, Rational(j, j + 1));
        add(n - 2, n - 1, Rational(2 * (n - 2), n));
        add(n - 2, n, Rational(2 * (n - 2), n));
        add(n, n - 2, Rational(1, 2));
        add(n - 1, n - 2, Rational(1, 2));
    } else {
        static const std::map<std::string, std::vector<std::string>> chains{
            {"E6", {"8a1 > 4a2 > 5a1", "5a3 > 6a2 > 4a3", "5a3 > 6a4 > 4a3", "4a3 > 6a6 > 3a3", "8a5 > 4a4 > 5a5"}},
            {"E7",
             {"3a1 > 4a2 > 2a1", "6a2 > 4a3 > 5a2", "10a4 > 12a3 > 9a4", "9a5 > 6a4 > 8a5", "7a4 > 12a7 > 6a4",
              "4a6 > 2a5 > 3a6"}},
            {"E8",
             {"4a1 > 2a2 > 3a1", "9a2 > 6a3 > 8a2", "16a3 > 12a4 > 15a3", "25a4 > 20a5 > 24a4", "16a8 > 8a5 > 15a8",
              "21a6 > 14a5 > 20a6", "8a7 > 4a6 > 7a7"}},
            {"F4", {"4a1 > 2a2 > 3a1", "9a2 > 12a3 > 8a2", "4a3 > 6a4 > 3a3"}},
            {"G2", {"4a2 > 2a1 > 3a2"}},
        };
        for (const auto& c : chains.at(type)) {
            const auto s = parse_conditions(c);
            out.insert(s.begin(), s.end());
        }
    }
    return out;
}

inline const std::vector<std::string>& table_types() {
    static const std::vector<std::string> t{"A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"};
    return t;
}

/// Published A4 extremal rays, in the order of the fully oriented diagrams.
inline std::vector<std::pair<std::string, Vector>> reference_a4_rays() {
    auto v = [](std::initializer_list<Rational> l) { return Vector(l); };
    return {
        {">>>", v({Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)})},
        {">><", v({Rational(2, 3), Rational(4, 3), Rational(2), Rational(1)})},
        {"><>", v({Rational(9, 16), Rational(9, 8), Rational(3, 4), Rational(1)})},
        {"><<", v({Rational(3, 2), Rational(3), Rational(2), Rational(1)})},
        {"<>>", v({Rational(2, 3), Rational(1, 2), Rational(3, 4), Rational(1)})},
        {"<><", v({Rational(16, 9), Rational(4, 3), Rational(2), Rational(1)})},
        {"<<>", v({Rational(3, 2), Rational(9, 8), Rational(3, 4), Rational(1)})},
        {"<<<", v({Rational(4), Rational(3), Rational(2), Rational(1)})},
    };
}

inline coterie::RootSystem rs_of(const std::string& t) { return coterie::RootSystem::build(coterie::SimpleType::parse(t)); }

}  // namespace testing
