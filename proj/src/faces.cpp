#include "coterie/faces.hpp"

#include <algorithm>

namespace coterie {

namespace {

// The two closed constraints contributed by edge {i, j}, i < j.
struct EdgePair {
    EdgeEquality upper;  // a_i >= q a_j, tight for i -> j
    EdgeEquality lower;  // a_j >= p a_i, tight for i <- j
};

EdgePair edge_pair(const RootSystem& rs, const Edge& e) {
    return {{e.lo, e.hi, rs.c(e.lo, e.hi) / rs.c(e.hi, e.hi)},
            {e.hi, e.lo, rs.c(e.hi, e.lo) / rs.c(e.lo, e.lo)}};
}

Vector equality_functional(std::size_t n, const EdgeEquality& eq) {
    Vector f(n);
    f[eq.lhs] = 1;
    f[eq.rhs] = -eq.ratio;
    return f;
}

bool tight(const EdgeEquality& eq, std::span<const Rational> x) { return x[eq.lhs] == eq.ratio * x[eq.rhs]; }

std::vector<Orientation> enumerate(std::size_t m, bool vertices_only) {
    const std::vector<Arrow> symbols = vertices_only ? std::vector<Arrow>{Arrow::Right, Arrow::Left}
                                                     : std::vector<Arrow>{Arrow::Right, Arrow::Left, Arrow::Neutral};
    std::vector<Orientation> out;
    std::vector<std::size_t> digits(m, 0);
    while (true) {
        std::vector<Arrow> arrows(m);
        for (std::size_t k = 0; k < m; ++k) arrows[k] = symbols[digits[k]];
        out.emplace_back(std::move(arrows));
        std::size_t k = m;
        while (k > 0 && ++digits[k - 1] == symbols.size()) {
            digits[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

}  // namespace

char arrow_char(Arrow a) {
    switch (a) {
        case Arrow::Right: return '>';
        case Arrow::Left: return '<';
        case Arrow::Neutral: return '-';
    }
    return '?';
}

Orientation Orientation::parse(std::string_view text, std::size_t edge_count) {
    if (text.size() != edge_count) {
        throw ParseError("orientation needs " + std::to_string(edge_count) + " symbols, got '" + std::string(text) + "'");
    }
    std::vector<Arrow> arrows;
    for (char ch : text) {
        switch (ch) {
            case '>': arrows.push_back(Arrow::Right); break;
            case '<': arrows.push_back(Arrow::Left); break;
            case '-': arrows.push_back(Arrow::Neutral); break;
            default: throw ParseError(std::string("bad orientation symbol '") + ch + "'");
        }
    }
    return Orientation(std::move(arrows));
}

std::size_t Orientation::oriented_count() const {
    return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(), [](Arrow a) { return a != Arrow::Neutral; }));
}

std::string Orientation::str() const {
    std::string s;
    for (Arrow a : arrows_) s += arrow_char(a);
    return s;
}

std::vector<Orientation> all_orientations(const RootSystem& rs) { return enumerate(rs.edges().size(), false); }

std::vector<Orientation> vertex_orientations(const RootSystem& rs) { return enumerate(rs.edges().size(), true); }

bool poset_order(const Orientation& f, const Orientation& g) {
    if (f.size() != g.size()) throw std::invalid_argument("orientations over different edge sets");
    for (std::size_t e = 0; e < f.size(); ++e) {
        const Arrow a = f.arrows()[e];
        const Arrow b = g.arrows()[e];
        if (b == Arrow::Neutral && a != Arrow::Neutral) return false;
        if (a != Arrow::Neutral && a != b) return false;
    }
    return true;
}

Face face_of(const RootSystem& rs, const Orientation& f) {
    const std::size_t n = rs.rank();
    if (f.size() != rs.edges().size()) throw std::invalid_argument("orientation does not match the Dynkin edges");
    Face face{f, {}, ConeSystem(n), 0};
    for (std::size_t e = 0; e < rs.edges().size(); ++e) {
        const EdgePair ep = edge_pair(rs, rs.edges()[e]);
        const Arrow a = f.arrows()[e];
        face.system.add(equality_functional(n, ep.upper), Rational(0), a == Arrow::Right ? Relation::Equal : Relation::GreaterEqual);
        face.system.add(equality_functional(n, ep.lower), Rational(0), a == Arrow::Left ? Relation::Equal : Relation::GreaterEqual);
        if (a == Arrow::Right) face.equalities.push_back(ep.upper);
        if (a == Arrow::Left) face.equalities.push_back(ep.lower);
    }
    for (std::size_t a = 0; a < n; ++a) face.system.add(unit_vector(n, a), Rational(0), Relation::GreaterEqual);

    std::vector<Vector> rows;
    for (const auto& eq : face.equalities) rows.push_back(equality_functional(n, eq));
    face.dim = static_cast<int>(n - rank(Matrix::from_rows(rows, n)));
    return face;
}

ExtremalRays extremal_rays(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    const Coterie h(rs);
    ExtremalRays out;
    for (const auto& f : vertex_orientations(rs)) {
        const Face face = face_of(rs, f);
        std::vector<Vector> rows;
        for (const auto& eq : face.equalities) rows.push_back(equality_functional(n, eq));
        const auto sol = solve_linear(Matrix::from_rows(rows, n), Vector(rows.size()));
        if (!sol || sol->kernel.size() != 1) {
            out.anomalies.push_back({f, "equality system does not cut out a line"});
            continue;
        }
        Vector ray = sol->kernel.front();
        const bool all_pos = std::all_of(ray.begin(), ray.end(), [](const Rational& q) { return q > 0; });
        const bool all_neg = std::all_of(ray.begin(), ray.end(), [](const Rational& q) { return q < 0; });
        if (!all_pos && !all_neg) {
            out.anomalies.push_back({f, "ray " + to_string(ray) + " leaves the open positive orthant"});
            continue;
        }
        if (ray.back() != 0) ray = scale(1 / ray.back(), ray);
        else if (all_neg) ray = scale(Rational(-1), ray);
        if (!h.member(ray, Mode::Closed, Method::Full)) {
            out.anomalies.push_back({f, "ray " + to_string(ray) + " is outside the closed coterie"});
            continue;
        }
        if (n > 1 && h.member(ray, Mode::Open, Method::Full)) {
            out.anomalies.push_back({f, "ray " + to_string(ray) + " lies in the open coterie"});
            continue;
        }
        out.rays.push_back({f, face.equalities, std::move(ray)});
    }
    return out;
}

CubeCheck cube_isomorphism_check(const RootSystem& rs, const CubeCheckOptions& options) {
    const std::size_t n = rs.rank();
    if (static_cast<int>(n) > options.max_rank) {
        throw ResourceLimitExceeded("cube check is limited to rank " + std::to_string(options.max_rank));
    }
    CubeCheck out;
    const auto faces = all_orientations(rs);
    out.face_count = faces.size();
    const std::size_t m = rs.edges().size();
    auto fail = [&out](std::string msg) {
        if (out.failures.size() < 50) out.failures.push_back(std::move(msg));
    };

    std::size_t expected = 1;
    for (std::size_t k = 0; k < m; ++k) expected *= 3;
    if (faces.size() != expected) fail("expected 3^" + std::to_string(m) + " orientations");

    // Cube face lattice {0,*,1}^m: u >= v iff u_k = * or u_k = v_k.
    // Left -> 0, Right -> 1, Neutral -> *.
    auto cube_code = [](Arrow a) { return a == Arrow::Left ? 0 : a == Arrow::Right ? 1 : 2; };
    std::vector<std::vector<int>> codes;
    codes.reserve(faces.size());
    for (const auto& f : faces) {
        std::vector<int> c;
        for (Arrow a : f.arrows()) c.push_back(cube_code(a));
        codes.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = 0; j < faces.size(); ++j) {
            bool cube_ge = true;
            for (std::size_t k = 0; k < m && cube_ge; ++k) cube_ge = codes[i][k] == 2 || codes[i][k] == codes[j][k];
            if (cube_ge != poset_order(faces[i], faces[j])) {
                fail("order mismatch between " + faces[i].str() + " and " + faces[j].str());
            }
        }
    }

    const ExtremalRays rays = extremal_rays(rs);
    for (const auto& a : rays.anomalies) fail("ray anomaly at " + a.orientation.str() + ": " + a.reason);

    // Tightness of every edge constraint at every ray, computed once.
    std::vector<std::vector<std::pair<bool, bool>>> tight_at(rays.rays.size());
    std::vector<EdgePair> pairs;
    for (const auto& e : rs.edges()) pairs.push_back(edge_pair(rs, e));
    for (std::size_t r = 0; r < rays.rays.size(); ++r) {
        for (const auto& ep : pairs) tight_at[r].emplace_back(tight(ep.upper, rays.rays[r].ray), tight(ep.lower, rays.rays[r].ray));
    }

    std::map<Orientation, int> dims;
    for (const auto& f : faces) {
        const Face face = face_of(rs, f);
        dims[f] = face.dim;
        ++out.dim_histogram[face.dim];
        if (face.dim != static_cast<int>(n - f.oriented_count())) {
            fail("face " + f.str() + " has dimension " + std::to_string(face.dim));
        }

        Vector interior(n);
        std::size_t incident = 0;
        for (std::size_t r = 0; r < rays.rays.size(); ++r) {
            bool in_face = true;
            for (std::size_t e = 0; e < m && in_face; ++e) {
                const Arrow a = f.arrows()[e];
                if (a == Arrow::Right) in_face = tight_at[r][e].first;
                if (a == Arrow::Left) in_face = tight_at[r][e].second;
            }
            if (in_face != poset_order(f, rays.rays[r].orientation)) {
                fail("ray " + rays.rays[r].orientation.str() + " incidence with face " + f.str());
            }
            if (in_face) {
                interior = add(interior, rays.rays[r].ray);
                ++incident;
            }
        }
        if (incident != (std::size_t{1} << (m - f.oriented_count()))) {
            fail("face " + f.str() + " contains " + std::to_string(incident) + " rays");
        }
        // The ray barycentre must be tight exactly on the face's equalities.
        for (std::size_t e = 0; e < m; ++e) {
            const Arrow a = f.arrows()[e];
            if (tight(pairs[e].upper, interior) != (a == Arrow::Right) || tight(pairs[e].lower, interior) != (a == Arrow::Left)) {
                fail("face " + f.str() + " has no relative-interior point at edge " + std::to_string(e + 1));
            }
        }
        if (!std::all_of(interior.begin(), interior.end(), [](const Rational& q) { return q > 0; })) {
            fail("face " + f.str() + " touches a coordinate hyperplane");
        }
    }

    // Covers: neutralising one arrow raises the dimension by one.
    for (const auto& f : faces) {
        for (std::size_t e = 0; e < m; ++e) {
            if (f.arrows()[e] == Arrow::Neutral) continue;
            auto arrows = f.arrows();
            arrows[e] = Arrow::Neutral;
            const Orientation g(std::move(arrows));
            if (dims[g] != dims[f] + 1) fail("cover " + g.str() + " > " + f.str() + " does not raise the dimension");
        }
    }

    if (static_cast<int>(n) <= options.implication_rank) {
        std::vector<Face> built;
        for (const auto& f : faces) built.push_back(face_of(rs, f));
        for (std::size_t i = 0; i < faces.size(); ++i) {
            for (std::size_t j = 0; j < faces.size(); ++j) {
                bool contained = std::all_of(built[i].system.constraints.begin(), built[i].system.constraints.end(),
                                             [&](const LinearConstraint& c) { return implies(built[j].system, c); });
                if (contained != poset_order(faces[i], faces[j])) {
                    fail("containment of face " + faces[j].str() + " in " + faces[i].str() + " disagrees with the order");
                }
            }
        }
    }

    out.isomorphic = out.failures.empty();
    return out;
}

}  // namespace coterie
