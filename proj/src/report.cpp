#include "coterie/report.hpp"

#include "coterie/closed_form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coterie {

namespace mp = boost::multiprecision;
using nlohmann::json;

namespace {

std::string node_name(std::size_t node, Format fmt) {
    const std::string k = std::to_string(node + 1);
    if (fmt == Format::Latex) return k.size() == 1 ? "a_" + k : "a_{" + k + "}";
    return "a" + k;
}

std::string math(const std::string& body) { return "$" + body + "$"; }

// q = p / d  ->  d a_lhs (rel) p a_rhs
std::pair<Integer, Integer> cleared(const Rational& q) { return {mp::denominator(q), mp::numerator(q)}; }

json constraints_json(const ConeSystem& system) {
    json out = json::array();
    for (const auto& c : system.constraints) {
        out.push_back({{"functional", to_json(c.functional)}, {"relation", to_string(c.relation)}, {"bound", to_json(c.bound)}});
    }
    return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
}

}  // namespace

Format parse_format(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (t == "plain" || t == "text") return Format::Plain;
    if (t == "json") return Format::Json;
    if (t == "latex" || t == "tex") return Format::Latex;
    throw ParseError("unknown format '" + std::string(text) + "'");
}

ChainInequality chain_for_edge(const RootSystem& rs, const Edge& e) {
    auto build = [&rs](std::size_t middle, std::size_t outer) {
        const Rational u = rs.c(outer, middle) / rs.c(middle, middle);  // a_o > u a_m
        const Rational w = rs.c(middle, outer) / rs.c(outer, outer);    // a_m > w a_o
        const Integer s = mp::lcm(mp::numerator(u), mp::denominator(w));
        const Rational r = Rational(s) / u;
        const Rational t = Rational(s) * w;
        return ChainInequality{outer, middle, mp::numerator(r), s, mp::numerator(t)};
    };
    const ChainInequality lo_mid = build(e.lo, e.hi);
    const ChainInequality hi_mid = build(e.hi, e.lo);
    // smallest leading coefficient, then the heavier fundamental weight in the middle, then the higher node
    if (lo_mid.r != hi_mid.r) return lo_mid.r < hi_mid.r ? lo_mid : hi_mid;
    if (rs.c(e.lo, e.lo) != rs.c(e.hi, e.hi)) return rs.c(e.lo, e.lo) > rs.c(e.hi, e.hi) ? lo_mid : hi_mid;
    return hi_mid;
}

std::string term(const Integer& coefficient, std::size_t node, Format fmt) {
    return (coefficient == 1 ? std::string() : coefficient.str()) + node_name(node, fmt);
}

std::string chain_text(const ChainInequality& c, Format fmt) {
    return term(c.r, c.outer, fmt) + " > " + term(c.s, c.middle, fmt) + " > " + term(c.t, c.outer, fmt);
}

std::string pair_text(const PairInequality& p, Format fmt) {
    const auto [d, n] = cleared(p.ratio);
    return term(d, p.beta, fmt) + " > " + term(n, p.alpha, fmt);
}

std::string equality_text(const EdgeEquality& eq, Format fmt) {
    const auto [d, n] = cleared(eq.ratio);
    const std::string left = term(d, eq.lhs, fmt);
    const std::string right = term(n, eq.rhs, fmt);
    return eq.lhs < eq.rhs ? left + " = " + right : right + " = " + left;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(std::span<const Rational> v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

std::string Report::render(Format fmt) const {
    switch (fmt) {
        case Format::Plain: return plain;
        case Format::Latex: return latex;
        case Format::Json: return json.dump(2) + "\n";
    }
    return plain;
}

Report inequalities_report(const RootSystem& rs, bool reduced, bool symbolic) {
    const CoterieDescription d = inequalities(rs, reduced);
    const std::string name = rs.type().name();
    Report rep;
    rep.json = {{"schema", kJsonSchemaVersion}, {"command", "inequalities"}, {"type", name}, {"reduced", reduced}};

    std::vector<std::string> plain{"coterie of " + name + (reduced ? " (Dynkin edges)" : " (all pairs)"), "a_j > 0 for all j"};
    std::vector<std::string> latex{"% coterie of " + name, "\\begin{enumerate}", "\\item $a_j > 0$ for all $j$"};

    json pairs = json::array();
    for (const auto& p : d.pairs) {
        pairs.push_back({{"beta", p.beta + 1}, {"alpha", p.alpha + 1}, {"ratio", to_json(p.ratio)}, {"text", pair_text(p, Format::Plain)}});
    }
    rep.json["pairs"] = pairs;

    if (reduced) {
        json chains = json::array();
        for (const auto& e : rs.edges()) {
            const ChainInequality c = chain_for_edge(rs, e);
            chains.push_back({{"edge", {e.lo + 1, e.hi + 1}}, {"text", chain_text(c, Format::Plain)}});
            plain.push_back(chain_text(c, Format::Plain));
            latex.push_back("\\item " + math(chain_text(c, Format::Latex)));
        }
        rep.json["chains"] = chains;
    } else {
        for (const auto& p : d.pairs) {
            plain.push_back(pair_text(p, Format::Plain));
            latex.push_back("\\item " + math(pair_text(p, Format::Latex)));
        }
    }
    latex.push_back("\\end{enumerate}");

    if (symbolic && has_closed_form(rs.type().family)) {
        const auto patterns = closed_form_patterns(rs.type().family);
        rep.json["patterns"] = patterns;
        plain.push_back("patterns for rank n:");
        latex.push_back("% patterns for rank n:");
        for (const auto& p : patterns) {
            plain.push_back("  " + p);
            latex.push_back("% " + p);
        }
    }
    rep.json["constraints"] = constraints_json(d.open_system);
    rep.plain = join_lines(plain);
    rep.latex = join_lines(latex);
    return rep;
}

Report rays_report(const RootSystem& rs) {
    const ExtremalRays rays = extremal_rays(rs);
    const std::string name = rs.type().name();
    Report rep;
    rep.json = {{"schema", kJsonSchemaVersion}, {"command", "rays"}, {"type", name}};
    std::vector<std::string> plain{"extremal rays of the closed coterie of " + name};
    std::vector<std::string> latex{"% extremal rays of the closed coterie of " + name, "\\begin{enumerate}"};
    json arr = json::array();
    for (const auto& r : rays.rays) {
        std::vector<std::string> eqs_plain, eqs_latex;
        for (const auto& eq : r.equalities) {
            eqs_plain.push_back(equality_text(eq, Format::Plain));
            eqs_latex.push_back(equality_text(eq, Format::Latex));
        }
        arr.push_back({{"orientation", r.orientation.str()}, {"equalities", eqs_plain}, {"ray", to_json(r.ray)}});
        std::string line = r.orientation.str() + "  " + to_string(r.ray);
        for (std::size_t k = 0; k < eqs_plain.size(); ++k) line += (k == 0 ? "  " : ", ") + eqs_plain[k];
        std::string tex = "\\item $";
        for (std::size_t k = 0; k < eqs_latex.size(); ++k) tex += (k == 0 ? "" : ",\\ ") + eqs_latex[k];
        tex += "$: $(";
        for (std::size_t k = 0; k < r.ray.size(); ++k) {
            const Rational& q = r.ray[k];
            tex += (k == 0 ? "" : ", ") +
                   (mp::denominator(q) == 1 ? mp::numerator(q).str()
                                             : "\\frac{" + mp::numerator(q).str() + "}{" + mp::denominator(q).str() + "}");
        }
        tex += ")$";
        plain.push_back(line);
        latex.push_back(tex);
    }
    latex.push_back("\\end{enumerate}");
    json anomalies = json::array();
    for (const auto& a : rays.anomalies) {
        anomalies.push_back({{"orientation", a.orientation.str()}, {"reason", a.reason}});
        plain.push_back("anomaly " + a.orientation.str() + ": " + a.reason);
        latex.push_back("% anomaly " + a.orientation.str() + ": " + a.reason);
    }
    rep.json["rays"] = arr;
    rep.json["anomalies"] = anomalies;
    rep.exit_code = rays.anomalies.empty() ? 0 : 3;
    rep.plain = join_lines(plain);
    rep.latex = join_lines(latex);
    return rep;
}

Report member_report(const RootSystem& rs, const Vector& x, Mode mode, const std::vector<Method>& methods) {
    if (x.size() != rs.rank()) {
        throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, rank is " + std::to_string(rs.rank()));
    }
    auto method_name = [](Method m) {
        switch (m) {
            case Method::Geometric: return "geometric";
            case Method::Full: return "full";
            case Method::Edges: return "edges";
        }
        return "?";
    };
    Report rep;
    rep.json = {{"schema", kJsonSchemaVersion},
                {"command", "member"},
                {"type", rs.type().name()},
                {"x", to_json(x)},
                {"mode", mode == Mode::Open ? "open" : "closed"}};
    json results = json::object();
    std::vector<bool> verdicts;
    std::string plain;
    for (Method m : methods) {
        const bool v = member(rs, x, mode, m);
        verdicts.push_back(v);
        results[method_name(m)] = v;
        plain += std::string(method_name(m)) + ": " + (v ? "member" : "not a member") + "\n";
    }
    const bool agree = std::adjacent_find(verdicts.begin(), verdicts.end(), std::not_equal_to<>()) == verdicts.end();
    rep.json["results"] = results;
    rep.json["agree"] = agree;
    if (!verdicts.empty()) rep.json["member"] = static_cast<bool>(verdicts.front());
    if (!agree) {
        rep.exit_code = 3;
        plain += "methods disagree\n";
    }
    rep.plain = plain;
    rep.latex = "% " + to_string(x) + (agree && !verdicts.empty() && verdicts.front() ? " is" : " is not") + " in the " +
                (mode == Mode::Open ? "open" : "closed") + " coterie of " + rs.type().name() + "\n";
    return rep;
}

Report faces_report(const RootSystem& rs, const CubeCheckOptions& options) {
    const CubeCheck check = cube_isomorphism_check(rs, options);
    const std::string name = rs.type().name();
    Report rep;
    json hist = json::object();
    std::string plain = "face poset of the closed coterie of " + name + "\n";
    plain += "faces: " + std::to_string(check.face_count) + "\n";
    for (const auto& [dim, count] : check.dim_histogram) {
        hist[std::to_string(dim)] = count;
        plain += "  dim " + std::to_string(dim) + ": " + std::to_string(count) + "\n";
    }
    plain += std::string("isomorphic to the face lattice of the cube: ") + (check.isomorphic ? "yes" : "no") + "\n";
    for (const auto& f : check.failures) plain += "  " + f + "\n";
    rep.json = {{"schema", kJsonSchemaVersion}, {"command", "faces"},      {"type", name},
                {"face_count", check.face_count}, {"dim_histogram", hist}, {"isomorphic", check.isomorphic},
                {"failures", check.failures}};
    rep.exit_code = check.isomorphic ? 0 : 3;
    rep.plain = plain;
    rep.latex = "% " + std::to_string(check.face_count) + " faces, cube lattice: " + (check.isomorphic ? "yes" : "no") + "\n";
    return rep;
}

Report polytope_report(const RootSystem& rs, const Vector& y, std::size_t orbit_cap) {
    if (y.size() != rs.rank()) {
        throw DimensionMismatch("y has " + std::to_string(y.size()) + " coordinates, rank is " + std::to_string(rs.rank()));
    }
    const CrossSection cs = cross_section(rs, y);
    const FeasibilityResult fr = feasible(cs.system);
    Report rep;
    rep.json = {{"schema", kJsonSchemaVersion}, {"command", "polytope"}, {"type", rs.type().name()},
                {"y", to_json(y)},                {"constraints", constraints_json(cs.system)},
                {"nonempty", fr.feasible}};
    std::string plain = "dominant weights lam with lam <= " + to_string(y) + " (root coordinates)\n";
    plain += std::string("nonempty: ") + (fr.feasible ? "yes" : "no") + "\n";
    if (fr.feasible) rep.json["witness"] = to_json(fr.witness);
    std::string latex = "% cross-section at y = " + to_string(y) + "\n";
    if (rs.rank() <= kMaxVertexEnumerationRank) {
        json verts = json::array();
        const auto vs = cross_section_vertices(cs);
        plain += "vertices: " + std::to_string(vs.size()) + "\n";
        latex += "\\begin{enumerate}\n";
        for (const auto& v : vs) {
            verts.push_back(to_json(v));
            plain += "  " + to_string(v) + "\n";
            latex += "\\item " + math(to_string(v)) + "\n";
        }
        latex += "\\end{enumerate}\n";
        rep.json["vertices"] = verts;
        try {
            const auto orbit = orbit_polytope_vertices(cs, orbit_cap);
            rep.json["orbit_points"] = orbit.size();
            plain += "Weyl orbit of the vertices: " + std::to_string(orbit.size()) + " points\n";
        } catch (const ResourceLimitExceeded& e) {
            rep.json["orbit_points"] = nullptr;
            plain += std::string("Weyl orbit skipped: ") + e.what() + "\n";
        }
    } else {
        rep.json["vertices"] = nullptr;
        rep.json["orbit_points"] = nullptr;
        plain += "vertices skipped: rank above " + std::to_string(kMaxVertexEnumerationRank) + "\n";
    }
    rep.plain = plain;
    rep.latex = latex;
    return rep;
}

Report arrangement_report(const Arrangement& input, std::size_t orbit_cap) {
    const Arrangement arr = weyl_orbit(input, orbit_cap);
    const ClassifyingMap cm = classifying_map(arr);
    Report rep;
    json fund = json::array();
    std::string plain = "arrangement over " + arr.rs.type().name() + " with " + std::to_string(arr.fundamental.size()) +
                        " fundamental hyperplanes\n";
    for (std::size_t i = 0; i < arr.fundamental.size(); ++i) {
        fund.push_back(to_json(arr.fundamental[i].functional()));
        plain += "  l" + std::to_string(i + 1) + " = " + to_string(arr.fundamental[i].functional()) + "  k = " + cm.k[i].str() + "\n";
    }
    json a_star = json::array();
    for (std::size_t i = 0; i < cm.a_star.rows(); ++i) a_star.push_back(to_json(cm.a_star.row(i)));
    json k = json::array();
    for (const auto& ki : cm.k) k.push_back(ki.str());
    json orbit = {{"capped", arr.orbit_capped()}, {"cap", orbit_cap}};
    if (arr.full) {
        orbit["size"] = arr.full->size();
        plain += "Weyl orbit: " + std::to_string(arr.full->size()) + " hyperplanes\n";
    } else {
        orbit["size"] = nullptr;
        orbit["partial_size"] = arr.orbit_partial_size;
        plain += "Weyl orbit: more than " + std::to_string(orbit_cap) + " hyperplanes (capped)\n";
    }
    rep.json = {{"schema", kJsonSchemaVersion}, {"command", "arrangement"}, {"type", arr.rs.type().name()},
                {"fundamental", fund},            {"classifying_map", a_star},  {"k", k},
                {"orbit", orbit}};
    rep.plain = plain;
    rep.latex = "% " + plain.substr(0, plain.find('\n')) + "\n";
    return rep;
}

}  // namespace coterie
