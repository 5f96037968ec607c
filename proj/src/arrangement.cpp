#include "coterie/arrangement.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace coterie {

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

OrientedHyperplane::OrientedHyperplane(Vector functional) : functional_(std::move(functional)) {
    if (is_zero(functional_)) throw ArrangementError("hyperplane functional must be nonzero");
}

OrientedHyperplane OrientedHyperplane::transformed(const WeylElement& w_inverse) const {
    const Matrix& m = w_inverse.matrix;
    Vector out(functional_.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < out.size(); ++i) s += functional_[i] * m(i, j);
        out[j] = s;
    }
    return OrientedHyperplane(std::move(out));
}

Arrangement make_arrangement(const RootSystem& rs, const std::vector<Vector>& functionals) {
    Arrangement arr{rs, {}, std::nullopt, 0};
    std::set<Vector> seen_raw;
    std::set<Vector> seen_primitive;
    for (const auto& f : functionals) {
        if (f.size() != rs.rank()) throw ArrangementError("functional length differs from rank");
        if (!std::all_of(f.begin(), f.end(), is_integer)) throw ArrangementError("functional entries must be integers");
        if (is_zero(f)) throw ArrangementError("degenerate (zero) functional");
        if (std::any_of(f.begin(), f.end(), [](const Rational& q) { return q > 0; })) {
            throw ArrangementError("orientation condition violated: l(-alpha) < 0 for some simple root alpha");
        }
        if (seen_raw.contains(f)) continue;
        if (!seen_primitive.insert(primitive_positive_scale(f)).second) {
            throw ArrangementError("nondegeneracy violated: two functionals are positive multiples of each other");
        }
        seen_raw.insert(f);
        arr.fundamental.emplace_back(f);
    }
    if (arr.fundamental.empty()) throw ArrangementError("arrangement has no hyperplanes");
    return arr;
}

Arrangement canonical_arrangement(const RootSystem& rs) {
    std::vector<Vector> fs;
    for (std::size_t a = 0; a < rs.rank(); ++a) fs.push_back(scale(Rational(-1), unit_vector(rs.rank(), a)));
    return make_arrangement(rs, fs);
}

Arrangement weyl_orbit(Arrangement arr, std::size_t cap) {
    const std::size_t n = arr.rs.rank();
    // Functionals stay integral under W, so the search runs on machine integers.
    std::vector<std::vector<long long>> reflect(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t j = 0; j < n; ++j) reflect[a].push_back(arr.rs.cartan()(j, a).convert_to<long long>());
    }
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> queue;
    for (const auto& h : arr.fundamental) {
        std::vector<long long> v;
        for (const auto& q : h.functional()) v.push_back(q.convert_to<long long>());
        if (seen.insert(v).second) queue.push_back(v);
    }
    bool capped = queue.size() > cap;
    for (std::size_t head = 0; head < queue.size() && !capped; ++head) {
        for (std::size_t a = 0; a < n && !capped; ++a) {
            // (l o s_a)_j = l_j - l_a * C(j, a)
            std::vector<long long> img = queue[head];
            const long long la = img[a];
            if (la == 0) continue;
            for (std::size_t j = 0; j < n; ++j) img[j] -= la * reflect[a][j];
            if (seen.insert(img).second) {
                queue.push_back(std::move(img));
                capped = queue.size() > cap;
            }
        }
    }
    if (capped) {
        arr.full.reset();
        arr.orbit_partial_size = queue.size();
        return arr;
    }
    std::vector<OrientedHyperplane> full;
    full.reserve(queue.size());
    for (const auto& v : queue) {
        Vector f(v.begin(), v.end());
        full.emplace_back(std::move(f));
    }
    arr.orbit_partial_size = full.size();
    arr.full = std::move(full);
    return arr;
}

ClassifyingMap classifying_map(const Arrangement& arr) {
    if (arr.fundamental.empty()) throw ArrangementError("classifying map of an empty arrangement");
    const std::size_t s = arr.fundamental.size();
    const std::size_t n = arr.rs.rank();
    ClassifyingMap cm{Matrix(s, n), {}};
    for (std::size_t i = 0; i < s; ++i) {
        Integer g = 0;
        for (std::size_t a = 0; a < n; ++a) {
            const Rational v = -arr.fundamental[i].functional()[a];
            cm.a_star(i, a) = v;
            g = boost::multiprecision::gcd(g, abs(boost::multiprecision::numerator(v)));
        }
        if (g == 0) throw ArrangementError("all-zero row in classifying map");
        cm.k.push_back(g);
    }
    return cm;
}

bool env_augmented_cone_member(const RootSystem& rs, std::span<const Rational> chi, std::span<const Rational> lam) {
    if (!dominant_in_root_coords(rs, lam)) throw std::invalid_argument("lam must be dominant");
    const Vector d = subtract(chi, lam);
    return std::all_of(d.begin(), d.end(), [](const Rational& q) { return q >= 0 && is_integer(q); });
}

Arrangement parse_arrangement(std::istream& in) {
    std::string line;
    std::optional<RootSystem> rs;
    std::vector<Vector> fs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = strip_comment(line);
        if (s.empty()) continue;
        std::istringstream tok(s);
        if (!rs) {
            std::string kw;
            std::string type;
            tok >> kw >> type;
            if (kw != "type" || type.empty()) {
                throw ArrangementError("line " + std::to_string(lineno) + ": expected 'type <X><n>' header");
            }
            try {
                rs = RootSystem::build(SimpleType::parse(type));
            } catch (const InvalidType& e) {
                throw ArrangementError("line " + std::to_string(lineno) + ": " + e.what());
            }
            continue;
        }
        Vector f;
        std::string word;
        while (tok >> word) {
            try {
                f.push_back(parse_rational(word));
            } catch (const ParseError&) {
                throw ArrangementError("line " + std::to_string(lineno) + ": not an integer: '" + word + "'");
            }
        }
        if (f.size() != rs->rank()) {
            throw ArrangementError("line " + std::to_string(lineno) + ": expected " + std::to_string(rs->rank()) + " entries");
        }
        fs.push_back(std::move(f));
    }
    if (!rs) throw ArrangementError("missing 'type' header");
    return make_arrangement(*rs, fs);
}

}  // namespace coterie
