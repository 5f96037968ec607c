#include "coterie/coterie.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace coterie {

namespace {

LinearConstraint pair_constraint(std::size_t n, const PairInequality& p, Relation rel) {
    Vector f(n);
    f[p.beta] = 1;
    f[p.alpha] = -p.ratio;
    return {std::move(f), Rational(0), rel};
}

PairInequality make_pair(const RootSystem& rs, std::size_t beta, std::size_t alpha) {
    return {beta, alpha, rs.c(beta, alpha) / rs.c(alpha, alpha)};
}

void require_rank(const RootSystem& rs, std::span<const Rational> x) {
    if (x.size() != rs.rank()) throw DimensionMismatch("vector length differs from rank");
}

std::vector<std::string> data_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

Vector parse_row(const std::string& line) {
    std::istringstream tok(line);
    Vector v;
    std::string word;
    while (tok >> word) v.push_back(parse_rational(word));
    return v;
}

}  // namespace

CoterieDescription inequalities(const RootSystem& rs, bool reduced) {
    const std::size_t n = rs.rank();
    CoterieDescription d{rs, reduced, {}, ConeSystem(n), ConeSystem(n)};
    if (reduced) {
        for (const auto& e : rs.edges()) {
            d.pairs.push_back(make_pair(rs, e.hi, e.lo));
            d.pairs.push_back(make_pair(rs, e.lo, e.hi));
        }
    } else {
        for (std::size_t beta = 0; beta < n; ++beta)
            for (std::size_t alpha = 0; alpha < n; ++alpha)
                if (beta != alpha) d.pairs.push_back(make_pair(rs, beta, alpha));
    }
    for (const auto& p : d.pairs) {
        d.open_system.add(pair_constraint(n, p, Relation::Greater));
        d.closed_system.add(pair_constraint(n, p, Relation::GreaterEqual));
    }
    for (std::size_t a = 0; a < n; ++a) {
        d.open_system.add(unit_vector(n, a), Rational(0), Relation::Greater);
        d.closed_system.add(unit_vector(n, a), Rational(0), Relation::GreaterEqual);
    }
    return d;
}

Coterie::Coterie(RootSystem rs) : full_(inequalities(rs, false)), reduced_(inequalities(rs, true)) {}

bool Coterie::member(std::span<const Rational> x, Mode mode, Method method) const {
    require_rank(root_system(), x);
    switch (method) {
        case Method::Geometric: return member_geometric(root_system(), x, mode);
        case Method::Full: return (mode == Mode::Open ? full_.open_system : full_.closed_system).satisfied_by(x);
        case Method::Edges: return (mode == Mode::Open ? reduced_.open_system : reduced_.closed_system).satisfied_by(x);
    }
    return false;
}

Rational r_alpha(const RootSystem& rs, std::span<const Rational> x, std::size_t alpha) {
    require_rank(rs, x);
    return x[alpha] / rs.c(alpha, alpha);
}

bool member_geometric(const RootSystem& rs, std::span<const Rational> x, Mode mode) {
    require_rank(rs, x);
    const bool open = mode == Mode::Open;
    auto positive = [open](const Rational& q) { return open ? q > 0 : q >= 0; };
    for (std::size_t alpha = 0; alpha < rs.rank(); ++alpha) {
        const Rational r = r_alpha(rs, x, alpha);
        if (!positive(r)) return false;
        for (std::size_t beta = 0; beta < rs.rank(); ++beta) {
            if (beta != alpha && !positive(x[beta] - r * rs.c(beta, alpha))) return false;
        }
    }
    return true;
}

bool member(const RootSystem& rs, std::span<const Rational> x, Mode mode, Method method) {
    if (method == Method::Geometric) return member_geometric(rs, x, mode);
    return Coterie(rs).member(x, mode, method);
}

bool additivity_check(const Coterie& h, std::span<const Rational> x, std::span<const Rational> y) {
    const RootSystem& rs = h.root_system();
    if (!h.member(x, Mode::Open, Method::Edges) || !h.member(y, Mode::Open, Method::Edges)) {
        throw PreconditionViolation("additivity_check requires both points in the open coterie");
    }
    const Vector s = add(x, y);
    for (std::size_t a = 0; a < rs.rank(); ++a) {
        if (r_alpha(rs, s, a) != r_alpha(rs, x, a) + r_alpha(rs, y, a)) return false;
    }
    return h.member(s, Mode::Open, Method::Edges);
}

GeneralCoterieInstance GeneralCoterieInstance::canonical(const RootSystem& rs) {
    GeneralCoterieInstance inst{canonical_arrangement(rs), Matrix::identity(rs.rank()), {}};
    for (std::size_t a = 0; a < rs.rank(); ++a) inst.nu.push_back(unit_vector(rs.rank(), a));
    return inst;
}

Vector GeneralCoterieInstance::composite(std::size_t i) const {
    const Vector& v = nu.at(i);
    Vector out(theta_star.cols());
    for (std::size_t j = 0; j < out.size(); ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * theta_star(k, j);
        out[j] = s;
    }
    return out;
}

Rational GeneralCoterieInstance::valuation(std::size_t i, std::span<const Rational> delta) const {
    return dot(nu.at(i), delta);
}

void GeneralCoterieInstance::validate() const {
    const std::size_t n = rs().rank();
    if (theta_star.cols() != n) throw ArrangementError("theta* must have one column per simple root");
    if (nu.size() != arr.fundamental.size()) throw ArrangementError("need one valuation per fundamental hyperplane");
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu[i].size() != theta_star.rows()) throw ArrangementError("valuation length differs from theta* row count");
        const Vector l = scale(Rational(-1), composite(i));
        if (l != arr.fundamental[i].functional()) {
            throw ArrangementError("nu_" + std::to_string(i + 1) + " o theta* is not -l_" + std::to_string(i + 1));
        }
    }
}

Vector r_i_general(const GeneralCoterieInstance& inst, std::size_t i, std::span<const Rational> delta) {
    const RootSystem& rs = inst.rs();
    const std::size_t n = rs.rank();
    const Vector g = inst.composite(i);
    if (is_zero(g)) throw DegenerateInstance("nu_i o theta* vanishes identically");

    // Rows: g, then (form * mu)^T for a basis mu of ker g.
    std::vector<Vector> rows{g};
    Vector rhs{inst.valuation(i, delta)};
    Matrix grow = Matrix::from_rows({g}, n);
    const auto ker = solve_linear(grow, Vector{Rational(0)});
    for (const auto& mu : ker->kernel) {
        rows.push_back(rs.form() * mu);
        rhs.push_back(0);
    }
    const auto sol = solve_linear(Matrix::from_rows(rows, n), rhs);
    if (!sol || !sol->kernel.empty()) throw DegenerateInstance("r_i(delta) is not uniquely determined");
    return sol->particular;
}

bool u_identity_check(const GeneralCoterieInstance& inst, std::size_t i, std::span<const Rational> delta,
                      std::span<const Rational> lam) {
    const RootSystem& rs = inst.rs();
    const Vector r = r_i_general(inst, i, delta);
    const Rational rr = inner(rs, r, r);
    if (rr == 0) throw DegenerateInstance("(r_i, r_i) = 0");
    const Rational lhs = inst.valuation(i, delta) - inst.valuation(i, inst.theta_star * lam);
    const Rational eps = inst.valuation(i, delta) / rr;
    const Rational rhs = eps * inner(rs, subtract(r, lam), r);
    return lhs == rhs;
}

GeneralMembership general_member(const GeneralCoterieInstance& inst, std::span<const Rational> delta,
                                 const FeasibilityOptions& options) {
    const RootSystem& rs = inst.rs();
    const std::size_t n = rs.rank();
    if (delta.size() != inst.theta_star.rows()) throw DimensionMismatch("delta length differs from theta* row count");
    for (std::size_t i = 0; i < inst.size(); ++i) {
        if (inst.valuation(i, delta) < 0) throw PreconditionViolation("nu_i(delta) < 0: delta outside the centre closure");
    }
    std::vector<Vector> r;
    std::vector<Vector> form_r;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        r.push_back(r_i_general(inst, i, delta));
        form_r.push_back(rs.form() * r.back());
    }

    GeneralMembership out;
    out.member = true;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        ConeSystem sys(n);
        for (std::size_t a = 0; a < n; ++a) {
            Vector f(n);
            for (std::size_t j = 0; j < n; ++j) f[j] = rs.cartan()(j, a);
            sys.add(std::move(f), Rational(0), Relation::Greater);
        }
        for (std::size_t j = 0; j < inst.size(); ++j) {
            // (r_j - x, r_j) > 0  <=>  -(form r_j) . x > -(r_j, r_j)
            const Rational rr = dot(form_r[j], r[j]);
            if (j == i) {
                sys.add(form_r[j], rr, Relation::Equal);
            } else {
                sys.add(scale(Rational(-1), form_r[j]), -rr, Relation::Greater);
            }
        }
        auto verdict = feasible(sys, options);
        out.member = out.member && verdict.feasible;
        out.systems.push_back(std::move(sys));
        out.verdicts.push_back(std::move(verdict));
    }
    return out;
}

GeneralCoterieInstance parse_instance(std::istream& in) {
    const auto lines = data_lines(in);
    auto theta_at = std::find(lines.begin(), lines.end(), "theta");
    auto nu_at = std::find(lines.begin(), lines.end(), "nu");
    if (theta_at == lines.end() || nu_at == lines.end() || nu_at < theta_at) {
        throw ArrangementError("instance file needs a 'theta' block followed by a 'nu' block");
    }
    std::string arrangement_text;
    for (auto it = lines.begin(); it != theta_at; ++it) arrangement_text += *it + "\n";
    std::istringstream arr_in(arrangement_text);
    Arrangement arr = parse_arrangement(arr_in);

    std::vector<Vector> theta_rows;
    try {
        for (auto it = theta_at + 1; it != nu_at; ++it) theta_rows.push_back(parse_row(*it));
    } catch (const ParseError& e) {
        throw ArrangementError(std::string("theta block: ") + e.what());
    }
    if (theta_rows.empty()) throw ArrangementError("empty theta block");
    GeneralCoterieInstance inst{std::move(arr), Matrix(), {}};
    try {
        inst.theta_star = Matrix::from_rows(theta_rows, theta_rows.front().size());
        for (auto it = nu_at + 1; it != lines.end(); ++it) inst.nu.push_back(parse_row(*it));
    } catch (const std::invalid_argument& e) {
        throw ArrangementError(std::string("instance blocks: ") + e.what());
    }
    inst.validate();
    return inst;
}

CrossSection cross_section(const RootSystem& rs, std::span<const Rational> y) {
    require_rank(rs, y);
    if (std::any_of(y.begin(), y.end(), [](const Rational& q) { return q < 0; })) {
        throw PreconditionViolation("y must lie in P0 (non-negative root coordinates)");
    }
    const std::size_t n = rs.rank();
    CrossSection cs{rs, Vector(y.begin(), y.end()), ConeSystem(n)};
    for (std::size_t a = 0; a < n; ++a) {
        Vector f(n);
        for (std::size_t j = 0; j < n; ++j) f[j] = rs.cartan()(j, a);
        cs.system.add(std::move(f), Rational(0), Relation::GreaterEqual);
    }
    for (std::size_t a = 0; a < n; ++a) {
        cs.system.add(scale(Rational(-1), unit_vector(n, a)), -y[a], Relation::GreaterEqual);
    }
    return cs;
}

std::vector<Vector> cross_section_vertices(const CrossSection& cs) {
    const std::size_t n = cs.rs.rank();
    if (n > kMaxVertexEnumerationRank) {
        throw ResourceLimitExceeded("vertex enumeration is limited to rank " + std::to_string(kMaxVertexEnumerationRank));
    }
    const auto& cons = cs.system.constraints;
    const std::size_t m = cons.size();
    std::set<Vector> found;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
    do {
        std::vector<Vector> rows;
        Vector rhs;
        for (std::size_t k = 0; k < m; ++k) {
            if (!pick[k]) continue;
            rows.push_back(cons[k].functional);
            rhs.push_back(cons[k].bound);
        }
        const auto sol = solve_linear(Matrix::from_rows(rows, n), rhs);
        if (sol && sol->kernel.empty() && cs.system.satisfied_by(sol->particular)) found.insert(sol->particular);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {found.begin(), found.end()};
}

std::vector<Vector> orbit_polytope_vertices(const CrossSection& cs, std::size_t cap) {
    if (weyl_group_order(cs.rs.type()) > cap) {
        throw ResourceLimitExceeded("|W| exceeds the orbit cap of " + std::to_string(cap));
    }
    std::vector<WeylElement> gens;
    for (std::size_t a = 0; a < cs.rs.rank(); ++a) gens.push_back(simple_reflection(cs.rs, a));
    std::set<Vector> seen;
    std::vector<Vector> queue;
    for (auto& v : cross_section_vertices(cs)) {
        if (seen.insert(v).second) queue.push_back(std::move(v));
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& s : gens) {
            Vector img = s.apply(queue[head]);
            if (seen.insert(img).second) queue.push_back(std::move(img));
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace coterie
