#include "coterie/feasibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coterie {

namespace {

// f · x > b (strict) or f · x >= b
struct Ineq {
    Vector f;
    Rational b;
    bool strict = false;
};

struct Substitution {
    std::size_t var;
    Vector f;  // original equality f · x = b with f[var] != 0
    Rational b;
};

struct Stage {
    std::size_t var;
    std::vector<Ineq> involved;
};

bool constant_holds(const Ineq& c) { return c.strict ? Rational(0) > c.b : Rational(0) >= c.b; }

// Positive rescaling so that equal half-spaces compare equal.
void normalize(Ineq& c) {
    Vector p = primitive_positive_scale(c.f);
    for (std::size_t i = 0; i < c.f.size(); ++i) {
        if (c.f[i] != 0) {
            c.b *= p[i] / c.f[i];
            break;
        }
    }
    c.f = std::move(p);
}

class ConstraintPool {
public:
    // Returns false when a constant constraint is violated.
    bool insert(Ineq c) {
        if (is_zero(c.f)) return constant_holds(c);
        normalize(c);
        auto [it, fresh] = pool_.try_emplace(c.f, c.b, c.strict);
        if (!fresh) {
            auto& [b, strict] = it->second;
            if (c.b > b || (c.b == b && c.strict && !strict)) {
                b = c.b;
                strict = c.strict;
            }
        }
        return true;
    }

    std::size_t size() const { return pool_.size(); }

    std::vector<Ineq> take() {
        std::vector<Ineq> out;
        out.reserve(pool_.size());
        for (auto& [f, bs] : pool_) out.push_back(Ineq{f, bs.first, bs.second});
        pool_.clear();
        return out;
    }

private:
    std::map<Vector, std::pair<Rational, bool>> pool_;
};

std::size_t pick_greedy(const std::vector<Ineq>& ineqs, const std::vector<bool>& done) {
    std::size_t best = done.size();
    long long best_cost = 0;
    for (std::size_t v = 0; v < done.size(); ++v) {
        if (done[v]) continue;
        long long pos = 0;
        long long neg = 0;
        for (const auto& c : ineqs) {
            if (c.f[v] > 0) ++pos;
            else if (c.f[v] < 0) ++neg;
        }
        long long cost = pos * neg - pos - neg;
        if (best == done.size() || cost < best_cost) {
            best = v;
            best_cost = cost;
        }
    }
    return best;
}

Rational choose_value(const std::optional<std::pair<Rational, bool>>& lo, const std::optional<std::pair<Rational, bool>>& hi) {
    if (lo && hi) {
        if (lo->first == hi->first) return lo->first;
        return (lo->first + hi->first) / 2;
    }
    if (lo) return lo->first + 1;
    if (hi) return hi->first - 1;
    return Rational(0);
}

}  // namespace

std::string to_string(Relation rel) {
    switch (rel) {
        case Relation::Greater: return ">";
        case Relation::GreaterEqual: return ">=";
        case Relation::Equal: return "=";
    }
    return "?";
}

bool LinearConstraint::satisfied_by(std::span<const Rational> x) const {
    const Rational lhs = dot(functional, x);
    switch (relation) {
        case Relation::Greater: return lhs > bound;
        case Relation::GreaterEqual: return lhs >= bound;
        case Relation::Equal: return lhs == bound;
    }
    return false;
}

LinearConstraint LinearConstraint::closed() const {
    LinearConstraint c = *this;
    if (c.relation == Relation::Greater) c.relation = Relation::GreaterEqual;
    return c;
}

void ConeSystem::add(LinearConstraint c) {
    if (c.functional.size() != dim) throw DimensionMismatch("constraint length differs from system dimension");
    constraints.push_back(std::move(c));
}

void ConeSystem::add(Vector functional, Rational bound, Relation rel) {
    add(LinearConstraint{std::move(functional), std::move(bound), rel});
}

bool ConeSystem::satisfied_by(std::span<const Rational> x) const {
    return std::all_of(constraints.begin(), constraints.end(), [&](const LinearConstraint& c) { return c.satisfied_by(x); });
}

void ConeSystem::validate() const {
    for (const auto& c : constraints) {
        if (c.functional.size() != dim) throw DimensionMismatch("constraint length differs from system dimension");
    }
}

FeasibilityResult feasible(const ConeSystem& system, const FeasibilityOptions& options) {
    system.validate();
    const std::size_t n = system.dim;

    std::vector<LinearConstraint> equalities;
    std::vector<Ineq> ineqs;
    for (const auto& c : system.constraints) {
        if (c.relation == Relation::Equal) equalities.push_back(c);
        else ineqs.push_back(Ineq{c.functional, c.bound, c.relation == Relation::Greater});
    }

    // Equalities: Gaussian substitution.
    std::vector<Substitution> subs;
    std::vector<bool> eliminated(n, false);
    for (std::size_t e = 0; e < equalities.size(); ++e) {
        const Vector f = equalities[e].functional;
        const Rational b = equalities[e].bound;
        auto pivot = std::find_if(f.begin(), f.end(), [](const Rational& q) { return q != 0; });
        if (pivot == f.end()) {
            if (b != 0) return {};
            continue;
        }
        const std::size_t k = static_cast<std::size_t>(pivot - f.begin());
        auto substitute = [&](Vector& g, Rational& gb) {
            if (g[k] == 0) return;
            const Rational t = g[k] / f[k];
            for (std::size_t j = 0; j < n; ++j) g[j] -= t * f[j];
            gb -= t * b;
        };
        for (std::size_t r = e + 1; r < equalities.size(); ++r) substitute(equalities[r].functional, equalities[r].bound);
        for (auto& c : ineqs) substitute(c.f, c.b);
        subs.push_back(Substitution{k, f, b});
        eliminated[k] = true;
    }

    ConstraintPool pool;
    for (auto& c : ineqs) {
        if (!pool.insert(std::move(c))) return {};
    }
    std::vector<Ineq> current = pool.take();

    std::vector<std::size_t> order;
    if (!options.elimination_order.empty()) {
        std::vector<std::size_t> sorted = options.elimination_order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> expected(n);
        std::iota(expected.begin(), expected.end(), std::size_t{0});
        if (sorted != expected) throw std::invalid_argument("elimination order must be a permutation of the variables");
        for (auto v : options.elimination_order) {
            if (!eliminated[v]) order.push_back(v);
        }
    }

    std::vector<Stage> stages;
    std::vector<bool> done = eliminated;
    const std::size_t remaining = static_cast<std::size_t>(std::count(done.begin(), done.end(), false));
    for (std::size_t step = 0; step < remaining; ++step) {
        const std::size_t v = order.empty() ? pick_greedy(current, done) : order[step];
        done[v] = true;

        std::vector<Ineq> pos;
        std::vector<Ineq> neg;
        for (auto& c : current) {
            if (c.f[v] > 0) pos.push_back(c);
            else if (c.f[v] < 0) neg.push_back(c);
            else pool.insert(std::move(c));
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                Ineq combined;
                combined.f.resize(n);
                const Rational wp = -q.f[v];
                const Rational wq = p.f[v];
                for (std::size_t j = 0; j < n; ++j) combined.f[j] = wp * p.f[j] + wq * q.f[j];
                combined.f[v] = 0;
                combined.b = wp * p.b + wq * q.b;
                combined.strict = p.strict || q.strict;
                if (!pool.insert(std::move(combined))) return {};
                if (pool.size() > options.max_constraints) {
                    throw ResourceLimitExceeded("Fourier-Motzkin elimination exceeded " + std::to_string(options.max_constraints) + " constraints");
                }
            }
        }
        Stage stage{v, {}};
        stage.involved.reserve(pos.size() + neg.size());
        std::move(pos.begin(), pos.end(), std::back_inserter(stage.involved));
        std::move(neg.begin(), neg.end(), std::back_inserter(stage.involved));
        stages.push_back(std::move(stage));
        current = pool.take();
    }

    // Every surviving constraint is constant and was checked on insertion.
    FeasibilityResult result;
    result.feasible = true;
    result.witness.assign(n, Rational(0));
    Vector& x = result.witness;
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const std::size_t v = it->var;
        std::optional<std::pair<Rational, bool>> lo;
        std::optional<std::pair<Rational, bool>> hi;
        for (const auto& c : it->involved) {
            Rational rest = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != v && c.f[j] != 0) rest += c.f[j] * x[j];
            }
            const Rational limit = (c.b - rest) / c.f[v];
            if (c.f[v] > 0) {
                if (!lo || limit > lo->first || (limit == lo->first && c.strict)) lo = {limit, c.strict};
            } else {
                if (!hi || limit < hi->first || (limit == hi->first && c.strict)) hi = {limit, c.strict};
            }
        }
        x[v] = choose_value(lo, hi);
    }
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        Rational rest = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != it->var && it->f[j] != 0) rest += it->f[j] * x[j];
        }
        x[it->var] = (it->b - rest) / it->f[it->var];
    }
    if (!system.satisfied_by(x)) {
        throw std::logic_error("Fourier-Motzkin witness fails substitution check");
    }
    return result;
}

std::vector<LinearConstraint> negation(const LinearConstraint& c) {
    Vector neg = scale(Rational(-1), c.functional);
    switch (c.relation) {
        case Relation::Greater: return {{neg, -c.bound, Relation::GreaterEqual}};
        case Relation::GreaterEqual: return {{neg, -c.bound, Relation::Greater}};
        case Relation::Equal: return {{c.functional, c.bound, Relation::Greater}, {neg, -c.bound, Relation::Greater}};
    }
    return {};
}

bool implies(const ConeSystem& system, const LinearConstraint& c, const FeasibilityOptions& options) {
    for (const auto& alt : negation(c)) {
        ConeSystem probe = system;
        probe.add(alt);
        if (feasible(probe, options)) return false;
    }
    return true;
}

}  // namespace coterie
