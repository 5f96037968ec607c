#pragma once

#include "coterie/arrangement.hpp"
#include "coterie/exact.hpp"
#include "coterie/feasibility.hpp"
#include "coterie/root_system.hpp"

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <vector>

namespace coterie {

enum class Mode { Open, Closed };
enum class Method { Geometric, Full, Edges };

class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegenerateInstance : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// a_beta > ratio * a_alpha, ratio = c_{beta,alpha} / c_{alpha,alpha}.
struct PairInequality {
    std::size_t beta;
    std::size_t alpha;
    Rational ratio;
};

struct CoterieDescription {
    RootSystem rs;
    bool reduced = false;
    /// Full: every ordered pair (beta, alpha), beta != alpha, beta-major.
    /// Reduced: for each Dynkin edge (lo, hi), first (hi, lo) then (lo, hi).
    std::vector<PairInequality> pairs;
    /// `pairs` followed by a_alpha > 0 for every node.
    ConeSystem open_system;
    /// Same functionals, all non-strict: the closure of the coterie.
    ConeSystem closed_system;
};

CoterieDescription inequalities(const RootSystem& rs, bool reduced);

/// Holds both generated descriptions of one root system for repeated
/// membership queries.
class Coterie {
public:
    explicit Coterie(RootSystem rs);

    const RootSystem& root_system() const { return full_.rs; }
    const CoterieDescription& full() const { return full_; }
    const CoterieDescription& reduced() const { return reduced_; }

    bool member(std::span<const Rational> x, Mode mode, Method method) const;

private:
    CoterieDescription full_;
    CoterieDescription reduced_;
};

/// r_alpha(x) = a_alpha / c_{alpha,alpha}: the multiple of lambda_alpha that
/// clears the alpha-coordinate of x.
Rational r_alpha(const RootSystem& rs, std::span<const Rational> x, std::size_t alpha);

/// For every alpha: r_alpha(x) > 0 and x - r_alpha(x) lambda_alpha has all
/// remaining coordinates positive (non-negative in closed mode).
bool member_geometric(const RootSystem& rs, std::span<const Rational> x, Mode mode);

bool member(const RootSystem& rs, std::span<const Rational> x, Mode mode, Method method);

/// x + y stays in the open coterie and r_alpha is additive. Throws
/// PreconditionViolation if x or y is not an open member.
bool additivity_check(const Coterie& h, std::span<const Rational> x, std::span<const Rational> y);

/// Arrangement together with the structure map theta* and the valuations
/// nu_i on the character space of the centre closure.
struct GeneralCoterieInstance {
    Arrangement arr;
    /// m x n: root coordinates -> centre characters.
    Matrix theta_star;
    /// One length-m functional per fundamental hyperplane.
    std::vector<Vector> nu;

    /// H_Delta with theta* the identity and nu_alpha the alpha-coordinate.
    static GeneralCoterieInstance canonical(const RootSystem& rs);

    const RootSystem& rs() const { return arr.rs; }
    std::size_t size() const { return nu.size(); }
    /// nu_i o theta*, a functional on root coordinates.
    Vector composite(std::size_t i) const;
    Rational valuation(std::size_t i, std::span<const Rational> delta) const;
    /// Shapes agree and nu_i o theta* = -l_i for every i. Throws ArrangementError.
    void validate() const;
};

/// The unique r with nu_i(theta*(r)) = nu_i(delta) and (r, mu) = 0 for every
/// mu in ker(nu_i o theta*). Throws DegenerateInstance.
Vector r_i_general(const GeneralCoterieInstance& inst, std::size_t i, std::span<const Rational> delta);

/// nu_i(delta - theta*(lam)) == eps_i(delta) (r_i(delta) - lam, r_i(delta)).
bool u_identity_check(const GeneralCoterieInstance& inst, std::size_t i, std::span<const Rational> delta,
                      std::span<const Rational> lam);

struct GeneralMembership {
    bool member = false;
    /// Per hyperplane i: the system in x and its verdict.
    std::vector<ConeSystem> systems;
    std::vector<FeasibilityResult> verdicts;
};

/// For each i, is there a strictly dominant x with (r_j - x, r_j) > 0 for
/// j != i and (r_i - x, r_i) = 0? Requires nu_i(delta) >= 0 for all i.
GeneralMembership general_member(const GeneralCoterieInstance& inst, std::span<const Rational> delta,
                                 const FeasibilityOptions& options = {});

/// Arrangement file followed by a "theta" block (m rows of n entries) and a
/// "nu" block (one row of m entries per hyperplane).
GeneralCoterieInstance parse_instance(std::istream& in);

struct CrossSection {
    RootSystem rs;
    Vector y;
    /// C^T lam >= 0 and lam <= y coordinate-wise.
    ConeSystem system;
};

/// Throws PreconditionViolation if y has a negative root coordinate.
CrossSection cross_section(const RootSystem& rs, std::span<const Rational> y);

inline constexpr std::size_t kMaxVertexEnumerationRank = 8;

/// Vertices by exhaustive active-set enumeration, sorted lexicographically.
std::vector<Vector> cross_section_vertices(const CrossSection& cs);

/// W-orbit of the cross-section vertices. Throws ResourceLimitExceeded when
/// |W| exceeds cap.
std::vector<Vector> orbit_polytope_vertices(const CrossSection& cs, std::size_t cap = 100'000);

}  // namespace coterie
