#pragma once

#include "coterie/exact.hpp"
#include "coterie/root_system.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <vector>

namespace coterie {

class ArrangementError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A hyperplane ker(l) with the orientation fixed by the integral functional
/// l, written in the basis dual to the simple roots.
class OrientedHyperplane {
public:
    explicit OrientedHyperplane(Vector functional);

    const Vector& functional() const { return functional_; }
    Rational operator()(std::span<const Rational> x) const { return dot(functional_, x); }
    /// Positive rescaling to a primitive integer vector.
    Vector primitive() const { return primitive_positive_scale(functional_); }
    /// l o w^{-1}
    OrientedHyperplane transformed(const WeylElement& w_inverse) const;

    bool operator==(const OrientedHyperplane&) const = default;

private:
    Vector functional_;
};

struct Arrangement {
    RootSystem rs;
    /// Lambda^1 H: the hyperplanes with l(-alpha) >= 0 for every simple alpha.
    std::vector<OrientedHyperplane> fundamental;
    /// W-orbit of `fundamental`; empty optional when generation hit the cap.
    std::optional<std::vector<OrientedHyperplane>> full;
    std::size_t orbit_partial_size = 0;

    bool orbit_capped() const { return !full.has_value() && orbit_partial_size > 0; }
};

/// Validates integrality, the orientation condition l(alpha) <= 0 and
/// nondegeneracy (no two members positive multiples of each other).
Arrangement make_arrangement(const RootSystem& rs, const std::vector<Vector>& functionals);

/// H_Delta: one hyperplane Span(Delta \ alpha) per node, with nu_alpha = -e_alpha.
Arrangement canonical_arrangement(const RootSystem& rs);

inline constexpr std::size_t kDefaultOrbitCap = 100'000;

/// Closes the fundamental hyperplanes under l -> l o s_alpha, deduplicating
/// exactly. Beyond `cap` members the orbit is reported as capped.
Arrangement weyl_orbit(Arrangement arr, std::size_t cap = kDefaultOrbitCap);

struct ClassifyingMap {
    /// a_star(i, alpha) = -l_i(alpha)
    Matrix a_star;
    /// k_i = gcd of row i
    std::vector<Integer> k;
};

ClassifyingMap classifying_map(const Arrangement& arr);

/// chi - lam is a nonnegative integral combination of simple roots.
/// Throws std::invalid_argument when lam is not dominant.
bool env_augmented_cone_member(const RootSystem& rs, std::span<const Rational> chi, std::span<const Rational> lam);

/// Line-oriented text: "type <X><n>" then one functional per line, '#'
/// starts a comment.
Arrangement parse_arrangement(std::istream& in);

}  // namespace coterie
