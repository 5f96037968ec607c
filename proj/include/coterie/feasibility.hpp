#pragma once

#include "coterie/exact.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coterie {

enum class Relation { Greater, GreaterEqual, Equal };

std::string to_string(Relation rel);

/// functional · x  REL  bound
struct LinearConstraint {
    Vector functional;
    Rational bound;
    Relation relation = Relation::GreaterEqual;

    bool satisfied_by(std::span<const Rational> x) const;
    /// Same functional and bound, non-strict.
    LinearConstraint closed() const;
    bool operator==(const LinearConstraint&) const = default;
};

/// H-representation over a fixed ambient dimension.
struct ConeSystem {
    std::size_t dim = 0;
    std::vector<LinearConstraint> constraints;

    ConeSystem() = default;
    explicit ConeSystem(std::size_t d) : dim(d) {}

    void add(LinearConstraint c);
    void add(Vector functional, Rational bound, Relation rel);
    bool satisfied_by(std::span<const Rational> x) const;
    /// Throws DimensionMismatch when some functional has the wrong length.
    void validate() const;
};

class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FeasibilityOptions {
    std::size_t max_constraints = 1'000'000;
    /// Elimination order for the inequality phase; empty selects a greedy
    /// order that minimizes the number of generated pairs at each step.
    std::vector<std::size_t> elimination_order;
};

struct FeasibilityResult {
    bool feasible = false;
    /// Satisfies every constraint exactly when feasible.
    Vector witness;

    explicit operator bool() const { return feasible; }
};

/// Exact decision for mixed strict / weak / equality systems by
/// Fourier–Motzkin elimination. Derived constraints are strict iff one
/// parent is strict.
FeasibilityResult feasible(const ConeSystem& system, const FeasibilityOptions& options = {});

/// Half-spaces whose union is the complement of `c` (two for an equality).
std::vector<LinearConstraint> negation(const LinearConstraint& c);

/// True iff every point satisfying `system` satisfies `c`.
bool implies(const ConeSystem& system, const LinearConstraint& c, const FeasibilityOptions& options = {});

}  // namespace coterie
