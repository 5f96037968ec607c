#pragma once

#include "coterie/exact.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coterie {

enum class Family { A, B, C, D, E, F, G };

class InvalidType : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A simple type such as A4 or E8. Nodes are numbered as in the diagrams
/// used for the coterie tables: chains 1..n, with
///   D_n: n-2 branches to n-1 and n;   E6: 6 hangs off 3;
///   E7: 7 hangs off 4;                E8: 8 hangs off 5.
/// Internally nodes are 0-based.
struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    /// Case-insensitive, e.g. "a4", "E8". Throws InvalidType.
    static SimpleType parse(std::string_view text);
    /// Throws InvalidType when the rank is not supported for the family.
    void validate() const;
    std::string name() const;

    bool operator==(const SimpleType&) const = default;
};

/// Every supported type with rank <= max_rank (A1..A12, B/C2..12, D3..12,
/// E6..8, F4, G2), in family then rank order.
std::vector<SimpleType> supported_types(int max_rank);

/// Unordered Dynkin edge stored with lo < hi.
struct Edge {
    std::size_t lo;
    std::size_t hi;
    bool operator==(const Edge&) const = default;
};

class RootSystem {
public:
    static RootSystem build(SimpleType type);

    const SimpleType& type() const { return type_; }
    std::size_t rank() const { return cartan_.rows(); }

    /// cartan(i, j) = <alpha_i, alpha_j^vee>.
    const Matrix& cartan() const { return cartan_; }
    /// inv_coeffs(beta, alpha) = c_{beta,alpha} = entry of (C^T)^{-1};
    /// column alpha is the fundamental weight lambda_alpha in root coordinates.
    const Matrix& inv_coeffs() const { return inv_coeffs_; }
    const Rational& c(std::size_t beta, std::size_t alpha) const { return inv_coeffs_(beta, alpha); }
    /// (alpha_i, alpha_j), short roots of squared length 2.
    const Matrix& form() const { return form_; }
    /// d_i = (alpha_i, alpha_i) / 2.
    const Vector& symmetrizers() const { return symmetrizers_; }
    /// Sorted by (lo, hi).
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> neighbours(std::size_t a) const;
    /// Unique path in the Dynkin tree, endpoints included.
    std::vector<std::size_t> path(std::size_t from, std::size_t to) const;

    /// Coroot pairings <x, alpha_i^vee> for x in root coordinates (C^T x).
    Vector coroot_pairings(std::span<const Rational> x) const;

private:
    SimpleType type_;
    Matrix cartan_;
    Matrix inv_coeffs_;
    Matrix form_;
    Vector symmetrizers_;
    std::vector<Edge> edges_;
};

/// Word in simple reflections together with its action on root coordinates.
struct WeylElement {
    std::vector<std::size_t> word;
    Matrix matrix;

    Vector apply(std::span<const Rational> x) const { return matrix * x; }
    WeylElement operator*(const WeylElement& rhs) const;
};

WeylElement weyl_identity(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, std::size_t alpha);

/// |W| for the type.
Integer weyl_group_order(const SimpleType& type);

Vector fundamental_weight(const RootSystem& rs, std::size_t alpha);
Rational inner(const RootSystem& rs, std::span<const Rational> v, std::span<const Rational> w);

/// c_{a,g} = (c_{a,b} / c_{b,b}) c_{b,g} for every b strictly inside the
/// Dynkin path from a to g.
bool chain_identity_check(const RootSystem& rs);

/// x in the rational Weyl chamber (strict: in its interior).
bool dominant_in_root_coords(const RootSystem& rs, std::span<const Rational> x, bool strict = false);

}  // namespace coterie
