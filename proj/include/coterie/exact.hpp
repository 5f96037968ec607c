#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coterie {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Coordinates in the simple-root basis (or its dual), always exact.
using Vector = std::vector<Rational>;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Vector operator*(std::span<const Rational> v) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational& s, std::span<const Rational> v);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
bool is_integer(const Rational& q);

/// Clears denominators, divides by the gcd and makes the first nonzero entry
/// positive. The zero vector is returned unchanged.
Vector primitive_integer(std::span<const Rational> v);

/// Positive rescaling to a primitive integer vector (sign is kept).
Vector primitive_positive_scale(std::span<const Rational> v);

/// Accepts "p", "-p", "p/q"; whitespace around the value is ignored.
Rational parse_rational(std::string_view text);
/// Comma-separated rationals, e.g. "1/4,1/2,3/4,1".
Vector parse_vector(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
/// "(a, b, c)"
std::string to_string(std::span<const Rational> v);

struct LinearSolution {
    Vector particular;
    /// Primitive integer vectors, first nonzero entry positive.
    std::vector<Vector> kernel;
};

/// Exact solution set of A x = b. Returns nullopt when the system is
/// inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, std::span<const Rational> b);

std::size_t rank(const Matrix& a);
Matrix inverse(const Matrix& a);

}  // namespace coterie
