#include "coterie/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coterie {

namespace {

using IntRow = std::vector<Integer>;

Integer lcm_of_denominators(std::span<const Rational> v) {
    Integer l = 1;
    for (const auto& q : v) {
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
    }
    return l;
}

void remove_content(IntRow& row) {
    Integer g = 0;
    for (const auto& x : row) {
        if (x != 0) g = boost::multiprecision::gcd(g, abs(x));
    }
    if (g > 1) {
        for (auto& x : row) x /= g;
    }
}

struct Echelon {
    std::vector<IntRow> rows;          // reduced rows, pivots first
    std::vector<std::size_t> pivots;   // pivot column of rows[i]
};

// Fraction-free Gauss-Jordan on integer rows; only the first `cols` columns
// are candidates for pivots.
Echelon eliminate(std::vector<IntRow> rows, std::size_t cols) {
    Echelon e;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t r = next;
        while (r < rows.size() && rows[r][c] == 0) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[r], rows[next]);
        const IntRow& p = rows[next];
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == next || rows[k][c] == 0) continue;
            Integer f = rows[k][c];
            Integer pc = p[c];
            for (std::size_t j = 0; j < rows[k].size(); ++j) {
                rows[k][j] = pc * rows[k][j] - f * p[j];
            }
            remove_content(rows[k]);
        }
        e.pivots.push_back(c);
        ++next;
    }
    e.rows = std::move(rows);
    return e;
}

std::vector<IntRow> to_integer_rows(const Matrix& a, std::span<const Rational> b) {
    std::vector<IntRow> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Vector full = a.row_vector(r);
        if (!b.empty()) full.push_back(b[r]);
        Integer l = lcm_of_denominators(full);
        IntRow row;
        row.reserve(full.size());
        for (const auto& q : full) {
            row.push_back(boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
        }
        remove_content(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    }
    return out;
}

Vector Matrix::operator*(std::span<const Rational> v) const {
    if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("sum of vectors of different length");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("difference of vectors of different length");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector scale(const Rational& s, std::span<const Rational> v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

Vector primitive_positive_scale(std::span<const Rational> v) {
    Integer l = lcm_of_denominators(v);
    Integer g = 0;
    std::vector<Integer> ints;
    ints.reserve(v.size());
    for (const auto& q : v) {
        ints.push_back(boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
        if (ints.back() != 0) g = boost::multiprecision::gcd(g, abs(ints.back()));
    }
    Vector out(v.size());
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
    return out;
}

Vector primitive_integer(std::span<const Rational> v) {
    Vector out = primitive_positive_scale(v);
    auto first = std::find_if(out.begin(), out.end(), [](const Rational& q) { return q != 0; });
    if (first != out.end() && *first < 0) {
        for (auto& q : out) q = -q;
    }
    return out;
}

Rational parse_rational(std::string_view text) {
    auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Integer d(std::string{den});
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(Integer(n), d);
}

Vector parse_vector(std::string_view text) {
    Vector out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& q) {
    const Integer& d = boost::multiprecision::denominator(q);
    std::string s = boost::multiprecision::numerator(q).str();
    if (d != 1) s += "/" + d.str();
    return s;
}

std::string to_string(std::span<const Rational> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

std::optional<LinearSolution> solve_linear(const Matrix& a, std::span<const Rational> b) {
    if (a.rows() != b.size()) throw DimensionMismatch("solve_linear: row count differs from right-hand side length");
    const std::size_t n = a.cols();
    Echelon e = eliminate(to_integer_rows(a, b), n);

    for (std::size_t r = e.pivots.size(); r < e.rows.size(); ++r) {
        if (e.rows[r][n] != 0) return std::nullopt;
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;

    LinearSolution sol;
    sol.particular.assign(n, Rational(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        const auto c = e.pivots[i];
        sol.particular[c] = Rational(e.rows[i][n], e.rows[i][c]);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector k(n);
        k[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            const auto c = e.pivots[i];
            k[c] = -Rational(e.rows[i][f], e.rows[i][c]);
        }
        sol.kernel.push_back(primitive_integer(k));
    }
    return sol;
}

std::size_t rank(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return eliminate(to_integer_rows(a, {}), a.cols()).pivots.size();
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        auto sol = solve_linear(a, unit_vector(n, c));
        if (!sol || !sol->kernel.empty()) throw SingularMatrix("matrix is singular");
        for (std::size_t r = 0; r < n; ++r) inv(r, c) = sol->particular[r];
    }
    return inv;
}

}  // namespace coterie
