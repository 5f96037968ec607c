#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coterie/root_system.hpp"
#include "support.hpp"

#include <set>

using namespace coterie;
using testing::rs_of;

namespace {

Rational determinant(Matrix m) {
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

Matrix leading(const Matrix& m, std::size_t k) {
    Matrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j);
    return out;
}

std::vector<long> key(const Matrix& m) {
    std::vector<long> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(boost::multiprecision::numerator(m(i, j)).convert_to<long>());
    return out;
}

// Closure of the simple reflections under multiplication.
std::size_t enumerate_group(const RootSystem& rs) {
    std::set<std::vector<long>> seen{key(Matrix::identity(rs.rank()))};
    std::vector<Matrix> frontier{Matrix::identity(rs.rank())};
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& m : frontier) {
            for (std::size_t a = 0; a < rs.rank(); ++a) {
                Matrix p = simple_reflection(rs, a).matrix * m;
                if (seen.insert(key(p)).second) next.push_back(std::move(p));
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

const std::map<std::string, int> kDeterminants{
    {"A1", 2}, {"A4", 5}, {"A8", 9}, {"B3", 2}, {"B7", 2}, {"C2", 2}, {"C6", 2}, {"D4", 4},
    {"D7", 4}, {"E6", 3}, {"E7", 2}, {"E8", 1}, {"F4", 1}, {"G2", 1}};

}  // namespace

TEST_CASE("type strings") {
    CHECK(SimpleType::parse("e8").name() == "E8");
    CHECK(SimpleType::parse("A12") == SimpleType{Family::A, 12});
    for (const char* bad : {"A0", "A13", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "X4", "", "A", "4A", "A-1", "A4x"}) {
        CHECK_THROWS_AS(SimpleType::parse(bad), InvalidType);
    }
    const auto all = supported_types(8);
    CHECK(all.size() == 33);
    CHECK(supported_types(12).size() == 12 + 11 + 11 + 10 + 3 + 1 + 1);
}

TEST_CASE("Cartan data is a valid simple Cartan matrix for every supported type") {
    for (const auto& t : supported_types(12)) {
        CAPTURE(t.name());
        const RootSystem rs = RootSystem::build(t);
        const std::size_t n = rs.rank();
        const Matrix& c = rs.cartan();
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(c(i, i) == 2);
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                CHECK(c(i, j) <= 0);
                CHECK((c(i, j) == 0) == (c(j, i) == 0));
                CHECK((c(i, j) != 0) == rs.adjacent(i, j));
            }
        }
        CHECK(c * inverse(c) == Matrix::identity(n));
        // inv_coeffs = (C^T)^-1, entries strictly positive
        CHECK(c.transpose() * rs.inv_coeffs() == Matrix::identity(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(rs.c(i, j) > 0);
        // the form is symmetric, positive definite and symmetrises C
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(rs.form()(i, j) == rs.form()(j, i));
                CHECK(c(i, j) == 2 * rs.form()(i, j) / rs.form()(j, j));
            }
        for (std::size_t k = 1; k <= n; ++k) CHECK(determinant(leading(rs.form(), k)) > 0);
        // shortest roots have squared length 2
        Rational shortest = rs.form()(0, 0);
        for (std::size_t i = 0; i < n; ++i) shortest = std::min(shortest, rs.form()(i, i));
        CHECK(shortest == 2);
        // the Dynkin diagram is a tree
        CHECK(rs.edges().size() == n - 1);
        for (std::size_t a = 0; a < n; ++a) CHECK(rs.path(0, a).size() >= 1);
        for (const auto& e : rs.edges()) CHECK(e.lo < e.hi);
    }
}

TEST_CASE("Cartan determinants") {
    for (const auto& [name, det] : kDeterminants) {
        CAPTURE(name);
        CHECK(determinant(rs_of(name).cartan()) == det);
    }
}

TEST_CASE("node numbering") {
    CHECK(rs_of("E6").adjacent(2, 5));
    CHECK(rs_of("E7").adjacent(3, 6));
    CHECK(rs_of("E8").adjacent(4, 7));
    CHECK(rs_of("D5").adjacent(2, 4));
    CHECK(rs_of("D5").adjacent(2, 3));
    // B_n: last node short; C_n: last node long; G2: node 1 short
    CHECK(rs_of("B4").form()(3, 3) < rs_of("B4").form()(0, 0));
    CHECK(rs_of("C4").form()(3, 3) > rs_of("C4").form()(0, 0));
    CHECK(rs_of("G2").form()(0, 0) == 2);
    CHECK(rs_of("G2").form()(1, 1) == 6);
    CHECK(rs_of("F4").form()(0, 0) == 2);
    CHECK(rs_of("F4").form()(3, 3) == 4);
}

TEST_CASE("inverse coefficient examples") {
    CHECK(rs_of("A2").inv_coeffs() == Matrix{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}});
    CHECK(rs_of("G2").inv_coeffs() == Matrix{{Rational(2), Rational(3)}, {Rational(1), Rational(2)}});
    const RootSystem g2 = rs_of("G2");
    CHECK(g2.c(0, 1) / g2.c(1, 1) == Rational(3, 2));
    CHECK(g2.c(1, 0) / g2.c(0, 0) == Rational(1, 2));
    CHECK(rs_of("A4").c(0, 0) == Rational(4, 5));
    // A_n: c_{j,i} = min(i,j) (n+1-max(i,j)) / (n+1), 1-based
    for (int n = 1; n <= 12; ++n) {
        const RootSystem rs = rs_of("A" + std::to_string(n));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) CHECK(rs.c(j - 1, i - 1) == Rational(std::min(i, j) * (n + 1 - std::max(i, j)), n + 1));
    }
}

TEST_CASE("fundamental weights") {
    CHECK(fundamental_weight(rs_of("A2"), 0) == Vector{Rational(2, 3), Rational(1, 3)});
    CHECK(fundamental_weight(rs_of("G2"), 1) == Vector{Rational(3), Rational(2)});
    for (const auto& t : supported_types(8)) {
        const RootSystem rs = RootSystem::build(t);
        for (std::size_t a = 0; a < rs.rank(); ++a) {
            CAPTURE(t.name());
            CHECK(rs.coroot_pairings(fundamental_weight(rs, a)) == unit_vector(rs.rank(), a));
            CHECK(dominant_in_root_coords(rs, fundamental_weight(rs, a)));
        }
    }
}

TEST_CASE("inner product") {
    const RootSystem a2 = rs_of("A2");
    const Vector e1 = unit_vector(2, 0);
    const Vector e2 = unit_vector(2, 1);
    CHECK(inner(a2, e1, e1) == 2);
    CHECK(inner(a2, e1, e2) == -1);
    CHECK_THROWS_AS(inner(a2, e1, Vector(3)), DimensionMismatch);

    std::mt19937_64 rng(testing::kSeed + 20);
    for (const auto& t : supported_types(8)) {
        const RootSystem rs = RootSystem::build(t);
        for (int k = 0; k < 10; ++k) {
            const Vector v = testing::random_vector(rng, rs.rank());
            const Vector w = testing::random_vector(rng, rs.rank());
            CHECK(inner(rs, v, w) == inner(rs, w, v));
            for (std::size_t a = 0; a < rs.rank(); ++a) {
                const WeylElement s = simple_reflection(rs, a);
                CHECK(inner(rs, s.apply(v), s.apply(w)) == inner(rs, v, w));
            }
        }
    }
}

TEST_CASE("simple reflections") {
    const RootSystem a2 = rs_of("A2");
    CHECK(simple_reflection(a2, 0).apply(unit_vector(2, 1)) == Vector{Rational(1), Rational(1)});
    for (const auto& t : supported_types(8)) {
        const RootSystem rs = RootSystem::build(t);
        const std::size_t n = rs.rank();
        for (std::size_t a = 0; a < n; ++a) {
            const WeylElement s = simple_reflection(rs, a);
            CHECK(s.apply(unit_vector(n, a)) == scale(Rational(-1), unit_vector(n, a)));
            CHECK((s * s).matrix == Matrix::identity(n));
            CHECK(s.word == std::vector<std::size_t>{a});
            // fixes the wall <., a^vee> = 0: fundamental weights other than lambda_a
            for (std::size_t b = 0; b < n; ++b) {
                if (b != a) CHECK(s.apply(fundamental_weight(rs, b)) == fundamental_weight(rs, b));
            }
            // braid relations with m from the Cartan product
            for (std::size_t b = a + 1; b < n; ++b) {
                const Rational p = rs.cartan()(a, b) * rs.cartan()(b, a);
                const int m = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
                const WeylElement st = s * simple_reflection(rs, b);
                WeylElement power = weyl_identity(rs);
                for (int k = 0; k < m; ++k) {
                    CHECK((k == 0 || power.matrix != Matrix::identity(n)));
                    power = power * st;
                }
                CHECK(power.matrix == Matrix::identity(n));
            }
        }
    }
}

TEST_CASE("Weyl group orders by enumeration") {
    for (const char* t : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "D5", "F4", "G2"}) {
        CAPTURE(t);
        CHECK(Integer(enumerate_group(rs_of(t))) == weyl_group_order(SimpleType::parse(t)));
    }
    CHECK(weyl_group_order(SimpleType::parse("E8")) == Integer(696729600));
    CHECK(weyl_group_order(SimpleType::parse("E7")) == Integer(2903040));
    CHECK(weyl_group_order(SimpleType::parse("E6")) == Integer(51840));
}

TEST_CASE("chain identity") {
    const RootSystem a4 = rs_of("A4");
    CHECK(a4.c(0, 2) == Rational(2, 5));
    CHECK(a4.c(0, 1) / a4.c(1, 1) * a4.c(1, 2) == Rational(2, 5));
    for (const auto& t : supported_types(8)) {
        const RootSystem rs = RootSystem::build(t);
        CAPTURE(t.name());
        CHECK(chain_identity_check(rs));
        // explicit triple loop as an oracle
        bool all = true;
        for (std::size_t a = 0; a < rs.rank(); ++a)
            for (std::size_t g = 0; g < rs.rank(); ++g) {
                const auto p = rs.path(a, g);
                for (std::size_t k = 1; k + 1 < p.size(); ++k) {
                    const std::size_t b = p[k];
                    all = all && rs.c(a, g) == rs.c(a, b) / rs.c(b, b) * rs.c(b, g);
                }
            }
        CHECK(all);
    }
}

TEST_CASE("dominance") {
    const RootSystem a2 = rs_of("A2");
    CHECK(dominant_in_root_coords(a2, Vector{Rational(2, 3), Rational(1, 3)}));
    CHECK_FALSE(dominant_in_root_coords(a2, Vector{Rational(1), Rational(0)}));
    CHECK(dominant_in_root_coords(a2, Vector(2)));
    CHECK_FALSE(dominant_in_root_coords(a2, Vector(2), true));
}
