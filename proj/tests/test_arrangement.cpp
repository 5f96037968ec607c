#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coterie/arrangement.hpp"
#include "support.hpp"

#include <set>
#include <sstream>

using namespace coterie;
using testing::rs_of;

namespace {

// All of W as matrices, by closing the generators under multiplication.
std::vector<Matrix> group_elements(const RootSystem& rs) {
    auto key = [](const Matrix& m) {
        std::string s;
        for (std::size_t i = 0; i < m.rows(); ++i) s += to_string(m.row_vector(i));
        return s;
    };
    std::vector<Matrix> all{Matrix::identity(rs.rank())};
    std::set<std::string> seen{key(all[0])};
    for (std::size_t k = 0; k < all.size(); ++k) {
        for (std::size_t a = 0; a < rs.rank(); ++a) {
            Matrix p = simple_reflection(rs, a).matrix * all[k];
            if (seen.insert(key(p)).second) all.push_back(std::move(p));
        }
    }
    return all;
}

std::set<Vector> orbit_oracle(const Arrangement& arr) {
    std::set<Vector> out;
    for (const auto& w : group_elements(arr.rs)) {
        for (const auto& h : arr.fundamental) {
            Vector l(arr.rs.rank());
            for (std::size_t j = 0; j < l.size(); ++j) l[j] = dot(h.functional(), w.column(j));
            out.insert(l);
        }
    }
    return out;
}

std::set<Vector> as_set(const std::vector<OrientedHyperplane>& hs) {
    std::set<Vector> out;
    for (const auto& h : hs) out.insert(h.functional());
    return out;
}

Vector v(std::initializer_list<long> xs) {
    Vector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("canonical arrangement") {
    const Arrangement a2 = canonical_arrangement(rs_of("A2"));
    REQUIRE(a2.fundamental.size() == 2);
    CHECK(a2.fundamental[0].functional() == v({-1, 0}));
    CHECK(a2.fundamental[1].functional() == v({0, -1}));
    CHECK(canonical_arrangement(rs_of("A4")).fundamental.size() == 4);
    for (const auto& t : supported_types(8)) {
        const RootSystem rs = RootSystem::build(t);
        const Arrangement arr = canonical_arrangement(rs);
        for (std::size_t a = 0; a < rs.rank(); ++a)
            for (std::size_t b = 0; b < rs.rank(); ++b) CHECK(arr.fundamental[a](scale(Rational(-1), unit_vector(rs.rank(), b))) == (a == b ? 1 : 0));
        const ClassifyingMap cm = classifying_map(arr);
        CHECK(cm.a_star == Matrix::identity(rs.rank()));
        CHECK(cm.k == std::vector<Integer>(rs.rank(), Integer(1)));
    }
}

TEST_CASE("Weyl orbits against explicit group enumeration") {
    CHECK(weyl_orbit(canonical_arrangement(rs_of("A1"))).full->size() == 2);
    CHECK(weyl_orbit(canonical_arrangement(rs_of("A2"))).full->size() == 6);
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"}) {
        CAPTURE(t);
        const Arrangement arr = weyl_orbit(canonical_arrangement(rs_of(t)));
        REQUIRE(arr.full);
        CHECK(as_set(*arr.full) == orbit_oracle(arr));
    }
}

TEST_CASE("orbit invariants") {
    for (const auto& t : supported_types(5)) {
        CAPTURE(t.name());
        const RootSystem rs = RootSystem::build(t);
        const Arrangement arr = weyl_orbit(canonical_arrangement(rs));
        REQUIRE(arr.full);
        const auto members = as_set(*arr.full);
        CHECK(members.size() == arr.full->size());
        for (const auto& h : *arr.full) {
            CHECK(h.transformed(weyl_identity(rs)).functional() == h.functional());
            for (std::size_t a = 0; a < rs.rank(); ++a) CHECK(members.count(h.transformed(simple_reflection(rs, a)).functional()) == 1);
        }
        std::set<Vector> primitive;
        for (const auto& h : *arr.full) primitive.insert(h.primitive());
        CHECK(primitive.size() == members.size());
    }
}

TEST_CASE("orbit cap") {
    const Arrangement capped = weyl_orbit(canonical_arrangement(rs_of("A4")), 10);
    CHECK_FALSE(capped.full.has_value());
    CHECK(capped.orbit_capped());
    CHECK(capped.orbit_partial_size > 10);
    const Arrangement e8 = weyl_orbit(canonical_arrangement(rs_of("E8")));
    CHECK(e8.orbit_capped());
}

TEST_CASE("classifying maps") {
    const RootSystem a1 = rs_of("A1");
    const ClassifyingMap scaled = classifying_map(make_arrangement(a1, {v({-3})}));
    CHECK(scaled.k == std::vector<Integer>{Integer(3)});
    const ClassifyingMap m = classifying_map(make_arrangement(rs_of("A2"), {v({-2, 0}), v({0, -4})}));
    CHECK(m.a_star == Matrix{{Rational(2), Rational(0)}, {Rational(0), Rational(4)}});
    CHECK(m.k == std::vector<Integer>{Integer(2), Integer(4)});
    const ClassifyingMap mixed = classifying_map(make_arrangement(rs_of("A3"), {v({-2, -4, 0}), v({0, -3, -6})}));
    CHECK(mixed.k == std::vector<Integer>{Integer(2), Integer(3)});
    for (std::size_t i = 0; i < mixed.a_star.rows(); ++i)
        for (std::size_t j = 0; j < mixed.a_star.cols(); ++j) CHECK(mixed.a_star(i, j) >= 0);
}

TEST_CASE("arrangement validation") {
    const RootSystem a2 = rs_of("A2");
    CHECK_THROWS_AS(make_arrangement(a2, {v({1, 0})}), ArrangementError);             // l(-alpha) < 0
    CHECK_THROWS_AS(make_arrangement(a2, {v({0, 0})}), ArrangementError);             // zero
    CHECK_THROWS_AS(make_arrangement(a2, {v({-1, 0}), v({-2, 0})}), ArrangementError);  // positive multiple
    CHECK_THROWS_AS(make_arrangement(a2, {Vector{Rational(-1, 2), Rational(0)}}), ArrangementError);
    CHECK_THROWS_AS(make_arrangement(a2, {v({-1})}), ArrangementError);
    CHECK_THROWS_AS(make_arrangement(a2, {}), ArrangementError);
    CHECK(make_arrangement(a2, {v({-1, 0}), v({-1, 0})}).fundamental.size() == 1);
}

TEST_CASE("arrangement files") {
    std::istringstream good("# two walls\ntype A2\n-2 0   # first\n0 -4\n\n");
    const Arrangement arr = parse_arrangement(good);
    CHECK(arr.rs.type().name() == "A2");
    CHECK(classifying_map(arr).k == std::vector<Integer>{Integer(2), Integer(4)});

    std::istringstream no_header("-1 0\n");
    CHECK_THROWS_AS(parse_arrangement(no_header), ArrangementError);
    std::istringstream bad_entry("type A2\n-1 x\n");
    CHECK_THROWS_AS(parse_arrangement(bad_entry), ArrangementError);
    std::istringstream short_row("type A2\n-1\n");
    CHECK_THROWS_AS(parse_arrangement(short_row), ArrangementError);
    std::istringstream multiple("type A2\n-1 0\n-3 0\n");
    CHECK_THROWS_AS(parse_arrangement(multiple), ArrangementError);
}

TEST_CASE("augmented cone membership") {
    const RootSystem a2 = rs_of("A2");
    const Vector l1 = fundamental_weight(a2, 0);
    const Vector l2 = fundamental_weight(a2, 1);
    CHECK(env_augmented_cone_member(a2, l1, l1));
    CHECK(env_augmented_cone_member(a2, add(l1, unit_vector(2, 0)), l1));
    CHECK_FALSE(env_augmented_cone_member(a2, l1, l2));
    CHECK_FALSE(env_augmented_cone_member(a2, add(l1, Vector{Rational(1, 2), Rational(0)}), l1));
    CHECK_THROWS_AS(env_augmented_cone_member(a2, l1, unit_vector(2, 0)), std::invalid_argument);
}
