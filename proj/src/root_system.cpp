#include "coterie/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace coterie {

namespace {

constexpr int kMaxClassicalRank = 12;

std::vector<Edge> dynkin_edges(const SimpleType& t) {
    std::vector<Edge> edges;
    const auto n = static_cast<std::size_t>(t.rank);
    auto chain = [&](std::size_t len) {
        for (std::size_t i = 0; i + 1 < len; ++i) edges.push_back({i, i + 1});
    };
    switch (t.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::F:
        case Family::G:
            chain(n);
            break;
        case Family::D:
            chain(n - 1);
            edges.push_back({n - 3, n - 1});
            break;
        case Family::E:
            chain(n - 1);
            if (n == 6) edges.push_back({2, 5});
            if (n == 7) edges.push_back({3, 6});
            if (n == 8) edges.push_back({4, 7});
            break;
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi); });
    return edges;
}

// Squared root lengths, short roots = 2.
std::vector<int> squared_lengths(const SimpleType& t) {
    const auto n = static_cast<std::size_t>(t.rank);
    std::vector<int> len(n, 2);
    switch (t.family) {
        case Family::B:
            std::fill(len.begin(), len.end() - 1, 4);
            break;
        case Family::C:
            len.back() = 4;
            break;
        case Family::F:
            len[2] = len[3] = 4;
            break;
        case Family::G:
            len[1] = 6;
            break;
        default:
            break;
    }
    return len;
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

SimpleType SimpleType::parse(std::string_view text) {
    if (text.size() < 2) throw InvalidType("type string too short: '" + std::string(text) + "'");
    SimpleType t;
    switch (std::toupper(static_cast<unsigned char>(text.front()))) {
        case 'A': t.family = Family::A; break;
        case 'B': t.family = Family::B; break;
        case 'C': t.family = Family::C; break;
        case 'D': t.family = Family::D; break;
        case 'E': t.family = Family::E; break;
        case 'F': t.family = Family::F; break;
        case 'G': t.family = Family::G; break;
        default: throw InvalidType("unknown family in '" + std::string(text) + "'");
    }
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw InvalidType("bad rank in '" + std::string(text) + "'");
    }
    t.validate();
    return t;
}

void SimpleType::validate() const {
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1 && rank <= kMaxClassicalRank; break;
        case Family::B:
        case Family::C: ok = rank >= 2 && rank <= kMaxClassicalRank; break;
        case Family::D: ok = rank >= 3 && rank <= kMaxClassicalRank; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok) throw InvalidType("unsupported rank for " + name());
}

std::string SimpleType::name() const {
    static constexpr char letters[] = "ABCDEFG";
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

std::vector<SimpleType> supported_types(int max_rank) {
    std::vector<SimpleType> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
        for (int r = 1; r <= std::min(max_rank, kMaxClassicalRank); ++r) {
            SimpleType t{f, r};
            try {
                t.validate();
            } catch (const InvalidType&) {
                continue;
            }
            out.push_back(t);
        }
    }
    return out;
}

RootSystem RootSystem::build(SimpleType type) {
    type.validate();
    RootSystem rs;
    rs.type_ = type;
    const auto n = static_cast<std::size_t>(type.rank);
    rs.edges_ = dynkin_edges(type);
    const auto len = squared_lengths(type);

    rs.form_ = Matrix(n, n);
    rs.symmetrizers_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rs.form_(i, i) = len[i];
        rs.symmetrizers_[i] = Rational(len[i], 2);
    }
    for (const auto& e : rs.edges_) {
        const Rational ip = -Rational(std::max(len[e.lo], len[e.hi]), 2);
        rs.form_(e.lo, e.hi) = ip;
        rs.form_(e.hi, e.lo) = ip;
    }
    rs.cartan_ = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rs.cartan_(i, j) = 2 * rs.form_(i, j) / rs.form_(j, j);

    rs.inv_coeffs_ = inverse(rs.cartan_.transpose());
    return rs;
}

bool RootSystem::adjacent(std::size_t a, std::size_t b) const {
    return a != b && cartan_(a, b) != 0;
}

std::vector<std::size_t> RootSystem::neighbours(std::size_t a) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < rank(); ++b) {
        if (adjacent(a, b)) out.push_back(b);
    }
    return out;
}

std::vector<std::size_t> RootSystem::path(std::size_t from, std::size_t to) const {
    const std::size_t n = rank();
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> queue{from};
    parent[from] = from;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto nb : neighbours(queue[head])) {
            if (parent[nb] == n) {
                parent[nb] = queue[head];
                queue.push_back(nb);
            }
        }
    }
    if (parent[to] == n) throw std::logic_error("Dynkin diagram is disconnected");
    std::vector<std::size_t> p{to};
    while (p.back() != from) p.push_back(parent[p.back()]);
    std::reverse(p.begin(), p.end());
    return p;
}

Vector RootSystem::coroot_pairings(std::span<const Rational> x) const {
    if (x.size() != rank()) throw DimensionMismatch("vector length differs from rank");
    Vector out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < rank(); ++j) s += cartan_(j, i) * x[j];
        out[i] = s;
    }
    return out;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
    WeylElement w;
    w.word = word;
    w.word.insert(w.word.end(), rhs.word.begin(), rhs.word.end());
    w.matrix = matrix * rhs.matrix;
    return w;
}

WeylElement weyl_identity(const RootSystem& rs) {
    return WeylElement{{}, Matrix::identity(rs.rank())};
}

WeylElement simple_reflection(const RootSystem& rs, std::size_t alpha) {
    const std::size_t n = rs.rank();
    if (alpha >= n) throw std::out_of_range("node out of range");
    // s(x) = x - <x, alpha^vee> alpha; row alpha picks up -C^T row alpha.
    Matrix m = Matrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) m(alpha, j) -= rs.cartan()(j, alpha);
    return WeylElement{{alpha}, std::move(m)};
}

Integer weyl_group_order(const SimpleType& t) {
    switch (t.family) {
        case Family::A: return factorial(t.rank + 1);
        case Family::B:
        case Family::C: return (Integer(1) << t.rank) * factorial(t.rank);
        case Family::D: return (Integer(1) << (t.rank - 1)) * factorial(t.rank);
        case Family::E: return t.rank == 6 ? Integer(51840) : t.rank == 7 ? Integer(2903040) : Integer(696729600);
        case Family::F: return Integer(1152);
        case Family::G: return Integer(12);
    }
    return Integer(0);
}

Vector fundamental_weight(const RootSystem& rs, std::size_t alpha) {
    if (alpha >= rs.rank()) throw std::out_of_range("node out of range");
    return rs.inv_coeffs().column(alpha);
}

Rational inner(const RootSystem& rs, std::span<const Rational> v, std::span<const Rational> w) {
    if (v.size() != rs.rank() || w.size() != rs.rank()) throw DimensionMismatch("vector length differs from rank");
    return dot(v, rs.form() * w);
}

bool chain_identity_check(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t g = 0; g < n; ++g) {
            if (a == g) continue;
            const auto p = rs.path(a, g);
            for (std::size_t k = 1; k + 1 < p.size(); ++k) {
                const std::size_t b = p[k];
                if (rs.c(a, g) != rs.c(a, b) / rs.c(b, b) * rs.c(b, g)) return false;
            }
        }
    }
    return true;
}

bool dominant_in_root_coords(const RootSystem& rs, std::span<const Rational> x, bool strict) {
    const Vector p = rs.coroot_pairings(x);
    return std::all_of(p.begin(), p.end(), [&](const Rational& q) { return strict ? q > 0 : q >= 0; });
}

}  // namespace coterie
