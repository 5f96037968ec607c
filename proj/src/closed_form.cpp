#include "coterie/closed_form.hpp"

#include <stdexcept>

namespace coterie {

bool has_closed_form(Family family) {
    return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
}

// 1-based node numbers in the formulas, 0-based in the result.
std::vector<PairInequality> closed_form_pairs(const SimpleType& type) {
    type.validate();
    if (!has_closed_form(type.family)) throw std::invalid_argument("no closed form for " + type.name());
    const int n = type.rank;
    std::vector<PairInequality> out;
    auto emit = [&out](int beta, int alpha, Rational ratio) {
        out.push_back({static_cast<std::size_t>(beta - 1), static_cast<std::size_t>(alpha - 1), std::move(ratio)});
    };
    // Edge (j, j+1): first a_{j+1} > . a_j, then a_j > . a_{j+1}.
    auto chain_edge = [&](int j, Rational up, Rational down) {
        emit(j + 1, j, std::move(up));
        emit(j, j + 1, std::move(down));
    };
    switch (type.family) {
        case Family::A:
            for (int j = 1; j < n; ++j) chain_edge(j, Rational(n + 1 - (j + 1), n + 2 - (j + 1)), Rational(j, j + 1));
            break;
        case Family::B:
            for (int j = 1; j < n; ++j) chain_edge(j, Rational(1), Rational(j, j + 1));
            break;
        case Family::C:
            for (int j = 1; j < n - 1; ++j) chain_edge(j, Rational(1), Rational(j, j + 1));
            chain_edge(n - 1, Rational(1, 2), Rational(2 * (n - 1), n));
            break;
        case Family::D:
            for (int j = 1; j < n - 2; ++j) chain_edge(j, Rational(1), Rational(j, j + 1));
            // edges (n-2, n-1) and (n-2, n)
            emit(n - 1, n - 2, Rational(1, 2));
            emit(n - 2, n - 1, Rational(2 * (n - 2), n));
            emit(n, n - 2, Rational(1, 2));
            emit(n - 2, n, Rational(2 * (n - 2), n));
            break;
        default:
            break;
    }
    return out;
}

std::vector<std::string> closed_form_patterns(Family family) {
    switch (family) {
        case Family::A:
            return {"a_j > 0", "a_j > j/(j+1) a_{j+1}  (j < n)", "a_j > (n+1-j)/(n+2-j) a_{j-1}  (j > 1)"};
        case Family::B:
            return {"a_j > 0", "a_j > j/(j+1) a_{j+1}  (j < n)", "a_j > a_{j-1}  (j > 1)"};
        case Family::C:
            return {"a_j > 0", "a_j > a_{j-1}  (1 < j < n)", "a_j > j/(j+1) a_{j+1}  (j < n-1)", "a_n > 1/2 a_{n-1}",
                    "a_{n-1} > 2(n-1)/n a_n"};
        case Family::D:
            return {"a_j > 0",
                    "a_j > j/(j+1) a_{j+1}  (j < n-2)",
                    "a_j > a_{j-1}  (1 < j <= n-2)",
                    "a_{n-2} > 2(n-2)/n a_{n-1}",
                    "a_{n-2} > 2(n-2)/n a_n",
                    "a_n > 1/2 a_{n-2}",
                    "a_{n-1} > 1/2 a_{n-2}"};
        default:
            throw std::invalid_argument("no closed form for this family");
    }
}

}  // namespace coterie
