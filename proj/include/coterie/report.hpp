#pragma once

#include "coterie/arrangement.hpp"
#include "coterie/coterie.hpp"
#include "coterie/faces.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace coterie {

enum class Format { Plain, Json, Latex };

Format parse_format(std::string_view text);

inline constexpr int kJsonSchemaVersion = 1;

/// Both inequalities of one Dynkin edge as r a_outer > s a_middle > t a_outer.
struct ChainInequality {
    std::size_t outer;
    std::size_t middle;
    Integer r, s, t;
};

/// The middle node minimises the largest coefficient; ties go to the smaller
/// s, then to the higher node.
ChainInequality chain_for_edge(const RootSystem& rs, const Edge& e);

std::string term(const Integer& coefficient, std::size_t node, Format fmt);
std::string chain_text(const ChainInequality& c, Format fmt);
/// "q a_beta > p a_alpha" with integer coefficients.
std::string pair_text(const PairInequality& p, Format fmt);
/// Cleared equality with the lower node on the left, e.g. "3a1 = 4a2".
std::string equality_text(const EdgeEquality& eq, Format fmt);

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(std::span<const Rational> v);

struct Report {
    nlohmann::json json;
    std::string plain;
    std::string latex;
    /// 0 on success, 3 when a runtime check failed.
    int exit_code = 0;

    std::string render(Format fmt) const;
};

Report inequalities_report(const RootSystem& rs, bool reduced, bool symbolic);
Report rays_report(const RootSystem& rs);
/// Runs every method in `methods`; disagreement sets exit_code 3.
Report member_report(const RootSystem& rs, const Vector& x, Mode mode, const std::vector<Method>& methods);
Report faces_report(const RootSystem& rs, const CubeCheckOptions& options);
Report polytope_report(const RootSystem& rs, const Vector& y, std::size_t orbit_cap);
Report arrangement_report(const Arrangement& arr, std::size_t orbit_cap);

}  // namespace coterie
