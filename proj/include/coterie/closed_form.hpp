#pragma once

#include "coterie/coterie.hpp"
#include "coterie/root_system.hpp"

#include <string>
#include <vector>

namespace coterie {

/// True for the families with a rank-parametrised inequality pattern (A-D).
bool has_closed_form(Family family);

/// Edge inequalities of the coterie written from the rank-n patterns,
/// without inverting any matrix. Same order as inequalities(rs, true).pairs.
/// Throws std::invalid_argument for E, F, G.
std::vector<PairInequality> closed_form_pairs(const SimpleType& type);

/// Human-readable patterns, e.g. "a_j > j/(j+1) a_{j+1}  (j < n)".
std::vector<std::string> closed_form_patterns(Family family);

}  // namespace coterie
