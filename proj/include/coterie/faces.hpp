#pragma once

#include "coterie/coterie.hpp"
#include "coterie/exact.hpp"
#include "coterie/feasibility.hpp"
#include "coterie/root_system.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coterie {

/// Orientation of one Dynkin edge {lo, hi}: Right is the arrow lo -> hi.
enum class Arrow { Right, Left, Neutral };

char arrow_char(Arrow a);

/// One arrow per Dynkin edge, in the root system's canonical edge order.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {}

    /// String over {'>', '<', '-'}; throws ParseError on bad length or symbol.
    static Orientation parse(std::string_view text, std::size_t edge_count);

    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t size() const { return arrows_.size(); }
    std::size_t oriented_count() const;
    bool is_vertex() const { return oriented_count() == arrows_.size(); }
    std::string str() const;

    bool operator==(const Orientation&) const = default;
    auto operator<=>(const Orientation&) const = default;

private:
    std::vector<Arrow> arrows_;
};

/// All 3^(rank-1) orientations, lexicographic with Right < Left < Neutral.
std::vector<Orientation> all_orientations(const RootSystem& rs);
/// The 2^(rank-1) fully oriented diagrams in the same order.
std::vector<Orientation> vertex_orientations(const RootSystem& rs);

/// f >= g: f is obtained from g by replacing some arrows by neutral edges.
/// Throws std::invalid_argument on different edge counts.
bool poset_order(const Orientation& f, const Orientation& g);

/// For edge {i, j}, i < j, the closed coterie gives a_i >= q a_j and
/// a_j >= p a_i. An arrow i -> j turns the first into an equality, i <- j the
/// second.
struct EdgeEquality {
    std::size_t lhs;
    std::size_t rhs;
    Rational ratio;  // a_lhs = ratio * a_rhs
};

struct Face {
    Orientation orientation;
    std::vector<EdgeEquality> equalities;
    /// Edge-reduced closed system with the selected constraints as equalities.
    ConeSystem system;
    int dim = 0;
};

Face face_of(const RootSystem& rs, const Orientation& f);

struct ExtremalRay {
    Orientation orientation;
    std::vector<EdgeEquality> equalities;
    /// Last coordinate 1 when nonzero, else a primitive integer vector.
    Vector ray;
};

struct RayAnomaly {
    Orientation orientation;
    std::string reason;
};

struct ExtremalRays {
    std::vector<ExtremalRay> rays;
    std::vector<RayAnomaly> anomalies;
};

ExtremalRays extremal_rays(const RootSystem& rs);

struct CubeCheck {
    bool isomorphic = false;
    std::size_t face_count = 0;
    std::map<int, std::size_t> dim_histogram;
    std::vector<std::string> failures;
};

struct CubeCheckOptions {
    int max_rank = 9;
    /// Up to this rank, containment of faces is also verified by exact
    /// implication (Fourier-Motzkin) for every pair of orientations.
    int implication_rank = 4;
};

/// Order isomorphism (F, >=) ~ {0,*,1}^(rank-1) plus geometric consistency:
/// dimensions, ray incidences and relative-interior points of every face.
/// Throws ResourceLimitExceeded above max_rank.
CubeCheck cube_isomorphism_check(const RootSystem& rs, const CubeCheckOptions& options = {});

}  // namespace coterie
