/**
 * @file starpoint.hpp
 * @brief Star-point tests (tangent-section multiplicity and the polar route),
 *        star points along a line, and the forced last collinear star point.
 */
#ifndef STARPT_STARPOINT_HPP
#define STARPT_STARPOINT_HPP

#include <optional>
#include <string>
#include <vector>

#include "starpt/geometry.hpp"

namespace starpt::starpoint {

using algebra::CycloNum;
using algebra::MultiPoly;
using algebra::UniPoly;
using geometry::Hyperplane;
using geometry::Hypersurface;
using geometry::ProjLine;
using geometry::ProjPoint;

struct StarVerdict {
    bool is_star = false;
    Hyperplane tangent;
    /// Tangent section in the tangent plane's chart variables.
    MultiPoly cone;
    unsigned multiplicity = 0;
    /// Computed only for star points; NotCone otherwise.
    geometry::GoodConeReport good_cone{geometry::ConeVerdict::NotCone, "not-cone"};
};

/// Requires P on X and X smooth at P.
StarVerdict is_star_point(const Hypersurface& x, const ProjPoint& p);

/// Z(sum p_i dF/dX_i).
Hypersurface polar_hypersurface(const Hypersurface& x, const ProjPoint& p);

bool hyperplane_contained(const MultiPoly& g, const Hyperplane& plane);

bool star_via_polar(const Hypersurface& x, const ProjPoint& p);

/// Roots of a univariate polynomial found inside its coefficient field.
struct RootSplit {
    std::vector<std::pair<CycloNum, unsigned>> roots;  // value, multiplicity
    std::vector<UniPoly<CycloNum>> unresolved;         // squarefree, no roots found
};
/// `hints` are tried as roots before the built-in candidate list.
RootSplit find_roots(const UniPoly<CycloNum>& p, const std::vector<CycloNum>& hints = {});

struct LinePoint {
    ProjPoint point;
    unsigned multiplicity = 1;  // as a root of the restricted form; 0 for supplied candidates
    std::optional<StarVerdict> verdict;  // absent when X is singular there
    std::string note;
};

struct LineReport {
    bool line_in_x = false;
    std::vector<LinePoint> points;
    std::vector<unsigned> unresolved_degrees;
    unsigned star_count() const;
};

/// When the line lies in X every supplied candidate is tested; otherwise the
/// restricted binary form is factored over the field of X.
LineReport star_points_on_line(const Hypersurface& x, const ProjLine& line,
                               const std::vector<ProjPoint>& candidates = {});

struct ForcedStar {
    ProjPoint point;
    StarVerdict verdict;
};
/// Given d-1 distinct star points of X on L (L not in X), returns the last
/// intersection point and its verdict.
ForcedStar forced_dth_star(const Hypersurface& x, const ProjLine& line, const std::vector<ProjPoint>& known);

}  // namespace starpt::starpoint

#endif
