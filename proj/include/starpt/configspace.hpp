/**
 * @file configspace.hpp
 * @brief Configurations of (plane, vertex, cone) triples and the linear
 *        system of degree-d forms cutting every cone out of its plane.
 */
#ifndef STARPT_CONFIGSPACE_HPP
#define STARPT_CONFIGSPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starpt/geometry.hpp"

namespace starpt::configspace {

using algebra::CycloNum;
using algebra::FieldPtr;
using algebra::Monomial;
using algebra::MultiPoly;
using algebra::Vector;
using geometry::Chart;
using geometry::Hyperplane;
using geometry::ProjPoint;

/// C(n, k), zero when k < 0, n < 0 or k > n.
long long binom(long long n, long long k);

struct StarTriple {
    Hyperplane plane;
    ProjPoint vertex;
    /// Cone equation in the plane's chart variables, leading coefficient 1.
    MultiPoly cone;
    unsigned degree;
    geometry::GoodConeReport good;

    Chart chart() const { return Chart(plane); }
    /// The cone written in ambient variables (pivot variable unused).
    MultiPoly ambient_cone() const { return chart().lift(cone); }
};

/// `cone` is an ambient-variable form; it is restricted to the plane first.
StarTriple validate_triple(const Hyperplane& plane, const ProjPoint& vertex, const MultiPoly& cone, unsigned d);

/// The tangent triple of a star point: (T_P X, P, T_P X cap X).
StarTriple triple_from_star(const geometry::Hypersurface& x, const ProjPoint& p);

struct Configuration {
    unsigned ambient = 0;  // N
    unsigned degree = 0;   // d
    FieldPtr field = nullptr;
    std::vector<StarTriple> triples;
    /// incidence[i][j]: vertex i lies on plane j.
    std::vector<std::vector<bool>> incidence;
    bool general_position = true;

    static Configuration make(unsigned ambient, unsigned degree, FieldPtr field, std::vector<StarTriple> triples);
    std::size_t size() const noexcept { return triples.size(); }
};

struct LinearSystem {
    unsigned ambient = 0, degree = 0;
    std::vector<Monomial> monomials;  // degree-d monomials in N+1 variables
    std::vector<Vector> basis;        // coefficient vectors against `monomials`
    std::vector<MultiPoly> forms;
    long projective_dim() const noexcept { return static_cast<long>(basis.size()) - 1; }
};

LinearSystem vd_basis(const Configuration& config);

/// Membership of a form in the span of the system, by rank.
bool in_span(const LinearSystem& sys, const MultiPoly& f);

inline constexpr std::uint64_t kWitnessSeed = 7;

struct SuitedReport {
    bool suited = false;
    /// Which per-triple functionals are not identically zero on the system.
    std::vector<bool> functional_nonzero;
    std::optional<MultiPoly> witness;
    Vector witness_coefficients;
    std::uint64_t seed = kWitnessSeed;
    /// Witness smooth (with the prescribed tangent plane) at every vertex and
    /// at the extra probe points.
    bool probe_smooth = false;
    std::string label;  // "suited + probe-smooth", "suited", "not suited"
};

/// Strong form: a witness meets every plane exactly in its cone. Extra
/// points are probed for smoothness of the witness in addition to the vertices.
SuitedReport is_suited(const Configuration& config, const LinearSystem& sys, std::uint64_t seed = kWitnessSeed,
                       const std::vector<ProjPoint>& extra_probes = {});
SuitedReport is_suited(const Configuration& config, std::uint64_t seed = kWitnessSeed);

struct DimReport {
    long projective_dim;
    long long expected;
    bool match;
};
DimReport dim_report(const Configuration& config);
DimReport dim_report(const Configuration& config, const LinearSystem& sys);

struct RestrictionReport {
    long projective_dim;
    long long expected;
    bool match;
    /// The product of the restricted plane equations times every form of
    /// degree d - e lies in the image.
    bool contains_products;
};
RestrictionReport restriction_dim(const Configuration& config, const LinearSystem& sys, const Hyperplane& plane);

struct ExtendReport {
    Chart chart;
    std::vector<MultiPoly> basis;  // chart-variable cones with vertex P
    std::vector<geometry::GoodConeReport> verdicts;
};
ExtendReport extend_candidates(const Configuration& config, const LinearSystem& sys, const Hyperplane& plane,
                               const ProjPoint& p);

long long expected_codim(long long N, long long d, long long e);

/// e * (2N + C(N+d-2, N-2) - 2): dimension of the space of e triples.
long long triple_space_dim(long long N, long long d, long long e);

}  // namespace starpt::configspace

#endif
