/**
 * @file classify.hpp
 * @brief Families with prescribed star points and the component labels of
 *        two- and three-point configurations.
 *
 * Dimension values are evaluated from closed formulas; irreducibility of the
 * components is not checked.
 */
#ifndef STARPT_CLASSIFY_HPP
#define STARPT_CLASSIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "starpt/configspace.hpp"
#include "starpt/starpoint.hpp"

namespace starpt::classify {

using algebra::CycloNum;
using algebra::FieldPtr;
using algebra::Matrix;
using algebra::MultiPoly;
using configspace::Configuration;
using geometry::Hyperplane;
using geometry::Hypersurface;
using geometry::ProjLine;
using geometry::ProjPoint;

unsigned euler_phi(unsigned n);

enum class Kind { Vt, V1, TwoGeneral, TwoLineInX, Intermediate, ExtremalIndep, ExtremalDep, NotSuited, Unclassified };
std::string_view kind_name(Kind k) noexcept;

struct ComponentLabel {
    Kind kind = Kind::Unclassified;
    std::optional<CycloNum> t;  // Vt only (also kept for a rejected Case I t)
    unsigned theta = 0;         // multiplicative order of t
    long long dimension = 0;
    long long expected = 0;
    bool is_expected = false;
    std::string detail;  // case name, reason for NotSuited, suitedness label
};

// ---- Fermat ----------------------------------------------------------------

/// The point with coordinate i equal to 1, coordinate j equal to xi, others 0.
ProjPoint fermat_point(FieldPtr field, unsigned N, unsigned i, unsigned j, const CycloNum& xi);

struct FermatFamily {
    Hypersurface x;
    std::vector<ProjPoint> star_points;
};
/// Z(X0^d + ... + XN^d) over Q(zeta_2d) with all d*C(N+1,2) star points.
FermatFamily build_fermat(unsigned d, unsigned N);

// ---- collinear star points -------------------------------------------------

struct CollinearResult {
    Hypersurface x;
    ProjPoint cone_vertex;
    MultiPoly cone_over_c1;  // the auxiliary cone Y
    Configuration config;
    configspace::SuitedReport suited;
};
/// d points on a line with one plane each; `c1` is an ambient-variable form
/// cutting a good cone with vertex points[0] on planes[0].
CollinearResult build_collinear(unsigned d, unsigned N, const ProjLine& line, const std::vector<ProjPoint>& points,
                                const std::vector<Hyperplane>& planes, const MultiPoly& c1,
                                std::uint64_t seed = configspace::kWitnessSeed);

/// Default rational input for d collinear points in P^N: P_i = (1:i:0..) on
/// the line e0e1, planes i*X0 - X1 + i*X2 + X3 (no X3 term when N = 2) and
/// C1 = X2^d + ... + XN^d.
struct CollinearInput {
    ProjLine line;
    std::vector<ProjPoint> points;
    std::vector<Hyperplane> planes;
    MultiPoly c1;
};
CollinearInput default_collinear_input(unsigned d, unsigned N);

// ---- two star points -------------------------------------------------------

enum class Shape { General, LineInX };

struct NormalForm2 {
    Shape shape;
    /// Rows are the new coordinates as linear forms in the old ones.
    Matrix change;
    MultiPoly witness;      // canonical suited witness, in new coordinates
    std::vector<std::pair<std::string, MultiPoly>> parts;  // factor name -> cofactor
    long projective_dim;
    configspace::SuitedReport suited;
};
NormalForm2 normal_form_two(const Configuration& config);

/// Sum of cofactor * factor over the parts, with factors written in the new
/// coordinates ("X0*X1", "X2*X3", "X2", "X3", "1").
MultiPoly reassemble(const NormalForm2& nf);

// ---- three star points -----------------------------------------------------

struct TridiagResult {
    CycloNum det;
    std::optional<std::vector<CycloNum>> solution;
};
/// The (j-1)x(j-1) matrix with t+1 on the diagonal, -1 above and -t below.
Matrix tridiag_matrix(unsigned j, const CycloNum& t);
TridiagResult tridiag_solve(unsigned j, const CycloNum& t);

/// The Case I parameter of three general-position triples in input order.
CycloNum case1_parameter(const Configuration& config);

ComponentLabel classify_three(const Configuration& config);

/// A_j for each admissible j (polynomials in X3..XN of degree d - j, written
/// in all N+1 variables), plus the free cofactor of degree d - 3.
struct Case1Params {
    std::map<unsigned, MultiPoly> a;
    MultiPoly g012;
};
/// Random seeded parameters over the field of t for every admissible j.
Case1Params random_case1_params(unsigned d, unsigned N, const CycloNum& t, std::uint64_t seed);

struct Case1Result {
    Hypersurface x;
    ProjPoint p1, p2, p3;
};
/// Rejects t unless t != 1 and t^d = 1 or t^(d-1) = 1.
Case1Result build_case1(unsigned d, unsigned N, const CycloNum& t, const Case1Params& params);
/// The same closed form without the gate; A_j with t^j != 1 are ignored.
MultiPoly assemble_case1(unsigned d, unsigned N, const CycloNum& t, const Case1Params& params);

/// Seeded parameters, advancing the seed until all three points are smooth
/// with good tangent cones (small coefficients occasionally cancel).
struct Case1Sample {
    Case1Params params;
    Case1Result result;
    Configuration config;
    std::uint64_t seed;
};
Case1Sample sample_case1(unsigned d, unsigned N, const CycloNum& t, std::uint64_t seed, unsigned attempts = 32);

struct IntermediateParams {
    std::vector<MultiPoly> b;  // B_0 .. B_{d-1}
    MultiPoly g013;
};
IntermediateParams random_intermediate_params(FieldPtr field, unsigned d, unsigned N, std::uint64_t seed);

struct IntermediateResult {
    Hypersurface x;
    std::vector<ProjPoint> points;
    std::vector<Hyperplane> planes;
    long long config_dimension;  // dimension of the configuration locus
    long long expected_pd;       // expected projective dimension of P_d(L)
};
IntermediateResult build_intermediate(unsigned d, unsigned N, const IntermediateParams& params);
long long intermediate_dimension(long long N, long long d);

enum class ExtremalCase { Indep, Dep };

struct ExtremalDims {
    long long locus_indep, locus_dep;    // include the fibre P_d(L)
    long long config_indep, config_dep;  // configuration space only
};
ExtremalDims extremal_dimensions(long long N, long long d);

struct ExtremalResult {
    Hypersurface x;
    std::vector<ProjPoint> points;
    std::vector<Hyperplane> planes;
    ExtremalDims dims;
    bool relation_holds;
    /// Good-cone verdict of each tangent section. Dependent-case members come
    /// out with sections singular away from the vertex (see README).
    std::vector<geometry::ConeVerdict> tangent_cones;
    /// Whether X has a singular point on the plane through the three points.
    /// Decided when the plane lies in X and N = 5 (three partials in three
    /// unknowns, one resultant), or when any three partials share no zero.
    std::optional<bool> plane_singular;
};
ExtremalResult build_extremal(unsigned d, unsigned N, ExtremalCase which, std::uint64_t seed);

/// Points e0, e1, e2 with the planes of the given case.
std::vector<Hyperplane> extremal_planes(unsigned N, ExtremalCase which);

/// Basis of all degree-d forms whose section by each plane is a cone with
/// vertex at the matching point (linear conditions D_P f = 0 on the plane).
std::vector<MultiPoly> cone_condition_space(unsigned d, const std::vector<ProjPoint>& points,
                                            const std::vector<Hyperplane>& planes);

std::vector<ComponentLabel> component_table(unsigned d, unsigned N);

long long vt_dimension(long long N, long long d, unsigned theta);
long long v1_dimension(long long N, long long d);
long long three_point_expected(long long N, long long d);

/// Random form of degree `deg` using only the listed variables (small
/// integer coefficients, seeded).
MultiPoly random_form(FieldPtr field, unsigned nvars, const std::vector<unsigned>& vars, unsigned deg,
                      std::mt19937_64& rng);

}  // namespace starpt::classify

#endif
