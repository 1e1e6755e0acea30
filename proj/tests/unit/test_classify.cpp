#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "starpt/classify.hpp"
#include "support.hpp"

using namespace starpt;
using namespace starpt::classify;
using algebra::CycloField;
using algebra::Vector;
using support::choose;
using support::error_of;

namespace {

Configuration config_of(const Hypersurface& x, const std::vector<ProjPoint>& pts) {
    std::vector<configspace::StarTriple> ts;
    for (const auto& p : pts) ts.push_back(configspace::triple_from_star(x, p));
    return Configuration::make(x.ambient(), x.degree(), x.field(), std::move(ts));
}

unsigned totient(unsigned n) {
    unsigned c = 0;
    for (unsigned k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    return c;
}

// determinant as a signed sum over permutations
CycloNum leibniz(const Matrix& a) {
    const std::size_t n = a.rows();
    FieldPtr f = a(0, 0).field();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CycloNum det = f->zero();
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        CycloNum term = inversions % 2 ? f->from_int(-1) : f->one();
        for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace

TEST_CASE("component table for cubic surfaces") {
    const auto table = component_table(3, 3);
    std::vector<long long> dims;
    for (const auto& c : table) dims.push_back(c.dimension);
    CHECK(dims == std::vector<long long>{15, 15, 15, 16});
    CHECK(table.back().kind == Kind::V1);
    for (const auto& c : table) CHECK(c.expected == 15);
}

TEST_CASE("component counts follow the totient") {
    for (unsigned d = 3; d <= 9; ++d)
        for (unsigned N = 3; N <= 5; ++N) {
            const auto table = component_table(d, N);
            // one Vt per primitive root of order dividing d or d-1, plus V1
            unsigned want = 1;
            for (unsigned m : {d, d - 1})
                for (unsigned th = 2; th <= m; ++th)
                    if (m % th == 0) want += totient(th);
            CHECK(table.size() == want);
            CHECK(table.size() == 2 * d - 2);
            for (const auto& c : table) {
                if (c.kind != Kind::Vt) continue;
                REQUIRE(c.t.has_value());
                CHECK(c.t->pow(c.theta).is_one());
                for (unsigned k = 1; k < c.theta; ++k) CHECK_FALSE(c.t->pow(k).is_one());
                long long s = 6LL * N - 5;
                for (long long j = 0; j <= d; j += c.theta) s += choose(N + d - 3 - j, N - 3);
                CHECK(c.dimension == s);
            }
        }
    CHECK(error_of([] { component_table(2, 3); }) == Errc::WrongDegree);
    CHECK(error_of([] { component_table(3, 2); }) == Errc::DimensionMismatch);
}

TEST_CASE("tridiagonal determinant and solvability") {
    FieldPtr f = CycloField::get(12);
    for (unsigned j = 2; j <= 6; ++j)
        for (unsigned k = 0; k < 12; ++k) {
            const CycloNum t = f->root_of_unity(k);
            const Matrix a = tridiag_matrix(j, t);
            CHECK(a.rows() == j - 1);
            const TridiagResult r = tridiag_solve(j, t);
            CHECK(r.det == leibniz(a));
            CycloNum s = f->zero();
            for (unsigned i = 0; i < j; ++i) s += t.pow(i);
            CHECK(r.det == s);
            const bool solvable = !t.is_one() && t.pow(j).is_one();
            CHECK(r.solution.has_value() == solvable);
            if (r.solution) {
                for (std::size_t row = 0; row < a.rows(); ++row) {
                    CycloNum acc = f->zero();
                    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(row, c) * (*r.solution)[c];
                    CHECK(acc.is_zero());
                }
            }
        }
    CHECK(error_of([&] { tridiag_matrix(1, f->one()); }) == Errc::DimensionMismatch);
}

TEST_CASE("Case I accepts exactly the admissible roots of unity") {
    for (unsigned d : {3u, 4u}) {
        FieldPtr f = CycloField::get(12);
        for (unsigned k = 0; k < 12; ++k) {
            const CycloNum t = f->root_of_unity(k);
            const bool want = !t.is_one() && (t.pow(d).is_one() || t.pow(d - 1).is_one());
            bool accepted = true;
            try {
                build_case1(d, 3, t, random_case1_params(d, 3, t, 5));
            } catch (const Error& e) {
                CHECK(e.code() == Errc::NotRootOfUnity);
                accepted = false;
            }
            CHECK(accepted == want);
        }
    }
    FieldPtr q = CycloField::rationals();
    CHECK(error_of([&] { build_case1(3, 3, q->from_int(2), random_case1_params(3, 3, q->from_int(2), 1)); }) ==
          Errc::NotRootOfUnity);
}

TEST_CASE("Case I members carry three star points and classify as Vt") {
    for (auto [d, n] : {std::pair{3u, 3u}, {4u, 4u}, {4u, 3u}}) {
        const CycloNum t = CycloField::get(n)->root_of_unity(1);
        const Case1Sample s = sample_case1(d, 3, t, 11);
        for (const auto& p : {s.result.p1, s.result.p2, s.result.p3}) {
            const auto v = starpoint::is_star_point(s.result.x, p);
            CHECK(v.is_star);
            CHECK(starpoint::star_via_polar(s.result.x, p));
        }
        const ComponentLabel label = classify_three(s.config);
        CHECK(label.kind == Kind::Vt);
        CHECK(label.theta == n);
        CHECK(label.dimension == vt_dimension(3, d, n));
        CHECK(case1_parameter(s.config).pow(n).is_one());
    }
}

TEST_CASE("intermediate members") {
    FieldPtr q = CycloField::rationals();
    for (unsigned d = 3; d <= 5; ++d) {
        const IntermediateResult r = build_intermediate(d, 3, random_intermediate_params(q, d, 3, 3));
        CHECK(r.config_dimension == 12 + d);
        CHECK(intermediate_dimension(3, d) == 12 + static_cast<long long>(d));
        for (std::size_t i = 0; i < 3; ++i) {
            const auto v = starpoint::is_star_point(r.x, r.points[i]);
            CHECK(v.is_star);
            CHECK(v.tangent == r.planes[i]);
        }
    }
    const IntermediateResult r = build_intermediate(3, 3, random_intermediate_params(q, 3, 3, 3));
    const ComponentLabel label = classify_three(config_of(r.x, r.points));
    CHECK(label.kind == Kind::Intermediate);
    CHECK(label.dimension == 15);
}

TEST_CASE("default collinear input") {
    for (unsigned d : {3u, 4u}) {
        const CollinearInput in = default_collinear_input(d, 3);
        CHECK(in.points.size() == d);
        CHECK(in.planes.size() == d);
        const CollinearResult r = build_collinear(d, 3, in.line, in.points, in.planes, in.c1);
        for (std::size_t i = 0; i < d; ++i) {
            CHECK(in.line.contains(in.points[i]));
            const auto v = starpoint::is_star_point(r.x, in.points[i]);
            CHECK(v.is_star);
            CHECK(v.tangent == in.planes[i]);
        }
        CHECK(r.suited.suited);
    }
    const CollinearInput in = default_collinear_input(3, 3);
    const CollinearResult r = build_collinear(3, 3, in.line, in.points, in.planes, in.c1);
    const ComponentLabel label = classify_three(r.config);
    CHECK(label.kind == Kind::V1);
    CHECK(label.dimension == 16);
}

TEST_CASE("extremal dimensions") {
    const ExtremalDims at = extremal_dimensions(5, 5);
    CHECK(at.locus_indep == 116);
    CHECK(at.locus_dep == 116);
    for (long long N = 5; N <= 8; ++N)
        for (long long d = 3; d <= 9; ++d) {
            const ExtremalDims e = extremal_dimensions(N, d);
            CHECK(e.locus_dep - e.locus_indep == 4 - N + choose(N + d - 6, N - 1));
            // fibres are the forms with the prescribed sections
            CHECK(e.locus_indep - e.config_indep == choose(N + d - 3, N));
            CHECK(e.locus_dep - e.config_dep == choose(N + d - 2, N) - choose(N + d - 3, N - 1));
        }
}

TEST_CASE("extremal builds") {
    const ExtremalResult indep = build_extremal(3, 5, ExtremalCase::Indep, 7);
    const ExtremalResult dep = build_extremal(3, 5, ExtremalCase::Dep, 7);
    CHECK(indep.relation_holds);
    CHECK(dep.relation_holds);
    for (const auto* r : {&indep, &dep})
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(geometry::tangent_hyperplane(r->x, r->points[i]) == r->planes[i]);
            // pairwise incident: each point on every plane
            for (const auto& pl : r->planes) CHECK(pl.contains(r->points[i]));
        }
    for (auto v : indep.tangent_cones) CHECK(v == geometry::ConeVerdict::Good);
    REQUIRE(indep.plane_singular.has_value());
    CHECK_FALSE(*indep.plane_singular);
    REQUIRE(dep.plane_singular.has_value());
    CHECK(*dep.plane_singular);

    const ComponentLabel label = classify_three(config_of(indep.x, indep.points));
    CHECK(label.kind == Kind::ExtremalIndep);
    CHECK(label.dimension == extremal_dimensions(5, 3).config_indep);
    CHECK(error_of([] { build_extremal(3, 4, ExtremalCase::Indep, 7); }) == Errc::AmbientTooSmall);
}

TEST_CASE("cone condition space") {
    const unsigned N = 5, d = 3;
    FieldPtr q = CycloField::rationals();
    std::vector<ProjPoint> pts{ProjPoint::unit(q, N + 1, 0), ProjPoint::unit(q, N + 1, 1),
                               ProjPoint::unit(q, N + 1, 2)};
    for (auto which : {ExtremalCase::Indep, ExtremalCase::Dep}) {
        const auto planes = extremal_planes(N, which);
        const auto basis = cone_condition_space(d, pts, planes);
        CHECK_FALSE(basis.empty());
        for (const auto& g : basis)
            for (std::size_t i = 0; i < 3; ++i) {
                const geometry::Chart chart(planes[i]);
                const MultiPoly r = chart.restrict(g);
                if (r.is_zero()) continue;
                CHECK(geometry::is_cone_by_derivative(r, chart.to_chart(pts[i])));
            }
    }
    // an equation from the builder lies in the space
    const ExtremalResult indep = build_extremal(d, N, ExtremalCase::Indep, 3);
    const auto basis = cone_condition_space(d, indep.points, indep.planes);
    const auto monos = algebra::monomials_of_degree(N + 1, d);
    std::vector<Vector> rows;
    for (const auto& g : basis) rows.push_back(algebra::coefficient_vector(g, monos));
    const auto before = algebra::rank(Matrix::from_rows(rows));
    rows.push_back(algebra::coefficient_vector(indep.x.equation(), monos));
    CHECK(algebra::rank(Matrix::from_rows(rows)) == before);
}

TEST_CASE("two-point normal forms") {
    const FermatFamily fam = build_fermat(3, 3);
    FieldPtr f = fam.x.field();
    const CycloNum xi = f->root_of_unity(1);
    const ProjPoint a = fermat_point(f, 3, 0, 1, xi);
    const ProjPoint b = fermat_point(f, 3, 0, 2, xi.pow(3));
    const ProjPoint c = fermat_point(f, 3, 2, 3, xi);

    const NormalForm2 gen = normal_form_two(config_of(fam.x, {a, b}));
    CHECK(gen.shape == Shape::General);
    CHECK(reassemble(gen) == gen.witness);
    CHECK(algebra::compose_linear(gen.witness, gen.change) == *gen.suited.witness);
    CHECK(gen.projective_dim == choose(3 - 2 + 3, 3));

    const NormalForm2 line = normal_form_two(config_of(fam.x, {a, c}));
    CHECK(line.shape == Shape::LineInX);
    CHECK(reassemble(line) == line.witness);
    CHECK(algebra::compose_linear(line.witness, line.change) == *line.suited.witness);

    CHECK(error_of([&] { normal_form_two(config_of(fam.x, {a})); }) == Errc::DimensionMismatch);
}

TEST_CASE("Fermat star points") {
    for (unsigned d = 3; d <= 4; ++d) {
        const FermatFamily fam = build_fermat(d, 3);
        CHECK(fam.star_points.size() == d * choose(4, 2));
        for (std::size_t i = 0; i < fam.star_points.size(); i += 5)
            CHECK(starpoint::is_star_point(fam.x, fam.star_points[i]).is_star);
    }
}
