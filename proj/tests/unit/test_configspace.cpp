#include <doctest.h>

#include "starpt/configspace.hpp"
#include "starpt/starpoint.hpp"
#include "support.hpp"

using namespace starpt;
using namespace starpt::configspace;
using algebra::CycloField;
using geometry::Hypersurface;
using support::choose;
using support::error_of;

namespace {

MultiPoly X(FieldPtr f, unsigned n, unsigned i) { return MultiPoly::variable(f, n, i); }

Hypersurface fermat(FieldPtr f, unsigned n, unsigned d) {
    MultiPoly p(f, n);
    for (unsigned i = 0; i < n; ++i) p += X(f, n, i).pow(d);
    return Hypersurface(p);
}

// E_{i,j}(xi) with xi = zeta_2d^(2k+1)
ProjPoint fermat_point(FieldPtr f, unsigned n, unsigned d, unsigned i, unsigned j, unsigned k) {
    Vector v(n, f->zero());
    v[i] = f->one();
    v[j] = f->root_of_unity(static_cast<long>((2 * k + 1) * (f->conductor() / (2 * d))));
    return ProjPoint(v);
}

Configuration fermat_config(unsigned d, unsigned N, const std::vector<std::array<unsigned, 3>>& picks) {
    FieldPtr f = CycloField::get(2 * d);
    const Hypersurface x = fermat(f, N + 1, d);
    std::vector<StarTriple> ts;
    for (auto [i, j, k] : picks) ts.push_back(triple_from_star(x, fermat_point(f, N + 1, d, i, j, k)));
    return Configuration::make(N, d, f, std::move(ts));
}

Hyperplane random_plane(FieldPtr f, unsigned n, std::mt19937_64& rng) {
    Vector a;
    for (unsigned i = 0; i < n; ++i) a.push_back(support::random_nonzero(f, rng));
    return Hyperplane(a);
}

}  // namespace

TEST_CASE("binomial coefficients") {
    for (long long n = -2; n <= 20; ++n)
        for (long long k = -2; k <= 22; ++k) CHECK(binom(n, k) == choose(n, k));
}

TEST_CASE("expected codimension against the defining sum") {
    for (long long N = 2; N <= 6; ++N)
        for (long long d = 3; d <= 7; ++d)
            for (long long e = 1; e <= std::min<long long>(d + 1, 4); ++e) {
                long long f = 0;
                for (long long i = 2; i <= e; ++i) f += choose(N + d - 1, N - 1) - choose(N + d - i, N - 1) - 1;
                CHECK(expected_codim(N, d, e) == f);
                CHECK(triple_space_dim(N, d, e) == e * (2 * N + choose(N + d - 2, N - 2) - 2));
            }
    CHECK(expected_codim(3, 3, 3) == 9);
}

TEST_CASE("Fermat tangent triples are valid") {
    for (unsigned d = 3; d <= 4; ++d) {
        FieldPtr f = CycloField::get(2 * d);
        const Hypersurface x = fermat(f, 4, d);
        const StarTriple t = triple_from_star(x, fermat_point(f, 4, d, 0, 1, 0));
        CHECK(t.degree == d);
        CHECK(t.good.verdict == geometry::ConeVerdict::Good);
        CHECK(t.ambient_cone() == X(f, 4, 2).pow(d) + X(f, 4, 3).pow(d));
        const StarTriple again = validate_triple(t.plane, t.vertex, t.ambient_cone(), d);
        CHECK(again.cone == t.cone);
    }
}

TEST_CASE("triple validation failures") {
    FieldPtr f = CycloField::rationals();
    const unsigned n = 4;
    const Hyperplane plane = Hyperplane::from_form(X(f, n, 3));
    const ProjPoint e0 = ProjPoint::unit(f, n, 0);
    const MultiPoly good = X(f, n, 1).pow(3) + X(f, n, 2).pow(3);
    CHECK(validate_triple(plane, e0, good, 3).good.verdict == geometry::ConeVerdict::Good);
    CHECK(error_of([&] { validate_triple(plane, ProjPoint::unit(f, n, 3), good, 3); }) == Errc::VertexNotOnPlane);
    CHECK(error_of([&] { validate_triple(plane, e0, good + X(f, n, 0) * X(f, n, 1) * X(f, n, 1), 3); }) ==
          Errc::NotACone);
    CHECK(error_of([&] { validate_triple(plane, e0, X(f, n, 1).pow(2) * X(f, n, 2), 3); }) == Errc::BadCone);
    CHECK(error_of([&] { validate_triple(plane, e0, good, 4); }) == Errc::WrongDegree);
    CHECK(error_of([&] { validate_triple(plane, e0, X(f, n, 3).pow(3), 3); }) == Errc::NotACone);
}

TEST_CASE("incidence and general position") {
    // the tangent plane at E_{i,j} is X_i - xi^-1 X_j, so E_{k,l} lies on it
    // exactly when {i,j} and {k,l} are disjoint
    const Configuration c = fermat_config(3, 3, {{0, 1, 0}, {0, 2, 0}});
    CHECK(c.size() == 2);
    CHECK(c.incidence[0][0]);
    CHECK_FALSE(c.incidence[0][1]);
    CHECK_FALSE(c.incidence[1][0]);
    CHECK(c.general_position);
    const Configuration inc = fermat_config(3, 3, {{0, 1, 0}, {2, 3, 0}});
    CHECK(inc.incidence[0][1]);
    CHECK(inc.incidence[1][0]);
    CHECK_FALSE(inc.general_position);
}

TEST_CASE("system dimension in general position") {
    // pairwise overlapping index pairs keep every vertex off the other planes
    const std::vector<std::vector<std::array<unsigned, 3>>> picks{
        {{0, 1, 0}}, {{0, 1, 0}, {0, 2, 1}}, {{0, 1, 0}, {0, 2, 1}, {1, 2, 2}}};
    int ran = 0;
    for (auto [d, N] : {std::pair{3u, 3u}, {4u, 3u}, {3u, 4u}}) {
        for (const auto& pk : picks) {
            const Configuration c = fermat_config(d, N, pk);
            REQUIRE(c.general_position);
            ++ran;
            const long long e = static_cast<long long>(pk.size());
            const LinearSystem sys = vd_basis(c);
            CHECK(sys.projective_dim() == choose(d - e + N, N));
            const DimReport dr = dim_report(c, sys);
            CHECK(dr.match);
            CHECK(dr.expected == choose(d - e + N, N));
            // the Fermat equation itself lies in the system
            MultiPoly fe(c.field, N + 1);
            for (unsigned i = 0; i <= N; ++i) fe += X(c.field, N + 1, i).pow(d);
            CHECK(in_span(sys, fe));
            CHECK_FALSE(in_span(sys, fe + X(c.field, N + 1, 0).pow(d - 1) * X(c.field, N + 1, N)));

            std::mt19937_64 rng(7 + e);
            for (int k = 0; k < 3; ++k) {
                const RestrictionReport rr = restriction_dim(c, sys, random_plane(c.field, N + 1, rng));
                CHECK(rr.match);
                CHECK(rr.projective_dim == choose(d - e + N - 1, N - 1));
                CHECK(rr.contains_products);
            }
        }
    }
    CHECK(ran == 9);
}

TEST_CASE("every basis form cuts each cone out of its plane") {
    const Configuration c = fermat_config(3, 3, {{0, 1, 0}, {0, 2, 1}});
    const LinearSystem sys = vd_basis(c);
    for (const auto& g : sys.forms)
        for (const auto& t : c.triples) {
            const MultiPoly r = t.chart().restrict(g);
            // r is a multiple of the cone (possibly zero)
            if (r.is_zero()) continue;
            const MultiPoly q = algebra::exact_divide(r, t.cone);
            CHECK(q.degree() == 0);
        }
}

TEST_CASE("suitedness of Fermat configurations") {
    const Configuration c = fermat_config(3, 3, {{0, 1, 0}, {2, 3, 1}, {0, 2, 2}});
    const SuitedReport rep = is_suited(c);
    CHECK(rep.suited);
    REQUIRE(rep.witness.has_value());
    for (const auto& t : c.triples) {
        const MultiPoly r = t.chart().restrict(*rep.witness);
        CHECK_FALSE(r.is_zero());
        CHECK(algebra::exact_divide(r, t.cone).degree() == 0);
    }
    // same seed, same witness
    CHECK(is_suited(c).witness == rep.witness);
}

TEST_CASE("a plane through a vertex is rejected for restriction") {
    const Configuration c = fermat_config(3, 3, {{0, 1, 0}});
    FieldPtr f = c.field;
    CHECK(error_of([&] { restriction_dim(c, vd_basis(c), Hyperplane::from_form(X(f, 4, 2))); }) ==
          Errc::PointOnPlane);
}

TEST_CASE("extension candidates are cones with the new vertex") {
    const Configuration c = fermat_config(3, 3, {{0, 1, 0}, {0, 2, 1}});
    FieldPtr f = c.field;
    const Hyperplane plane = Hyperplane::from_form(X(f, 4, 1) + X(f, 4, 2) - X(f, 4, 3) * f->from_int(2));
    Vector pv{f->from_int(1), f->from_int(1), f->from_int(1), f->from_int(1)};
    const ProjPoint p(pv);
    REQUIRE(plane.contains(p));
    const ExtendReport rep = extend_candidates(c, vd_basis(c), plane, p);
    CHECK(rep.basis.size() == rep.verdicts.size());
    const Vector v = rep.chart.to_chart(p);
    for (const auto& g : rep.basis) CHECK(geometry::is_cone_by_derivative(g, v));
}
