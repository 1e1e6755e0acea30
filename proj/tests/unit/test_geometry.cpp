#include <doctest.h>

#include "starpt/geometry.hpp"
#include "support.hpp"

using namespace starpt;
using namespace starpt::geometry;
using algebra::CycloField;
using support::error_of;

namespace {

MultiPoly X(FieldPtr f, unsigned n, unsigned i) { return MultiPoly::variable(f, n, i); }

MultiPoly fermat(FieldPtr f, unsigned n, unsigned d) {
    MultiPoly p(f, n);
    for (unsigned i = 0; i < n; ++i) p += X(f, n, i).pow(d);
    return p;
}

ProjPoint pt(FieldPtr f, std::initializer_list<long> c) {
    Vector v;
    for (long x : c) v.push_back(f->from_int(x));
    return ProjPoint(v);
}

}  // namespace

TEST_CASE("points and hyperplanes are normalized") {
    FieldPtr f = CycloField::rationals();
    CHECK(pt(f, {0, 2, -4}).str() == "0:1:-2");
    CHECK(pt(f, {0, 2, -4}) == pt(f, {0, -1, 2}));
    CHECK(pt(f, {3, 0, 0, 1}).support() == 2);
    CHECK(Hyperplane({f->from_int(0), f->from_int(3), f->from_int(6)}).str() == "X1 + 2*X2");
    CHECK(Hyperplane({f->from_int(0), f->from_int(3), f->from_int(6)}).pivot() == 1);
    CHECK(error_of([&] { pt(f, {0, 0, 0}); }) == Errc::ZeroPoint);
    CHECK(error_of([&] { Hyperplane({f->zero(), f->zero()}); }) == Errc::ZeroPolynomial);
    CHECK(error_of([&] { Hyperplane::from_form(X(f, 3, 0) * X(f, 3, 1)); }) == Errc::WrongDegree);
}

TEST_CASE("lines: parameters round-trip and degenerate lines are rejected") {
    FieldPtr f = CycloField::get(3);
    const ProjLine l(pt(f, {1, 0, 2, 0}), pt(f, {0, 1, 1, 5}));
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const CycloNum s = support::random_element(f, rng), u = support::random_nonzero(f, rng);
        const ProjPoint p = l.point(s, u);
        CHECK(l.contains(p));
        auto [s2, u2] = l.parameter(p);
        CHECK(s2 * u == s * u2);
    }
    CHECK_FALSE(l.contains(pt(f, {0, 0, 1, 0})));
    CHECK(error_of([&] { l.parameter(pt(f, {0, 0, 1, 0})); }) == Errc::NotOnLine);
    CHECK(error_of([&] { ProjLine(pt(f, {1, 1}), pt(f, {2, 2})); }) == Errc::DegenerateLine);
}

TEST_CASE("hypersurface validation") {
    FieldPtr f = CycloField::rationals();
    CHECK(error_of([&] { Hypersurface(MultiPoly(f, 3)); }) == Errc::ZeroPolynomial);
    CHECK(error_of([&] { Hypersurface(X(f, 3, 0) * X(f, 3, 1) + X(f, 3, 2)); }) == Errc::NotHomogeneous);
}

TEST_CASE("Fermat tangent hyperplanes match the gradient d*x_i^(d-1)") {
    for (unsigned d = 3; d <= 5; ++d) {
        FieldPtr f = CycloField::get(2 * d);
        const Hypersurface x(fermat(f, 4, d));
        const CycloNum xi = f->gen();  // xi^d = -1
        const ProjPoint p({f->one(), xi, f->zero(), f->zero()});
        REQUIRE(x.contains(p));
        const Hyperplane t = tangent_hyperplane(x, p);
        CHECK(t == Hyperplane({f->one(), -xi.inv(), f->zero(), f->zero()}));
        // any point: tangent coefficients proportional to x_i^(d-1)
        Vector grad;
        for (unsigned i = 0; i < 4; ++i) grad.push_back(p[i].pow(d - 1));
        CHECK(t == Hyperplane(grad));
        CHECK(t.contains(p));
    }
}

TEST_CASE("tangent hyperplane failures") {
    FieldPtr f = CycloField::rationals();
    const unsigned n = 4;
    const Hypersurface cone(X(f, n, 1).pow(3) + X(f, n, 2).pow(3) + X(f, n, 3).pow(3));
    CHECK(error_of([&] { tangent_hyperplane(cone, pt(f, {1, 0, 0, 0})); }) == Errc::SingularPoint);
    CHECK(error_of([&] { tangent_hyperplane(cone, pt(f, {1, 1, 0, 0})); }) == Errc::NotOnHypersurface);
}

TEST_CASE("Fermat tangent section is the cone sum_{k>=2} X_k^d") {
    for (unsigned d = 3; d <= 4; ++d) {
        FieldPtr f = CycloField::get(2 * d);
        const unsigned n = 4;
        const Hypersurface x(fermat(f, n, d));
        const ProjPoint p({f->one(), f->gen(), f->zero(), f->zero()});
        const auto r = restrict_to_hyperplane(x.equation(), tangent_hyperplane(x, p));
        CHECK(r.chart.pivot() == 0);
        // chart variables are X1, X2, X3
        const MultiPoly expect = X(f, 3, 1).pow(d) + X(f, 3, 2).pow(d);
        CHECK(r.form == expect);
        const Vector v = r.chart.to_chart(p);
        CHECK(multiplicity_at(r.form, v) == d);
        CHECK(is_cone_with_vertex(r.form, v));
        CHECK(is_cone_by_derivative(r.form, v));
        CHECK(is_good_cone(r.form, v) == ConeVerdict::Good);
    }
}

TEST_CASE("chart round trips") {
    FieldPtr f = CycloField::get(4);
    std::mt19937_64 rng(13);
    for (int k = 0; k < 20; ++k) {
        Vector a;
        for (int i = 0; i < 5; ++i) a.push_back(support::random_element(f, rng, 3));
        if (std::all_of(a.begin(), a.end(), [](const CycloNum& c) { return c.is_zero(); })) continue;
        const Chart c{Hyperplane(a)};
        Vector y;
        for (int i = 0; i < 4; ++i) y.push_back(support::random_element(f, rng));
        if (std::all_of(y.begin(), y.end(), [](const CycloNum& c) { return c.is_zero(); })) continue;
        const ProjPoint p = c.from_chart(y);
        CHECK(c.plane().contains(p));
        CHECK(ProjPoint(c.to_chart(p)) == ProjPoint(y));
        const MultiPoly g = support::random_form(f, 4, 3, 5, rng);
        CHECK(c.restrict(c.lift(g)) == g);
        // restriction commutes with evaluation through the embedding
        const MultiPoly h = support::random_form(f, 5, 3, 6, rng);
        Vector xs(5, f->zero());
        for (unsigned i = 0; i < 5; ++i)
            for (unsigned j = 0; j < 4; ++j) xs[i] += c.embedding()(i, j) * y[j];
        CHECK(c.restrict(h).eval(y) == h.eval(xs));
    }
    FieldPtr q = CycloField::rationals();
    const Chart c{Hyperplane::from_form(X(q, 3, 0))};
    CHECK(error_of([&] { c.to_chart(pt(q, {1, 0, 0})); }) == Errc::VertexNotOnPlane);
}

TEST_CASE("multiplicity by the lowest-order term") {
    FieldPtr f = CycloField::rationals();
    const unsigned n = 3;
    const MultiPoly x0 = X(f, n, 0), x1 = X(f, n, 1), x2 = X(f, n, 2);
    // node at (0:0:1): x0^2 - x1^2 + x0^3/x2 scaled to degree 3
    const MultiPoly nodal = (x0 * x0 - x1 * x1) * x2 + x0.pow(3);
    CHECK(multiplicity_at(nodal, pt(f, {0, 0, 1}).coords()) == 2);
    CHECK(multiplicity_at(nodal, pt(f, {1, 1, 0}).coords()) == 0);
    CHECK(multiplicity_at(x1 * x2 * x2 - x0.pow(3), pt(f, {0, 0, 1}).coords()) == 1);
    CHECK(multiplicity_at(x0.pow(3) + x1.pow(3), pt(f, {0, 0, 1}).coords()) == 3);
}

TEST_CASE("cone tests agree on random cones and non-cones") {
    FieldPtr f = CycloField::get(3);
    std::mt19937_64 rng(19);
    for (int k = 0; k < 25; ++k) {
        // a form in X1..X3 after a change of coordinates moving e0 to v
        const MultiPoly g = support::random_form(f, 3, 3, 5, rng).remap(4, {1, 2, 3});
        if (g.is_zero()) continue;
        Matrix m(4, 4, f->zero());
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 4; ++j) m(i, j) = support::random_element(f, rng, 2);
        if (algebra::determinant(m, f->one()).is_zero()) continue;
        const Matrix minv = algebra::inverse(m, f->one());
        const MultiPoly cone = algebra::compose_linear(g, minv);  // vertex is the first column of m
        const Vector v = m.col(0);
        CHECK(is_cone_with_vertex(cone, v));
        CHECK(is_cone_by_derivative(cone, v));
        CHECK(multiplicity_at(cone, v) == 3);
        const MultiPoly bent = cone + algebra::compose_linear(MultiPoly::variable(f, 4, 0).pow(2) * MultiPoly::variable(f, 4, 1), minv);
        CHECK(is_cone_with_vertex(bent, v) == is_cone_by_derivative(bent, v));
        CHECK_FALSE(is_cone_by_derivative(bent, v));
    }
}

TEST_CASE("good-cone verdicts by route") {
    FieldPtr f = CycloField::rationals();
    // vertex e0; the base lives in the remaining variables
    const Vector e0 = pt(f, {1, 0, 0}).coords();
    const MultiPoly x1 = X(f, 3, 1), x2 = X(f, 3, 2);
    auto good = good_cone_report(x1.pow(3) + x2.pow(3), e0);
    CHECK(good.verdict == ConeVerdict::Good);
    CHECK(good.method == "binary-squarefree");
    auto bad = good_cone_report(x1 * x1 * x2, e0);
    CHECK(bad.verdict == ConeVerdict::SingularOutsideVertex);
    CHECK(good_cone_report(X(f, 3, 0) * x1 + x2 * x2, e0).verdict == ConeVerdict::NotCone);

    const Vector e0_4 = pt(f, {1, 0, 0, 0}).coords();
    const MultiPoly y1 = X(f, 4, 1), y2 = X(f, 4, 2), y3 = X(f, 4, 3);
    auto smooth = good_cone_report(y1.pow(3) + y2.pow(3) + y3.pow(3), e0_4);
    CHECK(smooth.verdict == ConeVerdict::Good);
    CHECK(smooth.method == "macaulay");
    auto node = good_cone_report((y1 * y1 - y2 * y2) * y3 + y1.pow(3), e0_4);
    CHECK(node.verdict == ConeVerdict::SingularOutsideVertex);
    CHECK(node.method == "macaulay");
    // a base missing a variable is itself a cone, hence singular
    CHECK(good_cone_report(y2.pow(3) + y3.pow(3), e0_4).verdict == ConeVerdict::SingularOutsideVertex);
}

TEST_CASE("common zeros by Macaulay resultant") {
    FieldPtr f = CycloField::rationals();
    for (unsigned k = 1; k <= 3; ++k) {
        std::vector<MultiPoly> powers;
        for (unsigned i = 0; i < 3; ++i) powers.push_back(X(f, 3, i).pow(k));
        CHECK(no_common_zero(powers));
        // a shared linear factor forces a common zero
        std::vector<MultiPoly> shared;
        const MultiPoly l = X(f, 3, 0) + X(f, 3, 1) - X(f, 3, 2);
        for (unsigned i = 0; i < 3; ++i) shared.push_back(l * X(f, 3, i).pow(k - 1));
        CHECK_FALSE(no_common_zero(shared));
    }
    CHECK(error_of([&] { no_common_zero({X(f, 3, 0), X(f, 3, 1)}); }) == Errc::DimensionMismatch);
    CHECK(error_of([&] { no_common_zero({X(f, 2, 0), X(f, 2, 1).pow(2)}); }) == Errc::DegreeMismatch);
}

TEST_CASE("restriction to a line gives the Fermat binary form") {
    for (unsigned d = 3; d <= 6; ++d) {
        FieldPtr f = CycloField::get(2 * d);
        const ProjLine l(ProjPoint::unit(f, 4, 0), ProjPoint::unit(f, 4, 1));
        const BinaryForm b = restrict_to_line(fermat(f, 4, d), l);
        CHECK(b.degree == d);
        CHECK(b.poly.degree() == static_cast<long>(d));
        CHECK(b.poly.coeffs().front() == f->one());
        CHECK(b.poly.coeffs().back() == f->one());
        // roots are the xi with xi^d = -1: the odd powers of zeta_2d
        for (unsigned k = 0; k < 2 * d; ++k) CHECK(b.poly.eval(f->root_of_unity(k)).is_zero() == (k % 2 == 1));
        CHECK(b.mult_at_infinity() == 0);
    }
}
