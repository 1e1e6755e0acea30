#include <doctest.h>

#include "starpt/starpoint.hpp"
#include "support.hpp"

using namespace starpt;
using namespace starpt::starpoint;
using algebra::CycloField;
using algebra::FieldPtr;
using algebra::Matrix;
using algebra::Vector;
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

// The quartic with two star points on an embedded line, homogenized with X0.
Hypersurface quartic_fixture() {
    FieldPtr f = CycloField::rationals();
    const MultiPoly x0 = X(f, 4, 0), x1 = X(f, 4, 1), x2 = X(f, 4, 2), x3 = X(f, 4, 3);
    return Hypersurface(x2 * x1 * (x2 - x1) * (x2 + x1) + x3 * (x1 - x0) * (x3 + x1 - x0) * (x3 - x1 + x0));
}

// A hypersurface through e0 with tangent X3 there. With `star`, the tangent
// section is the binary form c(X1, X2), a cone with vertex e0; otherwise an
// X0 * X1^(d-1) term spoils it. Then a random change of coordinates.
struct Sample {
    Hypersurface x;
    ProjPoint p;
    bool star;
};

Sample planted(FieldPtr f, unsigned d, bool star, std::mt19937_64& rng) {
    const unsigned n = 4;
    for (;;) {
        MultiPoly c(f, n);
        for (unsigned k = 0; k <= d; ++k) {
            algebra::Monomial m{};
            m[1] = static_cast<std::uint8_t>(k);
            m[2] = static_cast<std::uint8_t>(d - k);
            c.add_term(m, support::random_element(f, rng, 3));
        }
        MultiPoly eq = X(f, n, 0).pow(d - 1) * X(f, n, 3) + X(f, n, 3) * support::random_form(f, n, d - 1, 6, rng) + c;
        if (!star) eq += X(f, n, 0) * X(f, n, 1).pow(d - 1);
        Matrix m(n, n, f->zero());
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m(i, j) = support::random_element(f, rng, 2);
        if (algebra::determinant(m, f->one()).is_zero()) continue;
        // new coordinates Y with X = M Y; e0 moves to M^{-1} e0
        const Matrix minv = algebra::inverse(m, f->one());
        const Hypersurface x(algebra::compose_linear(eq, m));
        const ProjPoint p(minv.col(0));
        if (!x.contains(p)) continue;
        return {x, p, star};
    }
}

}  // namespace

TEST_CASE("Fermat cubic surface: E01(-1) is a star point, (3:4:5:-6) is not") {
    FieldPtr f = CycloField::get(6);
    const Hypersurface x(fermat(f, 4, 3));
    const auto yes = is_star_point(x, pt(f, {1, -1, 0, 0}));
    CHECK(yes.is_star);
    CHECK(yes.multiplicity == 3);
    CHECK(yes.tangent.str() == "X0 + X1");
    CHECK(yes.good_cone.verdict == geometry::ConeVerdict::Good);
    CHECK(star_via_polar(x, pt(f, {1, -1, 0, 0})));

    const ProjPoint q = pt(f, {3, 4, 5, -6});
    REQUIRE(x.contains(q));
    const auto no = is_star_point(x, q);
    CHECK_FALSE(no.is_star);
    CHECK(no.multiplicity < 3);
    CHECK_FALSE(star_via_polar(x, q));
}

TEST_CASE("polar of the Fermat hypersurface is sum x_i X_i^(d-1)") {
    for (unsigned d = 3; d <= 5; ++d) {
        FieldPtr f = CycloField::get(2 * d);
        const Hypersurface x(fermat(f, 4, d));
        const ProjPoint p({f->one(), f->gen(), f->from_int(2), f->zero()});
        MultiPoly expect(f, 4);
        for (unsigned i = 0; i < 4; ++i) expect += X(f, 4, i).pow(d - 1) * p[i];
        const MultiPoly got = polar_hypersurface(x, p).equation();
        // equal up to a nonzero scalar
        const CycloNum ratio = got.leading().second / expect.leading().second;
        CHECK(got == expect * ratio);
    }
}

TEST_CASE("both star routes agree on planted samples") {
    std::mt19937_64 rng(101);
    int agreed = 0;
    for (unsigned cond : {1u, 3u}) {
        FieldPtr f = CycloField::get(cond);
        for (unsigned d = 3; d <= 4; ++d)
            for (int k = 0; k < 8; ++k) {
                const bool want = k % 2 == 0;
                const Sample s = planted(f, d, want, rng);
                std::optional<StarVerdict> got;
                try {
                    got = is_star_point(s.x, s.p);
                } catch (const Error& e) {
                    // a random base may make the point singular; skip those
                    REQUIRE(e.code() == Errc::SingularPoint);
                    continue;
                }
                const StarVerdict& v = *got;
                CHECK(v.is_star == want);
                CHECK(star_via_polar(s.x, s.p) == v.is_star);
                CHECK(v.tangent.contains(s.p));
                agreed += 1;
            }
    }
    CHECK(agreed >= 24);
}

TEST_CASE("polar failures") {
    FieldPtr f = CycloField::rationals();
    const Hypersurface cone(X(f, 4, 1).pow(3) + X(f, 4, 2).pow(3) + X(f, 4, 3).pow(3));
    CHECK(error_of([&] { polar_hypersurface(cone, pt(f, {1, 0, 0, 0})); }) == Errc::ZeroPolar);
    CHECK(error_of([&] { is_star_point(cone, pt(f, {1, 0, 0, 0})); }) == Errc::SingularPoint);
    CHECK(error_of([&] { is_star_point(cone, pt(f, {1, 1, 0, 0})); }) == Errc::NotOnHypersurface);
}

TEST_CASE("roots inside the coefficient field") {
    FieldPtr f = CycloField::get(12);
    std::vector<CycloNum> rs{f->gen(), f->from_int(2), f->root_of_unity(5) * f->from_int(3), f->from_int(-1)};
    UniPoly<CycloNum> p = UniPoly<CycloNum>::constant(f->one());
    for (const auto& r : rs) p = p * UniPoly<CycloNum>{-r, f->one()};
    p = p * UniPoly<CycloNum>{-rs[1], f->one()};  // 2 is a double root
    const RootSplit split = find_roots(p);
    CHECK(split.unresolved.empty());
    unsigned total = 0;
    for (const auto& [r, m] : split.roots) {
        CHECK(p.eval(r).is_zero());
        CHECK(m == (r == rs[1] ? 2u : 1u));
        total += m;
    }
    CHECK(total == 5);

    FieldPtr q = CycloField::rationals();
    const RootSplit irr = find_roots(UniPoly<CycloNum>{q->from_int(-2), q->zero(), q->one()});
    CHECK(irr.roots.empty());
    REQUIRE(irr.unresolved.size() == 1);
    CHECK(irr.unresolved[0].degree() == 2);
    // x^2 + 1 splits once i is available
    FieldPtr g = CycloField::get(4);
    CHECK(find_roots(UniPoly<CycloNum>{g->one(), g->zero(), g->one()}).roots.size() == 2);
}

TEST_CASE("star points of the Fermat hypersurface on X2 = ... = XN = 0") {
    for (unsigned d = 3; d <= 5; ++d) {
        FieldPtr f = CycloField::get(2 * d);
        const Hypersurface x(fermat(f, 4, d));
        const ProjLine l(ProjPoint::unit(f, 4, 0), ProjPoint::unit(f, 4, 1));
        const LineReport rep = star_points_on_line(x, l);
        CHECK_FALSE(rep.line_in_x);
        CHECK(rep.unresolved_degrees.empty());
        CHECK(rep.star_count() == d);
        for (const auto& lp : rep.points) {
            CHECK(lp.multiplicity == 1);
            CHECK(lp.point[1].pow(d) == -f->one());
        }
    }
}

TEST_CASE("quartic fixture: two star points on a line inside X") {
    const Hypersurface x = quartic_fixture();
    FieldPtr f = x.field();
    const ProjLine l(pt(f, {1, 0, 0, 0}), pt(f, {0, 1, 0, 0}));
    std::vector<ProjPoint> cands;
    for (long a = -3; a <= 3; ++a) cands.push_back(pt(f, {1, a, 0, 0}));
    cands.push_back(pt(f, {0, 1, 0, 0}));
    const LineReport rep = star_points_on_line(x, l, cands);
    CHECK(rep.line_in_x);
    CHECK(rep.star_count() == 2);
    for (const auto& lp : rep.points) {
        const bool star = lp.verdict && lp.verdict->is_star;
        const bool expected = lp.point == pt(f, {1, 0, 0, 0}) || lp.point == pt(f, {1, 1, 0, 0});
        CHECK(star == expected);
        if (lp.point == pt(f, {1, 0, 0, 0})) CHECK(lp.verdict->tangent.str() == "X3");
        if (lp.point == pt(f, {1, 1, 0, 0})) CHECK(lp.verdict->tangent.str() == "X2");
    }
    CHECK(error_of([&] { star_points_on_line(x, l, {pt(f, {0, 0, 1, 0})}); }) == Errc::NotOnLine);
}

TEST_CASE("d-1 collinear star points force the last") {
    for (unsigned d = 3; d <= 5; ++d) {
        FieldPtr f = CycloField::get(2 * d);
        const Hypersurface x(fermat(f, 4, d));
        const ProjLine l(ProjPoint::unit(f, 4, 0), ProjPoint::unit(f, 4, 1));
        std::vector<ProjPoint> all;
        for (unsigned k = 0; k < d; ++k)
            all.push_back(ProjPoint({f->one(), f->root_of_unity(2 * k + 1), f->zero(), f->zero()}));
        for (unsigned drop = 0; drop < d; ++drop) {
            std::vector<ProjPoint> known;
            for (unsigned k = 0; k < d; ++k)
                if (k != drop) known.push_back(all[k]);
            const ForcedStar fs = forced_dth_star(x, l, known);
            CHECK(fs.point == all[drop]);
            CHECK(fs.verdict.is_star);
        }
    }
}

TEST_CASE("forced star point failures") {
    FieldPtr f = CycloField::get(6);
    const Hypersurface x(fermat(f, 4, 3));
    const ProjLine l(ProjPoint::unit(f, 4, 0), ProjPoint::unit(f, 4, 1));
    const ProjPoint a = pt(f, {1, -1, 0, 0});
    CHECK(error_of([&] { forced_dth_star(x, l, {a, a}); }) == Errc::RootsNotDistinct);
    CHECK(error_of([&] { forced_dth_star(x, l, {a}); }) == Errc::DimensionMismatch);

    const Hypersurface q = quartic_fixture();
    FieldPtr r = q.field();
    const ProjLine axis(pt(r, {1, 0, 0, 0}), pt(r, {0, 1, 0, 0}));
    CHECK(error_of([&] { forced_dth_star(q, axis, {pt(r, {1, 0, 0, 0}), pt(r, {1, 1, 0, 0}), pt(r, {1, 2, 0, 0})}); }) ==
          Errc::LineInX);

    // a smooth cubic point on the line that is not a star point
    const MultiPoly x0 = X(r, 4, 0), x1 = X(r, 4, 1), x2 = X(r, 4, 2), x3 = X(r, 4, 3);
    const Hypersurface c(x0 * x1 * (x0 - x1) + x2.pow(3) + x3.pow(3) + x0 * x0 * x2);
    const ProjLine e01(pt(r, {1, 0, 0, 0}), pt(r, {0, 1, 0, 0}));
    REQUIRE_FALSE(is_star_point(c, pt(r, {1, 1, 0, 0})).is_star);
    CHECK(error_of([&] { forced_dth_star(c, e01, {pt(r, {1, 0, 0, 0}), pt(r, {1, 1, 0, 0})}); }) ==
          Errc::KnownPointNotStar);
}
