#include "starpt/starpoint.hpp"

#include <algorithm>

namespace starpt::starpoint {

using algebra::Vector;
using geometry::Chart;

StarVerdict is_star_point(const Hypersurface& x, const ProjPoint& p) {
    Hyperplane t = geometry::tangent_hyperplane(x, p);
    auto [cone, chart] = geometry::restrict_to_hyperplane(x.equation(), t);
    Vector vertex = chart.to_chart(p);
    StarVerdict v{false, t, cone, geometry::multiplicity_at(cone, vertex)};
    v.is_star = v.multiplicity == x.degree();
    if (v.is_star) v.good_cone = geometry::good_cone_report(cone, vertex);
    return v;
}

Hypersurface polar_hypersurface(const Hypersurface& x, const ProjPoint& p) {
    const MultiPoly& f = x.equation();
    if (x.degree() < 2) fail(Errc::WrongDegree, "polar needs degree at least 2");
    if (p.size() != f.nvars()) fail(Errc::DimensionMismatch, "point and hypersurface in different spaces");
    MultiPoly g(f.field(), f.nvars());
    for (unsigned i = 0; i < f.nvars(); ++i)
        if (!p[i].is_zero()) g += f.partial(i) * p[i];
    if (g.is_zero()) fail(Errc::ZeroPolar, "polar form vanishes identically at " + p.str());
    return Hypersurface(std::move(g));
}

bool hyperplane_contained(const MultiPoly& g, const Hyperplane& plane) {
    return geometry::restrict_to_hyperplane(g, plane).form.is_zero();
}

bool star_via_polar(const Hypersurface& x, const ProjPoint& p) {
    Hyperplane t = geometry::tangent_hyperplane(x, p);
    return hyperplane_contained(polar_hypersurface(x, p).equation(), t);
}

unsigned LineReport::star_count() const {
    return static_cast<unsigned>(
        std::count_if(points.begin(), points.end(), [](const LinePoint& lp) { return lp.verdict && lp.verdict->is_star; }));
}

namespace {

LinePoint examine(const Hypersurface& x, const ProjPoint& p, unsigned mult) {
    LinePoint lp{p, mult, std::nullopt, {}};
    try {
        lp.verdict = is_star_point(x, p);
    } catch (const Error& e) {
        if (e.code() != Errc::SingularPoint) throw;
        lp.note = "singular point of X";
    }
    return lp;
}

}  // namespace

LineReport star_points_on_line(const Hypersurface& x, const ProjLine& line, const std::vector<ProjPoint>& candidates) {
    LineReport rep;
    auto form = geometry::restrict_to_line(x.equation(), line);
    if (form.is_zero()) {
        rep.line_in_x = true;
        for (const auto& c : candidates) {
            if (!line.contains(c)) fail(Errc::NotOnLine, "candidate " + c.str() + " is not on the line");
            rep.points.push_back(examine(x, c, 0));
        }
        return rep;
    }
    std::vector<CycloNum> hints;
    for (const auto& c : candidates) {
        auto [s, u] = line.parameter(c);
        if (!s.is_zero()) hints.push_back(u / s);
    }
    if (const unsigned inf = form.mult_at_infinity(); inf > 0) rep.points.push_back(examine(x, line.b(), inf));
    auto split = find_roots(form.poly, hints);
    for (const auto& [lambda, mult] : split.roots)
        rep.points.push_back(examine(x, line.point(x.field()->one(), lambda), mult));
    for (const auto& u : split.unresolved) rep.unresolved_degrees.push_back(static_cast<unsigned>(u.degree()));
    return rep;
}

ForcedStar forced_dth_star(const Hypersurface& x, const ProjLine& line, const std::vector<ProjPoint>& known) {
    const unsigned d = x.degree();
    if (known.size() + 1 != d)
        fail(Errc::DimensionMismatch, "expected " + std::to_string(d - 1) + " known points, got " + std::to_string(known.size()));
    for (std::size_t i = 0; i < known.size(); ++i)
        for (std::size_t j = i + 1; j < known.size(); ++j)
            if (known[i] == known[j]) fail(Errc::RootsNotDistinct, "known point repeated: " + known[i].str());
    auto form = geometry::restrict_to_line(x.equation(), line);
    if (form.is_zero()) fail(Errc::LineInX, "the line lies on the hypersurface");
    for (const auto& p : known) {
        if (!line.contains(p)) fail(Errc::NotOnLine, "known point " + p.str() + " is not on the line");
        if (!x.contains(p)) fail(Errc::NotOnHypersurface, "known point " + p.str() + " is not on the hypersurface");
        if (!is_star_point(x, p).is_star) fail(Errc::KnownPointNotStar, "known point " + p.str() + " is not a star point");
    }
    // strip one linear factor per known point; formal degree tracks roots at B
    UniPoly<CycloNum> poly = form.poly;
    unsigned formal = d;
    for (const auto& p : known) {
        auto [s, u] = line.parameter(p);
        if (s.is_zero()) {
            if (static_cast<long>(formal) <= poly.degree())
                fail(Errc::PostconditionFailed, "point " + p.str() + " is not a root of the restricted form");
        } else {
            UniPoly<CycloNum> lin{-(u / s), x.field()->one()};
            poly = exact_quotient(poly, lin);
        }
        --formal;
    }
    ProjPoint last = poly.degree() == 1 ? line.point(poly.lead(), -poly.coeffs()[0]) : line.b();
    StarVerdict v = is_star_point(x, last);
    if (!v.is_star) fail(Errc::PostconditionFailed, "remaining point " + last.str() + " is not a star point");
    return {last, v};
}

}  // namespace starpt::starpoint
