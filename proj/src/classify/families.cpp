// Hypersurface families with prescribed star points: Fermat, d collinear
// points, and the closed forms for three points (Case I, intermediate,
// extremal).

#include <algorithm>

#include "starpt/classify.hpp"

namespace starpt::classify {

using algebra::CycloField;
using algebra::Monomial;
using algebra::Vector;
using configspace::binom;
using configspace::StarTriple;
using geometry::Chart;

namespace {

MultiPoly var(FieldPtr f, unsigned n, unsigned i) { return MultiPoly::variable(f, n, i); }

std::vector<unsigned> var_range(unsigned from, unsigned to) {
    std::vector<unsigned> out;
    for (unsigned i = from; i < to; ++i) out.push_back(i);
    return out;
}

std::vector<unsigned> with(std::vector<unsigned> base, const std::vector<unsigned>& more) {
    base.insert(base.end(), more.begin(), more.end());
    return base;
}

bool uses_only(const MultiPoly& f, const std::vector<unsigned>& allowed) {
    for (unsigned i = 0; i < f.nvars(); ++i)
        if (f.degree_in(i) > 0 && std::find(allowed.begin(), allowed.end(), i) == allowed.end()) return false;
    return true;
}

void check_part(const MultiPoly& f, unsigned nvars, int deg, const std::vector<unsigned>& allowed,
                const std::string& name) {
    if (f.nvars() != nvars) fail(Errc::DimensionMismatch, name + " has the wrong number of variables");
    if (f.is_zero()) return;
    if (!f.is_homogeneous() || f.degree() != deg)
        fail(Errc::DegreeMismatch, name + " must be homogeneous of degree " + std::to_string(deg));
    if (!uses_only(f, allowed)) fail(Errc::DegreeMismatch, name + " uses a variable outside its range");
}

Hyperplane plane_of(FieldPtr f, unsigned n, const std::vector<std::pair<unsigned, long>>& terms) {
    Vector c(n, f->zero());
    for (const auto& [i, v] : terms) c[i] = f->from_int(v);
    return Hyperplane(std::move(c));
}

ProjPoint point_of(FieldPtr f, unsigned n, const std::vector<std::pair<unsigned, CycloNum>>& coords) {
    Vector c(n, f->zero());
    for (const auto& [i, v] : coords) c[i] = v;
    return ProjPoint(std::move(c));
}

// Star point with the given tangent plane; a singular point is tolerated
// only when the caller allows it.
void certify(const Hypersurface& x, const ProjPoint& p, const Hyperplane& plane, bool allow_singular) {
    std::optional<starpoint::StarVerdict> v;
    try {
        v = starpoint::is_star_point(x, p);
    } catch (const Error& e) {
        if (e.code() == Errc::SingularPoint && allow_singular) return;
        if (e.code() == Errc::SingularPoint || e.code() == Errc::NotOnHypersurface)
            fail(Errc::PostconditionFailed, "designated point " + p.str() + ": " + e.what());
        throw;
    }
    if (!v->is_star) fail(Errc::PostconditionFailed, "designated point " + p.str() + " is not a star point");
    if (v->tangent != plane)
        fail(Errc::PostconditionFailed, "tangent plane at " + p.str() + " is " + v->tangent.str() + ", expected " +
                                            plane.str());
}

CycloNum small_nonzero(FieldPtr f, std::mt19937_64& rng) {
    long c = static_cast<long>(rng() % 3) + 1;
    if (rng() & 1) c = -c;
    return f->from_int(c);
}

}  // namespace

unsigned euler_phi(unsigned n) { return algebra::euler_phi(n); }

MultiPoly random_form(FieldPtr field, unsigned nvars, const std::vector<unsigned>& vars, unsigned deg,
                      std::mt19937_64& rng) {
    MultiPoly out(field, nvars);
    if (vars.empty()) {
        if (deg == 0) out.add_term(Monomial{}, small_nonzero(field, rng));
        return out;
    }
    for (const auto& m : algebra::monomials_of_degree(static_cast<unsigned>(vars.size()), deg)) {
        Monomial full{};
        for (std::size_t k = 0; k < vars.size(); ++k) full[vars[k]] = m[k];
        out.add_term(full, small_nonzero(field, rng));
    }
    return out;
}

// ---- Fermat ----------------------------------------------------------------

ProjPoint fermat_point(FieldPtr field, unsigned N, unsigned i, unsigned j, const CycloNum& xi) {
    return point_of(field, N + 1, {{i, field->one()}, {j, xi}});
}

FermatFamily build_fermat(unsigned d, unsigned N) {
    if (d < 3) fail(Errc::WrongDegree, "Fermat family needs d >= 3");
    if (N < 2) fail(Errc::DimensionMismatch, "Fermat family needs N >= 2");
    FieldPtr f = CycloField::get(2 * d);
    const unsigned n = N + 1;
    MultiPoly eq(f, n);
    for (unsigned i = 0; i < n; ++i) eq += var(f, n, i).pow(d);
    FermatFamily fam{Hypersurface(std::move(eq)), {}};
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            for (unsigned k = 0; k < d; ++k) fam.star_points.push_back(fermat_point(f, N, i, j, f->root_of_unity(2 * k + 1)));
    return fam;
}

// ---- collinear -------------------------------------------------------------

CollinearResult build_collinear(unsigned d, unsigned N, const ProjLine& line, const std::vector<ProjPoint>& points,
                                const std::vector<Hyperplane>& planes, const MultiPoly& c1, std::uint64_t seed) {
    if (points.size() != d || planes.size() != d)
        fail(Errc::DimensionMismatch, "need exactly " + std::to_string(d) + " points and planes");
    const unsigned n = N + 1;
    if (line.a().size() != n) fail(Errc::DimensionMismatch, "line not in P^" + std::to_string(N));
    FieldPtr f = line.a().field();
    for (std::size_t i = 0; i < d; ++i) {
        if (!line.contains(points[i])) fail(Errc::NotOnLine, "point " + points[i].str() + " is not on the line");
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j]) fail(Errc::RootsNotDistinct, "point repeated: " + points[i].str());
        if (!planes[i].contains(points[i]))
            fail(Errc::VertexNotOnPlane, "point " + points[i].str() + " is not on " + planes[i].str());
        if (planes[i].contains(line.a()) && planes[i].contains(line.b()))
            fail(Errc::NotApplicable, "plane " + planes[i].str() + " contains the line");
    }
    StarTriple t1 = configspace::validate_triple(planes[0], points[0], c1, d);

    ProjPoint v = line.a();
    for (long k = 0;; ++k) {
        v = line.point(f->one(), f->from_int(k));
        if (std::find(points.begin(), points.end(), v) == points.end()) break;
    }

    // Y(X) = C1(pi1(V) X - pi1(X) V); the argument lies on plane 1, so its
    // chart coordinates are its non-pivot coordinates.
    const Hyperplane& p1 = planes[0];
    Chart ch(p1);
    const CycloNum pv = p1.eval(v.coords());
    Matrix a(ch.chart_vars(), n, f->zero());
    for (unsigned k = 0; k < ch.chart_vars(); ++k) {
        const unsigned r = ch.ambient_index(k);
        for (unsigned c = 0; c < n; ++c) a(k, c) = (r == c ? pv : f->zero()) - v[r] * p1.coeffs()[c];
    }
    MultiPoly y = algebra::compose_linear(t1.cone, a);

    std::vector<StarTriple> triples{t1};
    for (std::size_t i = 1; i < d; ++i) triples.push_back(configspace::validate_triple(planes[i], points[i], y, d));
    Configuration config = Configuration::make(N, d, f, std::move(triples));
    auto sys = configspace::vd_basis(config);
    auto suited = configspace::is_suited(config, sys, seed);
    if (!suited.suited || !suited.witness) fail(Errc::PostconditionFailed, "collinear configuration is not suited");

    Hypersurface x(*suited.witness);
    for (std::size_t i = 0; i < d; ++i) certify(x, points[i], planes[i], false);
    MultiPoly section = ch.restrict(x.equation());
    if (section * section.leading().second.inv() != t1.cone)
        fail(Errc::PostconditionFailed, "tangent section at the first point differs from the given cone");
    return {std::move(x), v, std::move(y), std::move(config), std::move(suited)};
}

CollinearInput default_collinear_input(unsigned d, unsigned N) {
    if (d < 3) fail(Errc::WrongDegree, "collinear family needs d >= 3");
    if (N < 2 || N + 1 > algebra::kMaxVars) fail(Errc::DimensionMismatch, "collinear family needs N >= 2");
    FieldPtr f = CycloField::rationals();
    const unsigned n = N + 1;
    CollinearInput in{ProjLine(ProjPoint::unit(f, n, 0), ProjPoint::unit(f, n, 1)), {}, {}, MultiPoly(f, n)};
    for (unsigned i = 1; i <= d; ++i) {
        in.points.push_back(point_of(f, n, {{0, f->one()}, {1, f->from_int(i)}}));
        std::vector<std::pair<unsigned, long>> h{{0, static_cast<long>(i)}, {1, -1}, {2, static_cast<long>(i)}};
        if (n > 3) h.emplace_back(3, 1);
        in.planes.push_back(plane_of(f, n, h));
    }
    for (unsigned k = 2; k < n; ++k) in.c1 += var(f, n, k).pow(d);
    return in;
}

// ---- Case I ----------------------------------------------------------------

namespace {

bool case1_admissible(const CycloNum& t, unsigned d) {
    return !t.is_one() && (t.pow(d).is_one() || t.pow(static_cast<long>(d) - 1).is_one());
}

}  // namespace

Case1Params random_case1_params(unsigned d, unsigned N, const CycloNum& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    FieldPtr f = t.field();
    const unsigned n = N + 1;
    Case1Params p{{}, MultiPoly(f, n)};
    for (unsigned j = 0; j <= d; ++j)
        if (t.pow(j).is_one()) p.a.emplace(j, random_form(f, n, var_range(3, n), d - j, rng));
    p.g012 = random_form(f, n, var_range(0, n), d - 3, rng);
    return p;
}

MultiPoly assemble_case1(unsigned d, unsigned N, const CycloNum& t, const Case1Params& params) {
    if (N < 3) fail(Errc::DimensionMismatch, "Case I needs N >= 3");
    if (d < 3) fail(Errc::WrongDegree, "Case I needs d >= 3");
    if (t.is_one()) fail(Errc::NotRootOfUnity, "t = 1 is excluded");
    FieldPtr f = t.field();
    const unsigned n = N + 1;
    const MultiPoly x0 = var(f, n, 0), x1 = var(f, n, 1), x2 = var(f, n, 2);
    const MultiPoly l = x0 * t + x1;
    const MultiPoly den = (l - x2) * (l - x2 * t);

    MultiPoly body(f, n), tail(f, n);
    for (const auto& [j, a] : params.a) {
        if (j > d) fail(Errc::DegreeMismatch, "A_" + std::to_string(j) + " has j > d");
        check_part(a, n, static_cast<int>(d - j), var_range(3, n), "A_" + std::to_string(j));
        if (!t.pow(j).is_one()) continue;
        if (j > 0) body += a * algebra::exact_divide(l.pow(j) - x2.pow(j), den);
        tail += a * x2.pow(j);
    }
    check_part(params.g012, n, static_cast<int>(d) - 3, var_range(0, n), "g012");
    const CycloNum tm1 = t - f->one();
    return x0 * x1 * body + x0 * x1 * (x0 + x1 - x2) * params.g012 - tail * (tm1 * tm1).inv();
}

Case1Result build_case1(unsigned d, unsigned N, const CycloNum& t, const Case1Params& params) {
    if (!case1_admissible(t, d))
        fail(Errc::NotRootOfUnity, "t = " + t.str() + " satisfies neither t^d = 1 nor t^(d-1) = 1");
    MultiPoly eq = assemble_case1(d, N, t, params);
    if (eq.is_zero()) fail(Errc::ZeroPolynomial, "all parameters vanish");
    FieldPtr f = t.field();
    const unsigned n = N + 1;
    Case1Result r{Hypersurface(std::move(eq)), ProjPoint::unit(f, n, 0), ProjPoint::unit(f, n, 1),
                  point_of(f, n, {{0, f->from_int(-1)}, {1, t}, {2, t - f->one()}})};
    certify(r.x, r.p1, plane_of(f, n, {{1, 1}}), true);
    certify(r.x, r.p2, plane_of(f, n, {{0, 1}}), true);
    certify(r.x, r.p3, plane_of(f, n, {{0, 1}, {1, 1}, {2, -1}}), true);
    return r;
}

Case1Sample sample_case1(unsigned d, unsigned N, const CycloNum& t, std::uint64_t seed, unsigned attempts) {
    for (unsigned k = 0; k < attempts; ++k) {
        Case1Params params = random_case1_params(d, N, t, seed + k);
        Case1Result r = build_case1(d, N, t, params);
        try {
            std::vector<StarTriple> ts{configspace::triple_from_star(r.x, r.p1), configspace::triple_from_star(r.x, r.p2),
                                       configspace::triple_from_star(r.x, r.p3)};
            Configuration config = Configuration::make(N, d, t.field(), std::move(ts));
            return {std::move(params), std::move(r), std::move(config), seed + k};
        } catch (const Error& e) {
            if (e.code() != Errc::SingularPoint && e.code() != Errc::BadCone) throw;
        }
    }
    fail(Errc::PostconditionFailed, "no seed in " + std::to_string(attempts) + " attempts gave a smooth Case I member");
}

// ---- intermediate ----------------------------------------------------------

long long intermediate_dimension(long long N, long long d) {
    long long s = 3 * N + (N - 1) + 2 * (N - 2) + binom(N + d - 3, N - 3) - 1;
    for (long long k = 1; k <= d - 1; ++k) s += binom(N + d - k - 4, N - 3);
    return s;
}

IntermediateParams random_intermediate_params(FieldPtr field, unsigned d, unsigned N, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const unsigned n = N + 1;
    IntermediateParams p{{}, MultiPoly(field, n)};
    p.b.push_back(random_form(field, n, var_range(3, n), d, rng));
    for (unsigned k = 1; k < d; ++k) p.b.push_back(random_form(field, n, var_range(3, n), d - k - 1, rng));
    p.g013 = random_form(field, n, var_range(0, n), d - 3, rng);
    return p;
}

IntermediateResult build_intermediate(unsigned d, unsigned N, const IntermediateParams& params) {
    if (N < 3) fail(Errc::DimensionMismatch, "intermediate case needs N >= 3");
    if (d < 3) fail(Errc::WrongDegree, "intermediate case needs d >= 3");
    if (params.b.size() != d) fail(Errc::DegreeMismatch, "need B_0 .. B_" + std::to_string(d - 1));
    const unsigned n = N + 1;
    FieldPtr f = params.g013.field();
    check_part(params.b[0], n, static_cast<int>(d), var_range(3, n), "B_0");
    for (unsigned k = 1; k < d; ++k)
        check_part(params.b[k], n, static_cast<int>(d - k - 1), var_range(3, n), "B_" + std::to_string(k));
    check_part(params.g013, n, static_cast<int>(d) - 3, var_range(0, n), "g013");

    const MultiPoly x0 = var(f, n, 0), x1 = var(f, n, 1), x2 = var(f, n, 2), x3 = var(f, n, 3);
    MultiPoly s1(f, n), s2(f, n);
    for (unsigned k = 1; k < d; ++k) {
        s1 += params.b[k] * (x2.pow(k) - (x2 - x1).pow(k));
        s2 += params.b[k] * x2.pow(k);
    }
    MultiPoly eq = x0 * x1 * (x3 - x0) * params.g013 - x0 * s1 + x3 * s2 + params.b[0];
    if (eq.is_zero()) fail(Errc::ZeroPolynomial, "all parameters vanish");

    IntermediateResult r{Hypersurface(std::move(eq)),
                         {ProjPoint::unit(f, n, 0), ProjPoint::unit(f, n, 1),
                          point_of(f, n, {{1, f->one()}, {2, f->one()}})},
                         {plane_of(f, n, {{1, 1}}), plane_of(f, n, {{0, 1}}), plane_of(f, n, {{0, 1}, {3, -1}})},
                         intermediate_dimension(N, d),
                         binom(N + d - 3, N)};
    for (std::size_t i = 0; i < 3; ++i) certify(r.x, r.points[i], r.planes[i], true);
    return r;
}

// ---- extremal --------------------------------------------------------------

ExtremalDims extremal_dimensions(long long N, long long d) {
    ExtremalDims e{};
    e.config_indep = 3 * N + 3 * (N - 3) + 3 * binom(N + d - 4, N - 2) + 3 * binom(N + d - 5, N - 4) +
                     binom(N + d - 6, N - 6) - 1;
    e.locus_indep = e.config_indep + binom(N + d - 3, N);
    const long long tail = 3 * N + 2 * (N - 3) + 2 * binom(N + d - 4, N - 3) + binom(N + d - 5, N - 3) +
                           binom(N + d - 5, N - 5);
    e.config_dep = tail + binom(N + d - 3, N - 1);
    e.locus_dep = tail + binom(N + d - 2, N);
    return e;
}

std::vector<Hyperplane> extremal_planes(unsigned N, ExtremalCase which) {
    if (N <= 4) fail(Errc::AmbientTooSmall, "three pairwise incident star points need N >= 5");
    FieldPtr f = CycloField::rationals();
    const unsigned n = N + 1;
    return {plane_of(f, n, {{3, 1}}), plane_of(f, n, {{4, 1}}),
            which == ExtremalCase::Indep ? plane_of(f, n, {{5, 1}}) : plane_of(f, n, {{3, 1}, {4, -1}})};
}

std::vector<MultiPoly> cone_condition_space(unsigned d, const std::vector<ProjPoint>& points,
                                            const std::vector<Hyperplane>& planes) {
    if (points.empty() || points.size() != planes.size())
        fail(Errc::DimensionMismatch, "need one plane per point");
    FieldPtr f = points[0].field();
    const unsigned n = static_cast<unsigned>(points[0].size());
    const auto monos = algebra::monomials_of_degree(n, d);
    const auto chart_monos = algebra::monomials_of_degree(n - 1, d - 1);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Chart ch(planes[i]);
        Matrix block(chart_monos.size(), monos.size(), f->zero());
        for (std::size_t k = 0; k < monos.size(); ++k) {
            MultiPoly m = MultiPoly::term(f, n, monos[k], f->one());
            MultiPoly dm(f, n);
            for (unsigned c = 0; c < n; ++c)
                if (!points[i][c].is_zero()) dm += m.partial(c) * points[i][c];
            MultiPoly r = ch.restrict(dm);
            for (std::size_t l = 0; l < chart_monos.size(); ++l) block(l, k) = r.coeff(chart_monos[l]);
        }
        for (std::size_t l = 0; l < chart_monos.size(); ++l) rows.push_back(block.row(l));
    }
    std::vector<MultiPoly> out;
    for (const auto& b : algebra::nullspace(Matrix::from_rows(rows), f->one()))
        out.push_back(algebra::from_coefficients(f, n, monos, b));
    return out;
}

namespace {

// f = X3X4 g34 + X3 g3 + X4 g4 + g with g4, g free of X0; g3, g free of X1;
// g free of X2.
void check_dep_shape(const MultiPoly& f) {
    for (const auto& [m, c] : f.terms()) {
        const bool has3 = m[3] > 0, has4 = m[4] > 0;
        if (has3 && has4) continue;
        const bool ok = (has3 && m[1] == 0) || (has4 && m[0] == 0) || (!has3 && !has4 && m[0] == 0 && m[1] == 0 && m[2] == 0);
        if (!ok) fail(Errc::ShapeViolation, "dependent extremal member violates the normal form: " + f.str());
    }
}

}  // namespace

namespace {

std::optional<bool> plane_singular(const Hypersurface& x, const std::vector<ProjPoint>& pts) {
    const unsigned n = x.ambient() + 1;
    Matrix m(n, 3, x.field()->zero());
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < 3; ++j) m(i, j) = pts[j][i];
    if (!algebra::compose_linear(x.equation(), m).is_zero()) return std::nullopt;
    // On a plane inside X the partials along the plane vanish; the rest are
    // ternary forms of degree d-1 whose common zeros are the singular points.
    std::vector<MultiPoly> forms;
    for (unsigned k = 0; k < n; ++k) {
        MultiPoly g = algebra::compose_linear(x.equation().partial(k), m);
        if (!g.is_zero()) forms.push_back(std::move(g));
    }
    if (forms.size() < 3) return true;
    if (forms.size() == 3) return !geometry::no_common_zero(forms);
    for (std::size_t a = 0; a < forms.size(); ++a)
        for (std::size_t b = a + 1; b < forms.size(); ++b)
            for (std::size_t c = b + 1; c < forms.size(); ++c)
                if (geometry::no_common_zero({forms[a], forms[b], forms[c]})) return false;
    return std::nullopt;
}

}  // namespace

ExtremalResult build_extremal(unsigned d, unsigned N, ExtremalCase which, std::uint64_t seed) {
    if (N <= 4) fail(Errc::AmbientTooSmall, "three pairwise incident star points need N >= 5");
    if (d < 3) fail(Errc::WrongDegree, "extremal case needs d >= 3");
    FieldPtr f = CycloField::rationals();
    const unsigned n = N + 1;
    std::mt19937_64 rng(seed);
    std::vector<ProjPoint> points{ProjPoint::unit(f, n, 0), ProjPoint::unit(f, n, 1), ProjPoint::unit(f, n, 2)};
    auto planes = extremal_planes(N, which);

    MultiPoly eq(f, n);
    if (which == ExtremalCase::Indep) {
        const auto o = var_range(6, n);
        const MultiPoly x3 = var(f, n, 3), x4 = var(f, n, 4), x5 = var(f, n, 5);
        eq = x3 * x4 * x5 * random_form(f, n, var_range(0, n), d - 3, rng) +
             x3 * x4 * random_form(f, n, with({0, 1, 3, 4}, o), d - 2, rng) +
             x3 * x5 * random_form(f, n, with({0, 2, 3, 5}, o), d - 2, rng) +
             x4 * x5 * random_form(f, n, with({1, 2, 4, 5}, o), d - 2, rng) +
             x3 * random_form(f, n, with({0, 3}, o), d - 1, rng) + x4 * random_form(f, n, with({1, 4}, o), d - 1, rng) +
             x5 * random_form(f, n, with({2, 5}, o), d - 1, rng) + random_form(f, n, o, d, rng);
    } else {
        for (const auto& b : cone_condition_space(d, points, planes)) eq += b * small_nonzero(f, rng);
        check_dep_shape(eq);
    }
    ExtremalResult r{Hypersurface(std::move(eq)), std::move(points), std::move(planes), extremal_dimensions(N, d), false, {}, std::nullopt};
    for (std::size_t i = 0; i < 3; ++i) {
        certify(r.x, r.points[i], r.planes[i], false);
        r.tangent_cones.push_back(starpoint::is_star_point(r.x, r.points[i]).good_cone.verdict);
    }
    r.plane_singular = plane_singular(r.x, r.points);
    r.relation_holds = r.dims.locus_dep - r.dims.locus_indep ==
                       4 - static_cast<long long>(N) + binom(static_cast<long long>(N + d) - 6, static_cast<long long>(N) - 1);
    return r;
}

}  // namespace starpt::classify
