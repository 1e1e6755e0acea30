#include "starpt/configspace.hpp"

#include <algorithm>
#include <random>

#include "starpt/starpoint.hpp"

namespace starpt::configspace {

using algebra::Matrix;

long long binom(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

StarTriple validate_triple(const Hyperplane& plane, const ProjPoint& vertex, const MultiPoly& cone, unsigned d) {
    if (plane.size() != vertex.size() || cone.nvars() != plane.size())
        fail(Errc::DimensionMismatch, "plane, vertex and cone live in different spaces");
    if (cone.is_zero() || !cone.is_homogeneous() || cone.degree() != static_cast<int>(d))
        fail(Errc::WrongDegree, "cone must be a nonzero form of degree " + std::to_string(d));
    if (!plane.contains(vertex)) fail(Errc::VertexNotOnPlane, "vertex " + vertex.str() + " is not on " + plane.str());
    Chart chart(plane);
    MultiPoly r = chart.restrict(cone);
    if (r.is_zero()) fail(Errc::NotACone, "cone equation vanishes on the whole plane");
    const Vector v = chart.to_chart(vertex);
    if (!r.eval(v).is_zero() || !geometry::is_cone_with_vertex(r, v))
        fail(Errc::NotACone, "not a cone with vertex " + vertex.str());
    auto good = geometry::good_cone_report(r, v);
    if (good.verdict == geometry::ConeVerdict::SingularOutsideVertex)
        fail(Errc::BadCone, "cone is singular away from its vertex");
    r = r * r.leading().second.inv();
    return StarTriple{plane, vertex, std::move(r), d, good};
}

StarTriple triple_from_star(const geometry::Hypersurface& x, const ProjPoint& p) {
    auto v = starpoint::is_star_point(x, p);
    if (!v.is_star) fail(Errc::NotACone, "point " + p.str() + " is not a star point");
    Chart chart(v.tangent);
    return validate_triple(v.tangent, p, chart.lift(v.cone), x.degree());
}

Configuration Configuration::make(unsigned ambient, unsigned degree, FieldPtr field, std::vector<StarTriple> triples) {
    Configuration c;
    c.ambient = ambient;
    c.degree = degree;
    c.field = field;
    for (const auto& t : triples) {
        if (t.degree != degree) fail(Errc::DegreeMismatch, "triple of degree " + std::to_string(t.degree));
        if (t.plane.size() != ambient + 1) fail(Errc::DimensionMismatch, "triple in the wrong ambient space");
        if (t.plane.field() != field) fail(Errc::FieldMismatch, "triple over a different field");
    }
    const std::size_t e = triples.size();
    c.incidence.assign(e, std::vector<bool>(e, false));
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) {
            c.incidence[i][j] = triples[j].plane.contains(triples[i].vertex);
            if (i != j && c.incidence[i][j]) c.general_position = false;
        }
    c.triples = std::move(triples);
    return c;
}

namespace {

struct TripleConstraints {
    // restriction matrix: chart monomial x ambient monomial
    Matrix r;
    Vector cone;
    std::size_t lead = 0;
};

TripleConstraints constraints_for(const StarTriple& t, const std::vector<Monomial>& ambient_monos) {
    Chart chart = t.chart();
    FieldPtr f = t.plane.field();
    const unsigned n = chart.ambient_vars();
    const auto chart_monos = algebra::monomials_of_degree(n - 1, t.degree);
    TripleConstraints tc{Matrix(chart_monos.size(), ambient_monos.size(), f->zero()),
                         algebra::coefficient_vector(t.cone, chart_monos)};
    for (std::size_t k = 0; k < ambient_monos.size(); ++k) {
        MultiPoly img = chart.restrict(MultiPoly::term(f, n, ambient_monos[k], f->one()));
        for (std::size_t l = 0; l < chart_monos.size(); ++l) {
            auto c = img.coeff(chart_monos[l]);
            if (!c.is_zero()) tc.r(l, k) = c;
        }
    }
    while (tc.cone[tc.lead].is_zero()) ++tc.lead;
    return tc;
}

CycloNum functional(const TripleConstraints& tc, const Vector& u) {
    CycloNum s = u[0].field()->zero();
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!tc.r(tc.lead, k).is_zero() && !u[k].is_zero()) s += tc.r(tc.lead, k) * u[k];
    return s / tc.cone[tc.lead];
}

bool smooth_at(const MultiPoly& w, const ProjPoint& p) {
    if (!w.eval(p.coords()).is_zero()) return true;
    for (unsigned i = 0; i < w.nvars(); ++i)
        if (!w.partial(i).eval(p.coords()).is_zero()) return true;
    return false;
}

}  // namespace

LinearSystem vd_basis(const Configuration& config) {
    LinearSystem sys;
    sys.ambient = config.ambient;
    sys.degree = config.degree;
    const unsigned n = config.ambient + 1;
    sys.monomials = algebra::monomials_of_degree(n, config.degree);
    FieldPtr f = config.field;
    std::vector<Vector> rows;
    for (const auto& t : config.triples) {
        auto tc = constraints_for(t, sys.monomials);
        const CycloNum& cl = tc.cone[tc.lead];
        for (std::size_t k = 0; k < tc.cone.size(); ++k) {
            if (k == tc.lead) continue;
            Vector row(sys.monomials.size(), f->zero());
            bool any = false;
            for (std::size_t j = 0; j < row.size(); ++j) {
                CycloNum v = cl * tc.r(k, j) - tc.cone[k] * tc.r(tc.lead, j);
                if (!v.is_zero()) {
                    row[j] = v;
                    any = true;
                }
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    Matrix m = rows.empty() ? Matrix(0, sys.monomials.size(), f->zero()) : Matrix::from_rows(rows);
    sys.basis = algebra::nullspace(m, f->one());
    for (const auto& b : sys.basis) sys.forms.push_back(algebra::from_coefficients(f, n, sys.monomials, b));
    return sys;
}

bool in_span(const LinearSystem& sys, const MultiPoly& f) {
    if (f.is_zero()) return true;
    if (sys.basis.empty()) return false;
    std::vector<Vector> rows = sys.basis;
    rows.push_back(algebra::coefficient_vector(f, sys.monomials));
    for (const auto& [m, c] : f.terms())
        if (algebra::total_degree(m) != sys.degree) return false;
    return algebra::rank(Matrix::from_rows(rows)) == sys.basis.size();
}

SuitedReport is_suited(const Configuration& config, const LinearSystem& sys, std::uint64_t seed,
                       const std::vector<ProjPoint>& extra_probes) {
    if (sys.basis.empty()) fail(Errc::EmptySystem, "the linear system is empty");
    SuitedReport rep;
    rep.seed = seed;
    FieldPtr f = config.field;
    std::vector<TripleConstraints> tcs;
    for (const auto& t : config.triples) tcs.push_back(constraints_for(t, sys.monomials));

    // lambda[i][j]: functional i on basis vector j
    std::vector<Vector> lambda;
    for (const auto& tc : tcs) {
        Vector row;
        bool nonzero = false;
        for (const auto& b : sys.basis) {
            row.push_back(functional(tc, b));
            nonzero = nonzero || !row.back().is_zero();
        }
        rep.functional_nonzero.push_back(nonzero);
        lambda.push_back(std::move(row));
    }
    rep.suited = std::all_of(rep.functional_nonzero.begin(), rep.functional_nonzero.end(), [](bool b) { return b; });
    if (!rep.suited) {
        rep.label = "not suited";
        return rep;
    }

    const std::size_t size = sys.basis.size();
    auto all_nonzero = [&](const Vector& a) {
        for (const auto& row : lambda) {
            CycloNum s = f->zero();
            for (std::size_t j = 0; j < size; ++j)
                if (!a[j].is_zero() && !row[j].is_zero()) s += a[j] * row[j];
            if (s.is_zero()) return false;
        }
        return true;
    };
    auto form_of = [&](const Vector& a) {
        MultiPoly w(f, config.ambient + 1);
        for (std::size_t j = 0; j < size; ++j)
            if (!a[j].is_zero()) w += sys.forms[j] * a[j];
        return w;
    };
    auto probe_smooth = [&](const MultiPoly& w) {
        for (const auto& t : config.triples)
            if (!smooth_at(w, t.vertex)) return false;
        for (const auto& p : extra_probes)
            if (!smooth_at(w, p)) return false;
        return true;
    };

    std::optional<Vector> fallback;
    auto consider = [&](const Vector& a) {
        if (!all_nonzero(a)) return false;
        MultiPoly w = form_of(a);
        if (probe_smooth(w)) {
            rep.witness = w;
            rep.witness_coefficients = a;
            rep.probe_smooth = true;
            return true;
        }
        if (!fallback) fallback = a;
        return false;
    };

    std::mt19937_64 rng(seed);
    const std::size_t trials = config.size() * size + 1;
    bool done = false;
    for (std::size_t k = 0; k < trials && !done; ++k) {
        Vector a;
        for (std::size_t j = 0; j < size; ++j) a.push_back(f->from_int(static_cast<long>(rng() % 7) - 3));
        done = consider(a);
    }
    // moment curve (1, c, c^2, ...): each functional is a nonzero polynomial
    // in c of degree < size, so one of the first e*size+1 values avoids all roots
    for (long c = 1; !done && c <= static_cast<long>(trials) + 1; ++c) {
        Vector a;
        CycloNum p = f->one();
        for (std::size_t j = 0; j < size; ++j) {
            a.push_back(p);
            p *= f->from_int(c);
        }
        done = consider(a);
    }
    if (!done) {
        if (!fallback) fail(Errc::PostconditionFailed, "witness search failed for a suited system");
        rep.witness = form_of(*fallback);
        rep.witness_coefficients = *fallback;
    }
    rep.label = rep.probe_smooth ? "suited + probe-smooth" : "suited";
    return rep;
}

SuitedReport is_suited(const Configuration& config, std::uint64_t seed) {
    return is_suited(config, vd_basis(config), seed);
}

DimReport dim_report(const Configuration& config, const LinearSystem& sys) {
    const long long e = static_cast<long long>(config.size());
    const long long d = config.degree, N = config.ambient;
    const long long expected = e <= d ? binom(d - e + N, N) : 0;
    return {sys.projective_dim(), expected, sys.projective_dim() == expected};
}

DimReport dim_report(const Configuration& config) { return dim_report(config, vd_basis(config)); }

RestrictionReport restriction_dim(const Configuration& config, const LinearSystem& sys, const Hyperplane& plane) {
    for (std::size_t i = 0; i < config.size(); ++i)
        if (plane.contains(config.triples[i].vertex))
            fail(Errc::PointOnPlane, "vertex " + std::to_string(i + 1) + " lies on the plane");
    Chart chart(plane);
    FieldPtr f = config.field;
    const unsigned nc = chart.chart_vars();
    const auto chart_monos = algebra::monomials_of_degree(nc, config.degree);
    std::vector<Vector> image;
    for (const auto& w : sys.forms) image.push_back(algebra::coefficient_vector(chart.restrict(w), chart_monos));
    const std::size_t r = image.empty() ? 0 : algebra::rank(Matrix::from_rows(image));

    const long long e = static_cast<long long>(config.size());
    const long long d = config.degree, N = config.ambient;
    RestrictionReport rep{static_cast<long>(r) - 1, e <= d ? binom(d - e + N - 1, N - 1) : 0, false, true};
    rep.match = rep.projective_dim == rep.expected;
    if (e <= d) {
        MultiPoly prod = MultiPoly::constant(f, nc, f->one());
        for (const auto& t : config.triples) prod = prod * chart.restrict(t.plane.form());
        std::vector<Vector> rows = image;
        for (const auto& m : algebra::monomials_of_degree(nc, static_cast<unsigned>(d - e)))
            rows.push_back(algebra::coefficient_vector(prod * MultiPoly::term(f, nc, m, f->one()), chart_monos));
        rep.contains_products = !rows.empty() && algebra::rank(Matrix::from_rows(rows)) == r;
    }
    return rep;
}

ExtendReport extend_candidates(const Configuration& config, const LinearSystem& sys, const Hyperplane& plane,
                               const ProjPoint& p) {
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (plane.contains(config.triples[i].vertex))
            fail(Errc::PointOnPlane, "vertex " + std::to_string(i + 1) + " lies on the new plane");
        if (config.triples[i].plane.contains(p))
            fail(Errc::PointOnPlane, "new vertex lies on plane " + std::to_string(i + 1));
    }
    Chart chart(plane);
    ExtendReport rep{chart, {}, {}};
    FieldPtr f = config.field;
    const unsigned nc = chart.chart_vars();
    const auto chart_monos = algebra::monomials_of_degree(nc, config.degree);
    const Vector vertex = chart.to_chart(p);

    std::vector<Vector> image;
    for (const auto& w : sys.forms) image.push_back(algebra::coefficient_vector(chart.restrict(w), chart_monos));
    if (image.empty()) return rep;
    auto ech = algebra::rref(Matrix::from_rows(image));
    std::vector<MultiPoly> gens;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
        gens.push_back(algebra::from_coefficients(f, nc, chart_monos, ech.reduced.row(i)));

    // multiplicity >= d at the vertex: after moving it to e0, no term may contain Y0
    const Matrix move = geometry::basis_completion(vertex);
    std::vector<MultiPoly> moved;
    for (const auto& g : gens) moved.push_back(algebra::compose_linear(g, move));
    std::vector<Monomial> bad;
    for (const auto& m : chart_monos)
        if (m[0] > 0) bad.push_back(m);
    Matrix cond(bad.size(), gens.size(), f->zero());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < bad.size(); ++i) cond(i, j) = moved[j].coeff(bad[i]);
    for (const auto& a : algebra::nullspace(cond, f->one())) {
        MultiPoly g(f, nc);
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (!a[j].is_zero()) g += gens[j] * a[j];
        rep.verdicts.push_back(geometry::good_cone_report(g, vertex));
        rep.basis.push_back(std::move(g));
    }
    return rep;
}

long long expected_codim(long long N, long long d, long long e) {
    const long long full = binom(N + d - 1, N - 1);
    long long f = 0;
    for (long long i = 2; i <= std::min(e, d + 1); ++i) f += full - binom(N + d - i, N - 1) - 1;
    if (e > d + 1) f += (e - d - 1) * (full - 1);
    return f;
}

long long triple_space_dim(long long N, long long d, long long e) {
    return e * (2 * N + binom(N + d - 2, N - 2) - 2);
}

}  // namespace starpt::configspace
