// Three-point configurations: incidence routing, the Case I parameter, the
// tridiagonal system behind it, and the component table.

#include <algorithm>
#include <numeric>

#include "starpt/classify.hpp"

namespace starpt::classify {

using algebra::CycloField;
using algebra::Vector;
using configspace::binom;

std::string_view kind_name(Kind k) noexcept {
    switch (k) {
        case Kind::Vt: return "Vt";
        case Kind::V1: return "V1";
        case Kind::TwoGeneral: return "TwoGeneral";
        case Kind::TwoLineInX: return "TwoLineInX";
        case Kind::Intermediate: return "Intermediate";
        case Kind::ExtremalIndep: return "ExtremalIndep";
        case Kind::ExtremalDep: return "ExtremalDep";
        case Kind::NotSuited: return "NotSuited";
        case Kind::Unclassified: return "Unclassified";
    }
    return "?";
}

long long vt_dimension(long long N, long long d, unsigned theta) {
    long long s = 6 * N - 5;
    for (long long j = 0; j <= d; j += theta) s += binom(N + d - 3 - j, N - 3);
    return s;
}

long long v1_dimension(long long N, long long d) { return 3 * N + 2 * (N - 1) + binom(N + d - 2, N - 2) - 1; }

long long three_point_expected(long long N, long long d) {
    return configspace::triple_space_dim(N, d, 3) - configspace::expected_codim(N, d, 3);
}

// ---- tridiagonal system ----------------------------------------------------

Matrix tridiag_matrix(unsigned j, const CycloNum& t) {
    if (j < 2) fail(Errc::DimensionMismatch, "tridiagonal system needs j >= 2");
    FieldPtr f = t.field();
    const std::size_t m = j - 1;
    Matrix a(m, m, f->zero());
    for (std::size_t i = 0; i < m; ++i) {
        a(i, i) = t + f->one();
        if (i + 1 < m) {
            a(i, i + 1) = f->from_int(-1);
            a(i + 1, i) = -t;
        }
    }
    return a;
}

TridiagResult tridiag_solve(unsigned j, const CycloNum& t) {
    const Matrix a = tridiag_matrix(j, t);
    FieldPtr f = t.field();
    TridiagResult r{f->zero(), std::nullopt};
    CycloNum power = f->one();
    Vector partial;  // 1, 1+t, 1+t+t^2, ...
    for (unsigned k = 0; k < j; ++k) {
        r.det += power;
        if (k + 1 < j) partial.push_back(r.det);
        power *= t;
    }
    if (algebra::determinant(a, f->one()) != r.det)
        fail(Errc::PostconditionFailed, "closed-form determinant disagrees with elimination");
    const auto ns = algebra::nullspace(a, f->one());
    if (r.det.is_zero()) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            CycloNum s = f->zero();
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * partial[k];
            if (!s.is_zero()) fail(Errc::PostconditionFailed, "partial sums do not solve the system");
        }
        if (ns.size() != 1) fail(Errc::PostconditionFailed, "nullspace is not one-dimensional");
        r.solution = std::move(partial);
    } else if (!ns.empty()) {
        fail(Errc::PostconditionFailed, "nonzero determinant with a nontrivial nullspace");
    }
    return r;
}

// ---- three points ----------------------------------------------------------

CycloNum case1_parameter(const Configuration& config) {
    if (config.size() != 3) fail(Errc::DimensionMismatch, "Case I needs three triples");
    const auto& t = config.triples;
    auto pi = [&](int i, int j) { return t[i].plane.eval(t[j].vertex.coords()); };
    const CycloNum den = pi(2, 0) * pi(0, 1) * pi(1, 2);
    if (den.is_zero()) fail(Errc::NotApplicable, "vertices are not in general position");
    return -(pi(2, 1) * pi(0, 2) * pi(1, 0)) / den;
}

namespace {

std::size_t rank_of(const std::vector<Vector>& rows) { return algebra::rank(Matrix::from_rows(rows)); }

// The point with normalized coordinates (0:0:1:0:...) in the Case I chart.
ProjPoint case1_danger_point(const Configuration& config) {
    const auto& t = config.triples;
    FieldPtr f = config.field;
    const std::size_t n = config.ambient + 1;
    auto pi = [&](int i, int j) { return t[i].plane.eval(t[j].vertex.coords()); };
    auto scaled = [](const Vector& v, const CycloNum& s) {
        Vector out = v;
        for (auto& x : out) x *= s;
        return out;
    };
    const Vector y0 = scaled(t[1].plane.coeffs(), pi(1, 0).inv());
    const Vector y1 = scaled(t[0].plane.coeffs(), pi(2, 1) / (pi(2, 0) * pi(0, 1)));
    const Vector y3 = scaled(t[2].plane.coeffs(), pi(2, 0).inv());
    Vector y2(n, f->zero());
    for (std::size_t k = 0; k < n; ++k) y2[k] = y0[k] + y1[k] - y3[k];
    std::vector<Vector> rows{y0, y1, y2};
    Matrix pts = Matrix::from_rows({t[0].vertex.coords(), t[1].vertex.coords(), t[2].vertex.coords()});
    for (const auto& a : algebra::nullspace(pts, f->one())) rows.push_back(a);
    const Matrix back = algebra::inverse(Matrix::from_rows(rows), f->one());
    return ProjPoint(back.col(2));
}

ComponentLabel with_suitedness(ComponentLabel label, const Configuration& config,
                               const std::vector<ProjPoint>& probes = {}) {
    auto sys = configspace::vd_basis(config);
    if (sys.basis.empty()) {
        label.detail += "; empty linear system";
        label.kind = Kind::NotSuited;
        return label;
    }
    auto rep = configspace::is_suited(config, sys, configspace::kWitnessSeed, probes);
    label.detail += "; " + rep.label;
    if (!rep.suited) label.kind = Kind::NotSuited;
    return label;
}

}  // namespace

ComponentLabel classify_three(const Configuration& config) {
    if (config.size() != 3) fail(Errc::DimensionMismatch, "classify_three needs exactly three triples");
    const auto& t = config.triples;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (t[i].vertex == t[j].vertex)
                fail(Errc::DegenerateTriple, "triples " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                 " share their vertex");
    const long long N = config.ambient, d = config.degree;
    ComponentLabel label;
    label.expected = three_point_expected(N, d);

    const bool collinear = rank_of({t[0].vertex.coords(), t[1].vertex.coords(), t[2].vertex.coords()}) < 3;
    const bool planes_dep = rank_of({t[0].plane.coeffs(), t[1].plane.coeffs(), t[2].plane.coeffs()}) < 3;

    if (config.general_position) {
        if (!collinear && !planes_dep) {
            const CycloNum tv = case1_parameter(config);
            label.t = tv;
            const bool qualifies = !tv.is_one() && (tv.pow(d).is_one() || tv.pow(d - 1).is_one());
            if (!qualifies) {
                label.kind = Kind::NotSuited;
                label.detail = "Case I; t = " + tv.str() + " is not a root of (t^d-1)(t^(d-1)-1)/(t-1)";
                return label;
            }
            label.kind = Kind::Vt;
            label.theta = *algebra::root_of_unity_order(tv);
            label.dimension = vt_dimension(N, d, label.theta);
            label.detail = "Case I";
            label = with_suitedness(std::move(label), config, {case1_danger_point(config)});
        } else if (!planes_dep) {
            label.kind = Kind::V1;
            label.dimension = v1_dimension(N, d);
            label.detail = "Case II";
            label = with_suitedness(std::move(label), config);
        } else if (!collinear) {
            label.kind = Kind::NotSuited;
            label.detail = "Case III; the second vertex is singular on every member";
            return label;
        } else {
            label.kind = Kind::V1;
            label.dimension = v1_dimension(N, d);
            label.detail = "Case IV (inside V1)";
            label = with_suitedness(std::move(label), config);
        }
        label.is_expected = label.kind != Kind::NotSuited && label.dimension == label.expected;
        return label;
    }

    const auto& inc = config.incidence;
    bool all = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) all = all && inc[i][j];
    if (all) {
        if (N <= 4) {
            label.kind = Kind::NotSuited;
            label.detail = "extremal incidence needs N >= 5";
            return label;
        }
        const auto dims = extremal_dimensions(N, d);
        label.kind = planes_dep ? Kind::ExtremalDep : Kind::ExtremalIndep;
        label.dimension = planes_dep ? dims.config_dep : dims.config_indep;
        label.detail = planes_dep ? "extremal, dependent planes" : "extremal, independent planes";
        label = with_suitedness(std::move(label), config);
        label.is_expected = label.kind != Kind::NotSuited && label.dimension == label.expected;
        return label;
    }
    // one vertex a off the other planes, the other two on each other's planes
    for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3, c = (a + 2) % 3;
        if (inc[a][b] || inc[a][c] || inc[b][a] || inc[c][a]) continue;
        if (!inc[b][c] || !inc[c][b]) continue;
        label.kind = Kind::Intermediate;
        label.dimension = intermediate_dimension(N, d);
        label.detail = "intermediate, isolated vertex " + std::to_string(a + 1);
        label = with_suitedness(std::move(label), config);
        label.is_expected = label.kind != Kind::NotSuited && label.dimension == label.expected;
        return label;
    }
    label.kind = Kind::Unclassified;
    label.detail = "incidence pattern outside the classified cases";
    return label;
}

// ---- component table -------------------------------------------------------

std::vector<ComponentLabel> component_table(unsigned d, unsigned N) {
    if (d < 3) fail(Errc::WrongDegree, "component table needs d >= 3");
    if (N < 3) fail(Errc::DimensionMismatch, "component table needs N >= 3");
    const long long expected = three_point_expected(N, d);
    std::vector<ComponentLabel> out;
    for (unsigned m : {d, d - 1}) {
        for (unsigned theta = 2; theta <= m; ++theta) {
            if (m % theta != 0) continue;
            FieldPtr f = CycloField::get(theta);
            for (unsigned k = 1; k < theta; ++k) {
                if (std::gcd(k, theta) != 1) continue;
                ComponentLabel c;
                c.kind = Kind::Vt;
                c.t = f->root_of_unity(k);
                c.theta = theta;
                c.dimension = vt_dimension(N, d, theta);
                c.expected = expected;
                c.is_expected = c.dimension == expected;
                c.detail = m == d ? "t^d = 1" : "t^(d-1) = 1";
                out.push_back(std::move(c));
            }
        }
    }
    ComponentLabel v1;
    v1.kind = Kind::V1;
    v1.dimension = v1_dimension(N, d);
    v1.expected = expected;
    v1.is_expected = v1.dimension == expected;
    v1.detail = "collinear vertices";
    out.push_back(std::move(v1));
    return out;
}

}  // namespace starpt::classify
