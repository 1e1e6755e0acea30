#include <algorithm>

#include "starpt/geometry.hpp"

namespace starpt::geometry {

using algebra::Monomial;

namespace {

Vector normalized(Vector v, Errc on_zero, const char* what) {
    if (v.empty()) fail(Errc::DimensionMismatch, std::string(what) + " with no coordinates");
    auto it = std::find_if(v.begin(), v.end(), [](const CycloNum& c) { return !c.is_zero(); });
    if (it == v.end()) fail(on_zero, std::string(what) + " with all coordinates zero");
    const CycloNum inv = it->inv();
    for (auto& c : v) c *= inv;
    return v;
}

std::string coord_str(const CycloNum& c) { return c.is_rational() ? c.str() : "(" + c.str() + ")"; }

}  // namespace

ProjPoint::ProjPoint(Vector coords) : c_(normalized(std::move(coords), Errc::ZeroPoint, "point")) {}

ProjPoint ProjPoint::unit(FieldPtr field, unsigned size, unsigned i) {
    Vector v(size, field->zero());
    v.at(i) = field->one();
    return ProjPoint(std::move(v));
}

unsigned ProjPoint::support() const noexcept {
    return static_cast<unsigned>(std::count_if(c_.begin(), c_.end(), [](const CycloNum& c) { return !c.is_zero(); }));
}

std::string ProjPoint::str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ":" : "") + coord_str(c_[i]);
    return s;
}

Hyperplane::Hyperplane(Vector coeffs) : a_(normalized(std::move(coeffs), Errc::ZeroPolynomial, "hyperplane")) {
    while (a_[pivot_].is_zero()) ++pivot_;
}

Hyperplane Hyperplane::from_form(const MultiPoly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "hyperplane from the zero form");
    if (f.degree() != 1 || !f.is_homogeneous()) fail(Errc::WrongDegree, "hyperplane needs a linear form, got " + f.str());
    Vector a;
    for (unsigned i = 0; i < f.nvars(); ++i) {
        Monomial m{};
        m[i] = 1;
        a.push_back(f.coeff(m));
    }
    return Hyperplane(std::move(a));
}

MultiPoly Hyperplane::form() const { return MultiPoly::linear(field(), a_); }

CycloNum Hyperplane::eval(const Vector& x) const {
    if (x.size() != a_.size()) fail(Errc::DimensionMismatch, "point and hyperplane in different spaces");
    CycloNum s = field()->zero();
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!a_[i].is_zero()) s += a_[i] * x[i];
    return s;
}

ProjLine::ProjLine(ProjPoint a, ProjPoint b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) fail(Errc::DimensionMismatch, "line through points of different spaces");
    if (a_ == b_) fail(Errc::DegenerateLine, "line through a repeated point " + a_.str());
}

ProjPoint ProjLine::point(const CycloNum& s, const CycloNum& u) const {
    Vector v;
    for (std::size_t i = 0; i < a_.size(); ++i) v.push_back(s * a_[i] + u * b_[i]);
    return ProjPoint(std::move(v));
}

bool ProjLine::contains(const ProjPoint& p) const {
    auto m = Matrix::from_rows({a_.coords(), b_.coords(), p.coords()});
    return algebra::rank(m) == 2;
}

std::pair<CycloNum, CycloNum> ProjLine::parameter(const ProjPoint& p) const {
    auto m = Matrix::from_rows({a_.coords(), b_.coords(), p.coords()}).transpose();
    auto ker = algebra::nullspace(m, p.field()->one());
    if (ker.size() != 1) fail(Errc::NotOnLine, "point " + p.str() + " is not on the line " + str());
    // s*A + u*B + c*P = 0 with c != 0 since A, B are independent
    const CycloNum c = -ker[0][2].inv();
    CycloNum s = ker[0][0] * c, u = ker[0][1] * c;
    if (!s.is_zero()) {
        const CycloNum inv = s.inv();
        return {s * inv, u * inv};
    }
    return {s, p.field()->one()};
}

Hypersurface::Hypersurface(MultiPoly equation) : f_(std::move(equation)) {
    if (f_.is_zero()) fail(Errc::ZeroPolynomial, "hypersurface with zero equation");
    if (!f_.is_homogeneous()) fail(Errc::NotHomogeneous, "hypersurface equation is not homogeneous");
    if (f_.degree() < 1) fail(Errc::WrongDegree, "hypersurface equation has degree 0");
}

Chart::Chart(Hyperplane plane) : plane_(std::move(plane)) {
    const unsigned n = ambient_vars();
    FieldPtr f = plane_.field();
    emb_ = Matrix(n, n - 1, f->zero());
    for (unsigned k = 0; k + 1 < n; ++k) {
        const unsigned i = ambient_index(k);
        emb_(i, k) = f->one();
        emb_(pivot(), k) = -plane_.coeffs()[i];
    }
}

Vector Chart::to_chart(const ProjPoint& p) const {
    if (!plane_.contains(p)) fail(Errc::VertexNotOnPlane, "point " + p.str() + " is not on " + plane_.str());
    Vector y;
    for (unsigned k = 0; k < chart_vars(); ++k) y.push_back(p[ambient_index(k)]);
    return y;
}

ProjPoint Chart::from_chart(const Vector& y) const {
    Vector x(ambient_vars(), plane_.field()->zero());
    for (unsigned i = 0; i < ambient_vars(); ++i)
        for (unsigned k = 0; k < chart_vars(); ++k)
            if (!emb_(i, k).is_zero()) x[i] += emb_(i, k) * y[k];
    return ProjPoint(std::move(x));
}

MultiPoly Chart::restrict(const MultiPoly& f) const { return algebra::compose_linear(f, emb_); }

MultiPoly Chart::lift(const MultiPoly& g) const {
    std::vector<unsigned> slot;
    for (unsigned k = 0; k < chart_vars(); ++k) slot.push_back(ambient_index(k));
    return g.remap(ambient_vars(), slot);
}

Hyperplane tangent_hyperplane(const Hypersurface& x, const ProjPoint& p) {
    const MultiPoly& f = x.equation();
    if (p.size() != f.nvars()) fail(Errc::DimensionMismatch, "point and hypersurface in different spaces");
    if (!x.contains(p)) fail(Errc::NotOnHypersurface, "point " + p.str() + " is not on the hypersurface");
    Vector grad;
    bool all_zero = true;
    for (unsigned i = 0; i < f.nvars(); ++i) {
        grad.push_back(f.partial(i).eval(p.coords()));
        all_zero = all_zero && grad.back().is_zero();
    }
    if (all_zero) fail(Errc::SingularPoint, "hypersurface is singular at " + p.str());
    return Hyperplane(std::move(grad));
}

Restriction restrict_to_hyperplane(const MultiPoly& f, const Hyperplane& plane) {
    Chart chart(plane);
    MultiPoly r = chart.restrict(f);
    return {std::move(r), std::move(chart)};
}

Matrix basis_completion(const Vector& p) {
    const std::size_t n = p.size();
    FieldPtr f = p.at(0).field();
    std::vector<Vector> cols{p};
    for (std::size_t j = 0; j < n && cols.size() < n; ++j) {
        Vector e(n, f->zero());
        e[j] = f->one();
        cols.push_back(e);
        if (algebra::rank(Matrix::from_rows(cols)) < cols.size()) cols.pop_back();
    }
    if (cols.size() < n) fail(Errc::ZeroPoint, "cannot complete the zero vector to a basis");
    return Matrix::from_rows(cols).transpose();
}

unsigned multiplicity_at(const MultiPoly& g, const Vector& p) {
    if (g.is_zero()) fail(Errc::ZeroPolynomial, "multiplicity of the zero polynomial");
    if (p.size() != g.nvars()) fail(Errc::DimensionMismatch, "point and polynomial in different spaces");
    MultiPoly h = algebra::compose_linear(g, basis_completion(p));
    // after Y0 -> 1 a term Y0^a * m has degree deg(m) = total - a
    unsigned best = ~0u;
    for (const auto& [m, c] : h.terms()) best = std::min(best, algebra::total_degree(m) - m[0]);
    return best;
}

bool is_cone_with_vertex(const MultiPoly& g, const Vector& p) {
    if (g.is_zero()) fail(Errc::ZeroPolynomial, "cone test on the zero polynomial");
    if (!g.eval(p).is_zero()) fail(Errc::NotApplicable, "vertex candidate is not on Z(g)");
    return multiplicity_at(g, p) == static_cast<unsigned>(g.degree());
}

bool is_cone_by_derivative(const MultiPoly& g, const Vector& p) {
    if (g.is_zero()) fail(Errc::ZeroPolynomial, "cone test on the zero polynomial");
    if (!g.eval(p).is_zero()) fail(Errc::NotApplicable, "vertex candidate is not on Z(g)");
    MultiPoly dir(g.field(), g.nvars());
    for (unsigned i = 0; i < g.nvars(); ++i)
        if (!p[i].is_zero()) dir += g.partial(i) * p[i];
    return dir.is_zero();
}

BinaryForm restrict_to_line(const MultiPoly& f, const ProjLine& line) {
    if (line.a().size() != f.nvars()) fail(Errc::DimensionMismatch, "line and polynomial in different spaces");
    FieldPtr fld = f.field();
    Matrix m(f.nvars(), 2, fld->zero());
    for (unsigned i = 0; i < f.nvars(); ++i) {
        m(i, 0) = line.a()[i];
        m(i, 1) = line.b()[i];
    }
    MultiPoly g = algebra::compose_linear(f, m);
    const unsigned d = f.is_zero() ? 0 : static_cast<unsigned>(f.degree());
    Vector c(d + 1, fld->zero());
    for (const auto& [mono, coef] : g.terms()) c[mono[1]] += coef;
    return {d, algebra::UniPoly<CycloNum>(std::move(c))};
}

}  // namespace starpt::geometry
