// Normal forms of two star points.
//
// General position: coordinates with P1 = e0, P2 = e1, plane 1 = {X1 = 0},
// plane 2 = {X0 = 0}; every member is X0*X1*g01 + g(X2..XN).
// Both vertices on both planes (the joining line lies in X): P1 = e0,
// P2 = e1, plane 1 = {X2 = 0}, plane 2 = {X3 = 0}; every member is
// X2*X3*g23 + X2*g2(X0,X2,X4..) + X3*g3(X1,X3,X4..) + g(X4..).

#include <sstream>

#include "starpt/classify.hpp"

namespace starpt::classify {

using algebra::Monomial;
using algebra::Vector;

namespace {

// Columns p, q, then standard vectors in index order that raise the rank.
Matrix complete_pair(const Vector& p, const Vector& q) {
    FieldPtr f = p[0].field();
    const std::size_t n = p.size();
    std::vector<Vector> cols{p, q};
    for (std::size_t j = 0; j < n && cols.size() < n; ++j) {
        Vector e(n, f->zero());
        e[j] = f->one();
        cols.push_back(e);
        if (algebra::rank(Matrix::from_rows(cols)) < cols.size()) cols.pop_back();
    }
    return Matrix::from_rows(cols).transpose();
}

Vector scaled(const Vector& v, const CycloNum& s) {
    Vector out = v;
    for (auto& x : out) x *= s;
    return out;
}

struct Split {
    std::vector<std::pair<std::string, MultiPoly>> parts;
    bool ok = true;
};

Split split_general(const MultiPoly& f) {
    const unsigned n = f.nvars();
    Split s{{{"X0*X1", MultiPoly(f.field(), n)}, {"1", MultiPoly(f.field(), n)}}, true};
    for (const auto& [m, c] : f.terms()) {
        if (m[0] > 0 && m[1] > 0) {
            Monomial q = m;
            --q[0];
            --q[1];
            s.parts[0].second.add_term(q, c);
        } else if (m[0] == 0 && m[1] == 0) {
            s.parts[1].second.add_term(m, c);
        } else {
            s.ok = false;
        }
    }
    return s;
}

Split split_line_in_x(const MultiPoly& f) {
    const unsigned n = f.nvars();
    FieldPtr fl = f.field();
    Split s{{{"X2*X3", MultiPoly(fl, n)}, {"X2", MultiPoly(fl, n)}, {"X3", MultiPoly(fl, n)}, {"1", MultiPoly(fl, n)}},
            true};
    for (const auto& [m, c] : f.terms()) {
        Monomial q = m;
        if (m[2] > 0 && m[3] > 0) {
            --q[2];
            --q[3];
            s.parts[0].second.add_term(q, c);
        } else if (m[2] > 0) {
            if (m[1] > 0) s.ok = false;
            --q[2];
            s.parts[1].second.add_term(q, c);
        } else if (m[3] > 0) {
            if (m[0] > 0) s.ok = false;
            --q[3];
            s.parts[2].second.add_term(q, c);
        } else {
            if (m[0] > 0 || m[1] > 0) s.ok = false;
            s.parts[3].second.add_term(q, c);
        }
    }
    return s;
}

MultiPoly factor_of(const std::string& name, FieldPtr f, unsigned n) {
    MultiPoly out = MultiPoly::constant(f, n, f->one());
    if (name == "1") return out;
    std::istringstream in(name);
    std::string tok;
    while (std::getline(in, tok, '*')) out = out * MultiPoly::variable(f, n, static_cast<unsigned>(std::stoul(tok.substr(1))));
    return out;
}

}  // namespace

NormalForm2 normal_form_two(const Configuration& config) {
    if (config.size() != 2) fail(Errc::DimensionMismatch, "normal_form_two needs exactly two triples");
    const auto& t1 = config.triples[0];
    const auto& t2 = config.triples[1];
    if (t1.vertex == t2.vertex) fail(Errc::DegenerateTriple, "the two vertices coincide");
    const bool p1_on_2 = config.incidence[0][1], p2_on_1 = config.incidence[1][0];
    if (p1_on_2 != p2_on_1)
        fail(Errc::NotSuited, "only one vertex lies on the other plane; every member is singular at a vertex");

    auto sys = configspace::vd_basis(config);
    if (sys.basis.empty()) fail(Errc::NotSuited, "the linear system is empty");
    auto suited = configspace::is_suited(config, sys);
    if (!suited.suited) fail(Errc::NotSuited, "configuration is not suited");

    FieldPtr f = config.field;
    const unsigned n = config.ambient + 1;
    const Vector& p1 = t1.vertex.coords();
    const Vector& p2 = t2.vertex.coords();
    const Hyperplane& pi1 = t1.plane;
    const Hyperplane& pi2 = t2.plane;
    const Matrix dual = algebra::inverse(complete_pair(p1, p2), f->one());

    std::vector<Vector> rows;
    Shape shape;
    if (!p1_on_2) {
        shape = Shape::General;
        rows.push_back(scaled(pi2.coeffs(), pi2.eval(p1).inv()));
        rows.push_back(scaled(pi1.coeffs(), pi1.eval(p2).inv()));
        for (unsigned i = 2; i < n; ++i) rows.push_back(dual.row(i));
    } else {
        if (pi1 == pi2) fail(Errc::DegenerateTriple, "both triples share their plane");
        shape = Shape::LineInX;
        rows = {dual.row(0), dual.row(1), pi1.coeffs(), pi2.coeffs()};
        for (unsigned i = 2; i < n && rows.size() < n; ++i) {
            rows.push_back(dual.row(i));
            if (algebra::rank(Matrix::from_rows(rows)) < rows.size()) rows.pop_back();
        }
    }
    const Matrix change = Matrix::from_rows(rows);
    const Matrix back = algebra::inverse(change, f->one());

    auto split = [&](const MultiPoly& g) { return shape == Shape::General ? split_general(g) : split_line_in_x(g); };
    for (const auto& b : sys.forms)
        if (!split(algebra::compose_linear(b, back)).ok)
            fail(Errc::ShapeViolation, "a member of the system does not have the two-point normal form");

    MultiPoly w = algebra::compose_linear(*suited.witness, back);
    auto parts = split(w).parts;
    return NormalForm2{shape, change, std::move(w), std::move(parts), sys.projective_dim(), std::move(suited)};
}

MultiPoly reassemble(const NormalForm2& nf) {
    FieldPtr f = nf.witness.field();
    const unsigned n = nf.witness.nvars();
    MultiPoly out(f, n);
    for (const auto& [name, cof] : nf.parts) out += factor_of(name, f, n) * cof;
    return out;
}

}  // namespace starpt::classify
