// Smoothness of a cone away from its vertex.
//
// After moving the vertex to (1:0:...:0) the cone equation no longer involves
// the first variable and is the cone over a base form b in the remaining m
// variables. The cone is smooth outside the vertex iff Z(b) is smooth, i.e.
// iff the partials of b have no common projective zero. For m = 2 this is the
// squarefree test; for m >= 3 it is decided with a Macaulay matrix when the
// matrix fits the budget, and by point probes otherwise.

#include <random>

#include "starpt/geometry.hpp"

namespace starpt::geometry {

using algebra::Monomial;
using algebra::UniPoly;

std::string_view verdict_name(ConeVerdict v) noexcept {
    switch (v) {
        case ConeVerdict::Good: return "Good";
        case ConeVerdict::NotCone: return "NotCone";
        case ConeVerdict::SingularOutsideVertex: return "SingularOutsideVertex";
        case ConeVerdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool binary_squarefree(const MultiPoly& b) {
    // b(x, 1) as a polynomial in x; the gap to the total degree is the
    // multiplicity of the root (1:0)
    FieldPtr f = b.field();
    const unsigned d = static_cast<unsigned>(b.degree());
    Vector c(d + 1, f->zero());
    for (const auto& [m, coef] : b.terms()) c[m[0]] += coef;
    UniPoly<CycloNum> u(std::move(c));
    const unsigned at_inf = d - static_cast<unsigned>(u.degree());
    if (at_inf > 1) return false;
    if (u.degree() <= 1) return true;
    return gcd(u, u.derivative()).degree() == 0;
}

bool singular_probe(const MultiPoly& b, const std::vector<MultiPoly>& grads, const Vector& q) {
    if (!b.eval(q).is_zero()) return false;
    for (const auto& g : grads)
        if (!g.eval(q).is_zero()) return false;
    return true;
}

}  // namespace

bool no_common_zero(const std::vector<MultiPoly>& forms) {
    if (forms.empty()) fail(Errc::DimensionMismatch, "no forms given");
    const unsigned n = forms[0].nvars();
    if (forms.size() != n) fail(Errc::DimensionMismatch, "need as many forms as variables");
    int delta = -1;
    for (const auto& g : forms) {
        if (g.is_zero()) continue;
        if (delta >= 0 && g.degree() != delta) fail(Errc::DegreeMismatch, "forms of different degrees");
        delta = g.degree();
    }
    if (delta < 0) return false;
    if (delta == 0) return true;
    FieldPtr f = forms[0].field();
    const unsigned D = n * static_cast<unsigned>(delta - 1) + 1;
    const auto target = algebra::monomials_of_degree(n, D);
    const auto shifts = algebra::monomials_of_degree(n, D - static_cast<unsigned>(delta));
    std::vector<Vector> rows;
    for (const auto& g : forms) {
        if (g.is_zero()) continue;
        for (const auto& s : shifts) rows.push_back(algebra::coefficient_vector(MultiPoly::term(f, n, s, f->one()) * g, target));
    }
    return algebra::rank(Matrix::from_rows(rows)) == target.size();
}

GoodConeReport good_cone_report(const MultiPoly& g, const Vector& vertex) {
    if (g.is_zero()) fail(Errc::ZeroPolynomial, "good-cone test on the zero polynomial");
    if (vertex.size() != g.nvars()) fail(Errc::DimensionMismatch, "vertex and cone in different spaces");
    (void)ProjPoint(vertex);  // rejects the zero vector
    if (!g.eval(vertex).is_zero() || !is_cone_by_derivative(g, vertex)) return {ConeVerdict::NotCone, "not-cone"};

    const unsigned n = g.nvars();
    MultiPoly h = algebra::compose_linear(g, basis_completion(vertex));
    std::vector<unsigned> slot(n, 0);
    for (unsigned i = 1; i < n; ++i) slot[i] = i - 1;
    if (h.degree_in(0) != 0) fail(Errc::PostconditionFailed, "cone still depends on the vertex coordinate");
    const unsigned m = n - 1;
    MultiPoly base = h.remap(m, slot);
    const unsigned d = static_cast<unsigned>(g.degree());

    if (m <= 1 || d <= 1) return {ConeVerdict::Good, "trivial"};
    if (m == 2)
        return {binary_squarefree(base) ? ConeVerdict::Good : ConeVerdict::SingularOutsideVertex, "binary-squarefree"};

    std::vector<MultiPoly> grads;
    for (unsigned i = 0; i < m; ++i) grads.push_back(base.partial(i));
    const std::size_t D = m * (d - 2) + 1;
    if (binom(D + m - 1, m - 1) <= kMacaulayBudget)
        return {no_common_zero(grads) ? ConeVerdict::Good : ConeVerdict::SingularOutsideVertex, "macaulay"};

    FieldPtr f = g.field();
    std::vector<Vector> probes;
    for (unsigned i = 0; i < m; ++i) {
        Vector e(m, f->zero());
        e[i] = f->one();
        probes.push_back(e);
    }
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = i + 1; j < m; ++j) {
            Vector e(m, f->zero());
            e[i] = f->one();
            e[j] = f->one();
            probes.push_back(e);
        }
    std::mt19937_64 rng(kProbeSeed);
    for (unsigned k = 0; k < kProbeCount; ++k) {
        Vector q;
        for (unsigned i = 0; i < m; ++i) q.push_back(f->from_int(static_cast<long>(rng() % 19) - 9));  // portable, unlike std distributions
        probes.push_back(q);
    }
    GoodConeReport rep{ConeVerdict::Unknown, "probe", static_cast<unsigned>(probes.size()), kProbeSeed};
    for (const auto& q : probes) {
        bool zero = true;
        for (const auto& c : q) zero = zero && c.is_zero();
        if (!zero && singular_probe(base, grads, q)) {
            rep.verdict = ConeVerdict::SingularOutsideVertex;
            break;
        }
    }
    return rep;
}

}  // namespace starpt::geometry
