// Roots of univariate polynomials over Q(zeta_n) that lie in the field.
//
// Squarefree decomposition (Yun) first; each squarefree part is then peeled
// by trial roots: caller hints, 0, rational-root-theorem candidates when the
// part has rational coefficients, and small rational multiples of the roots
// of unity of the field. What is left is solved directly in degrees 1 and 2
// and reported as unresolved otherwise.

#include <algorithm>

#include "starpt/starpoint.hpp"

namespace starpt::starpoint {

using algebra::FieldPtr;
using algebra::Integer;
using algebra::Rational;

namespace {

using Poly = UniPoly<CycloNum>;

std::vector<Poly> yun(const Poly& p) {
    // p = c * a1 * a2^2 * a3^3 ...; returns {a1, a2, ...} (monic, possibly 1)
    std::vector<Poly> parts;
    Poly a = p.monic();
    Poly b = a.derivative();
    Poly c = gcd(a, b);
    Poly w = exact_quotient(a, c);
    Poly y = exact_quotient(b, c);
    Poly z = y - w.derivative();
    while (w.degree() > 0) {
        Poly g = gcd(w, z);
        parts.push_back(g);
        w = exact_quotient(w, g);
        y = exact_quotient(z, g);
        z = y - w.derivative();
    }
    return parts;
}

std::vector<Integer> divisors(Integer n, std::size_t cap) {
    n = abs(n);
    std::vector<Integer> out;
    if (n == 0 || n > Integer("1000000000000")) return out;
    for (Integer k = 1; k * k <= n && out.size() < cap; ++k) {
        if (n % k != 0) continue;
        out.push_back(k);
        if (k * k != n) out.push_back(n / k);
    }
    return out;
}

std::vector<CycloNum> rational_candidates(const Poly& p) {
    std::vector<CycloNum> out;
    FieldPtr f = p.lead().field();
    std::vector<Rational> q;
    for (const auto& c : p.coeffs()) {
        auto r = c.as_rational();
        if (!r) return out;
        q.push_back(*r);
    }
    Integer den = 1;
    for (const auto& r : q) den = lcm(den, r.get_den());
    std::size_t low = 0;
    while (low < q.size() && sgn(q[low]) == 0) ++low;
    const Integer a0 = Integer(q[low] * den), an = Integer(q.back() * den);
    for (const auto& num : divisors(a0, 400))
        for (const auto& dd : divisors(an, 400))
            for (int sign : {1, -1}) out.push_back(f->from_rational(Rational(num * sign, dd)));
    return out;
}

std::vector<CycloNum> unit_candidates(FieldPtr f) {
    std::vector<CycloNum> out;
    const long n = f->conductor();
    const Rational scales[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3), Rational(1, 3)};
    for (const auto& s : scales)
        for (long k = 0; k < 2 * n; ++k) out.push_back(f->root_of_unity(k) * (k >= n ? Rational(-s) : s));
    return out;
}

}  // namespace

RootSplit find_roots(const Poly& p, const std::vector<CycloNum>& hints) {
    RootSplit out;
    if (p.degree() <= 0) return out;
    FieldPtr f = p.lead().field();
    const auto parts = yun(p);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const unsigned mult = static_cast<unsigned>(i + 1);
        Poly a = parts[i];
        auto take = [&](const CycloNum& r) {
            if (a.degree() <= 0 || !a.eval(r).is_zero()) return;
            out.roots.emplace_back(r, mult);
            a = exact_quotient(a, Poly{-r, f->one()});
        };
        for (const auto& h : hints) take(h);
        take(f->zero());
        for (const auto& r : rational_candidates(a)) take(r);
        // also for quadratics: try_sqrt misses square roots such as sqrt(-3) in Q(zeta_6)
        if (a.degree() >= 2)
            for (const auto& r : unit_candidates(f)) take(r);
        if (a.degree() == 1) {
            take(-a.coeffs()[0] / a.lead());
        } else if (a.degree() == 2) {
            // monic x^2 + b x + c
            const CycloNum b = a.coeffs()[1] / a.lead(), c = a.coeffs()[0] / a.lead();
            const CycloNum disc = b * b - c * 4L;
            if (auto s = algebra::try_sqrt(disc)) {
                const CycloNum half = f->from_rational(Rational(1, 2));
                const CycloNum r1 = (-b + *s) * half, r2 = (-b - *s) * half;
                take(r1);
                take(r2);
            }
        }
        if (a.degree() > 0) out.unresolved.push_back(a);
    }
    return out;
}

}  // namespace starpt::starpoint
