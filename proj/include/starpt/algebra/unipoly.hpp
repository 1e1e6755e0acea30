/**
 * @file unipoly.hpp
 * @brief Dense univariate polynomials over an exact coefficient ring.
 *
 * Coefficients are stored lowest degree first with no trailing zeros, so the
 * zero polynomial is the empty vector. T must satisfy the scalar protocol of
 * rational.hpp (zero_like, one_like, is_zero, exact_div). Division-based
 * operations (divmod, gcd) additionally require T to be a field.
 */
#ifndef STARPT_ALGEBRA_UNIPOLY_HPP
#define STARPT_ALGEBRA_UNIPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "starpt/algebra/rational.hpp"
#include "starpt/error.hpp"

namespace starpt::algebra {

namespace detail {
// Unqualified so that argument-dependent lookup finds overloads declared later.
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

template <class T>
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    /// The constant polynomial `a`.
    static UniPoly constant(const T& a) { return UniPoly(std::vector<T>{a}); }
    /// a * x^k
    static UniPoly monomial(const T& a, std::size_t k) {
        std::vector<T> c(k + 1, zero_like(a));
        c[k] = a;
        return UniPoly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& lead() const { return c_.back(); }
    /// Coefficient of x^k (zero beyond the degree; needs a nonzero polynomial or a hint).
    T coeff(std::size_t k, const T& like) const { return k < c_.size() ? c_[k] : zero_like(like); }

    T eval(const T& x) const {
        if (c_.empty()) return zero_like(x);
        T acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(T(c_[i] * static_cast<long>(i)));
        return UniPoly(std::move(d));
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const auto& longer = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
        const auto& shorter = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
        std::vector<T> r = longer;
        for (std::size_t i = 0; i < shorter.size(); ++i) r[i] = r[i] + shorter[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const T& s) {
        if (detail::coeff_is_zero(s)) return {};
        UniPoly r = a;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; T must be a field.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
        if (a.degree() < b.degree()) return {UniPoly{}, a};
        std::vector<T> rem = a.c_;
        const std::size_t db = b.c_.size() - 1;
        std::vector<T> q(rem.size() - db, zero_like(a.c_[0]));
        const T inv_lead = exact_div(one_like(b.lead()), b.lead());
        for (std::size_t k = rem.size(); k-- > db;) {
            if (detail::coeff_is_zero(rem[k])) continue;
            T f = rem[k] * inv_lead;
            q[k - db] = f;
            for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - f * b.c_[j];
        }
        rem.resize(db);
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    /// a / b, throwing InexactDivision when b does not divide a.
    friend UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) fail(Errc::InexactDivision, "polynomial division left a remainder");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return *this * exact_div(one_like(lead()), lead());
    }

   private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

/// Monic gcd (zero when both inputs are zero). T must be a field.
template <class T>
UniPoly<T> gcd(UniPoly<T> a, UniPoly<T> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
struct ExtGcd {
    UniPoly<T> g, s, t;
};

template <class T>
ExtGcd<T> ext_gcd(const UniPoly<T>& a, const UniPoly<T>& b, const T& one) {
    UniPoly<T> r0 = a, r1 = b;
    UniPoly<T> s0 = UniPoly<T>::constant(one), s1;
    UniPoly<T> t0, t1 = UniPoly<T>::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<T> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly<T> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T inv = exact_div(one, r0.lead());
    return {r0 * inv, s0 * inv, t0 * inv};
}

// UniPoly<R> is itself a ring for the Bareiss determinant over R[t].
template <class T>
UniPoly<T> zero_like(const UniPoly<T>&) {
    return {};
}
template <class T>
UniPoly<T> one_like(const UniPoly<T>& p) {
    if (p.is_zero()) fail(Errc::DimensionMismatch, "one_like needs a nonzero prototype");
    return UniPoly<T>::constant(one_like(p.lead()));
}
template <class T>
bool is_zero(const UniPoly<T>& p) {
    return p.is_zero();
}
template <class T>
UniPoly<T> exact_div(const UniPoly<T>& a, const UniPoly<T>& b) {
    return exact_quotient(a, b);
}

/// Dense coefficient string, e.g. "t^2 + 3/2*t - 1".
std::string to_string(const UniPoly<Rational>& p, const std::string& var = "t");

}  // namespace starpt::algebra

#endif
