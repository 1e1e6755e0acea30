/**
 * @file cyclo.hpp
 * @brief Cyclotomic fields Q(zeta_n) in the power basis modulo Phi_n.
 *
 * Fields are interned: CycloField::get(n) always returns the same object for
 * a given conductor, and fields live for the whole process. Arithmetic between
 * elements of different conductors is rejected with FieldMismatch; use
 * CycloField::embed to move an element of Q(zeta_m) into Q(zeta_n) when m | n.
 */
#ifndef STARPT_ALGEBRA_CYCLO_HPP
#define STARPT_ALGEBRA_CYCLO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "starpt/algebra/rational.hpp"
#include "starpt/algebra/unipoly.hpp"

namespace starpt::algebra {

/// Phi_n, computed by dividing x^n - 1 by Phi_m for every proper divisor m of n.
UniPoly<Rational> cyclotomic_poly(unsigned n);

unsigned euler_phi(unsigned n);

class CycloNum;
class CycloField;
using FieldPtr = const CycloField*;

class CycloField {
   public:
    static FieldPtr get(unsigned n);
    static FieldPtr rationals() { return get(1); }

    unsigned conductor() const noexcept { return n_; }
    std::size_t degree() const noexcept { return deg_; }
    const UniPoly<Rational>& modulus() const noexcept { return modulus_; }

    CycloNum zero() const;
    CycloNum one() const;
    CycloNum from_rational(const Rational& q) const;
    CycloNum from_int(long k) const;
    /// zeta_n
    CycloNum gen() const;
    /// zeta_n^k for any integer k.
    CycloNum root_of_unity(long k) const;
    /// Reduce an arbitrary polynomial in zeta modulo Phi_n.
    CycloNum from_poly(const UniPoly<Rational>& p) const;

    /// Image of x (in Q(zeta_m), m | n) under zeta_m -> zeta_n^(n/m).
    CycloNum embed(const CycloNum& x) const;

   private:
    explicit CycloField(unsigned n);
    friend class CycloNum;

    std::vector<Rational> reduce(std::vector<Rational> v) const;

    unsigned n_;
    std::size_t deg_;
    UniPoly<Rational> modulus_;
    // fold_[k] = x^(deg + k) mod Phi_n, as a length-deg vector
    std::vector<std::vector<Rational>> fold_;
};

class CycloNum {
   public:
    /// Zero of Q (conductor 1); mostly for default-constructed containers.
    CycloNum();
    CycloNum(FieldPtr field, std::vector<Rational> coeffs);

    FieldPtr field() const noexcept { return field_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// True when the element lies in Q.
    bool is_rational() const noexcept;
    /// The rational value when is_rational().
    std::optional<Rational> as_rational() const;

    CycloNum inv() const;
    CycloNum pow(long k) const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o) { return *this *= o.inv(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    friend CycloNum operator*(CycloNum a, long k);
    friend CycloNum operator*(CycloNum a, const Rational& q);

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Human form in the generator z, e.g. "1+z", "-3/2*z^2+z", "5".
    std::string str() const;

   private:
    void check_same(const CycloNum& o) const;
    FieldPtr field_;
    std::vector<Rational> c_;
};

inline CycloNum zero_like(const CycloNum& x) { return x.field()->zero(); }
inline CycloNum one_like(const CycloNum& x) { return x.field()->one(); }
inline bool is_zero(const CycloNum& x) { return x.is_zero(); }
inline CycloNum exact_div(const CycloNum& a, const CycloNum& b) { return a / b; }

/// Multiplicative order of x when it is a root of unity (searches up to 2n).
std::optional<unsigned> root_of_unity_order(const CycloNum& x);

/// A square root of x inside its field when one of the form q*zeta^k exists.
std::optional<CycloNum> try_sqrt(const CycloNum& x);

}  // namespace starpt::algebra

#endif
