/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials over a cyclotomic field.
 *
 * Terms are kept in graded-lexicographic order with X0 > X1 > ... (highest
 * term first). This order is the single tie-breaking rule for every "first
 * index" choice made elsewhere in the library.
 */
#ifndef STARPT_ALGEBRA_MULTIPOLY_HPP
#define STARPT_ALGEBRA_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "starpt/algebra/cyclo.hpp"
#include "starpt/algebra/matrix.hpp"

namespace starpt::algebra {

inline constexpr unsigned kMaxVars = 16;

using Monomial = std::array<std::uint8_t, kMaxVars>;

unsigned total_degree(const Monomial& m) noexcept;

/// True when a comes strictly before b (a is the larger monomial).
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// All monomials of total degree d in n variables, highest first.
std::vector<Monomial> monomials_of_degree(unsigned n, unsigned d);

using Matrix = ExactMatrix<CycloNum>;
using Vector = std::vector<CycloNum>;

class MultiPoly {
   public:
    using TermMap = std::map<Monomial, CycloNum, GrlexDesc>;

    MultiPoly(FieldPtr field, unsigned nvars);

    static MultiPoly constant(FieldPtr field, unsigned nvars, const CycloNum& c);
    static MultiPoly variable(FieldPtr field, unsigned nvars, unsigned i);
    static MultiPoly term(FieldPtr field, unsigned nvars, const Monomial& m, const CycloNum& c);
    /// Linear form sum_i coeffs[i] * X_i.
    static MultiPoly linear(FieldPtr field, const Vector& coeffs);

    FieldPtr field() const noexcept { return field_; }
    unsigned nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Total degree; -1 for zero.
    int degree() const noexcept;
    bool is_homogeneous() const noexcept;
    CycloNum coeff(const Monomial& m) const;
    /// Highest term in grlex order; the polynomial must be nonzero.
    const std::pair<const Monomial, CycloNum>& leading() const;
    /// Largest exponent of variable i over all terms.
    unsigned degree_in(unsigned i) const noexcept;

    void add_term(const Monomial& m, const CycloNum& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const CycloNum& s);
    friend MultiPoly operator*(const CycloNum& s, const MultiPoly& a) { return a * s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned k) const;
    MultiPoly partial(unsigned i) const;
    CycloNum eval(const Vector& x) const;

    /// Same polynomial viewed in a larger variable set: variable i -> slot[i].
    MultiPoly remap(unsigned new_nvars, const std::vector<unsigned>& slot) const;

    /// Move into field `to` (conductor must be a multiple of the current one).
    MultiPoly embed(FieldPtr to) const;

    /// Canonical text, e.g. "X0^3 + (1+z)*X1^2*X2 - 3/2*X2^3".
    std::string str() const;

   private:
    void check_compatible(const MultiPoly& o) const;
    FieldPtr field_;
    unsigned nvars_;
    TermMap terms_;
};

/// f(X) with X_i replaced by sum_j M(i, j) * Y_j; M has f.nvars() rows and
/// any number of columns (the new variable count).
MultiPoly compose_linear(const MultiPoly& f, const Matrix& m);

/// compose_linear restricted to square invertible M.
MultiPoly substitute_linear(const MultiPoly& f, const Matrix& m);

/// Division by a single divisor in grlex order: f = q*g + r with no term of r
/// divisible by the leading monomial of g.
std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& f, const MultiPoly& g);

/// f / g, throwing InexactDivision when the remainder is nonzero.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Coefficient vector of a homogeneous f against the degree-d monomial list.
Vector coefficient_vector(const MultiPoly& f, const std::vector<Monomial>& basis);

MultiPoly from_coefficients(FieldPtr field, unsigned nvars, const std::vector<Monomial>& basis, const Vector& c);

}  // namespace starpt::algebra

#endif
