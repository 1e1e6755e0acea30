/**
 * @file geometry.hpp
 * @brief Projective points, hyperplanes, lines and hypersurfaces over Q(zeta_n),
 *        with restriction, multiplicity and cone tests.
 */
#ifndef STARPT_GEOMETRY_HPP
#define STARPT_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "starpt/algebra/multipoly.hpp"

namespace starpt::geometry {

using algebra::CycloNum;
using algebra::FieldPtr;
using algebra::Matrix;
using algebra::MultiPoly;
using algebra::Vector;

/// Point of P^N, scaled so that its first nonzero coordinate is 1.
class ProjPoint {
   public:
    explicit ProjPoint(Vector coords);
    static ProjPoint unit(FieldPtr field, unsigned size, unsigned i);

    const Vector& coords() const noexcept { return c_; }
    const CycloNum& operator[](std::size_t i) const { return c_[i]; }
    std::size_t size() const noexcept { return c_.size(); }
    FieldPtr field() const noexcept { return c_[0].field(); }
    /// Number of nonzero coordinates.
    unsigned support() const noexcept;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

    /// "1:-1:0:0"; non-rational coordinates are parenthesized.
    std::string str() const;

   private:
    Vector c_;
};

/// Zero set of a nonzero linear form, scaled so its first nonzero coefficient is 1.
class Hyperplane {
   public:
    explicit Hyperplane(Vector coeffs);
    static Hyperplane from_form(const MultiPoly& linear_form);

    const Vector& coeffs() const noexcept { return a_; }
    std::size_t size() const noexcept { return a_.size(); }
    FieldPtr field() const noexcept { return a_[0].field(); }
    /// Index of the first nonzero coefficient.
    unsigned pivot() const noexcept { return pivot_; }
    MultiPoly form() const;
    CycloNum eval(const Vector& x) const;
    bool contains(const ProjPoint& p) const { return eval(p.coords()).is_zero(); }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.a_ == b.a_; }
    friend bool operator!=(const Hyperplane& a, const Hyperplane& b) { return !(a == b); }

    std::string str() const { return form().str(); }

   private:
    Vector a_;
    unsigned pivot_ = 0;
};

/// The line through two distinct points, parametrized as s*A + u*B.
class ProjLine {
   public:
    ProjLine(ProjPoint a, ProjPoint b);
    const ProjPoint& a() const noexcept { return a_; }
    const ProjPoint& b() const noexcept { return b_; }
    ProjPoint point(const CycloNum& s, const CycloNum& u) const;
    bool contains(const ProjPoint& p) const;
    /// (s:u) with p = s*A + u*B; NotOnLine otherwise.
    std::pair<CycloNum, CycloNum> parameter(const ProjPoint& p) const;
    std::string str() const { return a_.str() + ";" + b_.str(); }

   private:
    ProjPoint a_, b_;
};

class Hypersurface {
   public:
    explicit Hypersurface(MultiPoly equation);
    const MultiPoly& equation() const noexcept { return f_; }
    unsigned degree() const noexcept { return static_cast<unsigned>(f_.degree()); }
    /// Projective dimension of the ambient space.
    unsigned ambient() const noexcept { return f_.nvars() - 1; }
    FieldPtr field() const noexcept { return f_.field(); }
    bool contains(const ProjPoint& p) const { return f_.eval(p.coords()).is_zero(); }

   private:
    MultiPoly f_;
};

/// Coordinates on a hyperplane: the pivot variable is eliminated and the
/// remaining variables keep their relative order.
class Chart {
   public:
    explicit Chart(Hyperplane plane);
    const Hyperplane& plane() const noexcept { return plane_; }
    unsigned pivot() const noexcept { return plane_.pivot(); }
    unsigned ambient_vars() const noexcept { return static_cast<unsigned>(plane_.size()); }
    unsigned chart_vars() const noexcept { return ambient_vars() - 1; }
    /// (ambient x chart) matrix expressing ambient coordinates in chart ones.
    const Matrix& embedding() const noexcept { return emb_; }
    /// Ambient index of chart variable k.
    unsigned ambient_index(unsigned k) const noexcept { return k < pivot() ? k : k + 1; }

    Vector to_chart(const ProjPoint& p) const;
    ProjPoint from_chart(const Vector& y) const;
    /// Restriction of an ambient form to the plane, in chart variables.
    MultiPoly restrict(const MultiPoly& f) const;
    /// A chart form written in the ambient variables (pivot variable unused).
    MultiPoly lift(const MultiPoly& g) const;

   private:
    Hyperplane plane_;
    Matrix emb_;
};

Hyperplane tangent_hyperplane(const Hypersurface& x, const ProjPoint& p);

struct Restriction {
    MultiPoly form;
    Chart chart;
};
Restriction restrict_to_hyperplane(const MultiPoly& f, const Hyperplane& plane);

/// Invertible matrix whose first column is p, completed greedily by standard
/// basis vectors in index order.
Matrix basis_completion(const Vector& p);

/// Multiplicity of the hypersurface Z(g) at p; coordinates of p index g's variables.
unsigned multiplicity_at(const MultiPoly& g, const Vector& p);

bool is_cone_with_vertex(const MultiPoly& g, const Vector& p);
/// Second route: the directional derivative sum p_i dg/dX_i vanishes identically.
bool is_cone_by_derivative(const MultiPoly& g, const Vector& p);

enum class ConeVerdict { Good, NotCone, SingularOutsideVertex, Unknown };
std::string_view verdict_name(ConeVerdict v) noexcept;

struct GoodConeReport {
    ConeVerdict verdict;
    /// "binary-squarefree", "macaulay", "probe", "trivial" or "not-cone".
    std::string method;
    unsigned probes = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kProbeSeed = 20240917;
inline constexpr unsigned kProbeCount = 50;
/// Largest Macaulay matrix (columns) attempted before falling back to probes.
inline constexpr std::size_t kMacaulayBudget = 400;

GoodConeReport good_cone_report(const MultiPoly& g, const Vector& vertex);
inline ConeVerdict is_good_cone(const MultiPoly& g, const Vector& vertex) {
    return good_cone_report(g, vertex).verdict;
}

/// True iff the forms have no common zero in projective space over the
/// algebraic closure; all forms share one degree and there are as many forms
/// as variables.
bool no_common_zero(const std::vector<MultiPoly>& forms);

/// f(s*A + u*B) as the polynomial in lambda = u/s: coefficient k is the
/// coefficient of s^(d-k) u^k.
struct BinaryForm {
    unsigned degree = 0;
    algebra::UniPoly<CycloNum> poly;
    bool is_zero() const noexcept { return poly.is_zero(); }
    /// Multiplicity of the root at (s:u) = (0:1), i.e. at point B.
    unsigned mult_at_infinity() const noexcept {
        return is_zero() ? degree : degree - static_cast<unsigned>(poly.degree());
    }
};
BinaryForm restrict_to_line(const MultiPoly& f, const ProjLine& line);

}  // namespace starpt::geometry

#endif
