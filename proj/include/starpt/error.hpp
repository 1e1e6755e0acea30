/**
 * @file error.hpp
 * @brief Error kinds shared by every module.
 */
#ifndef STARPT_ERROR_HPP
#define STARPT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace starpt {

enum class Errc {
    // algebra
    DivisionByZero,
    FieldMismatch,
    SingularMatrix,
    NonSquare,
    DimensionMismatch,
    InexactDivision,
    // geometry
    ZeroPoint,
    DegenerateLine,
    NotOnHypersurface,
    NotOnLine,
    SingularPoint,
    ZeroPolynomial,
    NotHomogeneous,
    NotApplicable,
    // starpoint
    ZeroPolar,
    LineInX,
    KnownPointNotStar,
    RootsNotDistinct,
    // configspace
    VertexNotOnPlane,
    NotACone,
    BadCone,
    WrongDegree,
    EmptySystem,
    PointOnPlane,
    // classify
    NotSuited,
    NotRootOfUnity,
    DegenerateTriple,
    DegreeMismatch,
    AmbientTooSmall,
    ShapeViolation,
    PostconditionFailed,
    // shell
    SyntaxError,
    UndeclaredVariable,
    InhomogeneousInput,
    Usage,
};

std::string_view errc_name(Errc code) noexcept;

/// True for failures that indicate a bug rather than bad input.
bool is_internal(Errc code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace starpt

#endif
