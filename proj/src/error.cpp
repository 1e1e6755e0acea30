#include "starpt/error.hpp"

namespace starpt {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::NonSquare: return "NonSquare";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::InexactDivision: return "InexactDivision";
        case Errc::ZeroPoint: return "ZeroPoint";
        case Errc::DegenerateLine: return "DegenerateLine";
        case Errc::NotOnHypersurface: return "NotOnHypersurface";
        case Errc::NotOnLine: return "NotOnLine";
        case Errc::SingularPoint: return "SingularPoint";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::ZeroPolar: return "ZeroPolar";
        case Errc::LineInX: return "LineInX";
        case Errc::KnownPointNotStar: return "KnownPointNotStar";
        case Errc::RootsNotDistinct: return "RootsNotDistinct";
        case Errc::VertexNotOnPlane: return "VertexNotOnPlane";
        case Errc::NotACone: return "NotACone";
        case Errc::BadCone: return "BadCone";
        case Errc::WrongDegree: return "WrongDegree";
        case Errc::EmptySystem: return "EmptySystem";
        case Errc::PointOnPlane: return "PointOnPlane";
        case Errc::NotSuited: return "NotSuited";
        case Errc::NotRootOfUnity: return "NotRootOfUnity";
        case Errc::DegenerateTriple: return "DegenerateTriple";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::AmbientTooSmall: return "AmbientTooSmall";
        case Errc::ShapeViolation: return "ShapeViolation";
        case Errc::PostconditionFailed: return "PostconditionFailed";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::UndeclaredVariable: return "UndeclaredVariable";
        case Errc::InhomogeneousInput: return "InhomogeneousInput";
        case Errc::Usage: return "Usage";
    }
    return "Unknown";
}

bool is_internal(Errc code) noexcept {
    switch (code) {
        case Errc::InexactDivision:
        case Errc::ShapeViolation:
        case Errc::PostconditionFailed:
            return true;
        default:
            return false;
    }
}

}  // namespace starpt
