/**
 * @file parse.hpp
 * @brief Text formats: polynomials, points, lines, hyperplanes and
 *        configuration files. The grammar is documented in docs/format.md.
 */
#ifndef STARPT_SHELL_PARSE_HPP
#define STARPT_SHELL_PARSE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "starpt/configspace.hpp"

namespace starpt::shell {

using algebra::CycloNum;
using algebra::FieldPtr;
using algebra::MultiPoly;
using configspace::Configuration;
using geometry::Hyperplane;
using geometry::Hypersurface;
using geometry::ProjLine;
using geometry::ProjPoint;

struct SessionHeader {
    unsigned ambient = 0;    // N
    unsigned degree = 0;     // d
    unsigned conductor = 1;  // n
};

/// Conductor implied by the z-literals of `text`: lcm of every explicit zm,
/// or `declared` when given. A bare z without a declared conductor is a
/// SyntaxError; an explicit zm with m not dividing `declared` is FieldMismatch.
unsigned infer_conductor(std::string_view text, std::optional<unsigned> declared = std::nullopt);

/// Parse a polynomial. With nvars == 0 the variable count is the largest
/// index used plus one; otherwise larger indices are UndeclaredVariable.
MultiPoly parse_poly(std::string_view text, FieldPtr field, unsigned nvars = 0);

/// Parse a single constant (no variables).
CycloNum parse_scalar(std::string_view text, FieldPtr field);

/// "x0:x1:...:xN"
ProjPoint parse_point(std::string_view text, FieldPtr field, unsigned size = 0);
/// "A;B"
ProjLine parse_line(std::string_view text, FieldPtr field, unsigned size = 0);
/// A linear form such as "X0 - 2*X3".
Hyperplane parse_plane(std::string_view text, FieldPtr field, unsigned size);

/// Hypersurface file: optional `session N d n` line, then the equation
/// (possibly over several lines); `#` starts a comment.
struct PolyFile {
    std::optional<SessionHeader> header;
    Hypersurface x;
};
PolyFile parse_poly_file(std::string_view text, std::optional<unsigned> field_override = std::nullopt);

/// `session N d n` followed by `triple: plane <form>; vertex <point>; cone <form>` lines.
Configuration parse_config(std::string_view text, std::optional<unsigned> field_override = std::nullopt);

/// Inverse of parse_config.
std::string format_config(const Configuration& config);
/// Inverse of parse_poly_file (always writes the header).
std::string format_poly_file(const Hypersurface& x);

std::string read_file(const std::string& path);

}  // namespace starpt::shell

#endif
