#include "starpt/shell/parse.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

namespace starpt::shell {

using algebra::CycloField;
using algebra::Monomial;
using algebra::Rational;

namespace {

[[noreturn]] void syntax(std::size_t pos, const std::string& what) {
    fail(Errc::SyntaxError, "at position " + std::to_string(pos) + ": " + what);
}

// Recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ['^' digits]
//   primary:= integer ['/' integer] | 'z' [digits] | 'X' digits | '(' expr ')'
class Parser {
   public:
    Parser(std::string_view s, FieldPtr f, unsigned nvars) : s_(s), f_(f), n_(nvars) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) syntax(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }
    int max_var() const noexcept { return max_var_; }

   private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool digit_here() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
    std::string digits() {
        const std::size_t start = pos_;
        while (digit_here()) ++pos_;
        if (start == pos_) syntax(pos_, "expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }
    unsigned small(const std::string& d, std::size_t pos, unsigned limit) {
        if (d.size() > 6 || std::stoul(d) > limit) syntax(pos, "number " + d + " is too large here");
        return static_cast<unsigned>(std::stoul(d));
    }

    MultiPoly expr() {
        bool neg = false;
        if (at('+') || at('-')) neg = s_[pos_++] == '-';
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (at('+') || at('-')) {
            const bool minus = s_[pos_++] == '-';
            MultiPoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (at('*')) {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly p = primary();
        if (at('^')) {
            ++pos_;
            skip();
            const std::size_t where = pos_;
            p = p.pow(small(digits(), where, 255));
        }
        return p;
    }

    MultiPoly primary() {
        skip();
        if (pos_ >= s_.size()) syntax(pos_, "unexpected end of input");
        const std::size_t where = pos_;
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q{algebra::Integer(digits())};
            if (at('/')) {
                ++pos_;
                skip();
                algebra::Integer den(digits());
                if (den == 0) syntax(where, "zero denominator");
                q /= Rational(den);
            }
            return MultiPoly::constant(f_, n_, f_->from_rational(q));
        }
        if (c == 'z') {
            ++pos_;
            if (digit_here()) {
                const unsigned m = small(digits(), where, 100000);
                if (m == 0) syntax(where, "z0 is not a root of unity");
                return MultiPoly::constant(f_, n_, f_->embed(CycloField::get(m)->gen()));
            }
            return MultiPoly::constant(f_, n_, f_->gen());
        }
        if (c == 'X') {
            ++pos_;
            if (!digit_here()) syntax(pos_, "expected a variable index after X");
            const std::string d = digits();
            if (d.size() > 3 || std::stoul(d) >= n_)
                fail(Errc::UndeclaredVariable, "variable X" + d + " at position " + std::to_string(where) +
                                                   " is outside X0..X" + std::to_string(n_ - 1));
            const unsigned i = static_cast<unsigned>(std::stoul(d));
            max_var_ = std::max(max_var_, static_cast<int>(i));
            return MultiPoly::variable(f_, n_, i);
        }
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!at(')')) syntax(pos_, "expected ')'");
            ++pos_;
            return inner;
        }
        syntax(where, std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    FieldPtr f_;
    unsigned n_;
    std::size_t pos_ = 0;
    int max_var_ = -1;
};

std::string strip_comments(std::string_view text) {
    std::string out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        out += line + "\n";
    }
    return out;
}

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

bool starts_with_word(const std::string& s, std::string_view word) {
    return s.size() > word.size() && s.compare(0, word.size(), word) == 0 &&
           std::isspace(static_cast<unsigned char>(s[word.size()]));
}

SessionHeader parse_header(const std::string& line) {
    std::istringstream in(line);
    std::string kw;
    long long v[3];
    in >> kw >> v[0] >> v[1] >> v[2];
    std::string rest;
    if (kw != "session" || in.fail() || (in >> rest))
        fail(Errc::SyntaxError, "malformed session header '" + line + "', expected 'session N d n'");
    if (v[0] < 2 || v[0] + 1 > static_cast<long long>(algebra::kMaxVars))
        fail(Errc::Usage, "session ambient dimension must be between 2 and " + std::to_string(algebra::kMaxVars - 1));
    if (v[1] < 3 || v[1] > 255) fail(Errc::Usage, "session degree must be at least 3");
    if (v[2] < 1 || v[2] > 100000) fail(Errc::Usage, "session conductor must be positive");
    return {static_cast<unsigned>(v[0]), static_cast<unsigned>(v[1]), static_cast<unsigned>(v[2])};
}

FieldPtr pick_field(std::string_view body, std::optional<unsigned> override, const std::optional<SessionHeader>& h) {
    std::optional<unsigned> declared = override;
    if (!declared && h) declared = h->conductor;
    return CycloField::get(infer_conductor(body, declared));
}

}  // namespace

unsigned infer_conductor(std::string_view text, std::optional<unsigned> declared) {
    unsigned acc = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'z') continue;
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i + 1) {
            if (!declared) fail(Errc::SyntaxError, "bare z at position " + std::to_string(i) + " needs a declared conductor");
            continue;
        }
        const std::string d(text.substr(i + 1, j - i - 1));
        if (d.size() > 6) fail(Errc::SyntaxError, "conductor " + d + " is too large");
        const unsigned m = static_cast<unsigned>(std::stoul(d));
        if (m == 0) fail(Errc::SyntaxError, "z0 is not a root of unity");
        if (declared && *declared % m != 0)
            fail(Errc::FieldMismatch, "z" + d + " does not lie in Q(zeta_" + std::to_string(*declared) + ")");
        acc = std::lcm(acc, m);
    }
    if (declared) return *declared;
    return acc;
}

MultiPoly parse_poly(std::string_view text, FieldPtr field, unsigned nvars) {
    if (nvars > algebra::kMaxVars) fail(Errc::DimensionMismatch, "too many variables");
    if (nvars != 0) return Parser(text, field, nvars).parse();
    Parser probe(text, field, algebra::kMaxVars);
    probe.parse();
    return Parser(text, field, static_cast<unsigned>(std::max(probe.max_var(), 0) + 1)).parse();
}

CycloNum parse_scalar(std::string_view text, FieldPtr field) {
    Parser p(text, field, 1);
    MultiPoly v = p.parse();
    if (p.max_var() >= 0) fail(Errc::SyntaxError, "expected a constant, got '" + std::string(text) + "'");
    return v.coeff(Monomial{});
}

ProjPoint parse_point(std::string_view text, FieldPtr field, unsigned size) {
    const auto parts = split(text, ':');
    if (parts.size() < 2) fail(Errc::SyntaxError, "a point needs ':'-separated coordinates");
    if (size != 0 && parts.size() != size)
        fail(Errc::DimensionMismatch, "point has " + std::to_string(parts.size()) + " coordinates, expected " +
                                          std::to_string(size));
    algebra::Vector c;
    for (const auto& p : parts) c.push_back(parse_scalar(p, field));
    return ProjPoint(std::move(c));
}

ProjLine parse_line(std::string_view text, FieldPtr field, unsigned size) {
    const auto parts = split(text, ';');
    if (parts.size() != 2) fail(Errc::SyntaxError, "a line is two points joined by ';'");
    return ProjLine(parse_point(parts[0], field, size), parse_point(parts[1], field, size));
}

Hyperplane parse_plane(std::string_view text, FieldPtr field, unsigned size) {
    return Hyperplane::from_form(parse_poly(text, field, size));
}

PolyFile parse_poly_file(std::string_view text, std::optional<unsigned> field_override) {
    const std::string clean = strip_comments(text);
    std::optional<SessionHeader> header;
    std::string body;
    std::istringstream in(clean);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        if (!header && body.empty() && starts_with_word(t, "session")) {
            header = parse_header(t);
            continue;
        }
        body += t + " ";
    }
    if (trim(body).empty()) fail(Errc::SyntaxError, "no equation found");
    FieldPtr f = pick_field(body, field_override, header);
    MultiPoly eq = parse_poly(body, f, header ? header->ambient + 1 : 0);
    if (eq.is_zero()) fail(Errc::ZeroPolynomial, "the equation is zero");
    if (!eq.is_homogeneous()) fail(Errc::InhomogeneousInput, "the equation is not homogeneous");
    if (header && eq.degree() != static_cast<int>(header->degree))
        fail(Errc::WrongDegree, "equation has degree " + std::to_string(eq.degree()) + ", header says " +
                                    std::to_string(header->degree));
    return {header, Hypersurface(std::move(eq))};
}

Configuration parse_config(std::string_view text, std::optional<unsigned> field_override) {
    const std::string clean = strip_comments(text);
    std::optional<SessionHeader> header;
    std::vector<std::string> triple_lines;
    std::istringstream in(clean);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        if (!header) {
            if (!starts_with_word(t, "session")) fail(Errc::SyntaxError, "configuration must start with 'session N d n'");
            header = parse_header(t);
            continue;
        }
        if (t.rfind("triple:", 0) != 0) fail(Errc::SyntaxError, "expected 'triple:', got '" + t + "'");
        triple_lines.push_back(t.substr(7));
    }
    if (!header) fail(Errc::SyntaxError, "missing session header");
    std::string all;
    for (const auto& t : triple_lines) all += t + "\n";
    FieldPtr f = pick_field(all, field_override, header);
    const unsigned n = header->ambient + 1;

    std::vector<configspace::StarTriple> triples;
    for (std::size_t k = 0; k < triple_lines.size(); ++k) {
        try {
            std::optional<std::string> plane, vertex, cone;
            for (const auto& part : split(triple_lines[k], ';')) {
                if (starts_with_word(part, "plane")) plane = part.substr(5);
                else if (starts_with_word(part, "vertex")) vertex = part.substr(6);
                else if (starts_with_word(part, "cone")) cone = part.substr(4);
                else fail(Errc::SyntaxError, "unknown field '" + part + "'");
            }
            if (!plane || !vertex || !cone) fail(Errc::SyntaxError, "a triple needs plane, vertex and cone");
            MultiPoly c = parse_poly(*cone, f, n);
            if (!c.is_zero() && !c.is_homogeneous()) fail(Errc::InhomogeneousInput, "cone is not homogeneous");
            triples.push_back(configspace::validate_triple(parse_plane(*plane, f, n), parse_point(*vertex, f, n), c,
                                                           header->degree));
        } catch (const Error& e) {
            throw Error(e.code(), "triple " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    return Configuration::make(header->ambient, header->degree, f, std::move(triples));
}

std::string format_config(const Configuration& config) {
    std::string out = "session " + std::to_string(config.ambient) + " " + std::to_string(config.degree) + " " +
                      std::to_string(config.field->conductor()) + "\n";
    for (const auto& t : config.triples)
        out += "triple: plane " + t.plane.str() + "; vertex " + t.vertex.str() + "; cone " + t.ambient_cone().str() + "\n";
    return out;
}

std::string format_poly_file(const Hypersurface& x) {
    return "session " + std::to_string(x.ambient()) + " " + std::to_string(x.degree()) + " " +
           std::to_string(x.field()->conductor()) + "\n" + x.equation().str() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::Usage, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace starpt::shell
