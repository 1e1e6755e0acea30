#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "starpt/shell/cli.hpp"
#include "starpt/shell/parse.hpp"
#include "starpt/shell/report.hpp"
#include "support.hpp"

using namespace starpt;
using namespace starpt::shell;
using algebra::CycloField;
using support::error_of;
using support::mono;

namespace {

MultiPoly X(FieldPtr f, unsigned n, unsigned i) { return MultiPoly::variable(f, n, i); }

Errc parse_error(std::string_view text, FieldPtr f, unsigned n, std::string* message) {
    try {
        parse_poly(text, f, n);
    } catch (const Error& e) {
        *message = e.what();
        return e.code();
    }
    FAIL("expected an error for '" << text << "'");
    return Errc::Usage;
}

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "starpt");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("starpt_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

const char* kCase1Config =
    "session 3 3 3\n"
    "triple: plane X1; vertex 1:0:0:0; cone X2^3 + X3^3\n"
    "triple: plane X0; vertex 0:1:0:0; cone X2^3 + X3^3\n"
    "triple: plane X0 + X1 - X2; vertex 1:(-z):(1-z):0; cone X1^3 + (-1+z)*X1^2*X2 + (-z)*X1*X2^2 + "
    "(1/9+2/9*z)*X2^3 + (1/9+2/9*z)*X3^3\n";

}  // namespace

TEST_CASE("polynomial syntax") {
    FieldPtr f = CycloField::get(3);
    const MultiPoly p = parse_poly("2*X0^3 - z*X1*X2^2 + (1/2 + z)*X3^3", f, 4);
    MultiPoly want(f, 4);
    want.add_term(mono({3, 0, 0, 0}), f->from_int(2));
    want.add_term(mono({0, 1, 2, 0}), -f->gen());
    want.add_term(mono({0, 0, 0, 3}), f->from_rational(algebra::Rational(1, 2)) + f->gen());
    CHECK(p == want);
    CHECK(parse_poly("(X0 + X1)^2", f, 2) == X(f, 2, 0).pow(2) + X(f, 2, 0) * X(f, 2, 1) * f->from_int(2) +
                                                X(f, 2, 1).pow(2));
    CHECK(parse_poly("X0*X1 - X1*X0", f, 2).is_zero());
    // variable count follows the largest index when not given
    CHECK(parse_poly("X4", f).nvars() == 5);
    CHECK(parse_scalar("z^3", f).is_one());
    CHECK(parse_scalar("z3^2", f) == f->gen().pow(2));
}

TEST_CASE("syntax errors carry a position") {
    FieldPtr q = CycloField::rationals();
    std::string msg;
    CHECK(parse_error("X0 + * X1", q, 2, &msg) == Errc::SyntaxError);
    CHECK(msg.find("at position 5") != std::string::npos);
    CHECK(parse_error("X0 +", q, 2, &msg) == Errc::SyntaxError);
    CHECK(parse_error("(X0 + X1", q, 2, &msg) == Errc::SyntaxError);
    CHECK(parse_error("X0^", q, 2, &msg) == Errc::SyntaxError);
    CHECK(parse_error("X0 / 0", q, 2, &msg) != Errc::Usage);
    CHECK(parse_error("X5", q, 4, &msg) == Errc::UndeclaredVariable);
    CHECK(error_of([&] { parse_scalar("X0", q); }) == Errc::SyntaxError);
}

TEST_CASE("conductor inference") {
    CHECK(infer_conductor("X0 + X1") == 1);
    CHECK(infer_conductor("z4*X0 + z6*X1") == 12);
    CHECK(infer_conductor("z8^3") == 8);
    CHECK(infer_conductor("z*X0", 5) == 5);
    CHECK(infer_conductor("z3*X0", 6) == 6);
    CHECK(error_of([] { infer_conductor("z*X0"); }) == Errc::SyntaxError);
    CHECK(error_of([] { infer_conductor("z4*X0", 6); }) == Errc::FieldMismatch);
    CHECK(error_of([] { infer_conductor("z0"); }) == Errc::SyntaxError);
}

TEST_CASE("printed polynomials parse back") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (unsigned n : {1u, 4u, 6u, 8u, 12u}) {
        FieldPtr f = CycloField::get(n);
        for (int k = 0; k < 100; ++k) {
            const unsigned vars = 2 + static_cast<unsigned>(rng() % 5);
            const unsigned deg = 1 + static_cast<unsigned>(rng() % 4);
            const MultiPoly p = support::random_form(f, vars, deg, 1 + static_cast<unsigned>(rng() % 6), rng);
            CHECK(parse_poly(p.str(), f, vars) == p);
            ++checked;
        }
    }
    CHECK(checked == 500);
}

TEST_CASE("points, lines and planes") {
    FieldPtr f = CycloField::get(6);
    const ProjPoint p = parse_point("2:(1+z):0", f);
    CHECK(p.size() == 3);
    CHECK(p[1] == (f->one() + f->gen()) * f->from_rational(algebra::Rational(1, 2)));
    const ProjLine l = parse_line("1:0:0;0:1:0", f);
    CHECK(l.contains(parse_point("1:-3:0", f)));
    const Hyperplane h = parse_plane("X0 - 2*X2", f, 3);
    CHECK(h.contains(parse_point("2:5:1", f)));
    CHECK(error_of([&] { parse_point("0:0:0", f); }) == Errc::ZeroPoint);
    CHECK(error_of([&] { parse_point("1", f); }) == Errc::SyntaxError);
    CHECK(error_of([&] { parse_line("1:0:0", f); }) == Errc::SyntaxError);
    CHECK(error_of([&] { parse_plane("X0^2", f, 3); }) == Errc::WrongDegree);
}

TEST_CASE("hypersurface files") {
    const PolyFile pf = parse_poly_file("# Fermat cubic\nsession 3 3 6\nX0^3 + X1^3\n + X2^3 + X3^3\n");
    REQUIRE(pf.header.has_value());
    CHECK(pf.header->conductor == 6);
    CHECK(pf.x.field()->conductor() == 6);
    CHECK(pf.x.degree() == 3);
    const PolyFile again = parse_poly_file(format_poly_file(pf.x));
    CHECK(again.x.equation() == pf.x.equation());
    // headerless files take the conductor of their literals
    CHECK(parse_poly_file("X0^3 + z4*X1^3 + X2^3").x.field()->conductor() == 4);
    CHECK(parse_poly_file("X0^3 + X1^3", 5).x.field()->conductor() == 5);
    CHECK(error_of([] { parse_poly_file("X0^3 + X1^2"); }) != Errc::Usage);
    CHECK(error_of([] { parse_poly_file("session 3 3\nX0^3"); }) == Errc::SyntaxError);
    CHECK(error_of([] { parse_poly_file("# nothing\n"); }) == Errc::SyntaxError);
}

TEST_CASE("configuration files") {
    const Configuration c = parse_config(kCase1Config);
    CHECK(c.size() == 3);
    CHECK(c.ambient == 3);
    CHECK(c.degree == 3);
    CHECK(c.field->conductor() == 3);
    const Configuration again = parse_config(format_config(c));
    REQUIRE(again.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(again.triples[i].plane == c.triples[i].plane);
        CHECK(again.triples[i].vertex == c.triples[i].vertex);
        CHECK(again.triples[i].cone == c.triples[i].cone);
    }
    CHECK(format_config(again) == format_config(c));

    try {
        parse_config("session 3 3 1\ntriple: plane X0; vertex 1:0:0:0; cone X2^3 + X3^3\n");
        FAIL("vertex off its plane was accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::VertexNotOnPlane);
        CHECK(std::string(e.what()).rfind("triple 1: ", 0) == 0);
    }
    CHECK(error_of([] { parse_config("triple: plane X1; vertex 1:0:0:0; cone X2^3\n"); }) == Errc::SyntaxError);
    CHECK(error_of([] { parse_config("session 3 3 1\ntriple: plane X1; vertex 1:0:0:0\n"); }) ==
          Errc::SyntaxError);
    CHECK(error_of([] { parse_config("session 3 3 1\ntriple: plane X1; vertex 1:0:0:0; hat X2\n"); }) ==
          Errc::SyntaxError);
}

TEST_CASE("JSON reports are free of timing") {
    Report r;
    r.command = "demo";
    r.args = {"a", "b"};
    r.seed = 9;
    r.result = {{"value", 3}};
    r.elapsed_ms = 12.5;
    const Json j = Json::parse(r.json());
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["command"] == "demo");
    CHECK(j["seed"] == 9);
    CHECK(r.json().find("12.5") == std::string::npos);
    CHECK(r.json().find("elapsed") == std::string::npos);
    CHECK(r.human().find("12.5 ms") != std::string::npos);
}

TEST_CASE("command line exit codes") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({"fermat"}).code == 2);
    CHECK(cli({"config", "dim", "/nonexistent/starpt.cfg"}).code == 2);

    const std::string cfg = scratch("case1.cfg", kCase1Config);
    const CliRun dim = cli({"--json", "config", "dim", cfg});
    CHECK(dim.code == 0);
    const Json j = Json::parse(dim.out);
    CHECK(j["command"] == "config dim");

    const CliRun label = cli({"--json", "classify3", cfg});
    CHECK(label.code == 0);
    CHECK(label.out.find("\"Vt\"") != std::string::npos);

    const std::string bad = scratch("bad.poly", "X0^3 + * X1^3\n");
    CHECK(cli({"star", "check", bad, "1:0"}).code == 2);

    const CliRun a = cli({"--json", "--seed", "3", "build", "intermediate", "3", "3"});
    const CliRun b = cli({"--json", "--seed", "3", "build", "intermediate", "3", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(cli({"build", "extremal", "3", "4", "indep"}).code == 2);
}
