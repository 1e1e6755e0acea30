#include "starpt/shell/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "starpt/selftest.hpp"
#include "starpt/shell/parse.hpp"
#include "starpt/shell/report.hpp"

namespace starpt::shell {

using algebra::CycloField;
using classify::ComponentLabel;
using configspace::StarTriple;

namespace {

struct Globals {
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
    std::optional<unsigned> field;
};

std::string kv(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    std::string out;
    for (const auto& [k, v] : rows) out += k + std::string(w - k.size() + 2, ' ') + v + "\n";
    return out;
}

// The file is reparsed over a larger field when extra literals (a point, a
// line) need one and neither --field nor a session header fixes the field.
PolyFile load_poly(const Globals& g, const std::string& path, const std::vector<std::string>& extra) {
    const std::string text = read_file(path);
    PolyFile pf = parse_poly_file(text, g.field);
    if (!g.field && !pf.header) {
        unsigned n = pf.x.field()->conductor();
        for (const auto& e : extra) n = std::lcm(n, infer_conductor(e));
        if (n != pf.x.field()->conductor()) pf = parse_poly_file(text, n);
    }
    return pf;
}

Configuration load_config(const Globals& g, const std::string& path) {
    return parse_config(read_file(path), g.field);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::Usage, "cannot write " + path);
    out << text;
}

Json point_list(const std::vector<ProjPoint>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(p.str());
    return a;
}

// ---- star ------------------------------------------------------------------

Report star_check(const Globals& g, const std::string& file, const std::string& pt) {
    PolyFile pf = load_poly(g, file, {pt});
    const ProjPoint p = parse_point(pt, pf.x.field(), pf.x.ambient() + 1);
    const auto v = starpoint::is_star_point(pf.x, p);
    const bool polar = starpoint::star_via_polar(pf.x, p);
    Report r;
    r.result["point"] = p.str();
    r.result["verdict"] = json_verdict(v);
    r.result["polar_route"] = polar;
    r.result["routes_agree"] = polar == v.is_star;
    std::vector<std::pair<std::string, std::string>> rows{
        {"point", p.str()},
        {"tangent", v.tangent.str()},
        {"multiplicity", std::to_string(v.multiplicity) + " of " + std::to_string(pf.x.degree())},
        {"star", yes_no(v.is_star)},
        {"polar route", yes_no(polar)}};
    if (v.is_star) rows.emplace_back("good cone", std::string(geometry::verdict_name(v.good_cone.verdict)) + " (" +
                                                      v.good_cone.method + ")");
    rows.emplace_back("section", v.cone.str());
    r.text.push_back(kv(rows));
    return r;
}

Report star_line(const Globals& g, const std::string& file, const std::string& ln,
                 const std::vector<std::string>& candidates) {
    std::vector<std::string> extra{ln};
    extra.insert(extra.end(), candidates.begin(), candidates.end());
    PolyFile pf = load_poly(g, file, extra);
    const unsigned n = pf.x.ambient() + 1;
    const ProjLine line = parse_line(ln, pf.x.field(), n);
    std::vector<ProjPoint> cands;
    for (const auto& c : candidates) cands.push_back(parse_point(c, pf.x.field(), n));
    const auto rep = starpoint::star_points_on_line(pf.x, line, cands);

    Report r;
    r.result["line"] = line.str();
    r.result["line_in_x"] = rep.line_in_x;
    Json pts = Json::array();
    Table t({"point", "mult", "star", "tangent", "note"});
    for (const auto& lp : rep.points) {
        Json j{{"point", lp.point.str()}, {"multiplicity", lp.multiplicity}};
        j["verdict"] = lp.verdict ? json_verdict(*lp.verdict) : Json(nullptr);
        j["note"] = lp.note;
        pts.push_back(std::move(j));
        t.add({lp.point.str(), std::to_string(lp.multiplicity), lp.verdict ? yes_no(lp.verdict->is_star) : "-",
               lp.verdict ? lp.verdict->tangent.str() : "-", lp.note});
    }
    r.result["points"] = std::move(pts);
    r.result["unresolved_degrees"] = rep.unresolved_degrees;
    r.result["star_count"] = rep.star_count();
    std::string head = rep.line_in_x ? "the line lies in X; supplied candidates tested\n" : "";
    for (unsigned k : rep.unresolved_degrees) head += "unresolved factor of degree " + std::to_string(k) + "\n";
    r.text.push_back(head + t.str() + "star points: " + std::to_string(rep.star_count()));
    return r;
}

Report star_polar(const Globals& g, const std::string& file, const std::string& pt) {
    PolyFile pf = load_poly(g, file, {pt});
    const ProjPoint p = parse_point(pt, pf.x.field(), pf.x.ambient() + 1);
    const auto polar = starpoint::polar_hypersurface(pf.x, p);
    const auto tangent = geometry::tangent_hyperplane(pf.x, p);
    const bool contains = starpoint::hyperplane_contained(polar.equation(), tangent);
    Report r;
    r.result = {{"point", p.str()},
                {"polar", polar.equation().str()},
                {"tangent", tangent.str()},
                {"polar_contains_tangent", contains}};
    r.text.push_back(kv({{"point", p.str()},
                         {"polar", polar.equation().str()},
                         {"tangent", tangent.str()},
                         {"contains tangent", yes_no(contains)}}));
    return r;
}

// ---- fermat and components -------------------------------------------------

Report fermat(unsigned d, unsigned N) {
    auto fam = classify::build_fermat(d, N);
    Report r;
    Json pts = Json::array();
    Table t({"point", "tangent", "star"});
    long certified = 0;
    for (const auto& p : fam.star_points) {
        const auto v = starpoint::is_star_point(fam.x, p);
        certified += v.is_star;
        pts.push_back({{"point", p.str()}, {"tangent", v.tangent.str()}, {"is_star", v.is_star}});
        t.add({p.str(), v.tangent.str(), yes_no(v.is_star)});
    }
    const long long expected = static_cast<long long>(d) * configspace::binom(N + 1, 2);
    r.result = {{"equation", fam.x.equation().str()},
                {"conductor", fam.x.field()->conductor()},
                {"count", fam.star_points.size()},
                {"expected", expected},
                {"certified", certified},
                {"star_points", std::move(pts)}};
    r.text.push_back(fam.x.equation().str() + " over Q(zeta_" + std::to_string(fam.x.field()->conductor()) + ")");
    r.text.push_back(t.str() + std::to_string(fam.star_points.size()) + " star points (expected " +
                     std::to_string(expected) + ", certified " + std::to_string(certified) + ")");
    return r;
}

Report components(unsigned d, unsigned N) {
    const auto table = classify::component_table(d, N);
    Report r;
    Json rows = Json::array();
    Table t({"component", "t", "order", "dim", "expected", "at expected", "condition"});
    for (const auto& c : table) {
        rows.push_back(json_label(c));
        t.add({std::string(classify::kind_name(c.kind)), c.t ? c.t->str() : "-",
               c.theta ? std::to_string(c.theta) : "-", std::to_string(c.dimension), std::to_string(c.expected),
               yes_no(c.is_expected), c.detail});
    }
    r.result = {{"d", d}, {"N", N}, {"components", std::move(rows)}};
    r.text.push_back(t.str() + std::to_string(table.size()) + " components; t is a power of z = zeta_order");
    return r;
}

// ---- config ----------------------------------------------------------------

std::string config_summary(const Configuration& c) {
    std::string s = std::to_string(c.size()) + " triples in P^" + std::to_string(c.ambient) + ", degree " +
                    std::to_string(c.degree) + ", " + (c.general_position ? "general position" : "incident") + "\n";
    Table t({"#", "plane", "vertex", "cone", "good cone"});
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& tr = c.triples[i];
        t.add({std::to_string(i + 1), tr.plane.str(), tr.vertex.str(), tr.ambient_cone().str(),
               std::string(geometry::verdict_name(tr.good.verdict)) + " (" + tr.good.method + ")"});
    }
    return s + t.str();
}

Report config_dim(const Globals& g, const std::string& file) {
    const Configuration c = load_config(g, file);
    const auto sys = configspace::vd_basis(c);
    const auto dr = configspace::dim_report(c, sys);
    Report r;
    Json basis = Json::array();
    for (const auto& f : sys.forms) basis.push_back(f.str());
    r.result = {{"configuration", json_config(c)},
                {"projective_dim", dr.projective_dim},
                {"expected", dr.expected},
                {"match", dr.match},
                {"basis", std::move(basis)}};
    r.text.push_back(config_summary(c));
    r.text.push_back(kv({{"projective dim", std::to_string(dr.projective_dim)},
                         {"expected", std::to_string(dr.expected)},
                         {"match", yes_no(dr.match)}}));
    return r;
}

Report config_suited(const Globals& g, const std::string& file) {
    const Configuration c = load_config(g, file);
    const auto rep = configspace::is_suited(c, configspace::vd_basis(c), g.seed);
    Report r;
    r.result = {{"configuration", json_config(c)}, {"suited", json_suited(rep)}};
    r.text.push_back(config_summary(c));
    r.text.push_back(kv({{"verdict", rep.label}, {"witness", rep.witness ? rep.witness->str() : "-"}}));
    return r;
}

Report config_restrict(const Globals& g, const std::string& file, const std::string& pl) {
    const Configuration c = load_config(g, file);
    const Hyperplane h = parse_plane(pl, c.field, c.ambient + 1);
    const auto rep = configspace::restriction_dim(c, configspace::vd_basis(c), h);
    Report r;
    r.result = {{"plane", h.str()},
                {"projective_dim", rep.projective_dim},
                {"expected", rep.expected},
                {"match", rep.match},
                {"contains_products", rep.contains_products}};
    r.text.push_back(kv({{"plane", h.str()},
                         {"restricted dim", std::to_string(rep.projective_dim)},
                         {"expected", std::to_string(rep.expected)},
                         {"match", yes_no(rep.match)},
                         {"contains products", yes_no(rep.contains_products)}}));
    return r;
}

Report config_extend(const Globals& g, const std::string& file, const std::string& pl, const std::string& pt) {
    const Configuration c = load_config(g, file);
    const Hyperplane h = parse_plane(pl, c.field, c.ambient + 1);
    const ProjPoint p = parse_point(pt, c.field, c.ambient + 1);
    const auto rep = configspace::extend_candidates(c, configspace::vd_basis(c), h, p);
    Report r;
    Json cands = Json::array();
    Table t({"cone (chart variables)", "verdict"});
    for (std::size_t i = 0; i < rep.basis.size(); ++i) {
        Json j{{"cone", rep.basis[i].str()}};
        if (i < rep.verdicts.size()) j["good_cone"] = json_good(rep.verdicts[i]);
        cands.push_back(std::move(j));
        t.add({rep.basis[i].str(), i < rep.verdicts.size() ? std::string(geometry::verdict_name(rep.verdicts[i].verdict))
                                                            : "-"});
    }
    r.result = {{"plane", h.str()}, {"point", p.str()}, {"candidates", std::move(cands)}};
    r.text.push_back("chart of " + h.str() + " drops X" + std::to_string(rep.chart.pivot()) + "\n" + t.str() +
                     std::to_string(rep.basis.size()) + " candidate cones");
    return r;
}

std::string label_text(const ComponentLabel& l) {
    std::vector<std::pair<std::string, std::string>> rows{{"component", std::string(classify::kind_name(l.kind))}};
    if (l.t) rows.emplace_back("t", l.t->str() + " (order " + std::to_string(l.theta) + ")");
    rows.emplace_back("dimension", label_row_dim(l));
    rows.emplace_back("expected", std::to_string(l.expected));
    rows.emplace_back("detail", l.detail);
    return kv(rows);
}

Report classify3(const Globals& g, const std::string& file) {
    const Configuration c = load_config(g, file);
    const auto label = classify::classify_three(c);
    Report r;
    r.result = {{"configuration", json_config(c)}, {"label", json_label(label)}};
    r.text.push_back(config_summary(c));
    r.text.push_back(label_text(label));
    return r;
}

// ---- build -----------------------------------------------------------------

struct BuildOut {
    std::optional<std::string> poly_path, config_path;
};

Report finish_build(Report r, const Hypersurface& x, const std::vector<ProjPoint>& pts,
                    const std::optional<Configuration>& config, const std::string& config_note, const BuildOut& out) {
    const std::string poly = format_poly_file(x);
    r.result["poly_file"] = poly;
    r.result["star_points"] = point_list(pts);
    Table t({"point", "tangent", "star"});
    for (const auto& p : pts) {
        auto v = starpoint::is_star_point(x, p);
        t.add({p.str(), v.tangent.str(), yes_no(v.is_star)});
    }
    r.text.insert(r.text.begin(), poly + "\n" + t.str());
    if (config) {
        r.result["config_file"] = format_config(*config);
        if (out.config_path) write_text(*out.config_path, format_config(*config));
    } else {
        r.result["config_file"] = nullptr;
        r.result["config_note"] = config_note;
        r.text.push_back("no configuration file: " + config_note);
        if (out.config_path) fail(Errc::NotApplicable, "no configuration to write: " + config_note);
    }
    if (out.poly_path) write_text(*out.poly_path, poly);
    return r;
}

std::optional<Configuration> try_config(const Hypersurface& x, const std::vector<ProjPoint>& pts, std::string& note) {
    try {
        std::vector<StarTriple> ts;
        for (const auto& p : pts) ts.push_back(configspace::triple_from_star(x, p));
        return Configuration::make(x.ambient(), x.degree(), x.field(), std::move(ts));
    } catch (const Error& e) {
        if (is_internal(e.code())) throw;
        note = std::string(errc_name(e.code())) + ": " + e.what();
        return std::nullopt;
    }
}

Report with_label(Report r, const std::optional<Configuration>& config) {
    if (config && config->size() == 3) {
        const auto label = classify::classify_three(*config);
        r.result["label"] = json_label(label);
        r.text.push_back(label_text(label));
    }
    return r;
}

Report build_fermat(unsigned d, unsigned N, const BuildOut& out) {
    auto fam = classify::build_fermat(d, N);
    Report r;
    r.result["family"] = "fermat";
    return finish_build(std::move(r), fam.x, fam.star_points, std::nullopt, "choose triples with `config` files",
                        out);
}

Report build_collinear(const Globals& g, unsigned d, unsigned N, const BuildOut& out) {
    auto in = classify::default_collinear_input(d, N);
    auto res = classify::build_collinear(d, N, in.line, in.points, in.planes, in.c1, g.seed);
    Report r;
    r.result["family"] = "collinear";
    r.result["line"] = in.line.str();
    r.result["auxiliary_vertex"] = res.cone_vertex.str();
    r.result["suited"] = json_suited(res.suited);
    auto forced = starpoint::forced_dth_star(res.x, in.line, {in.points.begin(), in.points.end() - 1});
    r.result["forced_last_point"] = {{"point", forced.point.str()}, {"is_star", forced.verdict.is_star}};
    r.text.push_back("last point forced by the others: " + forced.point.str() + " (" +
                     (forced.verdict.is_star ? "star" : "not star") + ")");
    r = finish_build(std::move(r), res.x, in.points, res.config, "", out);
    return with_label(std::move(r), res.config);
}

Report build_case1(const Globals& g, unsigned d, unsigned N, const std::string& t_text, const BuildOut& out) {
    FieldPtr f = CycloField::get(infer_conductor(t_text, g.field));
    const CycloNum t = parse_scalar(t_text, f);
    auto s = classify::sample_case1(d, N, t, g.seed);
    Report r;
    r.result["family"] = "case1";
    r.result["t"] = t.str();
    r.result["parameter_seed"] = s.seed;
    r = finish_build(std::move(r), s.result.x, {s.result.p1, s.result.p2, s.result.p3}, s.config, "", out);
    return with_label(std::move(r), s.config);
}

Report build_intermediate(const Globals& g, unsigned d, unsigned N, const BuildOut& out) {
    auto res = classify::build_intermediate(d, N, classify::random_intermediate_params(CycloField::rationals(), d, N, g.seed));
    Report r;
    r.result["family"] = "intermediate";
    r.result["config_dimension"] = res.config_dimension;
    r.result["expected_projective_dim"] = res.expected_pd;
    std::string note;
    auto config = try_config(res.x, res.points, note);
    r = finish_build(std::move(r), res.x, res.points, config, note, out);
    return with_label(std::move(r), config);
}

Report build_extremal(const Globals& g, unsigned d, unsigned N, const std::string& which, const BuildOut& out) {
    classify::ExtremalCase c;
    if (which == "indep") c = classify::ExtremalCase::Indep;
    else if (which == "dep") c = classify::ExtremalCase::Dep;
    else fail(Errc::Usage, "extremal case must be indep or dep");
    auto res = classify::build_extremal(d, N, c, g.seed);
    Report r;
    r.result["family"] = "extremal";
    r.result["case"] = which;
    r.result["dimensions"] = {{"locus_indep", res.dims.locus_indep},
                              {"locus_dep", res.dims.locus_dep},
                              {"config_indep", res.dims.config_indep},
                              {"config_dep", res.dims.config_dep}};
    r.result["relation_holds"] = res.relation_holds;
    Json cones = Json::array();
    for (auto v : res.tangent_cones) cones.push_back(std::string(geometry::verdict_name(v)));
    r.result["tangent_cones"] = cones;
    const Json ps = res.plane_singular ? Json(*res.plane_singular) : Json(nullptr);
    r.result["plane_singular"] = ps;
    r.text.push_back(kv({{"locus dims", std::to_string(res.dims.locus_indep) + " (indep), " +
                                            std::to_string(res.dims.locus_dep) + " (dep)"},
                         {"tangent cones", cones.dump()},
                         {"singular on P1P2P3 plane", res.plane_singular ? yes_no(*res.plane_singular) : "undecided"}}));
    std::string note;
    auto config = try_config(res.x, res.points, note);
    r = finish_build(std::move(r), res.x, res.points, config, note, out);
    return with_label(std::move(r), config);
}

// ---- selftest --------------------------------------------------------------

Report selftest_report(const Globals& g, std::ostream& progress, bool& all_pass) {
    Report r;
    Json list = Json::array();
    long passed = 0;
    auto each = [&](const selftest::CriterionResult& c) {
        if (!g.json)
            progress << (c.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << c.detail << "\n"
                     << std::flush;
    };
    for (const auto& c : selftest::run_all(g.seed, each)) {
        passed += c.pass;
        list.push_back(selftest::to_json(c));
    }
    all_pass = passed == selftest::kCriteria;
    r.result = {{"passed", passed}, {"total", selftest::kCriteria}, {"criteria", std::move(list)}};
    r.text.push_back(std::to_string(passed) + "/" + std::to_string(selftest::kCriteria) + " criteria pass");
    return r;
}

std::optional<std::uint64_t> env_seed() {
    const char* v = std::getenv(kSeedVariable);
    if (!v || !*v) return std::nullopt;
    std::uint64_t s = 0;
    std::istringstream in(v);
    in >> s;
    std::string rest;
    if (in.fail() || (in >> rest) || std::string(v).find('-') != std::string::npos)
        fail(Errc::Usage, std::string(kSeedVariable) + " must be an unsigned integer");
    return s;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Star points on projective hypersurfaces: tests, families and classification", "starpt"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::optional<std::uint64_t> seed_flag;
    std::optional<unsigned> field_flag;
    app.add_option("--seed", seed_flag, "seed for witnesses and random parameters");
    app.add_flag("--json", g.json, "print the report as JSON");
    app.add_option("--field", field_flag, "conductor n of the coefficient field Q(zeta_n)")->check(CLI::Range(1u, 100000u));

    std::string command;
    std::vector<std::string> args;
    std::function<Report()> action;
    bool selftest_ok = true;
    auto set = [&](std::string name, std::vector<std::string> a, std::function<Report()> f) {
        command = std::move(name);
        args = std::move(a);
        action = std::move(f);
    };

    // star
    auto* star = app.add_subcommand("star", "star-point tests")->require_subcommand(1);
    std::string file, pt, ln, pl, t_text, which;
    std::vector<std::string> candidates;
    unsigned d = 0, N = 0;
    {
        auto* c = star->add_subcommand("check", "test one point");
        c->add_option("file", file, "hypersurface file")->required();
        c->add_option("point", pt, "point x0:x1:...")->required();
        c->callback([&] { set("star check", {file, pt}, [&] { return star_check(g, file, pt); }); });

        auto* l = star->add_subcommand("line", "star points on a line");
        l->add_option("file", file, "hypersurface file")->required();
        l->add_option("line", ln, "two points A;B")->required();
        l->add_option("--candidate", candidates, "candidate point when the line lies in X");
        l->callback([&] {
            std::vector<std::string> a{file, ln};
            for (const auto& cnd : candidates) a.push_back("--candidate=" + cnd);
            set("star line", a, [&] { return star_line(g, file, ln, candidates); });
        });

        auto* p = star->add_subcommand("polar", "polar hypersurface at a point");
        p->add_option("file", file, "hypersurface file")->required();
        p->add_option("point", pt, "point x0:x1:...")->required();
        p->callback([&] { set("star polar", {file, pt}, [&] { return star_polar(g, file, pt); }); });
    }

    auto* fer = app.add_subcommand("fermat", "star points of the Fermat hypersurface");
    fer->add_option("d", d, "degree")->required();
    fer->add_option("N", N, "ambient dimension")->required();
    fer->callback([&] { set("fermat", {std::to_string(d), std::to_string(N)}, [&] { return fermat(d, N); }); });

    auto* cfg = app.add_subcommand("config", "configuration files")->require_subcommand(1);
    {
        auto* c = cfg->add_subcommand("dim", "dimension of the linear system");
        c->add_option("file", file, "configuration file")->required();
        c->callback([&] { set("config dim", {file}, [&] { return config_dim(g, file); }); });

        auto* s = cfg->add_subcommand("suited", "search a suited witness");
        s->add_option("file", file, "configuration file")->required();
        s->callback([&] { set("config suited", {file}, [&] { return config_suited(g, file); }); });

        auto* r = cfg->add_subcommand("restrict", "restriction to a hyperplane");
        r->add_option("file", file, "configuration file")->required();
        r->add_option("plane", pl, "linear form")->required();
        r->callback([&] { set("config restrict", {file, pl}, [&] { return config_restrict(g, file, pl); }); });

        auto* e = cfg->add_subcommand("extend", "cones that extend the configuration");
        e->add_option("file", file, "configuration file")->required();
        e->add_option("plane", pl, "linear form")->required();
        e->add_option("point", pt, "vertex on the plane")->required();
        e->callback([&] { set("config extend", {file, pl, pt}, [&] { return config_extend(g, file, pl, pt); }); });
    }

    auto* cl3 = app.add_subcommand("classify3", "component of a three-point configuration");
    cl3->add_option("file", file, "configuration file")->required();
    cl3->callback([&] { set("classify3", {file}, [&] { return classify3(g, file); }); });

    auto* comp = app.add_subcommand("components", "component table for three star points");
    comp->add_option("d", d, "degree")->required();
    comp->add_option("N", N, "ambient dimension")->required();
    comp->callback([&] { set("components", {std::to_string(d), std::to_string(N)}, [&] { return components(d, N); }); });

    auto* bld = app.add_subcommand("build", "hypersurfaces with prescribed star points")->require_subcommand(1);
    BuildOut bo;
    auto outputs = [&](CLI::App* c) {
        c->add_option("--write-poly", bo.poly_path, "write the hypersurface file");
        c->add_option("--write-config", bo.config_path, "write the configuration file");
    };
    auto dn = [&](CLI::App* c) {
        c->add_option("d", d, "degree")->required();
        c->add_option("N", N, "ambient dimension")->required();
        outputs(c);
    };
    auto dn_args = [&](std::string kind, std::vector<std::string> more = {}) {
        std::vector<std::string> a{kind, std::to_string(d), std::to_string(N)};
        a.insert(a.end(), more.begin(), more.end());
        return a;
    };
    {
        auto* c = bld->add_subcommand("fermat", "Fermat hypersurface");
        dn(c);
        c->callback([&] { set("build", dn_args("fermat"), [&] { return build_fermat(d, N, bo); }); });

        auto* col = bld->add_subcommand("collinear", "d star points on a line");
        dn(col);
        col->callback([&] { set("build", dn_args("collinear"), [&] { return build_collinear(g, d, N, bo); }); });

        auto* c1 = bld->add_subcommand("case1", "three star points in general position");
        dn(c1);
        c1->add_option("t", t_text, "the root of unity t, e.g. z3 or -1")->required();
        c1->callback([&] { set("build", dn_args("case1", {t_text}), [&] { return build_case1(g, d, N, t_text, bo); }); });

        auto* in = bld->add_subcommand("intermediate", "one vertex off the other planes");
        dn(in);
        in->callback([&] { set("build", dn_args("intermediate"), [&] { return build_intermediate(g, d, N, bo); }); });

        auto* ex = bld->add_subcommand("extremal", "all vertices on all planes");
        dn(ex);
        ex->add_option("case", which, "indep or dep")->required()->check(CLI::IsMember({"indep", "dep"}));
        ex->callback([&] { set("build", dn_args("extremal", {which}), [&] { return build_extremal(g, d, N, which, bo); }); });
    }

    auto* st = app.add_subcommand("selftest", "run the acceptance battery");
    st->callback([&] { set("selftest", {}, [&] { return selftest_report(g, err, selftest_ok); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (auto s = env_seed()) g.seed = *s;
        if (seed_flag) g.seed = *seed_flag;
        g.field = field_flag;
        const auto start = std::chrono::steady_clock::now();
        Report r = action();
        r.command = command;
        r.args = args;
        r.seed = g.seed;
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out << (g.json ? r.json() : r.human());
        return selftest_ok ? 0 : 1;
    } catch (const Error& e) {
        err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return is_internal(e.code()) ? 1 : 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace starpt::shell
