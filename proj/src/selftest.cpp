// The acceptance battery. Each criterion recomputes its expected values from
// an independent route (closed formulas typed here, Leibniz expansion,
// monomial-ideal membership, explicit Fermat arithmetic) and compares them
// with the library.

#include "starpt/selftest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace starpt::selftest {

using algebra::CycloField;
using algebra::CycloNum;
using algebra::FieldPtr;
using algebra::Monomial;
using algebra::MultiPoly;
using algebra::Rational;
using algebra::UniPoly;
using algebra::Vector;
using classify::ComponentLabel;
using classify::Kind;
using configspace::Configuration;
using configspace::StarTriple;
using geometry::Hyperplane;
using geometry::Hypersurface;
using geometry::ProjLine;
using geometry::ProjPoint;
using shell::Json;

namespace {

// Binomial coefficient by the multiplicative formula, kept separate from the
// library's so the dimension checks compare two computations.
long long choose(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

MultiPoly var(FieldPtr f, unsigned n, unsigned i) { return MultiPoly::variable(f, n, i); }

ProjPoint point(FieldPtr f, const std::vector<long>& c) {
    Vector v;
    for (long x : c) v.push_back(f->from_int(x));
    return ProjPoint(std::move(v));
}

ProjPoint point_q(FieldPtr f, const std::vector<Rational>& c) {
    Vector v;
    for (const auto& x : c) v.push_back(f->from_rational(x));
    return ProjPoint(std::move(v));
}

Hyperplane plane(FieldPtr f, const std::vector<long>& c) {
    Vector v;
    for (long x : c) v.push_back(f->from_int(x));
    return Hyperplane(std::move(v));
}

long small_int(std::mt19937_64& rng, long radius) {
    return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * radius + 1)) - radius;
}

// ---- fixtures --------------------------------------------------------------

// A point of the Fermat hypersurface of degree d in P^N with three or four
// nonzero coordinates, over Q(zeta_6d). A coordinate z^(c + 6k) has d-th
// power zeta_6^c, and zeta_6^s + zeta_6^(s+2) + zeta_6^(s+4) = 0 while
// zeta_6^s + zeta_6^(s+3) = 0.
ProjPoint random_fermat_point(unsigned d, unsigned N, FieldPtr big, std::mt19937_64& rng) {
    const unsigned n = N + 1;
    std::vector<unsigned> slots(n);
    std::iota(slots.begin(), slots.end(), 0u);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<long> powers;
    const long s = static_cast<long>(rng() % 6);
    if (N >= 3 && rng() % 2) {
        const long s2 = static_cast<long>(rng() % 6);
        powers = {s, s + 3, s2, s2 + 3};
    } else {
        powers = {s, s + 2, s + 4};
    }
    Vector c(n, big->zero());
    for (std::size_t i = 0; i < powers.size(); ++i) {
        const long k = static_cast<long>(rng() % d);
        c[slots[i]] = big->root_of_unity(powers[i] + 6 * k);
    }
    return ProjPoint(std::move(c));
}

Hypersurface quartic_fixture() {
    FieldPtr f = CycloField::rationals();
    const MultiPoly x0 = var(f, 4, 0), x1 = var(f, 4, 1), x2 = var(f, 4, 2), x3 = var(f, 4, 3);
    return Hypersurface(x2 * x1 * (x2 - x1) * (x2 + x1) + x3 * (x1 - x0) * (x3 + x1 - x0) * (x3 - x1 + x0));
}

Configuration config_from(const Hypersurface& x, const std::vector<ProjPoint>& pts) {
    std::vector<StarTriple> ts;
    for (const auto& p : pts) ts.push_back(configspace::triple_from_star(x, p));
    return Configuration::make(x.ambient(), x.degree(), x.field(), std::move(ts));
}

// Fermat star point E_ij(xi) with xi = zeta_2d^(2k+1).
ProjPoint fermat_star(const classify::FermatFamily& fam, unsigned i, unsigned j, unsigned k) {
    FieldPtr f = fam.x.field();
    return classify::fermat_point(f, fam.x.ambient(), i, j, f->root_of_unity(2 * k + 1));
}

long totient(unsigned n) {
    long c = 0;
    for (unsigned k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    return c;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

// ---- 1. Fermat enumeration -------------------------------------------------

CriterionResult fermat_enumeration(std::uint64_t seed) {
    CriterionResult r{1, "Fermat enumeration", true, "", Json::object()};
    const std::vector<std::pair<unsigned, unsigned>> cases{{3, 2}, {3, 3}, {4, 3}, {3, 4}, {5, 3}};
    Json rows = Json::array();
    std::vector<std::string> notes;
    for (auto [d, N] : cases) {
        auto fam = classify::build_fermat(d, N);
        const long long expected = d * choose(N + 1, 2);
        std::set<std::string> distinct;
        long long certified = 0;
        for (const auto& p : fam.star_points) {
            distinct.insert(p.str());
            if (p.support() == 2 && starpoint::is_star_point(fam.x, p).is_star) ++certified;
        }
        const bool ok = static_cast<long long>(fam.star_points.size()) == expected &&
                        static_cast<long long>(distinct.size()) == expected && certified == expected;
        r.pass = r.pass && ok;
        rows.push_back({{"d", d}, {"N", N}, {"count", fam.star_points.size()}, {"expected", expected},
                        {"certified", certified}});
        notes.push_back("(" + std::to_string(d) + "," + std::to_string(N) + "): " +
                        std::to_string(fam.star_points.size()) + "/" + std::to_string(expected));
    }
    r.data["families"] = std::move(rows);

    std::mt19937_64 rng(seed ^ 0xF3A7u);
    std::set<std::string> seen;
    long rejected = 0, sampled = 0;
    for (std::size_t i = 0; sampled < 30; ++i) {
        const auto [d, N] = cases[i % cases.size()];
        auto fam = classify::build_fermat(d, N);
        FieldPtr big = CycloField::get(6 * d);
        Hypersurface xb(fam.x.equation().embed(big));
        ProjPoint p = random_fermat_point(d, N, big, rng);
        if (!seen.insert(std::to_string(d) + "/" + std::to_string(N) + "/" + p.str()).second) continue;
        ++sampled;
        if (!xb.contains(p) || p.support() < 3) {
            r.pass = false;
            notes.push_back("generator produced a bad point " + p.str());
            continue;
        }
        if (!starpoint::is_star_point(xb, p).is_star) ++rejected;
    }
    // the classical example point of the cubic surface
    auto f33 = classify::build_fermat(3, 3);
    const bool classic = !starpoint::is_star_point(f33.x, point(f33.x.field(), {3, 4, 5, -6})).is_star;
    r.pass = r.pass && rejected == 30 && classic;
    r.data["random_points"] = sampled;
    r.data["random_rejected"] = rejected;
    r.data["point_3_4_5_-6_rejected"] = classic;
    notes.push_back(std::to_string(rejected) + "/30 random points rejected");
    r.detail = join(notes);
    return r;
}

// ---- 2. polar criterion ----------------------------------------------------

CriterionResult polar_equivalence(std::uint64_t seed) {
    CriterionResult r{2, "Star test via polar", true, "", Json::object()};
    struct Pair {
        Hypersurface x;
        ProjPoint p;
        std::string source;
    };
    std::vector<Pair> pairs;
    std::mt19937_64 rng(seed ^ 0x9013u);

    for (auto [d, N] : std::vector<std::pair<unsigned, unsigned>>{{3, 3}, {4, 3}, {3, 4}}) {
        auto fam = classify::build_fermat(d, N);
        for (const auto& p : fam.star_points) pairs.push_back({fam.x, p, "fermat"});
        FieldPtr big = CycloField::get(6 * d);
        Hypersurface xb(fam.x.equation().embed(big));
        for (int k = 0; k < 10; ++k) pairs.push_back({xb, random_fermat_point(d, N, big, rng), "fermat-random"});
    }

    FieldPtr q = CycloField::rationals();
    const Hypersurface quadric(var(q, 4, 0) * var(q, 4, 3) - var(q, 4, 1) * var(q, 4, 2));
    pairs.push_back({quadric, point(q, {1, 0, 0, 0}), "quadric"});
    pairs.push_back({quadric, point(q, {0, 0, 0, 1}), "quadric"});
    for (int k = 0; k < 20; ++k) {
        const long a = small_int(rng, 9), b = small_int(rng, 9);
        pairs.push_back({quadric, point(q, {1, a, b, a * b}), "quadric"});
    }

    const Hypersurface quartic = quartic_fixture();
    for (long s = -6; s <= 6; ++s) pairs.push_back({quartic, point(q, {1, s, 0, 0}), "quartic"});
    pairs.push_back({quartic, point(q, {0, 1, 0, 0}), "quartic"});
    for (long a = -3; a <= 3; ++a) {
        pairs.push_back({quartic, point(q, {a, 1, 1, 0}), "quartic"});
        pairs.push_back({quartic, point(q, {a, 1, -1, 0}), "quartic"});
        pairs.push_back({quartic, point(q, {a, 0, 1, 0}), "quartic"});
    }

    for (int k = 0; k < 60; ++k) {
        const unsigned d = 3 + static_cast<unsigned>(k % 2), N = 2 + static_cast<unsigned>((k / 2) % 2), n = N + 1;
        std::vector<unsigned> all(n);
        std::iota(all.begin(), all.end(), 0u);
        MultiPoly g = classify::random_form(q, n, all, d, rng);
        std::vector<long> pc{1};
        for (unsigned i = 1; i < n; ++i) pc.push_back(small_int(rng, 4));
        ProjPoint p = point(q, pc);
        MultiPoly f = g - var(q, n, 0).pow(d) * g.eval(p.coords());
        if (f.is_zero()) continue;
        pairs.push_back({Hypersurface(f), p, "random"});
    }

    {
        auto data = classify::default_collinear_input(3, 3);
        auto col = classify::build_collinear(3, 3, data.line, data.points, data.planes, data.c1);
        for (const auto& p : data.points) pairs.push_back({col.x, p, "family"});
        FieldPtr f3 = CycloField::get(3);
        auto c1 = classify::sample_case1(3, 3, f3->root_of_unity(1), seed);
        for (const auto& p : {c1.result.p1, c1.result.p2, c1.result.p3}) pairs.push_back({c1.result.x, p, "family"});
        auto inter = classify::build_intermediate(3, 3, classify::random_intermediate_params(q, 3, 3, seed));
        for (const auto& p : inter.points) pairs.push_back({inter.x, p, "family"});
        auto ext = classify::build_extremal(3, 5, classify::ExtremalCase::Indep, seed);
        for (const auto& p : ext.points) pairs.push_back({ext.x, p, "family"});
    }

    std::map<std::string, std::pair<long, long>> by_source;  // tested, star
    long tested = 0, agree = 0, stars = 0, skipped = 0;
    std::vector<std::string> mismatches;
    for (const auto& pr : pairs) {
        bool a = false, b = false;
        try {
            a = starpoint::is_star_point(pr.x, pr.p).is_star;
            b = starpoint::star_via_polar(pr.x, pr.p);
        } catch (const Error& e) {
            if (e.code() != Errc::SingularPoint) throw;
            ++skipped;
            continue;
        }
        ++tested;
        stars += a;
        by_source[pr.source].first++;
        by_source[pr.source].second += a;
        if (a == b) ++agree;
        else mismatches.push_back(pr.source + " " + pr.p.str());
    }
    r.pass = tested >= 200 && agree == tested && stars > 0 && stars < tested;
    Json src = Json::object();
    for (const auto& [k, v] : by_source) src[k] = {{"pairs", v.first}, {"star", v.second}};
    r.data = {{"pairs", tested}, {"agree", agree}, {"star", stars}, {"singular_skipped", skipped}, {"by_source", src}};
    r.detail = std::to_string(agree) + "/" + std::to_string(tested) + " pairs agree (" + std::to_string(stars) +
               " star)" + (mismatches.empty() ? "" : "; mismatch at " + mismatches.front());
    return r;
}

// ---- 3. dimension formulas -------------------------------------------------

CriterionResult dimension_formulas(std::uint64_t seed) {
    CriterionResult r{3, "Dimension formulas", true, "", Json::object()};
    std::mt19937_64 rng(seed ^ 0xD1u);
    Json rows = Json::array();
    long checked = 0, restrictions = 0;
    std::vector<std::string> notes;
    for (auto [d, N] : std::vector<std::pair<unsigned, unsigned>>{{3, 3}, {4, 3}, {3, 4}}) {
        auto fam = classify::build_fermat(d, N);
        std::vector<std::pair<std::string, Configuration>> configs;
        configs.emplace_back("fermat e=1", config_from(fam.x, {fermat_star(fam, 0, 1, 0)}));
        configs.emplace_back("fermat e=1", config_from(fam.x, {fermat_star(fam, 1, 2, 1)}));
        configs.emplace_back("fermat e=2", config_from(fam.x, {fermat_star(fam, 0, 1, 0), fermat_star(fam, 0, 1, 1)}));
        configs.emplace_back("fermat e=2", config_from(fam.x, {fermat_star(fam, 0, 1, 0), fermat_star(fam, 0, 2, 1)}));
        // both vertices on both planes: outside the general-position hypothesis
        configs.emplace_back("fermat e=2 line in X",
                             config_from(fam.x, {fermat_star(fam, 0, 1, 0), fermat_star(fam, 2, 3, 0)}));
        configs.emplace_back("fermat e=3", config_from(fam.x, {fermat_star(fam, 0, 1, 0), fermat_star(fam, 0, 1, 1),
                                                               fermat_star(fam, 0, 2, 2)}));
        auto c1 = classify::sample_case1(d, N, CycloField::get(d)->root_of_unity(1), seed);
        configs.emplace_back("case1 e=3", c1.config);

        std::set<long long> seen_e;
        for (const auto& [name, config] : configs) {
            const long long e = static_cast<long long>(config.size());
            auto sys = configspace::vd_basis(config);
            auto suited = configspace::is_suited(config, sys, seed);
            Json row{{"d", d}, {"N", N}, {"source", name}, {"suited", suited.suited},
                     {"general_position", config.general_position}};
            if (!suited.suited || !config.general_position) {
                rows.push_back(std::move(row));
                continue;
            }
            seen_e.insert(e);
            const long long want = choose(d - e + N, N);
            const bool dim_ok = sys.projective_dim() == want && configspace::dim_report(config, sys).match;
            long plane_ok = 0;
            for (int k = 0; k < 5;) {
                std::vector<long> c(N + 1);
                for (auto& x : c) x = small_int(rng, 5);
                if (std::all_of(c.begin(), c.end(), [](long x) { return x == 0; })) continue;
                Hyperplane h = plane(config.field, c);
                bool on = false;
                for (const auto& t : config.triples) on = on || h.contains(t.vertex);
                if (on) continue;
                auto rep = configspace::restriction_dim(config, sys, h);
                plane_ok += rep.projective_dim == choose(d - e + N - 1, N - 1) && rep.match;
                ++k;
            }
            ++checked;
            restrictions += plane_ok;
            r.pass = r.pass && dim_ok && plane_ok == 5;
            row["projective_dim"] = sys.projective_dim();
            row["expected"] = want;
            row["restrictions_ok"] = plane_ok;
            rows.push_back(std::move(row));
            if (!dim_ok || plane_ok != 5)
                notes.push_back(name + " at (" + std::to_string(d) + "," + std::to_string(N) + ") dim " +
                                std::to_string(sys.projective_dim()) + " vs " + std::to_string(want));
        }
        if (seen_e.size() != 3) {
            r.pass = false;
            notes.push_back("missing a suited configuration for some e at (" + std::to_string(d) + "," +
                            std::to_string(N) + ")");
        }
    }
    r.data["configurations"] = std::move(rows);
    r.detail = std::to_string(checked) + " suited configurations, " + std::to_string(restrictions) +
               " hyperplane restrictions match" + (notes.empty() ? "" : "; " + join(notes));
    return r;
}

// ---- 4. tridiagonal identity -----------------------------------------------

using QPoly = UniPoly<Rational>;

// Leibniz expansion over all permutations.
QPoly leibniz_det(const std::vector<std::vector<QPoly>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    QPoly det;
    do {
        long inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        QPoly term = QPoly::constant(Rational(inversions % 2 ? -1 : 1));
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

CriterionResult tridiagonal(std::uint64_t) {
    CriterionResult r{4, "Tridiagonal identity", true, "", Json::object()};
    const QPoly diag{Rational(1), Rational(1)}, upper{Rational(-1)}, lower{Rational(0), Rational(-1)};
    long symbolic_ok = 0;
    for (unsigned j = 2; j <= 8; ++j) {
        const std::size_t m = j - 1;
        std::vector<std::vector<QPoly>> a(m, std::vector<QPoly>(m));
        for (std::size_t i = 0; i < m; ++i) {
            a[i][i] = diag;
            if (i + 1 < m) {
                a[i][i + 1] = upper;
                a[i + 1][i] = lower;
            }
        }
        const QPoly want(std::vector<Rational>(j, Rational(1)));
        symbolic_ok += leibniz_det(a) == want;
    }
    long numeric = 0, numeric_ok = 0;
    for (unsigned theta = 2; theta <= 6; ++theta) {
        FieldPtr f = CycloField::get(theta);
        for (unsigned k = 1; k < theta; ++k) {
            if (std::gcd(k, theta) != 1) continue;
            const CycloNum t = f->root_of_unity(k);
            for (unsigned j = 2; j <= 8; ++j) {
                const bool should = j % theta == 0;
                auto res = classify::tridiag_solve(j, t);
                const bool kernel = !algebra::nullspace(classify::tridiag_matrix(j, t), f->one()).empty();
                ++numeric;
                numeric_ok += res.solution.has_value() == should && kernel == should && res.det.is_zero() == should;
            }
        }
    }
    r.pass = symbolic_ok == 7 && numeric_ok == numeric;
    r.data = {{"symbolic_ok", symbolic_ok}, {"numeric_cases", numeric}, {"numeric_ok", numeric_ok}};
    r.detail = "det = 1+t+...+t^(j-1) for " + std::to_string(symbolic_ok) + "/7 sizes; " + std::to_string(numeric_ok) +
               "/" + std::to_string(numeric) + " numeric cases solvable exactly when t^j = 1";
    return r;
}

// ---- 5. collinear star points ----------------------------------------------

CriterionResult collinear(std::uint64_t seed) {
    CriterionResult r{5, "Collinear star points", true, "", Json::object()};
    std::vector<std::string> notes;
    Json builds = Json::array();
    for (unsigned d : {3u, 4u}) {
        auto data = classify::default_collinear_input(d, 3);
        auto col = classify::build_collinear(d, 3, data.line, data.points, data.planes, data.c1, seed);
        long certified = 0;
        for (std::size_t i = 0; i < d; ++i) {
            auto v = starpoint::is_star_point(col.x, data.points[i]);
            certified += v.is_star && v.tangent == data.planes[i];
        }
        auto line = starpoint::star_points_on_line(col.x, data.line);
        std::vector<ProjPoint> known(data.points.begin(), data.points.end() - 1);
        auto forced = starpoint::forced_dth_star(col.x, data.line, known);
        const bool forced_ok = forced.point == data.points.back() && forced.verdict.is_star;
        const bool ok = certified == d && line.star_count() == d && !line.line_in_x && forced_ok;
        r.pass = r.pass && ok;
        builds.push_back({{"d", d}, {"certified", certified}, {"on_line", line.star_count()}, {"forced", forced_ok}});
        notes.push_back("d=" + std::to_string(d) + ": " + std::to_string(certified) + " certified, forced " +
                        (forced_ok ? "ok" : "FAILED"));
    }
    {
        auto fam = classify::build_fermat(3, 3);
        FieldPtr f = fam.x.field();
        ProjLine l(ProjPoint::unit(f, 4, 0), ProjPoint::unit(f, 4, 1));
        auto forced = starpoint::forced_dth_star(fam.x, l, {fermat_star(fam, 0, 1, 0), fermat_star(fam, 0, 1, 1)});
        const bool ok = forced.point == fermat_star(fam, 0, 1, 2) && forced.verdict.is_star;
        r.pass = r.pass && ok;
        r.data["fermat_forced"] = ok;
    }
    {
        const Hypersurface x = quartic_fixture();
        FieldPtr q = x.field();
        ProjLine l(point(q, {1, 0, 0, 0}), point(q, {0, 1, 0, 0}));
        std::vector<ProjPoint> candidates{point(q, {0, 1, 0, 0})};
        for (long s = -10; s <= 10; ++s) candidates.push_back(point(q, {1, s, 0, 0}));
        for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}, {-1, 2}, {2, 3}, {3, 2}, {5, 7}})
            candidates.push_back(point_q(q, {Rational(1), Rational(a, b), Rational(0), Rational(0)}));
        auto rep = starpoint::star_points_on_line(x, l, candidates);
        std::vector<std::string> stars;
        bool tangents_ok = true;
        for (const auto& lp : rep.points)
            if (lp.verdict && lp.verdict->is_star) {
                stars.push_back(lp.point.str());
                const bool first = lp.point == point(q, {1, 0, 0, 0});
                tangents_ok = tangents_ok && lp.verdict->tangent == plane(q, first ? std::vector<long>{0, 0, 0, 1}
                                                                                   : std::vector<long>{0, 0, 1, 0});
            }
        std::sort(stars.begin(), stars.end());
        const bool ok = rep.line_in_x && stars == std::vector<std::string>{"1:0:0:0", "1:1:0:0"} && tangents_ok;
        r.pass = r.pass && ok;
        r.data["quartic"] = {{"line_in_x", rep.line_in_x}, {"candidates", candidates.size()}, {"star", stars}};
        notes.push_back("quartic line: " + std::to_string(stars.size()) + " star points among " +
                        std::to_string(candidates.size()) + " candidates");
    }
    r.data["builds"] = std::move(builds);
    r.detail = join(notes);
    return r;
}

// ---- 6. component classification ------------------------------------------

CriterionResult components(std::uint64_t) {
    CriterionResult r{6, "Component classification", true, "", Json::object()};
    std::vector<std::string> notes;
    {
        auto table = classify::component_table(3, 3);
        std::vector<long long> dims;
        for (const auto& c : table) dims.push_back(c.dimension);
        std::sort(dims.begin(), dims.end());
        const bool ok = dims == std::vector<long long>{15, 15, 15, 16};
        r.pass = r.pass && ok;
        r.data["table_3_3"] = dims;
    }
    Json counts = Json::array();
    for (unsigned d = 3; d <= 8; ++d)
        for (unsigned N : {3u, 4u}) {
            auto table = classify::component_table(d, N);
            long expected_count = 0;
            const long long expected = 6 * N + choose(N + d - 3, N - 3) - 4;
            for (const auto& c : table) expected_count += c.dimension == expected && c.is_expected;
            const long want = N == 3 ? totient(d) + totient(d - 1) : totient(d);
            const bool ok = table.size() == 2 * d - 2 && expected_count == want;
            r.pass = r.pass && ok;
            counts.push_back({{"d", d}, {"N", N}, {"components", table.size()}, {"at_expected", expected_count}});
            if (!ok) notes.push_back("table (" + std::to_string(d) + "," + std::to_string(N) + ") mismatch");
        }
    r.data["counts"] = std::move(counts);

    // Fermat triples on X_{d,3}: (E01(a), E01(b), E02(c)) and (E01(a), E02(b), E12(c)).
    long first = 0, first_ok = 0, second = 0, second_ok = 0, second_v1 = 0;
    for (unsigned d : {3u, 4u}) {
        auto fam = classify::build_fermat(d, 3);
        FieldPtr f = fam.x.field();
        auto xi = [&](unsigned k) { return f->root_of_unity(2 * k + 1); };
        for (unsigned a = 0; a < d; ++a)
            for (unsigned b = 0; b < d; ++b)
                for (unsigned c = 0; c < d; ++c) {
                    if (a != b) {
                        auto label = classify::classify_three(config_from(
                            fam.x, {fermat_star(fam, 0, 1, a), fermat_star(fam, 0, 1, b), fermat_star(fam, 0, 2, c)}));
                        ++first;
                        first_ok += label.kind == Kind::Vt && label.t && *label.t == xi(a) / xi(b);
                    }
                    auto label = classify::classify_three(config_from(
                        fam.x, {fermat_star(fam, 0, 1, a), fermat_star(fam, 0, 2, b), fermat_star(fam, 1, 2, c)}));
                    const CycloNum q = xi(b) / (xi(a) * xi(c));
                    ++second;
                    if (q == -f->one()) {
                        // the three vertices are collinear
                        ++second_v1;
                        second_ok += label.kind == Kind::V1;
                    } else {
                        second_ok += label.kind == Kind::Vt && label.t && *label.t == q * q;
                    }
                }
    }
    r.pass = r.pass && first_ok == first && second_ok == second;
    r.data["fermat_triples"] = {{"type_a", first}, {"type_a_ok", first_ok}, {"type_b", second},
                                {"type_b_ok", second_ok}, {"type_b_collinear", second_v1}};
    notes.insert(notes.begin(), "table(3,3) dims 15,15,15,16; Fermat triples " + std::to_string(first_ok) + "/" +
                                    std::to_string(first) + " and " + std::to_string(second_ok) + "/" +
                                    std::to_string(second));
    r.detail = join(notes);
    return r;
}

// ---- 7. Case I gate --------------------------------------------------------

bool in_degenerate_ideal(const MultiPoly& f) {
    for (const auto& [m, c] : f.terms()) {
        const bool x0x1 = m[0] > 0 && m[1] > 0;
        bool quadratic_tail = false;
        unsigned tail = 0;
        for (unsigned i = 3; i < f.nvars(); ++i) tail += m[i];
        quadratic_tail = tail >= 2;
        if (!x0x1 && !quadratic_tail) return false;
    }
    return true;
}

CriterionResult case1_gate(std::uint64_t seed) {
    CriterionResult r{7, "Case I gate", true, "", Json::object()};
    long gates = 0, gate_ok = 0, accepted = 0;
    std::vector<std::string> notes;
    for (unsigned d : {3u, 4u, 5u})
        for (unsigned n = 1; n <= 12; ++n) {
            FieldPtr f = CycloField::get(n);
            for (unsigned k = 0; k < n; ++k) {
                const CycloNum t = f->root_of_unity(k);
                const unsigned theta = n / std::gcd(n, k);
                const bool want = theta > 1 && (d % theta == 0 || (d - 1) % theta == 0);
                bool got = false;
                try {
                    classify::build_case1(d, 3, t, classify::random_case1_params(d, 3, t, seed));
                    got = true;
                } catch (const Error& e) {
                    if (e.code() != Errc::NotRootOfUnity) throw;
                }
                ++gates;
                accepted += got;
                if (got == want) ++gate_ok;
                else notes.push_back("t = z" + std::to_string(n) + "^" + std::to_string(k) + " at d=" + std::to_string(d));
            }
        }
    std::vector<std::pair<std::string, CycloNum>> others;
    {
        FieldPtr q = CycloField::rationals(), g4 = CycloField::get(4), g3 = CycloField::get(3);
        others = {{"2", q->from_int(2)},
                  {"-1/2", q->from_rational(Rational(-1, 2))},
                  {"3", q->from_int(3)},
                  {"1+z4", g4->one() + g4->gen()},
                  {"2*z3", g3->gen() * g3->from_int(2)}};
    }
    for (const auto& [name, t] : others) {
        bool rejected = false;
        try {
            classify::build_case1(4, 3, t, classify::random_case1_params(4, 3, t, seed));
        } catch (const Error& e) {
            rejected = e.code() == Errc::NotRootOfUnity;
        }
        ++gates;
        if (rejected) ++gate_ok;
        else notes.push_back("non-root " + name + " accepted");
    }

    // Degenerate forms: t with neither t^d = 1 nor t^(d-1) = 1.
    long degenerate = 0, degenerate_ok = 0;
    std::vector<std::tuple<unsigned, unsigned, CycloNum>> bad{
        {3, 3, CycloField::rationals()->from_int(2)},
        {5, 3, CycloField::get(3)->root_of_unity(1)},
        {4, 3, CycloField::get(5)->root_of_unity(2)},
        {5, 4, CycloField::rationals()->from_rational(Rational(-1, 2))},
        {6, 3, CycloField::get(4)->root_of_unity(1)}};
    for (const auto& [d, N, t] : bad) {
        MultiPoly f = classify::assemble_case1(d, N, t, classify::random_case1_params(d, N, t, seed));
        FieldPtr fl = t.field();
        const unsigned n = N + 1;
        Vector p3(n, fl->zero());
        p3[2] = fl->one();
        bool singular = false;
        try {
            geometry::tangent_hyperplane(Hypersurface(f), ProjPoint(p3));
        } catch (const Error& e) {
            singular = e.code() == Errc::SingularPoint;
        }
        const bool ok = !f.is_zero() && in_degenerate_ideal(f) && geometry::multiplicity_at(f, p3) >= 2 && singular;
        ++degenerate;
        degenerate_ok += ok;
    }
    r.pass = gate_ok == gates && degenerate_ok == degenerate;
    r.data = {{"gates", gates}, {"gate_ok", gate_ok}, {"accepted", accepted}, {"degenerate", degenerate},
              {"degenerate_ok", degenerate_ok}};
    r.detail = std::to_string(gate_ok) + "/" + std::to_string(gates) + " gate decisions match (" +
               std::to_string(accepted) + " accepted); " + std::to_string(degenerate_ok) + "/" +
               std::to_string(degenerate) + " degenerate forms in <X0X1, X3^2> and singular at (0:0:1:0)" +
               (notes.empty() ? "" : "; " + join(notes));
    return r;
}

// ---- 8. extremal numerics --------------------------------------------------

CriterionResult extremal(std::uint64_t seed) {
    CriterionResult r{8, "Extremal numerics", true, "", Json::object()};
    // loci dimensions as displayed for the two extremal components
    auto ext1 = [](long long N, long long d) {
        return 3 * N + 3 * (N - 3) + choose(N + d - 3, N) + 3 * choose(N + d - 4, N - 2) + 3 * choose(N + d - 5, N - 4) +
               choose(N + d - 6, N - 6) - 1;
    };
    auto ext2 = [](long long N, long long d) {
        return 3 * N + 2 * (N - 3) + choose(N + d - 2, N) + 2 * choose(N + d - 4, N - 3) + choose(N + d - 5, N - 3) +
               choose(N + d - 5, N - 5);
    };
    auto at55 = classify::extremal_dimensions(5, 5);
    const bool both116 = at55.locus_indep == 116 && at55.locus_dep == 116 && ext1(5, 5) == 116 && ext2(5, 5) == 116;
    long grid = 0, grid_ok = 0;
    for (long long d = 3; d <= 8; ++d)
        for (long long N = 5; N <= 7; ++N) {
            auto e = classify::extremal_dimensions(N, d);
            ++grid;
            grid_ok += e.locus_indep == ext1(N, d) && e.locus_dep == ext2(N, d) &&
                       e.locus_dep - e.locus_indep == 4 - N + choose(N + d - 6, N - 1);
        }

    auto indep = classify::build_extremal(3, 5, classify::ExtremalCase::Indep, seed);
    auto config = config_from(indep.x, indep.points);
    auto label = classify::classify_three(config);
    const long pd = configspace::vd_basis(config).projective_dim();
    const bool indep_ok = label.kind == Kind::ExtremalIndep && pd == choose(5 + 3 - 3, 5) && indep.relation_holds;

    auto dep = classify::build_extremal(3, 5, classify::ExtremalCase::Dep, seed);
    Json dep_cones = Json::array();
    for (auto v : dep.tangent_cones) dep_cones.push_back(std::string(geometry::verdict_name(v)));

    r.pass = both116 && grid_ok == grid && indep_ok;
    r.data = {{"locus_at_5_5", {at55.locus_indep, at55.locus_dep}},
              {"grid", grid},
              {"grid_ok", grid_ok},
              {"indep_build", {{"label", std::string(classify::kind_name(label.kind))}, {"projective_dim", pd}}},
              {"dep_build_tangent_cones", dep_cones},
              {"dep_build_plane_singular", dep.plane_singular ? Json(*dep.plane_singular) : Json(nullptr)},
              {"indep_build_plane_singular", indep.plane_singular ? Json(*indep.plane_singular) : Json(nullptr)}};
    r.detail = std::string("116 = 116 at N = d = 5: ") + (both116 ? "yes" : "no") + "; relation holds on " +
               std::to_string(grid_ok) + "/" + std::to_string(grid) + " grid points; independent build classifies as " +
               std::string(classify::kind_name(label.kind)) + "; dependent build tangent cones " + dep_cones.dump() +
               ", singular on the plane of its points: " +
               (dep.plane_singular ? shell::yes_no(*dep.plane_singular) : std::string("undecided"));
    return r;
}

// ---- 9. codimension bound --------------------------------------------------

CriterionResult codimension(std::uint64_t) {
    CriterionResult r{9, "Codimension bound", true, "", Json::object()};
    struct Row {
        std::string name;
        long long N, d, dim;
    };
    std::vector<Row> rows;
    for (long long d = 3; d <= 8; ++d) {
        for (long long N : {3LL, 4LL})
            for (const auto& c : classify::component_table(static_cast<unsigned>(d), static_cast<unsigned>(N)))
                rows.push_back({std::string(classify::kind_name(c.kind)) + (c.t ? " t=" + c.t->str() : ""), N, d,
                                c.dimension});
        rows.push_back({"Intermediate", 3, d, classify::intermediate_dimension(3, d)});
        for (long long N = 5; N <= 7; ++N) {
            auto e = classify::extremal_dimensions(N, d);
            rows.push_back({"ExtremalIndep", N, d, e.config_indep});
            rows.push_back({"ExtremalDep", N, d, e.config_dep});
        }
    }
    long holds = 0, literal_violations = 0;
    std::vector<std::string> fails;
    for (const auto& row : rows) {
        // space of triples and the expected codimension, typed here
        const long long space = 3 * (2 * row.N + choose(row.N + row.d - 2, row.N - 2) - 2);
        long long f = 0;
        for (long long i = 2; i <= 3; ++i) f += choose(row.N + row.d - 1, row.N - 1) - choose(row.N + row.d - i, row.N - 1) - 1;
        const long long codim = space - row.dim;
        const bool lib = configspace::triple_space_dim(row.N, row.d, 3) == space &&
                         configspace::expected_codim(row.N, row.d, 3) == f;
        if (codim <= f && lib) ++holds;
        else fails.push_back(row.name + " (" + std::to_string(row.N) + "," + std::to_string(row.d) + ")");
        literal_violations += codim < f;
    }
    r.pass = holds == static_cast<long>(rows.size());
    r.data = {{"components", rows.size()}, {"codim_at_most_expected", holds},
              {"codim_below_expected", literal_violations}};
    r.detail = std::to_string(holds) + "/" + std::to_string(rows.size()) +
               " components have codimension at most the expected one (" + std::to_string(literal_violations) +
               " strictly below, e.g. V1)" + (fails.empty() ? "" : "; fails: " + join(fails));
    return r;
}

// ---- 10. determinism -------------------------------------------------------

CriterionResult determinism(std::uint64_t seed) {
    CriterionResult r{10, "Determinism", true, "", Json::object()};
    std::string a, b;
    for (auto* out : {&a, &b})
        for (int id : {1, 2, 4, 6}) *out += to_json(run_criterion(id, seed)).dump();
    r.pass = a == b;
    r.data = {{"bytes", a.size()}, {"identical", r.pass}};
    r.detail = "criteria 1, 2, 4, 6 rerun in-process: " + std::string(r.pass ? "identical" : "DIFFERENT") +
               " (" + std::to_string(a.size()) + " bytes)";
    return r;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    try {
        switch (id) {
            case 1: return fermat_enumeration(seed);
            case 2: return polar_equivalence(seed);
            case 3: return dimension_formulas(seed);
            case 4: return tridiagonal(seed);
            case 5: return collinear(seed);
            case 6: return components(seed);
            case 7: return case1_gate(seed);
            case 8: return extremal(seed);
            case 9: return codimension(seed);
            case 10: return determinism(seed);
        }
    } catch (const Error& e) {
        return {id, "criterion " + std::to_string(id), false,
                "raised " + std::string(errc_name(e.code())) + ": " + e.what(), Json::object()};
    }
    fail(Errc::Usage, "no criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_all(std::uint64_t seed, const std::function<void(const CriterionResult&)>& progress) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteria; ++id) {
        out.push_back(run_criterion(id, seed));
        if (progress) progress(out.back());
    }
    return out;
}

Json to_json(const CriterionResult& r) {
    return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"data", r.data}};
}

}  // namespace starpt::selftest
