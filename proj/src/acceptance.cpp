#include "psh/acceptance.hpp"

#include "psh/interp.hpp"
#include "psh/points.hpp"
#include "psh/walls.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace psh {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Checker {
    CriterionResult& r;
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            r.pass = false;
            r.notes.push_back(what);
        }
    }
    template <class A, class B>
    void eq(const A& got, const B& want, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << got << ", expected " << want;
        expect(got == want, os.str());
    }
    void info(const std::string& s) { r.details.push_back(s); }
};

std::string qs(const Rational& q) { return to_str(q); }

CriterionResult run(const std::string& id, const std::string& title, const std::string& tol, double limit,
                    const std::function<void(Checker&)>& body) {
    CriterionResult r{id, title, tol, true, {}, {}, 0};
    Checker c{r};
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = since(t0);
    if (limit > 0 && r.seconds > limit) {
        std::ostringstream os;
        os << "time " << std::fixed << std::setprecision(2) << r.seconds << " s exceeds " << limit << " s";
        c.expect(false, os.str());
    }
    return r;
}

using PF = PrimeField;

Scheme<PF> points_scheme(const PF& f, const GenSpec& s, long n, std::uint64_t seed) {
    return Scheme<PF>::from_points(generate_config(f, s, n, seed));
}

Scheme<PF> hb_scheme(const PF& f, const GradedShape& sh, std::uint64_t seed) {
    Rng rng(seed);
    return scheme_from_hilbert_burch(hilbert_burch_matrix(f, sh, rng));
}

std::vector<std::string> verdicts(const Scheme<PF>& z) {
    BettiTable b = betti_table(z);
    std::vector<std::string> out;
    auto ids = applicable_detectors(z.length(), b.shape());
    if (ids.empty()) return out;
    auto pm = syzygy_matrix(z);
    for (auto& id : ids) out.push_back(id + ":" + detect_admissible(pm, id).verdict);
    return out;
}

std::string joined(const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s.empty() ? "(none)" : s;
}

Ch random_ch(Rng& rng) {
    auto q = [&] { return Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 6) + 1); };
    Ch c{q(), q(), q()};
    c.r.canonicalize();
    c.c1.canonicalize();
    c.ch2.canonicalize();
    return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out, const AcceptanceOptions& opt) {
    std::vector<CriterionResult> results;
    PF f;

    results.push_back(run("C1", "controlling exceptionals n=7, 165, 2896", "exact; < 1 s total", 1.0, [](Checker& c) {
        c.eq(controlling(ideal_points(7)).str(), "12/5 (rank 5)", "n=7");
        c.eq(qs(controlling(ideal_points(165)).slope), "83/5", "n=165");
        ExcSlope e = controlling(ideal_points(2896));
        c.eq(qs(e.slope), "14475/194", "n=2896 slope");
        LogChern ch = e.character();
        std::string got = "(" + qs(ch.r) + ", " + qs(ch.mu) + ", " + qs(ch.delta) + ")";
        c.eq(got, "(194, 14475/194, 37635/75272)", "n=2896 character");
    }));

    results.push_back(run("C2", "Gaeta shapes n=7, 165, 2896", "exact", 0, [](Checker& c) {
        c.eq(gaeta_exponents(7).shape.str(), "O(-5)+O(-4) -> O(-3)^3", "n=7");
        c.eq(gaeta_exponents(165).shape.str(), "O(-19)^10 -> O(-18)^3+O(-17)^8", "n=165");
        c.eq(gaeta_exponents(2896).shape.str(), "O(-77)^46 -> O(-76)^17+O(-75)^30", "n=2896");
    }));

    results.push_back(run("C3", "generalized Gaeta and block exponents n=165, 2896", "exact", 0, [](Checker& c) {
        c.eq(generalized_gaeta(ideal_points(165)).str(), "T(-21)^3 -> E_{-83/5}+O(-17)^2", "n=165");
        GenGaeta g = generalized_gaeta(ideal_points(2896));
        c.eq(g.str(), "E_{-388/5}^5 -> E_{-970/13}^2", "n=2896");
        ConeBlocks b = mapping_cone_blocks(ideal_points(2896));
        c.eq(b.f.str(), "O(-77)^6 -> O(-76)^2+O(-75)^30", "n=2896 block F");
        c.eq(b.w.str(), "O(-77)^40 -> O(-76)^15", "n=2896 block W");
    }));

    results.push_back(run("S1", "the n=165 example at n=163 (controlling, Gaeta, generalized Gaeta, blocks)", "exact", 0, [](Checker& c) {
        LogChern xi = ideal_points(163);
        c.eq(qs(controlling(xi).slope), "83/5", "controlling");
        c.eq(gaeta_exponents(163).shape.str(), "O(-19)^10 -> O(-18)^3+O(-17)^8", "Gaeta");
        c.eq(generalized_gaeta(xi).str(), "T(-21)^3 -> E_{-83/5}+O(-17)^2", "generalized Gaeta");
        ConeBlocks b = mapping_cone_blocks(xi);
        c.eq(b.w.str(), "O(-19)^9 -> O(-18)^3+O(-17)^2", "residual block");
        c.eq(b.total.str(), gaeta_exponents(163).shape.str(), "cone total");
    }));

    results.push_back(run("C4", "wall centers for n in {3..8,12}; mu = -x - 3/2 on every row", "exact; < 1 s", 1.0, [](Checker& c) {
        long walls = 0, rows = 0;
        for (long n : supported_sbld()) {
            SbldTable t = sbld_table(n);
            for (auto& w : t.walls) {
                ++walls;
                for (auto& d : w.destabs)
                    c.eq(qs(wall_center(ideal_points(n).ch(), d.ch())), qs(w.center), "n=" + std::to_string(n) + " " + d.str());
            }
            for (auto& r : t.rows) {
                ++rows;
                RowCheck rc = check_row(n, r);
                c.eq(qs(rc.center_mu), qs(r.mu), "n=" + std::to_string(n) + " row " + r.geometry);
                c.eq(qs(slope_from_center(rc.center)), qs(r.mu), "n=" + std::to_string(n) + " row " + r.geometry + " relation");
            }
        }
        c.info(std::to_string(walls) + " walls, " + std::to_string(rows) + " rows");
    }));

    results.push_back(run("C5", "SBLD rows: chi(V (x) I_n) = 0 and coker slope = mu(D_V)", "exact", 0, [](Checker& c) {
        for (long n : supported_sbld()) {
            SbldTable t = sbld_table(n);
            for (auto& r : t.rows) {
                RowCheck rc = check_row(n, r);
                std::string tag = "n=" + std::to_string(n) + " " + r.geometry;
                c.eq(qs(rc.chi), "0", tag + " chi");
                c.eq(qs(rc.coker_mu), qs(r.mu), tag + " slope");
            }
        }
    }));

    results.push_back(run("C6", "movable cone: n in {3,4,6,12} and closed forms for 3 <= d <= 50", "exact", 0, [](Checker& c) {
        std::vector<std::pair<long, std::string>> table{{3, "2"}, {4, "3"}, {6, "5/2"}, {12, "25/7"}};
        for (auto& [n, want] : table) c.eq(qs(movable_extremal(n).slope()), want, "n=" + std::to_string(n));
        for (long d = 3; d <= 50; ++d) {
            long tri = d * (d + 1) / 2, tan = 2 * d * (d + 1);
            Rational tri_formula = Rational(d * d - 2 * d + 2, d - 1);
            tri_formula.canonicalize();
            Rational tan_formula = Rational(8 * d * d - 4 * d + 1, 4 * d - 1);
            tan_formula.canonicalize();
            c.eq(qs(movable_extremal(tri).slope()), qs(tri_formula), "triangular d=" + std::to_string(d));
            c.eq(qs(movable_extremal(tan).slope()), qs(tan_formula), "tangential d=" + std::to_string(d));
            // independent paths: slope of the interpolating bundle, and the curve class orthogonal to it
            c.eq(qs(coker_slope(triangular_interp_shape(d, 1))), qs(tri_formula), "triangular bundle slope d=" + std::to_string(d));
            c.eq(qs(coker_slope(tangential_interp_shape(d, 1))), qs(tan_formula), "tangential bundle slope d=" + std::to_string(d));
            auto [bh, bb] = tangential_curve_numbers(d);
            c.eq(qs(bb / bh), qs(tan_formula), "tangential curve class d=" + std::to_string(d));
        }
    }));

    results.push_back(run("C7", "Betti tables from points (F_p, p = 2^31 - 1, seed 1)", "exact; < 30 s total", 30.0, [&](Checker& c) {
        long tables = 0;
        for (long n : supported_sbld()) {
            SbldTable t = sbld_table(n);
            for (auto& r : t.rows) {
                std::string tag = "n=" + std::to_string(n) + " " + r.geometry;
                std::optional<Scheme<PF>> z;
                if (auto sp = spec_from_geometry(r.geometry))
                    z = points_scheme(f, *sp, n, 1);
                else if (r.geometry == "D_Betti general")
                    z = hb_scheme(f, t.betti(r.betti), 1);
                else
                    continue;
                BettiTable b = betti_table(*z);
                ++tables;
                c.eq(b.str(), t.betti(r.betti).str(), tag + " (" + r.betti + ")");
            }
        }
        for (long n : {6L, 10L, 12L, 15L, 24L, 40L}) {
            GradedShape sh = divisorial_betti(n);
            BettiTable b = betti_table(hb_scheme(f, sh, 2));
            ++tables;
            c.eq(b.str(), sh.str(), "divisorial n=" + std::to_string(n));
        }
        for (long d : {2L, 3L})
            for (long k : {1L, 2L}) {
                BettiTable b = betti_table(hb_scheme(f, qk_shape(d, k), 3));
                ++tables;
                c.eq(b.str(), qk_shape(d, k).str(), "qk d=" + std::to_string(d) + " k=" + std::to_string(k));
            }
        c.info(std::to_string(tables) + " tables");
    }));

    results.push_back(run("C8", "admissibility detectors (seed 1)", "exact", 0, [&](Checker& c) {
        auto v7 = verdicts(points_scheme(f, {GenKind::general, 0}, 7, 1));
        c.eq(joined(v7), "n7-G:T(-4)-admissible", "n=7 general");
        auto conic = points_scheme(f, {GenKind::on_conic, 6}, 7, 1);
        c.eq(betti_table(conic).str(), "O(-5)+O(-4) -> O(-3)^3", "n=7 six on a conic, table G");
        c.eq(joined(verdicts(conic)), "n7-G:I_1(-2)-admissible", "n=7 six on a conic");
        auto pm = syzygy_matrix(points_scheme(f, {GenKind::general, 0}, 7, 1));
        auto det = detect_admissible(pm, "n7-G");
        c.expect(det.witness.rows() == 3 && det.witness.cols() == 3 && !f.is_zero(psh::det(det.witness)),
                 "n=7 general: witness is not an invertible 3x3 block");
        c.eq(betti_table(points_scheme(f, {GenKind::collinear, 4}, 7, 1)).str(), "O(-5)+O(-4)^2 -> O(-4)+O(-3)^3", "n=7 four collinear, table G1");
        c.eq(joined(verdicts(points_scheme(f, {GenKind::collinear, 4}, 8, 1))), "n8-G:I_4(-1)-admissible", "n=8 four collinear");
        c.eq(joined(verdicts(points_scheme(f, {GenKind::general, 0}, 8, 1))), "n8-G:not I_4(-1)-admissible", "n=8 general");
        c.eq(joined(verdicts(points_scheme(f, {GenKind::on_cubic, 11}, 12, 1))),
             "n12-G1-l123:I_1(-3)-admissible, n12-G1-l45:not I_7(-1)-admissible", "n=12 eleven on a cubic");
        c.eq(joined(verdicts(points_scheme(f, {GenKind::collinear, 5}, 12, 1))),
             "n12-G1-l123:not I_1(-3)-admissible, n12-G1-l45:I_7(-1)-admissible", "n=12 five collinear");
        c.eq(joined(verdicts(hb_scheme(f, divisorial_betti(12), 1))),
             "n12-G1-l123:not I_1(-3)-admissible, n12-G1-l45:not I_7(-1)-admissible", "n=12 general divisorial");
        // both directions of detector (i) over several seeds
        for (std::uint64_t s = 1; s <= 5; ++s) {
            c.eq(joined(verdicts(points_scheme(f, {GenKind::general, 0}, 7, s))), "n7-G:T(-4)-admissible", "n=7 general seed " + std::to_string(s));
            c.eq(joined(verdicts(points_scheme(f, {GenKind::on_conic, 6}, 7, s))), "n7-G:I_1(-2)-admissible",
                 "n=7 conic seed " + std::to_string(s));
        }
    }));

    results.push_back(run("C9", "interpolation: tangential orthogonality, qk section counts, Gamma", "exact; < 300 s per instance", 0, [&](Checker& c) {
        for (long d : {2L, 3L}) {
            auto t0 = Clock::now();
            Rng rng(static_cast<std::uint64_t>(10 + d));
            auto z = scheme_from_hilbert_burch(hilbert_burch_matrix(f, qk_shape(d, 1), rng));
            auto m = tangential_interp(f, d, 1, rng, true);
            c.eq(check_orthogonal(m, z).str(), "orthogonal", "tangential d=" + std::to_string(d) + " n=" + std::to_string(z.length()));
            double s = since(t0);
            c.expect(s < 300, "tangential d=" + std::to_string(d) + " took too long");
        }
        if (opt.stretch) {
            auto t0 = Clock::now();
            Rng rng(14);
            auto z = scheme_from_hilbert_burch(hilbert_burch_matrix(f, qk_shape(4, 1), rng));
            auto m = tangential_interp(f, 4, 1, rng, true);
            c.eq(check_orthogonal(m, z).str(), "orthogonal", "tangential d=4 n=40 (stretch)");
            std::ostringstream os;
            os << "d=4 stretch instance: " << std::fixed << std::setprecision(2) << since(t0) << " s";
            c.info(os.str());
        }
        for (auto [d, k] : std::vector<std::pair<long, long>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
            auto z = hb_scheme(f, qk_shape(d, k), static_cast<std::uint64_t>(20 + 10 * d + k));
            c.eq(tangent_section_count(z, static_cast<int>(d)), k, "qk d=" + std::to_string(d) + " k=" + std::to_string(k));
        }
        for (long d : {2L, 3L}) {
            auto g = hb_scheme(f, gamma_shape(d), static_cast<std::uint64_t>(30 + d));
            c.eq(g.ideal_dim(static_cast<int>(4 * d - 4)), 4 * d * d - 8 * d + 3, "Gamma d=" + std::to_string(d));
        }
    }));

    results.push_back(run("C10", "property suites", "exact", 0, [&](Checker& c) {
        Rng rng(2024);
        long bad = 0;
        for (int i = 0; i < 1000; ++i) {
            Ch a = random_ch(rng), b = random_ch(rng), x = random_ch(rng);
            if (euler_pair(a + b, x) != euler_pair(a, x) + euler_pair(b, x)) ++bad;
            if (euler_pair(x, a + b) != euler_pair(x, a) + euler_pair(x, b)) ++bad;
        }
        c.eq(bad, 0L, "bilinearity failures over 1000 triples");

        auto nodes = tree_nodes(0, 7);
        nodes.resize(100);
        bad = 0;
        for (auto& s : nodes) {
            Ch e = exceptional_char(s).ch();
            if (euler_pair(e, e) != 1) ++bad;
        }
        c.eq(bad, 0L, "chi(E,E) != 1 over 100 tree nodes");

        bad = 0;
        long checked = 0;
        for (auto& s : tree_nodes(0, 8)) {
            if (s.get_den() == 1) continue;
            auto [a, b] = parents(s);
            ++checked;
            if (compose(a, b).slope != s) ++bad;
        }
        c.eq(bad, 0L, "parents/compose mismatches at depth 8 (" + std::to_string(checked) + " nodes)");

        bad = 0;
        for (long n = 1; n <= 500; ++n) {
            LogChern xi = ideal_points(n);
            try {
                gaeta_exponents(n).shape.check_resolves(xi);
                ConeBlocks b = mapping_cone_blocks(xi);
                if (!(b.f.ch() + b.w.ch() == xi.ch()) || !(b.total.ch() == xi.ch())) ++bad;
                GenGaeta g = generalized_gaeta(xi);
                Ch sum{0, 0, 0};
                for (auto& [m, s] : g.f_class) sum = sum + exceptional_char(s).ch() * Rational(m);
                for (auto& [m, s] : g.w_class) sum = sum + exceptional_char(s).ch() * Rational(m);
                if (!(sum == xi.ch())) ++bad;
            } catch (const std::exception&) {
                ++bad;
            }
        }
        c.eq(bad, 0L, "conservation failures for n = 1..500");

        // projective invariance
        std::vector<std::pair<Scheme<PF>, std::string>> zs;
        zs.emplace_back(points_scheme(f, {GenKind::general, 0}, 7, 1), "n=7 general");
        zs.emplace_back(points_scheme(f, {GenKind::on_conic, 6}, 7, 1), "n=7 conic");
        zs.emplace_back(points_scheme(f, {GenKind::collinear, 4}, 8, 1), "n=8 collinear");
        zs.emplace_back(points_scheme(f, {GenKind::on_cubic, 11}, 12, 1), "n=12 cubic");
        zs.emplace_back(points_scheme(f, {GenKind::collinear, 5}, 12, 1), "n=12 collinear");
        zs.emplace_back(hb_scheme(f, divisorial_betti(12), 1), "n=12 divisorial");
        Rng grng(77);
        bad = 0;
        long tables = 0;
        for (int i = 0; i < 20; ++i) {
            Mat<PF> g = random_invertible(f, grng);
            for (auto& [z, tag] : zs) {
                Scheme<PF> w = z.transformed(g);
                ++tables;
                if (betti_table(w).str() != betti_table(z).str() || verdicts(w) != verdicts(z)) {
                    ++bad;
                    c.expect(false, "projective invariance broken for " + tag);
                }
            }
        }
        c.info(std::to_string(tables) + " transformed tables; Hilbert identity asserted on every table");
    }));

    for (auto& r : results) {
        std::ostringstream t;
        t << std::fixed << std::setprecision(2) << r.seconds;
        out << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(4) << r.id << r.title << "  [" << r.tolerance << "; " << t.str()
            << " s]\n";
        for (auto& n : r.notes) out << "        - " << n << "\n";
        if (opt.verbose)
            for (auto& d : r.details) out << "        . " << d << "\n";
    }
    return results;
}

}  // namespace psh
