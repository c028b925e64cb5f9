#include "psh/walls.hpp"

namespace psh {

Rational wall_center(const Ch& xi, const Ch& zeta) {
    Rational den = xi.c1 * zeta.r - zeta.c1 * xi.r;
    if (sgn(den) == 0) throw WallError("wall_center: proportional reduced characters, no wall");
    return (xi.ch2 * zeta.r - zeta.ch2 * xi.r) / den;
}

Rational wall_center(const LogChern& xi, const LogChern& zeta) { return wall_center(xi.ch(), zeta.ch()); }

Rational coker_slope(const GradedShape& shape) {
    Ch c = shape.ch();
    if (sgn(c.r) <= 0) throw WallError("coker_slope: nonpositive rank for " + shape.str());
    return c.c1 / c.r;
}

Destab destab_line(long k, long power) { return {bundle_name(Rational(k)), line(k), power}; }

Destab destab_tangent(long k, long power) { return {"T(" + std::to_string(k) + ")", tangent(k), power}; }

Destab destab_ideal(long pts, long k) {
    return {"I_" + std::to_string(pts) + "(" + std::to_string(k) + ")", ideal_points(pts, k), 1};
}

Destab destab_log(const Rational& r, const Rational& mu, const Rational& delta) {
    return {"(" + to_str(r) + "," + to_str(mu) + "," + to_str(delta) + ")", LogChern{r, mu, delta}, 1};
}

std::string InterpBundle::str() const {
    if (!name.empty()) return name;
    if (shape) return "coker(" + shape->str() + ")";
    return "?";
}

const GradedShape& SbldTable::betti(const std::string& id) const {
    for (auto& [k, s] : betti_tables)
        if (k == id) return s;
    throw WallError("no Betti table " + id + " for n=" + std::to_string(n));
}

namespace {

using Terms = std::vector<Term>;

InterpBundle coker(const Terms& src, const Terms& tgt, std::string name = "") {
    GradedShape s(src, tgt);
    return {std::move(name), s, s.ch()};
}

InterpBundle exc_bundle(const Rational& slope) { return {bundle_name(slope), std::nullopt, exceptional_char(slope).ch()}; }

Destab O(long k, long power = 1) { return destab_line(k, power); }
Destab T(long k, long power = 1) { return destab_tangent(k, power); }
Destab I(long pts, long k) { return destab_ideal(pts, k); }

SbldRow row(std::string geo, std::string betti, Destab d, InterpBundle v, std::vector<std::string> bs, Rational mu,
            bool dashed = false) {
    return {std::move(geo), std::move(betti), std::move(d), std::move(v), std::move(bs), std::move(mu), dashed};
}

Rational q(long a, long b = 1) { return make_q(a, b); }

SbldTable raw_table(long n) {
    SbldTable t{n, {}, {}, {}};
    switch (n) {
        case 3:
            t.betti_tables = {{"G", GradedShape({{-3, 2}}, {{-2, 3}})},
                              {"G1", GradedShape({{-4, 1}}, {{-3, 1}, {-1, 1}})}};
            t.rows = {
                row("Gaeta general", "G", O(-2), coker({}, {{1, 1}}, "O(1)"), {"L_3(3)"}, q(1)),
                row("L_3(3)", "G1", O(-1), coker({{-1, 4}}, {{0, 6}}, "M_1"), {}, q(2)),
            };
            t.walls = {{q(-5, 2), {O(-2, 3), I(1, -1), T(-3)}}, {q(-7, 2), {O(-1)}}};
            break;
        case 4:
            t.betti_tables = {{"G", GradedShape({{-4, 1}}, {{-2, 2}})},
                              {"G1", GradedShape({{-4, 1}, {-3, 1}}, {{-3, 1}, {-2, 2}})},
                              {"G2", GradedShape({{-5, 1}}, {{-4, 1}, {-1, 1}})}};
            t.rows = {
                row("Gaeta general", "G", O(-2), coker({{0, 1}}, {{1, 3}}, "T"), {"L_3(4)"}, q(3, 2)),
                row("L_3(4)", "G1", I(1, -1), coker({{-1, 2}}, {{0, 2}, {1, 2}}, "M_1"), {"L_4(4)"}, q(2)),
                row("L_4(4)", "G2", O(-1), coker({{-1, 6}}, {{0, 8}}, "M_2"), {}, q(3)),
            };
            t.walls = {{q(-3), {O(-2, 2)}}, {q(-7, 2), {I(1, -1)}}, {q(-9, 2), {O(-1)}}};
            break;
        case 5:
            t.betti_tables = {{"G", GradedShape({{-4, 2}}, {{-3, 2}, {-2, 1}})},
                              {"G1", GradedShape({{-5, 1}, {-3, 1}}, {{-4, 1}, {-2, 2}})},
                              {"G2", GradedShape({{-6, 1}}, {{-5, 1}, {-1, 1}})}};
            t.rows = {
                row("Gaeta general", "G", O(-2), coker({{0, 2}}, {{1, 4}}, "M"), {"L_4(5)"}, q(2)),
                row("L_4(5)", "G1", I(1, -1), coker({{-1, 4}}, {{0, 4}, {1, 2}}, "M_1"), {"L_5(5)"}, q(3)),
                row("L_5(5)", "G2", O(-1), coker({{-1, 8}}, {{0, 10}}, "M_2"), {}, q(4)),
            };
            t.walls = {{q(-7, 2), {O(-2), I(2, -1)}}, {q(-9, 2), {I(1, -1)}}, {q(-11, 2), {O(-1)}}};
            break;
        case 6:
            t.betti_tables = {{"G", GradedShape({{-4, 3}}, {{-3, 4}})},
                              {"G1", GradedShape({{-5, 1}}, {{-3, 1}, {-2, 1}})},
                              {"G2", GradedShape({{-5, 1}, {-4, 1}}, {{-4, 1}, {-3, 1}, {-2, 1}})},
                              {"G3", GradedShape({{-6, 1}, {-3, 1}}, {{-5, 1}, {-2, 2}})},
                              {"G4", GradedShape({{-7, 1}}, {{-6, 1}, {-1, 1}})}};
            t.rows = {
                row("Gaeta general", "G", O(-3), coker({}, {{2, 1}}, "O(2)"), {"Q_6(6)"}, q(2)),
                row("Q_6(6)", "G1", O(-2), coker({{0, 3}}, {{1, 5}}), {"L_4(6)"}, q(5, 2)),
                row("L_4(6)", "G2", I(2, -1), coker({{-1, 2}}, {{1, 4}}), {"L_5(6)"}, q(3)),
                row("L_5(6)", "G3", I(1, -1), coker({{-1, 6}}, {{0, 6}, {1, 2}}), {"L_6(6)"}, q(4)),
                row("L_6(6)", "G4", O(-1), coker({{-1, 10}}, {{0, 12}}), {}, q(5)),
            };
            t.walls = {{q(-7, 2), {O(-3, 4), I(1, -2), I(3, -1), T(-4)}},
                       {q(-4), {O(-2)}},
                       {q(-9, 2), {I(2, -1)}},
                       {q(-11, 2), {I(1, -1)}},
                       {q(-13, 2), {O(-1)}}};
            break;
        case 7:
            t.betti_tables = {{"G", GradedShape({{-5, 1}, {-4, 1}}, {{-3, 3}})},
                              {"G1", GradedShape({{-5, 1}, {-4, 2}}, {{-4, 1}, {-3, 3}})},
                              {"G2", GradedShape({{-5, 2}}, {{-4, 2}, {-2, 1}})},
                              {"G3", GradedShape({{-6, 1}, {-4, 1}}, {{-5, 1}, {-3, 1}, {-2, 1}})},
                              {"G4", GradedShape({{-7, 1}, {-3, 1}}, {{-6, 1}, {-2, 2}})},
                              {"G5", GradedShape({{-8, 1}}, {{-7, 1}, {-1, 1}})}};
            t.rows = {
                row("Gaeta general", "G", T(-4), exc_bundle(q(12, 5)), {"Q_6(7)"}, q(12, 5)),
                row("Q_6(7)", "G", I(1, -2), coker({{0, 1}}, {{1, 1}, {2, 2}}, "M_1"), {"L_4(7)", "Q_7(7)"}, q(5, 2)),
                row("L_4(7)", "G1", I(3, -1), coker({{0, 6}}, {{1, 9}}, "M_2"), {"L_5(7)"}, q(3)),
                row("Q_7(7)", "G2", O(-2), coker({{0, 6}}, {{1, 9}}, "M_2"), {"L_5(7)"}, q(3), true),
                row("L_5(7)", "G3", I(2, -1), coker({{-1, 4}}, {{0, 2}, {1, 4}}), {"L_6(7)"}, q(4)),
                row("L_6(7)", "G4", I(1, -1), coker({{-1, 8}}, {{0, 8}, {1, 2}}), {"L_7(7)"}, q(5)),
                row("L_7(7)", "G5", O(-1), coker({{-1, 12}}, {{0, 14}}), {}, q(6)),
            };
            t.walls = {{q(-39, 10), {T(-4)}},       {q(-4), {I(1, -2)}},       {q(-9, 2), {I(3, -1), O(-2)}},
                       {q(-11, 2), {I(2, -1)}},     {q(-13, 2), {I(1, -1)}},   {q(-15, 2), {O(-1)}}};
            break;
        case 8:
            t.betti_tables = {{"G", GradedShape({{-5, 2}}, {{-4, 1}, {-3, 2}})},
                              {"G1", GradedShape({{-5, 2}, {-4, 1}}, {{-4, 2}, {-3, 2}})},
                              {"G2", GradedShape({{-6, 1}, {-4, 2}}, {{-5, 1}, {-3, 3}})},
                              {"G3", GradedShape({{-6, 1}}, {{-4, 1}, {-2, 1}})},
                              {"G4", GradedShape({{-6, 1}, {-5, 1}}, {{-5, 1}, {-4, 1}, {-2, 1}})},
                              {"G5", GradedShape({{-7, 1}, {-4, 1}}, {{-6, 1}, {-3, 1}, {-2, 1}})},
                              {"G6", GradedShape({{-8, 1}, {-3, 1}}, {{-7, 1}, {-2, 2}})},
                              {"G7", GradedShape({{-9, 1}}, {{-8, 1}, {-1, 1}})}};
            t.rows = {
                row("Gaeta general", "G", O(-3, 3), coker({{1, 2}}, {{2, 5}}, "M"), {"L_4(8)", "Q_7(8)"}, q(8, 3)),
                row("L_4(8)", "G", I(4, -1), coker({{0, 2}}, {{1, 2}, {2, 2}}, "M_1"), {"L_5(8)", "Q_8(8)"}, q(3)),
                row("Q_7(8)", "G1", I(1, -2), coker({{0, 2}}, {{1, 2}, {2, 2}}, "M_1"), {"L_5(8)", "Q_8(8)"}, q(3), true),
                row("Q_8(8)", "G3", O(-2), coker({{0, 10}}, {{1, 14}}), {"L_5(8)"}, q(7, 2)),
                // printed as coker(O(-1) -> O + O(1)^3), which has slope 4/3
                row("L_5(8)", "G2", I(3, -1), coker({{-1, 1}, {0, 1}}, {{1, 3}}), {"L_6(8)"}, q(4)),
                row("L_6(8)", "G5", I(2, -1), coker({{-1, 6}}, {{0, 4}, {1, 4}}), {"L_7(8)"}, q(5)),
                row("L_7(8)", "G6", I(1, -1), coker({{-1, 10}}, {{0, 10}, {1, 2}}), {"L_8(8)"}, q(6)),
                row("L_8(8)", "G7", O(-1), coker({{-1, 14}}, {{0, 16}}), {}, q(7)),
            };
            t.walls = {{q(-25, 6), {O(-3, 2)}},   {q(-9, 2), {I(4, -1), I(1, -2)}}, {q(-5), {O(-2)}},
                       {q(-11, 2), {I(3, -1)}},   {q(-13, 2), {I(2, -1)}},          {q(-15, 2), {I(1, -1)}},
                       {q(-17, 2), {O(-1)}}};
            break;
        case 12:
            t.betti_tables = {{"G", GradedShape({{-6, 2}}, {{-4, 3}})},
                              {"G1", GradedShape({{-6, 2}, {-5, 1}}, {{-5, 1}, {-4, 3}})},
                              {"G2", GradedShape({{-6, 3}}, {{-5, 3}, {-3, 1}})},
                              {"G3", GradedShape({{-6, 2}, {-5, 2}}, {{-5, 2}, {-4, 3}})},
                              {"G4", GradedShape({{-7, 1}, {-5, 1}}, {{-5, 1}, {-4, 1}, {-3, 1}})},
                              {"G5", GradedShape({{-7, 1}, {-5, 3}}, {{-6, 1}, {-4, 4}})},
                              {"G6", GradedShape({{-7, 2}, {-4, 1}}, {{-6, 2}, {-3, 2}})},
                              {"G7", GradedShape({{-8, 1}}, {{-6, 1}, {-2, 1}})},
                              {"G8", GradedShape({{-8, 1}, {-5, 2}}, {{-7, 1}, {-4, 2}, {-3, 1}})},
                              {"G9", GradedShape({{-9, 1}, {-5, 1}}, {{-8, 1}, {-3, 2}})},
                              {"G10", GradedShape({{-10, 1}, {-4, 2}}, {{-9, 1}, {-3, 3}})},
                              {"G11", GradedShape({{-11, 1}, {-4, 1}}, {{-10, 1}, {-3, 1}, {-2, 1}})},
                              {"G12", GradedShape({{-12, 1}, {-3, 1}}, {{-11, 1}, {-2, 2}})},
                              {"G13", GradedShape({{-13, 1}}, {{-12, 1}, {-1, 1}})}};
            t.rows = {
                row("Gaeta general", "G", O(-4, 3), coker({{2, 1}}, {{3, 3}}, "T(2)"), {"G_1 locus"}, q(7, 2)),
                // geometry cell left blank in the source table
                row("D_Betti general", "G1", T(-5), coker({{1, 2}}, {{3, 9}}), {"C_11(12)"}, q(25, 7)),
                row("C_11(12)", "G1", I(1, -3), coker({{1, 2}}, {{2, 2}, {3, 3}}), {"L_5(12)", "Q_9(12)", "C_12(12)"}, q(11, 3)),
                row("C_12(12)", "G2", O(-3), coker({{1, 4}}, {{2, 6}}), {"Q_10(12)"}, q(4)),
                row("Q_9(12)", "G3", I(3, -2), coker({{1, 4}}, {{2, 6}}), {"Q_10(12)"}, q(4), true),
                row("L_5(12)", "G1", I(7, -1), coker({{1, 4}}, {{2, 6}}), {"Q_10(12)"}, q(4), true),
                row("Q_10(12)", "G4", I(2, -2), coker({{0, 3}}, {{1, 1}, {2, 4}}), {"L_6(12)", "Q_11(12)"}, q(9, 2)),
                row("L_6(12)", "G5", I(6, -1), coker({{0, 6}}, {{1, 6}, {2, 2}}), {"Q_12(12)"}, q(5)),
                row("Q_11(12)", "G6", I(1, -2), coker({{0, 6}}, {{1, 6}, {2, 2}}), {"Q_12(12)"}, q(5), true),
                row("Q_12(12)", "G7", O(-2), coker({{0, 9}}, {{1, 11}}), {"L_7(12)"}, q(11, 2)),
                row("L_7(12)", "G8", I(5, -1), coker({{-1, 2}, {0, 6}}, {{1, 10}}), {"L_8(12)"}, q(6)),
                row("L_8(12)", "G9", I(4, -1), coker({{-1, 6}}, {{1, 8}}), {"L_9(12)"}, q(7)),
                row("L_9(12)", "G10", I(3, -1), coker({{-1, 10}}, {{0, 6}, {1, 6}}), {"L_10(12)"}, q(8)),
                row("L_10(12)", "G11", I(2, -1), coker({{-1, 14}}, {{0, 12}, {1, 4}}), {"L_11(12)"}, q(9)),
                row("L_11(12)", "G12", I(1, -1), coker({{-1, 18}}, {{0, 18}, {1, 2}}), {"L_12(12)"}, q(10)),
                row("L_12(12)", "G13", O(-1), coker({{-1, 22}}, {{0, 24}}), {}, q(11)),
            };
            // the source lists O(-3)^3 for the first wall; O(-4)^3 is the object with center -5
            t.walls = {{q(-5), {O(-4, 3), destab_log(2, -3, q(3, 2)), I(4, -2)}},
                       {q(-71, 14), {T(-5)}},
                       {q(-31, 6), {I(1, -3)}},
                       {q(-11, 2), {O(-3), I(3, -2), I(7, -1)}},
                       {q(-6), {I(2, -2)}},
                       {q(-13, 2), {I(1, -2), I(6, -1)}},
                       {q(-7), {O(-2)}},
                       {q(-15, 2), {I(5, -1)}},
                       {q(-17, 2), {I(4, -1)}},
                       {q(-19, 2), {I(3, -1)}},
                       {q(-21, 2), {I(2, -1)}},
                       {q(-23, 2), {I(1, -1)}},
                       {q(-25, 2), {O(-1)}}};
            break;
        default: throw WallError("no table for n=" + std::to_string(n) + " (supported: 3,4,5,6,7,8,12)");
    }
    return t;
}

}  // namespace

const std::vector<long>& supported_sbld() {
    static const std::vector<long> v{3, 4, 5, 6, 7, 8, 12};
    return v;
}

RowCheck check_row(long n, const SbldRow& r) {
    RowCheck c;
    // chi(V (x) I) = chi(V^*, I)
    Ch v = r.interp.cls;
    Ch vd{v.r, -v.c1, v.ch2};
    c.chi = euler_pair(vd, ideal_points(n).ch());
    c.coker_mu = r.interp.slope();
    c.center = wall_center(ideal_points(n).ch(), r.destab.ch());
    c.center_mu = slope_from_center(c.center);
    return c;
}

SbldTable sbld_table(long n) {
    SbldTable t = raw_table(n);
    LogChern xi = ideal_points(n);
    auto where = [n](const std::string& what) { return "n=" + std::to_string(n) + ": " + what; };
    for (auto& [id, s] : t.betti_tables) s.check_resolves(xi);
    for (auto& r : t.rows) {
        RowCheck c = check_row(n, r);
        if (sgn(c.chi) != 0) throw WallError(where(r.geometry + " interpolating bundle is not orthogonal, chi = " + to_str(c.chi)));
        if (c.coker_mu != r.mu) throw WallError(where(r.geometry + " cokernel slope " + to_str(c.coker_mu) + " != " + to_str(r.mu)));
        if (c.center_mu != r.mu) throw WallError(where(r.geometry + " wall center gives " + to_str(c.center_mu) + " != " + to_str(r.mu)));
        t.betti(r.betti);
    }
    for (auto& w : t.walls)
        for (auto& d : w.destabs) {
            Rational x = wall_center(xi.ch(), d.ch());
            if (x != w.center) throw WallError(where(d.str() + " has center " + to_str(x) + ", listed " + to_str(w.center)));
            if (wall_center(xi.ch(), d.base.ch()) != x) throw WallError(where("center not scale invariant"));
        }
    return t;
}

Ch eff_destabilizer(long n, int depth_cap) {
    if (n < 2) throw WallError("eff_extremal needs n >= 2");
    GenGaeta g = generalized_gaeta(ideal_points(n), depth_cap);
    Ch c{0, 0, 0};
    for (auto& [m, s] : g.f_class) c = c + exceptional_char(s).ch() * Rational(m);
    return c;
}

DivisorClass eff_extremal(long n, int depth_cap) {
    Rational x = wall_center(ideal_points(n).ch(), eff_destabilizer(n, depth_cap));
    return divisor_with_slope(slope_from_center(x));
}

Rational tri_movable_slope(long d) { return make_q(d * d - 2 * d + 2, d - 1); }

Rational tan_movable_slope(long d) { return make_q(8 * d * d - 4 * d + 1, 4 * d - 1); }

DivisorClass movable_extremal(long n) {
    PureClass p = classify_pure(n);
    if (p.kind == Purity::not_pure) throw WallError("movable_extremal: " + std::to_string(n) + " is neither triangular nor tangential");
    if (p.d >= 2) {
        Rational mu = p.kind == Purity::triangular ? tri_movable_slope(p.d) : tan_movable_slope(p.d);
        return divisor_with_slope(mu);
    }
    // below the closed-form range: read the edge off the divisorial row of the table
    for (long s : supported_sbld()) {
        if (s != n) continue;
        SbldTable t = sbld_table(n);
        for (auto& r : t.rows)
            if (r.betti == "G1") return divisor_with_slope(r.mu);
    }
    throw WallError("movable_extremal: d=" + std::to_string(p.d) + " is below the validity range and no table covers n=" +
                    std::to_string(n));
}

std::pair<Rational, Rational> tangential_curve_numbers(long d) {
    if (d < 2) throw WallError("tangential_curve_numbers needs d >= 2");
    return {Rational(4 * d - 1), Rational(8 * d * d - 4 * d + 1)};
}

}  // namespace psh
