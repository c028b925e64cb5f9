#include "psh/walls.hpp"

#include <doctest.h>

using namespace psh;

TEST_CASE("wall centers") {
    CHECK(wall_center(ideal_points(7), tangent(-4)) == make_q(-39, 10));
    CHECK(wall_center(ideal_points(7), ideal_points(1, -2)) == -4);
    CHECK(wall_center(ideal_points(12), tangent(-5)) == make_q(-71, 14));
}

TEST_CASE("slope from center") {
    CHECK(slope_from_center(make_q(-39, 10)) == make_q(12, 5));
    CHECK(slope_from_center(make_q(-25, 6)) == make_q(8, 3));
    CHECK(slope_from_center(make_q(-9, 2)) == 3);
}

TEST_CASE("cokernel slopes") {
    CHECK(coker_slope(parse_shape("O^10 -> O(1)^14")) == make_q(7, 2));
    for (long d = 2; d <= 50; ++d)
        for (long k = 1; k <= 3; ++k) {
            GradedShape tri({{d - 3, k * d}}, {{d - 2, k * (2 * d - 1)}});
            CHECK(coker_slope(tri) == Rational(d * d - 2 * d + 2, d - 1));
            GradedShape tan({{2 * d - 3, k * d}}, {{2 * d - 1, k * (5 * d - 1)}});
            CHECK(coker_slope(tan) == Rational(8 * d * d - 4 * d + 1, 4 * d - 1));
        }
}

TEST_CASE("effective edge") {
    CHECK(eff_extremal(7).slope() == make_q(12, 5));
    CHECK(eff_extremal(3).slope() == 1);
    CHECK(eff_extremal(8).slope() == make_q(8, 3));
    CHECK(eff_extremal(7).str() == "12/5H - 1/2B");
}

TEST_CASE("movable edge") {
    CHECK(movable_extremal(6).slope() == make_q(5, 2));
    CHECK(movable_extremal(12).slope() == make_q(25, 7));
    CHECK(movable_extremal(3).slope() == 2);
    for (long d = 3; d <= 50; ++d) CHECK(movable_extremal(d * (d + 1) / 2).slope() == tri_movable_slope(d));
    for (long d = 2; d <= 50; ++d) CHECK(movable_extremal(2 * d * (d + 1)).slope() == tan_movable_slope(d));
}

TEST_CASE("tangential curve numbers") {
    CHECK(tangential_curve_numbers(2) == std::pair{Rational(7), Rational(25)});
    CHECK(tangential_curve_numbers(3) == std::pair{Rational(11), Rational(61)});
    for (long d = 2; d <= 10; ++d) {
        auto [bh, bb] = tangential_curve_numbers(d);
        CHECK(movable_extremal(2 * d * (d + 1)).pair_curve(bh, bb) == 0);
    }
}

TEST_CASE("sbld tables") {
    for (long n : supported_sbld()) {
        auto t = sbld_table(n);
        for (auto& row : t.rows) {
            auto c = check_row(n, row);
            CHECK(c.chi == 0);
            CHECK(c.coker_mu == row.mu);
        }
    }
    auto t3 = sbld_table(3);
    REQUIRE(t3.rows.size() == 2);
    CHECK(t3.rows[0].mu == 1);
    CHECK(t3.rows[1].geometry == "L_3(3)");
    CHECK(t3.rows[1].mu == 2);
    auto t7 = sbld_table(7);
    CHECK(t7.rows.size() == 7);
    CHECK(t7.rows.back().geometry == "L_7(7)");
    CHECK(t7.rows.back().destab.str() == "O(-1)");
    CHECK(t7.rows.back().mu == 6);
    auto t12 = sbld_table(12);
    CHECK(t12.rows.size() == 16);
    CHECK(t12.walls.size() == 13);
    CHECK(t12.walls.front().center == -5);
    CHECK(t12.walls.back().center == make_q(-25, 2));
    long at4 = 0;
    for (auto& r : t12.rows) at4 += r.mu == 4;
    CHECK(at4 == 3);
}

TEST_CASE("sbld text is stable") {
    CHECK(sbld_text(sbld_table(7)) == sbld_text(sbld_table(7)));
    CHECK(walls_text(sbld_table(12)).find("W_-71/14  mu = 25/7  destabilized by T(-5)") != std::string::npos);
}
