#include "psh/chern.hpp"
#include "psh/gaeta.hpp"

#include <doctest.h>

using namespace psh;

TEST_CASE("standard characters") {
    CHECK(line(-3) == LogChern{1, -3, 0});
    CHECK(tangent(0) == LogChern{2, make_q(3, 2), make_q(3, 8)});
    CHECK(ideal_points(7) == LogChern{1, 0, 7});
    CHECK(ideal_points(7).ch().ch2 == -7);
}

TEST_CASE("euler characteristic") {
    for (long n : {0, 1, 7, 165}) CHECK(euler(ideal_points(n)) == 1 - n);
    // Euler sequence: 3 chi(O(1)) - chi(O)
    CHECK(euler(tangent(0)) == 8);
    // 5 * (1/2 (17/5)(22/5) - 12/25)
    CHECK(euler(exceptional_char(make_q(12, 5))) == 35);
}

TEST_CASE("euler pairing") {
    CHECK(euler_pair(line(-3), ideal_points(7)) == 3);
    CHECK(euler_pair(tangent(-4), ideal_points(7)) == 1);
    for (long d = 1; d < 8; ++d)
        for (long n : {1, 5, 30}) CHECK(euler_pair(tangent(-d - 1), ideal_points(n)) == d * (d + 2) - 2 * n);
    auto e = exceptional_char(make_q(1, 2));
    CHECK(euler_pair(e, e) == 1);
}

TEST_CASE("twist and dual") {
    CHECK(twist(ideal_points(1), -2) == LogChern{1, -2, 1});
    CHECK(twist(tangent(0), -4) == LogChern{2, make_q(-5, 2), make_q(3, 8)});
    CHECK(dual(line(3)) == line(-3));
}

TEST_CASE("orthogonal point") {
    SUBCASE("tangential residual at d=2") {
        // residual complex O(-6)^2 -> O(-5) left after removing the T(-5) block from G1 of 12 points
        GradedShape res({{-6, 2}}, {{-5, 1}});
        CHECK(res.ch() == ideal_points(12).ch() - tangent(-5).ch());
        auto p = orthogonal_point(tangent(-5), LogChern::from_ch(res.ch()));
        CHECK(p.mu == make_q(25, 7));
    }
    SUBCASE("triangular n=6") {
        auto p = orthogonal_point(line(-2), ideal_points(6));
        CHECK(p.mu == make_q(5, 2));
        // O(-4) -> O(-3)^2 has the slope of O(-2) but a different discriminant: no solution
        GradedShape w({{-4, 1}}, {{-3, 2}});
        CHECK_THROWS(orthogonal_point(line(-2), LogChern::from_ch(w.ch())));
    }
    SUBCASE("equal discriminants") {
        auto f = line(-2), w = line(-5);
        CHECK(orthogonal_point(f, w).mu == -(f.mu + w.mu + 3) / 2);
    }
}

TEST_CASE("divisor classes") {
    auto d = divisor_with_slope(make_q(12, 5));
    CHECK(d.slope() == make_q(12, 5));
    CHECK(d.same_ray(DivisorClass{make_q(24, 5), -1}));
}
