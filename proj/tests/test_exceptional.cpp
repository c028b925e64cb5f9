#include "psh/exceptional.hpp"

#include <doctest.h>

#include <cmath>

using namespace psh;

TEST_CASE("compose") {
    auto a = compose(0, 1);
    CHECK(a.slope == make_q(1, 2));
    CHECK(a.rank == 2);
    auto b = compose(0, make_q(1, 2));
    CHECK(b.slope == make_q(2, 5));
    CHECK(b.rank == 5);
    CHECK(b.delta == make_q(12, 25));
    CHECK(compose(2, make_q(5, 2)).slope == make_q(12, 5));
}

TEST_CASE("parents") {
    CHECK(parents(make_q(12, 5)) == std::pair{Rational(2), make_q(5, 2)});
    CHECK(parents(make_q(83, 5)) == std::pair{make_q(33, 2), Rational(17)});
    CHECK(parents(make_q(14475, 194)) == std::pair{make_q(373, 5), make_q(970, 13)});
}

TEST_CASE("exceptional slopes") {
    CHECK(is_exceptional_slope(make_q(12, 5)));
    CHECK(is_exceptional_slope(7));
    CHECK_FALSE(is_exceptional_slope(make_q(1, 3)));
    CHECK(exc_slope(make_q(12, 5)).str() == "12/5 (rank 5)");
}

TEST_CASE("endpoint intervals") {
    // rank 1: half width (3 - sqrt 5)/2
    auto iv = endpoint_interval(3);
    CHECK(iv.lower().approx() == doctest::Approx(3 - (3 - std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(iv.upper().approx() == doctest::Approx(3 + (3 - std::sqrt(5.0)) / 2).epsilon(1e-12));
    auto e = endpoint_interval(make_q(12, 5));
    double hw = (3 - std::sqrt(221.0 / 25)) / 2;
    CHECK(e.upper().approx() - 2.4 == doctest::Approx(hw).epsilon(1e-12));
    CHECK(e.contains(controlling_target(ideal_points(7))));
    double prev = 1;
    for (long r : {1, 2, 5, 13, 29, 194}) {
        double w = (3 - std::sqrt(9 - 4.0 / (r * r))) / 2;
        CHECK(w < prev);
        prev = w;
    }
}

TEST_CASE("controlling exceptional") {
    CHECK(controlling(ideal_points(7)).slope == make_q(12, 5));
    auto big = controlling(ideal_points(2896));
    CHECK(big.slope == make_q(14475, 194));
    CHECK(big.character() == LogChern{194, make_q(14475, 194), make_q(37635, 75272)});
    // 165 points: the target root (-3 + sqrt 1325)/2 lies in the interval of 17, not of 83/5
    CHECK(controlling(ideal_points(165)).slope == 17);
    CHECK(controlling(ideal_points(163)).slope == make_q(83, 5));
}

TEST_CASE("tree nodes are exceptional") {
    for (auto& s : tree_nodes(0, 5)) {
        auto c = exceptional_char(s);
        CHECK(euler_pair(c, c) == 1);
    }
}
