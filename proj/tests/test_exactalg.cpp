#include "psh/hpoly.hpp"
#include "psh/mat.hpp"

#include <doctest.h>

using namespace psh;

TEST_CASE("rational parsing and rounding") {
    CHECK(parse_rational("-12/8") == make_q(-3, 2));
    CHECK(to_str(make_q(6, 3)) == "2");
    CHECK(floor_q(make_q(-3, 2)) == -2);
    CHECK(ceil_q(make_q(-3, 2)) == -1);
    CHECK(forms_dim(3) == 10);
    CHECK(forms_dim(-1) == 0);
}

TEST_CASE("prime field arithmetic") {
    PrimeField f(101);
    CHECK(f.mul(f.inv(7), 7) == 1);
    CHECK(f.from_int(-1) == 100);
    CHECK(f.from_rational(make_q(1, 2)) == 51);
    CHECK_THROWS(PrimeField(100));
    CHECK(is_probable_prime(PrimeField::default_prime));
}

TEST_CASE("rank_kernel") {
    QField q;
    SUBCASE("identity") {
        auto rk = rank_kernel(Mat<QField>::identity(q, 3));
        CHECK(rk.rank == 3);
        CHECK(rk.kernel.empty());
    }
    SUBCASE("zero map") {
        auto rk = rank_kernel(Mat<QField>(q, 2, 5));
        CHECK(rk.rank == 0);
        CHECK(rk.kernel.size() == 5);
    }
    SUBCASE("rank one 2x3") {
        // kernel by hand: (-2,1,0), (-3,0,1)
        auto m = Mat<QField>::from_rows(q, {{1, 2, 3}, {2, 4, 6}}, 3);
        auto rk = rank_kernel(m);
        CHECK(rk.rank == 1);
        REQUIRE(rk.kernel.size() == 2);
        for (auto& v : rk.kernel) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
    }
    SUBCASE("same answer over a prime field") {
        PrimeField f(1000003);
        auto m = Mat<PrimeField>::from_rows(f, {{1, 2, 3}, {2, 4, 6}}, 3);
        CHECK(rank(m) == 1);
    }
}

TEST_CASE("solve and det") {
    QField q;
    auto a = Mat<QField>::from_rows(q, {{2, 1}, {1, 3}}, 2);
    CHECK(det(a) == 5);
    auto x = solve(a, {3, 5});
    REQUIRE(x);
    CHECK((*x)[0] == make_q(4, 5));
    CHECK((*x)[1] == make_q(7, 5));
    auto s = Mat<QField>::from_rows(q, {{1, 1}, {1, 1}}, 2);
    CHECK_FALSE(solve(s, {0, 1}));
}

TEST_CASE("row span") {
    QField q;
    RowSpan<QField> rs(q, 3);
    CHECK(rs.insert({1, 1, 0}));
    CHECK(rs.insert({0, 1, 1}));
    CHECK_FALSE(rs.insert({1, 2, 1}));
    CHECK(rs.contains({2, 0, -2}));
    CHECK(rs.dim() == 2);
}

TEST_CASE("evaluate") {
    QField q;
    using P = HPoly<QField>;
    auto x = P::var(q, 0), y = P::var(q, 1), z = P::var(q, 2);
    CHECK((x * y * z).evaluate({1, 1, 1}) == 1);
    CHECK(x.pow(2).evaluate({0, 1, 0}) == 0);
    CHECK((x.pow(2) + y * z).evaluate({2, 1, 3}) == 7);
}

TEST_CASE("maximal minors") {
    QField q;
    using P = HPoly<QField>;
    auto x = P::var(q, 0), y = P::var(q, 1), z = P::var(q, 2);
    SUBCASE("[x; y]") {
        PolyMatrix<QField> m(q, {0, 0}, {1});
        m.set(0, 0, x);
        m.set(1, 0, y);
        auto mi = maximal_minors(m);
        REQUIRE(mi.size() == 2);
        CHECK(mi[0] == y);
        CHECK(mi[1] == x.scaled(-1));
    }
    SUBCASE("columns (x,y,z), (x^2,y^2,z^2)") {
        PolyMatrix<QField> m(q, {0, 0, 0}, {1, 2});
        P v[3] = {x, y, z};
        for (int i = 0; i < 3; ++i) m.set(i, 0, v[i]), m.set(i, 1, v[i].pow(2));
        auto mi = maximal_minors(m);
        REQUIRE(mi.size() == 3);
        // cofactor oracle: minor deleting row 0 is y z^2 - z y^2
        CHECK(mi[0] == y * z.pow(2) - z * y.pow(2));
        for (auto& p : mi) CHECK(p.degree() == 3);
        // the minors annihilate both columns
        P s = x * mi[0] + y * mi[1] + z * mi[2];
        CHECK(s.is_zero());
    }
    SUBCASE("proportional columns") {
        PolyMatrix<QField> m(q, {0, 0, 0}, {1, 1});
        P v[3] = {x, y, z};
        for (int i = 0; i < 3; ++i) m.set(i, 0, v[i]), m.set(i, 1, v[i].scaled(3));
        for (auto& p : maximal_minors(m)) CHECK(p.is_zero());
    }
}
