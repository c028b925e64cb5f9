#include "psh/points.hpp"
#include "psh/points_io.hpp"
#include "psh/walls.hpp"

#include <doctest.h>

using namespace psh;

namespace {

PrimeField F;

Scheme<PrimeField> gen(const std::string& spec, long n, std::uint64_t seed = 1) {
    return Scheme<PrimeField>::from_points(generate_config(F, parse_gen_spec(spec), n, seed));
}

Scheme<PrimeField> hb(const std::string& shape, std::uint64_t seed = 1) {
    Rng rng(seed);
    return scheme_from_hilbert_burch(hilbert_burch_matrix(F, parse_shape(shape), rng));
}

}  // namespace

TEST_CASE("generation kinds") {
    CHECK(parse_gen_spec("collinear:4").kind == GenKind::collinear);
    CHECK(parse_gen_spec("cubic:11").k == 11);
    CHECK_THROWS_AS(parse_gen_spec("line:4"), PointsError);
    CHECK(spec_from_geometry("Q_6(7)")->str() == "conic:6");
    CHECK(spec_from_geometry("Gaeta general")->kind == GenKind::general);
}

TEST_CASE("ideal dimensions") {
    auto z = gen("general", 7);
    CHECK(z.ideal_dim(3) == 10 - 7);
    CHECK(z.ideal_dim(2) == 0);
    CHECK(gen("collinear:3", 3).ideal_dim(1) == 1);
    CHECK(z.length() == 7);
}

TEST_CASE("betti tables of generated configurations") {
    CHECK(betti_table(gen("general", 6)).str() == "O(-4)^3 -> O(-3)^4");
    CHECK(betti_table(gen("general", 7)).str() == "O(-5)+O(-4) -> O(-3)^3");
    CHECK(betti_table(gen("collinear:3", 3)).str() == "O(-4) -> O(-3)+O(-1)");
    CHECK(betti_table(gen("collinear:4", 7)).shape() == sbld_table(7).betti("G1"));
    CHECK(betti_table(gen("conic:6", 7)).str() == "O(-5)+O(-4) -> O(-3)^3");
}

TEST_CASE("rational configuration: six on a conic") {
    QField q;
    std::vector<Point<QField>> pts;
    for (long t : {0, 1, -1, 2, -2, 3}) pts.push_back({1, t, t * t});
    pts.push_back({2, 3, 5});
    auto z = Scheme<QField>::from_points({q, pts, "seven", 0});
    auto b = betti_table(z);
    CHECK(b.str() == "O(-5)+O(-4) -> O(-3)^3");
    auto d = detect_admissible(syzygy_matrix(z), "n7-G");
    CHECK(d.verdict == "I_1(-2)-admissible");
}

TEST_CASE("syzygy matrices") {
    auto m3 = syzygy_matrix(gen("general", 3));
    CHECK(m3.rows() == 3);
    CHECK(m3.cols() == 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(m3.entry_degree(i, j) == 1);
    auto m7 = syzygy_matrix(gen("general", 7));
    CHECK(m7.rows() == 3);
    REQUIRE(m7.cols() == 2);
    CHECK(m7.entry_degree(0, 0) + m7.entry_degree(0, 1) == 3);
    auto ci = syzygy_matrix(hb("O(-6) -> O(-3)^2"));
    CHECK(ci.rows() == 2);
    CHECK(ci.cols() == 1);
}

TEST_CASE("hilbert-burch") {
    QField q;
    using P = HPoly<QField>;
    PolyMatrix<QField> m(q, {-1, -1}, {0});
    m.set(0, 0, P::var(q, 0));
    m.set(1, 0, P::var(q, 1));
    auto z = scheme_from_hilbert_burch(m);
    CHECK(z.length() == 1);
    CHECK(betti_table(z).str() == "O(-2) -> O(-1)^2");
    CHECK(betti_table(hb("O(-6)^2+O(-5) -> O(-5)+O(-4)^3")).str() == "O(-6)^2+O(-5) -> O(-5)+O(-4)^3");
    auto z24 = hb("O(-8)^3+O(-7)^2 -> O(-7)^2+O(-6)^4");
    CHECK(z24.length() == 24);
    CHECK(betti_table(z24).str() == "O(-8)^3+O(-7)^2 -> O(-7)^2+O(-6)^4");
}

TEST_CASE("admissibility detectors") {
    CHECK(detect_admissible(syzygy_matrix(gen("general", 7)), "n7-G").verdict == "T(-4)-admissible");
    CHECK(detect_admissible(syzygy_matrix(gen("conic:6", 7)), "n7-G").verdict == "I_1(-2)-admissible");
    CHECK(detect_admissible(syzygy_matrix(gen("collinear:4", 8)), "n8-G").verdict == "I_4(-1)-admissible");
    auto c11 = syzygy_matrix(gen("cubic:11", 12));
    CHECK(detect_admissible(c11, "n12-G1-l123").verdict == "I_1(-3)-admissible");
    auto l5 = syzygy_matrix(gen("collinear:5", 12));
    CHECK(detect_admissible(l5, "n12-G1-l45").verdict == "I_7(-1)-admissible");
    auto div = syzygy_matrix(hb("O(-6)^2+O(-5) -> O(-5)+O(-4)^3"));
    CHECK(detect_admissible(div, "n12-G1-l123").verdict == "not I_1(-3)-admissible");
    CHECK(detect_admissible(div, "n12-G1-l45").verdict == "not I_7(-1)-admissible");
}

TEST_CASE("projective invariance") {
    Rng rng(5);
    auto z = gen("conic:6", 7);
    auto base = betti_table(z).str();
    for (int i = 0; i < 5; ++i) {
        auto t = z.transformed(random_invertible(F, rng));
        CHECK(betti_table(t).str() == base);
        CHECK(detect_admissible(syzygy_matrix(t), "n7-G").verdict == "I_1(-2)-admissible");
    }
}

TEST_CASE("config json") {
    auto raw = parse_config_json(R"({"field": {"p": 101}, "points": [[1, 0, 0], [0, 1, 0], ["1/2", 1, 1]]})");
    REQUIRE(raw.prime);
    CHECK(*raw.prime == 101);
    auto cfg = realize(raw, PrimeField(101));
    CHECK(cfg.points.size() == 3);
    auto zero = parse_config_json(R"({"field": "Q", "points": [[0, 0, 0]]})");
    CHECK_THROWS_AS(realize(zero, QField{}), PointsError);
    CHECK_THROWS(parse_config_json("{"));
}
