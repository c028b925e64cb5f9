#include "psh/interp.hpp"

#include <doctest.h>

using namespace psh;

namespace {

PrimeField F;

Scheme<PrimeField> hb(const GradedShape& shape, std::uint64_t seed = 1) {
    Rng rng(seed);
    return scheme_from_hilbert_burch(hilbert_burch_matrix(F, shape, rng));
}

}  // namespace

TEST_CASE("sections of a cokernel bundle with no points") {
    Rng rng(2);
    // 9 h0(O(3)) - 2 h0(O(1))
    auto m = tangential_interp(F, 2, 1, rng);
    CHECK(h0_bundle(m) == 9 * 10 - 2 * 3);
    auto t = tangent_bundle(F, 0);
    CHECK(h0_bundle(t) == 8);
}

TEST_CASE("line bundles agree with ideal dimensions") {
    auto z = Scheme<PrimeField>::from_points(generate_config(F, parse_gen_spec("general"), 7, 3));
    for (int k = 2; k <= 5; ++k) CHECK(h0_twisted(line_bundle(F, k), z) == z.ideal_dim(k));
}

TEST_CASE("orthogonality verdicts") {
    auto one = Scheme<PrimeField>::from_points(generate_config(F, parse_gen_spec("general"), 1, 1));
    CHECK(check_orthogonal(line_bundle(F, 0), one).kind == Orthogonality::orthogonal);
    auto five = Scheme<PrimeField>::from_points(generate_config(F, parse_gen_spec("general"), 5, 1));
    auto v = check_orthogonal(line_bundle(F, 1), five);
    CHECK(v.kind == Orthogonality::chi_nonzero);
    CHECK(v.chi == -2);
    CHECK(v.str() == "chi_nonzero(-2)");
}

TEST_CASE("tangential interpolation, d=2") {
    Rng rng(1);
    auto m = tangential_interp(F, 2, 1, rng);
    CHECK(m.shape().str() == "O(1)^2 -> O(3)^9");
    CHECK(m.cls().c1 / m.cls().r == make_q(25, 7));
    auto z = hb(qk_shape(2, 1));
    CHECK(z.length() == 12);
    CHECK(check_orthogonal(m, z).kind == Orthogonality::orthogonal);
}

TEST_CASE("tangential interpolation, d=3") {
    Rng rng(1);
    auto z = hb(qk_shape(3, 1));
    CHECK(z.length() == 24);
    CHECK(check_orthogonal(tangential_interp(F, 3, 1, rng), z).kind == Orthogonality::orthogonal);
}

TEST_CASE("triangular interpolation, d=4") {
    Rng rng(1);
    auto m = triangular_interp(F, 4, 1, rng);
    CHECK(m.shape().str() == "O(1)^4 -> O(2)^7");
    auto z = hb(divisorial_betti(10));
    CHECK(check_orthogonal(m, z).kind == Orthogonality::orthogonal);
}

TEST_CASE("tangent sections on qk schemes") {
    for (auto [d, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) CHECK(tangent_section_count(hb(qk_shape(d, k)), d) == k);
    auto extra = Scheme<PrimeField>::from_points(generate_config(F, parse_gen_spec("general"), 13, 1));
    CHECK(tangent_section_count(extra, 2) == 0);
}

TEST_CASE("gamma schemes") {
    for (long d : {2, 3}) CHECK(hb(gamma_shape(d)).ideal_dim(static_cast<int>(4 * d - 4)) == 4 * d * d - 8 * d + 3);
}

TEST_CASE("points and ideal models agree") {
    Rng rng(4);
    auto z = Scheme<PrimeField>::from_points(generate_config(F, parse_gen_spec("general"), 12, 9));
    auto m = tangential_interp(F, 2, 1, rng);
    Rng r1(7);
    CHECK(detail::h0_points(m, z.points()) == detail::h0_ideal(m, Scheme<PrimeField>::from_generators(F, minimal_generators(z).gens), r1));
}
