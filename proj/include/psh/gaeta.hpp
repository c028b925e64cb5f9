#pragma once

#include "psh/chern.hpp"
#include "psh/exceptional.hpp"
#include "psh/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace psh {

struct GaetaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// O(twist)^mult
struct Term {
    long twist = 0;
    long mult = 0;
    bool operator==(const Term&) const = default;
};

// Two-term resolution  sources -> targets  by sums of line bundles.
struct GradedShape {
    std::vector<Term> sources, targets;

    GradedShape() = default;
    GradedShape(std::vector<Term> s, std::vector<Term> t);

    Ch ch() const;
    Rational rank() const;
    long source_count() const;
    long target_count() const;
    long mult(bool target, long twist) const;
    // two distinct twists overall
    bool is_pure() const;
    // "O(-5)+O(-4) -> O(-3)^3"
    std::string str() const;
    bool operator==(const GradedShape&) const = default;

    // throws GaetaError unless the alternating sum of characters equals xi
    void check_resolves(const LogChern& xi) const;
};

// inverse of GradedShape::str; accepts "O" for O(0) and "0" for an empty side
GradedShape parse_shape(const std::string& s);

long min_curve_degree(long n);

struct GaetaExponents {
    long d, n1, n2, n3;
    GradedShape shape;
};

GaetaExponents gaeta_exponents(long n);

enum class Purity { triangular, tangential, not_pure };

struct PureClass {
    Purity kind = Purity::not_pure;
    long d = 0;
    std::optional<long> tangential_d;  // set when n is also tangential
};

PureClass classify_pure(long n);
std::string purity_str(const PureClass& p);

// E_slope^mult, named O(k), T(k) or E_{p/q}
struct ExcTerm {
    Rational slope;
    Integer mult;
    std::string str() const;
};

std::string bundle_name(const Rational& slope);

enum class GaetaSign { positive, zero, negative };
std::string sign_str(GaetaSign s);

struct GenGaeta {
    GaetaSign sign;
    ExcSlope control;
    Rational alpha, beta;  // (alpha, beta) triad; (e-1, e+1) for integer e
    Integer m1, m2, m3;    // zero case: m1 = 0, m2 = l, m3 = k
    std::vector<ExcTerm> sources, targets;
    // classes, as signed combinations, of the two pieces F and W
    std::vector<std::pair<Integer, Rational>> f_class, w_class;
    bool below_picard_rank_two = false;

    std::string str() const;
};

GenGaeta generalized_gaeta(const LogChern& xi, int depth_cap = 64);

struct ConeBlocks {
    GradedShape f;  // F_{-1} -> F_0
    GradedShape w;  // W_0 -> W_1
    GradedShape total;
    long d;  // twist of the top line bundle in the three-twist window
};

ConeBlocks mapping_cone_blocks(const LogChern& xi, int depth_cap = 64);

GradedShape divisorial_betti(long n);

}  // namespace psh
