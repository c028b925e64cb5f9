#pragma once

#include "psh/chern.hpp"
#include "psh/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace psh {

struct ExceptionalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a + b*sqrt(d), d >= 0
struct QuadSurd {
    Rational a, b, d;

    double approx() const;
    std::string str() const;
};

// sign of p + q*sqrt(A) + s*sqrt(B), decided in exact arithmetic
int surd_sign(const Rational& p, const Rational& q, const Rational& A, const Rational& s, const Rational& B);
int compare(const QuadSurd& x, const QuadSurd& y);
int compare(const QuadSurd& x, const Rational& y);

struct ExcSlope {
    Rational slope;
    Integer rank;
    Rational delta;
    std::optional<std::pair<Rational, Rational>> parents;  // (alpha, beta), absent for integer slopes

    LogChern character() const { return exceptional_char(slope); }
    std::string str() const;
};

ExcSlope exc_slope(const Rational& slope);

ExcSlope compose(const Rational& alpha, const Rational& beta);

std::pair<Rational, Rational> parents(const Rational& e, int depth_cap = 64);

bool is_exceptional_slope(const Rational& q, int depth_cap = 64);

struct EndpointInterval {
    Rational center;
    QuadSurd half_width;  // (3 - sqrt(9 - 4/r^2))/2

    // strict containment; throws when t is exactly an endpoint
    bool contains(const QuadSurd& t) const;
    QuadSurd lower() const;
    QuadSurd upper() const;
};

EndpointInterval endpoint_interval(const Rational& slope);

// larger-mu solution of chi(xi (x) zeta) = 0 on the line Delta(zeta) = 1/2
QuadSurd controlling_target(const LogChern& xi);

ExcSlope controlling(const LogChern& xi, int depth_cap = 64);

// all tree slopes in [k, k+1] down to the given depth, sorted
std::vector<Rational> tree_nodes(long k, int depth);

}  // namespace psh
