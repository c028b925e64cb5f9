#pragma once

#include "psh/rational.hpp"

#include <stdexcept>
#include <string>

namespace psh {

struct ChernError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Additive Chern character (r, ch1, ch2).  Rank may be zero or negative.
struct Ch {
    Rational r, c1, ch2;

    Ch operator+(const Ch& o) const { return {r + o.r, c1 + o.c1, ch2 + o.ch2}; }
    Ch operator-(const Ch& o) const { return {r - o.r, c1 - o.c1, ch2 - o.ch2}; }
    Ch operator-() const { return {-r, -c1, -ch2}; }
    Ch operator*(const Rational& k) const { return {r * k, c1 * k, ch2 * k}; }
    bool operator==(const Ch& o) const { return r == o.r && c1 == o.c1 && ch2 == o.ch2; }
    bool is_zero() const { return sgn(r) == 0 && sgn(c1) == 0 && sgn(ch2) == 0; }
};

// Logarithmic character (r, mu, Delta)
struct LogChern {
    Rational r, mu, delta;

    Ch ch() const { return {r, r * mu, r * (mu * mu / 2 - delta)}; }
    static LogChern from_ch(const Ch& c) {
        if (sgn(c.r) == 0) throw ChernError("rank-zero class has no slope");
        Rational mu = c.c1 / c.r;
        return {c.r, mu, mu * mu / 2 - c.ch2 / c.r};
    }
    bool operator==(const LogChern& o) const { return r == o.r && mu == o.mu && delta == o.delta; }
    std::string str() const;
};

LogChern line(long k);
LogChern tangent(long k);
LogChern ideal_points(long n, long k = 0);
LogChern exceptional_char(const Rational& slope);  // (den, slope, (1 - 1/den^2)/2)

Rational euler(const LogChern& xi);
Rational euler(const Ch& c);

// chi(U, V) = chi(U^* (x) V)
Rational euler_pair(const LogChern& u, const LogChern& v);
Rational euler_pair(const Ch& u, const Ch& v);

LogChern twist(const LogChern& xi, long k);
LogChern dual(const LogChern& xi);

struct OrthoPoint {
    Rational mu, delta;
};

// (mu, Delta) with chi(zeta (x) F) = chi(zeta (x) W) = 0 for zeta = (r, mu, Delta)
OrthoPoint orthogonal_point(const LogChern& f, const LogChern& w);

// mu*H + b*B, compared as rays
struct DivisorClass {
    Rational a, b;

    // mu when normalised to b = -1/2
    Rational slope() const;
    bool same_ray(const DivisorClass& o) const;
    Rational pair_curve(const Rational& beta_h, const Rational& beta_half_b) const { return a * beta_h + 2 * b * beta_half_b; }
    std::string str() const;
};

inline DivisorClass divisor_with_slope(const Rational& mu) { return {mu, Rational(-1, 2)}; }

}  // namespace psh
