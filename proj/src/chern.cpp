#include "psh/chern.hpp"

namespace psh {

std::string LogChern::str() const { return "(" + to_str(r) + ", " + to_str(mu) + ", " + to_str(delta) + ")"; }

LogChern line(long k) { return {1, k, 0}; }

LogChern tangent(long k) { return {2, Rational(3, 2) + k, Rational(3, 8)}; }

LogChern ideal_points(long n, long k) {
    if (n < 0) throw ChernError("ideal_points: negative length");
    return {1, k, n};
}

LogChern exceptional_char(const Rational& slope) {
    Rational r(slope.get_den());
    return {r, slope, (1 - 1 / (r * r)) / 2};
}

Rational euler(const Ch& c) { return c.r + Rational(3, 2) * c.c1 + c.ch2; }

Rational euler(const LogChern& xi) { return xi.r * ((xi.mu + 1) * (xi.mu + 2) / 2 - xi.delta); }

Rational euler_pair(const LogChern& u, const LogChern& v) {
    Rational x = v.mu - u.mu;
    return u.r * v.r * ((x + 1) * (x + 2) / 2 - u.delta - v.delta);
}

Rational euler_pair(const Ch& u, const Ch& v) {
    Ch p{u.r * v.r, u.r * v.c1 - v.r * u.c1, u.r * v.ch2 + v.r * u.ch2 - u.c1 * v.c1};
    return euler(p);
}

LogChern twist(const LogChern& xi, long k) { return {xi.r, xi.mu + k, xi.delta}; }

LogChern dual(const LogChern& xi) { return {xi.r, -xi.mu, xi.delta}; }

OrthoPoint orthogonal_point(const LogChern& f, const LogChern& w) {
    if (f.mu == w.mu) throw ChernError("orthogonal_point: equal slopes");
    Rational mu = (f.delta - w.delta) / (f.mu - w.mu) - (w.mu + f.mu + 3) / 2;
    Rational delta = (mu + f.mu + 1) * (mu + f.mu + 2) / 2 - f.delta;
    LogChern z{1, mu, delta};
    if (sgn(euler_pair(dual(z), f)) != 0 || sgn(euler_pair(dual(z), w)) != 0)
        throw ChernError("orthogonal_point: pairing check failed");
    return {mu, delta};
}

Rational DivisorClass::slope() const {
    if (sgn(b) >= 0) throw ChernError("divisor class with nonnegative B coefficient has no slope");
    return a / (-2 * b);
}

bool DivisorClass::same_ray(const DivisorClass& o) const {
    if (a * o.b != b * o.a) return false;
    // same direction, not opposite
    return sgn(a) * sgn(o.a) >= 0 && sgn(b) * sgn(o.b) >= 0;
}

std::string DivisorClass::str() const {
    if (sgn(b) < 0) {
        Rational mu = slope();
        return to_str(mu) + "H - 1/2B";
    }
    return to_str(a) + "H + " + to_str(b) + "B";
}

}  // namespace psh
