#include "psh/exceptional.hpp"

#include <algorithm>
#include <cmath>

namespace psh {

namespace {

// sign of u + v*sqrt(c)
int sign2(const Rational& u, const Rational& v, const Rational& c) {
    int su = sgn(u);
    int sv = sgn(c) > 0 ? sgn(v) : 0;
    if (sv == 0) return su;
    if (su == 0 || su == sv) return sv;
    int cmp = sgn(u * u - v * v * c);
    if (cmp == 0) return 0;
    return cmp > 0 ? su : sv;
}

}  // namespace

int surd_sign(const Rational& p, const Rational& q, const Rational& A, const Rational& s, const Rational& B) {
    if (sgn(A) < 0 || sgn(B) < 0) throw ExceptionalError("negative radicand");
    // X = q sqrt(A) + s sqrt(B)
    int sx;
    {
        int sa = sgn(A) > 0 ? sgn(q) : 0;
        int sb = sgn(B) > 0 ? sgn(s) : 0;
        if (sa == 0)
            sx = sb;
        else if (sb == 0 || sa == sb)
            sx = sa;
        else {
            int cmp = sgn(q * q * A - s * s * B);
            sx = cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
        }
    }
    int sp = sgn(p);
    if (sx == 0) return sp;
    if (sp == 0 || sp == sx) return sx;
    // compare p^2 with X^2 = q^2 A + s^2 B + 2 q s sqrt(AB)
    int cmp = sign2(p * p - q * q * A - s * s * B, -2 * q * s, A * B);
    if (cmp == 0) return 0;
    return cmp > 0 ? sp : sx;
}

int compare(const QuadSurd& x, const QuadSurd& y) { return surd_sign(x.a - y.a, x.b, x.d, -y.b, y.d); }

int compare(const QuadSurd& x, const Rational& y) { return surd_sign(x.a - y, x.b, x.d, 0, 0); }

double QuadSurd::approx() const { return a.get_d() + b.get_d() * std::sqrt(d.get_d()); }

std::string QuadSurd::str() const { return to_str(a) + " + " + to_str(b) + "*sqrt(" + to_str(d) + ")"; }

std::string ExcSlope::str() const { return to_str(slope) + " (rank " + rank.get_str() + ")"; }

ExcSlope exc_slope(const Rational& slope) {
    ExcSlope e{slope, Integer(slope.get_den()), exceptional_char(slope).delta, std::nullopt};
    return e;
}

ExcSlope compose(const Rational& alpha, const Rational& beta) {
    if (!(alpha < beta) || beta - alpha > 1) throw ExceptionalError("compose: need alpha < beta <= alpha + 1");
    Rational da = exceptional_char(alpha).delta, db = exceptional_char(beta).delta;
    Rational g = (alpha + beta) / 2 + (db - da) / (3 + alpha - beta);
    if (!(alpha < g && g < beta)) throw ExceptionalError("compose: result not between the inputs");
    ExcSlope e = exc_slope(g);
    e.parents = std::make_pair(alpha, beta);
    LogChern ea = exceptional_char(alpha), eb = exceptional_char(beta), eg = e.character();
    if (sgn(euler_pair(eg, ea)) != 0 || sgn(euler_pair(eb, eg)) != 0)
        throw ExceptionalError("compose: " + to_str(alpha) + ", " + to_str(beta) + " are not adjacent");
    return e;
}

std::pair<Rational, Rational> parents(const Rational& e, int depth_cap) {
    if (is_integer(e)) throw ExceptionalError("integer slope " + to_str(e) + " has no parents");
    Rational a(floor_q(e)), b = a + 1;
    for (int depth = 0; depth < depth_cap; ++depth) {
        Rational g = compose(a, b).slope;
        if (g == e) return {a, b};
        if (e < g)
            b = g;
        else
            a = g;
    }
    throw ExceptionalError(to_str(e) + " is not an exceptional slope within depth " + std::to_string(depth_cap));
}

bool is_exceptional_slope(const Rational& q, int depth_cap) {
    if (is_integer(q)) return true;
    try {
        parents(q, depth_cap);
        return true;
    } catch (const ExceptionalError&) {
        return false;
    }
}

EndpointInterval endpoint_interval(const Rational& slope) {
    Rational r(slope.get_den());
    return {slope, QuadSurd{Rational(3, 2), Rational(-1, 2), 9 - 4 / (r * r)}};
}

QuadSurd EndpointInterval::lower() const { return {center - half_width.a, -half_width.b, half_width.d}; }

QuadSurd EndpointInterval::upper() const { return {center + half_width.a, half_width.b, half_width.d}; }

bool EndpointInterval::contains(const QuadSurd& t) const {
    int lo = compare(t, lower());
    int hi = compare(upper(), t);
    if (lo == 0 || hi == 0) throw ExceptionalError("target sits on an endpoint of the interval at " + to_str(center));
    return lo > 0 && hi > 0;
}

QuadSurd controlling_target(const LogChern& xi) {
    Rational rad = 5 + 8 * xi.delta;
    if (sgn(rad) < 0) throw ExceptionalError("no real orthogonal slope: 5 + 8*Delta < 0");
    return {Rational(-3, 2) - xi.mu, Rational(1, 2), rad};
}

ExcSlope controlling(const LogChern& xi, int depth_cap) {
    QuadSurd t = controlling_target(xi);
    Integer k(static_cast<long>(std::floor(t.approx())));
    while (compare(t, Rational(k)) < 0) --k;
    while (compare(t, Rational(k + 1)) >= 0) ++k;
    Rational a(k), b(k + 1);
    if (endpoint_interval(a).contains(t)) return exc_slope(a);
    if (endpoint_interval(b).contains(t)) return exc_slope(b);
    for (int depth = 0; depth < depth_cap; ++depth) {
        ExcSlope g = compose(a, b);
        if (endpoint_interval(g.slope).contains(t)) return g;
        if (compare(t, g.slope) < 0)
            b = g.slope;
        else
            a = g.slope;
    }
    throw ExceptionalError("controlling search exhausted depth " + std::to_string(depth_cap));
}

std::vector<Rational> tree_nodes(long k, int depth) {
    std::vector<Rational> level{Rational(k), Rational(k + 1)};
    for (int d = 0; d < depth; ++d) {
        std::vector<Rational> next;
        for (std::size_t i = 0; i + 1 < level.size(); ++i) {
            next.push_back(level[i]);
            next.push_back(compose(level[i], level[i + 1]).slope);
        }
        next.push_back(level.back());
        level = std::move(next);
    }
    return level;
}

}  // namespace psh
