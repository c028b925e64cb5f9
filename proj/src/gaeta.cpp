#include "psh/gaeta.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace psh {

namespace {

std::vector<Term> normalize(std::vector<Term> v) {
    std::map<long, long> acc;
    for (auto& t : v) {
        if (t.mult < 0) throw GaetaError("negative multiplicity in a graded shape");
        acc[t.twist] += t.mult;
    }
    std::vector<Term> out;
    for (auto& [tw, m] : acc)
        if (m > 0) out.push_back({tw, m});
    return out;
}

Ch line_ch(long t) { return line(t).ch(); }

std::string side_str(const std::vector<Term>& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << "+";
        if (v[i].twist == 0)
            os << "O";
        else
            os << "O(" << v[i].twist << ")";
        if (v[i].mult != 1) os << "^" << v[i].mult;
    }
    return os.str();
}

long choose2(long m) { return m * (m - 1) / 2; }

using Combo = std::vector<std::pair<Integer, Rational>>;

Ch combo_ch(const Combo& c) {
    Ch s{0, 0, 0};
    for (auto& [m, slope] : c) s = s + exceptional_char(slope).ch() * Rational(m);
    return s;
}

Integer as_integer(const Rational& q, const char* what) {
    if (!is_integer(q)) throw GaetaError(std::string(what) + " is not an integer: " + to_str(q));
    return q.get_num();
}

// Express X in the window O(-d-2), O(-d-1), O(-d); side of each piece given by sign.
GradedShape three_twist(const Ch& x, long d) {
    Rational x1 = euler_pair(line(-d).ch(), x);
    Rational x2 = euler_pair(tangent(-d - 1).ch(), x);
    Rational x3 = euler_pair(line(-d + 1).ch(), x);
    long a1 = to_long(as_integer(x1, "window coefficient"));
    long a2 = to_long(as_integer(x2, "window coefficient"));
    long a3 = to_long(as_integer(x3, "window coefficient"));
    std::vector<Term> src, tgt;
    if (a1 >= 0)
        tgt.push_back({-d, a1});
    else
        src.push_back({-d, -a1});
    if (a2 >= 0)
        src.push_back({-d - 1, a2});
    else
        tgt.push_back({-d - 1, -a2});
    if (a3 <= 0)
        src.push_back({-d - 2, -a3});
    else
        tgt.push_back({-d - 2, a3});
    return GradedShape(src, tgt);
}

GradedShape direct_shape(const Combo& c) {
    std::vector<Term> src, tgt;
    for (auto& [m, slope] : c) {
        long t = to_long(Rational(slope));
        long mm = to_long(Integer(abs(m)));
        if (sgn(m) > 0)
            tgt.push_back({t, mm});
        else if (sgn(m) < 0)
            src.push_back({t, mm});
    }
    return GradedShape(src, tgt);
}

GradedShape sum(const GradedShape& a, const GradedShape& b) {
    auto s = a.sources, t = a.targets;
    s.insert(s.end(), b.sources.begin(), b.sources.end());
    t.insert(t.end(), b.targets.begin(), b.targets.end());
    return GradedShape(s, t);
}

}  // namespace

GradedShape::GradedShape(std::vector<Term> s, std::vector<Term> t) : sources(normalize(std::move(s))), targets(normalize(std::move(t))) {}

Ch GradedShape::ch() const {
    Ch c{0, 0, 0};
    for (auto& t : targets) c = c + line_ch(t.twist) * Rational(t.mult);
    for (auto& s : sources) c = c - line_ch(s.twist) * Rational(s.mult);
    return c;
}

Rational GradedShape::rank() const { return Rational(target_count() - source_count()); }

long GradedShape::source_count() const {
    long s = 0;
    for (auto& t : sources) s += t.mult;
    return s;
}

long GradedShape::target_count() const {
    long s = 0;
    for (auto& t : targets) s += t.mult;
    return s;
}

long GradedShape::mult(bool target, long twist) const {
    for (auto& t : target ? targets : sources)
        if (t.twist == twist) return t.mult;
    return 0;
}

bool GradedShape::is_pure() const {
    std::vector<long> tw;
    for (auto& t : sources) tw.push_back(t.twist);
    for (auto& t : targets) tw.push_back(t.twist);
    std::sort(tw.begin(), tw.end());
    tw.erase(std::unique(tw.begin(), tw.end()), tw.end());
    return tw.size() == 2;
}

std::string GradedShape::str() const { return side_str(sources) + " -> " + side_str(targets); }

void GradedShape::check_resolves(const LogChern& xi) const {
    if (!(ch() == xi.ch())) throw GaetaError("shape " + str() + " does not resolve " + xi.str());
}

long min_curve_degree(long n) {
    if (n <= 0) throw GaetaError("min_curve_degree: n must be positive");
    long d = 0;
    while (!(choose2(d + 1) <= n && n < choose2(d + 2))) ++d;
    return d;
}

GaetaExponents gaeta_exponents(long n) {
    long d = min_curve_degree(n);
    GaetaExponents g;
    g.d = d;
    g.n1 = choose2(d + 2) - n;
    g.n2 = d * (d + 2) - 2 * n;
    g.n3 = choose2(d + 1) - n;
    std::vector<Term> src{{-d - 2, -g.n3}}, tgt{{-d, g.n1}};
    if (g.n2 >= 0)
        src.push_back({-d - 1, g.n2});
    else
        tgt.push_back({-d - 1, -g.n2});
    g.shape = GradedShape(src, tgt);
    g.shape.check_resolves(ideal_points(n));
    return g;
}

PureClass classify_pure(long n) {
    if (n <= 0) throw GaetaError("classify_pure: n must be positive");
    PureClass p;
    std::optional<long> tri, tan;
    for (long d = 1; d * (d + 1) / 2 <= n; ++d)
        if (d * (d + 1) / 2 == n) tri = d;
    for (long d = 1; 2 * d * (d + 1) <= n; ++d)
        if (2 * d * (d + 1) == n) tan = d;
    if (tri) {
        p.kind = Purity::triangular;
        p.d = *tri;
        p.tangential_d = tan;
    } else if (tan) {
        p.kind = Purity::tangential;
        p.d = *tan;
    }
    return p;
}

std::string purity_str(const PureClass& p) {
    switch (p.kind) {
        case Purity::triangular: {
            std::string s = "Triangular(" + std::to_string(p.d) + ")";
            if (p.tangential_d) s += " and Tangential(" + std::to_string(*p.tangential_d) + ")";
            return s;
        }
        case Purity::tangential: return "Tangential(" + std::to_string(p.d) + ")";
        default: return "NotPure";
    }
}

std::string bundle_name(const Rational& slope) {
    if (sgn(slope) == 0) return "O";
    if (is_integer(slope)) return "O(" + to_str(slope) + ")";
    if (slope.get_den() == 2) return "T(" + to_str(slope - Rational(3, 2)) + ")";
    return "E_{" + to_str(slope) + "}";
}

std::string ExcTerm::str() const {
    std::string s = bundle_name(slope);
    if (mult != 1) s += "^" + mult.get_str();
    return s;
}

std::string sign_str(GaetaSign s) {
    switch (s) {
        case GaetaSign::positive: return "positive";
        case GaetaSign::zero: return "zero";
        default: return "negative";
    }
}

std::string GenGaeta::str() const {
    auto side = [](const std::vector<ExcTerm>& v) {
        if (v.empty()) return std::string("0");
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "+" : "") + v[i].str();
        return s;
    };
    return side(sources) + " -> " + side(targets);
}

GenGaeta generalized_gaeta(const LogChern& xi, int depth_cap) {
    ExcSlope e = controlling(xi, depth_cap);
    Rational g = e.slope, a, b;
    if (e.parents) {
        a = e.parents->first;
        b = e.parents->second;
    } else {
        a = g - 1;
        b = g + 1;
    }
    auto chi_with = [&](const Rational& s) { return euler_pair(exceptional_char(s), xi); };
    // twist conventions: E_{-beta}, E_{-alpha-3}, E_{-(alpha.beta)}
    Rational s_beta = -b, s_alpha3 = -a - 3, s_g = -g;
    GenGaeta out{};
    out.control = e;
    out.alpha = a;
    out.beta = b;
    out.below_picard_rank_two = xi.r == 1 && xi.delta < 3;
    Rational c = chi_with(s_g);
    if (sgn(c) > 0) {
        out.sign = GaetaSign::positive;
        Rational a_g = is_integer(g) ? g - Rational(1, 2) : compose(a, g).slope;
        out.m1 = as_integer(c, "m1");
        out.m2 = as_integer(-chi_with(-a_g), "m2");
        out.m3 = as_integer(-chi_with(-a), "m3");
        out.targets = {{s_g, out.m1}, {s_beta, out.m2}};
        out.sources = {{s_alpha3, out.m3}};
        out.f_class = {{out.m1, s_g}};
        out.w_class = {{out.m2, s_beta}, {-out.m3, s_alpha3}};
    } else if (sgn(c) < 0) {
        out.sign = GaetaSign::negative;
        Rational g_b = is_integer(g) ? g + Rational(1, 2) : compose(g, b).slope;
        out.m1 = as_integer(-c, "m1");
        out.m2 = as_integer(chi_with(s_beta), "m2");
        out.m3 = as_integer(chi_with(-g_b), "m3");
        out.targets = {{s_beta, out.m2}};
        out.sources = {{s_alpha3, out.m3}, {s_g - 3, out.m1}};
        out.f_class = {{out.m2, s_beta}, {-out.m3, s_alpha3}};
        out.w_class = {{-out.m1, s_g - 3}};
    } else {
        out.sign = GaetaSign::zero;
        Ch eb = exceptional_char(s_beta).ch(), ea = exceptional_char(s_alpha3).ch(), x = xi.ch();
        // l*eb - k*ea = xi, solved on (rank, c1)
        Rational det = -eb.r * ea.c1 + ea.r * eb.c1;
        if (sgn(det) == 0) throw GaetaError("zero case: singular conservation system");
        Rational l = (-x.r * ea.c1 + ea.r * x.c1) / det;
        Rational k = (eb.r * x.c1 - eb.c1 * x.r) / det;
        if (l * eb.ch2 - k * ea.ch2 != x.ch2) throw GaetaError("zero case: conservation inconsistent on ch2");
        out.m1 = 0;
        out.m2 = as_integer(l, "l");
        out.m3 = as_integer(k, "k");
        out.targets = {{s_beta, out.m2}};
        out.sources = {{s_alpha3, out.m3}};
        out.f_class = {{out.m2, s_beta}};
        out.w_class = {{-out.m3, s_alpha3}};
    }
    if (sgn(out.m1) < 0 || sgn(out.m2) < 0 || sgn(out.m3) < 0)
        throw GaetaError("negative exponent in the generalized Gaeta resolution of " + xi.str());
    std::erase_if(out.targets, [](const ExcTerm& t) { return sgn(t.mult) == 0; });
    std::erase_if(out.sources, [](const ExcTerm& t) { return sgn(t.mult) == 0; });
    Ch total = combo_ch(out.f_class) + combo_ch(out.w_class);
    if (!(total == xi.ch())) throw GaetaError("generalized Gaeta resolution fails conservation");
    return out;
}

ConeBlocks mapping_cone_blocks(const LogChern& xi, int depth_cap) {
    GenGaeta gg = generalized_gaeta(xi, depth_cap);
    ConeBlocks out;
    if (is_integer(gg.control.slope)) {
        out.d = to_long(gg.control.slope);
        out.f = direct_shape(gg.f_class);
        out.w = direct_shape(gg.w_class);
    } else {
        out.d = to_long(ceil_q(gg.control.slope));
        out.f = three_twist(combo_ch(gg.f_class), out.d);
        out.w = three_twist(combo_ch(gg.w_class), out.d);
    }
    out.total = sum(out.f, out.w);
    out.total.check_resolves(xi);
    if (xi.r == 1 && is_integer(xi.mu) && is_integer(xi.delta) && xi.delta > 0) {
        long n = to_long(xi.delta), k = to_long(xi.mu);
        GradedShape g = gaeta_exponents(n).shape;
        auto shift = [k](std::vector<Term> v) {
            for (auto& t : v) t.twist += k;
            return v;
        };
        GradedShape expect(shift(g.sources), shift(g.targets));
        if (!(expect == out.total))
            throw GaetaError("block decomposition " + out.total.str() + " differs from the Gaeta shape " + expect.str());
    }
    return out;
}

GradedShape divisorial_betti(long n) {
    PureClass p = classify_pure(n);
    long d = p.d;
    GradedShape s;
    if (p.kind == Purity::triangular) {
        if (d <= 2) throw GaetaError("divisorial_betti: triangular case needs d > 2");
        s = GradedShape({{-d - 2, 1}, {-d - 1, d - 3}}, {{-d, d - 2}, {-d + 1, 1}});
    } else if (p.kind == Purity::tangential) {
        s = GradedShape({{-2 * d - 2, d}, {-2 * d - 1, 1}}, {{-2 * d - 1, 1}, {-2 * d, d + 1}});
    } else {
        throw GaetaError("divisorial_betti: " + std::to_string(n) + " is neither triangular nor tangential");
    }
    s.check_resolves(ideal_points(n));
    return s;
}

}  // namespace psh

namespace psh {

GradedShape parse_shape(const std::string& s) {
    static const std::regex term(R"(\s*O(?:\((-?\d+)\))?(?:\^(\d+))?\s*)");
    auto side = [&](const std::string& part) {
        std::vector<Term> out;
        std::string p = part;
        p.erase(0, p.find_first_not_of(' '));
        p.erase(p.find_last_not_of(' ') + 1);
        if (p == "0") return out;
        std::size_t start = 0;
        while (start <= p.size()) {
            std::size_t plus = p.find('+', start);
            std::string t = p.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
            std::smatch m;
            if (!std::regex_match(t, m, term)) throw GaetaError("cannot parse term '" + t + "' in '" + s + "'");
            out.push_back({m[1].matched ? std::stol(m[1]) : 0, m[2].matched ? std::stol(m[2]) : 1});
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
        return out;
    };
    auto arrow = s.find("->");
    if (arrow == std::string::npos) throw GaetaError("shape needs 'sources -> targets': " + s);
    return GradedShape(side(s.substr(0, arrow)), side(s.substr(arrow + 2)));
}

}  // namespace psh
