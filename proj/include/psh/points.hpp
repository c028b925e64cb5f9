#pragma once

#include "psh/chern.hpp"
#include "psh/field.hpp"
#include "psh/gaeta.hpp"
#include "psh/hpoly.hpp"
#include "psh/mat.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace psh {

struct PointsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
using Point = std::array<typename F::Elem, 3>;

template <class F>
struct PointConfig {
    F field;
    std::vector<Point<F>> points;
    std::string label;
    std::uint64_t seed = 0;
};

enum class GenKind { general, collinear, on_conic, on_cubic };

struct GenSpec {
    GenKind kind = GenKind::general;
    long k = 0;
    std::string str() const;
};

// "general", "collinear:4", "conic:6", "cubic:11"
GenSpec parse_gen_spec(const std::string& s);
// "L_4(7)" -> collinear:4, "Q_6(7)" -> conic:6, "C_11(12)" -> cubic:11, "Gaeta general" -> general
std::optional<GenSpec> spec_from_geometry(const std::string& label);

// ---------------------------------------------------------------------------
// monomial bookkeeping

// index in degree m+1 of (monomial i of degree m) * x_v
inline const std::vector<std::array<std::size_t, 3>>& mul_table(int m) {
    static thread_local std::map<int, std::vector<std::array<std::size_t, 3>>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<std::array<std::size_t, 3>> t;
    for (auto& e : monomials(m)) {
        std::array<std::size_t, 3> r{};
        for (int v = 0; v < 3; ++v) {
            Exp f = e;
            ++f[v];
            r[v] = mono_index(f);
        }
        t.push_back(r);
    }
    return cache.emplace(m, std::move(t)).first->second;
}

template <class F>
std::vector<typename F::Elem> times_var(const F& f, const std::vector<typename F::Elem>& v, int m, int var) {
    std::vector<typename F::Elem> out(static_cast<std::size_t>(forms_dim(m + 1)), f.zero());
    const auto& t = mul_table(m);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!f.is_zero(v[i])) out[t[i][var]] = v[i];
    return out;
}

// coefficients of (monomial of degree s) * g in degree s + deg g, as a column per monomial
template <class F>
std::vector<std::vector<typename F::Elem>> multiples(const HPoly<F>& g, int s) {
    const F& f = g.field();
    std::vector<std::vector<typename F::Elem>> out;
    for (auto& e : monomials(s)) {
        HPoly<F> p = HPoly<F>::monomial(f, e, f.one()) * g;
        if (p.is_zero()) p = HPoly<F>(f, s + g.degree());
        out.push_back(p.dense());
    }
    return out;
}

template <class F>
std::vector<typename F::Elem> monomial_values(const F& f, const Point<F>& p, int m) {
    std::vector<typename F::Elem> out;
    out.reserve(static_cast<std::size_t>(forms_dim(m)));
    std::vector<typename F::Elem> pw[3];
    for (int i = 0; i < 3; ++i) {
        pw[i].push_back(f.one());
        for (int k = 1; k <= m; ++k) pw[i].push_back(f.mul(pw[i].back(), p[i]));
    }
    for (auto& e : monomials(m)) out.push_back(f.mul(pw[0][e[0]], f.mul(pw[1][e[1]], pw[2][e[2]])));
    return out;
}

template <class F>
Mat<F> evaluation_matrix(const F& f, const std::vector<Point<F>>& pts, int m) {
    std::size_t nm = static_cast<std::size_t>(forms_dim(m));
    Mat<F> ev(f, pts.size(), nm);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto v = monomial_values(f, pts[i], m);
        for (std::size_t j = 0; j < nm; ++j) ev(i, j) = v[j];
    }
    return ev;
}

// ---------------------------------------------------------------------------
// A zero-dimensional subscheme, known either by its points or by ideal generators.

template <class F>
class Scheme {
public:
    using E = typename F::Elem;
    using Vec = std::vector<E>;

    static Scheme from_points(const PointConfig<F>& cfg) {
        check_points(cfg.field, cfg.points);
        Scheme s(cfg.field);
        s.points_ = cfg.points;
        s.label_ = cfg.label;
        return s;
    }

    static Scheme from_generators(const F& f, std::vector<HPoly<F>> gens, std::string label = "") {
        Scheme s(f);
        std::erase_if(gens, [](const HPoly<F>& g) { return g.is_zero(); });
        if (gens.empty()) throw PointsError("ideal with no nonzero generators");
        s.gens_ = std::move(gens);
        s.label_ = std::move(label);
        return s;
    }

    const F& field() const { return f_; }
    bool has_points() const { return points_.has_value(); }
    const std::vector<Point<F>>& points() const {
        if (!points_) throw PointsError("scheme is given by generators only");
        return *points_;
    }
    const std::string& label() const { return label_; }

    // basis of I_m, as a row span with unit pivots
    const RowSpan<F>& ideal(int m) const {
        if (m < 0) throw PointsError("negative degree");
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        RowSpan<F> span(f_, static_cast<std::size_t>(forms_dim(m)));
        if (points_) {
            auto rk = rank_kernel(evaluation_matrix(f_, *points_, m));
            for (auto& v : rk.kernel) span.insert(v);
        } else {
            if (m > 0)
                for (auto& r : ideal(m - 1).rows())
                    for (int v = 0; v < 3; ++v) span.insert(times_var(f_, r, m - 1, v));
            for (auto& g : gens_)
                if (g.degree() == m) span.insert(g.dense());
        }
        return cache_.emplace(m, std::move(span)).first->second;
    }

    long ideal_dim(int m) const { return static_cast<long>(ideal(m).dim()); }
    long hilbert(int m) const { return forms_dim(m) - ideal_dim(m); }

    // least m with HF(R/I)(m) = length
    int regularity_index() const {
        long n = length();
        for (int m = 0;; ++m)
            if (hilbert(m) == n) return m;
    }

    long length() const {
        if (points_) return static_cast<long>(points_->size());
        if (length_) return *length_;
        // Cohen-Macaulay of dimension one: HF(R/I) increases strictly until it stabilizes
        long prev = hilbert(0);
        for (int m = 1; m < 400; ++m) {
            long h = hilbert(m);
            if (h == prev) {
                length_ = h;
                return h;
            }
            if (h < prev) throw PointsError("Hilbert function decreased: not a zero-dimensional CM scheme");
            prev = h;
        }
        throw PointsError("Hilbert function did not stabilize");
    }

    Scheme transformed(const Mat<F>& g) const {
        Scheme s(f_);
        s.label_ = label_;
        if (points_) {
            std::vector<Point<F>> pts;
            for (auto& p : *points_) {
                Point<F> q{f_.zero(), f_.zero(), f_.zero()};
                for (int i = 0; i < 3; ++i)
                    for (int k = 0; k < 3; ++k) q[i] = f_.add(q[i], f_.mul(g(i, k), p[k]));
                pts.push_back(q);
            }
            s.points_ = pts;
        } else {
            // ideal of g(Z): substitute g^{-1}
            auto inv = solve_inverse(g);
            for (auto& p : gens_) s.gens_.push_back(PolyMatrix<F>::substitute_poly(p, [&](int i, int k) { return inv(i, k); }));
        }
        return s;
    }

    static void check_points(const F& f, const std::vector<Point<F>>& pts) {
        for (auto& p : pts)
            if (f.is_zero(p[0]) && f.is_zero(p[1]) && f.is_zero(p[2])) throw PointsError("zero triple in a point configuration");
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                auto& a = pts[i];
                auto& b = pts[j];
                bool same = true;
                for (int u = 0; u < 3 && same; ++u)
                    for (int v = u + 1; v < 3 && same; ++v)
                        if (!f.is_zero(f.sub(f.mul(a[u], b[v]), f.mul(a[v], b[u])))) same = false;
                if (same) throw PointsError("repeated point in a configuration");
            }
    }

private:
    explicit Scheme(const F& f) : f_(f) {}

    static Mat<F> solve_inverse(const Mat<F>& g) {
        const F& f = g.field();
        Mat<F> aug(f, 3, 6);
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < 3; ++k) aug(i, k) = g(i, k);
            aug(i, 3 + i) = f.one();
        }
        auto e = rref(aug);
        if (e.rank() != 3 || e.pivots[2] != 2) throw PointsError("coordinate change is not invertible");
        Mat<F> inv(f, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) inv(i, k) = e.r(i, 3 + k);
        return inv;
    }

    F f_;
    std::optional<std::vector<Point<F>>> points_;
    std::vector<HPoly<F>> gens_;
    std::string label_;
    mutable std::map<int, RowSpan<F>> cache_;
    mutable std::optional<long> length_;
};

// ---------------------------------------------------------------------------
// random configurations

template <class F>
typename F::Elem nonzero_random(const F& f, Rng& rng) {
    for (;;) {
        auto c = f.random(rng);
        if (!f.is_zero(c)) return c;
    }
}

template <class F>
Mat<F> random_invertible(const F& f, Rng& rng) {
    for (;;) {
        Mat<F> g(f, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) g(i, k) = f.random(rng);
        if (!f.is_zero(det(g))) return g;
    }
}

namespace detail {

template <class F>
bool is_new(const F& f, const std::vector<Point<F>>& pts, const Point<F>& p) {
    if (f.is_zero(p[0]) && f.is_zero(p[1]) && f.is_zero(p[2])) return false;
    std::vector<Point<F>> v{p};
    for (auto& q : pts) {
        v.push_back(q);
        try {
            Scheme<F>::check_points(f, v);
        } catch (const PointsError&) {
            return false;
        }
        v.pop_back();
    }
    return true;
}

// binary forms of degree deg in (s,t), one per coordinate
template <class F>
Point<F> curve_point(const F& f, const std::vector<std::vector<typename F::Elem>>& forms, typename F::Elem s, typename F::Elem t) {
    Point<F> p{f.zero(), f.zero(), f.zero()};
    int deg = static_cast<int>(forms[0].size()) - 1;
    for (int i = 0; i < 3; ++i) {
        for (int a = 0; a <= deg; ++a) {
            auto mon = f.one();
            for (int u = 0; u < deg - a; ++u) mon = f.mul(mon, s);
            for (int u = 0; u < a; ++u) mon = f.mul(mon, t);
            p[i] = f.add(p[i], f.mul(forms[i][a], mon));
        }
    }
    return p;
}

}  // namespace detail

template <class F>
PointConfig<F> generate_config(const F& f, const GenSpec& spec, long n, std::uint64_t seed) {
    if (n < 1) throw PointsError("generate_config: n must be positive");
    if (spec.k < 0 || spec.k > n) throw PointsError("generate_config: need 0 <= k <= n");
    Rng rng(seed);
    PointConfig<F> cfg{f, {}, spec.str(), seed};
    auto& pts = cfg.points;
    auto add = [&](const Point<F>& p) {
        if (!detail::is_new(f, pts, p)) return false;
        pts.push_back(p);
        return true;
    };
    long special = spec.kind == GenKind::general ? 0 : spec.k;
    if (special > 0) {
        int deg = spec.kind == GenKind::collinear ? 1 : spec.kind == GenKind::on_conic ? 2 : 3;
        std::vector<std::vector<typename F::Elem>> forms(3, std::vector<typename F::Elem>(deg + 1));
        for (;;) {
            for (auto& row : forms)
                for (auto& c : row) c = f.random(rng);
            if (deg == 1) {
                Mat<F> m(f, 2, 3);
                for (int i = 0; i < 3; ++i) {
                    m(0, i) = forms[i][0];
                    m(1, i) = forms[i][1];
                }
                if (rank(m) == 2) break;
            } else if (deg == 2) {
                Mat<F> m(f, 3, 3);
                for (int i = 0; i < 3; ++i)
                    for (int a = 0; a < 3; ++a) m(i, a) = forms[i][a];
                if (!f.is_zero(det(m))) break;  // smooth conic
            } else {
                Mat<F> m(f, 3, 4);
                for (int i = 0; i < 3; ++i)
                    for (int a = 0; a < 4; ++a) m(i, a) = forms[i][a];
                if (rank(m) == 3) break;  // plane rational cubic
            }
        }
        long guard = 0;
        while (static_cast<long>(pts.size()) < special) {
            if (++guard > 100000) throw PointsError("generate_config: could not find distinct curve points");
            add(detail::curve_point(f, forms, f.one(), f.random(rng)));
        }
    }
    long guard = 0;
    while (static_cast<long>(pts.size()) < n) {
        if (++guard > 100000) throw PointsError("generate_config: could not find distinct points");
        add(Point<F>{f.random(rng), f.random(rng), f.random(rng)});
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// Betti tables

struct BettiTable {
    std::map<int, long> beta1, beta2;  // degree j -> multiplicity of O(-j)

    GradedShape shape() const {
        std::vector<Term> s, t;
        for (auto& [j, m] : beta2) s.push_back({-j, m});
        for (auto& [j, m] : beta1) t.push_back({-j, m});
        return GradedShape(s, t);
    }
    std::string str() const { return shape().str(); }
};

// throws PointsError unless every table invariant holds
void check_betti(const BettiTable& b, long n, const std::vector<long>& ideal_dims);

template <class F>
BettiTable betti_table(const Scheme<F>& z) {
    long n = z.length();
    int r0 = z.regularity_index();
    int jmax = r0 + 2;
    BettiTable b;
    auto hf = [&](int m) { return m < 0 ? 0L : z.ideal_dim(m); };
    for (int j = 0; j <= jmax + 1; ++j) {
        long prod = 0;
        if (j > 0) {
            const auto& prev = z.ideal(j - 1);
            RowSpan<F> span(z.field(), static_cast<std::size_t>(forms_dim(j)));
            for (auto& r : prev.rows())
                for (int v = 0; v < 3; ++v) span.insert(times_var(z.field(), r, j - 1, v));
            prod = static_cast<long>(span.dim());
        }
        long b1 = hf(j) - prod;
        long c = hf(j) - 3 * hf(j - 1) + 3 * hf(j - 2) - hf(j - 3);
        long b2 = b1 - c;
        if (b1 < 0 || b2 < 0) throw PointsError("inconsistent Hilbert data in degree " + std::to_string(j));
        if (b1) b.beta1[j] = b1;
        if (b2) b.beta2[j] = b2;
    }
    std::vector<long> dims;
    for (int m = 0; m <= jmax + 2; ++m) dims.push_back(hf(m));
    check_betti(b, n, dims);
    return b;
}

// ---------------------------------------------------------------------------
// syzygy matrix: rows = minimal generators, columns = minimal syzygies

template <class F>
struct MinimalGenerators {
    std::vector<int> degrees;
    std::vector<HPoly<F>> gens;
};

template <class F>
MinimalGenerators<F> minimal_generators(const Scheme<F>& z) {
    const F& f = z.field();
    int top = z.regularity_index() + 1;
    MinimalGenerators<F> out;
    for (int j = 1; j <= top; ++j) {
        RowSpan<F> span(f, static_cast<std::size_t>(forms_dim(j)));
        for (auto& r : z.ideal(j - 1).rows())
            for (int v = 0; v < 3; ++v) span.insert(times_var(f, r, j - 1, v));
        for (auto& r : z.ideal(j).rows())
            if (span.insert(r)) {
                out.degrees.push_back(j);
                out.gens.push_back(HPoly<F>::from_dense(f, j, r));
            }
    }
    return out;
}

template <class F>
PolyMatrix<F> syzygy_matrix(const Scheme<F>& z) {
    using E = typename F::Elem;
    const F& f = z.field();
    auto mg = minimal_generators(z);
    BettiTable b = betti_table(z);
    std::size_t g = mg.gens.size();
    int emin = *std::min_element(mg.degrees.begin(), mg.degrees.end()) + 1;
    int emax = b.beta2.empty() ? emin - 1 : b.beta2.rbegin()->first;

    // layout of (+)_i R_{e - a_i}
    auto offsets = [&](int e) {
        std::vector<std::size_t> off(g + 1, 0);
        for (std::size_t i = 0; i < g; ++i) off[i + 1] = off[i] + static_cast<std::size_t>(forms_dim(e - mg.degrees[i]));
        return off;
    };
    std::vector<std::vector<E>> prev_syz;
    std::vector<int> col_twists;
    std::vector<std::vector<E>> cols;
    for (int e = emin; e <= emax; ++e) {
        auto off = offsets(e);
        std::size_t width = off[g];
        Mat<F> m(f, static_cast<std::size_t>(forms_dim(e)), width);
        for (std::size_t i = 0; i < g; ++i) {
            int s = e - mg.degrees[i];
            if (s < 0) continue;
            auto mults = multiples(mg.gens[i], s);
            for (std::size_t c = 0; c < mults.size(); ++c)
                for (std::size_t r = 0; r < mults[c].size(); ++r) m(r, off[i] + c) = mults[c][r];
        }
        auto syz = rank_kernel(m).kernel;
        RowSpan<F> span(f, width);
        auto poff = offsets(e - 1);
        for (auto& s : prev_syz)
            for (int v = 0; v < 3; ++v) {
                std::vector<E> w(width, f.zero());
                for (std::size_t i = 0; i < g; ++i) {
                    int deg = e - 1 - mg.degrees[i];
                    if (deg < 0) continue;
                    std::vector<E> part(s.begin() + static_cast<long>(poff[i]), s.begin() + static_cast<long>(poff[i + 1]));
                    auto up = times_var(f, part, deg, v);
                    std::copy(up.begin(), up.end(), w.begin() + static_cast<long>(off[i]));
                }
                span.insert(w);
            }
        long found = 0;
        for (auto& s : syz)
            if (span.insert(s)) {
                cols.push_back(s);
                col_twists.push_back(e);
                ++found;
            }
        long expect = b.beta2.count(e) ? b.beta2.at(e) : 0;
        if (found != expect)
            throw PointsError("syzygy count " + std::to_string(found) + " != Betti number " + std::to_string(expect) + " in degree " +
                              std::to_string(e));
        prev_syz = std::move(syz);
    }
    PolyMatrix<F> pm(f, mg.degrees, col_twists);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto off = offsets(col_twists[j]);
        for (std::size_t i = 0; i < g; ++i) {
            int deg = col_twists[j] - mg.degrees[i];
            if (deg < 0) continue;
            std::vector<E> part(cols[j].begin() + static_cast<long>(off[i]), cols[j].begin() + static_cast<long>(off[i + 1]));
            pm.set(i, j, HPoly<F>::from_dense(f, deg, part));
        }
    }
    if (!pm.is_minimal()) throw PointsError("syzygy matrix is not minimal");
    return pm;
}

// ---------------------------------------------------------------------------
// Hilbert-Burch

// random minimal matrix with the twists of a Betti shape: rows = targets, columns = sources
template <class F>
PolyMatrix<F> hilbert_burch_matrix(const F& f, const GradedShape& shape, Rng& rng) {
    std::vector<int> rows, cols;
    for (auto& t : shape.targets)
        for (long k = 0; k < t.mult; ++k) rows.push_back(static_cast<int>(-t.twist));
    for (auto& s : shape.sources)
        for (long k = 0; k < s.mult; ++k) cols.push_back(static_cast<int>(-s.twist));
    return PolyMatrix<F>::random(f, rows, cols, rng).stripped();
}

template <class F>
std::vector<HPoly<F>> hilbert_burch_ideal(const PolyMatrix<F>& pm) {
    if (pm.cols() < 1 || pm.rows() != pm.cols() + 1) throw PointsError("Hilbert-Burch matrix must be (m+1) x m");
    auto minors = maximal_minors(pm.stripped());
    bool any = false;
    for (auto& p : minors) any = any || !p.is_zero();
    if (!any) throw PointsError("all maximal minors vanish");
    return minors;
}

template <class F>
Scheme<F> scheme_from_hilbert_burch(const PolyMatrix<F>& pm, std::string label = "hilbert-burch") {
    return Scheme<F>::from_generators(pm.field(), hilbert_burch_ideal(pm), std::move(label));
}

// ---------------------------------------------------------------------------
// admissibility detectors

template <class F>
struct Detection {
    std::string detector;
    std::string verdict;  // e.g. "T(-4)-admissible"
    bool special = false; // the degenerate alternative fired
    long rank = 0;
    Mat<F> witness;       // coefficient block the rank was read from
};

// coefficient block of the linear entries between rows of twist a and columns of twist a+1;
// one row per matrix row, three coefficients per column
template <class F>
Mat<F> linear_block(const PolyMatrix<F>& pm, int a, bool by_rows) {
    const F& f = pm.field();
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 0; i < pm.rows(); ++i)
        if (pm.row_twists()[i] == a) rs.push_back(i);
    for (std::size_t j = 0; j < pm.cols(); ++j)
        if (pm.col_twists()[j] == a + 1) cs.push_back(j);
    if (rs.empty() || cs.empty()) throw PointsError("no linear block between twists " + std::to_string(a) + " and " + std::to_string(a + 1));
    auto coeff = [&](std::size_t i, std::size_t j, int v) {
        Exp e{0, 0, 0};
        e[v] = 1;
        return pm.at(i, j).coeff(e);
    };
    if (by_rows) {
        Mat<F> m(f, rs.size(), 3 * cs.size());
        for (std::size_t r = 0; r < rs.size(); ++r)
            for (std::size_t c = 0; c < cs.size(); ++c)
                for (int v = 0; v < 3; ++v) m(r, 3 * c + v) = coeff(rs[r], cs[c], v);
        return m;
    }
    Mat<F> m(f, cs.size(), 3 * rs.size());
    for (std::size_t c = 0; c < cs.size(); ++c)
        for (std::size_t r = 0; r < rs.size(); ++r)
            for (int v = 0; v < 3; ++v) m(c, 3 * r + v) = coeff(rs[r], cs[c], v);
    return m;
}

template <class F>
Detection<F> rank_detector(const PolyMatrix<F>& pm, const std::string& id, int a, bool by_rows, const std::string& full,
                           const std::string& deficient) {
    Mat<F> blk = linear_block(pm, a, by_rows);
    long r = static_cast<long>(rank(blk));
    bool def = r < static_cast<long>(blk.rows());
    return {id, def ? deficient : full, def, r, blk};
}

const std::vector<std::string>& detector_ids();

// expected shape for a detector, as (n, Betti table) with Betti table given by its shape
GradedShape detector_shape(const std::string& id);

template <class F>
Detection<F> detect_admissible(const PolyMatrix<F>& pm, const std::string& id) {
    GradedShape want = detector_shape(id);
    BettiTable b;
    for (int r : pm.row_twists()) b.beta1[r]++;
    for (int c : pm.col_twists()) b.beta2[c]++;
    if (!(b.shape() == want)) throw PointsError("detector " + id + " expects " + want.str() + ", matrix has " + b.str());
    if (id == "n7-G") return rank_detector(pm, id, 3, true, "T(-4)-admissible", "I_1(-2)-admissible");
    if (id == "n8-G") return rank_detector(pm, id, 4, false, "not I_4(-1)-admissible", "I_4(-1)-admissible");
    if (id == "n12-G1-l123") return rank_detector(pm, id, 4, true, "not I_1(-3)-admissible", "I_1(-3)-admissible");
    if (id == "n12-G1-l45") return rank_detector(pm, id, 5, false, "not I_7(-1)-admissible", "I_7(-1)-admissible");
    throw PointsError("unknown detector: " + id);
}

// Exhaustive search for rows R and columns C with the twists of F = (sources -> targets) such that
// every entry outside R in a column of C vanishes.  Literal zero pattern only: no row or column reduction.
template <class F>
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> zero_block_search(const PolyMatrix<F>& pm,
                                                                                                 const GradedShape& sub,
                                                                                                 std::size_t max_subsets = 1u << 20) {
    std::vector<int> want_rows, want_cols;
    for (auto& t : sub.targets)
        for (long k = 0; k < t.mult; ++k) want_rows.push_back(static_cast<int>(-t.twist));
    for (auto& s : sub.sources)
        for (long k = 0; k < s.mult; ++k) want_cols.push_back(static_cast<int>(-s.twist));
    auto subsets = [](const std::vector<int>& twists, std::vector<int> want) {
        std::vector<std::vector<std::size_t>> out;
        std::sort(want.begin(), want.end());
        std::size_t n = twists.size();
        if (n > 20) throw PointsError("zero_block_search: matrix too large");
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            std::vector<int> got;
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1UL) {
                    got.push_back(twists[i]);
                    idx.push_back(i);
                }
            std::sort(got.begin(), got.end());
            if (got == want) out.push_back(idx);
        }
        return out;
    };
    auto rsets = subsets(pm.row_twists(), want_rows);
    auto csets = subsets(pm.col_twists(), want_cols);
    if (rsets.size() * std::max<std::size_t>(csets.size(), 1) > max_subsets) throw PointsError("zero_block_search: search bound exceeded");
    for (auto& rs : rsets)
        for (auto& cs : csets) {
            bool ok = true;
            for (std::size_t i = 0; i < pm.rows() && ok; ++i) {
                if (std::find(rs.begin(), rs.end(), i) != rs.end()) continue;
                for (auto j : cs)
                    if (!pm.at(i, j).is_zero()) {
                        ok = false;
                        break;
                    }
            }
            if (ok) return std::make_pair(rs, cs);
        }
    return std::nullopt;
}

// detectors applicable to a scheme with the given length and Betti shape
std::vector<std::string> applicable_detectors(long n, const GradedShape& betti);

}  // namespace psh
