#pragma once

#include "psh/chern.hpp"
#include "psh/gaeta.hpp"
#include "psh/points.hpp"

#include <string>
#include <vector>

namespace psh {

struct InterpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// M = coker(phi : (+) O(a_i) -> (+) O(b_j)).  Stored with the PolyMatrix twist convention:
// row twists -b_j, column twists -a_i, entry (j, i) of degree b_j - a_i.
template <class F>
class CokerBundle {
public:
    CokerBundle(PolyMatrix<F> phi, std::string name = "") : phi_(std::move(phi)), name_(std::move(name)) {
        if (phi_.rows() <= phi_.cols()) throw InterpError("cokernel bundle needs more targets than sources");
        for (int c : phi_.col_twists())
            if (-c < -2) throw InterpError("source twist " + std::to_string(-c) + " below -2");
        if (!phi_.degree_compatible()) throw InterpError("presentation entries do not match their twists");
    }

    const PolyMatrix<F>& phi() const { return phi_; }
    const F& field() const { return phi_.field(); }
    std::size_t p() const { return phi_.cols(); }
    std::size_t q() const { return phi_.rows(); }
    int a(std::size_t i) const { return -phi_.col_twists()[i]; }
    int b(std::size_t j) const { return -phi_.row_twists()[j]; }
    long rank() const { return static_cast<long>(q() - p()); }
    const std::string& name() const { return name_; }

    GradedShape shape() const {
        std::vector<Term> s, t;
        for (std::size_t i = 0; i < p(); ++i) s.push_back({a(i), 1});
        for (std::size_t j = 0; j < q(); ++j) t.push_back({b(j), 1});
        return GradedShape(s, t);
    }
    Ch cls() const { return shape().ch(); }

    CokerBundle transformed(const Mat<F>& g_inv) const {
        return CokerBundle(phi_.substitute([&](int i, int k) { return g_inv(i, k); }), name_);
    }

    static CokerBundle random(const F& f, const GradedShape& sh, Rng& rng, std::string name = "") {
        std::vector<int> rows, cols;
        for (auto& t : sh.targets)
            for (long k = 0; k < t.mult; ++k) rows.push_back(static_cast<int>(-t.twist));
        for (auto& s : sh.sources)
            for (long k = 0; k < s.mult; ++k) cols.push_back(static_cast<int>(-s.twist));
        return CokerBundle(PolyMatrix<F>::random(f, rows, cols, rng), std::move(name));
    }

private:
    PolyMatrix<F> phi_;
    std::string name_;
};

namespace detail {

// rank of phi on global sections: (+) R_{a_i} -> (+) R_{b_j}
template <class F>
long global_phi_rank(const CokerBundle<F>& m) {
    const F& f = m.field();
    std::vector<std::size_t> roff(m.q() + 1, 0);
    for (std::size_t j = 0; j < m.q(); ++j) roff[j + 1] = roff[j] + static_cast<std::size_t>(forms_dim(m.b(j)));
    std::vector<std::vector<typename F::Elem>> cols;
    for (std::size_t i = 0; i < m.p(); ++i) {
        if (m.a(i) < 0) continue;
        for (auto& e : monomials(m.a(i))) {
            std::vector<typename F::Elem> col(roff[m.q()], f.zero());
            HPoly<F> mono = HPoly<F>::monomial(f, e, f.one());
            for (std::size_t j = 0; j < m.q(); ++j) {
                const auto& entry = m.phi().at(j, i);
                if (entry.is_zero()) continue;
                auto v = (mono * entry).dense();
                std::copy(v.begin(), v.end(), col.begin() + static_cast<long>(roff[j]));
            }
            cols.push_back(std::move(col));
        }
    }
    if (cols.empty()) return 0;
    return static_cast<long>(rank(Mat<F>::from_rows(f, cols, roff[m.q()])));
}

template <class F>
long section_dim(const CokerBundle<F>& m) {
    long total = 0;
    for (std::size_t j = 0; j < m.q(); ++j) total += m.b(j) >= 0 ? forms_dim(m.b(j)) : 0;
    return total;
}

// Points model.  Unknowns: coefficients c of s in (+) R_{b_j}, and u_z in k^p for each point z;
// equations s(z) = phi(z) u_z.
template <class F>
long h0_points(const CokerBundle<F>& m, const std::vector<Point<F>>& pts) {
    const F& f = m.field();
    std::size_t p = m.p(), q = m.q();
    std::vector<std::size_t> coff(q + 1, 0);
    for (std::size_t j = 0; j < q; ++j) coff[j + 1] = coff[j] + static_cast<std::size_t>(m.b(j) >= 0 ? forms_dim(m.b(j)) : 0);
    std::size_t nc = coff[q], nu = p * pts.size();
    Mat<F> a(f, q * pts.size(), nc + nu);
    Mat<F> au(f, q * pts.size(), nu);
    for (std::size_t z = 0; z < pts.size(); ++z)
        for (std::size_t j = 0; j < q; ++j) {
            std::size_t row = z * q + j;
            if (m.b(j) >= 0) {
                auto vals = monomial_values(f, pts[z], m.b(j));
                for (std::size_t k = 0; k < vals.size(); ++k) a(row, coff[j] + k) = vals[k];
            }
            for (std::size_t i = 0; i < p; ++i) {
                auto v = f.neg(m.phi().at(j, i).is_zero() ? f.zero() : m.phi().at(j, i).evaluate(pts[z]));
                a(row, nc + z * p + i) = v;
                au(row, z * p + i) = v;
            }
        }
    long proj = static_cast<long>(nc) - static_cast<long>(rank(a)) + static_cast<long>(rank(au));
    return proj - global_phi_rank(m);
}

// Ideal model.  Work in M (x) O_Z twisted by l^t for a general linear form l not meeting Z,
// with t large enough that every twist of O_Z involved is represented by (R/I) in that degree.
template <class F>
long h0_ideal(const CokerBundle<F>& m, const Scheme<F>& z, Rng& rng) {
    const F& f = m.field();
    using E = typename F::Elem;
    long n = z.length();
    int r0 = z.regularity_index();
    int lo = m.b(0);
    for (std::size_t j = 0; j < m.q(); ++j) lo = std::min(lo, m.b(j));
    for (std::size_t i = 0; i < m.p(); ++i) lo = std::min(lo, m.a(i));
    int t = std::max(0, r0 - lo);

    // normal form coordinates in (R/I)_e: the non-pivot columns of I_e
    std::map<int, std::vector<std::size_t>> std_cols;
    auto standard = [&](int e) -> const std::vector<std::size_t>& {
        auto it = std_cols.find(e);
        if (it != std_cols.end()) return it->second;
        const auto& span = z.ideal(e);
        std::vector<bool> piv(static_cast<std::size_t>(forms_dim(e)), false);
        for (auto c : span.pivots()) piv[c] = true;
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < piv.size(); ++c)
            if (!piv[c]) out.push_back(c);
        if (static_cast<long>(out.size()) != n) throw InterpError("degree " + std::to_string(e) + " is below the regularity index");
        return std_cols.emplace(e, std::move(out)).first->second;
    };
    auto nf = [&](const HPoly<F>& g, int e) {
        std::vector<E> v = g.is_zero() ? std::vector<E>(static_cast<std::size_t>(forms_dim(e)), f.zero()) : g.dense();
        v = z.ideal(e).reduce(std::move(v));
        std::vector<E> out;
        for (auto c : standard(e)) out.push_back(v[c]);
        return out;
    };

    HPoly<F> lt;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 50) throw InterpError("no linear form avoiding the scheme found");
        HPoly<F> l = HPoly<F>::random(f, 1, rng);
        if (l.is_zero()) continue;
        // l must act injectively on (R/I)_{r0}
        std::vector<std::vector<E>> rows;
        for (auto c : standard(r0)) {
            Exp e = monomials(r0)[c];
            rows.push_back(nf(HPoly<F>::monomial(f, e, f.one()) * l, r0 + 1));
        }
        if (static_cast<long>(rank(Mat<F>::from_rows(f, rows, static_cast<std::size_t>(n)))) == n) {
            lt = l.pow(t);
            break;
        }
    }

    std::size_t p = m.p(), q = m.q(), un = static_cast<std::size_t>(n);
    std::vector<std::size_t> coff(q + 1, 0);
    for (std::size_t j = 0; j < q; ++j) coff[j + 1] = coff[j] + static_cast<std::size_t>(m.b(j) >= 0 ? forms_dim(m.b(j)) : 0);
    std::size_t nc = coff[q], nu = p * un;
    Mat<F> a(f, q * un, nc + nu);
    Mat<F> au(f, q * un, nu);
    std::map<int, std::vector<std::vector<E>>> lt_cache;
    for (std::size_t j = 0; j < q; ++j) {
        int bj = m.b(j);
        if (bj < 0) continue;
        auto& cols = lt_cache[bj];
        if (cols.empty())
            for (auto& e : monomials(bj)) cols.push_back(nf(HPoly<F>::monomial(f, e, f.one()) * lt, bj + t));
        for (std::size_t k = 0; k < cols.size(); ++k)
            for (std::size_t r = 0; r < un; ++r) a(j * un + r, coff[j] + k) = cols[k][r];
    }
    for (std::size_t i = 0; i < p; ++i) {
        int ai = m.a(i) + t;
        const auto& sc = standard(ai);
        auto mons = monomials(ai);
        for (std::size_t s = 0; s < un; ++s) {
            HPoly<F> sigma = HPoly<F>::monomial(f, mons[sc[s]], f.one());
            for (std::size_t j = 0; j < q; ++j) {
                const auto& entry = m.phi().at(j, i);
                if (entry.is_zero()) continue;
                auto v = nf(entry * sigma, m.b(j) + t);
                for (std::size_t r = 0; r < un; ++r) {
                    auto x = f.neg(v[r]);
                    a(j * un + r, nc + i * un + s) = x;
                    au(j * un + r, i * un + s) = x;
                }
            }
        }
    }
    long proj = static_cast<long>(nc) - static_cast<long>(rank(a)) + static_cast<long>(rank(au));
    return proj - global_phi_rank(m);
}

}  // namespace detail

// h^0(M (x) I_Z).  Over a prime field this is the value at one seeded instance; a zero certifies
// vanishing for the general member of the family.
template <class F>
long h0_twisted(const CokerBundle<F>& m, const Scheme<F>& z, std::uint64_t seed = 0) {
    z.field().check_same(m.field());
    if (z.has_points()) return detail::h0_points(m, z.points());
    Rng rng(seed);
    return detail::h0_ideal(m, z, rng);
}

template <class F>
long h0_bundle(const CokerBundle<F>& m) {
    return detail::h0_points(m, {});
}

// Euler presentation of T(k): O(k) -> O(k+1)^3 by (x, y, z)
template <class F>
CokerBundle<F> tangent_bundle(const F& f, int k) {
    PolyMatrix<F> phi(f, {-(k + 1), -(k + 1), -(k + 1)}, {-k});
    for (int v = 0; v < 3; ++v) phi.set(static_cast<std::size_t>(v), 0, HPoly<F>::var(f, v));
    return CokerBundle<F>(phi, "T(" + std::to_string(k) + ")");
}

template <class F>
CokerBundle<F> line_bundle(const F& f, int k) {
    PolyMatrix<F> phi(f, {-k}, {});
    return CokerBundle<F>(phi, "O(" + std::to_string(k) + ")");
}

template <class F>
long tangent_section_count(const Scheme<F>& z, int d, std::uint64_t seed = 0) {
    return h0_twisted(tangent_bundle(z.field(), 2 * d - 2), z, seed);
}

// 0 -> O(d-3)^{kd} -> O(d-2)^{k(2d-1)} -> M -> 0
inline GradedShape triangular_interp_shape(long d, long k) { return GradedShape({{d - 3, k * d}}, {{d - 2, k * (2 * d - 1)}}); }
// 0 -> O(2d-3)^{kd} -> O(2d-1)^{k(5d-1)} -> M -> 0
inline GradedShape tangential_interp_shape(long d, long k) {
    return GradedShape({{2 * d - 3, k * d}}, {{2 * d - 1, k * (5 * d - 1)}});
}

template <class F>
CokerBundle<F> triangular_interp(const F& f, long d, long k, Rng& rng) {
    return CokerBundle<F>::random(f, triangular_interp_shape(d, k), rng, "M");
}

// For k = 1 and 2 <= d <= 5 the structured form: column j < d-1 carries the six quadric monomials
// in rows 6j..6j+5, the last column random quadrics.
template <class F>
CokerBundle<F> tangential_interp(const F& f, long d, long k, Rng& rng, bool structured = false) {
    if (!structured) return CokerBundle<F>::random(f, tangential_interp_shape(d, k), rng, "M");
    if (k != 1 || d < 2 || d > 5) throw InterpError("structured tangential presentation needs k = 1, 2 <= d <= 5");
    std::size_t rows = static_cast<std::size_t>(5 * d - 1), cols = static_cast<std::size_t>(d);
    PolyMatrix<F> phi(f, std::vector<int>(rows, static_cast<int>(-(2 * d - 1))), std::vector<int>(cols, static_cast<int>(-(2 * d - 3))));
    auto quad = monomials(2);
    for (std::size_t i = 0; i < rows; ++i) {
        phi.set(i, cols - 1, HPoly<F>::random(f, 2, rng));
        std::size_t j = i / 6;
        if (j < cols - 1) phi.set(i, j, HPoly<F>::monomial(f, quad[i - 6 * j], f.one()));
    }
    return CokerBundle<F>(phi, "M");
}

// Resolution with O(-2d-2)^d + O(-2d-1)^k -> O(-2d-1)^k + O(-2d)^{d+1}
inline GradedShape qk_shape(long d, long k) {
    return GradedShape({{-2 * d - 2, d}, {-2 * d - 1, k}}, {{-2 * d - 1, k}, {-2 * d, d + 1}});
}
// O(-4d+1) + O(-2d-1) -> O(-2d)^3, the zero scheme of a tangent-field section
inline GradedShape gamma_shape(long d) { return GradedShape({{-4 * d + 1, 1}, {-2 * d - 1, 1}}, {{-2 * d, 3}}); }

enum class Orthogonality { orthogonal, fails_h0, chi_nonzero, h2_uncertified };

struct OrthoVerdict {
    Orthogonality kind;
    Rational chi;
    long h0 = 0;
    std::string str() const;
};

Rational chi_twisted(const Ch& m, long n);

template <class F>
OrthoVerdict check_orthogonal(const CokerBundle<F>& m, const Scheme<F>& z, std::uint64_t seed = 0) {
    Rational chi = chi_twisted(m.cls(), z.length());
    if (sgn(chi) != 0) return {Orthogonality::chi_nonzero, chi, 0};
    long h0 = h0_twisted(m, z, seed);
    if (h0 != 0) return {Orthogonality::fails_h0, chi, h0};
    for (std::size_t j = 0; j < m.q(); ++j)
        if (m.b(j) < -2) return {Orthogonality::h2_uncertified, chi, h0};
    return {Orthogonality::orthogonal, chi, h0};
}

}  // namespace psh
