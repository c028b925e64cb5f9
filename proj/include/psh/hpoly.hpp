#pragma once

#include "psh/field.hpp"
#include "psh/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace psh {

using Exp = std::array<int, 3>;

// Monomials of degree m ordered x^m, x^(m-1)y, x^(m-1)z, x^(m-2)y^2, ...
inline std::size_t mono_index(const Exp& e) {
    int m = e[0] + e[1] + e[2];
    int s = m - e[0];
    return static_cast<std::size_t>(s * (s + 1) / 2 + (s - e[1]));
}

inline std::vector<Exp> monomials(int m) {
    std::vector<Exp> out;
    if (m < 0) return out;
    for (int a = m; a >= 0; --a)
        for (int b = m - a; b >= 0; --b) out.push_back({a, b, m - a - b});
    return out;
}

struct ExpOrder {
    bool operator()(const Exp& u, const Exp& v) const {
        if (u[0] != v[0]) return u[0] > v[0];
        return u[1] > v[1];
    }
};

template <class F>
class HPoly {
public:
    using E = typename F::Elem;
    using Terms = std::map<Exp, E, ExpOrder>;

    HPoly() = default;
    HPoly(const F& f, int degree) : f_(f), deg_(degree) {}

    static HPoly monomial(const F& f, const Exp& e, const E& c) {
        HPoly p(f, e[0] + e[1] + e[2]);
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("negative exponent");
        if (!f.is_zero(c)) p.t_[e] = c;
        return p;
    }
    static HPoly var(const F& f, int i) {
        Exp e{0, 0, 0};
        e[i] = 1;
        return monomial(f, e, f.one());
    }
    static HPoly from_dense(const F& f, int degree, const std::vector<E>& v) {
        HPoly p(f, degree);
        auto ms = monomials(degree);
        if (v.size() != ms.size()) throw std::invalid_argument("dense vector has wrong length");
        for (std::size_t i = 0; i < ms.size(); ++i)
            if (!f.is_zero(v[i])) p.t_[ms[i]] = v[i];
        return p;
    }
    static HPoly random(const F& f, int degree, Rng& rng) {
        HPoly p(f, degree);
        for (auto& e : monomials(degree)) {
            auto c = f.random(rng);
            if (!f.is_zero(c)) p.t_[e] = c;
        }
        return p;
    }

    const F& field() const { return f_; }
    int degree() const { return deg_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    E coeff(const Exp& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? f_.zero() : it->second;
    }
    void set(const Exp& e, const E& c) {
        if (e[0] + e[1] + e[2] != deg_) throw std::invalid_argument("monomial degree mismatch");
        if (f_.is_zero(c))
            t_.erase(e);
        else
            t_[e] = c;
    }

    std::vector<E> dense() const {
        std::vector<E> v(static_cast<std::size_t>(forms_dim(deg_)), f_.zero());
        for (auto& [e, c] : t_) v[mono_index(e)] = c;
        return v;
    }

    HPoly operator+(const HPoly& o) const { return combine(o, false); }
    HPoly operator-(const HPoly& o) const { return combine(o, true); }
    HPoly operator*(const HPoly& o) const {
        f_.check_same(o.f_);
        HPoly r(f_, deg_ + o.deg_);
        for (auto& [e1, c1] : t_)
            for (auto& [e2, c2] : o.t_) {
                Exp e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
                auto& slot = r.t_.try_emplace(e, f_.zero()).first->second;
                slot = f_.add(slot, f_.mul(c1, c2));
            }
        r.prune();
        return r;
    }
    HPoly scaled(const E& s) const {
        HPoly r(f_, deg_);
        if (f_.is_zero(s)) return r;
        for (auto& [e, c] : t_) r.t_[e] = f_.mul(c, s);
        return r;
    }
    HPoly pow(int k) const {
        HPoly r = monomial(f_, {0, 0, 0}, f_.one());
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    E evaluate(const std::array<E, 3>& pt) const {
        if (f_.is_zero(pt[0]) && f_.is_zero(pt[1]) && f_.is_zero(pt[2]))
            throw std::invalid_argument("evaluate at the zero point");
        E s = f_.zero();
        for (auto& [e, c] : t_) {
            E v = c;
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < e[i]; ++k) v = f_.mul(v, pt[i]);
            s = f_.add(s, v);
        }
        return s;
    }

    bool operator==(const HPoly& o) const { return deg_ == o.deg_ && t_ == o.t_; }

    std::string str() const {
        if (t_.empty()) return "0";
        static const char* names = "xyz";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : t_) {
            if (!first) os << " + ";
            first = false;
            bool unit = c == f_.one();
            bool constant = e[0] + e[1] + e[2] == 0;
            if (!unit || constant) os << f_.str(c);
            bool need_star = !unit || constant;
            for (int i = 0; i < 3; ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                os << names[i];
                if (e[i] > 1) os << "^" << e[i];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    HPoly combine(const HPoly& o, bool subtract) const {
        f_.check_same(o.f_);
        if (deg_ != o.deg_ && !t_.empty() && !o.t_.empty()) throw std::invalid_argument("adding forms of different degree");
        HPoly r = t_.empty() ? HPoly(f_, o.deg_) : *this;
        for (auto& [e, c] : o.t_) {
            auto& slot = r.t_.try_emplace(e, f_.zero()).first->second;
            slot = subtract ? f_.sub(slot, c) : f_.add(slot, c);
        }
        r.prune();
        return r;
    }
    void prune() {
        for (auto it = t_.begin(); it != t_.end();) {
            if (f_.is_zero(it->second))
                it = t_.erase(it);
            else
                ++it;
        }
    }

    F f_{};
    int deg_ = 0;
    Terms t_;
};

// Map  (+)_j O(-col_twists[j])  ->  (+)_i O(-row_twists[i]);
// entry (i,j) is a form of degree col_twists[j] - row_twists[i].
template <class F>
class PolyMatrix {
public:
    using P = HPoly<F>;

    PolyMatrix() = default;
    PolyMatrix(const F& f, std::vector<int> row_twists, std::vector<int> col_twists)
        : f_(f), rt_(std::move(row_twists)), ct_(std::move(col_twists)) {
        for (std::size_t i = 0; i < rt_.size(); ++i)
            for (std::size_t j = 0; j < ct_.size(); ++j) e_.emplace_back(f_, ct_[j] - rt_[i]);
    }

    static PolyMatrix random(const F& f, std::vector<int> row_twists, std::vector<int> col_twists, Rng& rng) {
        PolyMatrix m(f, std::move(row_twists), std::move(col_twists));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                int d = m.entry_degree(i, j);
                if (d >= 0) m.at(i, j) = P::random(f, d, rng);
            }
        return m;
    }

    const F& field() const { return f_; }
    std::size_t rows() const { return rt_.size(); }
    std::size_t cols() const { return ct_.size(); }
    const std::vector<int>& row_twists() const { return rt_; }
    const std::vector<int>& col_twists() const { return ct_; }
    int entry_degree(std::size_t i, std::size_t j) const { return ct_[j] - rt_[i]; }

    const P& at(std::size_t i, std::size_t j) const { return e_[i * ct_.size() + j]; }
    P& at(std::size_t i, std::size_t j) { return e_[i * ct_.size() + j]; }

    void set(std::size_t i, std::size_t j, const P& p) {
        if (!p.is_zero() && p.degree() != entry_degree(i, j))
            throw std::invalid_argument("entry degree does not match twists");
        at(i, j) = p.is_zero() ? P(f_, entry_degree(i, j)) : p;
    }

    bool degree_compatible() const {
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) {
                const P& p = at(i, j);
                if (!p.is_zero() && (p.degree() != entry_degree(i, j) || p.degree() < 0)) return false;
            }
        return true;
    }

    bool is_minimal() const {
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                if (entry_degree(i, j) == 0 && !at(i, j).is_zero()) return false;
        return true;
    }

    // zero every constant entry
    PolyMatrix stripped() const {
        PolyMatrix m = *this;
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                if (entry_degree(i, j) == 0) m.at(i, j) = P(f_, 0);
        return m;
    }

    // Apply a linear change of coordinates x_i -> sum_k g(i,k) x_k to every entry.
    template <class G>
    PolyMatrix substitute(const G& g) const {
        PolyMatrix m(f_, rt_, ct_);
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) m.at(i, j) = substitute_poly(at(i, j), g);
        return m;
    }

    template <class G>
    static P substitute_poly(const P& p, const G& g) {
        const F& f = p.field();
        P lin[3];
        for (int i = 0; i < 3; ++i) {
            lin[i] = P(f, 1);
            for (int k = 0; k < 3; ++k) {
                Exp e{0, 0, 0};
                e[k] = 1;
                lin[i].set(e, g(i, k));
            }
        }
        P out(f, p.degree());
        for (auto& [e, c] : p.terms()) {
            P t = P::monomial(f, {0, 0, 0}, c);
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * lin[i];
            out = out + t;
        }
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows(); ++i) {
            os << "[";
            for (std::size_t j = 0; j < cols(); ++j) os << (j ? ", " : "") << at(i, j).str();
            os << "]\n";
        }
        return os.str();
    }

private:
    F f_{};
    std::vector<int> rt_, ct_;
    std::vector<P> e_;
};

// Signed maximal minors of an (m+1) x m matrix: minor i deletes row i and carries (-1)^i.
template <class F>
std::vector<HPoly<F>> maximal_minors(const PolyMatrix<F>& pm) {
    using P = HPoly<F>;
    const F& f = pm.field();
    std::size_t m = pm.cols();
    if (m < 1 || pm.rows() != m + 1) throw std::invalid_argument("maximal_minors needs an (m+1) x m matrix with m >= 1");
    if (m > 24) throw std::invalid_argument("maximal_minors: matrix too large");
    if (!pm.degree_compatible()) throw std::invalid_argument("maximal_minors: degree-incompatible entries");
    int total = 0;
    for (int c : pm.col_twists()) total += c;
    for (int r : pm.row_twists()) total -= r;

    std::vector<P> out;
    for (std::size_t del = 0; del <= m; ++del) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i <= m; ++i)
            if (i != del) rows.push_back(i);
        // memo over column subsets: det of the first popcount(S) rows on columns S
        std::map<unsigned long, P> memo;
        auto degree_of = [&](unsigned long s, std::size_t k) {
            int d = 0;
            for (std::size_t j = 0; j < m; ++j)
                if (s >> j & 1UL) d += pm.col_twists()[j];
            for (std::size_t i = 0; i < k; ++i) d -= pm.row_twists()[rows[i]];
            return d;
        };
        memo.emplace(0UL, P::monomial(f, {0, 0, 0}, f.one()));
        std::vector<unsigned long> layer{0UL};
        for (std::size_t k = 1; k <= m; ++k) {
            std::map<unsigned long, P> next;
            for (unsigned long s : layer) {
                const P& sub = memo.at(s);
                for (std::size_t j = 0; j < m; ++j) {
                    if (s >> j & 1UL) continue;
                    unsigned long t = s | (1UL << j);
                    // sign: position of j among the columns of t
                    int before = 0;
                    for (std::size_t q = 0; q < j; ++q)
                        if (t >> q & 1UL) ++before;
                    const P& a = pm.at(rows[k - 1], j);
                    auto it = next.try_emplace(t, P(f, degree_of(t, k))).first;
                    if (a.is_zero() || sub.is_zero()) continue;
                    P term = a * sub;
                    // expansion along the last row: sign (-1)^{(k-1) + before}
                    if (((k - 1) + before) % 2) term = term.scaled(f.neg(f.one()));
                    it->second = it->second + term;
                }
            }
            layer.clear();
            for (auto& [s, p] : next) {
                memo[s] = p;
                layer.push_back(s);
            }
        }
        P det = memo.at((1UL << m) - 1);
        int deg = total + pm.row_twists()[del];
        if (det.is_zero()) det = P(f, deg);
        if (del % 2) det = det.scaled(f.neg(f.one()));
        if (det.is_zero()) det = P(f, deg);
        out.push_back(det);
    }
    return out;
}

}  // namespace psh
