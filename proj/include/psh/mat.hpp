#pragma once

#include "psh/field.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace psh {

template <class F>
class Mat {
public:
    using E = typename F::Elem;

    Mat() = default;
    Mat(const F& f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

    static Mat identity(const F& f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    static Mat from_rows(const F& f, const std::vector<std::vector<E>>& rows, std::size_t cols) {
        Mat m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const F& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    E& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    E* row(std::size_t i) { return a_.data() + i * cols_; }
    const E* row(std::size_t i) const { return a_.data() + i * cols_; }

    std::vector<E> row_vec(std::size_t i) const { return std::vector<E>(row(i), row(i) + cols_); }

    Mat transpose() const {
        Mat t(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

private:
    F f_{};
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<E> a_;
};

template <class F>
Mat<F> operator*(const Mat<F>& a, const Mat<F>& b) {
    a.field().check_same(b.field());
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    const F& f = a.field();
    Mat<F> c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a(i, k))) continue;
            auto aik = f.neg(a(i, k));
            for (std::size_t j = 0; j < b.cols(); ++j) f.axpy_neg(c(i, j), aik, b(k, j));
        }
    return c;
}

template <class F>
struct Echelon {
    Mat<F> r;                         // reduced row echelon form, zero rows removed
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan with first-nonzero pivoting.  Deterministic.
template <class F>
Echelon<F> rref(Mat<F> m) {
    const F& f = m.field();
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && f.is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        auto inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            auto fac = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) f.axpy_neg(m(i, j), fac, m(r, j));
        }
        piv.push_back(c);
        ++r;
    }
    Echelon<F> e{Mat<F>(f, r, m.cols()), piv};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e.r(i, j) = m(i, j);
    return e;
}

// Forward elimination only; cheaper than rref when just the rank is needed.
template <class F>
std::size_t rank(Mat<F> m) {
    const F& f = m.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && f.is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        auto inv = f.inv(m(r, c));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (f.is_zero(m(i, c))) continue;
            auto fac = f.mul(m(i, c), inv);
            for (std::size_t j = c; j < m.cols(); ++j) f.axpy_neg(m(i, j), fac, m(r, j));
        }
        ++r;
    }
    return r;
}

template <class F>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<typename F::Elem>> kernel;  // column vectors, one per free column
};

template <class F>
RankKernel<F> rank_kernel(const Mat<F>& m) {
    const F& f = m.field();
    auto e = rref(m);
    RankKernel<F> out;
    out.rank = e.rank();
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : e.pivots) is_piv[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        std::vector<typename F::Elem> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = f.neg(e.r(i, free));
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class F>
std::optional<std::vector<typename F::Elem>> solve(const Mat<F>& a, const std::vector<typename F::Elem>& b) {
    const F& f = a.field();
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    Mat<F> aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto e = rref(aug);
    std::vector<typename F::Elem> x(a.cols(), f.zero());
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        x[e.pivots[i]] = e.r(i, a.cols());
    }
    return x;
}

template <class F>
typename F::Elem det(Mat<F> m) {
    const F& f = m.field();
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    auto d = f.one();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t p = c;
        while (p < m.rows() && f.is_zero(m(p, c))) ++p;
        if (p == m.rows()) return f.zero();
        if (p != c) {
            m.swap_rows(p, c);
            d = f.neg(d);
        }
        d = f.mul(d, m(c, c));
        auto inv = f.inv(m(c, c));
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (f.is_zero(m(i, c))) continue;
            auto fac = f.mul(m(i, c), inv);
            for (std::size_t j = c; j < m.cols(); ++j) f.axpy_neg(m(i, j), fac, m(c, j));
        }
    }
    return d;
}

// Incremental row-space basis.  Rows are kept in echelon form with unit pivots,
// each new row reduced against all earlier ones.
template <class F>
class RowSpan {
public:
    using E = typename F::Elem;

    RowSpan(const F& f, std::size_t width) : f_(f), width_(width) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::vector<E>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    std::vector<E> reduce(std::vector<E> v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            auto c = piv_[k];
            if (f_.is_zero(v[c])) continue;
            auto fac = v[c];
            const auto& r = rows_[k];
            for (std::size_t j = 0; j < width_; ++j)
                if (!f_.is_zero(r[j])) f_.axpy_neg(v[j], fac, r[j]);
        }
        return v;
    }

    bool contains(const std::vector<E>& v) const {
        auto w = reduce(v);
        for (auto& x : w)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    // returns true if v enlarged the span
    bool insert(const std::vector<E>& v) {
        if (v.size() != width_) throw std::invalid_argument("RowSpan: width mismatch");
        auto w = reduce(v);
        std::size_t c = 0;
        while (c < width_ && f_.is_zero(w[c])) ++c;
        if (c == width_) return false;
        auto inv = f_.inv(w[c]);
        for (auto& x : w) x = f_.mul(x, inv);
        rows_.push_back(std::move(w));
        piv_.push_back(c);
        return true;
    }

private:
    F f_;
    std::size_t width_;
    std::vector<std::vector<E>> rows_;
    std::vector<std::size_t> piv_;
};

}  // namespace psh
