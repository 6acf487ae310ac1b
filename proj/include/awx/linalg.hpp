#pragma once

#include <vector>

#include "awx/ratfunc.hpp"

namespace awx {

inline bool elem_is_zero(const Rational& x) { return x == 0; }
inline bool elem_is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool elem_is_zero(const RatFunc& x) { return x.is_zero(); }

inline Rational elem_one(const Rational&) { return Rational(1); }
inline LaurentPoly elem_one(const LaurentPoly& x) {
    return LaurentPoly::constant(x.var(), Rational(1));
}
inline RatFunc elem_one(const RatFunc& x) { return RatFunc::constant(x.var(), Rational(1)); }

inline Rational exact_div(const Rational& a, const Rational& b) { return rat_div(a, b); }
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw InternalError("inexact polynomial division in elimination");
    return *q;
}
inline RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }

// Dense matrix over one of the exact rings (Rational, LaurentPoly, RatFunc).
template <class T>
class Matrix {
public:
    Matrix(size_t rows, size_t cols, const T& init = T())
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

template <class T>
T zero_of(const Matrix<T>& m) {
    T z = m.at(0, 0);
    z = T(z - z);
    return z;
}

// Fraction-free (Bareiss) determinant. Works over any of the entry rings;
// divisions are exact by construction.
template <class T>
T det_bareiss(Matrix<T> m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) throw ShapeError("determinant of empty matrix");
    if (n == 1) return m.at(0, 0);
    T prev = elem_one(m.at(0, 0));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (elem_is_zero(m.at(k, k))) {
            size_t swap_row = k + 1;
            while (swap_row < n && elem_is_zero(m.at(swap_row, k))) ++swap_row;
            if (swap_row == n) return zero_of(m);
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(T(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)), prev);
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d;
}

// Determinant with RatFunc entries: clear each row to Laurent polynomials
// first, run Bareiss there, then divide the cleared factors back out.
inline RatFunc det_ratfunc(const Matrix<RatFunc>& m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) throw ShapeError("determinant of empty matrix");
    Var v = m.at(0, 0).var();
    Matrix<LaurentPoly> cleared(n, n, LaurentPoly(v));
    LaurentPoly scale = LaurentPoly::constant(v, Rational(1));
    for (size_t i = 0; i < n; ++i) {
        LaurentPoly l = LaurentPoly::constant(v, Rational(1));
        for (size_t j = 0; j < n; ++j) {
            const LaurentPoly& d = m.at(i, j).den();
            if (!d.is_constant()) l = *try_divide(l * d, laurent_gcd(l, d));
        }
        for (size_t j = 0; j < n; ++j)
            cleared.at(i, j) = m.at(i, j).num() * *try_divide(l, m.at(i, j).den());
        scale = scale * l;
    }
    return RatFunc(det_bareiss(cleared), scale);
}

inline Rational det(const Matrix<Rational>& m) { return det_bareiss(m); }
inline LaurentPoly det(const Matrix<LaurentPoly>& m) { return det_bareiss(m); }
inline RatFunc det(const Matrix<RatFunc>& m) { return det_ratfunc(m); }

// Result of an exact linear solve: either inconsistent, or a particular
// solution together with a basis of the homogeneous solution space.
template <class T>
struct LinSolveResult {
    bool consistent = false;
    std::vector<T> particular;
    std::vector<std::vector<T>> nullspace;

    bool unique() const { return consistent && nullspace.empty(); }
};

// Gauss-Jordan over a field (Rational or RatFunc entries).
template <class T>
LinSolveResult<T> linsolve(Matrix<T> m, std::vector<T> rhs) {
    if (rhs.size() != m.rows()) throw ShapeError("rhs length does not match row count");
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && elem_is_zero(m.at(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(p, j));
            std::swap(rhs[r], rhs[p]);
        }
        T inv = m.at(r, c);
        for (size_t j = c; j < cols; ++j) m.at(r, j) = exact_div(m.at(r, j), inv);
        rhs[r] = exact_div(rhs[r], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || elem_is_zero(m.at(i, c))) continue;
            T f = m.at(i, c);
            for (size_t j = c; j < cols; ++j) m.at(i, j) = m.at(i, j) - T(f * m.at(r, j));
            rhs[i] = rhs[i] - T(f * rhs[r]);
        }
        pivot_col.push_back(c);
        ++r;
    }
    LinSolveResult<T> res;
    for (size_t i = r; i < rows; ++i)
        if (!elem_is_zero(rhs[i])) return res;  // inconsistent
    res.consistent = true;
    T zero = zero_of(m);
    res.particular.assign(cols, zero);
    for (size_t i = 0; i < pivot_col.size(); ++i) res.particular[pivot_col[i]] = rhs[i];
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<T> vec(cols, zero);
        vec[c] = elem_one(zero);
        for (size_t i = 0; i < pivot_col.size(); ++i) vec[pivot_col[i]] = -m.at(i, c);
        res.nullspace.push_back(std::move(vec));
    }
    return res;
}

}  // namespace awx
