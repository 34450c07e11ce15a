#pragma once

#include <toric/linalg.hpp>

#include <optional>

namespace toric {

namespace detail {

/** Exact phase-1 simplex: find x >= 0 with M x = b over the rationals.
 *  Bland's pivoting rule, so termination is guaranteed.  Sizes here are
 *  tiny (tens of variables), a dense tableau is plenty. */
inline std::optional<std::vector<Rat>> nonnegative_solution(
    std::vector<std::vector<Rat>> m, std::vector<Rat> b) {
    const std::size_t rows = m.size();
    const std::size_t n = rows ? m[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i)
        if (b[i] < 0) {
            for (Rat& x : m[i]) x = -x;
            b[i] = -b[i];
        }
    const std::size_t total = n + rows;  // real variables then artificials
    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(total, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = m[i][j];
        t[i][n + i] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;
    // reduced costs for minimising the sum of artificials
    std::vector<Rat> obj(total, 0);
    Rat objval = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        objval += b[i];
        for (std::size_t j = 0; j < total; ++j) obj[j] += t[i][j];
    }
    for (std::size_t j = n; j < total; ++j) obj[j] -= 1;
    while (true) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j)
            if (obj[j] > 0) { enter = j; break; }  // Bland: smallest index
        if (enter == total) break;
        std::size_t leave = rows;
        Rat best = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = b[i] / t[i][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows)
            throw std::logic_error("phase-1 simplex: unbounded objective");
        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j < total; ++j) t[leave][j] /= piv;
        b[leave] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < total; ++j) t[i][j] -= f * t[leave][j];
            b[i] -= f * b[leave];
        }
        Rat f = obj[enter];
        if (f != 0) {
            for (std::size_t j = 0; j < total; ++j) obj[j] -= f * t[leave][j];
            objval -= f * b[leave];
        }
        basis[leave] = enter;
    }
    if (objval != 0) return std::nullopt;
    std::vector<Rat> x(n, 0);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < n) x[basis[i]] = b[i];
    return x;
}

}  // namespace detail

/** An integer grading vector y with y^T A >= 1 componentwise.  Such a y
 *  exists iff ker(A) meets the nonnegative orthant only in 0 (Gordan),
 *  i.e. iff every fiber {z >= 0 : Az = b} is finite. */
struct Grading {
    IntVec y;  // length = rows of A
    IntVec w;  // w = A^T y, each entry >= 1
};

inline std::optional<Grading> positive_grading(const IntMat& a) {
    const std::size_t mrows = a.rows, n = a.cols;
    if (n == 0) return Grading{IntVec(mrows, 0), IntVec{}};
    // A^T u - A^T v - s = 1 with u, v, s >= 0; y = u - v
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * mrows + n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < mrows; ++i) {
            m[j][i] = Rat(a(i, j));
            m[j][mrows + i] = -Rat(a(i, j));
        }
        m[j][2 * mrows + j] = -1;
    }
    auto sol = detail::nonnegative_solution(std::move(m), std::vector<Rat>(n, 1));
    if (!sol) return std::nullopt;
    std::vector<Rat> y(mrows);
    Int scale = 1;
    for (std::size_t i = 0; i < mrows; ++i) {
        y[i] = (*sol)[i] - (*sol)[mrows + i];
        scale = scale / gcd_int(scale, denominator(y[i])) * denominator(y[i]);
    }
    Grading g;
    g.y.resize(mrows);
    for (std::size_t i = 0; i < mrows; ++i)
        g.y[i] = numerator(y[i]) * (scale / denominator(y[i]));
    g.w.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        Int wj = 0;
        for (std::size_t i = 0; i < mrows; ++i) wj += g.y[i] * a(i, j);
        if (wj < 1) throw std::logic_error("positive_grading: scaling failed");
        g.w[j] = wj;
    }
    return g;
}

/** Whether ker_Z(A) intersects N^n only in the origin. */
inline bool kernel_is_pointed(const IntMat& a) {
    return positive_grading(a).has_value();
}

}  // namespace toric
