#pragma once

#include <toric/matrix.hpp>

#include <algorithm>
#include <optional>

namespace toric {

/** Rank over Q via Bareiss fraction-free elimination.  Exact: every
 *  division in the update is an exact integer division. */
inline std::size_t rank(IntMat m) {
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pr = r;
        while (pr < m.rows && m(pr, c) == 0) ++pr;
        if (pr == m.rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(pr, j));
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            for (std::size_t j = c + 1; j < m.cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

inline bool in_rowspan(const IntMat& m, const IntVec& v) {
    if (v.size() != m.cols)
        throw std::invalid_argument("in_rowspan: length mismatch");
    IntMat ext(m.rows + 1, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) ext(i, j) = m(i, j);
    for (std::size_t j = 0; j < m.cols; ++j) ext(m.rows, j) = v[j];
    return rank(m) == rank(ext);
}

/** Whether (1,...,1) lies in the rational row span of A; configurations
 *  with this property have a projective toric variety and every fiber of
 *  A graded by total degree. */
inline bool allones_in_rowspan(const IntMat& m) {
    return in_rowspan(m, IntVec(m.cols, 1));
}

namespace detail {

/** Integer column echelon by unimodular column operations, applied to x
 *  and mirrored on u.  Returns the number of pivot columns; after the
 *  call, columns [pivots, n) of x are zero and the same columns of u
 *  form a basis of the integer kernel of the original x. */
inline std::size_t column_echelon(IntMat& x, IntMat* u) {
    std::size_t fixed = 0;
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < x.rows; ++i) x(i, dst) -= q * x(i, src);
        if (u)
            for (std::size_t i = 0; i < u->rows; ++i) (*u)(i, dst) -= q * (*u)(i, src);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < x.rows; ++i) std::swap(x(i, a), x(i, b));
        if (u)
            for (std::size_t i = 0; i < u->rows; ++i) std::swap((*u)(i, a), (*u)(i, b));
    };
    auto negate_col = [&](std::size_t j) {
        for (std::size_t i = 0; i < x.rows; ++i) x(i, j) = -x(i, j);
        if (u)
            for (std::size_t i = 0; i < u->rows; ++i) (*u)(i, j) = -(*u)(i, j);
    };
    for (std::size_t r = 0; r < x.rows && fixed < x.cols; ++r) {
        while (true) {
            // smallest nonzero |entry| in row r among the active columns,
            // earliest column on ties: deterministic pivot policy
            std::size_t best = x.cols;
            for (std::size_t j = fixed; j < x.cols; ++j) {
                if (x(r, j) == 0) continue;
                if (best == x.cols ||
                    abs_int(x(r, j)) < abs_int(x(r, best)))
                    best = j;
            }
            if (best == x.cols) break;  // row r zero on active columns
            bool lone = true;
            for (std::size_t j = fixed; j < x.cols; ++j) {
                if (j == best || x(r, j) == 0) continue;
                lone = false;
                add_col(j, best, x(r, j) / x(r, best));
            }
            if (lone) {
                swap_cols(fixed, best);
                if (x(r, fixed) < 0) negate_col(fixed);
                ++fixed;
                break;
            }
        }
    }
    return fixed;
}

}  // namespace detail

/** Canonical column-style Hermite normal form of a full-column-rank
 *  integer matrix: pivot rows strictly increase left to right, pivots are
 *  positive, and in every pivot row the entries left of the pivot are
 *  reduced into [0, pivot).  Two bases span the same lattice iff their
 *  forms coincide. */
inline IntMat hermite_column_form(IntMat k) {
    std::size_t pivots = detail::column_echelon(k, nullptr);
    IntMat h(k.rows, pivots);
    for (std::size_t j = 0; j < pivots; ++j)
        for (std::size_t i = 0; i < k.rows; ++i) h(i, j) = k(i, j);
    for (std::size_t j = 0; j < pivots; ++j) {
        std::size_t pr = 0;
        while (pr < h.rows && h(pr, j) == 0) ++pr;
        for (std::size_t t = 0; t < j; ++t) {
            Int q = h(pr, t) >= 0 ? Int(h(pr, t) / h(pr, j))
                                  : Int(-((-h(pr, t) + h(pr, j) - 1) / h(pr, j)));
            if (q != 0)
                for (std::size_t i = 0; i < h.rows; ++i) h(i, t) -= q * h(i, j);
        }
    }
    return h;
}

/** Basis of the saturated kernel lattice ker_Z(A) = {x : A x = 0}, as the
 *  columns of an n x (n - rank) matrix in canonical Hermite form.  The
 *  result depends only on A, not on elimination choices. */
inline IntMat kernel_lattice_basis(const IntMat& m) {
    IntMat x = m;
    IntMat u(m.cols, m.cols);
    for (std::size_t i = 0; i < m.cols; ++i) u(i, i) = 1;
    std::size_t fixed = detail::column_echelon(x, &u);
    IntMat k(m.cols, m.cols - fixed);
    for (std::size_t j = fixed; j < m.cols; ++j)
        for (std::size_t i = 0; i < m.cols; ++i) k(i, j - fixed) = u(i, j);
    return hermite_column_form(k);
}

/** Solve K x = v over the integers for a column-echelon-friendly K
 *  (as produced by hermite_column_form).  Returns the coefficient vector
 *  when v lies in the column lattice of K, nothing otherwise. */
inline std::optional<IntVec> lattice_coordinates(const IntMat& k, IntVec v) {
    IntVec coef(k.cols, 0);
    for (std::size_t j = 0; j < k.cols; ++j) {
        std::size_t pr = 0;
        while (pr < k.rows && k(pr, j) == 0) ++pr;
        if (pr == k.rows) continue;
        // pivot rows of earlier columns are above pr, already cleared
        if (v[pr] % k(pr, j) != 0) return std::nullopt;
        Int c = v[pr] / k(pr, j);
        coef[j] = c;
        if (c != 0)
            for (std::size_t i = 0; i < k.rows; ++i) v[i] -= c * k(i, j);
    }
    if (!is_zero(v)) return std::nullopt;
    return coef;
}

/** Diagonal of the Smith normal form (elementary divisors, nonnegative,
 *  each dividing the next). */
inline IntVec smith_diagonal(IntMat m) {
    std::size_t n = std::min(m.rows, m.cols);
    IntVec d;
    std::size_t top = 0;
    while (top < std::min(m.rows, m.cols)) {
        // find a nonzero entry in the working block
        std::size_t pi = m.rows, pj = m.cols;
        for (std::size_t i = top; i < m.rows; ++i)
            for (std::size_t j = top; j < m.cols; ++j)
                if (m(i, j) != 0 &&
                    (pi == m.rows || abs_int(m(i, j)) < abs_int(m(pi, pj)))) {
                    pi = i; pj = j;
                }
        if (pi == m.rows) break;
        for (std::size_t j = top; j < m.cols; ++j) std::swap(m(top, j), m(pi, j));
        for (std::size_t i = top; i < m.rows; ++i) std::swap(m(i, top), m(i, pj));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = top + 1; i < m.rows; ++i) {
                if (m(i, top) == 0) continue;
                Int q = m(i, top) / m(top, top);
                for (std::size_t j = top; j < m.cols; ++j) m(i, j) -= q * m(top, j);
                if (m(i, top) != 0) {
                    for (std::size_t j = top; j < m.cols; ++j)
                        std::swap(m(top, j), m(i, j));
                    clean = false;
                }
            }
            for (std::size_t j = top + 1; j < m.cols; ++j) {
                if (m(top, j) == 0) continue;
                Int q = m(top, j) / m(top, top);
                for (std::size_t i = top; i < m.rows; ++i) m(i, j) -= q * m(i, top);
                if (m(top, j) != 0) {
                    for (std::size_t i = top; i < m.rows; ++i)
                        std::swap(m(i, top), m(i, j));
                    clean = false;
                }
            }
        }
        d.push_back(abs_int(m(top, top)));
        ++top;
    }
    // enforce the divisibility chain by folding gcds forward
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[j] % d[i] != 0) {
                Int g = gcd_int(d[i], d[j]);
                d[j] = d[i] / g * d[j];
                d[i] = g;
            }
    d.resize(n, 0);
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

/** Gale transform: row i is the image G(a_i) of the i-th column of A in a
 *  fixed basis of the saturated kernel lattice. */
struct GaleRows {
    std::size_t n = 0;  // number of columns of A
    std::size_t r = 0;  // rank of A
    std::vector<IntVec> rows;  // n vectors of length n - r
    IntMat basis;  // the n x (n-r) kernel basis whose rows these are
};

inline GaleRows gale_transform(const IntMat& m) {
    GaleRows g;
    g.basis = kernel_lattice_basis(m);
    g.n = m.cols;
    g.r = m.cols - g.basis.cols;
    for (std::size_t i = 0; i < g.n; ++i) g.rows.push_back(g.basis.row(i));
    return g;
}

}  // namespace toric
