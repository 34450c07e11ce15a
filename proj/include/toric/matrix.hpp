#pragma once

#include <toric/vec.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace toric {

/** Dense integer matrix with arbitrary-precision entries, row-major. */
struct IntMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    IntMat(std::size_t r, std::size_t c, std::vector<Int> entries)
        : rows(r), cols(c), a(std::move(entries)) {
        if (a.size() != rows * cols)
            throw std::invalid_argument("IntMat: entry count does not match shape");
    }

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const IntMat& o) const = default;

    IntVec row(std::size_t i) const {
        IntVec r(cols);
        for (std::size_t j = 0; j < cols; ++j) r[j] = (*this)(i, j);
        return r;
    }

    IntVec col(std::size_t j) const {
        IntVec c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, const IntVec& c) {
        for (std::size_t i = 0; i < rows; ++i) (*this)(i, j) = c[i];
    }

    /** A * x for an integer vector x of length cols. */
    IntVec mul(const IntVec& x) const {
        IntVec r(rows, 0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) r[i] += (*this)(i, j) * x[j];
        return r;
    }
};

/** Build a matrix from initializer-friendly nested vectors of long long. */
inline IntMat mat_from(const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("mat_from: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline IntMat submatrix_cols(const IntMat& m, const std::vector<std::size_t>& cols) {
    IntMat s(m.rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < m.rows; ++i) s(i, j) = m(i, cols[j]);
    return s;
}

inline IntMat vstack(const IntMat& top, const IntMat& bottom) {
    if (top.cols != bottom.cols)
        throw std::invalid_argument("vstack: column counts differ");
    IntMat r(top.rows + bottom.rows, top.cols);
    for (std::size_t i = 0; i < top.rows; ++i)
        for (std::size_t j = 0; j < top.cols; ++j) r(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows; ++i)
        for (std::size_t j = 0; j < top.cols; ++j) r(top.rows + i, j) = bottom(i, j);
    return r;
}

/** Parse the plain text matrix format: first line "rows cols", then
 *  row-major whitespace-separated integers.  Lines whose first non-blank
 *  character is '#' are comments. */
inline IntMat parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string line, payload;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        payload += line;
        payload += '\n';
    }
    std::istringstream tok(payload);
    long long r = -1, c = -1;
    if (!(tok >> r >> c) || r < 0 || c < 0)
        throw std::runtime_error("matrix parse: expected header 'rows cols'");
    IntMat m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        std::string w;
        if (!(tok >> w))
            throw std::runtime_error("matrix parse: expected " +
                                     std::to_string(m.a.size()) + " entries, got " +
                                     std::to_string(i));
        try {
            m.a[i] = Int(w);
        } catch (...) {
            throw std::runtime_error("matrix parse: bad integer '" + w + "'");
        }
    }
    std::string extra;
    if (tok >> extra)
        throw std::runtime_error("matrix parse: trailing token '" + extra + "'");
    return m;
}

inline std::string matrix_to_text(const IntMat& m) {
    std::ostringstream out;
    out << m.rows << ' ' << m.cols << '\n';
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace toric
