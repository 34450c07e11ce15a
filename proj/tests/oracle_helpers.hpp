#pragma once

#include <toric/toric.hpp>

#include <random>

// Independent reference implementations the unit tests check the library
// against.  Everything here is deliberately naive.

namespace oracle {

using toric::Int;
using toric::IntMat;
using toric::IntVec;
using toric::Rat;

/** Rank by rational Gaussian elimination. */
inline std::size_t rank_oracle(const IntMat& m) {
    std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = Rat(m(i, j));
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t piv = r;
        while (piv < m.rows && a[piv][col] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < m.cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/** All nonzero kernel vectors with entries in [-bound, bound]. */
inline std::vector<IntVec> box_kernel(const IntMat& m, long long bound) {
    std::vector<IntVec> out;
    IntVec v(m.cols, -bound);
    if (m.cols == 0) return out;
    while (true) {
        if (!toric::is_zero(v) && toric::is_zero(m.mul(v))) out.push_back(v);
        std::size_t j = 0;
        while (j < m.cols) {
            if (v[j] < bound) {
                v[j] += 1;
                break;
            }
            v[j] = -bound;
            ++j;
        }
        if (j == m.cols) break;
    }
    return out;
}

/** Conformally minimal canonical representatives of a set of vectors:
 *  the Graver basis when the input covers enough of the kernel. */
inline std::vector<IntVec> conformal_minimal(std::vector<IntVec> vs) {
    for (IntVec& v : vs) v = toric::canonical_sign(std::move(v));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<IntVec> out;
    for (const IntVec& v : vs) {
        bool minimal = true;
        for (const IntVec& w : vs) {
            if (w == v) continue;
            if (toric::conformal_leq(w, v) || toric::conformal_leq(toric::neg(w), v)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(v);
    }
    return out;
}

/** Graver basis by box search: sound when every Graver entry is within
 *  the bound, which the caller promises. */
inline std::vector<IntVec> box_graver(const IntMat& m, long long bound) {
    return conformal_minimal(box_kernel(m, bound));
}

/** Whether v is an integer combination of the columns of m, by rational
 *  elimination on [m | v] followed by an integrality check.  Assumes m
 *  has full column rank, which kernel bases do. */
inline bool in_column_lattice(const IntMat& m, const IntVec& v) {
    std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols + 1));
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = Rat(m(i, j));
        a[i][m.cols] = Rat(v[i]);
    }
    std::vector<std::size_t> pivot_row(m.cols, m.rows);
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t piv = r;
        while (piv < m.rows && a[piv][col] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[r][col];
            for (std::size_t j = col; j <= m.cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_row[col] = r;
        ++r;
    }
    for (std::size_t i = r; i < m.rows; ++i)
        if (a[i][m.cols] != 0) return false;  // inconsistent, v outside the span
    for (std::size_t col = 0; col < m.cols; ++col) {
        if (pivot_row[col] == m.rows) return false;  // not full column rank
        Rat x = a[pivot_row[col]][m.cols] / a[pivot_row[col]][col];
        if (boost::multiprecision::denominator(x) != 1) return false;
    }
    return true;
}

/** Whether the columns of two matrices span the same lattice. */
inline bool same_lattice(const IntMat& a, const IntMat& b) {
    for (std::size_t j = 0; j < b.cols; ++j)
        if (!in_column_lattice(a, b.col(j))) return false;
    for (std::size_t j = 0; j < a.cols; ++j)
        if (!in_column_lattice(b, a.col(j))) return false;
    return true;
}

/** All z >= 0 with A z = b and every entry at most `cap`: an exhaustive
 *  scan, sound whenever the true fiber fits in the box. */
inline std::vector<IntVec> scan_fiber(const IntMat& a, const IntVec& b, long long cap) {
    std::vector<IntVec> out;
    IntVec z(a.cols, 0);
    while (true) {
        if (a.mul(z) == b) out.push_back(z);
        std::size_t j = 0;
        while (j < a.cols) {
            if (z[j] < cap) {
                z[j] += 1;
                break;
            }
            z[j] = 0;
            ++j;
        }
        if (j == a.cols) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/** Connectivity of `points` under steps +/-m for m in `moves`, both ends
 *  inside the set. */
inline std::vector<std::vector<IntVec>> move_components(
    const std::vector<IntVec>& points, const std::vector<IntVec>& moves) {
    std::vector<std::vector<IntVec>> classes;
    std::vector<bool> used(points.size(), false);
    for (std::size_t s = 0; s < points.size(); ++s) {
        if (used[s]) continue;
        std::vector<IntVec> cls;
        std::vector<std::size_t> stack{s};
        used[s] = true;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            cls.push_back(points[i]);
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (used[j]) continue;
                IntVec d = toric::sub(points[i], points[j]);
                for (const IntVec& m : moves)
                    if (d == m || d == toric::neg(m)) {
                        used[j] = true;
                        stack.push_back(j);
                        break;
                    }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

/** Whether M connects u+ to u- inside the fiber of every Graver degree:
 *  the finite Markov-basis criterion. */
inline bool is_markov_basis(const IntMat& a, const std::vector<IntVec>& graver,
                            const std::vector<IntVec>& m, long long cap) {
    for (const IntVec& u : graver) {
        IntVec up = toric::positive_part(u), um = toric::negative_part(u);
        auto fiber = scan_fiber(a, a.mul(up), cap);
        bool linked = false;
        for (const auto& cls : move_components(fiber, m))
            if (std::binary_search(cls.begin(), cls.end(), up) &&
                std::binary_search(cls.begin(), cls.end(), um)) {
                linked = true;
                break;
            }
        if (!linked) return false;
    }
    return true;
}

inline bool is_minimal_markov_basis(const IntMat& a, const std::vector<IntVec>& graver,
                                    const std::vector<IntVec>& m, long long cap) {
    if (!is_markov_basis(a, graver, m, cap)) return false;
    for (std::size_t drop = 0; drop < m.size(); ++drop) {
        std::vector<IntVec> rest;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != drop) rest.push_back(m[i]);
        if (is_markov_basis(a, graver, rest, cap)) return false;
    }
    return true;
}

/** Sum over all labeled spanning trees (Pruefer enumeration) of the
 *  products of endpoint sizes. */
inline Int pruefer_tree_weight(const std::vector<Int>& sizes) {
    const std::size_t t = sizes.size();
    if (t <= 1) return 1;
    std::vector<std::size_t> seq(t >= 2 ? t - 2 : 0, 0);
    Int total = 0;
    while (true) {
        // decode seq into a tree on {0..t-1}
        std::vector<std::size_t> deg(t, 1);
        for (std::size_t v : seq) deg[v] += 1;
        std::vector<std::size_t> degs = deg;
        Int weight = 1;
        std::vector<bool> done(t, false);
        std::vector<std::size_t> work = degs;
        for (std::size_t v : seq) {
            std::size_t leaf = t;
            for (std::size_t i = 0; i < t; ++i)
                if (!done[i] && work[i] == 1) { leaf = i; break; }
            weight *= sizes[leaf] * sizes[v];
            done[leaf] = true;
            work[v] -= 1;
        }
        std::size_t e1 = t, e2 = t;
        for (std::size_t i = 0; i < t; ++i)
            if (!done[i]) { (e1 == t ? e1 : e2) = i; }
        weight *= sizes[e1] * sizes[e2];
        total += weight;
        std::size_t j = 0;
        while (j < seq.size()) {
            if (seq[j] + 1 < t) {
                seq[j] += 1;
                break;
            }
            seq[j] = 0;
            ++j;
        }
        if (j == seq.size()) break;
    }
    return total;
}

/** Number of minimal Markov bases of a one-row nonnegative matrix:
 *  for every scalar degree up to the largest Graver degree, split the
 *  fiber under all differences taken inside strictly smaller fibers and
 *  multiply the spanning-tree weights. */
inline Int count_markov_oracle_row(const IntMat& a, long long maxdeg, long long cap) {
    std::set<IntVec> below;
    Int result = 1;
    for (long long b = 1; b <= maxdeg; ++b) {
        auto fiber = scan_fiber(a, IntVec{Int(b)}, cap);
        if (fiber.size() >= 2) {
            std::vector<std::size_t> parent(fiber.size());
            for (std::size_t i = 0; i < fiber.size(); ++i) parent[i] = i;
            std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (std::size_t i = 0; i < fiber.size(); ++i)
                for (std::size_t j = i + 1; j < fiber.size(); ++j)
                    if (below.count(toric::canonical_sign(toric::sub(fiber[i], fiber[j]))))
                        parent[find(i)] = find(j);
            std::map<std::size_t, Int> sz;
            for (std::size_t i = 0; i < fiber.size(); ++i) sz[find(i)] += 1;
            if (sz.size() >= 2) {
                std::vector<Int> sizes;
                for (const auto& [root, s] : sz) sizes.push_back(s);
                result *= pruefer_tree_weight(sizes);
            }
        }
        for (std::size_t i = 0; i < fiber.size(); ++i)
            for (std::size_t j = i + 1; j < fiber.size(); ++j)
                below.insert(toric::canonical_sign(toric::sub(fiber[i], fiber[j])));
    }
    return result;
}

inline std::mt19937_64 seeded_rng(unsigned long long salt = 0) {
    return std::mt19937_64(20260816ull ^ salt);
}

inline IntMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                            long long lo, long long hi) {
    std::uniform_int_distribution<long long> pick(lo, hi);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = pick(rng);
    return m;
}

}  // namespace oracle
