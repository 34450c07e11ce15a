#pragma once

#include <toric/bouquet.hpp>
#include <toric/lp.hpp>
#include <toric/multiset.hpp>

#include <functional>
#include <set>

namespace toric {

namespace detail {

struct NormLexLess {
    bool operator()(const IntVec& a, const IntVec& b) const {
        Int na = one_norm(a), nb = one_norm(b);
        if (na != nb) return na < nb;
        return a < b;
    }
};

/** Reduce s by conformal subtraction against g and -g for g in basis. */
inline IntVec conformal_normal_form(IntVec s, const std::vector<IntVec>& basis) {
    bool again = true;
    while (again && !is_zero(s)) {
        again = false;
        for (const IntVec& g : basis) {
            if (conformal_leq(g, s)) {
                s = sub(s, g);
                again = true;
                break;
            }
            IntVec h = neg(g);
            if (conformal_leq(h, s)) {
                s = sub(s, h);
                again = true;
                break;
            }
        }
    }
    return s;
}

}  // namespace detail

/** Pottier's completion over a kernel lattice basis: the set of
 *  conformally minimal nonzero lattice elements, one representative per
 *  +/- pair (first nonzero entry positive), sorted lexicographically.
 *  Terminates for any lattice. */
inline std::vector<IntVec> pottier_completion(const IntMat& k) {
    std::vector<IntVec> basis;
    std::set<IntVec, detail::NormLexLess> pool;
    for (std::size_t j = 0; j < k.cols; ++j)
        pool.insert(canonical_sign(k.col(j)));
    while (!pool.empty()) {
        IntVec s = *pool.begin();
        pool.erase(pool.begin());
        s = detail::conformal_normal_form(std::move(s), basis);
        if (is_zero(s)) continue;
        s = canonical_sign(s);
        for (const IntVec& g : basis) {
            IntVec p = add(s, g);
            if (!is_zero(p)) pool.insert(canonical_sign(std::move(p)));
            IntVec q = sub(s, g);
            if (!is_zero(q)) pool.insert(canonical_sign(std::move(q)));
        }
        IntVec dbl = add(s, s);
        pool.insert(canonical_sign(std::move(dbl)));
        basis.push_back(std::move(s));
    }
    std::vector<IntVec> out;
    for (const IntVec& g : basis) {
        bool minimal = true;
        for (const IntVec& h : basis) {
            if (&h == &g) continue;
            if (conformal_leq(h, g) || conformal_leq(neg(h), g)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/** Graver basis by completion.  The pointedness hypothesis keeps every
 *  fiber finite, which the basis consumers downstream rely on. */
inline std::vector<IntVec> graver_completion(const IntMat& a) {
    if (!kernel_is_pointed(a))
        throw hypothesis_error("graver: kernel meets the nonnegative orthant, fibers are infinite");
    return pottier_completion(kernel_lattice_basis(a));
}

/** Graver basis through the bouquet contraction: complete on the bouquet
 *  matrix, then apply the kernel isomorphism.  Agrees with plain
 *  completion on every input, and is much cheaper when bouquets are
 *  large.  The contraction itself may fail to be pointed even when the
 *  input is, so the hypothesis is checked on the input and the
 *  completion runs on the raw lattice. */
inline std::vector<IntVec> graver_via_bouquet(const IntMat& a) {
    if (!kernel_is_pointed(a))
        throw hypothesis_error("graver: kernel meets the nonnegative orthant, fibers are infinite");
    BouquetDecomposition dec = bouquet_decompose(a);
    std::vector<IntVec> gb = pottier_completion(kernel_lattice_basis(dec.bouquet_matrix));
    std::vector<IntVec> out;
    out.reserve(gb.size());
    for (const IntVec& u : gb)
        out.push_back(canonical_sign(lift_kernel(dec, u)));
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/** Circuits: kernel elements of minimal support, primitive.  Scans all
 *  (r+1)-subsets of columns, so it refuses combinatorially infeasible
 *  inputs instead of running forever. */
inline std::vector<IntVec> circuits(const IntMat& a, std::size_t subset_limit = 200000) {
    const std::size_t n = a.cols;
    const std::size_t r = rank(a);
    if (r + 1 > n) return {};
    Int total = binomial(Int(n), Int(r + 1));
    if (total > Int(subset_limit))
        throw hypothesis_error("circuits: too many column subsets to scan");
    std::set<IntVec> found;
    std::vector<std::size_t> idx(r + 1);
    for (std::size_t i = 0; i <= r; ++i) idx[i] = i;
    do {
        IntMat sub = submatrix_cols(a, idx);
        IntMat k = kernel_lattice_basis(sub);
        // a one-dimensional subset kernel is spanned by a circuit: any
        // kernel vector with smaller support would be an independent member
        if (k.cols != 1) continue;
        IntVec u(n, 0);
        for (std::size_t i = 0; i <= r; ++i) u[idx[i]] = k(i, 0);
        found.insert(canonical_sign(u));
    } while (detail::next_combination(idx, n));
    return {found.begin(), found.end()};
}

namespace detail {

inline void weak_compositions(const Int& total, std::size_t parts,
                              IntVec& acc, const std::function<void(const IntVec&)>& emit) {
    if (parts == 1) {
        acc.push_back(total);
        emit(acc);
        acc.pop_back();
        return;
    }
    for (Int first = total; first >= 0; --first) {
        acc.push_back(first);
        weak_compositions(total - first, parts - 1, acc, emit);
        acc.pop_back();
    }
}

}  // namespace detail

/** |Gr| of the assembled configuration, by the closed formula: copy
 *  exchanges plus all spreadings of ground Graver elements. */
inline Int multiset_graver_count(const MultisetConfig& m,
                                 const std::vector<IntVec>& ground_graver) {
    Int count = 0;
    for (std::size_t ki : m.mult) count += binomial(Int(ki) + 1, 2);
    for (const IntVec& u : ground_graver) {
        Int prod = 1;
        for (std::size_t i = 0; i < m.ground.cols; ++i)
            prod *= binomial(abs_int(u[i]) + Int(m.mult[i]), Int(m.mult[i]));
        count += prod;
    }
    return count;
}

inline Int multiset_graver_count(const MultisetConfig& m) {
    return multiset_graver_count(m, graver_via_bouquet(m.ground));
}

/** Graver basis of the assembled configuration without completing it:
 *  exchange moves between copies, plus every spreading of each ground
 *  Graver element over the copy blocks. */
inline std::vector<IntVec> multiset_graver(const MultisetConfig& m,
                                           const std::vector<IntVec>& ground_graver,
                                           std::size_t enum_limit = 5000000) {
    Int total = multiset_graver_count(m, ground_graver);
    if (total > Int(enum_limit))
        throw hypothesis_error("multiset graver: too many elements to enumerate");
    const std::size_t big_n = m.assembled_cols();
    std::vector<std::size_t> off = m.block_offsets();
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < m.ground.cols; ++i)
        for (std::size_t s = 0; s <= m.mult[i]; ++s)
            for (std::size_t t = s + 1; t <= m.mult[i]; ++t) {
                IntVec v(big_n, 0);
                v[off[i] + s] = 1;
                v[off[i] + t] = -1;
                out.push_back(std::move(v));
            }
    for (const IntVec& u : ground_graver) {
        std::vector<std::vector<IntVec>> block_choices(m.ground.cols);
        for (std::size_t i = 0; i < m.ground.cols; ++i) {
            IntVec acc;
            int sgn = sign(u[i]);
            detail::weak_compositions(
                abs_int(u[i]), m.mult[i] + 1, acc, [&](const IntVec& parts) {
                    IntVec piece(parts.size());
                    for (std::size_t s = 0; s < parts.size(); ++s)
                        piece[s] = sgn * parts[s];
                    block_choices[i].push_back(std::move(piece));
                });
        }
        std::vector<std::size_t> pick(m.ground.cols, 0);
        bool more = true;
        while (more) {
            IntVec v(big_n, 0);
            for (std::size_t i = 0; i < m.ground.cols; ++i)
                for (std::size_t s = 0; s <= m.mult[i]; ++s)
                    v[off[i] + s] = block_choices[i][pick[i]][s];
            out.push_back(std::move(v));
            more = false;
            std::size_t i = m.ground.cols;
            while (i-- > 0) {
                if (++pick[i] < block_choices[i].size()) {
                    more = true;
                    break;
                }
                pick[i] = 0;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<IntVec> multiset_graver(const MultisetConfig& m,
                                           std::size_t enum_limit = 5000000) {
    return multiset_graver(m, graver_via_bouquet(m.ground), enum_limit);
}

}  // namespace toric
