#pragma once

#include <toric/fiber.hpp>
#include <toric/graver.hpp>

namespace toric {

namespace detail {

/** Exact determinant, Bareiss elimination. */
inline Int determinant(IntMat m) {
    if (m.rows != m.cols) throw std::logic_error("determinant: square matrix required");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { swap_row = i; break; }
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sgn * m(n - 1, n - 1);
}

}  // namespace detail

/** Number of ways to connect components of sizes s_1..s_t with a
 *  spanning tree whose edge (i, j) can be realized by s_i s_j moves:
 *  the reduced determinant of the weighted Laplacian. */
inline Int weighted_tree_count(const std::vector<Int>& sizes) {
    const std::size_t t = sizes.size();
    if (t <= 1) return 1;
    IntMat l(t - 1, t - 1);
    Int total = 0;
    for (const Int& s : sizes) total += s;
    for (std::size_t i = 0; i + 1 < t; ++i)
        for (std::size_t j = 0; j + 1 < t; ++j)
            l(i, j) = i == j ? Int(sizes[i + 1] * (total - sizes[i + 1]))
                             : Int(-sizes[i + 1] * sizes[j + 1]);
    return detail::determinant(std::move(l));
}

/** Walk over the degrees of Graver elements in increasing grading
 *  weight, split each fiber into components under the moves chosen so
 *  far, and connect the components star-fashion from the class with the
 *  lexicographically least point.  Yields one minimal Markov basis, the
 *  number of distinct ones, and the component data per splitting
 *  degree. */
struct MarkovAnalysis {
    std::vector<IntVec> moves;
    Int basis_count = 1;
    struct BettiFiber {
        IntVec degree;
        std::vector<Int> component_sizes;
    };
    std::vector<BettiFiber> betti;
};

inline MarkovAnalysis markov_analysis(const IntMat& a, const std::vector<IntVec>& graver,
                                      std::size_t fiber_limit = 200000) {
    MarkovAnalysis out;
    if (graver.empty()) return out;
    auto grading = positive_grading(a);
    if (!grading)
        throw hypothesis_error("markov: kernel meets the nonnegative orthant");
    std::map<std::pair<Int, IntVec>, IntVec> degrees;
    for (const IntVec& u : graver) {
        IntVec up = positive_part(u);
        IntVec b = a.mul(up);
        degrees.try_emplace({dot(grading->y, b), b}, std::move(up));
    }
    for (const auto& [key, witness] : degrees) {
        std::vector<IntVec> fiber = fiber_from_point(witness, graver, fiber_limit);
        std::vector<std::vector<IntVec>> comps = fiber_components(fiber, out.moves);
        if (comps.size() < 2) continue;
        MarkovAnalysis::BettiFiber bf;
        bf.degree = key.second;
        for (const auto& c : comps) bf.component_sizes.push_back(Int(c.size()));
        out.basis_count *= weighted_tree_count(bf.component_sizes);
        for (std::size_t i = 1; i < comps.size(); ++i)
            out.moves.push_back(canonical_sign(sub(comps[i].front(), comps[0].front())));
        out.betti.push_back(std::move(bf));
    }
    std::sort(out.moves.begin(), out.moves.end());
    return out;
}

inline std::vector<IntVec> minimal_markov(const IntMat& a, std::size_t fiber_limit = 200000) {
    return markov_analysis(a, graver_via_bouquet(a), fiber_limit).moves;
}

inline Int count_minimal_markov(const IntMat& a, std::size_t fiber_limit = 200000) {
    return markov_analysis(a, graver_via_bouquet(a), fiber_limit).basis_count;
}

namespace detail {

/** All kernel elements v = p - q with v+ <= u+, paired with w = u - v,
 *  fed to `reject`; true when some pair passes.  The box over u+ and the
 *  fibers through its points cover every candidate split. */
template <typename Reject>
inline bool has_split(const std::vector<IntVec>& graver, const IntVec& u,
                      std::size_t box_limit, const Reject& reject) {
    IntVec up = positive_part(u);
    Int volume = 1;
    for (const Int& x : up) {
        volume *= x + 1;
        if (volume > Int(box_limit))
            throw hypothesis_error("split search: box over the positive part is too large");
    }
    const std::size_t n = u.size();
    IntVec p(n, 0);
    std::function<bool(std::size_t)> scan = [&](std::size_t j) -> bool {
        if (j == n) {
            for (const IntVec& q : fiber_from_point(p, graver, box_limit * 64)) {
                IntVec v = sub(p, q);
                if (is_zero(v)) continue;
                IntVec w = sub(u, v);
                if (is_zero(w)) continue;
                if (reject(v, w)) return true;
            }
            return false;
        }
        for (Int t = 0; t <= up[j]; ++t) {
            p[j] = t;
            if (scan(j + 1)) return true;
        }
        p[j] = 0;
        return false;
    };
    return scan(0);
}

}  // namespace detail

/** Graver elements with no semiconformal split into two nonzero kernel
 *  elements: exactly the elements lying in every minimal Markov basis. */
inline std::vector<IntVec> indispensables(const std::vector<IntVec>& graver,
                                          std::size_t box_limit = 100000) {
    std::vector<IntVec> out;
    for (const IntVec& u : graver) {
        bool split = detail::has_split(graver, u, box_limit,
                                       [&](const IntVec& v, const IntVec& w) {
                                           return is_semiconformal_sum(u, v, w);
                                       });
        if (!split) out.push_back(u);
    }
    return out;
}

inline std::vector<IntVec> indispensables(const IntMat& a, std::size_t box_limit = 100000) {
    return indispensables(graver_via_bouquet(a), box_limit);
}

/** Graver elements with no strongly semiconformal split: the union of
 *  all minimal Markov bases. */
inline std::vector<IntVec> universal_markov(const std::vector<IntVec>& graver,
                                            std::size_t box_limit = 100000) {
    std::vector<IntVec> out;
    for (const IntVec& u : graver) {
        bool split = detail::has_split(graver, u, box_limit,
                                       [&](const IntVec& v, const IntVec& w) {
                                           return is_strongly_semiconformal_sum(u, v, w);
                                       });
        if (!split) out.push_back(u);
    }
    return out;
}

inline std::vector<IntVec> universal_markov(const IntMat& a, std::size_t box_limit = 100000) {
    return universal_markov(graver_via_bouquet(a), box_limit);
}

/** Checks that every fiber through a Graver element of the ground
 *  configuration is exactly the two-point set {u+, u-}.  Equivalent to
 *  strong robustness of the ground configuration. */
inline bool two_point_ground_fibers(const std::vector<IntVec>& graver) {
    for (const IntVec& u : graver) {
        std::vector<IntVec> expect{positive_part(u), negative_part(u)};
        std::sort(expect.begin(), expect.end());
        try {
            if (fiber_from_point(expect[0], graver, 16) != expect) return false;
        } catch (const hypothesis_error&) {
            return false;  // more points than the limit is certainly not two
        }
    }
    return true;
}

/** Checks that the ground fiber through column `col` is the single
 *  standard unit vector. */
inline bool singleton_column_fiber(std::size_t n, std::size_t col,
                                   const std::vector<IntVec>& graver) {
    IntVec e(n, 0);
    e[col] = 1;
    try {
        return fiber_from_point(e, graver, 16) == std::vector<IntVec>{e};
    } catch (const hypothesis_error&) {
        return false;
    }
}

/** Closed-form count of minimal Markov bases for a configuration with at
 *  most one repeated column whose ground fibers follow the two-point
 *  pattern.  With k extra copies of column i the splitting fibers are the
 *  copy simplex (Cayley factor) and, per ground Graver element u, the two
 *  blocks of spreadings of u+ and u-. */
inline Int markov_count_formula_raw(const MultisetConfig& m,
                                    const std::vector<IntVec>& ground_graver) {
    std::size_t repeated = m.ground.cols;
    bool found = false;
    for (std::size_t i = 0; i < m.ground.cols; ++i) {
        if (m.mult[i] == 0) continue;
        if (found)
            throw hypothesis_error("count formula: more than one repeated column");
        repeated = i;
        found = true;
    }
    if (!two_point_ground_fibers(ground_graver))
        throw hypothesis_error("count formula: ground fiber structure outside the pattern");
    if (!found) return 1;
    if (!singleton_column_fiber(m.ground.cols, repeated, ground_graver))
        throw hypothesis_error("count formula: repeated column fiber outside the pattern");
    const std::size_t k = m.mult[repeated];
    Int result = boost::multiprecision::pow(Int(k + 1), unsigned(k - 1));
    for (const IntVec& u : ground_graver) {
        const Int& x = u[repeated];
        Int plus = x > 0 ? x : Int(0);
        Int minus = x < 0 ? -x : Int(0);
        result *= binomial(plus + Int(k), Int(k)) * binomial(minus + Int(k), Int(k));
    }
    return result;
}

/** Closed-form count of the elements of a universal Groebner basis for a
 *  configuration with at most one repeated column over a ground whose
 *  fibers follow the two-point pattern: copy exchanges, unchanged lifts
 *  of elements missing the repeated column, and one lift per copy for
 *  the rest (apex-to-vertex edges of the fiber pyramid). */
inline Int ugb_count_single_repeat(const MultisetConfig& m,
                                   const std::vector<IntVec>& ground_graver) {
    std::size_t repeated = m.ground.cols;
    bool found = false;
    for (std::size_t i = 0; i < m.ground.cols; ++i) {
        if (m.mult[i] == 0) continue;
        if (found)
            throw hypothesis_error("ugb formula: more than one repeated column");
        repeated = i;
        found = true;
    }
    if (!two_point_ground_fibers(ground_graver))
        throw hypothesis_error("ugb formula: ground fiber structure outside the pattern");
    if (!found) return Int(ground_graver.size());
    if (!singleton_column_fiber(m.ground.cols, repeated, ground_graver))
        throw hypothesis_error("ugb formula: repeated column fiber outside the pattern");
    const std::size_t k = m.mult[repeated];
    Int zero_at = 0, nonzero_at = 0;
    for (const IntVec& u : ground_graver)
        (u[repeated] == 0 ? zero_at : nonzero_at) += 1;
    return binomial(Int(k) + 1, 2) + zero_at + Int(k + 1) * nonzero_at;
}

/** Strong robustness certificate.  Mixed bouquets decide immediately;
 *  otherwise compare the Graver basis with the indispensables at desk
 *  scale. */
inline bool certify_strongly_robust(const IntMat& a, std::size_t box_limit = 100000) {
    BouquetDecomposition dec = bouquet_decompose(a);
    bool all_mixed = true;
    for (const Bouquet& b : dec.bouquets)
        if (b.kind == BouquetKind::non_mixed) { all_mixed = false; break; }
    if (all_mixed) return true;
    std::vector<IntVec> gr = graver_via_bouquet(a);
    return indispensables(gr, box_limit) == gr;
}

}  // namespace toric
