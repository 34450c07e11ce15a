#pragma once

#include <toric/markov.hpp>

namespace toric {

/** Pyramidal data of a multiset configuration.  A column of the
 *  assembled matrix is free (lies outside every kernel support) exactly
 *  when it is the single copy of a free, unrepeated ground column. */
struct PyramidalityInfo {
    std::vector<std::size_t> ground_free_cols;  // free columns of the ground
    std::vector<std::size_t> assembled_apexes;  // free columns of the assembled matrix
    std::size_t degree = 0;                     // = assembled_apexes.size()
};

inline PyramidalityInfo pyramidality_of_multiset(const MultisetConfig& m) {
    PyramidalityInfo info;
    info.ground_free_cols = free_columns(m.ground);
    std::vector<std::size_t> off = m.block_offsets();
    for (std::size_t i : info.ground_free_cols)
        if (m.mult[i] == 0) info.assembled_apexes.push_back(off[i]);
    info.degree = info.assembled_apexes.size();
    return info;
}

struct SelfDualVerdict {
    bool selfdual = false;
    std::size_t pyramidal_degree = 0;
    std::string method;
    // column sums of the bouquet vectors examined by the criterion: the
    // assembled configuration's bouquets in the non-pyramidal case, the
    // non-free ground part's in the pyramidal case
    std::vector<Int> bouquet_sums;
};

/** Decide self-duality.  Non-pyramidal configurations are self-dual iff
 *  every bouquet vector sums to zero; pyramidal ones iff the ground is
 *  exactly k-pyramidal for k total repetitions and the non-free ground
 *  part passes the zero-sum test.  Only projective configurations are
 *  accepted. */
inline SelfDualVerdict is_selfdual(const MultisetConfig& m) {
    IntMat a = m.assemble();
    if (!allones_in_rowspan(a))
        throw hypothesis_error(
            "self-duality: configuration is not projective (all-ones vector outside the row span)");
    PyramidalityInfo info = pyramidality_of_multiset(m);
    SelfDualVerdict v;
    v.pyramidal_degree = info.degree;
    if (info.degree == 0) {
        v.method = "bouquet column sums";
        BouquetDecomposition dec = bouquet_decompose(a);
        v.selfdual = true;
        for (const Bouquet& b : dec.bouquets) {
            Int s = 0;
            for (std::size_t i : b.members) s += b.c[i];
            if (s != 0) v.selfdual = false;
            v.bouquet_sums.push_back(std::move(s));
        }
        return v;
    }
    v.method = "pyramidal split";
    if (info.ground_free_cols.size() != m.total_repetitions()) {
        v.selfdual = false;
        return v;
    }
    std::vector<std::size_t> nonfree;
    for (std::size_t i = 0; i < m.ground.cols; ++i)
        if (std::find(info.ground_free_cols.begin(), info.ground_free_cols.end(), i) ==
            info.ground_free_cols.end())
            nonfree.push_back(i);
    v.selfdual = true;
    if (nonfree.empty()) {
        // no kernel at all: dual degenerate, count it as non-self-dual
        v.selfdual = false;
        return v;
    }
    BouquetDecomposition dec = bouquet_decompose(submatrix_cols(m.ground, nonfree));
    for (const Bouquet& b : dec.bouquets) {
        Int s = 0;
        for (std::size_t i : b.members) s += b.c[i];
        if (s != 0) v.selfdual = false;
        v.bouquet_sums.push_back(std::move(s));
    }
    return v;
}

enum class Robustness {
    strongly_robust,
    weakly_robust_only,
    not_weakly_robust,
};

inline const char* to_string(Robustness r) {
    switch (r) {
        case Robustness::strongly_robust: return "strongly robust";
        case Robustness::weakly_robust_only: return "weakly robust, not strongly";
        case Robustness::not_weakly_robust: return "not weakly robust";
    }
    return "?";
}

struct RobustnessVerdict {
    Robustness tag = Robustness::strongly_robust;
    std::optional<SelfDualVerdict> selfdual;
    std::string method;
    std::string note;
    // when the Graver basis is not a minimal Markov basis: a Graver
    // element together with a semiconformal split certifying it
    std::vector<IntVec> witness;
};

namespace detail {

/** For a self-dual pyramidal multiset: produce (u, v, w) with u Graver,
 *  u = v + w semiconformal, v and w nonzero kernel elements. */
inline std::vector<IntVec> pyramidal_dispensable_witness(const MultisetConfig& m) {
    const std::size_t big_n = m.assembled_cols();
    std::vector<std::size_t> off = m.block_offsets();
    for (std::size_t i = 0; i < m.ground.cols; ++i) {
        if (m.mult[i] < 2) continue;
        IntVec u(big_n, 0), v(big_n, 0), w(big_n, 0);
        u[off[i]] = 1;
        u[off[i] + 2] = -1;
        v[off[i]] = 1;
        v[off[i] + 1] = -1;
        w[off[i] + 1] = 1;
        w[off[i] + 2] = -1;
        return {u, v, w};
    }
    // all multiplicities <= 1: some repeated column is non-free
    std::vector<std::size_t> free_cols = free_columns(m.ground);
    std::vector<IntVec> gr = graver_via_bouquet(m.ground);
    for (std::size_t i = 0; i < m.ground.cols; ++i) {
        if (m.mult[i] != 1) continue;
        if (std::find(free_cols.begin(), free_cols.end(), i) != free_cols.end()) continue;
        for (const IntVec& g : gr) {
            if (g[i] == 0) continue;
            IntVec gg = g[i] > 0 ? g : neg(g);
            IntVec u(big_n, 0);
            for (std::size_t j = 0; j < m.ground.cols; ++j) u[off[j]] = gg[j];
            IntVec v(big_n, 0);
            v[off[i]] = 1;
            v[off[i] + 1] = -1;
            IntVec w = sub(u, v);
            return {u, v, w};
        }
    }
    throw std::logic_error("pyramidal witness: structure contradicts self-duality");
}

}  // namespace detail

struct RobustnessOptions {
    std::size_t box_limit = 100000;
    std::size_t fiber_limit = 200000;
};

/** Classify robustness.  Self-dual configurations are decided by the
 *  structure theorems (always at least weakly robust; strongly iff
 *  non-pyramidal); otherwise mixed bouquets decide, and as a last
 *  resort the bases are compared directly at desk scale. */
inline RobustnessVerdict classify_robustness(const MultisetConfig& m,
                                             const RobustnessOptions& opt = {}) {
    RobustnessVerdict out;
    try {
        out.selfdual = is_selfdual(m);
    } catch (const hypothesis_error& e) {
        out.note = e.what();
    }
    if (out.selfdual && out.selfdual->selfdual) {
        if (out.selfdual->pyramidal_degree == 0) {
            out.tag = Robustness::strongly_robust;
            out.method = "self-dual and non-pyramidal";
        } else {
            out.tag = Robustness::weakly_robust_only;
            out.method = "self-dual and pyramidal";
            out.witness = detail::pyramidal_dispensable_witness(m);
        }
        return out;
    }
    IntMat a = m.assemble();
    BouquetDecomposition dec = bouquet_decompose(a);
    bool all_mixed = true;
    for (const Bouquet& b : dec.bouquets)
        if (b.kind == BouquetKind::non_mixed) { all_mixed = false; break; }
    if (all_mixed) {
        out.tag = Robustness::strongly_robust;
        out.method = "every bouquet mixed";
        return out;
    }
    std::vector<IntVec> gr = graver_via_bouquet(a);
    std::vector<IntVec> ind = indispensables(gr, opt.box_limit);
    if (ind == gr) {
        out.tag = Robustness::strongly_robust;
        out.method = "graver equals indispensables";
        return out;
    }
    std::vector<IntVec> um = universal_markov(gr, opt.box_limit);
    const std::vector<IntVec>& reduced = um == gr ? ind : um;
    for (const IntVec& u : gr) {
        if (std::binary_search(reduced.begin(), reduced.end(), u)) continue;
        bool strongly = um != gr;
        detail::has_split(gr, u, opt.box_limit, [&](const IntVec& v, const IntVec& w) {
            bool hit = strongly ? is_strongly_semiconformal_sum(u, v, w)
                                : is_semiconformal_sum(u, v, w);
            if (hit) out.witness = {u, v, w};
            return hit;
        });
        break;
    }
    if (um == gr) {
        out.tag = Robustness::weakly_robust_only;
        out.method = "graver equals universal Markov but not the indispensables";
    } else {
        out.tag = Robustness::not_weakly_robust;
        out.method = "graver exceeds the universal Markov basis";
        if (out.selfdual && out.selfdual->selfdual)
            throw std::logic_error("robustness: self-dual input classified not weakly robust");
    }
    return out;
}

/** Count of minimal Markov bases through the closed formula; requires at
 *  most one repeated column, the two-point ground fiber pattern, and
 *  (when repetitions are present) self-duality. */
inline Int count_minimal_markov_multiset_formula(const MultisetConfig& m) {
    if (m.total_repetitions() > 0) {
        SelfDualVerdict sd = is_selfdual(m);
        if (!sd.selfdual)
            throw hypothesis_error("count formula: configuration is not self-dual");
    }
    return markov_count_formula_raw(m, graver_via_bouquet(m.ground));
}

/** Size of any minimal Markov basis of a self-dual configuration:
 *  |Graver| when non-pyramidal, copies plus ground Graver elements when
 *  pyramidal. */
inline Int minimal_markov_size_formula(const MultisetConfig& m) {
    SelfDualVerdict sd = is_selfdual(m);
    if (!sd.selfdual)
        throw hypothesis_error("size formula: configuration is not self-dual");
    std::vector<IntVec> gr = graver_via_bouquet(m.ground);
    if (sd.pyramidal_degree == 0) return multiset_graver_count(m, gr);
    if (!two_point_ground_fibers(gr))
        throw hypothesis_error("size formula: ground fiber structure outside the pattern");
    return Int(m.total_repetitions()) + Int(gr.size());
}

}  // namespace toric
