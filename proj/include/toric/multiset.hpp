#pragma once

#include <toric/matrix.hpp>

#include <optional>

namespace toric {

/** A configuration with repeated columns: a ground matrix with pairwise
 *  distinct columns plus a repetition count k_i >= 0 per column (k_i
 *  extra copies, k_i + 1 columns total). */
struct MultisetConfig {
    IntMat ground;
    std::vector<std::size_t> mult;

    MultisetConfig() : ground(0, 0) {}
    MultisetConfig(IntMat g, std::vector<std::size_t> k)
        : ground(std::move(g)), mult(std::move(k)) {
        if (mult.size() != ground.cols)
            throw hypothesis_error("multiset: one multiplicity per ground column");
        for (std::size_t i = 0; i < ground.cols; ++i)
            for (std::size_t j = i + 1; j < ground.cols; ++j)
                if (ground.col(i) == ground.col(j))
                    throw hypothesis_error("multiset: ground columns must be distinct");
    }

    std::size_t total_repetitions() const {
        std::size_t k = 0;
        for (std::size_t ki : mult) k += ki;
        return k;
    }

    std::size_t assembled_cols() const { return ground.cols + total_repetitions(); }

    /** Start of column i's copy block inside the assembled matrix. */
    std::vector<std::size_t> block_offsets() const {
        std::vector<std::size_t> off(ground.cols + 1, 0);
        for (std::size_t i = 0; i < ground.cols; ++i)
            off[i + 1] = off[i] + mult[i] + 1;
        return off;
    }

    /** Copies of each ground column laid out adjacently. */
    IntMat assemble() const {
        IntMat a(ground.rows, assembled_cols());
        std::size_t at = 0;
        for (std::size_t i = 0; i < ground.cols; ++i) {
            IntVec c = ground.col(i);
            for (std::size_t s = 0; s <= mult[i]; ++s) a.set_col(at++, c);
        }
        return a;
    }

    /** Sum each copy block: the projection onto the ground coordinates. */
    IntVec project(const IntVec& u) const {
        if (u.size() != assembled_cols())
            throw hypothesis_error("project: length mismatch");
        IntVec v(ground.cols, 0);
        std::size_t at = 0;
        for (std::size_t i = 0; i < ground.cols; ++i)
            for (std::size_t s = 0; s <= mult[i]; ++s) v[i] += u[at++];
        return v;
    }
};

/** Group equal columns of `a` into a multiset configuration.  Ground
 *  columns appear in order of first occurrence; `order` maps assembled
 *  positions back to the original column indices. */
struct FoldResult {
    MultisetConfig config;
    std::vector<std::size_t> order;
    bool folded = false;  // true iff some column repeats
};

inline FoldResult fold_repeated_columns(const IntMat& a) {
    std::vector<IntVec> ground_cols;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < a.cols; ++j) {
        IntVec c = a.col(j);
        std::size_t g = ground_cols.size();
        for (std::size_t i = 0; i < ground_cols.size(); ++i)
            if (ground_cols[i] == c) { g = i; break; }
        if (g == ground_cols.size()) {
            ground_cols.push_back(std::move(c));
            groups.emplace_back();
        }
        groups[g].push_back(j);
    }
    FoldResult r;
    IntMat ground(a.rows, ground_cols.size());
    std::vector<std::size_t> mult(ground_cols.size());
    for (std::size_t i = 0; i < ground_cols.size(); ++i) {
        ground.set_col(i, ground_cols[i]);
        mult[i] = groups[i].size() - 1;
        if (mult[i] > 0) r.folded = true;
        for (std::size_t j : groups[i]) r.order.push_back(j);
    }
    r.config = MultisetConfig(std::move(ground), std::move(mult));
    return r;
}

}  // namespace toric
