#pragma once

#include <toric/bouquet.hpp>

namespace toric {

/** Data for one block of a generalized Lawrence matrix: a column a_i of
 *  the contracted configuration, the primitive vector c_i spanning the
 *  block kernel, and integers lambda_i with <lambda_i, c_i> = 1. */
struct GlmBlock {
    IntVec a;       // length d
    IntVec c;       // length m_i, primitive, all entries nonzero
    IntVec lambda;  // length m_i
};

struct GlmSpec {
    std::size_t d = 0;
    std::vector<GlmBlock> blocks;
};

inline void validate(const GlmSpec& s) {
    if (s.blocks.empty()) throw hypothesis_error("glm: no blocks");
    for (const GlmBlock& b : s.blocks) {
        if (b.a.size() != s.d) throw hypothesis_error("glm: column length differs from d");
        if (b.c.empty()) throw hypothesis_error("glm: empty block vector");
        for (const Int& x : b.c)
            if (x == 0) throw hypothesis_error("glm: block vector has a zero entry");
        if (content(b.c) != 1) throw hypothesis_error("glm: block vector is not primitive");
        if (b.lambda.size() != b.c.size())
            throw hypothesis_error("glm: lambda length differs from block size");
        if (dot(b.lambda, b.c) != 1)
            throw hypothesis_error("glm: <lambda, c> must be 1");
    }
}

/** Fill in missing lambdas via the extended gcd recipe. */
inline GlmSpec with_lambdas(GlmSpec s) {
    for (GlmBlock& b : s.blocks)
        if (b.lambda.empty()) b.lambda = gcd_combination(b.c);
    return s;
}

/** Assemble the generalized Lawrence matrix: a top band of d rows with
 *  entries lambda_ij (a_i)_t, then per block i a band of m_i - 1 rows
 *  whose kernel is spanned by c_i (row s has -c_{i,s+1} in the block's
 *  first column and c_{i,1} on the diagonal). */
inline IntMat build_glm(const GlmSpec& spec_in) {
    GlmSpec spec = with_lambdas(spec_in);
    validate(spec);
    std::size_t cols = 0, extra = 0;
    for (const GlmBlock& b : spec.blocks) {
        cols += b.c.size();
        extra += b.c.size() - 1;
    }
    IntMat m(spec.d + extra, cols);
    std::size_t col0 = 0, row0 = spec.d;
    for (const GlmBlock& b : spec.blocks) {
        const std::size_t mi = b.c.size();
        for (std::size_t t = 0; t < spec.d; ++t)
            for (std::size_t j = 0; j < mi; ++j)
                m(t, col0 + j) = b.lambda[j] * b.a[t];
        for (std::size_t s = 0; s + 1 < mi; ++s) {
            m(row0 + s, col0) = -b.c[s + 1];
            m(row0 + s, col0 + s + 1) = b.c[0];
        }
        col0 += mi;
        row0 += mi - 1;
    }
    return m;
}

/** Read a matrix's bouquet structure back as GLM data.  `order[q]` is the
 *  original column sitting at position q of the rebuilt matrix; the
 *  rebuilt matrix has exactly the kernel of `a` up to that permutation. */
struct GlmDecomposition {
    GlmSpec spec;
    std::vector<std::size_t> order;
};

inline GlmDecomposition decompose_to_glm(const IntMat& a) {
    BouquetDecomposition dec = bouquet_decompose(a);
    GlmDecomposition out;
    out.spec.d = a.rows;
    for (const Bouquet& b : dec.bouquets) {
        GlmBlock blk;
        blk.a = b.a;
        for (std::size_t i : b.members) {
            blk.c.push_back(b.c[i]);
            out.order.push_back(i);
        }
        blk.lambda = gcd_combination(blk.c);
        out.spec.blocks.push_back(std::move(blk));
    }
    return out;
}

/** Ground matrix of the pyramidal self-dual family: one apex block with a
 *  strictly positive primitive vector over a new coordinate, glued onto a
 *  bouquet description whose column sums all vanish. */
struct FamilySpec {
    GlmSpec base;    // blocks must have zero column sums
    IntVec apex_c;   // length k, strictly positive, primitive
    IntVec apex_lambda;  // optional, derived when empty
};

inline IntMat build_selfdual_family(const FamilySpec& fam) {
    GlmSpec base = with_lambdas(fam.base);
    validate(base);
    for (const GlmBlock& b : base.blocks) {
        Int s = 0;
        for (const Int& x : b.c) s += x;
        if (s != 0)
            throw hypothesis_error("family: base block sums must vanish");
    }
    if (fam.apex_c.empty())
        throw hypothesis_error("family: apex vector is empty");
    for (const Int& x : fam.apex_c)
        if (x <= 0) throw hypothesis_error("family: apex vector must be strictly positive");
    GlmSpec spec;
    spec.d = base.d + 1;
    GlmBlock apex;
    apex.a.assign(spec.d, 0);
    apex.a[0] = 1;
    apex.c = fam.apex_c;
    apex.lambda = fam.apex_lambda;
    spec.blocks.push_back(std::move(apex));
    for (const GlmBlock& b : base.blocks) {
        GlmBlock nb;
        nb.a.assign(spec.d, 0);
        for (std::size_t t = 0; t < base.d; ++t) nb.a[t + 1] = b.a[t];
        nb.c = b.c;
        nb.lambda = b.lambda;
        spec.blocks.push_back(std::move(nb));
    }
    return build_glm(spec);
}

}  // namespace toric
