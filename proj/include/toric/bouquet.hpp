#pragma once

#include <toric/linalg.hpp>

#include <map>

namespace toric {

enum class BouquetKind { free_bouquet, mixed, non_mixed };

inline const char* to_string(BouquetKind k) {
    switch (k) {
        case BouquetKind::free_bouquet: return "free";
        case BouquetKind::mixed: return "mixed";
        case BouquetKind::non_mixed: return "non-mixed";
    }
    return "?";
}

/** One parallelism class of Gale rows.  `c` is the full-length vector
 *  c_B supported on `members`; `a` is the column A c_B of the bouquet
 *  matrix. */
struct Bouquet {
    std::vector<std::size_t> members;
    BouquetKind kind = BouquetKind::non_mixed;
    IntVec c;
    IntVec a;
};

struct BouquetDecomposition {
    GaleRows gale;
    std::vector<Bouquet> bouquets;
    IntMat bouquet_matrix;  // m x s, column q = A c_{B_q}

    std::size_t size() const { return bouquets.size(); }
};

/** Rows of the Gale transform are parallel iff their primitive
 *  sign-canonical forms coincide; zero rows mark free columns. */
inline BouquetDecomposition bouquet_decompose(const IntMat& a) {
    BouquetDecomposition dec;
    dec.gale = gale_transform(a);
    const std::size_t n = a.cols;
    std::vector<std::size_t> free_cols;
    std::map<IntVec, std::vector<std::size_t>> classes;
    std::vector<IntVec> class_order;
    for (std::size_t i = 0; i < n; ++i) {
        const IntVec& g = dec.gale.rows[i];
        if (is_zero(g)) {
            free_cols.push_back(i);
            continue;
        }
        IntVec key = canonical_sign(g);
        Int c = content(key);
        for (Int& x : key) x /= c;
        auto [it, fresh] = classes.try_emplace(std::move(key));
        if (fresh) class_order.push_back(it->first);
        it->second.push_back(i);
    }
    if (!free_cols.empty()) {
        Bouquet b;
        b.members = free_cols;
        b.kind = BouquetKind::free_bouquet;
        b.c.assign(n, 0);
        for (std::size_t i : free_cols) b.c[i] = 1;
        dec.bouquets.push_back(std::move(b));
    }
    for (const IntVec& key : class_order) {
        const std::vector<std::size_t>& members = classes.at(key);
        Bouquet b;
        b.members = members;
        b.c.assign(n, 0);
        // first coordinate where every member row is nonzero; rows in one
        // class share their support, so the first support index works
        std::size_t j = 0;
        while (dec.gale.rows[members[0]][j] == 0) ++j;
        for (std::size_t i : members)
            if (dec.gale.rows[i][j] == 0)
                throw std::logic_error("bouquet members disagree on support");
        Int g = 0;
        for (std::size_t i : members) g = gcd_int(g, dec.gale.rows[i][j]);
        int eps = sign(dec.gale.rows[members[0]][j]);
        bool pos = false, negv = false;
        for (std::size_t i : members) {
            Int ci = eps * dec.gale.rows[i][j] / g;
            b.c[i] = ci;
            (ci > 0 ? pos : negv) = true;
        }
        b.kind = (pos && negv) ? BouquetKind::mixed : BouquetKind::non_mixed;
        dec.bouquets.push_back(std::move(b));
    }
    std::sort(dec.bouquets.begin(), dec.bouquets.end(),
              [](const Bouquet& x, const Bouquet& y) {
                  return x.members.front() < y.members.front();
              });
    dec.bouquet_matrix = IntMat(a.rows, dec.bouquets.size());
    for (std::size_t q = 0; q < dec.bouquets.size(); ++q) {
        dec.bouquets[q].a = a.mul(dec.bouquets[q].c);
        dec.bouquet_matrix.set_col(q, dec.bouquets[q].a);
    }
    return dec;
}

/** The kernel isomorphism u |-> sum_q u_q c_{B_q}.  Rejects u outside
 *  ker(A_B): the map is only meaningful on kernel elements. */
inline IntVec lift_kernel(const BouquetDecomposition& dec, const IntVec& u) {
    if (u.size() != dec.bouquets.size())
        throw hypothesis_error("lift: length differs from bouquet count");
    if (!is_zero(dec.bouquet_matrix.mul(u)))
        throw hypothesis_error("lift: vector is not in the kernel of the bouquet matrix");
    const std::size_t n = dec.gale.n;
    IntVec v(n, 0);
    for (std::size_t q = 0; q < dec.bouquets.size(); ++q) {
        if (u[q] == 0) continue;
        for (std::size_t i : dec.bouquets[q].members)
            v[i] += u[q] * dec.bouquets[q].c[i];
    }
    return v;
}

/** Columns whose Gale row vanishes; their count is the pyramidal degree. */
inline std::vector<std::size_t> free_columns(const IntMat& a) {
    GaleRows g = gale_transform(a);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.cols; ++i)
        if (is_zero(g.rows[i])) out.push_back(i);
    return out;
}

}  // namespace toric
