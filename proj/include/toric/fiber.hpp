#pragma once

#include <toric/lp.hpp>

#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace toric {

/** All z >= 0 with A z = b.  Needs a positive grading (otherwise fibers
 *  can be infinite, and the input is refused); the grading caps every
 *  coordinate during the depth-first scan.  Output is sorted. */
inline std::vector<IntVec> enumerate_fiber(const IntMat& a, const IntVec& b,
                                           std::size_t point_limit = 200000) {
    if (b.size() != a.rows) throw hypothesis_error("fiber: degree length mismatch");
    auto grading = positive_grading(a);
    if (!grading)
        throw hypothesis_error("fiber: kernel meets the nonnegative orthant, fibers are infinite");
    const std::size_t n = a.cols;
    Int weight = dot(grading->y, b);
    std::vector<IntVec> out;
    if (weight < 0) return out;
    std::vector<IntVec> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = a.col(j);
    IntVec residual = b;
    IntVec z(n, 0);
    std::size_t nodes = 0;
    std::function<void(std::size_t, Int)> dfs = [&](std::size_t j, Int room) {
        if (++nodes > 10000000)
            throw hypothesis_error("fiber: search budget exceeded");
        if (j == n) {
            if (is_zero(residual)) {
                if (out.size() >= point_limit)
                    throw hypothesis_error("fiber: enumeration infeasible, too many points");
                out.push_back(z);
            }
            return;
        }
        Int cap = room / grading->w[j];
        dfs(j + 1, room);
        for (Int t = 1; t <= cap; ++t) {
            z[j] += 1;
            for (std::size_t i = 0; i < a.rows; ++i) residual[i] -= cols[j][i];
            dfs(j + 1, room - t * grading->w[j]);
        }
        if (cap > 0) {
            for (std::size_t i = 0; i < a.rows; ++i)
                residual[i] += cap * cols[j][i];
            z[j] = 0;
        }
    };
    dfs(0, weight);
    std::sort(out.begin(), out.end());
    return out;
}

/** Reachable set from z0 under moves +/-g that stay nonnegative.  When
 *  the moves contain a Graver basis of A this is exactly the fiber of
 *  A z0, without any search over degrees. */
inline std::vector<IntVec> fiber_from_point(const IntVec& z0,
                                            const std::vector<IntVec>& moves,
                                            std::size_t point_limit = 200000) {
    std::set<IntVec> seen;
    std::vector<IntVec> queue{z0};
    seen.insert(z0);
    while (!queue.empty()) {
        IntVec z = std::move(queue.back());
        queue.pop_back();
        for (const IntVec& g : moves) {
            for (int s : {+1, -1}) {
                IntVec w(z.size());
                bool ok = true;
                for (std::size_t i = 0; i < z.size(); ++i) {
                    w[i] = z[i] - s * g[i];
                    if (w[i] < 0) { ok = false; break; }
                }
                if (!ok) continue;
                if (seen.insert(w).second) {
                    if (seen.size() > point_limit)
                        throw hypothesis_error("fiber: too many points to collect");
                    queue.push_back(std::move(w));
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

/** Partition fiber points into connectivity classes of the move graph:
 *  g applies at z when z >= g+ and z != g+ (and symmetrically for -g).
 *  Returns sorted classes, ordered by their lexicographically least
 *  member. */
inline std::vector<std::vector<IntVec>> fiber_components(
    const std::vector<IntVec>& points, const std::vector<IntVec>& moves) {
    std::map<IntVec, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
    std::vector<std::size_t> parent(points.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < points.size(); ++i) {
        const IntVec& z = points[i];
        for (const IntVec& g : moves) {
            IntVec gp = positive_part(g);
            if (!leq(gp, z) || gp == z) continue;
            IntVec w = sub(z, g);
            bool ok = true;
            for (const Int& x : w)
                if (x < 0) { ok = false; break; }
            if (!ok) continue;
            auto it = index.find(w);
            if (it == index.end()) continue;
            parent[find(i)] = find(it->second);
        }
    }
    std::map<std::size_t, std::vector<IntVec>> classes;
    for (std::size_t i = 0; i < points.size(); ++i)
        classes[find(i)].push_back(points[i]);
    std::vector<std::vector<IntVec>> out;
    for (auto& [root, pts] : classes) {
        std::sort(pts.begin(), pts.end());
        out.push_back(std::move(pts));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return out;
}

}  // namespace toric
