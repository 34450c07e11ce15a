#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/** Raised when an input violates a documented hypothesis of an operation
 *  (non-pointed kernel, non-projective configuration, pattern gate of a
 *  closed-form counting formula, ...).  The command line tool maps this
 *  to exit code 2; plain errors exit with 1. */
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int sign(const Int& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

/** Extended gcd: returns g = gcd(a,b) >= 0 together with x, y such that
 *  a*x + b*y = g.  The Bezout pair is reduced so that |x| is as small as
 *  possible (ties towards the smaller |y|), which keeps the coefficients
 *  produced by gcd_combination tame. */
struct XgcdResult {
    Int g, x, y;
};

inline XgcdResult xgcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    // minimise |x| among x = old_s + k*(b/g), adjusting y accordingly
    if (old_r != 0 && b != 0) {
        Int step = b / old_r;
        if (step != 0) {
            Int k = -old_s / step;
            for (const Int& d : {Int(k - 1), k, Int(k + 1)}) {
                Int cand_x = old_s + d * step;
                if (abs_int(cand_x) < abs_int(old_s) ||
                    (abs_int(cand_x) == abs_int(old_s) && cand_x > old_s)) {
                    old_s = cand_x;
                    old_t = (old_r - a * cand_x) / b;
                }
            }
        }
    }
    return {old_r, old_s, old_t};
}

/** Deterministic Bezout expansion of 1 = sum lambda_j * c_j for a primitive
 *  integer vector c.  Left fold of the extended gcd: once the running gcd
 *  reaches 1 all later coefficients are 0.  Rejects vectors whose gcd is
 *  not 1 and the empty vector. */
inline std::vector<Int> gcd_combination(const std::vector<Int>& c) {
    if (c.empty()) throw hypothesis_error("gcd_combination: empty vector");
    std::vector<Int> lambda(c.size(), 0);
    Int g = c[0];
    lambda[0] = 1;
    if (g < 0) { g = -g; lambda[0] = -1; }
    for (std::size_t j = 1; j < c.size(); ++j) {
        if (g == 1) break;
        XgcdResult e = xgcd(g, c[j]);
        for (std::size_t t = 0; t < j; ++t) lambda[t] *= e.x;
        lambda[j] = e.y;
        g = e.g;
    }
    if (g != 1)
        throw hypothesis_error("gcd_combination: entries are not coprime (gcd = " +
                               g.str() + ")");
    return lambda;
}

/** Exact binomial coefficient C(n, k) for n, k >= 0. */
inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int num = 1, den = 1;
    for (Int i = 0; i < kk; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace toric
