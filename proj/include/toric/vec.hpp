#pragma once

#include <toric/arith.hpp>

#include <string>
#include <vector>

namespace toric {

using IntVec = std::vector<Int>;

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec neg(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVec scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int one_norm(const IntVec& v) {
    Int s = 0;
    for (const Int& x : v) s += abs_int(x);
    return s;
}

/** Componentwise max(v, 0): the monomial exponent of the positive part. */
inline IntVec positive_part(const IntVec& v) {
    IntVec r(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) r[i] = v[i];
    return r;
}

inline IntVec negative_part(const IntVec& v) {
    IntVec r(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0) r[i] = -v[i];
    return r;
}

inline bool leq(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::vector<std::size_t> support(const IntVec& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

inline bool is_primitive(const IntVec& v) { return content(v) == 1; }

/** One representative per +/- pair: first nonzero coordinate positive. */
inline IntVec canonical_sign(IntVec v) {
    for (const Int& x : v) {
        if (x > 0) return v;
        if (x < 0) return neg(v);
    }
    return v;
}

inline bool is_canonical_sign(const IntVec& v) {
    for (const Int& x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return true;
}

/** u = v + w with u+ = v+ + w+ and u- = v- + w- (no sign cancellation). */
inline bool is_conformal_sum(const IntVec& u, const IntVec& v, const IntVec& w) {
    if (u.size() != v.size() || u.size() != w.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != v[i] + w[i]) return false;
        if (v[i] > 0 && w[i] < 0) return false;
        if (v[i] < 0 && w[i] > 0) return false;
    }
    return true;
}

/** v squares conformally below u: sign-compatible and |v_i| <= |u_i|.
 *  Equivalent to v+ <= u+ and v- <= u-. */
inline bool conformal_leq(const IntVec& v, const IntVec& u) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 0 && u[i] < v[i]) return false;
        if (v[i] < 0 && u[i] > v[i]) return false;
    }
    return true;
}

/** u = v +sc w: v_i > 0 implies w_i >= 0 (equivalently w_i < 0 implies
 *  v_i <= 0).  Order matters: the cancellation v positive against w
 *  negative is forbidden, the opposite one is allowed. */
inline bool is_semiconformal_sum(const IntVec& u, const IntVec& v, const IntVec& w) {
    if (u.size() != v.size() || u.size() != w.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != v[i] + w[i]) return false;
        if (v[i] > 0 && w[i] < 0) return false;
    }
    return true;
}

/** u = v +ssc w: u+ >= v+ and u- >= w- componentwise, both strictly as
 *  vectors (at least one strict coordinate in each comparison). */
inline bool is_strongly_semiconformal_sum(const IntVec& u, const IntVec& v,
                                          const IntVec& w) {
    if (u.size() != v.size() || u.size() != w.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i] + w[i]) return false;
    IntVec up = positive_part(u), vp = positive_part(v);
    IntVec um = negative_part(u), wm = negative_part(w);
    return leq(vp, up) && vp != up && leq(wm, um) && wm != um;
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    s += ")";
    return s;
}

}  // namespace toric
