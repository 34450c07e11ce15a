#pragma once

#include <toric/glm.hpp>
#include <toric/multiset.hpp>

#include <json.hpp>

namespace toric {

using nlohmann::json;

inline json json_from_int(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(x));
    return json(x.str());
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw hypothesis_error("json: expected an integer or a decimal string");
}

inline json json_from_vec(const IntVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(json_from_int(x));
    return out;
}

inline IntVec vec_from_json(const json& j) {
    if (!j.is_array()) throw hypothesis_error("json: expected an array of integers");
    IntVec v;
    for (const json& x : j) v.push_back(int_from_json(x));
    return v;
}

inline json json_from_vecs(const std::vector<IntVec>& vs) {
    json out = json::array();
    for (const IntVec& v : vs) out.push_back(json_from_vec(v));
    return out;
}

inline json json_from_matrix(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) rows.push_back(json_from_vec(m.row(i)));
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

inline IntMat matrix_from_json(const json& j) {
    const json& rows = j.is_object() ? j.at("entries") : j;
    if (!rows.is_array()) throw hypothesis_error("json: expected a matrix");
    std::vector<IntVec> data;
    for (const json& r : rows) data.push_back(vec_from_json(r));
    std::size_t cols = data.empty() ? 0 : data[0].size();
    IntMat m(data.size(), cols);
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i].size() != cols)
            throw hypothesis_error("json: ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = data[i][k];
    }
    return m;
}

/** Block description of a generalized Lawrence matrix: "a_prime" lists the
 *  contracted columns, "c_prime" the block kernel vectors, and the optional
 *  "lambdas" the dual vectors (derived when absent). */
inline GlmSpec glm_spec_from_json(const json& j) {
    GlmSpec s;
    s.d = j.at("d").get<std::size_t>();
    const json& as = j.at("a_prime");
    const json& cs = j.at("c_prime");
    if (!as.is_array() || !cs.is_array() || as.size() != cs.size())
        throw hypothesis_error("glm spec: a_prime and c_prime must list one entry per block");
    for (std::size_t q = 0; q < as.size(); ++q) {
        GlmBlock blk;
        blk.a = vec_from_json(as[q]);
        blk.c = vec_from_json(cs[q]);
        s.blocks.push_back(std::move(blk));
    }
    if (j.contains("lambdas")) {
        const json& ls = j.at("lambdas");
        if (!ls.is_array() || ls.size() != s.blocks.size())
            throw hypothesis_error("glm spec: lambdas must list one entry per block");
        for (std::size_t q = 0; q < s.blocks.size(); ++q)
            s.blocks[q].lambda = vec_from_json(ls[q]);
    }
    return s;
}

inline json json_from_glm_spec(const GlmSpec& s) {
    json as = json::array();
    json cs = json::array();
    json ls = json::array();
    for (const GlmBlock& b : s.blocks) {
        as.push_back(json_from_vec(b.a));
        cs.push_back(json_from_vec(b.c));
        ls.push_back(json_from_vec(b.lambda));
    }
    return json{{"d", s.d},
                {"a_prime", std::move(as)},
                {"c_prime", std::move(cs)},
                {"lambdas", std::move(ls)}};
}

inline bool is_family_spec_json(const json& j) { return j.contains("c_prime_0"); }

/** Pyramidal family description: the base blocks as in a plain spec plus
 *  the apex vector "c_prime_0" of length "k" and, optionally, "lambda_0"
 *  and per-column "multiplicities". */
inline FamilySpec family_spec_from_json(const json& j) {
    FamilySpec f;
    f.base = glm_spec_from_json(j);
    f.apex_c = vec_from_json(j.at("c_prime_0"));
    if (j.contains("k") && j.at("k").get<std::size_t>() != f.apex_c.size())
        throw hypothesis_error("family spec: k must equal the length of c_prime_0");
    if (j.contains("lambda_0")) f.apex_lambda = vec_from_json(j.at("lambda_0"));
    return f;
}

inline json json_from_family_spec(const FamilySpec& f) {
    json out = json_from_glm_spec(f.base);
    out["k"] = f.apex_c.size();
    out["c_prime_0"] = json_from_vec(f.apex_c);
    if (!f.apex_lambda.empty()) out["lambda_0"] = json_from_vec(f.apex_lambda);
    return out;
}

/** Multiplicities attached to a family or matrix description; empty when
 *  the key is absent. */
inline std::vector<std::size_t> multiplicities_from_json(const json& j) {
    std::vector<std::size_t> mult;
    if (!j.contains("multiplicities")) return mult;
    for (const json& x : j.at("multiplicities")) mult.push_back(x.get<std::size_t>());
    return mult;
}

}  // namespace toric
