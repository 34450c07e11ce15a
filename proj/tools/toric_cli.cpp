#include <toric/json_io.hpp>
#include <toric/toric.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace toric;

struct Options {
    std::string input;
    std::string format = "text";
    std::string out;
    std::string mult_csv;
    std::size_t box = 100000;
    std::size_t fiber_limit = 200000;
    std::size_t enum_limit = 5000000;
    bool verify = false;
    bool oracle = false;
};

std::string unescape_newlines(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == 'n') {
            out += '\n';
            ++i;
        } else {
            out += s[i];
        }
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/** The input is a file path when one exists; otherwise it is taken as an
 *  inline matrix whose literal "\n" sequences separate lines. */
IntMat load_matrix(const std::string& input) {
    std::string text = std::filesystem::exists(input) ? slurp(input)
                                                      : unescape_newlines(input);
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return matrix_from_json(json::parse(text));
    return parse_matrix_text(text);
}

json load_spec_json(const std::string& input) {
    std::string text = std::filesystem::exists(input) ? slurp(input) : input;
    return json::parse(text);
}

std::vector<std::size_t> parse_mult(const std::string& csv) {
    std::vector<std::size_t> mult;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            mult.push_back(v);
        } catch (const std::exception&) {
            throw std::runtime_error("bad multiplicity entry '" + item + "'");
        }
    }
    return mult;
}

void emit(const Options& opt, const std::string& content) {
    if (opt.out.empty()) {
        std::cout << content;
        return;
    }
    std::string tmp = opt.out + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << content;
    }
    std::filesystem::rename(tmp, opt.out);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string vec_line(const IntVec& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
    return out.str();
}

std::string basis_text(const std::vector<IntVec>& vs) {
    std::string out;
    for (const IntVec& v : vs) {
        out += vec_line(v);
        out += '\n';
    }
    return out;
}

struct Loaded {
    MultisetConfig config;
    std::vector<std::size_t> order;  // assembled position -> input coordinate
    bool folded = false;
};

Loaded load_config(const Options& opt) {
    IntMat a = load_matrix(opt.input);
    if (!opt.mult_csv.empty()) {
        MultisetConfig m(std::move(a), parse_mult(opt.mult_csv));
        std::vector<std::size_t> order(m.assembled_cols());
        std::iota(order.begin(), order.end(), 0);
        return {std::move(m), std::move(order), false};
    }
    FoldResult f = fold_repeated_columns(a);
    if (f.folded)
        std::cerr << "notice: repeated columns folded into a multiset configuration ("
                  << f.config.ground.cols << " distinct columns)\n";
    return {std::move(f.config), std::move(f.order), f.folded};
}

IntMat load_assembled(const Options& opt) {
    IntMat a = load_matrix(opt.input);
    if (opt.mult_csv.empty()) return a;
    return MultisetConfig(std::move(a), parse_mult(opt.mult_csv)).assemble();
}

bool identity_order(const std::vector<std::size_t>& order) {
    for (std::size_t p = 0; p < order.size(); ++p)
        if (order[p] != p) return false;
    return true;
}

IntVec to_input_coords(const IntVec& u, const std::vector<std::size_t>& order) {
    IntVec w(u.size(), 0);
    for (std::size_t p = 0; p < u.size(); ++p) w[order[p]] = u[p];
    return w;
}

std::vector<IntVec> basis_to_input(std::vector<IntVec> vs,
                                   const std::vector<std::size_t>& order) {
    if (identity_order(order)) return vs;
    for (IntVec& v : vs) v = canonical_sign(to_input_coords(v, order));
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::vector<IntVec> graver_of(const Loaded& lc, const Options& opt) {
    std::vector<IntVec> gr = lc.config.total_repetitions() == 0
                                 ? graver_via_bouquet(lc.config.ground)
                                 : multiset_graver(lc.config, opt.enum_limit);
    if (opt.oracle) {
        std::vector<IntVec> direct = graver_completion(lc.config.assemble());
        if (direct != gr)
            throw std::runtime_error("oracle: direct completion disagrees with the structured path");
        std::cerr << "oracle: direct completion agrees (" << gr.size() << " elements)\n";
    }
    return gr;
}

void check_markov_oracle(const IntMat& a, const std::vector<IntVec>& graver,
                         const std::vector<IntVec>& moves, std::size_t fiber_limit) {
    for (const IntVec& g : graver) {
        IntVec plus = positive_part(g);
        IntVec minus = negative_part(g);
        std::vector<IntVec> reach = fiber_from_point(plus, moves, fiber_limit);
        if (!std::binary_search(reach.begin(), reach.end(), minus))
            throw std::runtime_error("oracle: moves do not connect the fiber through " +
                                     vec_line(a.mul(plus)));
    }
    std::cerr << "oracle: moves connect every Graver fiber\n";
}

std::string basis_report(const Options& opt, const char* key,
                         const std::vector<IntVec>& vs) {
    if (opt.format == "json") {
        json j;
        j[key] = json_from_vecs(vs);
        j["count"] = std::to_string(vs.size());
        return dump(j);
    }
    return basis_text(vs);
}

int cmd_gale(const Options& opt) {
    IntMat a = load_assembled(opt);
    GaleRows g = gale_transform(a);
    if (opt.format == "json") {
        json j{{"columns", g.n}, {"rank", g.r}, {"gale_rows", json_from_vecs(g.rows)}};
        emit(opt, dump(j));
    } else {
        emit(opt, matrix_to_text(g.basis));
    }
    return 0;
}

json bouquets_json(const BouquetDecomposition& dec) {
    json arr = json::array();
    for (const Bouquet& b : dec.bouquets)
        arr.push_back(json{{"members", b.members},
                           {"kind", to_string(b.kind)},
                           {"c", json_from_vec(b.c)},
                           {"a", json_from_vec(b.a)}});
    return arr;
}

int cmd_bouquets(const Options& opt) {
    IntMat a = load_assembled(opt);
    BouquetDecomposition dec = bouquet_decompose(a);
    if (opt.format == "json") {
        json j{{"bouquets", bouquets_json(dec)},
               {"bouquet_matrix", json_from_matrix(dec.bouquet_matrix)}};
        emit(opt, dump(j));
    } else {
        std::string out;
        for (std::size_t q = 0; q < dec.bouquets.size(); ++q) {
            const Bouquet& b = dec.bouquets[q];
            out += "bouquet " + std::to_string(q) + ": members";
            for (std::size_t i : b.members) out += ' ' + std::to_string(i);
            out += "; kind ";
            out += to_string(b.kind);
            out += "; c " + vec_line(b.c) + "; a " + vec_line(b.a) + "\n";
        }
        emit(opt, out);
    }
    return 0;
}

void verify_glm_round_trip(const IntMat& a) {
    GlmDecomposition dec = decompose_to_glm(a);
    IntMat rebuilt = build_glm(dec.spec);
    if (rebuilt.cols != a.cols)
        throw std::runtime_error("verify: rebuilt matrix has a different column count");
    IntMat ka = kernel_lattice_basis(a);
    IntMat kr = kernel_lattice_basis(rebuilt);
    if (ka.cols != kr.cols)
        throw std::runtime_error("verify: kernel ranks differ across the round trip");
    for (std::size_t j = 0; j < kr.cols; ++j) {
        IntVec u(rebuilt.cols, 0);
        for (std::size_t q = 0; q < rebuilt.cols; ++q) u[q] = kr(q, j);
        if (!is_zero(a.mul(to_input_coords(u, dec.order))))
            throw std::runtime_error("verify: rebuilt kernel leaves the original kernel");
    }
    for (std::size_t j = 0; j < ka.cols; ++j) {
        IntVec w(a.cols, 0);
        for (std::size_t q = 0; q < a.cols; ++q) w[q] = ka(dec.order[q], j);
        if (!is_zero(rebuilt.mul(w)))
            throw std::runtime_error("verify: original kernel leaves the rebuilt kernel");
    }
    std::cerr << "verify: kernel preserved across the build/decompose round trip\n";
}

int cmd_glm_build(const Options& opt) {
    json spec = load_spec_json(opt.input);
    IntMat a;
    if (is_family_spec_json(spec)) {
        a = build_selfdual_family(family_spec_from_json(spec));
        std::vector<std::size_t> mult = multiplicities_from_json(spec);
        if (!mult.empty())
            std::cerr << "notice: the glm spec lists multiplicities; emitting the ground "
                         "matrix (pass them to analyze via --mult)\n";
    } else {
        a = build_glm(glm_spec_from_json(spec));
    }
    if (opt.verify || opt.oracle) verify_glm_round_trip(a);
    emit(opt, opt.format == "json" ? dump(json_from_matrix(a)) : matrix_to_text(a));
    return 0;
}

int cmd_glm_decompose(const Options& opt) {
    IntMat a = load_assembled(opt);
    GlmDecomposition dec = decompose_to_glm(a);
    if (opt.verify || opt.oracle) verify_glm_round_trip(a);
    if (opt.format == "json") {
        json j = json_from_glm_spec(dec.spec);
        j["column_order"] = dec.order;
        emit(opt, dump(j));
    } else {
        std::string out = "d " + std::to_string(dec.spec.d) + "\n";
        for (std::size_t q = 0; q < dec.spec.blocks.size(); ++q) {
            const GlmBlock& b = dec.spec.blocks[q];
            out += "block " + std::to_string(q) + ": a " + vec_line(b.a) + "; c " +
                   vec_line(b.c) + "; lambda " + vec_line(b.lambda) + "\n";
        }
        out += "column order";
        for (std::size_t i : dec.order) out += ' ' + std::to_string(i);
        out += '\n';
        emit(opt, out);
    }
    return 0;
}

int cmd_graver(const Options& opt) {
    Loaded lc = load_config(opt);
    std::vector<IntVec> gr = basis_to_input(graver_of(lc, opt), lc.order);
    emit(opt, basis_report(opt, "graver", gr));
    return 0;
}

int cmd_circuits(const Options& opt) {
    IntMat a = load_assembled(opt);
    std::vector<IntVec> cs = circuits(a);
    emit(opt, basis_report(opt, "circuits", cs));
    return 0;
}

int cmd_markov(const Options& opt) {
    Loaded lc = load_config(opt);
    IntMat a = lc.config.assemble();
    std::vector<IntVec> gr = graver_of(lc, opt);
    MarkovAnalysis an = markov_analysis(a, gr, opt.fiber_limit);
    if (opt.oracle) check_markov_oracle(a, gr, an.moves, opt.fiber_limit);
    std::vector<IntVec> moves = basis_to_input(an.moves, lc.order);
    if (opt.format == "json") {
        json betti = json::array();
        for (const MarkovAnalysis::BettiFiber& f : an.betti) {
            json sizes = json::array();
            for (const Int& s : f.component_sizes) sizes.push_back(s.str());
            betti.push_back(json{{"degree", json_from_vec(f.degree)},
                                 {"component_sizes", std::move(sizes)}});
        }
        json j{{"markov", json_from_vecs(moves)},
               {"count", std::to_string(moves.size())},
               {"markov_bases", an.basis_count.str()},
               {"betti", std::move(betti)}};
        emit(opt, dump(j));
    } else {
        emit(opt, basis_text(moves));
    }
    return 0;
}

int cmd_indispensable(const Options& opt) {
    Loaded lc = load_config(opt);
    std::vector<IntVec> ind = indispensables(graver_of(lc, opt), opt.box);
    emit(opt, basis_report(opt, "indispensable", basis_to_input(ind, lc.order)));
    return 0;
}

int cmd_universal_markov(const Options& opt) {
    Loaded lc = load_config(opt);
    std::vector<IntVec> um = universal_markov(graver_of(lc, opt), opt.box);
    emit(opt, basis_report(opt, "universal_markov", basis_to_input(um, lc.order)));
    return 0;
}

json selfdual_json(const SelfDualVerdict& v) {
    json sums = json::array();
    for (const Int& s : v.bouquet_sums) sums.push_back(s.str());
    return json{{"selfdual", v.selfdual},
                {"path", v.method},
                {"pyramidality", v.pyramidal_degree},
                {"bouquet_sums", std::move(sums)}};
}

int cmd_selfdual(const Options& opt) {
    Loaded lc = load_config(opt);
    SelfDualVerdict v = is_selfdual(lc.config);
    if (opt.format == "json") {
        emit(opt, dump(selfdual_json(v)));
    } else {
        std::string out = std::string("self-dual: ") + (v.selfdual ? "yes" : "no") + "\n";
        out += "path: " + v.method + "\n";
        out += "pyramidality: " + std::to_string(v.pyramidal_degree) + "\n";
        emit(opt, out);
    }
    return 0;
}

json witness_json(const std::vector<IntVec>& witness,
                  const std::vector<std::size_t>& order) {
    json arr = json::array();
    for (const IntVec& w : witness) arr.push_back(json_from_vec(to_input_coords(w, order)));
    return arr;
}

int cmd_robust(const Options& opt) {
    Loaded lc = load_config(opt);
    RobustnessVerdict r = classify_robustness(lc.config, {opt.box, opt.fiber_limit});
    if (opt.format == "json") {
        json j{{"robustness", to_string(r.tag)},
               {"method", r.method},
               {"witness", witness_json(r.witness, lc.order)}};
        if (!r.note.empty()) j["note"] = r.note;
        j["selfdual"] = r.selfdual ? selfdual_json(*r.selfdual) : json();
        emit(opt, dump(j));
    } else {
        std::string out = std::string("robustness: ") + to_string(r.tag) + "\n";
        out += "method: " + r.method + "\n";
        if (!r.note.empty()) out += "note: " + r.note + "\n";
        static const char* tag[] = {"witness u: ", "witness v: ", "witness w: "};
        for (std::size_t i = 0; i < r.witness.size() && i < 3; ++i)
            out += tag[i] + vec_line(to_input_coords(r.witness[i], lc.order)) + "\n";
        emit(opt, out);
    }
    return 0;
}

Int count_markov_bases_of(const MultisetConfig& m, const Options& opt,
                          std::string* how = nullptr) {
    try {
        Int n = count_minimal_markov_multiset_formula(m);
        if (how) *how = "closed formula";
        if (opt.oracle) {
            Int direct = count_minimal_markov(m.assemble(), opt.fiber_limit);
            if (direct != n)
                throw std::runtime_error("oracle: fiber enumeration disagrees with the formula");
            std::cerr << "oracle: fiber enumeration agrees (" << n.str() << ")\n";
        }
        return n;
    } catch (const hypothesis_error&) {
    }
    if (m.total_repetitions() > 0) {
        Int size = multiset_graver_count(m);
        if (size > Int(opt.enum_limit))
            throw hypothesis_error("count: enumeration infeasible (the Graver basis has " +
                                   size.str() + " elements)");
    }
    try {
        Int n = count_minimal_markov(m.assemble(), opt.fiber_limit);
        if (how) *how = "fiber enumeration";
        return n;
    } catch (const hypothesis_error& e) {
        throw hypothesis_error(std::string("count: enumeration infeasible (") + e.what() +
                               ")");
    }
}

int cmd_count(const Options& opt, const std::string& what) {
    Loaded lc = load_config(opt);
    Int n;
    std::string how = "closed formula";
    if (what == "graver") {
        n = multiset_graver_count(lc.config);
    } else if (what == "markov-bases") {
        n = count_markov_bases_of(lc.config, opt, &how);
    } else {
        n = ugb_count_single_repeat(lc.config, graver_via_bouquet(lc.config.ground));
    }
    if (opt.format == "json") {
        emit(opt, dump(json{{"count", n.str()}, {"method", how}}));
    } else {
        emit(opt, n.str() + "\n");
    }
    return 0;
}

int cmd_analyze(const Options& opt) {
    Loaded lc = load_config(opt);
    IntMat a = lc.config.assemble();
    json notices = json::array();
    if (lc.folded)
        notices.push_back("repeated columns folded into a multiset configuration");

    json rep;
    rep["columns"] = a.cols;
    rep["rank"] = rank(a);
    GaleRows gale = gale_transform(a);
    rep["gale_rows"] = json_from_vecs(gale.rows);
    BouquetDecomposition dec = bouquet_decompose(a);
    rep["bouquets"] = bouquets_json(dec);
    rep["free_columns"] = free_columns(a);
    PyramidalityInfo pyr = pyramidality_of_multiset(lc.config);
    rep["pyramidality"] = pyr.degree;

    rep["selfdual"] = json();
    rep["path"] = json();
    try {
        SelfDualVerdict v = is_selfdual(lc.config);
        rep["selfdual"] = v.selfdual;
        rep["path"] = v.method;
    } catch (const hypothesis_error& e) {
        notices.push_back(std::string("self-duality undecided: ") + e.what());
    }

    rep["robustness"] = json();
    rep["witness"] = json::array();
    try {
        RobustnessVerdict r = classify_robustness(lc.config, {opt.box, opt.fiber_limit});
        rep["robustness"] = to_string(r.tag);
        rep["robustness_method"] = r.method;
        rep["witness"] = witness_json(r.witness, lc.order);
    } catch (const hypothesis_error& e) {
        notices.push_back(std::string("robustness undecided: ") + e.what());
    }

    json counts;
    counts["graver"] = json();
    counts["markov_bases"] = json();
    counts["ugb"] = json();
    counts["minimal_markov_size"] = json();
    try {
        counts["graver"] = multiset_graver_count(lc.config).str();
    } catch (const hypothesis_error& e) {
        notices.push_back(std::string("graver count unavailable: ") + e.what());
    }
    try {
        counts["markov_bases"] = count_markov_bases_of(lc.config, opt).str();
    } catch (const hypothesis_error& e) {
        notices.push_back(std::string("markov basis count unavailable: ") + e.what());
    }
    try {
        counts["ugb"] =
            ugb_count_single_repeat(lc.config, graver_via_bouquet(lc.config.ground)).str();
    } catch (const hypothesis_error& e) {
        notices.push_back(std::string("ugb count unavailable: ") + e.what());
    }
    try {
        counts["minimal_markov_size"] = minimal_markov_size_formula(lc.config).str();
    } catch (const hypothesis_error&) {
        try {
            if (lc.config.total_repetitions() > 0 &&
                multiset_graver_count(lc.config) > Int(opt.enum_limit))
                throw hypothesis_error("size: enumeration infeasible");
            counts["minimal_markov_size"] =
                std::to_string(minimal_markov(a, opt.fiber_limit).size());
        } catch (const hypothesis_error& e) {
            notices.push_back(std::string("minimal markov size unavailable: ") + e.what());
        }
    }
    rep["counts"] = std::move(counts);

    rep["bases"] = json();
    std::vector<IntVec> gr;
    bool have_graver = false;
    try {
        gr = graver_of(lc, opt);
        have_graver = true;
    } catch (const hypothesis_error& e) {
        notices.push_back(std::string("basis enumeration skipped: ") + e.what());
    }
    if (have_graver) {
        json bases;
        bases["graver"] = json_from_vecs(basis_to_input(gr, lc.order));
        try {
            MarkovAnalysis an = markov_analysis(a, gr, opt.fiber_limit);
            if (opt.oracle) check_markov_oracle(a, gr, an.moves, opt.fiber_limit);
            bases["markov"] = json_from_vecs(basis_to_input(an.moves, lc.order));
        } catch (const hypothesis_error& e) {
            notices.push_back(std::string("markov basis skipped: ") + e.what());
        }
        try {
            bases["indispensable"] =
                json_from_vecs(basis_to_input(indispensables(gr, opt.box), lc.order));
            bases["universal_markov"] =
                json_from_vecs(basis_to_input(universal_markov(gr, opt.box), lc.order));
        } catch (const hypothesis_error& e) {
            notices.push_back(std::string("dispensability search skipped: ") + e.what());
        }
        rep["bases"] = std::move(bases);
    }
    rep["notices"] = notices;

    if (opt.format == "json") {
        emit(opt, dump(rep));
        return 0;
    }
    std::ostringstream out;
    out << "columns: " << a.cols << "\nrank: " << rep["rank"].get<std::size_t>() << "\n";
    out << "pyramidality: " << pyr.degree << "\n";
    if (rep["selfdual"].is_null())
        out << "self-dual: undecided\n";
    else
        out << "self-dual: " << (rep["selfdual"].get<bool>() ? "yes" : "no") << " ("
            << rep["path"].get<std::string>() << ")\n";
    if (rep["robustness"].is_null())
        out << "robustness: undecided\n";
    else
        out << "robustness: " << rep["robustness"].get<std::string>() << " ("
            << rep["robustness_method"].get<std::string>() << ")\n";
    auto count_line = [&](const char* label, const char* key) {
        const json& c = rep["counts"][key];
        out << label << ": " << (c.is_null() ? "unavailable" : c.get<std::string>())
            << "\n";
    };
    count_line("graver count", "graver");
    count_line("minimal markov size", "minimal_markov_size");
    count_line("markov bases", "markov_bases");
    count_line("ugb count", "ugb");
    for (const json& n : notices) out << "notice: " << n.get<std::string>() << "\n";
    emit(opt, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for toric configurations: Gale transforms, bouquets, "
                 "generalized Lawrence matrices, Graver and Markov bases, self-duality "
                 "and robustness"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* c, bool with_mult = true) {
        c->add_option("input", opt.input, "matrix file, inline matrix, or spec JSON")
            ->required();
        c->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        c->add_option("--out", opt.out, "write the report atomically to this path");
        if (with_mult)
            c->add_option("--mult", opt.mult_csv,
                          "comma-separated extra copies per ground column");
        return c;
    };
    auto add_box = [&](CLI::App* c) {
        c->add_option("--box", opt.box, "box bound for dispensability searches");
        return c;
    };
    auto add_oracle = [&](CLI::App* c) {
        c->add_flag("--oracle", opt.oracle, "cross-check against a brute-force path");
        return c;
    };

    CLI::App* analyze = add_oracle(add_box(add_common(
        app.add_subcommand("analyze", "full report: gale, bouquets, self-duality, "
                                      "robustness, bases, counts"))));
    CLI::App* gale = add_common(app.add_subcommand("gale", "Gale transform rows"));
    CLI::App* bouquets =
        add_common(app.add_subcommand("bouquets", "bouquet decomposition"));
    CLI::App* glm = app.add_subcommand("glm", "generalized Lawrence matrices");
    glm->require_subcommand(1);
    CLI::App* glm_build =
        add_common(glm->add_subcommand("build", "assemble a matrix from a spec"), false);
    glm_build->add_flag("--verify", opt.verify, "round-trip the result through decompose");
    add_oracle(glm_build);
    CLI::App* glm_decompose = add_common(
        glm->add_subcommand("decompose", "recover a block spec from a matrix"), false);
    glm_decompose->add_flag("--verify", opt.verify, "rebuild and compare kernels");
    add_oracle(glm_decompose);
    CLI::App* graver = add_oracle(
        add_common(app.add_subcommand("graver", "Graver basis of the configuration")));
    CLI::App* circuits_cmd =
        add_common(app.add_subcommand("circuits", "circuits of the configuration"));
    CLI::App* markov = add_oracle(
        add_common(app.add_subcommand("markov", "a minimal Markov basis with Betti data")));
    CLI::App* indispensable = add_box(add_common(
        app.add_subcommand("indispensable", "elements common to all minimal Markov bases")));
    CLI::App* universal_markov = add_box(add_common(app.add_subcommand(
        "universal-markov", "union of all minimal Markov bases")));
    CLI::App* selfdual =
        add_common(app.add_subcommand("selfdual", "decide self-duality"));
    CLI::App* robust =
        add_box(add_common(app.add_subcommand("robust", "classify robustness")));
    CLI::App* count = app.add_subcommand("count", "closed-form and enumerated counts");
    count->require_subcommand(1);
    CLI::App* count_graver =
        add_common(count->add_subcommand("graver", "Graver basis cardinality"));
    CLI::App* count_markov = add_oracle(add_common(
        count->add_subcommand("markov-bases", "number of minimal Markov bases")));
    CLI::App* count_ugb = add_common(
        count->add_subcommand("ugb", "universal Groebner basis cardinality"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(opt);
        if (app.got_subcommand(gale)) return cmd_gale(opt);
        if (app.got_subcommand(bouquets)) return cmd_bouquets(opt);
        if (app.got_subcommand(glm)) {
            if (glm->got_subcommand(glm_build)) return cmd_glm_build(opt);
            if (glm->got_subcommand(glm_decompose)) return cmd_glm_decompose(opt);
        }
        if (app.got_subcommand(graver)) return cmd_graver(opt);
        if (app.got_subcommand(circuits_cmd)) return cmd_circuits(opt);
        if (app.got_subcommand(markov)) return cmd_markov(opt);
        if (app.got_subcommand(indispensable)) return cmd_indispensable(opt);
        if (app.got_subcommand(universal_markov)) return cmd_universal_markov(opt);
        if (app.got_subcommand(selfdual)) return cmd_selfdual(opt);
        if (app.got_subcommand(robust)) return cmd_robust(opt);
        if (app.got_subcommand(count)) {
            if (count->got_subcommand(count_graver)) return cmd_count(opt, "graver");
            if (count->got_subcommand(count_markov)) return cmd_count(opt, "markov-bases");
            if (count->got_subcommand(count_ugb)) return cmd_count(opt, "ugb");
        }
        throw std::runtime_error("no command selected");
    } catch (const toric::hypothesis_error& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
