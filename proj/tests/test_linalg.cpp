#include <catch2/catch_amalgamated.hpp>

#include "golden.hpp"
#include "oracle_helpers.hpp"

using namespace toric;

TEST_CASE("extended gcd basics", "[arith]") {
    auto r = xgcd(Int(12), Int(18));
    CHECK(r.g == 6);
    CHECK(r.x * 12 + r.y * 18 == 6);
    r = xgcd(Int(0), Int(-5));
    CHECK(r.g == 5);
    CHECK(r.x * 0 + r.y * -5 == 5);
    r = xgcd(Int(7), Int(0));
    CHECK(r.g == 7);
    CHECK(r.x == 1);
}

TEST_CASE("gcd combination matches the recipe on the block vectors", "[arith]") {
    CHECK(gcd_combination({Int(1), Int(-1)}) == IntVec{1, 0});
    CHECK(gcd_combination({Int(2023), Int(1), Int(-2024)}) == IntVec{0, 1, 0});
    IntVec lam = gcd_combination({Int(7), Int(-4), Int(-3)});
    CHECK(lam == IntVec{-1, -2, 0});
    CHECK(gcd_combination({Int(1), Int(3), Int(5), Int(7)}) == IntVec{1, 0, 0, 0});
}

TEST_CASE("gcd combination certifies on random primitive vectors", "[arith]") {
    auto rng = oracle::seeded_rng(1);
    std::uniform_int_distribution<long long> pick(-40, 40);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::size_t done = 0;
    while (done < 200) {
        IntVec c(len(rng));
        for (Int& x : c) x = pick(rng);
        Int g = content(c);
        if (g != 1) {
            if (!c.empty() && g != 0) CHECK_THROWS_AS(gcd_combination(c), hypothesis_error);
            continue;
        }
        IntVec lam = gcd_combination(c);
        REQUIRE(lam.size() == c.size());
        CHECK(dot(lam, c) == 1);
        ++done;
    }
}

TEST_CASE("binomial coefficients", "[arith]") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 2) == 0);
    CHECK(binomial(3, -1) == 0);
    Int n = 14172;
    CHECK(binomial(n, 4) == n * (n - 1) * (n - 2) * (n - 3) / 24);
}

TEST_CASE("vector predicates", "[vec]") {
    IntVec u{1, 3, -2, -1}, v{1, 2, 0, -2}, w{0, 1, -2, 1};
    CHECK(add(v, w) == u);
    CHECK(is_semiconformal_sum(u, v, w));
    CHECK_FALSE(is_conformal_sum(u, v, w));
    CHECK(is_strongly_semiconformal_sum(u, v, w));
    // v exhausting u+ is semiconformal but not strongly so
    IntVec v2{1, 3, -2, 0}, w2{0, 0, 0, -1};
    CHECK(is_semiconformal_sum(u, v2, w2));
    CHECK_FALSE(is_strongly_semiconformal_sum(u, v2, w2));

    CHECK(conformal_leq({1, 0, -1}, {2, 0, -1}));
    CHECK_FALSE(conformal_leq({1, 0, 1}, {2, 0, -1}));
    CHECK_FALSE(conformal_leq({-1, 0, 0}, {2, 0, -1}));
    CHECK(conformal_leq({0, 0, 0}, {2, 0, -1}));

    CHECK(canonical_sign({0, -2, 1}) == IntVec{0, 2, -1});
    CHECK(canonical_sign({3, -1}) == IntVec{3, -1});
    CHECK(positive_part({2, -3, 0}) == IntVec{2, 0, 0});
    CHECK(negative_part({2, -3, 0}) == IntVec{0, 3, 0});
    CHECK(one_norm({2, -3, 0}) == 5);
}

TEST_CASE("semiconformal order matters", "[vec]") {
    // v before w: a positive v entry forbids a negative w entry there
    IntVec v{1, -1}, w{-1, 1};
    IntVec u = add(v, w);
    CHECK(is_semiconformal_sum(u, v, w) == false);
    IntVec v2{-1, 0}, w2{2, -1};
    CHECK(is_semiconformal_sum(add(v2, w2), v2, w2));
    CHECK_FALSE(is_semiconformal_sum(add(w2, v2), w2, v2));
}

TEST_CASE("matrix text round-trip", "[matrix]") {
    IntMat m = golden::glm9x12();
    IntMat back = parse_matrix_text(matrix_to_text(m));
    CHECK(back == m);
    CHECK_THROWS_AS(parse_matrix_text("2 2\n1 2 3"), std::runtime_error);
    CHECK_THROWS_AS(parse_matrix_text("2 2\n1 2 3 4 5"), std::runtime_error);
    CHECK_THROWS_AS(parse_matrix_text("junk"), std::runtime_error);
    IntMat commented = parse_matrix_text("# note\n1 2\n# another\n3 4\n");
    CHECK(commented == mat_from({{3, 4}}));
}

TEST_CASE("rank agrees with rational elimination", "[linalg]") {
    CHECK(rank(golden::glm9x12()) == 9);
    CHECK(oracle::rank_oracle(golden::glm9x12()) == 9);
    CHECK(rank(golden::family13x16()) == 13);
    CHECK(oracle::rank_oracle(golden::family13x16()) == 13);
    CHECK(rank(golden::m4567()) == 1);
    CHECK(rank(mat_from({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(IntMat(3, 3)) == 0);

    auto rng = oracle::seeded_rng(2);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 150; ++t) {
        IntMat m = oracle::random_matrix(rng, dim(rng), dim(rng), -4, 4);
        CHECK(rank(m) == oracle::rank_oracle(m));
    }
}

TEST_CASE("kernel basis on the worked configurations", "[linalg]") {
    IntMat k23 = kernel_lattice_basis(mat_from({{2, 3}}));
    REQUIRE(k23.cols == 1);
    CHECK(k23.col(0) == IntVec{3, -2});

    IntMat k = kernel_lattice_basis(golden::m4567());
    REQUIRE(k.cols == 3);
    CHECK(is_zero(golden::m4567().mul(k.col(0))));
    CHECK(is_zero(golden::m4567().mul(k.col(1))));
    CHECK(is_zero(golden::m4567().mul(k.col(2))));
    CHECK(smith_diagonal(k) == IntVec{1, 1, 1});

    IntMat kg = kernel_lattice_basis(golden::glm9x12());
    REQUIRE(kg.cols == 3);
    for (const IntVec& u : {IntVec{1, -2, 1, 0}, IntVec{1, 3, -2, -1}, IntVec{5, -4, 0, 0}})
        CHECK(lattice_coordinates(kg, golden::glm9x12_embed(u)).has_value());
    CHECK_FALSE(lattice_coordinates(kg, IntVec(12, 1)).has_value());

    CHECK(kernel_lattice_basis(mat_from({{1, 0}, {0, 1}})).cols == 0);
}

TEST_CASE("kernel basis is saturated and complete on random matrices", "[linalg]") {
    auto rng = oracle::seeded_rng(3);
    std::uniform_int_distribution<std::size_t> rdim(1, 3), cdim(1, 4);
    for (int t = 0; t < 120; ++t) {
        IntMat m = oracle::random_matrix(rng, rdim(rng), cdim(rng), -3, 3);
        IntMat k = kernel_lattice_basis(m);
        CHECK(k.cols == m.cols - rank(m));
        for (std::size_t j = 0; j < k.cols; ++j) CHECK(is_zero(m.mul(k.col(j))));
        if (k.cols > 0) {
            IntVec d = smith_diagonal(k);
            for (const Int& x : d) CHECK(x == 1);
        }
        for (const IntVec& v : oracle::box_kernel(m, 2))
            CHECK(lattice_coordinates(k, v).has_value());
    }
}

TEST_CASE("hermite form is canonical for the lattice", "[linalg]") {
    auto rng = oracle::seeded_rng(4);
    std::uniform_int_distribution<std::size_t> rdim(1, 3), cdim(1, 4);
    std::uniform_int_distribution<int> coin(0, 1), mul(-2, 2);
    for (int t = 0; t < 120; ++t) {
        IntMat m = oracle::random_matrix(rng, rdim(rng), cdim(rng), -3, 3);
        IntMat k = kernel_lattice_basis(m);
        if (k.cols < 2) continue;
        IntMat twisted = k;
        for (int step = 0; step < 6; ++step) {
            std::size_t a = std::uniform_int_distribution<std::size_t>(0, k.cols - 1)(rng);
            std::size_t b = std::uniform_int_distribution<std::size_t>(0, k.cols - 1)(rng);
            if (a == b) continue;
            if (coin(rng)) {
                for (std::size_t i = 0; i < k.rows; ++i) std::swap(twisted(i, a), twisted(i, b));
            } else {
                Int f = mul(rng);
                for (std::size_t i = 0; i < k.rows; ++i) twisted(i, a) += f * twisted(i, b);
            }
        }
        CHECK(hermite_column_form(twisted) == hermite_column_form(k));
        CHECK(oracle::same_lattice(twisted, k));
    }
}

TEST_CASE("smith divisors", "[linalg]") {
    CHECK(smith_diagonal(mat_from({{2, 0}, {0, 3}})) == IntVec{1, 6});
    CHECK(smith_diagonal(mat_from({{4, 0}, {0, 6}})) == IntVec{2, 12});
    CHECK(smith_diagonal(mat_from({{1, 0}, {0, 1}})) == IntVec{1, 1});
    CHECK(smith_diagonal(IntMat(2, 2)).empty());
    CHECK(smith_diagonal(mat_from({{2, 4}, {4, 8}})) == IntVec{2});
}

TEST_CASE("gale transform rows", "[linalg]") {
    GaleRows g = gale_transform(mat_from({{1, 1}}));
    REQUIRE(g.rows.size() == 2);
    CHECK(g.rows[0] == IntVec{1});
    CHECK(g.rows[1] == IntVec{-1});

    GaleRows id = gale_transform(mat_from({{1, 0}, {0, 1}}));
    CHECK(id.rows[0].empty());
    CHECK(id.rows[1].empty());

    GaleRows g4 = gale_transform(golden::m4567());
    for (const IntVec& row : g4.rows) CHECK_FALSE(is_zero(row));
}

TEST_CASE("row span membership", "[linalg]") {
    CHECK(allones_in_rowspan(golden::glm9x12()));
    CHECK(allones_in_rowspan(golden::family13x16()));
    CHECK_FALSE(allones_in_rowspan(golden::m4567()));
    CHECK_FALSE(allones_in_rowspan(golden::m223()));
    CHECK(in_rowspan(golden::m4567(), {8, 10, 12, 14}));
    CHECK_FALSE(in_rowspan(golden::m4567(), {4, 5, 6, 8}));
}
