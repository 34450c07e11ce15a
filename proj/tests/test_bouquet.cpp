#include <catch2/catch_amalgamated.hpp>

#include "golden.hpp"
#include "oracle_helpers.hpp"

using namespace toric;

namespace {

bool rows_parallel(const IntVec& a, const IntVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = k + 1; l < a.size(); ++l)
            if (a[k] * b[l] != a[l] * b[k]) return false;
    return true;
}

IntVec restrict_to(const IntVec& c, const std::vector<std::size_t>& members) {
    IntVec out;
    for (std::size_t i : members) out.push_back(c[i]);
    return out;
}

}  // namespace

TEST_CASE("two parallel columns form one mixed bouquet", "[bouquet]") {
    auto dec = bouquet_decompose(mat_from({{1, 1}}));
    REQUIRE(dec.size() == 1);
    const Bouquet& b = dec.bouquets[0];
    CHECK(b.members == std::vector<std::size_t>{0, 1});
    CHECK(b.kind == BouquetKind::mixed);
    CHECK(b.c == IntVec{1, -1});
    CHECK(is_zero(b.a));
    CHECK(dec.bouquet_matrix.rows == 1);
    CHECK(dec.bouquet_matrix.cols == 1);
    CHECK(dec.bouquet_matrix(0, 0) == 0);
}

TEST_CASE("free columns gather into a single free bouquet", "[bouquet]") {
    auto dec = bouquet_decompose(mat_from({{1, 0, 0}, {0, 1, 0}}));
    REQUIRE(dec.size() == 2);
    CHECK(dec.bouquets[0].kind == BouquetKind::free_bouquet);
    CHECK(dec.bouquets[0].members == std::vector<std::size_t>{0, 1});
    CHECK(dec.bouquets[0].c == IntVec{1, 1, 0});
    CHECK(dec.bouquets[0].a == IntVec{1, 1});
    CHECK(dec.bouquets[1].members == std::vector<std::size_t>{2});
    CHECK(dec.bouquets[1].kind == BouquetKind::non_mixed);
    CHECK(dec.bouquets[1].c == IntVec{0, 0, 1});
    CHECK(is_zero(dec.bouquets[1].a));

    CHECK(free_columns(mat_from({{1, 0, 0}, {0, 1, 0}})) ==
          std::vector<std::size_t>{0, 1});
    CHECK(free_columns(golden::m4567()).empty());
}

TEST_CASE("a one-dimensional kernel merges all columns", "[bouquet]") {
    auto dec = bouquet_decompose(mat_from({{2, 3}}));
    REQUIRE(dec.size() == 1);
    CHECK(dec.bouquets[0].members == std::vector<std::size_t>{0, 1});
    CHECK(dec.bouquets[0].kind == BouquetKind::mixed);
    CHECK(dec.bouquets[0].c == IntVec{3, -2});
    CHECK(is_zero(dec.bouquets[0].a));
}

TEST_CASE("non-parallel rows give non-mixed singletons", "[bouquet]") {
    IntMat a = golden::m223();
    auto dec = bouquet_decompose(a);
    REQUIRE(dec.size() == 3);
    for (std::size_t q = 0; q < 3; ++q) {
        const Bouquet& b = dec.bouquets[q];
        CHECK(b.members == std::vector<std::size_t>{q});
        CHECK(b.kind == BouquetKind::non_mixed);
        IntVec e(3, 0);
        e[q] = 1;
        CHECK(b.c == e);
    }
    CHECK(dec.bouquet_matrix == a);
}

TEST_CASE("bouquets of the 9x12 matrix are its four column blocks", "[bouquet]") {
    IntMat a = golden::glm9x12();
    auto dec = bouquet_decompose(a);
    REQUIRE(dec.size() == 4);

    std::vector<std::vector<std::size_t>> members = {
        {0, 1}, {2, 3, 4}, {5, 6, 7}, {8, 9, 10, 11}};
    std::vector<std::vector<long long>> cs = {
        {1, -1}, {7, -4, -3}, {2023, 1, -2024}, {1, 3, -2, -2}};
    std::vector<long long> degrees = {4, 5, 6, 7};
    for (std::size_t q = 0; q < 4; ++q) {
        const Bouquet& b = dec.bouquets[q];
        CHECK(b.members == members[q]);
        CHECK(b.kind == BouquetKind::mixed);
        CHECK(restrict_to(b.c, b.members) == IntVec(cs[q].begin(), cs[q].end()));
        IntVec want(9, 0);
        want[0] = degrees[q];
        CHECK(b.a == want);
        CHECK(dec.bouquet_matrix.col(q) == want);
    }
}

TEST_CASE("the 13x16 family matrix has a free apex bouquet", "[bouquet]") {
    IntMat a = golden::family13x16();
    auto dec = bouquet_decompose(a);
    REQUIRE(dec.size() == 5);

    const Bouquet& apex = dec.bouquets[0];
    CHECK(apex.kind == BouquetKind::free_bouquet);
    CHECK(apex.members == std::vector<std::size_t>{0, 1, 2, 3});
    IntVec apex_sum(13, 0);
    for (std::size_t j = 0; j < 4; ++j) apex_sum = add(apex_sum, a.col(j));
    CHECK(apex.a == apex_sum);

    std::vector<std::vector<std::size_t>> members = {
        {4, 5}, {6, 7, 8}, {9, 10, 11}, {12, 13, 14, 15}};
    std::vector<std::vector<long long>> cs = {
        {1, -1}, {7, -4, -3}, {2023, 1, -2024}, {1, 3, -2, -2}};
    std::vector<long long> degrees = {4, 5, 6, 7};
    for (std::size_t q = 0; q < 4; ++q) {
        const Bouquet& b = dec.bouquets[q + 1];
        CHECK(b.members == members[q]);
        CHECK(b.kind == BouquetKind::mixed);
        CHECK(restrict_to(b.c, b.members) == IntVec(cs[q].begin(), cs[q].end()));
        IntVec want(13, 0);
        want[1] = degrees[q];
        CHECK(b.a == want);
    }
    CHECK(free_columns(a) == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("kernel lift distributes coordinates over the blocks", "[bouquet]") {
    auto dec = bouquet_decompose(golden::glm9x12());
    IntVec u{1, 3, -2, -1};
    CHECK(lift_kernel(dec, u) == golden::glm9x12_embed(u));
    CHECK(lift_kernel(dec, IntVec{0, 0, 0, 0}) == IntVec(12, 0));

    CHECK_THROWS_AS(lift_kernel(dec, IntVec{1, 0, 0}), hypothesis_error);
    CHECK_THROWS_AS(lift_kernel(dec, IntVec{1, 0, 0, 0}), hypothesis_error);
}

TEST_CASE("random decompositions partition columns and preserve the kernel",
          "[bouquet][property]") {
    auto rng = oracle::seeded_rng(101);
    std::uniform_int_distribution<std::size_t> nrows(1, 3), ncols(1, 6);
    for (int iter = 0; iter < 150; ++iter) {
        IntMat a = oracle::random_matrix(rng, nrows(rng), ncols(rng), -3, 3);
        auto dec = bouquet_decompose(a);

        std::vector<bool> seen(a.cols, false);
        for (const Bouquet& b : dec.bouquets) {
            REQUIRE(!b.members.empty());
            for (std::size_t i : b.members) {
                CHECK(!seen[i]);
                seen[i] = true;
            }
            CHECK(b.a == a.mul(b.c));
            IntVec local = restrict_to(b.c, b.members);
            if (b.kind == BouquetKind::free_bouquet) {
                for (std::size_t i : b.members) CHECK(is_zero(dec.gale.rows[i]));
                CHECK(local == IntVec(b.members.size(), 1));
            } else {
                CHECK(is_primitive(local));
                CHECK(local[0] > 0);
                for (std::size_t i : b.members) {
                    CHECK(!is_zero(dec.gale.rows[i]));
                    CHECK(rows_parallel(dec.gale.rows[b.members[0]],
                                        dec.gale.rows[i]));
                }
            }
            // c vanishes off the members
            for (std::size_t i = 0; i < a.cols; ++i) {
                bool inside = std::find(b.members.begin(), b.members.end(), i) !=
                              b.members.end();
                if (!inside) CHECK(b.c[i] == 0);
            }
        }
        for (std::size_t i = 0; i < a.cols; ++i) CHECK(seen[i]);

        // rows from different non-free bouquets are never parallel
        for (std::size_t p = 0; p < dec.size(); ++p)
            for (std::size_t q = p + 1; q < dec.size(); ++q) {
                if (dec.bouquets[p].kind == BouquetKind::free_bouquet ||
                    dec.bouquets[q].kind == BouquetKind::free_bouquet)
                    continue;
                CHECK(!rows_parallel(dec.gale.rows[dec.bouquets[p].members[0]],
                                     dec.gale.rows[dec.bouquets[q].members[0]]));
            }

        // lifting a kernel basis of the contraction spans ker(A) exactly
        IntMat kb = kernel_lattice_basis(dec.bouquet_matrix);
        IntMat lifted(a.cols, kb.cols);
        for (std::size_t j = 0; j < kb.cols; ++j) {
            IntVec v = lift_kernel(dec, kb.col(j));
            CHECK(is_zero(a.mul(v)));
            lifted.set_col(j, v);
        }
        CHECK(oracle::same_lattice(lifted, kernel_lattice_basis(a)));
    }
}
