#include <doctest.h>

#include "ramsey/constructions.hpp"
#include "ramsey/diamond_extract.hpp"

using namespace ramsey;

TEST_CASE("one color: the whole of B_2 is the diamond") {
    ChainColoring col;
    col.host_n = 2;  // 3*2-4-1+1 = 2 at k=1, r=2
    col.t = 1;
    col.k = 1;
    col.colors.assign(4, 1);
    auto res = extract_monochromatic_diamond(1, 2, col);
    CHECK(res.color == 1);
    CHECK(res.embedding.images.front() == 0);
    CHECK(res.embedding.images.back() == 3);
    CHECK(verify_extraction(res.embedding, col, 1));
}

TEST_CASE("seeded fuzz with step-condition asserts") {
    const int k = 2, r = 2;
    const int N = 3 * k * r - 2 * r - k + 1;
    REQUIRE(N == 7);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto col = uniform_random_coloring(N, 1, k, seed);
        auto res = extract_monochromatic_diamond(k, r, col);
        CHECK(verify_extraction(res.embedding, col, res.color));
        // conditions (1)-(4) of the construction
        REQUIRE(res.X.size() == static_cast<size_t>(2 * k));
        for (int i = 0; i <= 2 * k - 1; ++i) CHECK(cardinality(res.X[i]) == i * r);
        for (int i = 1; i <= 2 * k - 1; ++i) {
            REQUIRE(res.Y[i].size() == static_cast<size_t>(r));
            for (SubsetMask y : res.Y[i]) {
                CHECK(cardinality(y) == (i - 1) * r + 1);
                CHECK(cardinality(y & ~res.X[i - 1]) == 1);
                CHECK(col.color_of(y) == res.step_colors[i]);
            }
            CHECK(subset_of(res.X[i - 1], res.Y[i][0]));
            CHECK(subset_of(res.Y[i][0], res.X[i]));
        }
        CHECK(res.step_colors[res.i1] == res.color);
        CHECK(res.step_colors[res.i2] == res.color);
        CHECK(res.step_colors[res.i3] == res.color);
        CHECK(res.i1 < res.i2);
        CHECK(res.i2 < res.i3);
    }
}

TEST_CASE("mutated outputs fail the independent check") {
    auto col = uniform_random_coloring(7, 1, 2, 9);
    auto res = extract_monochromatic_diamond(2, 2, col);

    auto wrong_color = res.embedding;
    CHECK(!verify_extraction(wrong_color, col, res.color == 1 ? 2 : 1));

    auto broken = res.embedding;
    // replace the top with something incomparable to a middle
    broken.images.back() = broken.images[1] ^ BooleanLattice(7).full_set();
    CHECK(!verify_extraction(broken, col, res.color));
}

TEST_CASE("host dimension must match exactly unless extension is requested") {
    // the lower-bound construction lives on B_{2k-1}, below the threshold
    auto lower = diamond_lower_coloring(2, 2);
    CHECK_THROWS_AS(extract_monochromatic_diamond(2, 2, lower), ParameterError);

    auto bigger = uniform_random_coloring(8, 1, 2, 5);
    CHECK_THROWS_AS(extract_monochromatic_diamond(2, 2, bigger), ParameterError);
    auto res = extract_monochromatic_diamond(2, 2, bigger, /*allow_larger_host=*/true);
    CHECK(verify_extraction(res.embedding, bigger, res.color));

    auto wrong_k = uniform_random_coloring(7, 1, 3, 5);
    CHECK_THROWS_AS(extract_monochromatic_diamond(2, 2, wrong_k), ParameterError);
}

TEST_CASE("wider diamonds and more colors") {
    for (auto [k, r] : {std::pair{2, 3}, std::pair{3, 2}}) {
        const int N = 3 * k * r - 2 * r - k + 1;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto col = uniform_random_coloring(N, 1, k, seed);
            auto res = extract_monochromatic_diamond(k, r, col);
            CHECK(verify_extraction(res.embedding, col, res.color));
        }
    }
}
