#include <doctest.h>

#include <random>
#include <sstream>

#include "ramsey/certificate.hpp"
#include "ramsey/coloring.hpp"

using namespace ramsey;

namespace {

ChainColoring by_level_split(int host_n, int cutoff) {
    // |S| <= cutoff -> 1, else 2
    ChainColoring col;
    col.host_n = host_n;
    col.t = 1;
    col.k = 2;
    col.colors.resize(std::size_t{1} << host_n);
    for (SubsetMask m = 0; m < (SubsetMask{1} << host_n); ++m)
        col.colors[m] = cardinality(m) <= cutoff ? 1 : 2;
    return col;
}

RamseyInstance two_diamonds_strong() {
    RamseyInstance inst;
    inst.t = 1;
    inst.k = 2;
    inst.mode = EmbeddingMode::Strong;
    inst.targets = {make_diamond(2), make_diamond(2)};
    return inst;
}

}  // namespace

TEST_CASE("coloring shape validation") {
    ChainColoring col;
    col.host_n = 2;
    col.t = 1;
    col.k = 2;
    col.colors = {1, 2, 1};  // one short
    CHECK_THROWS_AS(col.validate(), ParameterError);
    col.colors = {1, 2, 1, 3};  // color out of range
    CHECK_THROWS_AS(col.validate(), ParameterError);
    col.colors = {1, 2, 1, 2};
    CHECK_NOTHROW(col.validate());
}

TEST_CASE("verify_coloring: the diamond level-split at B_3 is good") {
    auto verdict = verify_coloring(two_diamonds_strong(), 3, by_level_split(3, 1));
    CHECK(verdict.good);
}

TEST_CASE("verify_coloring: one color with an embeddable target is bad") {
    RamseyInstance inst;
    inst.t = 1;
    inst.k = 1;
    inst.mode = EmbeddingMode::Weak;
    inst.targets = {make_chain(3)};
    ChainColoring allone;
    allone.host_n = 3;
    allone.t = 1;
    allone.k = 1;
    allone.colors.assign(8, 1);
    auto verdict = verify_coloring(inst, 3, allone);
    CHECK(!verdict.good);
    CHECK(verdict.bad_color == 1);
    CHECK(is_valid_embedding(inst.targets[0], verdict.witness.images, EmbeddingMode::Weak));
}

TEST_CASE("verify_coloring: every Matching-2 coloring of B_4 is bad (spot checks)") {
    RamseyInstance inst;
    inst.t = 1;
    inst.k = 2;
    inst.mode = EmbeddingMode::Weak;
    inst.targets = {make_matching(2), make_matching(2)};
    CHECK(!verify_coloring(inst, 4, by_level_split(4, 0)).good);
    CHECK(!verify_coloring(inst, 4, by_level_split(4, 1)).good);
    CHECK(!verify_coloring(inst, 4, by_level_split(4, 2)).good);
    std::mt19937_64 rng(3);
    for (int round = 0; round < 20; ++round) {
        ChainColoring col;
        col.host_n = 4;
        col.t = 1;
        col.k = 2;
        col.colors.resize(16);
        for (auto& c : col.colors) c = static_cast<std::uint8_t>(1 + rng() % 2);
        CHECK(!verify_coloring(inst, 4, col).good);
    }
}

TEST_CASE("verify rejects shape mismatches") {
    auto inst = two_diamonds_strong();
    CHECK_THROWS_AS(verify_coloring(inst, 4, by_level_split(3, 1)), ParameterError);
    RamseyInstance chain_family = inst;
    chain_family.family = HostFamily::Chain;
    chain_family.t = 2;
    ChainColoring col;
    col.host_n = 3;
    col.t = 2;
    col.k = 2;
    col.colors.assign(3, 1);
    CHECK_THROWS_AS(verify_coloring(chain_family, 3, col), ParameterError);
}

TEST_CASE("certificate round trip") {
    auto inst = two_diamonds_strong();
    auto col = by_level_split(3, 1);
    Certificate cert = make_good_coloring_certificate(inst, 3, col);
    std::ostringstream out;
    emit_certificate(cert, out);
    const std::string text = out.str();
    CHECK(text.find("poset-ramsey-cert v1\n") == 0);
    CHECK(text.find("kind:good-coloring\n") != std::string::npos);
    CHECK(text.find("targets:diamond:2,diamond:2\n") != std::string::npos);
    CHECK(text.find("colors:11121222\n") != std::string::npos);  // chain-id (= mask) order
    std::istringstream in(text);
    Certificate back = load_certificate(in);
    CHECK(back.kind == Certificate::Kind::GoodColoring);
    CHECK(back.host_n == 3);
    CHECK(back.coloring.colors == col.colors);
    CHECK(back.instance.k == 2);
    CHECK(back.instance.mode == EmbeddingMode::Strong);
}

TEST_CASE("certificate failure paths") {
    auto inst = two_diamonds_strong();
    auto col = by_level_split(3, 1);
    Certificate cert = make_good_coloring_certificate(inst, 3, col);
    std::ostringstream out;
    emit_certificate(cert, out);
    std::string text = out.str();

    SUBCASE("length mismatch is a parse error") {
        auto pos = text.find("colors:");
        std::string cut = text.substr(0, pos) + "colors:112\n";
        std::istringstream in(cut);
        CHECK_THROWS_AS(load_certificate(in), ParseError);
    }
    SUBCASE("a flipped entry creating a mono copy fails verification") {
        // flipping the full set into color 1 joins levels {0,1} with the top:
        // {},{1},{2},[3] holds no induced diamond; flip {1,2} instead
        auto pos = text.find("colors:");
        REQUIRE(pos != std::string::npos);
        std::string tampered = text;
        // colors line layout: index i is mask i; mask 3 = {1,2}
        tampered[pos + 7 + 3] = '1';
        std::istringstream in(tampered);
        CHECK_THROWS_AS(load_certificate(in), VerificationError);
    }
    SUBCASE("bad header") {
        std::istringstream in("poset-ramsey-cert v2\nkind:exhaustion\n");
        CHECK_THROWS_AS(load_certificate(in), ParseError);
    }
    SUBCASE("missing field") {
        std::istringstream in("poset-ramsey-cert v1\nkind:exhaustion\nmode:weak\nt:1\nk:1\n");
        CHECK_THROWS_AS(load_certificate(in), ParseError);
    }
    SUBCASE("emit refuses a bad coloring") {
        ChainColoring bad = by_level_split(3, 2);  // color 1 spans 3 levels: diamond inside
        Certificate c2 = make_good_coloring_certificate(inst, 3, bad);
        std::ostringstream sink;
        CHECK_THROWS_AS(emit_certificate(c2, sink), VerificationError);
    }
}

TEST_CASE("wide palettes switch to comma-separated colors") {
    RamseyInstance inst;
    inst.t = 1;
    inst.k = 10;
    inst.mode = EmbeddingMode::Weak;
    inst.targets.assign(10, make_chain(2));
    ChainColoring col;
    col.host_n = 1;
    col.t = 1;
    col.k = 10;
    col.colors = {1, 10};
    REQUIRE(verify_coloring(inst, 1, col).good);
    Certificate cert = make_good_coloring_certificate(inst, 1, col);
    std::ostringstream out;
    emit_certificate(cert, out);
    CHECK(out.str().find("colors:1,10\n") != std::string::npos);
    std::istringstream in(out.str());
    Certificate back = load_certificate(in);
    CHECK(back.coloring.colors == col.colors);
}

TEST_CASE("exhaustion certificate round trip") {
    auto inst = two_diamonds_strong();
    SearchStats stats;
    stats.nodes = 12345;
    stats.group = "S4xR";
    stats.elapsed_ms = 17;
    Certificate cert = make_exhaustion_certificate(inst, 4, stats);
    std::ostringstream out;
    emit_certificate(cert, out);
    std::istringstream in(out.str());
    Certificate back = load_certificate(in);
    CHECK(back.kind == Certificate::Kind::Exhaustion);
    CHECK(back.nodes == 12345);
    CHECK(back.group == "S4xR");
    CHECK(back.elapsed_ms == 17);
}
