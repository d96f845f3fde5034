#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sds/format.hpp"
#include "sds/sequences.hpp"

using namespace sds;

namespace {

Family fam(int v, std::vector<std::vector<int>> blocks) {
    std::vector<Block> bs;
    for (auto& b : blocks) bs.push_back(make_block(v, b));
    return Family(Modulus(v), std::move(bs));
}

BinarySequence random_sequence(int v, std::mt19937_64& rng) {
    std::vector<int> terms;
    for (int i = 0; i < v; ++i) terms.push_back(rng() & 1 ? 1 : -1);
    return BinarySequence(std::move(terms));
}

}  // namespace

TEST_CASE("sequence text form") {
    BinarySequence s = parse_sequence("++-+-+--++");
    CHECK(s.length() == 10);
    CHECK(render_sequence(s) == "++-+-+--++");
    CHECK_THROWS_AS(parse_sequence("+x-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence(""), std::invalid_argument);
}

TEST_CASE("pacf basics") {
    CHECK(pacf(parse_sequence("+++++")).values == std::vector<long long>{5, 5, 5, 5, 5});
    CHECK(pacf(parse_sequence("+-")).values == std::vector<long long>{2, -2});
    BinarySequence a1 = parse_sequence("++-+-+--++");
    CHECK(pacf(a1).values[0] == 10);
}

TEST_CASE("nacf basics") {
    CHECK(nacf(parse_sequence("+++")).values == std::vector<long long>{3, 2, 1});
    CHECK(nacf(parse_sequence("-")).values == std::vector<long long>{1});
}

TEST_CASE("complementary pair identities from the length-10 example") {
    SequencePair pair{parse_sequence("++-+-+--++"), parse_sequence("++-+++++--")};
    CorrelationProfile psum = pacf_sum(pair);
    CHECK(psum.values[0] == 20);
    for (int i = 1; i < 10; ++i) CHECK(psum.values[static_cast<std::size_t>(i)] == 0);

    CorrelationProfile n1 = nacf(pair.first), n2 = nacf(pair.second);
    for (int i = 1; i < 10; ++i)
        CHECK(n1.values[static_cast<std::size_t>(i)] + n2.values[static_cast<std::size_t>(i)] ==
              0);

    Family family = sequences_to_sds(pair);
    CHECK(render_family(family) == "{2,4,6,7} {2,8,9}");
    VerificationReport rep = verify_sds(family);
    REQUIRE(rep.is_sds);
    CHECK(render_params(*rep.parameters) == "(10;4,3;2)");
}

TEST_CASE("pacf symmetry and the nacf-to-pacf identity") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 30);
        BinarySequence s = random_sequence(v, rng);
        CorrelationProfile p = pacf(s), n = nacf(s);
        CHECK(p.values[0] == v);
        for (int i = 1; i < v; ++i) {
            CHECK(p.values[static_cast<std::size_t>(i)] ==
                  p.values[static_cast<std::size_t>(v - i)]);
            CHECK(p.values[static_cast<std::size_t>(i)] ==
                  n.values[static_cast<std::size_t>(i)] +
                      n.values[static_cast<std::size_t>(v - i)]);
        }
    }
}

TEST_CASE("blocks and sequences are inverse encodings") {
    Family f = fam(10, {{0, 1, 3, 5}, {0, 1, 4}});
    SequencePair pair = sds_to_sequences(f);
    CHECK(render_sequence(pair.first) == "--+-+-++++");
    CHECK(sequences_to_sds(pair) == f);

    Family empty = fam(6, {{}, {}});
    SequencePair ones = sds_to_sequences(empty);
    CHECK(render_sequence(ones.first) == "++++++");
    CHECK(sequences_to_sds(ones) == empty);

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 30);
        std::vector<std::vector<int>> blocks(2);
        for (auto& blk : blocks)
            for (int x = 0; x < v; ++x)
                if (rng() & 1) blk.push_back(x);
        Family f2 = fam(v, blocks);
        CHECK(sequences_to_sds(sds_to_sequences(f2)) == f2);
    }
    CHECK_THROWS_AS(
        sequences_to_sds(SequencePair{parse_sequence("++"), parse_sequence("+++")}),
        std::invalid_argument);
}

TEST_CASE("pacf sum off zero equals 2v - 4n for derived pairs") {
    std::vector<Family> families = {
        fam(5, {{0, 1}, {0, 2}}),
        fam(10, {{0, 1, 3, 5}, {0, 1, 4}}),
        fam(13, {{0, 1, 4, 6}, {0, 2, 3, 7}}),
        fam(15, {{0, 1, 3, 5, 7, 8}, {0, 1, 4, 10}}),
    };
    for (const Family& f : families) {
        VerificationReport rep = verify_sds(f);
        REQUIRE(rep.is_sds);
        const int v = f.v();
        const long long expected = 2LL * v - 4LL * rep.parameters->order();
        CorrelationProfile sum = pacf_sum(sds_to_sequences(f));
        for (int i = 1; i < v; ++i)
            CHECK(sum.values[static_cast<std::size_t>(i)] == expected);
    }
    // (5;2,2;1): 2*5 - 4*3 = -2
    CorrelationProfile p5 = pacf_sum(sds_to_sequences(fam(5, {{0, 1}, {0, 2}})));
    CHECK(p5.values[1] == -2);

    CorrelationProfile ones = pacf_sum(SequencePair{parse_sequence("++++"), parse_sequence("++++")});
    CHECK(ones.values == std::vector<long long>{8, 8, 8, 8});
}

TEST_CASE("special type tags") {
    TypeTags dopt = classify(ParameterSet(19, {7, 6}, 4));
    CHECK(dopt.d_optimal);
    CHECK(!dopt.periodic_pair);
    CHECK(!dopt.equal_blocks);

    TypeTags pp = classify(ParameterSet(50, {25, 20}, 20));
    CHECK(pp.periodic_pair);
    CHECK(!pp.d_optimal);

    TypeTags eq = classify(ParameterSet(7, {3, 3}, 2));
    CHECK(eq.equal_blocks);
    CHECK(!eq.d_optimal);
    CHECK(!eq.periodic_pair);
}

TEST_CASE("bibd development with direct coverage counting") {
    auto [params, blocks] = develop_bibd(fam(7, {{0, 1, 3}, {0, 1, 3}}));
    CHECK(params == BibdParams{7, 14, 6, 3, 2});
    CHECK(blocks.size() == 14);
    // independent recount
    int pair_02 = 0;
    for (const Block& b : blocks)
        if (b.contains(0) && b.contains(2)) ++pair_02;
    CHECK(pair_02 == 2);

    auto [p13, blocks13] = develop_bibd(fam(13, {{0, 1, 4, 6}, {0, 1, 4, 6}}));
    CHECK(p13 == BibdParams{13, 26, 8, 4, 2});
    CHECK(static_cast<long long>(p13.b) * p13.k == static_cast<long long>(p13.v) * p13.r_rep);
    CHECK(static_cast<long long>(p13.lambda) * (p13.v - 1) ==
          static_cast<long long>(p13.r_rep) * (p13.k - 1));

    CHECK_THROWS_AS(develop_bibd(fam(10, {{0, 1, 3, 5}, {0, 1, 4}})), std::invalid_argument);
    CHECK_THROWS_AS(develop_bibd(fam(5, {{0, 1}, {0, 1}})), std::invalid_argument);
}
