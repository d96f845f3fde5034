#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "sds/sds.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    std::string output;
    int exit_code;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SDS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    return {output, WEXITSTATUS(status)};
}

}  // namespace

TEST_CASE("verify matches the library and the documented exit codes") {
    RunResult ok = run("verify \"(5;2,2;1)\" \"{0,1} {0,2}\"");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "lambda=1 n=3\n");

    RunResult bad = run("verify 5 \"{0,1} {0,1}\"");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output == "not an SDS: shift=2 count=0\n");

    RunResult usage = run("verify");
    CHECK(usage.exit_code == 2);

    RunResult mismatch = run("verify \"(5;2,2;2)\" \"{0,1} {0,2}\"");
    CHECK(mismatch.exit_code == 2);
}

TEST_CASE("equiv reproduces the two-class example") {
    RunResult diff = run("equiv 13 \"{0,1,4,6} {0,1,4,6}\" \"{0,1,4,6} {0,2,3,7}\"");
    CHECK(diff.exit_code == 1);
    CHECK(diff.output == "non-equivalent\n");

    RunResult same = run("equiv 13 \"{0,1,4,6} {0,2,8,12}\" \"{0,1,4,6} {0,2,3,7}\"");
    CHECK(same.exit_code == 0);
    CHECK(same.output == "equivalent\n");
}

TEST_CASE("canon output is byte-identical to the library rendering") {
    sds::Family input(sds::Modulus(13),
                      {sds::make_block(13, std::vector<int>{0, 1, 4, 6}),
                       sds::make_block(13, std::vector<int>{0, 2, 8, 12})});
    sds::NormalFormResult nf = sds::normal_form(input);
    RunResult got = run("canon 13 \"{0,1,4,6} {0,2,8,12}\"");
    CHECK(got.exit_code == 0);
    const std::string expected =
        sds::render_family(nf.representative) + "\nunique_up_to_permutation=" +
        (nf.unique_up_to_permutation ? "true" : "false") +
        " minimal_set_size=" + std::to_string(nf.minimal_set_size) + "\n";
    CHECK(got.output == expected);
}

TEST_CASE("feasible streams the census byte-identically") {
    std::string expected;
    for (const sds::ParameterSet& p : sds::enumerate_feasible(20))
        expected += sds::render_params(p) + "\n";
    RunResult got = run("feasible --vmax 20");
    CHECK(got.exit_code == 0);
    CHECK(got.output == expected);
}

TEST_CASE("json output round-trips losslessly") {
    RunResult got = run("--json verify \"(15;6,4;3)\" \"{0,1,3,5,7,8} {0,1,4,10}\"");
    CHECK(got.exit_code == 0);
    json object = json::parse(got.output);
    CHECK(object["command"] == "verify");
    CHECK(object["is_sds"] == true);
    CHECK(object["lambda"] == 3);
    CHECK(object["n"] == 7);
    CHECK(object["params"] == "(15;6,4;3)");
    CHECK(json::parse(object.dump()) == object);

    sds::Family parsed_back(
        sds::Modulus(object["v"].get<int>()),
        [&] {
            std::vector<sds::Block> blocks;
            for (const auto& b : object["blocks"])
                blocks.push_back(sds::make_block(object["v"].get<int>(),
                                                 b.get<std::vector<int>>()));
            return blocks;
        }());
    CHECK(sds::render_family(parsed_back) == object["family"]);
}

TEST_CASE("search agrees with a direct library call on the same seed") {
    sds::SearchConfig config;
    config.rng_seed = 42;
    sds::SearchResult direct = sds::search(sds::ParameterSet(13, {4, 4}, 2), config);
    REQUIRE(direct.family.has_value());

    RunResult got = run("--json search --params \"(13;4,4;2)\" --seed 42 --emit raw");
    CHECK(got.exit_code == 0);
    json object = json::parse(got.output);
    CHECK(object["found"] == true);
    CHECK(object["family"] == sds::render_family(*direct.family));
    CHECK(object["generations"].get<long long>() == direct.stats.generations);
    CHECK(object["evaluations"].get<long long>() == direct.stats.evaluations);
}

TEST_CASE("search reports absence with exit 1") {
    RunResult got = run(
        "search --params \"(14;5,3;2)\" --seed 3 --pop 16 --gens 8 --restarts 0 "
        "--local-budget 30");
    CHECK(got.exit_code == 1);
    CHECK(got.output.find("none found") == 0);
}

TEST_CASE("corpus-check runs against the shipped data") {
    RunResult got = run(std::string("corpus-check --data ") + SDS_SOURCE_DATA_DIR +
                        " --no-fixpoint");
    CHECK(got.exit_code == 0);
    CHECK(got.output.find("failures=0") != std::string::npos);

    RunResult json_run =
        run(std::string("--json corpus-check --data ") + SDS_SOURCE_DATA_DIR + " --no-fixpoint");
    json object = json::parse(json_run.output);
    CHECK(object["clean"] == true);
    CHECK(object["verified"] == object["families"]);
}

TEST_CASE("pacf and golay2sds match the sequence utilities") {
    RunResult got = run("pacf \"++-+-+--++\" \"++-+++++--\"");
    CHECK(got.exit_code == 0);
    CHECK(got.output.find("sum: 20 0 0 0 0 0 0 0 0 0\n") != std::string::npos);

    RunResult conv = run("golay2sds \"++-+-+--++\" \"++-+++++--\"");
    CHECK(conv.exit_code == 0);
    CHECK(conv.output ==
          "family: {2,4,6,7} {2,8,9}\nparams: (10;4,3;2)\nnormal: {0,1,3,5} {0,1,4}\n");

    RunResult notpair = run("golay2sds \"++--\" \"++--\"");
    CHECK(notpair.exit_code == 1);
}

TEST_CASE("bibd develops the equal-size example") {
    RunResult got = run("bibd 7 \"{0,1,3} {0,1,3}\"");
    CHECK(got.exit_code == 0);
    CHECK(got.output == "bibd: v=7 b=14 r=6 k=3 lambda=2\npair_coverage=ok\n");
}
