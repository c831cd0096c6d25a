#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace kunzsg;
using nlohmann::json;
using testing::kv;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args)
{
    args.push_back("--json");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("analyze")
{
    const auto j = run_json({"analyze", "--gens", "4,31,53"});
    CHECK(j["schema_version"] == "1");
    CHECK(j["command"]["name"] == "analyze");
    const auto& r = j["result"];
    CHECK(r["kunz"] == json::array({13, 15, 7}));
    CHECK(r["frobenius"] == 58);
    CHECK(r["genus"] == 35);
    CHECK(r["special_gaps"] == json::array({49, 58}));

    const auto o = run_json({"analyze", "--kunz", "3:1,1"});
    CHECK(o["result"]["generators"] == json::array({3, 4, 5}));
    CHECK(o["result"]["classification"]["irreducible"] == true);
}

TEST_CASE("input errors exit 2")
{
    auto r = run({"analyze", "--kunz", "3:1,3"});
    CHECK(r.code == cli::Usage);
    CHECK(r.err.find("2x_1 >= x_2") != std::string::npos);

    CHECK(run({"analyze"}).code == cli::Usage);
    CHECK(run({"analyze", "--gens", "4,6"}).code == cli::Usage);
    CHECK(run({"analyze", "--gens", "4,x"}).code == cli::Usage);
    CHECK(run({"analyze", "--gens", "3,4", "--kunz", "3:1,1"}).code == cli::Usage);
    CHECK(run({"decompose", "--kunz", "4:1,1"}).code == cli::Usage);
    CHECK(run({"nope"}).code == cli::Usage);
    CHECK(run({}).code == cli::Usage);
    CHECK(run({"enumerate", "--m", "3", "--max-coord", "2", "--filter", "odd"}).code == cli::Usage);
}

TEST_CASE("decompose")
{
    auto r = run({"decompose", "--gens", "3,23,40"});
    CHECK(r.code == 0);
    CHECK(r.out == "[[3,20],[3,13,23]]\n");

    r = run({"decompose", "--kunz", "4:5,4,5", "--count"});
    CHECK(r.out == "9\n");

    r = run({"decompose", "--kunz", "4:1,1,1"});
    CHECK(r.out == "[[4,5,6,7]]\n");

    r = run({"decompose", "--kunz", "4:5,4,5", "--all"});
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);
    CHECK(r.out.rfind("[[4,9,11],[4,7],[4,6,17]]\n", 0) == 0);

    const auto j = run_json({"decompose", "--kunz", "5:2,2,2,3", "--all"});
    std::set<std::vector<std::vector<Int>>> got;
    for (const auto& d : j["result"]["decompositions"]) {
        got.insert(d.get<std::vector<std::vector<Int>>>());
    }
    std::set<std::vector<std::vector<Int>>> want;
    for (const auto& d : all_minimal_decompositions(kv(5, {2, 2, 2, 3}))) {
        want.insert(testing::gens_of(d.factors));
    }
    CHECK(got == want);
}

TEST_CASE("family")
{
    auto j = run_json({"family", "--m", "3", "--h", "3", "--d", "2", "--k", "1"});
    CHECK(j["result"]["frobenius"] == 19);
    CHECK(j["result"]["classification"]["symmetric"] == true);

    j = run_json({"family", "--m", "4", "--h", "2", "--d", "3", "--k", "3"});
    CHECK(j["result"]["classification"]["irreducible"] == false);

    const auto r = run({"family", "--m", "3", "--h", "1", "--d", "3", "--k", "2"});
    CHECK(r.code == cli::Usage);
    CHECK(r.err.find("gcd(3,3)") != std::string::npos);
}

TEST_CASE("enumerate")
{
    auto r = run({"enumerate", "--m", "3", "--max-coord", "2"});
    CHECK(r.out == "(1,1)\n(1,2)\n(2,1)\n(2,2)\n");
    r = run({"enumerate", "--m", "3", "--max-coord", "2", "--filter", "irreducible"});
    CHECK(r.out == "(1,1)\n(1,2)\n(2,1)\n");
    r = run({"enumerate", "--m", "4", "--max-coord", "1"});
    CHECK(r.out == "(1,1,1)\n");
    r = run({"enumerate", "--m", "3", "--max-coord", "3", "--filter", "genus=3"});
    CHECK(r.out == "(1,2)\n(2,1)\n");
    CHECK(run({"enumerate", "--m", "3", "--max-coord", "3", "--verify"}).code == 0);
    CHECK(run({"enumerate", "--m", "3", "--max-coord", "9", "--verify"}).code == cli::Usage);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--m", "3", "--max-coord", "6"});
    CHECK(r.code == cli::Ok);
    r = run({"verify", "--m", "4", "--max-coord", "5"});
    CHECK(r.code == cli::Ok);
    CHECK(r.out.find("note:") != std::string::npos);
    CHECK(run({"verify", "--m", "7", "--max-coord", "3"}).code == cli::Usage);

    const auto j = run_json({"verify", "--m", "3", "--max-coord", "6"});
    CHECK(j["result"]["vectors"] == 26);
}

TEST_CASE("descriptors round-trip")
{
    for (int m = 2; m <= 5; ++m) {
        for (const auto& x : enumerate_kunz(m, 4)) {
            const auto d = cli::describe(x);
            REQUIRE(cli::kunz_from_descriptor(json::parse(d.dump())) == x);
            REQUIRE(from_generators(d["generators"].get<std::vector<Int>>()).kunz() == x);
        }
    }
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::vector<std::string>> cases{
        {"analyze", "--gens", "4,18,21,23", "--json"},
        {"decompose", "--kunz", "4:5,4,5", "--all", "--json"},
        {"enumerate", "--m", "5", "--max-coord", "3"},
        {"verify", "--m", "4", "--max-coord", "4", "--json"},
    };
    for (const auto& c : cases) {
        const auto a = run(c);
        const auto b = run(c);
        REQUIRE(a.code == b.code);
        REQUIRE(a.out == b.out);
    }
}

TEST_CASE("parsers")
{
    CHECK(cli::parse_list("4, 31,53") == std::vector<Int>{4, 31, 53});
    CHECK(cli::parse_kunz("4:13,15,7") == kv(4, {13, 15, 7}));
    CHECK_THROWS_AS((void)cli::parse_kunz("13,15,7"), Error);
    CHECK_THROWS_AS((void)cli::parse_kunz("4:1,x,1"), Error);
}
