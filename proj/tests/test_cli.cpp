#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "groupdet/cli.hpp"
#include "groupdet/errors.hpp"
#include "groupdet/factorization.hpp"

using namespace groupdet;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "groupdet");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("theta") {
    const Outcome r = run({"theta", "--group", "cyclic:2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "x_0^2 - x_1^2\n");
    const Outcome j = run({"theta", "--group", "cyclic:3", "--format", "json"});
    const json doc = json::parse(j.out);
    CHECK(doc["schema"] == "1");
    CHECK(doc["order"] == 3);
    CHECK(doc["theta"] == group_determinant(builtin_group("cyclic:3")).to_string());
}

TEST_CASE("factorize json") {
    const Outcome r = run({"factorize", "--group", "s3", "--subgroup", "derived", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    const json doc = json::parse(r.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["factors"].size() == 3);
    CHECK(doc["coefficients"].size() == 3);
    CHECK(doc["checks"]["conjugacy_invariant"] == true);
    CHECK(doc["mismatches"].empty());
    for (const auto& f : doc["factors"]) {
        CHECK(f.contains("character"));
        CHECK(f.contains("algebra"));
        CHECK(f.contains("scalar"));
    }
}

TEST_CASE("factorize over a non-normal subgroup leaves invariance unset") {
    const Outcome r = run({"factorize", "--group", "s3", "--subgroup", "(1 2)", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    CHECK(json::parse(r.out)["checks"]["conjugacy_invariant"].is_null());
}

TEST_CASE("verify is deterministic") {
    const std::vector<std::string> args{"verify", "--group", "q8", "--subgroup", "2", "--seed", "9"};
    const Outcome a = run(args);
    const Outcome b = run(args);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(a.out.find("FAIL") == std::string::npos);
}

TEST_CASE("conjugation laws report the failing fixed-point law") {
    const Outcome r = run({"conjugate", "--group", "cyclic:4", "--subgroup", "2", "--laws"});
    CHECK(r.code == cli::kVerificationFailed);
    CHECK(r.out.find("law central_implies_fixed: FAIL") != std::string::npos);
    CHECK(r.out.find("central element not fixed by conj") != std::string::npos);
    const Outcome s = run({"conjugate", "--group", "s3", "--subgroup", "derived", "--laws"});
    CHECK(s.code == cli::kOk);
}

TEST_CASE("conjugate an explicit element") {
    const Outcome r = run({"conjugate", "--group", "cyclic:4", "--subgroup", "2", "--element", R"({"1": 1})"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("conj(A) = -1*1") != std::string::npos);
    const Outcome bad = run({"conjugate", "--group", "cyclic:4", "--subgroup", "2", "--element", "{oops"});
    CHECK(bad.code == cli::kUsage);
}

TEST_CASE("invert2") {
    const Outcome r = run({"invert2", "--group", "q8", "--count", "8"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("failures 0") != std::string::npos);
}

TEST_CASE("lift") {
    const Outcome r = run({"lift", "--group", "cyclic:2", "--subgroup", "trivial"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("[ x_0*0 | x_1*0 ]") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({"theta", "--group", "nonsense:4"}).code == cli::kUsage);
    CHECK(run({"theta"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"theta", "--group", "s3", "--det-strategy", "gauss"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("library errors") {
    CHECK(run({"factorize", "--group", "sym:4", "--subgroup", "derived"}).code == cli::kLibraryError);
    CHECK(run({"theta", "--group", "s3", "--order-cap", "4"}).code == cli::kLibraryError);
}

TEST_CASE("group from a Cayley table file") {
    const auto path = std::filesystem::temp_directory_path() / "groupdet_test_z3.json";
    {
        std::ofstream f(path);
        f << R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]], "names": ["e","a","b"]})";
    }
    const Outcome r = run({"theta", "--group", path.string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == group_determinant(builtin_group("cyclic:3")).to_string() + "\n");
    const GroupPtr g = cli::load_group(path.string());
    CHECK(g->name(1) == "a");
    std::filesystem::remove(path);

    CHECK_THROWS_AS(cli::group_from_json(R"({"order": 2, "table": [[0,1],[0,1]]})"), NotAGroup);
}
