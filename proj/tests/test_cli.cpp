#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conedef/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace conedef::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const std::vector<std::string>& args) {
    const auto r = call(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("descriptor parsing") {
    CHECK(std::get<conedef::cone::VeroneseProjectiveSpace>(parse_descriptor("veronese:2:3")).d == 3);
    CHECK(std::get<conedef::cone::ProductBundle>(parse_descriptor("product:1:2")).b == 2);
    CHECK_THROWS_WITH_AS(parse_descriptor("rnc:x"), doctest::Contains("'x'"), UsageError);
    CHECK_THROWS_WITH_AS(parse_descriptor("cubic:3"), doctest::Contains("'cubic'"), UsageError);
    CHECK_THROWS_AS(parse_descriptor("rnc:4:1"), UsageError);
    CHECK_THROWS_AS(parse_descriptor("delpezzo:9"), UsageError);
    CHECK_THROWS_AS(parse_descriptor("segre:0"), UsageError);
    CHECK(parse_window("-3..1") == std::pair{-3, 1});
    CHECK_THROWS_AS(parse_window("3..-3"), UsageError);
    CHECK_THROWS_WITH_AS(parse_window("-3...1"), doctest::Contains("'.1'"), UsageError);
    CHECK_THROWS_AS(parse_window("5"), UsageError);
}

TEST_CASE("exit codes") {
    CHECK(call({"t1", "rnc:4", "--weights", "-3..1"}).code == exit_ok);
    CHECK(call({"t1", "rnc:4", "--weights", "3..-3"}).code == exit_usage);
    CHECK(call({"t1", "rnc:0"}).code == exit_usage);
    CHECK(call({"t1", "rnc:4", "--order", "3"}).code == exit_usage);
    CHECK(call({"t1", "delpezzo:6", "--order", "2"}).code == exit_out_of_scope);
    CHECK(call({"t1", "delpezzo:6"}).code == exit_out_of_scope);
    CHECK(call({"t1", "veronese:3:1", "--order", "2"}).code == exit_out_of_scope);
    CHECK(call({"jacobian", "--d", "1"}).code == exit_usage);
    CHECK(call({"jacobian", "--d", "4"}).code == exit_usage);
    CHECK(call({"atiyah", "--n", "1"}).code == exit_usage);
    CHECK(call({}).code == exit_usage);
    const auto unknown = call({"frobnicate"});
    CHECK(unknown.code == exit_usage);
    CHECK(unknown.err.find("frobnicate") != std::string::npos);
    const auto bad = call({"rigidity", "product:1:y"});
    CHECK(bad.code == exit_usage);
    CHECK(bad.err.find("'y'") != std::string::npos);
    CHECK(call({"--help"}).code == exit_ok);
}

TEST_CASE("t1 tables") {
    const auto j = json_of({"t1", "rnc:4", "--weights", "-3..1"});
    CHECK(j["schema_version"] == schema_version);
    CHECK(j["command"] == "t1");
    CHECK(j["result"]["entries"] == nlohmann::json{{"-3", 9}, {"-2", 5}, {"-1", 1}, {"0", 0}, {"1", 0}});
    CHECK_FALSE(j.contains("trace"));
    const auto s = json_of({"t1", "segre:3", "--weights", "-4..1"});
    CHECK(s["result"]["verdict_note"] == "rigid within window");
}

TEST_CASE("CSV and JSON carry the same numbers") {
    for (const std::string desc : {"rnc:4", "segre:1", "veronese:2:3", "product:2:1"}) {
        for (const std::string order : {"1", "2"}) {
            CAPTURE(desc);
            const auto j = json_of({"t1", desc, "--weights", "-4..2", "--order", order});
            const auto csv = call({"t1", desc, "--weights", "-4..2", "--order", order, "--format", "csv"});
            REQUIRE(csv.code == 0);
            std::istringstream lines(csv.out);
            std::string line;
            std::getline(lines, line);
            CHECK(line == "weight,dimension");
            std::size_t rows = 0;
            while (std::getline(lines, line)) {
                const auto comma = line.find(',');
                const std::string weight = line.substr(0, comma);
                CHECK(j["result"]["entries"][weight].get<long>() == std::stol(line.substr(comma + 1)));
                ++rows;
            }
            CHECK(rows == j["result"]["entries"].size());
        }
    }
}

TEST_CASE("traces") {
    const auto j = json_of({"t1", "segre:1", "--weights", "-3..1", "--trace"});
    REQUIRE(j.contains("trace"));
    CHECK(j["trace"].size() == 5);
    CHECK(j["trace"][1]["weight"] == -2);
    CHECK(j["trace"][1]["dimension"] == 2);
    setenv("CONEDEF_TRACE", "1", 1);
    const auto env = json_of({"t1", "rnc:4", "--weights", "-1..0"});
    unsetenv("CONEDEF_TRACE");
    CHECK(env["trace"].size() == 2);
    CHECK(env["inputs"]["trace"] == true);
    const auto csv = call({"t1", "rnc:4", "--weights", "0..0", "--format", "csv", "--trace"});
    CHECK(csv.out.rfind("weight,dimension,rule,anchor\n", 0) == 0);
}

TEST_CASE("rigidity output") {
    const auto s1 = json_of({"rigidity", "segre:1"});
    CHECK(s1["result"]["rigid"] == false);
    CHECK(s1["result"]["witness"] == nlohmann::json{{"weight", -2}, {"dim", 2}});
    const auto r2 = json_of({"rigidity", "rnc:2"});
    CHECK(r2["result"]["witness"] == nlohmann::json{{"weight", -2}, {"dim", 1}});
    const auto dp = json_of({"rigidity", "delpezzo:6"});
    CHECK(dp["result"]["rigid"].is_null());
    const auto& counts = dp["result"]["certificate"]["counts"];
    CHECK(counts["verified"].get<int>() > 0);
    CHECK(counts["asserted"].get<int>() > 0);
    CHECK(counts["contradicted"].get<int>() > 0);
    CHECK(dp["result"]["certificate"]["steps"].size() ==
          counts["verified"].get<std::size_t>() + counts["asserted"].get<std::size_t>() +
              counts["contradicted"].get<std::size_t>());
}

TEST_CASE("jacobian output") {
    const auto w = json_of({"jacobian", "--d", "4", "--weight", "-1"});
    CHECK(w["result"]["graded"]["source_h0"] == 8);
    CHECK(w["result"]["graded"]["target_h0"] == 9);
    CHECK(w["result"]["graded"]["t1"] == 1);
    CHECK(w["result"]["graded"]["exact"] == true);
    const auto m = json_of({"jacobian", "--d", "4", "--dump-matrix"});
    CHECK(m["result"]["matrix"]["rows"] == 6);
    CHECK(m["result"]["matrix"]["entries"][5] == nlohmann::json{"0", "0", "z4", "-2*z3", "z2"});
}

TEST_CASE("cech and atiyah") {
    const auto c = json_of({"cech", "--degree", "-4"});
    CHECK(c["result"]["h1"] == 3);
    CHECK(c["result"]["basis"]["h1"].size() == 3);
    CHECK(json_of({"cech", "--degree", "2"})["result"]["basis"]["h0"].size() == 3);
    CHECK(json_of({"atiyah", "--n", "3"})["result"]["pass"] == true);
}

TEST_CASE("repeated runs are byte-identical") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"rigidity", "delpezzo:6"}, {"t1", "veronese:2:2", "--order", "2"}, {"jacobian", "--d", "5", "--weight", "-1"}}) {
        const auto first = call(args).out;
        for (int i = 0; i < 2; ++i) CHECK(call(args).out == first);
    }
}
