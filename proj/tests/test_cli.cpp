#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "opcalc/cli.hpp"
#include "opcalc/parser.hpp"

using namespace opcalc;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "opcalc");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve prints the particular solution") {
    const Run r = run({"solve", "y(t+2)-5*y(t+1)+4*y(t)=3^t"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("-1/2 * 3^t") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("json output carries every section") {
    const Run r = run({"solve", "y(t+1)-2*y(t)=2^t", "--initial", "y(0)=0", "--verify", "10", "--trace",
                       "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    const json j = json::parse(r.out);
    CHECK(j["particular"] == "2^(t-1) * t");
    CHECK(j["input"]["equation"] == "y(t+1)-2*y(t)=2^t");
    CHECK(j["input"]["initial"] == "y(0)=0");
    CHECK(j["operator"]["coefficients"] == json::array({"1", "-2"}));
    CHECK(j["homogeneous"].size() == 1);
    CHECK(j["constants"] == json::array({"0"}));
    REQUIRE(j["trace"].size() == 2);
    CHECK(j["trace"][0]["rule"] == "shift-theorem");
    CHECK(j["trace"][1]["rule"] == "unity");
    CHECK(j["verification"]["ok"] == true);
    CHECK(j["verification"]["checks"].size() == 2);
    CHECK(j["verification"]["checks"][0]["status"] == "exact-match");
}

TEST_CASE("the trace is only included on request") {
    const json plain = json::parse(run({"solve", "y(t+1)-y(t)=1", "--format", "json"}).out);
    CHECK(plain["trace"].empty());
    const Run explain = run({"explain", "y(t+1)-y(t)=1", "--format", "json"});
    REQUIRE(explain.code == cli::kOk);
    CHECK(json::parse(explain.out)["trace"].size() >= 1);
}

TEST_CASE("json particular re-parses to an evaluation-identical expression") {
    const char* sources[] = {
        "y(t+2)-5*y(t+1)+4*y(t)=3^t",
        "y(t+2)-5*y(t+1)+6*y(t)=cos(pi*t)",
        "y(t+2)-5*y(t+1)+4*y(t)=3^t*sin(pi*t)",
        "y(t+1)-2*y(t)=2^t",
        "y(t+3)-3*y(t+2)+3*y(t+1)-y(t)=t^2 + (1/2)^t",
        "y(t+2)-2*y(t+1)=2^t*t - cos(2*pi*t)",
        "y(t+1)+y(t)=(-1)^t*t",
    };
    for (const char* src : sources) {
        CAPTURE(src);
        const Run r = run({"solve", src, "--format", "json"});
        REQUIRE(r.code == cli::kOk);
        const json j = json::parse(r.out);
        const SequenceExpr reparsed = parse_expression(j["particular"].get<std::string>());
        const SequenceExpr direct = solve(parse_equation(src)).particular;
        for (long t = -10; t <= 10; ++t) CHECK(eval_at(reparsed, t) == eval_at(direct, t));
        CHECK(reparsed == direct);
    }
}

TEST_CASE("exit codes") {
    CHECK(run({"solve", "y(t+1)-y(t)="}).code == cli::kParseError);
    CHECK(run({"solve", "y(t)=1"}).code == cli::kParseError);
    CHECK(run({"solve", "y(t+1)-y(t)=t^t"}).code == cli::kUnsupportedRhs);
    CHECK(run({"solve", "y(t+1)-y(t)=1", "--initial", "y(0)=1, y(2)=2"}).code == cli::kParseError);
    CHECK(run({"solve", "y(t+2)-2*y(t+1)=1", "--initial", "y(0)=1, y(1)=2"}).code == cli::kParseError);
    CHECK(run({"solve", "y(t+1)-y(t)=1", "--format", "yaml"}).code == cli::kParseError);
    CHECK(run({"bogus"}).code == cli::kParseError);
    CHECK(run({"verify", "y(t+2)-5*y(t+1)+4*y(t)=3^t", "-1/3 * 3^t"}).code == cli::kVerifyMismatch);
    CHECK(run({"verify", "y(t+2)-5*y(t+1)+4*y(t)=3^t", "-1/2 * 3^t"}).code == cli::kOk);
    CHECK(run({"solve", "y(t+1)-2*y(t)=2^t", "--verify", "20"}).code == cli::kOk);
}

TEST_CASE("parse errors point at the offending byte") {
    const Run r = run({"solve", "y(t+1)-y(t)="});
    CHECK(r.err.find("offset 12") != std::string::npos);
    CHECK(r.err.find("y(t+1)-y(t)=\n") != std::string::npos);
    CHECK(r.err.find(std::string(12, ' ') + "^") != std::string::npos);

    const Run bad_init = run({"solve", "y(t+1)-y(t)=1", "--initial", "y(0)=1,"});
    CHECK(bad_init.code == cli::kParseError);
    CHECK(bad_init.err.find("y(0)=1,\n") != std::string::npos);
}

TEST_CASE("verify reports the first mismatch") {
    const Run r = run({"verify", "y(t+2)-5*y(t+1)+4*y(t)=3^t", "-1/3 * 3^t", "--format", "json"});
    REQUIRE(r.code == cli::kVerifyMismatch);
    const json j = json::parse(r.out);
    CHECK(j["verification"]["ok"] == false);
    const json& m = j["verification"]["checks"][0]["mismatch"];
    CHECK(m["t"] == 0);
    CHECK(m["expected"] == "1");
    CHECK(m["got"] == "2/3");
}

TEST_CASE("apply") {
    const Run r = run({"apply", "T^2-5*T+4", "-1/2 * 3^t"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("3^t") != std::string::npos);

    const json j = json::parse(run({"apply", "T", "t^2", "--format", "json"}).out);
    CHECK(j["result"] == "t^2 + 2*t + 1");
    CHECK(j["input"]["expression"] == "t^2");
    CHECK(j["operator"]["display"] == "T");

    CHECK(run({"apply", "0", "t"}).code == cli::kParseError);
}

TEST_CASE("numeric modes in json") {
    const Run r = run({"solve", "y(t+2)+y(t)=0", "--initial", "y(0)=0, y(1)=1", "--verify", "20", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    const json j = json::parse(r.out);
    REQUIRE(j["homogeneous"].size() == 2);
    CHECK(j["homogeneous"][0]["kind"] == "numeric");
    CHECK(j["verification"]["checks"][1]["status"] == "max-abs-deviation");
}
