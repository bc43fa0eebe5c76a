#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

#include "hypu/cli.hpp"
#include "hypu/errors.hpp"

using namespace hypu;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parse_parameters accepts and validates") {
    ParameterSet ps = parse_parameters("0.5,0.5,0.5", "0.75,0.75");
    CHECK(ps.p() == 2);
    CHECK(ps.a[2] == 0.5);

    CHECK_THROWS_AS(parse_parameters("1,2", "0"), ParseError);
    CHECK_THROWS_AS(parse_parameters("1,2,3", "1.5"), ParseError);
    CHECK_THROWS_AS(parse_parameters("1,x", "1.5"), ParseError);
    try {
        parse_parameters("1,x", "1.5");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    try {
        parse_parameters("1,2", "1.5,-3");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);  // second denominator entry
    }
}

TEST_CASE("eval subcommand: trivial closed form") {
    RunResult r = run({"eval", "--a", "1,1", "--b", "2", "--z", "0.5"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["method"] == "direct");
    CHECK(std::abs(j["value"].get<double>() - 2.0 * std::log(2.0)) <= 1e-12);
    CHECK(j["s"].get<double>() == 0.0);
    CHECK(j["warnings"].empty());
}

TEST_CASE("eval JSON numbers round-trip bit for bit") {
    RunResult r = run({"eval", "--a", "0.52,0.83,0.61,1.05", "--b",
                       "0.95,1.37,0.78", "--z", "0.75"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    double v = j["value"].get<double>();
    json reparsed = json::parse(j.dump());
    CHECK(reparsed["value"].get<double>() == v);
    // and the same number printed again parses to the same bits
    CHECK(json::parse(json(v).dump()).get<double>() == v);
}

TEST_CASE("auto method output is identical to the explicit method") {
    std::vector<std::string> base = {"eval", "--a", "0.52,0.83,0.61,1.05",
                                     "--b", "0.95,1.37,0.78", "--z", "0.75"};
    RunResult rauto = run(base);
    std::vector<std::string> exp = base;
    exp.push_back("--method");
    exp.push_back("continuation");
    RunResult rexp = run(exp);
    CHECK(rauto.code == 0);
    CHECK(rauto.out == rexp.out);
    json j = json::parse(rauto.out);
    CHECK(j["method"] == "continuation");
}

TEST_CASE("eval sweep: csv header and row count") {
    RunResult r = run({"eval", "--a", "0.52,0.83", "--b", "1.95", "--z-sweep",
                       "0.1:0.4:4", "--output", "csv"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "z,value,abs_err_estimate,terms_used,method");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 4);

    RunResult rj = run({"eval", "--a", "0.52,0.83", "--b", "1.95", "--z-sweep",
                        "0.1:0.4:4"});
    json arr = json::parse(rj.out);
    CHECK(arr.is_array());
    CHECK(arr.size() == 4);
    CHECK(arr[0]["z"].get<double>() == 0.1);
    CHECK(arr[3]["z"].get<double>() == 0.4);
}

TEST_CASE("eval usage errors exit 2") {
    // neither --z nor --z-sweep
    RunResult r1 = run({"eval", "--a", "1,1", "--b", "2"});
    CHECK(r1.code == 2);
    // both at once
    RunResult r2 = run({"eval", "--a", "1,1", "--b", "2", "--z", "0.5",
                        "--z-sweep", "0.1:0.2:2"});
    CHECK(r2.code == 2);
    // bad method value (rejected by the option validator)
    RunResult r3 = run({"eval", "--a", "1,1", "--b", "2", "--z", "0.5",
                        "--method", "magic"});
    CHECK(r3.code == 2);
    // missing required flag
    RunResult r4 = run({"eval", "--z", "0.5"});
    CHECK(r4.code == 2);
    // unknown subcommand
    RunResult r5 = run({"frobnicate"});
    CHECK(r5.code == 2);
}

TEST_CASE("parameter errors carry the token position") {
    RunResult r = run({"eval", "--a", "1,2", "--b", "0", "--z", "0.5"});
    CHECK(r.code == 2);
    json j = json::parse(r.out);
    CHECK(j["error"] == "ParseError");
    CHECK(j["position"].get<int>() == 1);

    RunResult r2 = run({"eval", "--a", "1,2,3", "--b", "1.5", "--z", "0.5"});
    CHECK(r2.code == 2);
    CHECK(json::parse(r2.out)["error"] == "ParseError");
}

TEST_CASE("numeric domain errors exit 1 with the error name") {
    // non-terminating series outside the convergence disc
    RunResult r = run({"eval", "--a", "0.52,0.83", "--b", "1.95", "--z",
                       "1.5"});
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["error"] == "DomainError");
    CHECK(j.contains("message"));

    // explicit continuation at nonzero integer balance is refused
    RunResult r2 = run({"expansion", "--a", "0.5,0.7,0.3", "--b", "1.0,1.5"});
    CHECK(r2.code == 1);
    CHECK(json::parse(r2.out)["error"] == "NotImplementedIntegerS");
}

TEST_CASE("expansion subcommand emits both coefficient families") {
    RunResult r = run({"expansion", "--a", "0.52,0.83,0.61,1.05", "--b",
                       "0.95,1.37,0.78", "--n-max", "4"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["N"].get<long>() == 4);
    CHECK(j["g0"].size() == 5);
    CHECK(j["gs"].size() == 5);
    const auto& ev = oracles()["eval"]["p3"];
    CHECK(std::abs(j["g0"][0].get<double>() - ev["g0_0"].get<double>()) <=
          1e-9);

    // zero-balanced parameters switch to the log-expansion fields
    RunResult rz = run({"expansion", "--a", "0.3,0.5,0.7", "--b", "0.6,0.9",
                        "--n-max", "3"});
    CHECK(rz.code == 0);
    json jz = json::parse(rz.out);
    CHECK(jz.contains("analytic"));
    CHECK(jz.contains("logpart"));
    CHECK(jz["logpart"][0].get<double>() == 1.0);
}

TEST_CASE("constant subcommand reports all applicable representations") {
    RunResult r =
        run({"constant", "--a", "0.5,0.5,0.5", "--b", "0.75,0.75"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["reps"].size() == 3);
    CHECK(j["reps"].contains("a_series"));
    CHECK(j["reps"].contains("closed_form"));
    CHECK(j["reps"].contains("descent"));
    CHECK(j["max_pairwise_deviation"].get<double>() <= 1e-9);
    double b0 = j["reps"]["a_series"]["B"].get<double>();
    double l0 = j["reps"]["a_series"]["L"].get<double>();
    CHECK(std::isfinite(b0));
    CHECK(l0 != b0);

    // single representation by name; unknown names exit 1
    RunResult r1 = run({"constant", "--a", "0.3,0.5,0.7", "--b", "0.6,0.9",
                        "--rep", "closed_form"});
    CHECK(r1.code == 0);
    CHECK(json::parse(r1.out)["reps"].size() == 1);
    RunResult r2 = run({"constant", "--a", "0.3,0.5,0.7", "--b", "0.6,0.9",
                        "--rep", "nope"});
    CHECK(r2.code == 1);
    CHECK(json::parse(r2.out)["error"] == "DomainError");

    // non-zero balance is a domain error
    RunResult r3 =
        run({"constant", "--a", "0.52,0.83,0.31", "--b", "0.95,1.37"});
    CHECK(r3.code == 1);
}

TEST_CASE("partial-sum subcommand: single m and geometric sweep") {
    RunResult r = run({"partial-sum", "--a", "0.3,0.5,0.7", "--b", "0.6,0.9",
                       "--m", "1000"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK_REL(j["sum"].get<double>(),
              oracles()["zb"]["p2"]["partial_sum_1000"].get<double>(),
              1e-12);
    CHECK(j["m"].get<long>() == 1000);
    CHECK(std::abs(j["defect"].get<double>()) < 0.01);

    RunResult rs = run({"partial-sum", "--a", "0.3,0.5,0.7", "--b",
                        "0.6,0.9", "--m-sweep", "100:100000:4", "--output",
                        "csv"});
    CHECK(rs.code == 0);
    std::istringstream is(rs.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "m,sum,asymptotic,defect");
    std::vector<long> ms;
    while (std::getline(is, line))
        if (!line.empty()) ms.push_back(std::stol(line));
    CHECK(ms == std::vector<long>{100, 1000, 10000, 100000});

    RunResult rbad = run({"partial-sum", "--a", "0.3,0.5,0.7", "--b",
                          "0.6,0.9"});
    CHECK(rbad.code == 2);
}

TEST_CASE("verify: identities suite passes and is deterministic") {
    RunResult r1 = run({"verify", "--suite", "identities"});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("PASS") != std::string::npos);
    CHECK(r1.out.find("FAIL") == std::string::npos);

    RunResult r2 = run({"verify", "--suite", "identities", "--seed", "7",
                        "--output", "json"});
    RunResult r3 = run({"verify", "--suite", "identities", "--seed", "7",
                        "--output", "json"});
    CHECK(r2.code == 0);
    CHECK(r2.out == r3.out);
    json j = json::parse(r2.out);
    CHECK(j["seed"].get<long>() == 7);
    CHECK(j["pass"].get<bool>());
    for (const auto& c : j["checks"]) {
        CHECK(c["pass"].get<bool>());
        CHECK(c["worst"].get<double>() <= c["tol"].get<double>());
    }
}

TEST_CASE("verify: unknown suite is a usage error") {
    RunResult r = run({"verify", "--suite", "wrong"});
    CHECK(r.code == 2);
}
