#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "dioph");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = dioph::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("digits") {
    const auto r = invoke({"digits", "rat:1/3", "--base", "10", "--count", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.3333 certified:4\n");

    const auto e = invoke({"digits", "e", "--count", "10", "--format", "json"});
    CHECK(e.code == 0);
    const auto j = nlohmann::json::parse(e.out);
    CHECK(j["integer_part"] == "2");
    CHECK(j["digits"] == nlohmann::json::array({7, 1, 8, 2, 8, 1, 8, 2, 8, 4}));
    CHECK(j["certified"] == 10);
}

TEST_CASE("cf and mu") {
    CHECK(invoke({"cf", "e", "--terms", "12"}).out == "[2,1,2,1,1,4,1,1,6,1,1,8]\n");
    const auto third = invoke({"cf", "rat:22/7"});
    CHECK(third.code == 0);
    CHECK(third.out == "[3,7]\n");

    const auto golden = invoke({"mu", "surd:1,2,5", "--terms", "40", "--format", "json"});
    CHECK(golden.code == 0);
    const auto j = nlohmann::json::parse(golden.out);
    CHECK(j["tail_max"]["kind"] == "estimate");
    CHECK(j["tail_max"]["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-6));

    CHECK(invoke({"mu", "rat:1/7"}).code == dioph::cli::usage);
}

TEST_CASE("profiles") {
    const auto csv = invoke({"complexity", "word:0110", "--nmax", "2"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "n,p_n,gap\n1,2,1\n2,3,1\n");

    const auto json = invoke({"gap", "sturmian:fibonacci", "--base", "2", "--prefix", "2000", "--format", "json"});
    CHECK(json.code == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["kind"] == "lower_bound");
    for (const auto& g : j["gaps"]) CHECK(g == 1);
}

TEST_CASE("repetition exponents") {
    const auto r = invoke({"dio", "word:0000000000", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["global"]["u"] == 0);
    CHECK(j["global"]["v"] == 1);
    CHECK(j["global"]["m"] == 10);
    CHECK(j["global"]["score_num"] == "10");
    CHECK(j["global"]["score_estimate"]["kind"] == "estimate");

    const auto ice = invoke({"ice", "word:0100101001001"});
    CHECK(ice.code == 0);
    CHECK(ice.out.find("global     u=0 v=5 m=11 score 11/5 ~ 2.200000") != std::string::npos);

    CHECK(invoke({"dio", "word:0"}).code == dioph::cli::usage);
}

TEST_CASE("sturmian and quasi") {
    const auto s = invoke({"sturmian", "surd:-1,2,5", "--prefix", "20"});
    CHECK(s.code == 0);
    CHECK(s.out.size() == 21);

    const auto q = invoke({"quasi", "2", "0>01;1>001", "surd:-1,2,5", "--prefix", "4000", "--format", "json"});
    CHECK(q.code == 0);
    const auto j = nlohmann::json::parse(q.out);
    CHECK(j["word_prefix"].get<std::string>().starts_with("20"));
    CHECK(j["fit"]["found"] == true);
}

TEST_CASE("approximant and report") {
    const auto a = invoke({"approximant", "rat:1/3", "--prefix", "20", "--format", "json"});
    CHECK(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["lowest_terms"]["num"] == "1");
    CHECK(j["lowest_terms"]["den"] == "3");

    const auto fib = invoke({"approximant", "sturmian:fibonacci", "--base", "2", "--prefix", "2000"});
    CHECK(fib.code == 0);
    CHECK(fib.out.find("b^-m: holds") != std::string::npos);

    const auto rat = invoke({"report", "rat:1/7"});
    CHECK(rat.code == 0);
    CHECK(nlohmann::json::parse(rat.out)["status"] == "rational");
}

TEST_CASE("usage errors") {
    const auto bad = invoke({"digits", "mobius:0,1,1,0:(e"});
    CHECK(bad.code == dioph::cli::usage);
    CHECK(bad.err.find("17") != std::string::npos);
    CHECK(invoke({}).code == dioph::cli::usage);
    CHECK(invoke({"digits", "e", "--base", "1"}).code == dioph::cli::usage);
    CHECK(invoke({"complexity", "e", "--format", "yaml"}).code == dioph::cli::usage);
    CHECK(invoke({"verify", "--suite", "nope"}).code == dioph::cli::usage);
    CHECK(invoke({"sturmian", "surd:-1,2,5", "--intercept", "x"}).code == dioph::cli::usage);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("budget exhaustion") {
    ::setenv("DIOPH_BUDGET_BITS", "256", 1);
    const auto r = invoke({"digits", "e", "--count", "500"});
    ::unsetenv("DIOPH_BUDGET_BITS");
    CHECK(r.code == dioph::cli::budget);
    CHECK(r.err.find("budget exhausted") != std::string::npos);
}

TEST_CASE("verify") {
    const auto r = invoke({"verify", "--suite", "fibonacci"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS 02-sturmian-complexity") != std::string::npos);
    CHECK(r.out.find("PASS 03-fibonacci-dio") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"dio", "e", "--prefix", "3000", "--threads", "4", "--format", "json"},
          std::vector<std::string>{"mu", "e", "--format", "json"}}) {
        CHECK(invoke(args).out == invoke(args).out);
    }
}
