#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qil/cli.hpp"
#include "qil/decomposition.hpp"
#include "qil/poly_io.hpp"

#include "worked_example.hpp"

using namespace qil;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    const int code = run_cli(args, [&] { return stdin_text; }, out, err);
    return {code, out.str(), err.str()};
}

struct TempInput {
    std::string path = "cli_input.tmp";
    explicit TempInput(const std::string& text) {
        std::ofstream f(path);
        f << text;
    }
    ~TempInput() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("constant from stdin") {
    const Run r = cli({}, "5");
    CHECK(r.code == 0);
    CHECK(r.out == "content: 5\nmonomial: 1\np0: 1\nfactors: 0\n");
    CHECK(r.err.empty());
}

TEST_CASE("file input does not touch stdin") {
    const TempInput in("x1^3 + q*x1");
    std::ostringstream out, err;
    const int code = run_cli({in.path, "--verify"},
                             []() -> std::string { throw std::logic_error("stdin read"); },
                             out, err);
    CHECK(code == 0);
    CHECK(out.str() ==
          "content: 1\nmonomial: x1\np0: 1\nfactors: 1\n  (1): y^2+q\nverify: ok\n");
}

TEST_CASE("parse and input errors exit with code 1") {
    Run r = cli({}, "x1 + @");
    CHECK(r.code == 1);
    CHECK(r.err.find("parse error at line 1, column 6") != std::string::npos);

    r = cli({}, "");
    CHECK(r.code == 1);
    CHECK(r.err.find("empty input") != std::string::npos);

    r = cli({}, "0");
    CHECK(r.code == 1);
    CHECK(r.err == "input error: zero polynomial has no decomposition\n");

    r = cli({"--no-such-flag"}, "5");
    CHECK(r.code != 0);
}

TEST_CASE("all algorithms print the same decomposition") {
    const Run a = cli({"--algorithm", "newton", "--verify"}, testdata::kBig4Input);
    const Run b = cli({"--algorithm", "bivariate", "--verify"}, testdata::kBig4Input);
    const Run c = cli({"--algorithm", "oracle", "--verify"}, testdata::kBig4Input);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out.find("factors: 2\n  (2,-4,3,5): 3*q^2*y^3+q*y+1\n"
                     "  (-4,8,-6,7): 7*q*y^2-2*y+2*q\n") != std::string::npos);
    CHECK(a.out.find("monomial: x1^8*x2^12*x3^12\n") != std::string::npos);
    CHECK(a.out.find("verify: ok\n") != std::string::npos);
}

TEST_CASE("json output round-trips to the input polynomial") {
    const Run r = cli({"--json"}, testdata::kBig4Input);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["nvars"] == 4);
    CHECK(j["content"] == "1");
    CHECK(j["monomial"] == nlohmann::json({8, 12, 12, 0}));
    CHECK(j["factors"].size() == 2);
    CHECK(j["factors"][0]["type"] == nlohmann::json({2, -4, 3, 5}));

    // Rebuild the product from the printed parts.
    QILDecomposition d;
    d.nvars = 4;
    d.content = parse_coef(j["content"].get<std::string>());
    for (const auto& m : j["monomial"]) d.monomial.push_back(m.get<int64_t>());
    d.p0 = parse_poly(j["p0"].get<std::string>(), default_var_names(4));
    for (const auto& f : j["factors"]) {
        QILFactor qf;
        for (const auto& t : f["type"]) qf.type.push_back(t.get<int64_t>());
        qf.poly = parse_poly(f["poly"].get<std::string>(), {"y"});
        d.factors.push_back(std::move(qf));
    }
    CHECK(expand(d) == parse_poly(testdata::kBig4Input, default_var_names(4)));

    // Key order is part of the contract.
    CHECK(r.out.find("\"nvars\"") < r.out.find("\"content\""));
    CHECK(r.out.find("\"content\"") < r.out.find("\"monomial\""));
    CHECK(r.out.find("\"monomial\"") < r.out.find("\"p0\""));
    CHECK(r.out.find("\"p0\"") < r.out.find("\"factors\""));
}

TEST_CASE("json output is identical across algorithms") {
    const Run a = cli({"--json", "--algorithm", "newton"}, testdata::kBig4Input);
    const Run b = cli({"--json", "--algorithm", "bivariate"}, testdata::kBig4Input);
    CHECK(a.out == b.out);
}

TEST_CASE("explicit variable order is respected") {
    const Run r = cli({"--vars", "x2,x1", "--json"}, "x2 + x1");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["monomial"] == nlohmann::json({1, 0}));
    CHECK(j["factors"][0]["type"] == nlohmann::json({-1, 1}));
    CHECK(j["factors"][0]["poly"] == "y+1");
}

TEST_CASE("linearity-only mode") {
    Run r = cli({"--linearity-only"}, "x1*x2 - q");
    CHECK(r.code == 0);
    CHECK(r.out == "q-integer-linear: true\n");

    r = cli({"--linearity-only"}, "x1*x2 + x2^2*x3 + q");
    CHECK(r.code == 0);
    CHECK(r.out == "q-integer-linear: false\n"
                   "witness: minimum of x3 is attained by more than one support point\n");
}

TEST_CASE("generator is seed deterministic") {
    const Run a = cli({"--generate", "2,1,2,1", "--seed", "5"});
    const Run b = cli({"--generate", "2,1,2,1", "--seed", "5"});
    const Run c = cli({"--generate", "2,1,2,1", "--seed", "6"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(a.out.rfind("input: ", 0) == 0);
    CHECK(a.out.find("factors:") != std::string::npos);
}

TEST_CASE("bench reports timing") {
    const Run r = cli({"--bench", "3", "--seed", "1"}, "x1*x2 - q");
    CHECK(r.code == 0);
    CHECK(r.out.find("bench: runs=3 total=") != std::string::npos);
    CHECK(r.out.find("avg=") != std::string::npos);
}
