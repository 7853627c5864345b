#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qil/errors.hpp"
#include "qil/generator.hpp"
#include "qil/poly_io.hpp"
#include "qil/qild.hpp"

#include "worked_example.hpp"

using namespace qil;

namespace {

const std::vector<std::string> V4{"x1", "x2", "x3", "x4"};

MultiPoly big() { return parse_poly(testdata::kBig4Input, V4); }

QILDecomposition big_expected() {
    QILDecomposition d;
    d.nvars = 4;
    d.content = QCoef(1);
    d.monomial = {8, 12, 12, 0};
    d.p0 = parse_poly(testdata::kBig4P0, V4);
    d.factors.push_back({{2, -4, 3, 5}, parse_poly(testdata::kBig4Factor1, {"y"})});
    d.factors.push_back({{-4, 8, -6, 7}, parse_poly(testdata::kBig4Factor2, {"y"})});
    return d;
}

} // namespace

TEST_CASE("constant input") {
    const QILDecomposition d = decompose_newton(MultiPoly::constant(1, QCoef(5)));
    CHECK(d.content == QCoef(5));
    CHECK(d.monomial == ExpVec{0});
    CHECK(d.p0.is_one());
    CHECK(d.factors.empty());
    CHECK(verify(MultiPoly::constant(1, QCoef(5)), d));
}

TEST_CASE("univariate splits into monomial and type factor") {
    const MultiPoly p = parse_poly("x1^3 + q*x1", {"x1"});
    const QILDecomposition d = decompose_newton(p);
    CHECK(d.content == QCoef(1));
    CHECK(d.monomial == ExpVec{1});
    CHECK(d.p0.is_one());
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].type == std::vector<int64_t>{1});
    CHECK(d.factors[0].poly == parse_poly("y^2 + q", {"y"}));
    CHECK(verify(p, d));
}

TEST_CASE("zero input is rejected") {
    CHECK_THROWS_AS((void)decompose_newton(MultiPoly(3)), zero_polynomial);
    CHECK_THROWS_AS((void)decompose_bivariate_iter(MultiPoly(3)), zero_polynomial);
    CHECK_THROWS_AS((void)is_q_integer_linear(MultiPoly(2)), zero_polynomial);
}

TEST_CASE("worked example: polytope algorithm") {
    const MultiPoly p = big();
    DecomposeStats st;
    const QILDecomposition d = decompose_newton(p, &st);
    CHECK(d == big_expected());
    CHECK(st.candidate_extractions >= 2);
    std::string reason;
    CHECK(verify(p, d, &reason));
    CHECK(reason.empty());
}

TEST_CASE("worked example: iterative algorithm with stage trace") {
    const MultiPoly p = big();
    StageTrace tr;
    const QILDecomposition d = decompose_bivariate_iter(p, nullptr, &tr);
    CHECK(d == big_expected());
    CHECK(verify(p, d));
    REQUIRE(tr.stage_types.size() == 3);
    CHECK(tr.stage_types[0] ==
          std::vector<std::vector<int64_t>>{{-1, 2}});
    CHECK(tr.stage_types[1] ==
          std::vector<std::vector<int64_t>>{{2, -4, 3}});
    CHECK(tr.stage_types[2] ==
          std::vector<std::vector<int64_t>>{{-4, 8, -6, 7}, {2, -4, 3, 5}});
}

TEST_CASE("linearity recognizer golden values") {
    LinearityWitness w;
    DecomposeStats st;
    CHECK(!is_q_integer_linear(big(), &w, &st));
    CHECK(w.kind == LinearityWitness::Kind::NonUniqueExtremum);
    CHECK(w.var == 3);
    CHECK(w.is_min);
    CHECK(st.candidate_extractions == 0);

    CHECK(!is_q_integer_linear(parse_poly(testdata::kBig4P0, V4)));

    DecomposeStats st2;
    CHECK(is_q_integer_linear(parse_poly("x1*x2 - q", {"x1", "x2"}), nullptr, &st2));
    CHECK(st2.candidate_extractions >= 1);
    CHECK(is_q_integer_linear(parse_poly("x1^2 + x1*x2 + x2^2", {"x1", "x2"})));
    CHECK(is_q_integer_linear(MultiPoly::constant(2, QCoef(5))));
}

TEST_CASE("verify rejects corrupted decompositions") {
    const MultiPoly p = big();
    std::string reason;

    QILDecomposition bad = big_expected();
    bad.content = QCoef(2);
    CHECK(!verify(p, bad, &reason));
    CHECK(!reason.empty());

    bad = big_expected();
    bad.p0 = bad.p0 + MultiPoly::variable(4, 0);
    CHECK(!verify(p, bad));

    // Product correct but the types are not pairwise distinct.
    const MultiPoly sq = parse_poly("x1^2*x2^2 + 2*x1*x2 + 1", {"x1", "x2"});
    QILDecomposition dup;
    dup.nvars = 2;
    dup.content = QCoef(1);
    dup.monomial = {0, 0};
    dup.p0 = MultiPoly::constant(2, QCoef(1));
    dup.factors.push_back({{1, 1}, parse_poly("y + 1", {"y"})});
    dup.factors.push_back({{1, 1}, parse_poly("y + 1", {"y"})});
    CHECK(expand(dup) == sq);
    CHECK(!verify(sq, dup, &reason));
    CHECK(reason.find("type") != std::string::npos);
}

TEST_CASE("expand undoes decompose") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 20; ++iter) {
        const MultiPoly p = bench_instance(2 + iter % 2, 1 + iter % 2, 2, 1, rng);
        const QILDecomposition d = decompose_newton(p);
        CHECK(expand(d) == p);
        CHECK(verify(p, d));
    }
}

TEST_CASE("both algorithms and the reference agree") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 12; ++iter) {
        const MultiPoly p = bench_instance(2 + iter % 2, iter % 3, 2, 1, rng);
        const QILDecomposition dn = decompose_newton(p);
        CHECK(dn == decompose_bivariate_iter(p));
        CHECK(verify(p, dn));
    }
}

TEST_CASE("monomial scaling shifts only the monomial part") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int64_t> b(0, 3);
    for (int iter = 0; iter < 10; ++iter) {
        const MultiPoly p = bench_instance(3, 1, 2, 1, rng);
        const QILDecomposition d = decompose_newton(p);
        ExpVec beta{b(rng), b(rng), b(rng)};
        QILDecomposition ds = decompose_newton(p.mul_monomial(beta));
        CHECK(ds.content == d.content);
        CHECK(ds.p0 == d.p0);
        CHECK(ds.factors == d.factors);
        for (int i = 0; i < 3; ++i)
            CHECK(ds.monomial[size_t(i)] == d.monomial[size_t(i)] + beta[size_t(i)]);
    }
}

TEST_CASE("constructive instances are recovered exactly") {
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 15; ++iter) {
        const ConstructiveInstance ci =
            constructive_instance(2 + iter % 3, 1 + iter % 2, 2, rng);
        const QILDecomposition d = decompose_newton(ci.poly);
        CHECK(d == ci.expected);
        CHECK(decompose_bivariate_iter(ci.poly) == ci.expected);
    }
}

TEST_CASE("early exit agrees with the trivial part") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 20; ++iter) {
        const MultiPoly p = bench_instance(2 + iter % 2, iter % 3, 2, 1, rng);
        const QILDecomposition d = decompose_newton(p);
        CHECK(is_q_integer_linear(p) == d.p0.is_one());
    }
}
