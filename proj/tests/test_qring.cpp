#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qil/errors.hpp"
#include "qil/poly_io.hpp"
#include "qil/qcoef.hpp"

using namespace qil;

namespace {

QCoef C(const char* s) { return parse_coef(s); }

QCoef random_coef(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 4), coef(-9, 9), shift(-3, 3);
    QCoef c = 0;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c = c + QCoef(coef(rng)) * QCoef::q_power(i);
    return c * QCoef::q_power(shift(rng));
}

} // namespace

TEST_CASE("construction and canonical form") {
    CHECK(QCoef(0).is_zero());
    CHECK(QCoef(0).qshift() == 0);
    CHECK(QCoef(1).is_one());
    CHECK(C("q^2 - q^2").is_zero());
    CHECK(C("q^2 - q^2").qshift() == 0);
    // Canonical form keeps the numerator's constant term nonzero.
    const QCoef a = C("q^3 + q^2");
    CHECK(a.qshift() == 2);
    CHECK(a.numerator().degree() == 1);
}

TEST_CASE("addition") {
    CHECK(C("q + 1") + C("q^-1") == C("q + 1 + q^-1"));
    const QCoef a = C("3*q^2 - 5");
    CHECK(a + QCoef(0) == a);
    CHECK((C("q - 1") + C("1 - q")).is_zero());
}

TEST_CASE("multiplication") {
    CHECK(C("q") * C("q^-1") == QCoef(1));
    CHECK(C("q + 1") * C("q - 1") == C("q^2 - 1"));
    CHECK((QCoef(0) * C("q^5 + 3")).is_zero());
}

TEST_CASE("units") {
    CHECK(C("q^3").is_unit());
    CHECK(C("-q^-2").is_unit());
    CHECK(QCoef(1).is_unit());
    CHECK(!QCoef(2).is_unit());
    CHECK(!C("q + 1").is_unit());
    CHECK(!QCoef(0).is_unit());
}

TEST_CASE("gcd golden values") {
    CHECK(QCoef::gcd(C("q^2 - 1"), C("q^3 - 1")) == C("q - 1"));
    CHECK(QCoef::gcd(QCoef(0), C("-q^3 - q^2")) == C("q + 1"));
    CHECK(QCoef::gcd(C("6*q^2 + 6*q"), C("4*q^3 + 4*q^2")) == C("2*q + 2") * QCoef::q_power(0));
    // Hand-factored: 2q(q+1) and 4q^2(q+1); canonical representative 2q+2.
    CHECK(QCoef::gcd(C("6*q^2 + 6*q"), C("4*q^3 + 4*q^2")) == C("2*q + 2"));
    CHECK(QCoef::gcd(QCoef(0), QCoef(0)).is_zero());
}

TEST_CASE("gcd normalization is canonical") {
    const QCoef g = QCoef::gcd(C("6*q^2 + 6*q"), C("4*q^3 + 4*q^2"));
    CHECK(g.qshift() == 0);
    CHECK(g.numerator().coeff(0) != 0);
    CHECK(g.numerator().lc() > 0);
}

TEST_CASE("divexact golden values") {
    CHECK(QCoef::divexact(C("q^2 - 1"), C("q - 1")) == C("q + 1"));
    CHECK(QCoef::divexact(C("q + 1"), C("q")) == C("q^-1 + 1"));
    CHECK_THROWS_AS((void)QCoef::divexact(C("q + 1"), C("q - 1")), not_divisible);
    CHECK_THROWS_AS((void)QCoef::divexact(QCoef(1), QCoef(0)), division_by_zero);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const QCoef a = random_coef(rng), b = random_coef(rng), c = random_coef(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(QCoef::divexact(a * b, b) == a);
    }
}

TEST_CASE("gcd divides both inputs and ignores units") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 120; ++iter) {
        const QCoef a = random_coef(rng), b = random_coef(rng);
        const QCoef g = QCoef::gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        QCoef t;
        CHECK(QCoef::try_divexact(a, g, t));
        CHECK(QCoef::try_divexact(b, g, t));
        const QCoef u = QCoef(-1) * QCoef::q_power(3);
        CHECK(QCoef::gcd(a * u, b) == g);
        CHECK(QCoef::gcd(a, b * u) == g);
    }
}

TEST_CASE("gcd of products keeps the common factor") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 60; ++iter) {
        const QCoef a = random_coef(rng), b = random_coef(rng), m = random_coef(rng);
        if (m.is_zero()) continue;
        if (a.is_zero() && b.is_zero()) continue;
        const QCoef g = QCoef::gcd(a * m, b * m);
        // m (canonicalized via gcd(m,m)) divides gcd(am, bm).
        QCoef t;
        CHECK(QCoef::try_divexact(g, QCoef::gcd(m, m), t));
    }
}

TEST_CASE("string round-trip") {
    for (const char* s : {"3*q^2-q^-1+7", "1", "0", "-q", "q^5", "2*q+2", "-3*q^-4+q^2"}) {
        const QCoef c = parse_coef(s);
        CHECK(parse_coef(coef_to_string(c)) == c);
    }
    CHECK(coef_to_string(C("2*q+2")) == "2*q+2");
    CHECK(coef_to_string(QCoef(0)) == "0");
    CHECK(coef_to_string(C("q^-1")) == "q^-1");
}
