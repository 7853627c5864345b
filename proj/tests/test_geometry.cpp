#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qil/errors.hpp"
#include "qil/geometry.hpp"
#include "qil/poly_io.hpp"

#include "worked_example.hpp"

using namespace qil;

namespace {

std::vector<Point2> pts2(const MultiPoly& p) {
    std::vector<Point2> out;
    for (const auto& e : p.support()) out.push_back({e[0], e[1]});
    return out;
}

std::vector<ExpVec> supp(const char* s, int n) {
    return parse_poly(s, default_var_names(n)).support();
}

MultiPoly random_poly2(std::mt19937_64& rng, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> e(0, maxdeg), c(-5, 5);
    MultiPoly p(2);
    for (int t = 0; t < nterms; ++t)
        p.add_term({e(rng), e(rng)}, QCoef(c(rng)));
    return p;
}

} // namespace

TEST_CASE("direction normalization golden values") {
    CHECK(normalize_direction({4, -8, 6, -7}) == Direction{-4, 8, -6, 7});
    CHECK(normalize_direction({-2, 0}) == Direction{1, 0});
    CHECK(normalize_direction({0, 0, 5}) == Direction{0, 0, 1});
    CHECK_THROWS_AS((void)normalize_direction({0, 0}), zero_vector);
}

TEST_CASE("direction normalization is idempotent and scale free") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int64_t> v(-9, 9), s(1, 4);
    for (int iter = 0; iter < 200; ++iter) {
        Direction d{v(rng), v(rng), v(rng)};
        if (d == Direction{0, 0, 0}) continue;
        const Direction n = normalize_direction(d);
        CHECK(normalize_direction(n) == n);
        const int64_t k = s(rng);
        Direction kd{k * d[0], k * d[1], k * d[2]};
        CHECK(normalize_direction(kd) == n);
        Direction nd{-d[0], -d[1], -d[2]};
        CHECK(normalize_direction(nd) == n);
        int64_t last = 0;
        for (auto x : n)
            if (x != 0) last = x;
        CHECK(last > 0);
    }
}

TEST_CASE("hull golden values") {
    const Hull2D h = hull2d({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
    CHECK(h.vertices == std::vector<Point2>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});

    const Hull2D s3 = hull2d({{29, 3},
                              {22, 5},
                              {19, 1},
                              {15, 7},
                              {14, 0},
                              {12, 3},
                              {7, 2},
                              {5, 5},
                              {0, 4}});
    CHECK(s3.vertices == std::vector<Point2>{{0, 4}, {14, 0}, {29, 3}, {15, 7}});

    CHECK(hull2d({{3, 1}, {3, 1}}).vertices == std::vector<Point2>{{3, 1}});
    CHECK(hull2d({{2, 2}, {0, 0}, {1, 1}}).vertices ==
          std::vector<Point2>{{0, 0}, {2, 2}});
}

TEST_CASE("edge direction multisets") {
    const Hull2D sq = hull2d({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    CHECK(edge_direction_multiset(sq) ==
          std::vector<Point2>{{0, 1}, {0, 1}, {1, 0}, {1, 0}});

    // The stage-three hull with coordinates listed (y, x4).
    const Hull2D s3 = hull2d({{3, 29},
                              {5, 22},
                              {1, 19},
                              {7, 15},
                              {0, 14},
                              {3, 12},
                              {2, 7},
                              {5, 5},
                              {4, 0}});
    CHECK(edge_direction_multiset(s3) ==
          std::vector<Point2>{{-2, 7}, {-2, 7}, {1, 5}, {1, 5}});

    CHECK(edge_direction_multiset(hull2d({{0, 0}, {4, 6}})) ==
          std::vector<Point2>{{2, 3}});
    CHECK(edge_direction_multiset(hull2d({{1, 1}})).empty());
}

TEST_CASE("hulls rotate with their points") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int64_t> v(-6, 6);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Point2> pts;
        for (int k = 0; k < 7; ++k) pts.push_back({v(rng), v(rng)});
        Hull2D h = hull2d(pts);
        std::vector<Point2> rot;
        for (auto [x, y] : pts) rot.push_back({-y, x});
        std::vector<Point2> hv;
        for (auto [x, y] : h.vertices) hv.push_back({-y, x});
        std::sort(hv.begin(), hv.end());
        std::vector<Point2> rv = hull2d(rot).vertices;
        std::sort(rv.begin(), rv.end());
        CHECK(hv == rv);
    }
}

TEST_CASE("minkowski sum hull matches the product support hull") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 100; ++iter) {
        MultiPoly f = random_poly2(rng, 5, 4), g = random_poly2(rng, 5, 4);
        if (f.is_zero() || g.is_zero()) continue;
        const Hull2D sum = minkowski_sum_hull(hull2d(pts2(f)), hull2d(pts2(g)));
        // Coefficients never cancel a vertex: vertex monomials of a product
        // are products of unique vertex monomial pairs.
        const Hull2D prod = hull2d(pts2(f * g));
        CHECK(sum.vertices == prod.vertices);
    }
}

TEST_CASE("pairing filter golden values") {
    const auto s = supp("x1*x2 - q", 2);
    CHECK(pairing_filter(s, {1, 1}));
    CHECK(!pairing_filter(s, {-1, 1}));
    CHECK(pairing_filter(supp("x1^2*x2^2 + x1*x2 + 1", 2), {1, 1}));
    CHECK(!pairing_filter(supp("x1^2 + x1*x2 + x1", 2), {0, 1}));
}

TEST_CASE("candidate types on the worked example") {
    const auto s = parse_poly(testdata::kBig4Input, default_var_names(4)).support();
    const CandidateTypes ct = candidate_types(s);
    CHECK(!ct.collinear.has_value());
    const auto has = [&](const Direction& d) {
        return std::find(ct.candidates.begin(), ct.candidates.end(), d) !=
               ct.candidates.end();
    };
    CHECK(has({2, -4, 3, 5}));
    CHECK(has({-4, 8, -6, 7}));
}

TEST_CASE("candidate types golden values") {
    const CandidateTypes col = candidate_types(supp("x1*x2 - q", 2));
    REQUIRE(col.collinear.has_value());
    CHECK(*col.collinear == Direction{1, 1});
    CHECK(col.candidates.empty());

    const CandidateTypes none = candidate_types(supp("x1^2 + x1*x2 + x1", 2));
    CHECK(!none.collinear.has_value());
    CHECK(none.candidates.empty());

    // Collinear with a zero coordinate: no usable direction.
    const CandidateTypes axis = candidate_types(supp("x1^2 + x1 + 1", 2));
    CHECK(!axis.collinear.has_value());
    CHECK(axis.candidates.empty());
}

TEST_CASE("zonotope vertex-uniqueness check") {
    CHECK(!zonotope_necessary_check(
        parse_poly(testdata::kBig4Input, default_var_names(4)).support()));
    CHECK(zonotope_necessary_check(supp("x1*x2 - q", 2)));
    CHECK(zonotope_necessary_check(supp("x1^2 + x1*x2 + x2^2", 2)));
}

TEST_CASE("extremum witness golden values") {
    const auto big = parse_poly(testdata::kBig4Input, default_var_names(4)).support();
    const auto w = find_nonunique_extremum(big);
    REQUIRE(w.has_value());
    CHECK(w->var == 3);
    CHECK(w->is_min);
    CHECK(!find_nonunique_extremum(supp("x1*x2 - q", 2)).has_value());
}

TEST_CASE("extremum witness agrees with the zonotope check") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int64_t> v(0, 4);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<ExpVec> s;
        for (int k = 0; k < 5; ++k) s.push_back({v(rng), v(rng), v(rng)});
        std::sort(s.begin(), s.end(), ExpVecLess{});
        s.erase(std::unique(s.begin(), s.end()), s.end());
        CHECK(zonotope_necessary_check(s) == !find_nonunique_extremum(s).has_value());
    }
}
