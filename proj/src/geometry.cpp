#include "qil/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qil/errors.hpp"

namespace qil {
namespace {

__int128 cross(const Point2& o, const Point2& a, const Point2& b) {
    return static_cast<__int128>(a[0] - o[0]) * (b[1] - o[1]) -
           static_cast<__int128>(a[1] - o[1]) * (b[0] - o[0]);
}

} // namespace

Direction normalize_direction(Direction v) {
    int64_t g = 0;
    for (int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw zero_vector();
    for (int64_t& x : v) x /= g;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (*it == 0) continue;
        if (*it < 0)
            for (int64_t& x : v) x = -x;
        break;
    }
    return v;
}

Hull2D hull2d(std::vector<Point2> pts) {
    if (pts.empty()) throw empty_input();
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return {pts};
    std::vector<Point2> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return {h};
}

std::vector<Point2> edge_direction_multiset(const Hull2D& h) {
    std::vector<Point2> dirs;
    const size_t k = h.vertices.size();
    if (k < 2) return dirs;
    const size_t edges = k == 2 ? 1 : k;
    for (size_t i = 0; i < edges; ++i) {
        const Point2& a = h.vertices[i];
        const Point2& b = h.vertices[(i + 1) % k];
        Direction d = normalize_direction({b[0] - a[0], b[1] - a[1]});
        dirs.push_back({d[0], d[1]});
    }
    std::sort(dirs.begin(), dirs.end());
    return dirs;
}

Hull2D minkowski_sum_hull(const Hull2D& a, const Hull2D& b) {
    std::vector<Point2> sums;
    sums.reserve(a.vertices.size() * b.vertices.size());
    for (const Point2& p : a.vertices)
        for (const Point2& q : b.vertices) sums.push_back({p[0] + q[0], p[1] + q[1]});
    return hull2d(std::move(sums));
}

bool pairing_filter(const std::vector<ExpVec>& support, const Direction& d) {
    // Points sharing a line parallel to d share the key p*d_c - p_c*d, where
    // c is the pivot coordinate; d primitive makes every collinear integer
    // difference an integer multiple of d.
    size_t c = d.size();
    while (c-- > 0)
        if (d[c] != 0) break;
    std::map<ExpVec, int, ExpVecLess> lines;
    ExpVec key(d.size());
    for (const ExpVec& p : support) {
        for (size_t k = 0; k < d.size(); ++k) key[k] = p[k] * d[c] - p[c] * d[k];
        ++lines[key];
    }
    for (const auto& [k, count] : lines)
        if (count < 2) return false;
    return true;
}

CandidateTypes candidate_types(const std::vector<ExpVec>& support) {
    CandidateTypes out;
    const size_t n = support.front().size();
    const ExpVec& v = *std::min_element(support.begin(), support.end(), ExpVecLess{});
    std::set<Direction> dirs;
    for (const ExpVec& u : support) {
        if (u == v) continue;
        Direction d(n);
        for (size_t k = 0; k < n; ++k) d[k] = u[k] - v[k];
        dirs.insert(normalize_direction(std::move(d)));
    }
    if (dirs.size() == 1) {
        // All points collinear through v; confirm every point is on the line.
        const Direction& d = *dirs.begin();
        if (pairing_filter(support, d) &&
            std::none_of(d.begin(), d.end(), [](int64_t x) { return x == 0; }))
            out.collinear = d;
        if (out.collinear) return out;
    }
    for (const Direction& d : dirs) {
        if (std::any_of(d.begin(), d.end(), [](int64_t x) { return x == 0; })) continue;
        if (pairing_filter(support, d)) out.candidates.push_back(d);
    }
    if (n == 2 && !out.candidates.empty()) {
        std::vector<Point2> pts;
        pts.reserve(support.size());
        for (const ExpVec& p : support) pts.push_back({p[0], p[1]});
        std::vector<Point2> edges = edge_direction_multiset(hull2d(std::move(pts)));
        std::vector<Direction> kept;
        for (const Direction& d : out.candidates) {
            Point2 d2{d[0], d[1]};
            if (std::count(edges.begin(), edges.end(), d2) >= 2) kept.push_back(d);
        }
        out.candidates = std::move(kept);
    }
    return out;
}

bool zonotope_necessary_check(const std::vector<ExpVec>& support) {
    return !find_nonunique_extremum(support).has_value();
}

std::optional<ExtremumWitness> find_nonunique_extremum(const std::vector<ExpVec>& support) {
    const size_t n = support.front().size();
    for (size_t i = n; i-- > 0;) {
        int64_t lo = support.front()[i], hi = lo;
        int nlo = 0, nhi = 0;
        for (const ExpVec& p : support) {
            if (p[i] < lo) lo = p[i];
            if (p[i] > hi) hi = p[i];
        }
        for (const ExpVec& p : support) {
            nlo += p[i] == lo;
            nhi += p[i] == hi;
        }
        if (nlo > 1) return ExtremumWitness{static_cast<int>(i), true};
        if (nhi > 1) return ExtremumWitness{static_cast<int>(i), false};
    }
    return std::nullopt;
}

} // namespace qil
