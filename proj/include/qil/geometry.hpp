#ifndef QIL_GEOMETRY_HPP
#define QIL_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qil/multi_poly.hpp"

namespace qil {

using Direction = std::vector<int64_t>;
using Point2 = std::array<int64_t, 2>;

/// Divide by the gcd of the entries and flip sign so the rightmost nonzero
/// entry is positive. Throws zero_vector on the zero vector.
Direction normalize_direction(Direction v);

/// Strict 2D convex hull: vertices in counterclockwise order starting at the
/// lexicographically smallest point, no three collinear vertices. Duplicates
/// in the input are ignored. Degenerate inputs give 1 or 2 vertices.
struct Hull2D {
    std::vector<Point2> vertices;
};
Hull2D hull2d(std::vector<Point2> points);

/// Normalized direction of each hull edge, as a sorted multiset. A polygon
/// with k vertices has k edges; a segment one; a point none.
std::vector<Point2> edge_direction_multiset(const Hull2D& h);

/// Convex hull of {a + b : a in A, b in B}.
Hull2D minkowski_sum_hull(const Hull2D& a, const Hull2D& b);

/// True iff every support point has a distinct partner at an integer multiple
/// of d. Requires d normalized.
bool pairing_filter(const std::vector<ExpVec>& support, const Direction& d);

/// Candidate q-integer-linear types from a support set (>= 2 points, any
/// dimension >= 2). If the support is collinear: the direction is returned in
/// `collinear` when it has no zero coordinate (candidates stay empty either
/// way). Otherwise `candidates` holds the normalized directions with no zero
/// coordinates from the lexicographically smallest support point to all
/// others, filtered by pairing at every point; in dimension 2 they are
/// additionally restricted to hull edge directions of multiplicity >= 2.
struct CandidateTypes {
    std::optional<Direction> collinear;
    std::vector<Direction> candidates;
};
CandidateTypes candidate_types(const std::vector<ExpVec>& support);

/// True iff for every coordinate exactly one support point attains the
/// minimum and exactly one attains the maximum.
bool zonotope_necessary_check(const std::vector<ExpVec>& support);

/// First coordinate (scanned from the last variable down) whose minimum or
/// maximum is attained by more than one support point; min checked before
/// max. Empty when zonotope_necessary_check passes.
struct ExtremumWitness {
    int var;
    bool is_min;
};
std::optional<ExtremumWitness> find_nonunique_extremum(const std::vector<ExpVec>& support);

} // namespace qil

#endif
