#ifndef QIL_GENERATOR_HPP
#define QIL_GENERATOR_HPP

#include <random>

#include "qil/decomposition.hpp"
#include "qil/multi_poly.hpp"

namespace qil {

/// Benchmark-shaped instance: p = P0 * prod_i num(Pi(x^lambda_i)) with m type
/// vectors whose entries have absolute value at most 10, Pi a product of two
/// univariate polynomials of degrees d and 2d with q-degree at most d, and P0
/// a random polynomial of degree at most d0 in each variable and in q.
/// Requires n >= 1, m >= 0, d >= 1.
MultiPoly bench_instance(int n, int m, int d0, int d, std::mt19937_64& rng);

/// Instance with a known decomposition: p = x^extra * prod_i Pi(x^lambda_i)
/// cleared of denominators, with pairwise distinct normalized types free of
/// zero coordinates and canonical q-primitive Pi. `expected` is the exact
/// decomposition (content 1, trivial part 1). Requires n >= 2, m >= 1, d >= 1.
struct ConstructiveInstance {
    MultiPoly poly;
    QILDecomposition expected;
};
ConstructiveInstance constructive_instance(int n, int m, int d, std::mt19937_64& rng);

} // namespace qil

#endif
