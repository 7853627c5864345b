#ifndef QIL_QILD_HPP
#define QIL_QILD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qil/decomposition.hpp"
#include "qil/multi_poly.hpp"

namespace qil {

/// Instrumentation counters for one decomposition run.
struct DecomposeStats {
    int64_t candidate_extractions = 0; // substitution/content extractions attempted
};

/// Per-stage record of the iterative algorithm: the composed types produced
/// while merging stage k results back into full coordinates.
struct StageTrace {
    std::vector<std::vector<std::vector<int64_t>>> stage_types;
};

/// Newton-polytope based decomposition.
QILDecomposition decompose_newton(const MultiPoly& p, DecomposeStats* stats = nullptr);

/// Bivariate-iteration based decomposition.
QILDecomposition decompose_bivariate_iter(const MultiPoly& p, DecomposeStats* stats = nullptr,
                                          StageTrace* trace = nullptr);

/// Why a polynomial was recognized as NOT q-integer-linear, phrased as the
/// first violated necessary condition the scan hits.
struct LinearityWitness {
    enum class Kind {
        NonUniqueExtremum,  // some variable's min or max over the support
                            // is attained by more than one point
        FakeCandidate,      // a surviving direction fails the extraction test
        NonUnitResidual,    // nontrivial remainder after all extractions
    };
    Kind kind = Kind::NonUnitResidual;
    int var = -1;       // NonUniqueExtremum: which variable (0-based)
    bool is_min = true; // NonUniqueExtremum: min or max side
    std::string detail;
};

/// Early-exit recognizer: true iff every irreducible factor of p has the
/// shape x^a * P(x^lambda). Runs the Newton-polytope decomposition with
/// necessary-condition checks armed and stops at the first failure.
bool is_q_integer_linear(const MultiPoly& p, LinearityWitness* witness = nullptr,
                         DecomposeStats* stats = nullptr);

} // namespace qil

#endif
