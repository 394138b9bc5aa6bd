#pragma once

// Module structure of the regular representation: blocks by column sum,
// raising to highest weight vectors, submodule generation, the block
// decomposition into irreducible summands, and the verification suites.

#include "tqschur/linalg.hpp"
#include "tqschur/qschur.hpp"

#include <map>
#include <string>
#include <vector>

namespace tqs {

// Generators used for module generation and closure checks; the derived
// odd ones are redundant but can be included as a cross-check.
std::vector<GeneratorName> action_generators(int n, bool include_derived = false);

struct BlockModule {
    Composition mu;
    int r = 0;
    SpanBasis basis;
    std::map<Composition, SpanBasis> weights;  // ro(A) -> weight space
};

BlockModule build_block(const Composition& mu, int r);

// Iterates E_{t-1} on the highest occupied row t until everything sits in
// row 1.  Throws if an intermediate step vanishes.
AlgebraElement raise_to_highest(const AlgebraElement& x);

// Smallest generator-closed span containing the seeds.
SpanBasis generate_submodule(const std::vector<AlgebraElement>& seeds,
                             bool include_derived = false);

struct Summand {
    SuperMatrixIndex seed;
    int eigen = 0;  // r = 1: the Kbar_1 eigenvalue (+1/-1); 0 otherwise
    int parity = 0;
    SpanBasis span;
    int hw_dim = 0;
};

struct DecompositionCertificate {
    Composition mu;
    int r = 0;
    unsigned seed = 0;
    std::vector<Summand> summands;
    bool direct_sum = false;
    // summand count (2 at r = 1, else 2^{d(mu)-1}), containment in the
    // block, and the top-weight tally: the block's weight-(r,0,...,0)
    // space has dimension 2^{d(mu)} and the summands' highest weight
    // spaces fill it exactly.
    bool counts_ok = false;
    bool closed = false;
    bool hw_ok = false;
    bool sampling_ok = false;
    std::vector<std::string> failures;

    bool passed() const {
        return direct_sum && counts_ok && closed && hw_ok && sampling_ok && failures.empty();
    }
};

DecompositionCertificate decompose_block(const Composition& mu, int r, unsigned seed = 2024,
                                         bool include_derived = false);

struct CheckReport {
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// All defining relations applied to every basis vector of Q~_v(n,r).
CheckReport check_relations(int n, int r);

// Structure properties: the E_j F_j^(p) recursion on highest weight
// vectors, F-reordering under lambda_{i+1} = 0, the Kbar_1 eigen-split at
// r = 1, highest-weight-space dimensions, and the Kbar_1^2 scalar on the
// top weight space.
CheckReport verify_structure_props(int n, int r, unsigned seed = 2024);

// For every certified summand and every pair of adjacent weights: the
// F_i image of the higher weight space, closed under the Cartan
// generators (the odd Kbar's act nontrivially), equals the lower one.
CheckReport check_weight_surjectivity(int n, int r, unsigned seed = 2024);

// Weight spaces of a span (components of the echelon vectors; verifies
// they stay inside the span).
std::map<Composition, SpanBasis> weight_spaces(const SpanBasis& s);

}  // namespace tqs
