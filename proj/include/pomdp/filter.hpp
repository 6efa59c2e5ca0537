#pragma once

#include <string>

#include "pomdp/model.hpp"
#include "pomdp/rng.hpp"
#include "pomdp/sampler.hpp"

namespace pomdp {

/// Outcome of one filter pass.
struct FilterReport {
    int input_count = 0;
    int kept_count = 0;
    double threshold = 0.0;
    double elapsed_seconds = 0.0;
    std::vector<int> kept_indices;  // original positions, strictly increasing

    /// `input_count,kept_count,threshold,elapsed_seconds` (no header).
    std::string csv_row() const;
};

/// True iff the Chebyshev (L-infinity) distance max_s |A(s)-B(s)| is
/// strictly below the threshold. Throws DimensionMismatch for unequal
/// lengths and std::invalid_argument for a threshold outside (0,1).
bool is_similar(const BeliefVector& a, const BeliefVector& b, double threshold);

/// Greedy first-survivor scan in input order: a belief is kept iff it is
/// not similar to any already-kept belief. Survivor order matches input
/// order. The scan prunes kept candidates through a first-coordinate index
/// (pairs whose first coordinates differ by >= threshold can never be
/// similar), which cannot change the kept set versus the plain quadratic
/// scan.
std::pair<BeliefSet, FilterReport> filter_beliefs(const BeliefSet& set, double threshold);

/// Uniform random subset of size k, preserving input order. Throws
/// CountTooLarge when k exceeds the set size. Consumes the stream
/// derive_stream(seed, "subsample", 0).
BeliefSet subsample(const BeliefSet& set, int k, RngSeed seed);

}  // namespace pomdp
