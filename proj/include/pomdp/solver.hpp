#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pomdp/model.hpp"
#include "pomdp/rng.hpp"
#include "pomdp/sampler.hpp"

namespace pomdp {

struct SolveConfig {
    /// Stop once |sum(V_{n+1}(b)) / sum(V_n(b)) - 1| falls below this.
    std::optional<double> convergence_threshold;
    std::optional<int> max_iterations;
    std::optional<double> time_budget_seconds;
    RngSeed seed;

    /// At least one stopping rule must be set.
    bool valid() const {
        return convergence_threshold.has_value() || max_iterations.has_value() ||
               time_budget_seconds.has_value();
    }
};

enum class StopReason { converged, max_iterations, time_budget };
const char* to_string(StopReason reason);

struct IterationRecord {
    int policy_size = 0;
    /// Relative change of the summed belief-set value; NaN while the
    /// previous sum is exactly 0 (an all-zero initial value function).
    double convergence = 0.0;
    double elapsed_seconds = 0.0;
    double sum_value = 0.0;  // sum over B of value_at(V_n, b)
};

struct SolveResult {
    ValueFunction value_function;
    int iterations = 0;
    std::vector<IterationRecord> trace;
    StopReason stop_reason = StopReason::max_iterations;
};

/// The single-vector lower bound: every coefficient min(R)/(1-discount),
/// labeled with action 0 (the label is arbitrary; one improving stage
/// replaces it).
ValueFunction initial_value_function(const PomdpModel& model);

/// max over alpha of b . alpha, with the smallest maximizing index.
std::pair<double, int> value_at(const ValueFunction& v, const BeliefVector& b);

/// Point-based Bellman backup at b: for each action build
///   q_a = r_a + discount * sum_o argmax_{alpha in V by b.q_{a,o}} q_{a,o}
/// where q_{a,o}(s) = sum_s' p(o|s',a) p(s'|s,a) alpha(s'), and return the
/// q_a maximizing b . q_a, labeled with its action. Ties pick the lowest
/// index.
AlphaVector backup(const PomdpModel& model, const ValueFunction& v, const BeliefVector& b);

/// One randomized backup stage. Repeatedly samples a belief uniformly from
/// the not-yet-improved subset of B, backs it up, keeps the new vector if it
/// does not lose at that belief (exact floating >=) and otherwise copies the
/// best old vector, until every belief's value has reached its previous
/// level. Exact duplicate vectors are stored once.
ValueFunction perseus_stage(const PomdpModel& model, const BeliefSet& beliefs,
                            const ValueFunction& v, Rng& rng);

/// sum_vb_next / sum_vb_prev - 1. Throws DegenerateDenominator when
/// sum_vb_prev is zero.
double convergence_metric(double sum_vb_next, double sum_vb_prev);

/// Full solve: stages from the initial value function until the convergence
/// threshold, iteration cap, or time budget hits, whichever first. Stage n
/// draws from the stream derive_stream(seed, "perseus-stage", n).
SolveResult solve(const PomdpModel& model, const BeliefSet& beliefs, const SolveConfig& config);

/// Lossless policy round-trip: a JSON document with the model dimensions,
/// discount, and alpha vectors ({action, coefficients}). Field names are
/// documented in the README.
void write_policy(const std::string& path, const PomdpModel& model, const ValueFunction& v);
ValueFunction read_policy(const std::string& path, const PomdpModel& model);

}  // namespace pomdp
