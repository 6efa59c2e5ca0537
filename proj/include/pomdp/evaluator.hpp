#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pomdp/model.hpp"
#include "pomdp/rng.hpp"

namespace pomdp {

struct EvalConfig {
    int trials_per_start = 10;
    /// Discount for the accumulated return; defaults to the model discount.
    std::optional<double> discount;
    /// Episodes that have not reached a goal stop here and keep their
    /// partial reward. 251 steps leaves a truncation error below 3e-6 of a
    /// unit goal reward at discount 0.95.
    int max_steps_per_episode = 251;
    RngSeed seed;
};

struct EpisodeOutcome {
    int start_state = 0;
    double reward = 0.0;
    int steps = 0;
    bool truncated = false;
};

struct EvalResult {
    double mean_reward = 0.0;
    std::map<int, double> per_start_means;
    std::vector<EpisodeOutcome> episodes;  // in episode-index order
    int episodes_truncated = 0;
};

/// One controlled episode from hidden start state s0. The belief starts at
/// the model's initial belief regardless of s0 (the agent does not know
/// where it is); each step executes the action of the belief's maximizing
/// alpha, draws (s', o), updates the belief, and accumulates
/// reward(s,a,s') * discount^step. Ends on entering a goal state or at the
/// step cap.
EpisodeOutcome run_episode(const PomdpModel& model, const ValueFunction& v, int s0,
                           const EvalConfig& config, Rng& rng);

/// Control-quality measurement: trials_per_start episodes from every
/// non-goal start state in index order (episode e, 1-based, starts at
/// non-goal state number ceil(e / trials_per_start)). Episode e draws from
/// the stream derive_stream(seed, "episode", e). Returns the mean discounted
/// return and the per-start breakdown.
EvalResult sample_rewards(const PomdpModel& model, const ValueFunction& v,
                          const EvalConfig& config);

/// CSV dump: header, one `episode` row per episode (1-based start state),
/// then one `summary` row with the mean reward and truncation count.
void write_eval_csv(const std::string& path, const EvalResult& result);

}  // namespace pomdp
