#include "pomdp/evaluator.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "pomdp/errors.hpp"
#include "pomdp/format.hpp"
#include "pomdp/solver.hpp"

namespace pomdp {

EpisodeOutcome run_episode(const PomdpModel& model, const ValueFunction& v, int s0,
                           const EvalConfig& config, Rng& rng) {
    if (model.is_terminal(s0)) {
        throw std::invalid_argument("run_episode: start state is a goal state");
    }
    const double gamma = config.discount.value_or(model.discount);

    EpisodeOutcome outcome;
    outcome.start_state = s0;

    BeliefVector belief = model.initial_belief;
    std::vector<double> unnormalized;
    int state = s0;
    double discount_pow = 1.0;

    for (int step = 0; step < config.max_steps_per_episode; ++step) {
        const auto [value, best] = value_at(v, belief);
        const int action = v.alphas[best].action;

        const int next_state = rng.sample_categorical(model.transition_row(action, state));
        const int observation = rng.sample_categorical(model.observation_row(action, next_state));

        const double norm =
            belief_update_unnormalized(model, belief, action, observation, unnormalized);
        const double peak = *std::max_element(unnormalized.begin(), unnormalized.end());
        if (peak >= 1e-300) {
            for (double& p : unnormalized) p /= norm;
            belief.probs = unnormalized;
        }
        // else: posterior underflowed entirely; keep the previous belief.

        outcome.reward += model.rew(state, action, next_state) * discount_pow;
        discount_pow *= gamma;
        ++outcome.steps;
        state = next_state;

        if (model.is_terminal(state)) return outcome;
    }
    outcome.truncated = true;
    return outcome;
}

EvalResult sample_rewards(const PomdpModel& model, const ValueFunction& v,
                          const EvalConfig& config) {
    if (config.trials_per_start < 1) {
        throw std::invalid_argument("sample_rewards: trials_per_start must be >= 1");
    }
    if (config.max_steps_per_episode < 1) {
        throw std::invalid_argument("sample_rewards: max_steps_per_episode must be >= 1");
    }
    const std::vector<int> starts = model.non_terminal_states();
    if (starts.empty()) {
        throw std::invalid_argument("sample_rewards: model has no non-goal states");
    }

    const int total = static_cast<int>(starts.size()) * config.trials_per_start;
    EvalResult result;
    result.episodes.reserve(total);

    // Episodes are independent given their derived streams; accumulation
    // stays in episode-index order so any execution schedule would report
    // the same totals.
    for (int episode = 1; episode <= total; ++episode) {
        const int start = starts[(episode - 1) / config.trials_per_start];
        Rng rng(derive_stream(config.seed.value, "episode", static_cast<uint64_t>(episode)));
        result.episodes.push_back(run_episode(model, v, start, config, rng));
    }

    double sum = 0.0;
    std::map<int, double> per_start_sum;
    for (const EpisodeOutcome& ep : result.episodes) {
        sum += ep.reward;
        per_start_sum[ep.start_state] += ep.reward;
        if (ep.truncated) ++result.episodes_truncated;
    }
    result.mean_reward = sum / total;
    for (const auto& [start, start_sum] : per_start_sum) {
        result.per_start_means[start] = start_sum / config.trials_per_start;
    }
    return result;
}

void write_eval_csv(const std::string& path, const EvalResult& result) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw PomdpError("cannot open eval CSV for writing: " + path);

    out << "type,start_state,reward,steps,truncated\n";
    for (const EpisodeOutcome& ep : result.episodes) {
        out << "episode," << ep.start_state + 1 << ',' << format_double(ep.reward) << ','
            << ep.steps << ',' << (ep.truncated ? 1 : 0) << "\n";
    }
    out << "summary,," << format_double(result.mean_reward) << ','
        << result.episodes.size() << ',' << result.episodes_truncated << "\n";
    out.close();
    if (!out) throw PomdpError("write failed for eval CSV: " + path);
}

}  // namespace pomdp
