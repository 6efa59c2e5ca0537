#include "pomdp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "pomdp/errors.hpp"

namespace pomdp {

namespace {

// Backup working buffers, reused across calls within a stage.
struct BackupScratch {
    std::vector<std::vector<double>> immediate_rewards;  // r_a per action
    std::vector<double> predicted;                       // sum_s b(s) p(s'|s,a)
    std::vector<double> weighted;                        // predicted * p(o|s',a)
    std::vector<double> q;                               // candidate alpha for one action
    std::vector<double> best_q;

    void prepare(const PomdpModel& model) {
        if (immediate_rewards.empty()) {
            immediate_rewards.reserve(model.num_actions);
            for (int a = 0; a < model.num_actions; ++a) {
                immediate_rewards.push_back(immediate_reward_vector(model, a));
            }
        }
        predicted.resize(model.num_states);
        weighted.resize(model.num_states);
        q.resize(model.num_states);
        best_q.resize(model.num_states);
    }
};

AlphaVector backup_with_scratch(const PomdpModel& model, const ValueFunction& v,
                                const BeliefVector& b, BackupScratch& scratch) {
    const int n = model.num_states;
    const int num_obs = model.num_observations;
    const double gamma = model.discount;

    scratch.prepare(model);

    double best_value = -std::numeric_limits<double>::infinity();
    int best_action = 0;

    std::vector<int> chosen(num_obs, 0);
    for (int a = 0; a < model.num_actions; ++a) {
        // Predicted next-state distribution under (b, a). b . q_{a,o}^i
        // equals sum_s' predicted(s') p(o|s',a) alpha_i(s'), which lets the
        // argmax over V run on |S|-length dot products.
        std::fill(scratch.predicted.begin(), scratch.predicted.end(), 0.0);
        for (int s = 0; s < n; ++s) {
            const double bs = b.probs[s];
            if (bs == 0.0) continue;
            const std::span<const double> row = model.transition_row(a, s);
            for (int s2 = 0; s2 < n; ++s2) scratch.predicted[s2] += bs * row[s2];
        }

        for (int o = 0; o < num_obs; ++o) {
            for (int s2 = 0; s2 < n; ++s2) {
                scratch.weighted[s2] = scratch.predicted[s2] * model.obs_prob(a, s2, o);
            }
            double best_score = -std::numeric_limits<double>::infinity();
            int best_index = 0;
            for (int i = 0; i < v.size(); ++i) {
                const double score = dot(scratch.weighted, v.alphas[i].coeffs);
                if (score > best_score) {
                    best_score = score;
                    best_index = i;
                }
            }
            chosen[o] = best_index;
        }

        // Assemble q_a = r_a + gamma * sum_o q_{a,o}^{chosen[o]}.
        const std::vector<double>& r_a = scratch.immediate_rewards[a];
        std::copy(r_a.begin(), r_a.end(), scratch.q.begin());
        for (int o = 0; o < num_obs; ++o) {
            const std::vector<double>& alpha = v.alphas[chosen[o]].coeffs;
            for (int s = 0; s < n; ++s) {
                const std::span<const double> row = model.transition_row(a, s);
                double acc = 0.0;
                for (int s2 = 0; s2 < n; ++s2) {
                    acc += model.obs_prob(a, s2, o) * row[s2] * alpha[s2];
                }
                scratch.q[s] += gamma * acc;
            }
        }

        const double value = dot(b.probs, scratch.q);
        if (value > best_value) {
            best_value = value;
            best_action = a;
            std::swap(scratch.best_q, scratch.q);
        }
    }

    AlphaVector out;
    out.coeffs.assign(scratch.best_q.begin(), scratch.best_q.end());
    out.action = best_action;
    return out;
}

uint64_t hash_alpha(const AlphaVector& alpha) {
    uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](uint64_t bits) {
        h ^= bits;
        h *= 0x100000001b3ULL;
    };
    mix(static_cast<uint64_t>(alpha.action));
    for (double c : alpha.coeffs) {
        uint64_t bits;
        std::memcpy(&bits, &c, sizeof(bits));
        mix(bits);
    }
    return h;
}

bool alphas_equal(const AlphaVector& a, const AlphaVector& b) {
    return a.action == b.action && a.coeffs == b.coeffs;
}

// Stage implementation that also returns the per-belief values of the new
// value function (bit-equal to recomputing value_at against it).
ValueFunction stage_impl(const PomdpModel& model, const BeliefSet& beliefs,
                         const ValueFunction& v, Rng& rng, std::vector<double>* values_out) {
    if (beliefs.size() == 0) throw std::invalid_argument("perseus_stage: empty belief set");
    if (v.size() == 0) throw std::invalid_argument("perseus_stage: empty value function");

    const int count = beliefs.size();
    std::vector<double> prev_value(count);
    std::vector<int> prev_best(count);
    for (int i = 0; i < count; ++i) {
        auto [val, idx] = value_at(v, beliefs.beliefs[i]);
        prev_value[i] = val;
        prev_best[i] = idx;
    }

    ValueFunction next;
    std::unordered_map<uint64_t, std::vector<int>> dedup;
    std::vector<double> new_value(count, -std::numeric_limits<double>::infinity());
    std::vector<int> pending(count);
    for (int i = 0; i < count; ++i) pending[i] = i;

    BackupScratch scratch;

    auto add_vector = [&](const AlphaVector& alpha) {
        const uint64_t h = hash_alpha(alpha);
        auto& bucket = dedup[h];
        for (int idx : bucket) {
            if (alphas_equal(next.alphas[idx], alpha)) return;  // exact duplicate
        }
        bucket.push_back(next.size());
        next.alphas.push_back(alpha);
        for (int i = 0; i < count; ++i) {
            const double val = dot(beliefs.beliefs[i].probs, alpha.coeffs);
            if (val > new_value[i]) new_value[i] = val;
        }
    };

    while (!pending.empty()) {
        const int pick = rng.next_int(static_cast<int>(pending.size()));
        const int chosen = pending[pick];
        const BeliefVector& b = beliefs.beliefs[chosen];

        AlphaVector alpha = backup_with_scratch(model, v, b, scratch);
        if (dot(b.probs, alpha.coeffs) >= prev_value[chosen]) {
            add_vector(alpha);
        } else {
            add_vector(v.alphas[prev_best[chosen]]);
        }

        // Beliefs already at their previous value drop out of the pool.
        std::vector<int> still_pending;
        still_pending.reserve(pending.size());
        for (int i : pending) {
            if (new_value[i] < prev_value[i]) still_pending.push_back(i);
        }
        pending.swap(still_pending);
    }

    if (values_out != nullptr) *values_out = std::move(new_value);
    return next;
}

}  // namespace

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::converged: return "converged";
        case StopReason::max_iterations: return "max_iterations";
        default: return "time_budget";
    }
}

ValueFunction initial_value_function(const PomdpModel& model) {
    double min_reward = 0.0;
    if (!model.reward.empty()) {
        min_reward = *std::min_element(model.reward.begin(), model.reward.end());
    }
    AlphaVector alpha;
    alpha.coeffs.assign(model.num_states, min_reward / (1.0 - model.discount));
    alpha.action = 0;
    return ValueFunction{{alpha}};
}

std::pair<double, int> value_at(const ValueFunction& v, const BeliefVector& b) {
    if (v.size() == 0) throw std::invalid_argument("value_at: empty value function");
    double best = -std::numeric_limits<double>::infinity();
    int best_index = 0;
    for (int i = 0; i < v.size(); ++i) {
        const double val = dot(b.probs, v.alphas[i].coeffs);
        if (val > best) {
            best = val;
            best_index = i;
        }
    }
    return {best, best_index};
}

AlphaVector backup(const PomdpModel& model, const ValueFunction& v, const BeliefVector& b) {
    if (v.size() == 0) throw std::invalid_argument("backup: empty value function");
    BackupScratch scratch;
    return backup_with_scratch(model, v, b, scratch);
}

ValueFunction perseus_stage(const PomdpModel& model, const BeliefSet& beliefs,
                            const ValueFunction& v, Rng& rng) {
    return stage_impl(model, beliefs, v, rng, nullptr);
}

double convergence_metric(double sum_vb_next, double sum_vb_prev) {
    if (sum_vb_prev == 0.0) {
        throw DegenerateDenominator("convergence_metric: previous summed value is zero");
    }
    return sum_vb_next / sum_vb_prev - 1.0;
}

SolveResult solve(const PomdpModel& model, const BeliefSet& beliefs, const SolveConfig& config) {
    if (!config.valid()) {
        throw std::invalid_argument(
            "solve: set at least one of convergence_threshold, max_iterations, time_budget");
    }
    if (beliefs.size() == 0) throw std::invalid_argument("solve: empty belief set");

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&start]() {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    SolveResult result;
    result.value_function = initial_value_function(model);

    double sum_prev = 0.0;
    for (const BeliefVector& b : beliefs.beliefs) {
        sum_prev += value_at(result.value_function, b).first;
    }

    result.stop_reason = StopReason::max_iterations;
    int iteration = 0;
    while (true) {
        if (config.max_iterations && iteration >= *config.max_iterations) {
            result.stop_reason = StopReason::max_iterations;
            break;
        }
        if (config.time_budget_seconds && elapsed() >= *config.time_budget_seconds) {
            result.stop_reason = StopReason::time_budget;
            break;
        }

        Rng stage_rng(derive_stream(config.seed.value, "perseus-stage",
                                    static_cast<uint64_t>(iteration)));
        std::vector<double> values;
        result.value_function = stage_impl(model, beliefs, result.value_function, stage_rng, &values);
        ++iteration;

        double sum_next = 0.0;
        for (double val : values) sum_next += val;

        IterationRecord record;
        record.policy_size = result.value_function.size();
        record.sum_value = sum_next;
        record.elapsed_seconds = elapsed();
        record.convergence = (sum_prev == 0.0) ? std::numeric_limits<double>::quiet_NaN()
                                               : convergence_metric(sum_next, sum_prev);
        result.trace.push_back(record);
        sum_prev = sum_next;

        if (config.convergence_threshold && std::isfinite(record.convergence) &&
            std::abs(record.convergence) < *config.convergence_threshold) {
            result.stop_reason = StopReason::converged;
            break;
        }
    }
    result.iterations = iteration;
    return result;
}

void write_policy(const std::string& path, const PomdpModel& model, const ValueFunction& v) {
    nlohmann::json doc;
    doc["num_states"] = model.num_states;
    doc["num_actions"] = model.num_actions;
    doc["num_observations"] = model.num_observations;
    doc["discount"] = model.discount;
    doc["alphas"] = nlohmann::json::array();
    for (const AlphaVector& alpha : v.alphas) {
        doc["alphas"].push_back({{"action", alpha.action}, {"coefficients", alpha.coeffs}});
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw PomdpError("cannot open policy file for writing: " + path);
    out << doc.dump(2) << "\n";
    if (!out) throw PomdpError("write failed for policy file: " + path);
}

ValueFunction read_policy(const std::string& path, const PomdpModel& model) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PomdpError("cannot open policy file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw PomdpError("policy file " + path + ": " + e.what());
    }

    if (doc.value("num_states", -1) != model.num_states ||
        doc.value("num_actions", -1) != model.num_actions) {
        throw PomdpError("policy file " + path + " does not match the model dimensions");
    }
    ValueFunction v;
    for (const auto& entry : doc.at("alphas")) {
        AlphaVector alpha;
        alpha.action = entry.at("action").get<int>();
        alpha.coeffs = entry.at("coefficients").get<std::vector<double>>();
        if (alpha.dimension() != model.num_states) {
            throw PomdpError("policy file " + path + ": alpha vector of wrong dimension");
        }
        if (alpha.action < 0 || alpha.action >= model.num_actions) {
            throw PomdpError("policy file " + path + ": alpha vector with invalid action");
        }
        v.alphas.push_back(std::move(alpha));
    }
    if (v.size() == 0) throw PomdpError("policy file " + path + ": no alpha vectors");
    return v;
}

}  // namespace pomdp
