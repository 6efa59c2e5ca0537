#include "pomdp/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pomdp/errors.hpp"

namespace pomdp {

namespace {
constexpr double kRowSumTolerance = 1e-6;
}

bool PomdpModel::is_terminal(int s) const {
    return std::binary_search(terminal_states.begin(), terminal_states.end(), s);
}

std::vector<int> PomdpModel::non_terminal_states() const {
    std::vector<int> out;
    out.reserve(num_states - terminal_states.size());
    for (int s = 0; s < num_states; ++s) {
        if (!is_terminal(s)) out.push_back(s);
    }
    return out;
}

BeliefVector PomdpModel::uniform_belief() const {
    return {std::vector<double>(num_states, 1.0 / num_states)};
}

PomdpModel PomdpModel::with_dimensions(int states, int actions, int observations) {
    PomdpModel m;
    m.num_states = states;
    m.num_actions = actions;
    m.num_observations = observations;
    m.transition.assign(static_cast<size_t>(actions) * states * states, 0.0);
    m.observation.assign(static_cast<size_t>(actions) * states * observations, 0.0);
    m.reward.assign(static_cast<size_t>(actions) * states * states, 0.0);
    m.initial_belief = m.uniform_belief();
    return m;
}

double dot(std::span<const double> x, std::span<const double> y) {
    double acc = 0.0;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

double belief_update_unnormalized(const PomdpModel& model, const BeliefVector& b, int a, int o,
                                  std::vector<double>& out) {
    const int n = model.num_states;
    out.assign(n, 0.0);
    // Predicted next-state distribution, then the observation likelihood.
    for (int s = 0; s < n; ++s) {
        const double bs = b.probs[s];
        if (bs == 0.0) continue;
        const std::span<const double> row = model.transition_row(a, s);
        for (int s2 = 0; s2 < n; ++s2) out[s2] += bs * row[s2];
    }
    double norm = 0.0;
    for (int s2 = 0; s2 < n; ++s2) {
        out[s2] *= model.obs_prob(a, s2, o);
        norm += out[s2];
    }
    return norm;
}

BeliefVector belief_update(const PomdpModel& model, const BeliefVector& b, int a, int o) {
    BeliefVector next;
    const double norm = belief_update_unnormalized(model, b, a, o, next.probs);
    if (norm == 0.0) {
        std::ostringstream msg;
        msg << "belief_update: observation " << o << " has probability 0 under action " << a
            << " and the given belief";
        throw ImpossibleObservation(msg.str());
    }
    for (double& p : next.probs) p /= norm;
    return next;
}

std::vector<std::string> validate_model(const PomdpModel& model) {
    std::vector<std::string> diagnostics;
    auto report = [&diagnostics](const std::string& msg) { diagnostics.push_back(msg); };

    if (model.num_states <= 0 || model.num_actions <= 0 || model.num_observations <= 0) {
        report("model dimensions must all be positive");
        return diagnostics;
    }
    if (!(model.discount >= 0.0 && model.discount < 1.0)) {
        std::ostringstream msg;
        msg << "discount " << model.discount << " outside [0,1)";
        report(msg.str());
    }

    for (int a = 0; a < model.num_actions; ++a) {
        for (int s = 0; s < model.num_states; ++s) {
            double sum = 0.0;
            bool negative = false;
            for (double p : model.transition_row(a, s)) {
                sum += p;
                if (p < 0.0) negative = true;
            }
            if (negative) {
                std::ostringstream msg;
                msg << "transition row (action " << a << ", state " << s
                    << ") has a negative entry";
                report(msg.str());
            }
            if (std::abs(sum - 1.0) > kRowSumTolerance) {
                std::ostringstream msg;
                msg << "transition row (action " << a << ", state " << s << ") sums to " << sum;
                report(msg.str());
            }
        }
        for (int s2 = 0; s2 < model.num_states; ++s2) {
            double sum = 0.0;
            bool negative = false;
            for (double p : model.observation_row(a, s2)) {
                sum += p;
                if (p < 0.0) negative = true;
            }
            if (negative) {
                std::ostringstream msg;
                msg << "observation row (action " << a << ", next state " << s2
                    << ") has a negative entry";
                report(msg.str());
            }
            if (std::abs(sum - 1.0) > kRowSumTolerance) {
                std::ostringstream msg;
                msg << "observation row (action " << a << ", next state " << s2 << ") sums to "
                    << sum;
                report(msg.str());
            }
        }
    }

    for (int t : model.terminal_states) {
        if (t < 0 || t >= model.num_states) {
            std::ostringstream msg;
            msg << "terminal state " << t << " out of range [0," << model.num_states << ")";
            report(msg.str());
        }
    }
    if (!std::is_sorted(model.terminal_states.begin(), model.terminal_states.end())) {
        report("terminal_states must be sorted ascending");
    }

    if (model.initial_belief.dimension() != model.num_states) {
        report("initial belief dimension does not match num_states");
    } else {
        double sum = 0.0;
        bool negative = false;
        for (double p : model.initial_belief.probs) {
            sum += p;
            if (p < 0.0) negative = true;
        }
        if (negative) report("initial belief has a negative entry");
        if (std::abs(sum - 1.0) > 1e-9) {
            std::ostringstream msg;
            msg << "initial belief sums to " << sum;
            report(msg.str());
        }
    }
    return diagnostics;
}

std::vector<double> immediate_reward_vector(const PomdpModel& model, int a) {
    std::vector<double> r(model.num_states, 0.0);
    for (int s = 0; s < model.num_states; ++s) {
        r[s] = dot(model.transition_row(a, s), model.reward_row(a, s));
    }
    return r;
}

}  // namespace pomdp
