#pragma once

#include <span>
#include <string>
#include <vector>

namespace pomdp {

/// A probability distribution over hidden states: a point on the state
/// simplex. Entries are >= 0 and sum to 1 within 1e-9.
struct BeliefVector {
    std::vector<double> probs;

    int dimension() const { return static_cast<int>(probs.size()); }
};

/// One linear piece of a value function: a coefficient per state plus the
/// action to execute when this piece attains the maximum.
struct AlphaVector {
    std::vector<double> coeffs;
    int action = 0;

    int dimension() const { return static_cast<int>(coeffs.size()); }
};

/// A value function as the pointwise maximum over a non-empty set of alpha
/// vectors.
struct ValueFunction {
    std::vector<AlphaVector> alphas;

    int size() const { return static_cast<int>(alphas.size()); }
};

/// A finite discounted POMDP. Tables are stored flat, row-major:
///   transition[a][s][s']   p(s'|s,a)
///   observation[a][s'][o]  p(o|s',a)
///   reward[a][s][s']       R(s,a,s')
/// Rewards with an observation component (as some model files allow) are
/// marginalized into R(s,a,s') at load time.
struct PomdpModel {
    int num_states = 0;
    int num_actions = 0;
    int num_observations = 0;

    std::vector<double> transition;
    std::vector<double> observation;
    std::vector<double> reward;

    double discount = 0.0;

    /// Goal states: episodes end on entry, belief walks restart. The model
    /// file format does not encode terminality, so builders and the CLI
    /// supply this set. Sorted, unique, 0-based.
    std::vector<int> terminal_states;

    BeliefVector initial_belief;

    /// Optional display names; empty when the source provided only counts.
    std::vector<std::string> state_names;
    std::vector<std::string> action_names;
    std::vector<std::string> observation_names;

    double trans(int a, int s, int s2) const {
        return transition[(static_cast<size_t>(a) * num_states + s) * num_states + s2];
    }
    double obs_prob(int a, int s2, int o) const {
        return observation[(static_cast<size_t>(a) * num_states + s2) * num_observations + o];
    }
    double rew(int s, int a, int s2) const {
        return reward[(static_cast<size_t>(a) * num_states + s) * num_states + s2];
    }

    std::span<const double> transition_row(int a, int s) const {
        return {transition.data() + (static_cast<size_t>(a) * num_states + s) * num_states,
                static_cast<size_t>(num_states)};
    }
    std::span<const double> observation_row(int a, int s2) const {
        return {observation.data() + (static_cast<size_t>(a) * num_states + s2) * num_observations,
                static_cast<size_t>(num_observations)};
    }
    std::span<const double> reward_row(int a, int s) const {
        return {reward.data() + (static_cast<size_t>(a) * num_states + s) * num_states,
                static_cast<size_t>(num_states)};
    }

    bool is_terminal(int s) const;

    /// All states not in terminal_states, in index order.
    std::vector<int> non_terminal_states() const;

    BeliefVector uniform_belief() const;

    /// Allocates zeroed tables for the given dimensions and sets a uniform
    /// initial belief. Does not touch discount or names.
    static PomdpModel with_dimensions(int states, int actions, int observations);
};

/// Bayes posterior: b'(s') proportional to p(o|s',a) * sum_s p(s'|s,a) b(s),
/// renormalized to sum 1. Throws ImpossibleObservation when the normalizer
/// is zero.
BeliefVector belief_update(const PomdpModel& model, const BeliefVector& b, int a, int o);

/// Unnormalized posterior written into `out` (resized to num_states);
/// returns the normalizer sum_s' out[s'], i.e. Pr(o | b, a). Callers that
/// need custom zero/underflow handling (the belief walk) use this; everyone
/// else wants belief_update.
double belief_update_unnormalized(const PomdpModel& model, const BeliefVector& b, int a, int o,
                                  std::vector<double>& out);

/// Checks the model invariants: stochastic non-negative transition and
/// observation rows (tolerance 1e-6), discount in [0,1), terminal indices in
/// range. Returns one message per violation, empty when clean. Indices in
/// the messages are 0-based; the parser and CLI translate to 1-based at
/// their boundary.
std::vector<std::string> validate_model(const PomdpModel& model);

/// Expected immediate reward per state for an action:
/// r_a(s) = sum_s' p(s'|s,a) R(s,a,s').
std::vector<double> immediate_reward_vector(const PomdpModel& model, int a);

/// Left-to-right inner product; every module uses this one routine so that
/// equal inputs give bit-equal results.
double dot(std::span<const double> x, std::span<const double> y);

}  // namespace pomdp
