#pragma once

#include <string>
#include <vector>

#include "pomdp/model.hpp"
#include "pomdp/rng.hpp"

namespace pomdp {

/// A sampled belief set plus where it came from.
struct BeliefSet {
    std::vector<BeliefVector> beliefs;

    struct Provenance {
        std::string model_id;
        std::vector<uint64_t> seeds;
        size_t requested_count = 0;
    } provenance;

    int size() const { return static_cast<int>(beliefs.size()); }
};

struct SuccessorSample {
    int action = 0;
    int next_state = 0;
    int observation = 0;
    BeliefVector next_belief;
};

/// One step of the random walk: a uniform over actions, s' from p(.|s,a),
/// o from p(.|s',a), then the Bayes update of b.
SuccessorSample sample_successor(const PomdpModel& model, const BeliefVector& b, int s, Rng& rng);

/// Random walk of n Bayes updates starting from (initial_belief, state drawn
/// from initial_belief). The hidden state restarts from the initial belief
/// whenever it enters a terminal state, so the walk never sits in an
/// absorbing goal; the same restart fires on the (pathological) underflow of
/// the whole unnormalized posterior below 1e-300. Consumes the stream
/// derive_stream(seed, "belief-walk", 0).
BeliefSet sample_belief_set(const PomdpModel& model, int n, RngSeed seed,
                            const std::string& model_id = "");

/// Belief-set dump: header line `<count> <dim>`, a `#` provenance comment,
/// then one belief per line, space-separated, full precision.
void write_belief_set(const std::string& path, const BeliefSet& set);
BeliefSet read_belief_set(const std::string& path);

}  // namespace pomdp
