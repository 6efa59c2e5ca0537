#include "pomdp/sampler.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pomdp/errors.hpp"
#include "pomdp/format.hpp"

namespace pomdp {

namespace {
constexpr double kUnderflowFloor = 1e-300;

int draw_initial_state(const PomdpModel& model, Rng& rng) {
    // Terminal draws restart immediately, so skip them here. A model whose
    // initial belief puts all mass on terminal states cannot seed a walk.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int s = rng.sample_categorical(model.initial_belief.probs);
        if (!model.is_terminal(s)) return s;
    }
    throw PomdpError("sample_belief_set: initial belief has no usable mass on non-terminal states");
}
}  // namespace

SuccessorSample sample_successor(const PomdpModel& model, const BeliefVector& b, int s, Rng& rng) {
    SuccessorSample out;
    out.action = rng.next_int(model.num_actions);
    out.next_state = rng.sample_categorical(model.transition_row(out.action, s));
    out.observation = rng.sample_categorical(model.observation_row(out.action, out.next_state));
    out.next_belief = belief_update(model, b, out.action, out.observation);
    return out;
}

BeliefSet sample_belief_set(const PomdpModel& model, int n, RngSeed seed,
                            const std::string& model_id) {
    BeliefSet set;
    set.provenance.model_id = model_id;
    set.provenance.seeds = {seed.value};
    set.provenance.requested_count = static_cast<size_t>(n);
    if (n <= 0) return set;
    set.beliefs.reserve(n);

    Rng rng(derive_stream(seed.value, "belief-walk", 0));
    BeliefVector belief = model.initial_belief;
    int state = draw_initial_state(model, rng);
    std::vector<double> unnormalized;

    while (set.size() < n) {
        const int action = rng.next_int(model.num_actions);
        const int next_state = rng.sample_categorical(model.transition_row(action, state));
        const int observation = rng.sample_categorical(model.observation_row(action, next_state));

        const double norm =
            belief_update_unnormalized(model, belief, action, observation, unnormalized);
        const double peak = *std::max_element(unnormalized.begin(), unnormalized.end());
        if (peak < kUnderflowFloor) {
            // Whole posterior underflowed; restart rather than divide by ~0.
            belief = model.initial_belief;
            state = draw_initial_state(model, rng);
            continue;
        }
        for (double& p : unnormalized) p /= norm;
        belief.probs = unnormalized;
        set.beliefs.push_back(belief);

        if (model.is_terminal(next_state)) {
            belief = model.initial_belief;
            state = draw_initial_state(model, rng);
        } else {
            state = next_state;
        }
    }
    return set;
}

void write_belief_set(const std::string& path, const BeliefSet& set) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw PomdpError("cannot open belief-set file for writing: " + path);

    const int dim = set.beliefs.empty() ? 0 : set.beliefs.front().dimension();
    out << set.size() << ' ' << dim << "\n";
    out << "# model=" << (set.provenance.model_id.empty() ? "?" : set.provenance.model_id)
        << " requested=" << set.provenance.requested_count << " seeds=";
    for (size_t i = 0; i < set.provenance.seeds.size(); ++i) {
        if (i > 0) out << ',';
        out << set.provenance.seeds[i];
    }
    out << "\n";
    for (const BeliefVector& b : set.beliefs) {
        for (int i = 0; i < b.dimension(); ++i) {
            if (i > 0) out << ' ';
            out << format_double(b.probs[i]);
        }
        out << "\n";
    }
    out.close();
    if (!out) throw PomdpError("write failed for belief-set file: " + path);
}

BeliefSet read_belief_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PomdpError("cannot open belief-set file: " + path);

    BeliefSet set;
    std::string line;
    long count = -1, dim = -1;
    bool header_seen = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!header_seen) continue;
            // Provenance comment: parse best-effort.
            std::istringstream meta(line.substr(1));
            std::string field;
            while (meta >> field) {
                if (field.rfind("model=", 0) == 0) set.provenance.model_id = field.substr(6);
                if (field.rfind("requested=", 0) == 0)
                    set.provenance.requested_count = std::strtoull(field.c_str() + 10, nullptr, 10);
                if (field.rfind("seeds=", 0) == 0) {
                    std::istringstream seeds(field.substr(6));
                    std::string item;
                    while (std::getline(seeds, item, ','))
                        set.provenance.seeds.push_back(std::strtoull(item.c_str(), nullptr, 10));
                }
            }
            continue;
        }
        std::istringstream row(line);
        if (!header_seen) {
            if (!(row >> count >> dim) || count < 0 || dim < 0) {
                throw PomdpError("belief-set file " + path + ": bad header at line " +
                                 std::to_string(line_no));
            }
            header_seen = true;
            set.beliefs.reserve(count);
            continue;
        }
        BeliefVector b;
        b.probs.reserve(dim);
        std::string tok;
        while (row >> tok) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw PomdpError("belief-set file " + path + ": malformed number at line " +
                                 std::to_string(line_no));
            }
            b.probs.push_back(v);
        }
        if (b.dimension() != dim) {
            throw PomdpError("belief-set file " + path + ": expected " + std::to_string(dim) +
                             " entries at line " + std::to_string(line_no));
        }
        set.beliefs.push_back(std::move(b));
    }
    if (!header_seen || set.size() != count) {
        throw PomdpError("belief-set file " + path + ": belief count does not match header");
    }
    return set;
}

}  // namespace pomdp
