#include "pomdp/parser.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pomdp/errors.hpp"

namespace pomdp {

namespace {

struct Token {
    std::string text;
    int line = 1;
};

// Whitespace-separated tokens, with ':' split out as its own token and '#'
// comments stripped.
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    int line = 1;
    std::string current;
    int current_line = 1;
    bool in_comment = false;

    auto flush = [&]() {
        if (!current.empty()) {
            tokens.push_back({current, current_line});
            current.clear();
        }
    };

    for (char c : text) {
        if (c == '\n') {
            flush();
            in_comment = false;
            ++line;
            continue;
        }
        if (in_comment) continue;
        if (c == '#') {
            flush();
            in_comment = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
            continue;
        }
        if (c == ':') {
            flush();
            tokens.push_back({":", line});
            continue;
        }
        if (current.empty()) current_line = line;
        current.push_back(c);
    }
    flush();
    return tokens;
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_int(const std::string& s, int& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

enum class Dim { state, action, observation };

const char* dim_name(Dim d) {
    switch (d) {
        case Dim::state: return "state";
        case Dim::action: return "action";
        default: return "observation";
    }
}

class Parser {
  public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    ParseResult run() {
        while (!at_end()) {
            parse_directive();
            if (fatal_) break;
        }
        finalize();

        ParseResult result;
        result.diagnostics = std::move(diagnostics_);
        const bool errors = std::any_of(
            result.diagnostics.begin(), result.diagnostics.end(),
            [](const ParseDiagnostic& d) { return d.severity == ParseDiagnostic::Severity::error; });
        if (!errors) result.model = std::move(model_);
        return result;
    }

  private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
    std::vector<ParseDiagnostic> diagnostics_;
    bool fatal_ = false;

    PomdpModel model_;
    bool dims_ready_ = false;
    bool saw_discount_ = false;
    bool saw_states_ = false, saw_actions_ = false, saw_observations_ = false;
    bool negate_rewards_ = false;
    bool start_given_ = false;

    // R(s,a,s',o) materialized only once an entry names a concrete
    // observation; o-independent files keep the exact 3-D table.
    std::vector<double> reward4_;
    bool reward_obs_dependent_ = false;

    // Line of the last assignment into each row, for stochasticity messages.
    std::vector<int> t_row_line_, o_row_line_;

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek(size_t ahead = 0) const { return tokens_[pos_ + ahead]; }
    const Token& take() { return tokens_[pos_++]; }
    int here() const {
        if (pos_ < tokens_.size()) return tokens_[pos_].line;
        return tokens_.empty() ? 1 : tokens_.back().line;
    }

    void error(int line, const std::string& msg) {
        diagnostics_.push_back({line, msg, ParseDiagnostic::Severity::error});
    }
    void warning(int line, const std::string& msg) {
        diagnostics_.push_back({line, msg, ParseDiagnostic::Severity::warning});
    }

    bool next_is_colon() const { return !at_end() && peek().text == ":"; }

    bool expect_colon(const char* after) {
        if (next_is_colon()) {
            take();
            return true;
        }
        error(here(), std::string("expected ':' after ") + after);
        fatal_ = true;
        return false;
    }

    // A directive begins with one of the reserved heads followed by ':'
    // (or `start include:` / `start exclude:`).
    bool at_directive_start() const {
        if (at_end()) return false;
        const std::string& t = peek().text;
        if (t == "T" || t == "O" || t == "R" || t == "discount" || t == "values" ||
            t == "states" || t == "actions" || t == "observations") {
            return pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].text == ":";
        }
        if (t == "start") {
            if (pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].text == ":") return true;
            if (pos_ + 2 < tokens_.size() &&
                (tokens_[pos_ + 1].text == "include" || tokens_[pos_ + 1].text == "exclude") &&
                tokens_[pos_ + 2].text == ":") {
                return true;
            }
        }
        return false;
    }

    int dim_size(Dim d) const {
        switch (d) {
            case Dim::state: return model_.num_states;
            case Dim::action: return model_.num_actions;
            default: return model_.num_observations;
        }
    }

    const std::vector<std::string>& dim_names(Dim d) const {
        switch (d) {
            case Dim::state: return model_.state_names;
            case Dim::action: return model_.action_names;
            default: return model_.observation_names;
        }
    }

    // Resolves an id token ('*', 0-based index, or declared name) to the
    // indices it denotes. Empty result means a diagnostic was emitted.
    std::vector<int> resolve_ids(const Token& tok, Dim d) {
        const int n = dim_size(d);
        if (tok.text == "*") {
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i;
            return all;
        }
        int idx = 0;
        if (parse_int(tok.text, idx)) {
            if (idx < 0 || idx >= n) {
                std::ostringstream msg;
                msg << dim_name(d) << " index " << idx + 1 << " out of range 1.." << n;
                error(tok.line, msg.str());
                return {};
            }
            return {idx};
        }
        const auto& names = dim_names(d);
        auto it = std::find(names.begin(), names.end(), tok.text);
        if (it == names.end()) {
            error(tok.line, "unknown " + std::string(dim_name(d)) + " identifier '" + tok.text + "'");
            return {};
        }
        return {static_cast<int>(it - names.begin())};
    }

    bool read_number(double& out, const char* what) {
        if (at_end()) {
            error(here(), std::string("unexpected end of input, expected ") + what);
            fatal_ = true;
            return false;
        }
        const Token& tok = take();
        if (!parse_double(tok.text, out)) {
            error(tok.line, "malformed number '" + tok.text + "' (expected " + what + ")");
            return false;
        }
        return true;
    }

    bool read_numbers(std::vector<double>& out, int count, const char* what) {
        out.resize(count);
        for (int i = 0; i < count; ++i) {
            if (!read_number(out[i], what)) return false;
        }
        return true;
    }

    void require_dims(int line) {
        if (!dims_ready_) {
            error(line, "table entry before states/actions/observations were declared");
            fatal_ = true;
        }
    }

    void maybe_allocate() {
        if (dims_ready_ || !saw_states_ || !saw_actions_ || !saw_observations_) return;
        const int s = model_.num_states, a = model_.num_actions, o = model_.num_observations;
        if (s <= 0 || a <= 0 || o <= 0) return;
        model_.transition.assign(static_cast<size_t>(a) * s * s, 0.0);
        model_.observation.assign(static_cast<size_t>(a) * s * o, 0.0);
        model_.reward.assign(static_cast<size_t>(a) * s * s, 0.0);
        model_.initial_belief = model_.uniform_belief();
        t_row_line_.assign(static_cast<size_t>(a) * s, 1);
        o_row_line_.assign(static_cast<size_t>(a) * s, 1);
        dims_ready_ = true;
    }

    void parse_directive() {
        const Token& head = take();
        const std::string& key = head.text;

        if (key == "discount") {
            if (!expect_colon("discount")) return;
            double d = 0.0;
            if (read_number(d, "discount value")) {
                model_.discount = d;
                saw_discount_ = true;
            }
        } else if (key == "values") {
            if (!expect_colon("values")) return;
            if (at_end()) {
                error(here(), "missing values kind");
                fatal_ = true;
                return;
            }
            const Token& kind = take();
            if (kind.text == "cost") {
                negate_rewards_ = true;
                warning(kind.line, "values: cost — rewards negated on load");
            } else if (kind.text != "reward") {
                error(kind.line, "values must be 'reward' or 'cost', got '" + kind.text + "'");
            }
        } else if (key == "states" || key == "actions" || key == "observations") {
            parse_dimension(head);
        } else if (key == "start") {
            parse_start(head);
        } else if (key == "T") {
            parse_transition(head);
        } else if (key == "O") {
            parse_observation(head);
        } else if (key == "R") {
            parse_reward(head);
        } else {
            error(head.line, "unknown directive '" + key + "'");
            fatal_ = true;
        }
    }

    void parse_dimension(const Token& head) {
        if (!expect_colon(head.text.c_str())) return;
        std::vector<std::string> names;
        int count = -1;
        if (!at_end() && !at_directive_start()) {
            int maybe_count = 0;
            if (parse_int(peek().text, maybe_count)) {
                take();
                count = maybe_count;
            } else {
                while (!at_end() && !at_directive_start() && peek().text != ":") {
                    names.push_back(take().text);
                }
                count = static_cast<int>(names.size());
            }
        }
        if (count <= 0) {
            error(head.line, head.text + " must declare a positive count or a name list");
            fatal_ = true;
            return;
        }
        if (head.text == "states") {
            model_.num_states = count;
            model_.state_names = std::move(names);
            saw_states_ = true;
        } else if (head.text == "actions") {
            model_.num_actions = count;
            model_.action_names = std::move(names);
            saw_actions_ = true;
        } else {
            model_.num_observations = count;
            model_.observation_names = std::move(names);
            saw_observations_ = true;
        }
        maybe_allocate();
    }

    void parse_start(const Token& head) {
        // `start include:` / `start exclude:` carry a mode token first.
        std::string mode;
        if (!at_end() && (peek().text == "include" || peek().text == "exclude")) {
            mode = take().text;
        }
        if (!expect_colon("start")) return;
        require_dims(head.line);
        if (fatal_) return;
        const int n = model_.num_states;

        if (!mode.empty()) {
            std::vector<bool> member(n, mode == "exclude");
            while (!at_end() && !at_directive_start()) {
                const Token tok = take();
                auto ids = resolve_ids(tok, Dim::state);
                for (int s : ids) member[s] = (mode == "include");
            }
            int kept = static_cast<int>(std::count(member.begin(), member.end(), true));
            if (kept == 0) {
                error(head.line, "start " + mode + " leaves no states");
                return;
            }
            model_.initial_belief.probs.assign(n, 0.0);
            for (int s = 0; s < n; ++s) {
                if (member[s]) model_.initial_belief.probs[s] = 1.0 / kept;
            }
            start_given_ = true;
            return;
        }

        std::vector<Token> items;
        while (!at_end() && !at_directive_start()) items.push_back(take());
        if (items.empty()) {
            error(head.line, "start: requires a distribution, state, or 'uniform'");
            return;
        }
        if (items.size() == 1 && items[0].text == "uniform") {
            model_.initial_belief = model_.uniform_belief();
            start_given_ = true;
            return;
        }
        if (static_cast<int>(items.size()) == n) {
            std::vector<double> probs(n);
            bool numeric = true;
            for (int i = 0; i < n; ++i) {
                if (!parse_double(items[i].text, probs[i])) {
                    numeric = false;
                    break;
                }
            }
            if (numeric) {
                double sum = 0.0;
                for (double p : probs) sum += p;
                if (std::abs(sum - 1.0) > 1e-6) {
                    std::ostringstream msg;
                    msg << "start distribution sums to " << sum;
                    error(head.line, msg.str());
                    return;
                }
                model_.initial_belief.probs = std::move(probs);
                start_given_ = true;
                return;
            }
        }
        if (items.size() == 1) {
            auto ids = resolve_ids(items[0], Dim::state);
            if (ids.size() == 1) {
                model_.initial_belief.probs.assign(n, 0.0);
                model_.initial_belief.probs[ids[0]] = 1.0;
                start_given_ = true;
            }
            return;
        }
        std::ostringstream msg;
        msg << "start: expected 'uniform', one state, or " << n << " probabilities, got "
            << items.size() << " tokens";
        error(head.line, msg.str());
    }

    double& t_entry(int a, int s, int s2) {
        return model_.transition[(static_cast<size_t>(a) * model_.num_states + s) * model_.num_states + s2];
    }
    double& o_entry(int a, int s2, int o) {
        return model_.observation[(static_cast<size_t>(a) * model_.num_states + s2) * model_.num_observations + o];
    }

    void parse_transition(const Token& head) {
        if (!expect_colon("T")) return;
        require_dims(head.line);
        if (fatal_) return;
        const int n = model_.num_states;

        if (at_end()) {
            error(here(), "T: missing action");
            fatal_ = true;
            return;
        }
        auto actions = resolve_ids(take(), Dim::action);

        if (!next_is_colon()) {
            // Matrix form: uniform | identity | |S| x |S| numbers.
            if (!at_end() && peek().text == "uniform") {
                take();
                for (int a : actions)
                    for (int s = 0; s < n; ++s) assign_t_row_uniform(a, s, head.line);
                return;
            }
            if (!at_end() && peek().text == "identity") {
                take();
                for (int a : actions) {
                    for (int s = 0; s < n; ++s) {
                        for (int s2 = 0; s2 < n; ++s2) t_entry(a, s, s2) = (s == s2) ? 1.0 : 0.0;
                        t_row_line_[static_cast<size_t>(a) * n + s] = head.line;
                    }
                }
                return;
            }
            std::vector<double> values;
            if (!read_numbers(values, n * n, "transition matrix entry")) return;
            for (int a : actions) {
                for (int s = 0; s < n; ++s) {
                    for (int s2 = 0; s2 < n; ++s2) t_entry(a, s, s2) = values[static_cast<size_t>(s) * n + s2];
                    t_row_line_[static_cast<size_t>(a) * n + s] = head.line;
                }
            }
            return;
        }

        take();  // ':'
        if (at_end()) {
            error(here(), "T: missing source state");
            fatal_ = true;
            return;
        }
        auto sources = resolve_ids(take(), Dim::state);

        if (next_is_colon()) {
            take();
            if (at_end()) {
                error(here(), "T: missing destination state");
                fatal_ = true;
                return;
            }
            const Token dest_tok = take();
            auto dests = resolve_ids(dest_tok, Dim::state);
            double p = 0.0;
            if (!read_number(p, "transition probability")) return;
            for (int a : actions) {
                for (int s : sources) {
                    for (int s2 : dests) t_entry(a, s, s2) = p;
                    t_row_line_[static_cast<size_t>(a) * n + s] = head.line;
                }
            }
            return;
        }

        // Row form: |S| numbers or 'uniform'.
        if (!at_end() && peek().text == "uniform") {
            take();
            for (int a : actions)
                for (int s : sources) assign_t_row_uniform(a, s, head.line);
            return;
        }
        std::vector<double> row;
        if (!read_numbers(row, n, "transition row entry")) return;
        for (int a : actions) {
            for (int s : sources) {
                for (int s2 = 0; s2 < n; ++s2) t_entry(a, s, s2) = row[s2];
                t_row_line_[static_cast<size_t>(a) * n + s] = head.line;
            }
        }
    }

    void assign_t_row_uniform(int a, int s, int line) {
        const int n = model_.num_states;
        for (int s2 = 0; s2 < n; ++s2) t_entry(a, s, s2) = 1.0 / n;
        t_row_line_[static_cast<size_t>(a) * n + s] = line;
    }

    void parse_observation(const Token& head) {
        if (!expect_colon("O")) return;
        require_dims(head.line);
        if (fatal_) return;
        const int n = model_.num_states;
        const int no = model_.num_observations;

        if (at_end()) {
            error(here(), "O: missing action");
            fatal_ = true;
            return;
        }
        auto actions = resolve_ids(take(), Dim::action);

        if (!next_is_colon()) {
            if (!at_end() && peek().text == "uniform") {
                take();
                for (int a : actions)
                    for (int s2 = 0; s2 < n; ++s2) assign_o_row_uniform(a, s2, head.line);
                return;
            }
            std::vector<double> values;
            if (!read_numbers(values, n * no, "observation matrix entry")) return;
            for (int a : actions) {
                for (int s2 = 0; s2 < n; ++s2) {
                    for (int o = 0; o < no; ++o) o_entry(a, s2, o) = values[static_cast<size_t>(s2) * no + o];
                    o_row_line_[static_cast<size_t>(a) * n + s2] = head.line;
                }
            }
            return;
        }

        take();  // ':'
        if (at_end()) {
            error(here(), "O: missing next state");
            fatal_ = true;
            return;
        }
        auto dests = resolve_ids(take(), Dim::state);

        if (next_is_colon()) {
            take();
            if (at_end()) {
                error(here(), "O: missing observation");
                fatal_ = true;
                return;
            }
            auto obs = resolve_ids(take(), Dim::observation);
            double p = 0.0;
            if (!read_number(p, "observation probability")) return;
            for (int a : actions) {
                for (int s2 : dests) {
                    for (int o : obs) o_entry(a, s2, o) = p;
                    o_row_line_[static_cast<size_t>(a) * n + s2] = head.line;
                }
            }
            return;
        }

        if (!at_end() && peek().text == "uniform") {
            take();
            for (int a : actions)
                for (int s2 : dests) assign_o_row_uniform(a, s2, head.line);
            return;
        }
        std::vector<double> row;
        if (!read_numbers(row, no, "observation row entry")) return;
        for (int a : actions) {
            for (int s2 : dests) {
                for (int o = 0; o < no; ++o) o_entry(a, s2, o) = row[o];
                o_row_line_[static_cast<size_t>(a) * n + s2] = head.line;
            }
        }
    }

    void assign_o_row_uniform(int a, int s2, int line) {
        const int n = model_.num_states;
        const int no = model_.num_observations;
        for (int o = 0; o < no; ++o) o_entry(a, s2, o) = 1.0 / no;
        o_row_line_[static_cast<size_t>(a) * n + s2] = line;
    }

    void materialize_reward4() {
        if (reward_obs_dependent_) return;
        const int n = model_.num_states;
        const int no = model_.num_observations;
        reward4_.assign(static_cast<size_t>(model_.num_actions) * n * n * no, 0.0);
        for (int a = 0; a < model_.num_actions; ++a) {
            for (int s = 0; s < n; ++s) {
                for (int s2 = 0; s2 < n; ++s2) {
                    const double v = model_.reward[(static_cast<size_t>(a) * n + s) * n + s2];
                    if (v == 0.0) continue;
                    for (int o = 0; o < no; ++o) r4_entry(a, s, s2, o) = v;
                }
            }
        }
        reward_obs_dependent_ = true;
    }

    double& r4_entry(int a, int s, int s2, int o) {
        const int n = model_.num_states;
        const int no = model_.num_observations;
        return reward4_[((static_cast<size_t>(a) * n + s) * n + s2) * no + o];
    }

    void assign_reward(int a, int s, int s2, const std::vector<int>* obs, double v) {
        const int no = model_.num_observations;
        if (obs == nullptr) {
            if (reward_obs_dependent_) {
                for (int o = 0; o < no; ++o) r4_entry(a, s, s2, o) = v;
            } else {
                model_.reward[(static_cast<size_t>(a) * model_.num_states + s) * model_.num_states + s2] = v;
            }
            return;
        }
        materialize_reward4();
        for (int o : *obs) r4_entry(a, s, s2, o) = v;
    }

    void parse_reward(const Token& head) {
        if (!expect_colon("R")) return;
        require_dims(head.line);
        if (fatal_) return;
        const int n = model_.num_states;
        const int no = model_.num_observations;

        if (at_end()) {
            error(here(), "R: missing action");
            fatal_ = true;
            return;
        }
        auto actions = resolve_ids(take(), Dim::action);
        if (!expect_colon("R action")) return;
        if (at_end()) {
            error(here(), "R: missing source state");
            fatal_ = true;
            return;
        }
        auto sources = resolve_ids(take(), Dim::state);

        if (!next_is_colon()) {
            // Matrix form over next-state x observation.
            std::vector<double> values;
            if (!read_numbers(values, n * no, "reward matrix entry")) return;
            materialize_reward4();
            for (int a : actions)
                for (int s : sources)
                    for (int s2 = 0; s2 < n; ++s2)
                        for (int o = 0; o < no; ++o)
                            r4_entry(a, s, s2, o) = values[static_cast<size_t>(s2) * no + o];
            return;
        }

        take();  // ':'
        if (at_end()) {
            error(here(), "R: missing destination state");
            fatal_ = true;
            return;
        }
        auto dests = resolve_ids(take(), Dim::state);

        if (!next_is_colon()) {
            // Row form over observations.
            std::vector<double> row;
            if (!read_numbers(row, no, "reward row entry")) return;
            materialize_reward4();
            for (int a : actions)
                for (int s : sources)
                    for (int s2 : dests)
                        for (int o = 0; o < no; ++o) r4_entry(a, s, s2, o) = row[o];
            return;
        }

        take();  // ':'
        if (at_end()) {
            error(here(), "R: missing observation");
            fatal_ = true;
            return;
        }
        const Token obs_tok = take();
        double v = 0.0;
        if (!read_number(v, "reward value")) return;

        if (obs_tok.text == "*") {
            for (int a : actions)
                for (int s : sources)
                    for (int s2 : dests) assign_reward(a, s, s2, nullptr, v);
            return;
        }
        auto obs = resolve_ids(obs_tok, Dim::observation);
        if (obs.empty()) return;
        for (int a : actions)
            for (int s : sources)
                for (int s2 : dests) assign_reward(a, s, s2, &obs, v);
    }

    void finalize() {
        if (!saw_states_) error(1, "missing states: declaration");
        if (!saw_actions_) error(1, "missing actions: declaration");
        if (!saw_observations_) error(1, "missing observations: declaration");
        if (!saw_discount_) error(1, "missing discount: declaration");
        if (!dims_ready_) return;

        const int n = model_.num_states;
        const int no = model_.num_observations;

        if (!(model_.discount >= 0.0 && model_.discount < 1.0)) {
            std::ostringstream msg;
            msg << "discount " << model_.discount << " outside [0,1)";
            error(1, msg.str());
        }

        // Fold observation-dependent rewards into R(s,a,s') as an
        // expectation over p(o|s',a).
        if (reward_obs_dependent_) {
            for (int a = 0; a < model_.num_actions; ++a) {
                for (int s = 0; s < n; ++s) {
                    for (int s2 = 0; s2 < n; ++s2) {
                        double expected = 0.0;
                        for (int o = 0; o < no; ++o)
                            expected += model_.obs_prob(a, s2, o) * r4_entry(a, s, s2, o);
                        model_.reward[(static_cast<size_t>(a) * n + s) * n + s2] = expected;
                    }
                }
            }
        }
        if (negate_rewards_) {
            for (double& r : model_.reward) r = -r;
        }

        for (int a = 0; a < model_.num_actions; ++a) {
            for (int s = 0; s < n; ++s) {
                double sum = 0.0;
                bool negative = false;
                for (int s2 = 0; s2 < n; ++s2) {
                    const double p = model_.trans(a, s, s2);
                    sum += p;
                    if (p < 0.0) negative = true;
                }
                const int line = t_row_line_[static_cast<size_t>(a) * n + s];
                if (negative) {
                    std::ostringstream msg;
                    msg << "transition row (action " << a + 1 << ", state " << s + 1
                        << ") has a negative entry";
                    error(line, msg.str());
                }
                if (std::abs(sum - 1.0) > 1e-6) {
                    std::ostringstream msg;
                    msg << "transition row (action " << a + 1 << ", state " << s + 1
                        << ") sums to " << sum;
                    error(line, msg.str());
                }
            }
            for (int s2 = 0; s2 < n; ++s2) {
                double sum = 0.0;
                bool negative = false;
                for (int o = 0; o < no; ++o) {
                    const double p = model_.obs_prob(a, s2, o);
                    sum += p;
                    if (p < 0.0) negative = true;
                }
                const int line = o_row_line_[static_cast<size_t>(a) * n + s2];
                if (negative) {
                    std::ostringstream msg;
                    msg << "observation row (action " << a + 1 << ", next state " << s2 + 1
                        << ") has a negative entry";
                    error(line, msg.str());
                }
                if (std::abs(sum - 1.0) > 1e-6) {
                    std::ostringstream msg;
                    msg << "observation row (action " << a + 1 << ", next state " << s2 + 1
                        << ") sums to " << sum;
                    error(line, msg.str());
                }
            }
        }
        (void)start_given_;  // absent start: keeps the uniform default
    }
};

}  // namespace

bool ParseResult::has_errors() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [](const ParseDiagnostic& d) {
        return d.severity == ParseDiagnostic::Severity::error;
    });
}

ParseResult parse_pomdp(std::string_view text) { return Parser(text).run(); }

PomdpModel load_model(const std::string& path, std::vector<int> terminal_states) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PomdpError("cannot open model file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw PomdpError("I/O error reading model file: " + path);

    ParseResult result = parse_pomdp(buffer.str());
    if (!result.ok()) {
        std::ostringstream msg;
        msg << "parse errors in " << path << ":";
        for (const auto& d : result.diagnostics) {
            msg << "\n  line " << d.line << ": "
                << (d.severity == ParseDiagnostic::Severity::error ? "error: " : "warning: ")
                << d.message;
        }
        throw PomdpError(msg.str());
    }

    PomdpModel model = std::move(*result.model);
    std::sort(terminal_states.begin(), terminal_states.end());
    terminal_states.erase(std::unique(terminal_states.begin(), terminal_states.end()),
                          terminal_states.end());
    model.terminal_states = std::move(terminal_states);

    auto issues = validate_model(model);
    if (!issues.empty()) {
        std::ostringstream msg;
        msg << "model " << path << " failed validation:";
        for (const auto& issue : issues) msg << "\n  " << issue;
        throw PomdpError(msg.str());
    }
    return model;
}

}  // namespace pomdp
