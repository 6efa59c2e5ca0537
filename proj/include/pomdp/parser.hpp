#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pomdp/model.hpp"

namespace pomdp {

/// One parser finding. State/action/observation indices inside messages are
/// 1-based (display convention); the in-memory model stays 0-based.
struct ParseDiagnostic {
    enum class Severity { error, warning };

    int line = 1;  // 1-based
    std::string message;
    Severity severity = Severity::error;
};

struct ParseResult {
    std::optional<PomdpModel> model;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return model.has_value(); }
    bool has_errors() const;
};

/// Parses the Cassandra `.POMDP` text format.
///
/// Supported surface:
///   preamble   discount: / values: / states: / actions: / observations:
///              (counts or name lists, any order, before any table entry)
///   start      `start: uniform`, an explicit |S|-vector, a single state,
///              `start include: ...`, `start exclude: ...`
///   tables     T:/O:/R: in scalar, row, and matrix forms, with `*`
///              wildcards and the keywords `uniform` and `identity`
///
/// Entries assign (later entries override earlier ones); anything never
/// assigned stays 0. Rewards given per-observation are folded into
/// R(s,a,s') as an expectation over the observation model. Indices in the
/// file are 0-based per the format; comments (`#`) run to end of line.
ParseResult parse_pomdp(std::string_view text);

/// Reads and parses a model file, attaches the terminal-state set (0-based),
/// and checks validate_model. Throws PomdpError on I/O failure, parse
/// errors, or a model that fails validation.
PomdpModel load_model(const std::string& path, std::vector<int> terminal_states);

}  // namespace pomdp
