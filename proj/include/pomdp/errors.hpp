#pragma once

#include <stdexcept>
#include <string>

namespace pomdp {

/// Base class for all library errors.
struct PomdpError : std::runtime_error {
    explicit PomdpError(const std::string& what) : std::runtime_error(what) {}
};

/// Bayes update hit a zero normalizer: the observation has probability 0
/// under the given belief and action. Observations are always drawn from the
/// generative model in this code base, so this indicates a caller bug.
struct ImpossibleObservation : PomdpError {
    explicit ImpossibleObservation(const std::string& what) : PomdpError(what) {}
};

/// Two vectors that must share a dimension do not.
struct DimensionMismatch : PomdpError {
    explicit DimensionMismatch(const std::string& what) : PomdpError(what) {}
};

/// Requested subset size exceeds the available count.
struct CountTooLarge : PomdpError {
    explicit CountTooLarge(const std::string& what) : PomdpError(what) {}
};

/// Convergence ratio undefined because the previous summed value is zero.
struct DegenerateDenominator : PomdpError {
    explicit DegenerateDenominator(const std::string& what) : PomdpError(what) {}
};

}  // namespace pomdp
