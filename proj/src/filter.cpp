#include "pomdp/filter.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "pomdp/errors.hpp"
#include "pomdp/format.hpp"

namespace pomdp {

namespace {

void check_threshold(double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        std::ostringstream msg;
        msg << "similarity threshold must lie in (0,1), got " << threshold;
        throw std::invalid_argument(msg.str());
    }
}

// Short-circuits once any coordinate difference reaches the threshold.
bool within_threshold(const std::vector<double>& a, const std::vector<double>& b,
                      double threshold) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) >= threshold) return false;
    }
    return true;
}

}  // namespace

bool is_similar(const BeliefVector& a, const BeliefVector& b, double threshold) {
    check_threshold(threshold);
    if (a.dimension() != b.dimension()) {
        std::ostringstream msg;
        msg << "is_similar: dimension mismatch (" << a.dimension() << " vs " << b.dimension()
            << ")";
        throw DimensionMismatch(msg.str());
    }
    return within_threshold(a.probs, b.probs, threshold);
}

std::pair<BeliefSet, FilterReport> filter_beliefs(const BeliefSet& set, double threshold) {
    check_threshold(threshold);
    const auto start = std::chrono::steady_clock::now();

    const auto& beliefs = set.beliefs;
    std::vector<int> kept;
    // Kept beliefs indexed by first coordinate; only candidates within
    // threshold of the query's first coordinate need a full distance check.
    std::vector<std::pair<double, int>> by_first;

    for (int i = 0; i < set.size(); ++i) {
        const auto& candidate = beliefs[i].probs;
        if (i > 0 && beliefs[i].dimension() != beliefs[0].dimension()) {
            throw DimensionMismatch("filter_beliefs: beliefs of mixed dimension");
        }
        const double first = candidate.empty() ? 0.0 : candidate[0];
        bool similar = false;
        auto lo = std::lower_bound(by_first.begin(), by_first.end(),
                                   std::make_pair(first - threshold, -1));
        for (auto it = lo; it != by_first.end() && it->first - first < threshold; ++it) {
            if (within_threshold(candidate, beliefs[it->second].probs, threshold)) {
                similar = true;
                break;
            }
        }
        if (!similar) {
            kept.push_back(i);
            by_first.insert(std::lower_bound(by_first.begin(), by_first.end(),
                                             std::make_pair(first, i)),
                            {first, i});
        }
    }

    BeliefSet out;
    out.provenance = set.provenance;
    out.beliefs.reserve(kept.size());
    for (int idx : kept) out.beliefs.push_back(beliefs[idx]);

    FilterReport report;
    report.input_count = set.size();
    report.kept_count = static_cast<int>(kept.size());
    report.threshold = threshold;
    report.kept_indices = std::move(kept);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(out), std::move(report)};
}

BeliefSet subsample(const BeliefSet& set, int k, RngSeed seed) {
    if (k < 0 || k > set.size()) {
        std::ostringstream msg;
        msg << "subsample: requested " << k << " of " << set.size() << " beliefs";
        throw CountTooLarge(msg.str());
    }
    BeliefSet out;
    out.provenance = set.provenance;
    out.beliefs.reserve(k);

    // Selection sampling: position i survives with probability
    // (remaining picks) / (remaining items); order-preserving.
    Rng rng(derive_stream(seed.value, "subsample", 0));
    int remaining_picks = k;
    const int n = set.size();
    for (int i = 0; i < n && remaining_picks > 0; ++i) {
        const double accept = static_cast<double>(remaining_picks) / (n - i);
        if (rng.next_double() < accept) {
            out.beliefs.push_back(set.beliefs[i]);
            --remaining_picks;
        }
    }
    return out;
}

std::string FilterReport::csv_row() const {
    std::ostringstream row;
    row << input_count << ',' << kept_count << ',' << format_double(threshold) << ','
        << format_seconds(elapsed_seconds);
    return row.str();
}

}  // namespace pomdp
