#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace pomdp {

/// Seed for any randomized stage. Runs are reproducible given the seed; all
/// derived streams are functions of it (see derive_stream).
struct RngSeed {
    uint64_t value = 0;
};

/// splitmix64 step; the standard 64-bit finalizer used for seed mixing.
uint64_t splitmix64(uint64_t& state);

/// Derives an independent stream seed from (seed, tag, index). Tags name the
/// consumer ("belief-walk", "perseus-stage", "episode", ...), the index
/// separates repeated uses (stage number, episode number). Implemented as
/// splitmix64 over the FNV-1a hash of the tag mixed with the seed and index,
/// so streams are stable across platforms and documented here rather than
/// implied by call order.
uint64_t derive_stream(uint64_t seed, std::string_view tag, uint64_t index);

/// Deterministic generator: std::mt19937_64 (bit-exact by the standard) with
/// hand-rolled bounded draws, because the std::*_distribution adapters are
/// not pinned down across standard libraries.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}
    explicit Rng(RngSeed seed) : gen_(seed.value) {}

    uint64_t next_u64() { return gen_(); }

    /// Uniform in [0,1) with 53 random bits.
    double next_double() { return (gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Multiply-shift reduction; bias is
    /// 2^-64-scale and irrelevant at these bounds.
    int next_int(int bound) {
        return static_cast<int>((static_cast<unsigned __int128>(gen_()) *
                                 static_cast<unsigned __int128>(bound)) >>
                                64);
    }

    /// Draws an index from a probability row (sums to ~1). CDF scan; if
    /// floating-point shortfall leaves the draw above the accumulated total,
    /// returns the last index with positive mass.
    int sample_categorical(std::span<const double> weights) {
        const double u = next_double();
        double acc = 0.0;
        int last_positive = 0;
        for (size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] > 0.0) last_positive = static_cast<int>(i);
            acc += weights[i];
            if (u < acc) return static_cast<int>(i);
        }
        return last_positive;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace pomdp
