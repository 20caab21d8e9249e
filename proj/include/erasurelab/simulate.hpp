#pragma once

#include <cstdint>
#include <vector>

#include "erasurelab/code.hpp"

namespace erasurelab {

/// SplitMix64. Every simulation trial runs on its own substream derived as
/// substream(seed, trial) = SplitMix64 seeded with
/// mix(seed + (trial + 1) * 0x9E3779B97F4A7C15), so results do not depend on
/// how trials are partitioned across threads.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t state) : s_(state) {}

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t trial) {
        return SplitMix64(mix(seed + (trial + 1) * 0x9E3779B97F4A7C15ull));
    }

    std::uint64_t next() {
        s_ += 0x9E3779B97F4A7C15ull;
        return mix(s_);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        // rejection sampling keeps the draw exactly uniform
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t s_;
};

struct ChannelConfig {
    double p = 0;            // per-coordinate erasure probability
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
};

/// A word off the channel: symbol values plus the erasure mask. Positions in
/// `erased` carry no information; their symbol slots hold 0.
struct Received {
    std::vector<Elem> symbols;
    CoordSet erased = 0;
};

/// Erase each coordinate independently with probability p; symbols are never
/// substituted.
Received transmit(const LinearCode& c, const std::vector<Elem>& message, const ChannelConfig& cfg,
                  SplitMix64& rng);

struct DecodeResult {
    bool ambiguous = false;
    int zero_class_dim = 0;           // ambiguity set size is q^zero_class_dim
    std::vector<Elem> message;        // the (possibly random) ML pick
};

/// Maximum-likelihood erasure decoding: solve for all messages consistent
/// with the unerased coordinates and pick uniformly among them. Throws
/// Inadmissible when nothing matches (impossible for channel output).
DecodeResult ml_erasure_decode(const LinearCode& c, const Received& received, SplitMix64& rng);

struct EstimateResult {
    double p_amb_hat = 0;
    double p_dec_hat = 0;
    double se_amb = 0;  // binomial standard errors
    double se_dec = 0;
    std::uint64_t trials = 0;
    std::uint64_t ambiguous_count = 0;
    std::uint64_t decode_error_count = 0;
    bool p_outside_paper_range = false;  // channel model assumes 0 < p < 1/2
};

/// Monte Carlo estimate of P_amb and P_dec over uniformly drawn messages.
/// Deterministic for a given (seed, trials) regardless of thread count.
EstimateResult estimate(const LinearCode& c, const ChannelConfig& cfg,
                        std::uint64_t trial_budget = 100000000);

}  // namespace erasurelab
