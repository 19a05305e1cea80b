#pragma once

#include "ecdlp/bigint.hpp"

#include <cstdint>

namespace ecdlp {

// Counter-based deterministic generator. All randomness in the project flows
// from an explicit 64-bit seed through this type; there is no ambient entropy.
// Independent streams are derived from (seed, stream) so parallel walkers can
// share one user-facing seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    // Uniform in [0, bound) by rejection; bound > 0.
    Int below(const Int& bound);

    // Uniform in [1, bound).
    Int nonzero_below(const Int& bound);

    double next_double();  // [0, 1)

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace ecdlp
