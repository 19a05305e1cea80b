#pragma once

#include "ecdlp/card.hpp"
#include "ecdlp/rng.hpp"

#include <cstdint>
#include <vector>

namespace ecdlp {

// Ideal period-finding instance over a prime-order group. n_e is register
// metadata for resource accounting; the sample law itself is exact mod n.
struct ShorInstance {
    Int n;
    Int d;
    unsigned n_e;

    ShorInstance(Int n_, Int d_)
        : n(std::move(n_)), d(std::move(d_)), n_e(2 * static_cast<unsigned>(ceil_log2(n)))
    {
        if (d <= 0 || d >= n)
            throw std::invalid_argument("ShorInstance: secret must lie in [1, n)");
    }
};

struct ShorSample {
    Int a, b;  // b = d * a mod n, always
};

ShorSample sample(const ShorInstance& inst, Rng& rng);

std::vector<ShorSample> sample_many(const ShorInstance& inst, std::size_t count,
                                    std::uint64_t seed);

// Exact outcome distribution P[a][b] by brute-force state evolution: coset
// collapse of the point register followed by a direct mod-n DFT on both
// control registers. Requires n <= 64.
std::vector<std::vector<double>> dense_simulate(const ShorInstance& inst);

struct NeedMoreSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First d* from any sample that verifies [d*]G = Q; both post-processing
// conventions (b/a and -a/b) are tried. Throws NeedMoreSamples when every
// sample is degenerate.
Int recover_d(const std::vector<ShorSample>& samples, const ChallengeCard& card);

}  // namespace ecdlp
