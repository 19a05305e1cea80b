#include "ecdlp/rng.hpp"

namespace ecdlp {

namespace {

// SplitMix64 finalizer; full 64-bit avalanche.
std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed) ^ (stream * 0xD6E8FEB86659FD93ULL + 1)))
{
}

std::uint64_t Rng::next_u64()
{
    return mix64(key_ + 0xA0761D6478BD642FULL * ++counter_);
}

Int Rng::below(const Int& bound)
{
    if (bound <= 0)
        throw std::invalid_argument("Rng::below: bound must be positive");
    const std::size_t bits = bit_length(bound);
    const std::size_t words = (bits + 63) / 64;
    const unsigned top_shift = static_cast<unsigned>(words * 64 - bits);
    for (;;) {
        Int v = 0;
        for (std::size_t i = 0; i < words; ++i)
            v = (v << 64) | next_u64();
        v >>= top_shift;
        if (v < bound)
            return v;
    }
}

Int Rng::nonzero_below(const Int& bound)
{
    if (bound <= 1)
        throw std::invalid_argument("Rng::nonzero_below: bound must exceed 1");
    for (;;) {
        Int v = below(bound);
        if (v != 0)
            return v;
    }
}

double Rng::next_double()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace ecdlp
