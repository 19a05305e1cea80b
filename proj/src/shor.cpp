#include "ecdlp/shor.hpp"

#include "ecdlp/curve.hpp"

#include <cmath>
#include <complex>

namespace ecdlp {

ShorSample sample(const ShorInstance& inst, Rng& rng)
{
    Int a = rng.below(inst.n);
    return {a, mod_reduce(a * inst.d, inst.n)};
}

std::vector<ShorSample> sample_many(const ShorInstance& inst, std::size_t count,
                                    std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<ShorSample> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(sample(inst, rng));
    return out;
}

std::vector<std::vector<double>> dense_simulate(const ShorInstance& inst)
{
    if (inst.n > 64)
        throw std::invalid_argument("dense_simulate: group order must be <= 64");
    const std::size_t n = inst.n.convert_to<std::size_t>();
    const std::size_t d = inst.d.convert_to<std::size_t>();
    const double tau = 2.0 * M_PI / static_cast<double>(n);

    std::vector<std::vector<double>> prob(n, std::vector<double>(n, 0.0));
    // Uniform superposition over (x, y); the point register holds
    // s = x + d*y mod n. Condition on each measured s, then transform both
    // control registers by direct DFT summation.
    for (std::size_t c = 0; c < n; ++c) {
        const double p_c = 1.0 / n;  // n coset members out of n^2 states
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                std::complex<double> amp(0.0, 0.0);
                for (std::size_t y = 0; y < n; ++y) {
                    std::size_t x = (c + n * d - d * y % n) % n;
                    double phase = tau * static_cast<double>((a * x + b * y) % n);
                    amp += std::polar(1.0, phase);
                }
                // Coset amplitude 1/sqrt(n) times the 1/n DFT normalization.
                double mag = std::abs(amp) / (n * std::sqrt(static_cast<double>(n)));
                prob[a][b] += p_c * mag * mag;
            }
        }
    }
    return prob;
}

Int recover_d(const std::vector<ShorSample>& samples, const ChallengeCard& card)
{
    const Int& n = card.n;
    CurvePoint G = card.generator();
    CurvePoint Q = card.public_key();
    auto verified = [&](const Int& cand) { return scalar_mul(cand, G) == Q; };

    for (const ShorSample& s : samples) {
        Int a = mod_reduce(s.a, n);
        Int b = mod_reduce(s.b, n);
        if (a != 0) {
            Int cand = mod_reduce(b * mod_inverse(a, n), n);
            if (verified(cand))
                return cand;
        }
        if (b != 0) {
            Int cand = mod_reduce(-a * mod_inverse(b, n), n);
            if (verified(cand))
                return cand;
        }
    }
    throw NeedMoreSamples("recover_d: no sample produced a verified candidate");
}

}  // namespace ecdlp
