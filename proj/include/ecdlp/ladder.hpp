#pragma once

#include "ecdlp/card.hpp"
#include "ecdlp/curve.hpp"

#include <cstdint>
#include <optional>

namespace ecdlp {

enum class CountingMethod { Exhaustive, BsgsHasse, VerifyOnly };

struct LadderConfig {
    unsigned exhaustive_cap_bits = 20;
    unsigned counting_cap_bits = 80;       // beyond this, verify-only
    std::uint64_t factoring_budget = 1u << 20;
    unsigned bsgs_point_retries = 8;
};

// Pure function of k and the configured caps.
CountingMethod counting_method(unsigned k, const LadderConfig& cfg = {});

struct CountingInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact |E(F_p)| for y^2 = x^3 + 7. Dispatches on bit length: exhaustive
// x-sweep up to the exhaustive cap, baby-step/giant-step order finding over
// the Hasse interval up to the counting cap. Throws CountingInfeasible when
// the method would be VerifyOnly or when BSGS cannot isolate a unique order
// (which implies a composite order; see count_points_bsgs).
Int count_points(const Int& p, const LadderConfig& cfg = {});

Int count_points_exhaustive(const Int& p);

// nullopt when no unique multiple of the combined point order lies in the
// Hasse interval after the retry budget; only possible when |E| is composite.
std::optional<Int> count_points_bsgs(const Int& p, unsigned point_retries = 8);

// ord_n(p) by factoring n - 1 under a step budget; nullopt = unverified.
std::optional<Int> embedding_degree(const Int& p, const Int& n,
                                    std::uint64_t factoring_budget = 1u << 20);

// Generator abscissa descended from the 256-bit base-point abscissa reduced
// modulo 2^k, wrapping once; y from ec_core's fixed square-root branch.
CurvePoint canonical_generator(const Int& p, unsigned k);

// The base-point abscissa the descent starts from.
Int base_point_abscissa();

// Deterministic card construction: largest k-bit prime whose curve has prime
// order n != p, canonical generator, fresh secret from the seeded generator.
ChallengeCard generate_card(unsigned k, std::uint64_t seed, const LadderConfig& cfg = {});

}  // namespace ecdlp
