#pragma once

#include "ecdlp/bigint.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ecdlp {

// Deterministic Miller-Rabin witness set below 2^64; 64 seeded
// pseudo-random rounds above.
bool is_prime(const Int& m);

using Factorization = std::vector<std::pair<Int, unsigned>>;

// Trial division plus Brent-cycle factoring with a per-factor step budget.
// Returns nullopt when the budget runs out before the factorization is
// complete. Sorted by factor.
std::optional<Factorization> factor(Int m, std::uint64_t step_budget = 1u << 20);

}  // namespace ecdlp
