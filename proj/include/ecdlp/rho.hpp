#pragma once

#include "ecdlp/card.hpp"
#include "ecdlp/curve.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ecdlp {

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RhoConfig {
    unsigned partitions = 32;  // update rules, one of which doubles
    int dp_bits = -1;          // trailing zeros of canonical x; -1 = max(1, k/4 - 2)
    bool use_negation = true;
    std::uint64_t seed = 1;
    unsigned max_walkers = 1;
    unsigned budget_multiplier = 64;  // step budget = multiplier * sqrt(n)
    bool use_floyd = false;           // memoryless serial mode, for testing
};

// (alpha, beta, gamma): X -> [alpha]X + [beta]G + [gamma]Q. alpha is 1 for
// every additive rule and 2 for the single doubling rule.
struct UpdateRule {
    Int alpha, beta, gamma;

    friend bool operator==(const UpdateRule&, const UpdateRule&) = default;
};

// Seeded rule table: partitions - 1 additive rules plus one doubling rule.
std::vector<UpdateRule> make_rules(const Int& n, unsigned partitions, std::uint64_t seed);

// Walk state with the defining invariant X = [a]G + [b]Q.
struct WalkState {
    Int a, b;
    CurvePoint X;
    std::uint64_t steps = 0;
};

// Low bits of the canonical x-coordinate, reduced mod m. Throws on infinity.
unsigned partition(const CurvePoint& X, unsigned m);

// Precomputed [beta_j]G + [gamma_j]Q per rule (infinity slot for the
// doubling rule).
std::vector<CurvePoint> rule_hops(const std::vector<UpdateRule>& rules, const CurvePoint& G,
                                  const CurvePoint& Q);

// One walk step, preserving X = [a]G + [b]Q. With use_negation the result is
// the canonical class representative (y <= (p-1)/2, scalars negated to
// match). Cycle-escape bookkeeping lives in the solver, not here.
WalkState step(const WalkState& st, const std::vector<UpdateRule>& rules,
               const std::vector<CurvePoint>& hops, const CurvePoint& G, const CurvePoint& Q,
               const Int& n, bool use_negation);

// d = (a_i - a_j) / (b_j - b_i) mod n; nullopt when b_i == b_j (degenerate,
// caller restarts).
std::optional<Int> solve_collision(const Int& ai, const Int& bi, const Int& aj, const Int& bj,
                                   const Int& n);

struct RhoStats {
    std::uint64_t ops = 0;       // group operations, all walkers
    std::uint64_t dps = 0;       // distinguished points stored
    std::uint64_t restarts = 0;  // degenerate collisions and fresh starts
    std::uint64_t wall_ms = 0;
    Int d;
};

std::string stats_to_json(const RhoStats& s);

// Pollard rho with r-adding walks, negation map, and distinguished points.
// The returned d always satisfies [d]G = Q. Throws BudgetExhausted past
// budget_multiplier * sqrt(n) total steps.
RhoStats solve(const ChallengeCard& card, const RhoConfig& cfg = {});

struct KangarooResult {
    Int d;
    std::uint64_t ops = 0;
    std::uint64_t traps = 0;
};

// Pollard kangaroo for d known to lie in [lo, lo + width). O(sqrt(width))
// group operations. Throws BudgetExhausted when the traps are exhausted
// without a verified collision (d outside the stated interval).
KangarooResult solve_kangaroo(const ChallengeCard& card, const Int& lo, const Int& width,
                              std::uint64_t seed = 1);

}  // namespace ecdlp
