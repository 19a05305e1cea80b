#pragma once

#include "ecdlp/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ecdlp {

// One ladder rung: k-bit prime field, prime group order, canonical
// generator, example public key, and (for self-generated cards) the secret.
struct ChallengeCard {
    unsigned k = 0;
    Int p;
    Int n;
    std::optional<Int> r;  // embedding degree; nullopt = unverified
    Int gx, gy;
    Int qx, qy;
    std::optional<Int> d;

    CurvePoint generator() const { return CurvePoint(gx, gy, p); }
    CurvePoint public_key() const { return CurvePoint(qx, qy, p); }
    GroupContext group() const { return GroupContext(p, n); }
};

std::string card_to_json(const ChallengeCard& card);
ChallengeCard card_from_json(const std::string& text);

ChallengeCard load_card(const std::string& path);
void save_card(const ChallengeCard& card, const std::string& path);

// All 20 published cards, ascending k. `dir` defaults to the bundled
// data directory.
std::vector<ChallengeCard> load_appendix_cards(const std::string& dir = {});

struct CardCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CardCheck> checks;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

// Checks every structural invariant of a card. Failures are report entries,
// not errors. The embedding-degree check is skipped (reported as pass with a
// note) when factoring n - 1 exceeds the budget.
VerificationReport verify_card(const ChallengeCard& card);

}  // namespace ecdlp
