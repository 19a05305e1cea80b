#include "ecdlp/ladder.hpp"
#include "ecdlp/shor.hpp"

#include <doctest.h>

#include <cmath>

using namespace ecdlp;

TEST_CASE("instance metadata: control registers are twice the order width")
{
    CHECK(ShorInstance(Int(31), Int(3)).n_e == 10);
    CHECK(ShorInstance(Int(16770451), Int(5)).n_e == 48);
    CHECK_THROWS_AS(ShorInstance(Int(31), Int(0)), std::invalid_argument);
    CHECK_THROWS_AS(ShorInstance(Int(31), Int(31)), std::invalid_argument);
}

TEST_CASE("every sample satisfies b = d*a mod n")
{
    ShorInstance inst(Int(31), Int(3));
    auto batch = sample_many(inst, 5000, 42);
    for (const auto& s : batch) {
        CHECK(s.a >= 0);
        CHECK(s.a < 31);
        CHECK(s.b == mod_reduce(s.a * 3, Int(31)));
    }
}

TEST_CASE("dense simulation equals the algebraic law to 1e-12")
{
    for (auto [n, d] : {std::pair<int, int>{7, 5}, {31, 3}, {31, 1}, {13, 12}}) {
        ShorInstance inst{Int(n), Int(d)};
        auto prob = dense_simulate(inst);
        double worst = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double expect = (b == a * d % n) ? 1.0 / n : 0.0;
                worst = std::max(worst, std::abs(prob[a][b] - expect));
            }
        CHECK(worst < 1e-12);
    }
    CHECK_THROWS_AS(dense_simulate(ShorInstance(Int(139), Int(4))), std::invalid_argument);
}

TEST_CASE("empirical distribution is close to the exact law")
{
    const int n = 31, d = 3;
    ShorInstance inst{Int(n), Int(d)};
    auto batch = sample_many(inst, 100000, 7);
    std::vector<double> counts(n, 0.0);
    for (const auto& s : batch)
        counts[s.a.convert_to<int>()] += 1.0 / batch.size();
    double tv = 0.0;
    for (int a = 0; a < n; ++a)
        tv += std::abs(counts[a] - 1.0 / n) / 2.0;
    CHECK(tv < 0.02);
}

TEST_CASE("recovery succeeds from any nondegenerate sample and verifies")
{
    ChallengeCard card = generate_card(6, 11);
    REQUIRE(card.d.has_value());
    ShorInstance inst(card.n, *card.d);

    CHECK(recover_d({{Int(1), mod_reduce(*card.d, card.n)}}, card) == *card.d);
    CHECK_THROWS_AS(recover_d({{Int(0), Int(0)}}, card), NeedMoreSamples);

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto batch = sample_many(inst, 10, seed);
        bool any_nonzero = false;
        for (const auto& s : batch)
            if (s.a != 0)
                any_nonzero = true;
        if (!any_nonzero)
            continue;
        Int rec = recover_d(batch, card);
        CHECK(rec == *card.d);
        CHECK(scalar_mul(rec, card.generator()) == card.public_key());
    }
}

TEST_CASE("both post-processing conventions are tried")
{
    ChallengeCard card = generate_card(6, 11);
    Int n = card.n, d = *card.d;
    // A sample stated in the transposed convention: (a, b) with a = -d*b.
    Int b = 5;
    Int a = mod_reduce(-d * b, n);
    CHECK(recover_d({{a, b}}, card) == d);
}
