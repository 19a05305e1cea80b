#include "ecdlp/numeric.hpp"

#include <doctest.h>

using namespace ecdlp;

namespace {

bool trial_prime(std::uint64_t m)
{
    if (m < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= m; ++q)
        if (m % q == 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("primality agrees with trial division below 10000")
{
    for (std::uint64_t m = 2; m < 10000; ++m)
        CHECK(is_prime(Int(m)) == trial_prime(m));
}

TEST_CASE("primality on card-sized values")
{
    CHECK(is_prime(Int(43)));
    CHECK(is_prime(Int(16777213)));
    CHECK(is_prime(Int(16770451)));
    CHECK(is_prime((Int(1) << 61) - 1));
    CHECK_FALSE(is_prime(Int(561)));    // Carmichael
    CHECK_FALSE(is_prime(Int(341)));    // Fermat pseudoprime base 2
    CHECK_FALSE(is_prime((Int(1) << 64) + 1));
    CHECK(is_prime((Int(1) << 89) - 1));  // above the deterministic range
    CHECK_THROWS_AS(is_prime(Int(1)), std::invalid_argument);
}

TEST_CASE("factoring recovers known decompositions")
{
    auto f = factor(Int(2 * 2 * 2 * 2 * 9 * 5 * 7));
    REQUIRE(f.has_value());
    Factorization want{{Int(2), 4}, {Int(3), 2}, {Int(5), 1}, {Int(7), 1}};
    CHECK(*f == want);

    auto one = factor(Int(1));
    REQUIRE(one.has_value());
    CHECK(one->empty());

    auto prime = factor(Int(16770451));
    REQUIRE(prime.has_value());
    CHECK(*prime == Factorization{{Int(16770451), 1}});
}

TEST_CASE("factoring reconstructs random composites")
{
    Int v = Int(1000003) * 1000033 * 97;
    auto f = factor(v);
    REQUIRE(f.has_value());
    Int back = 1;
    for (const auto& [q, e] : *f) {
        CHECK(is_prime(q));
        for (unsigned i = 0; i < e; ++i)
            back *= q;
    }
    CHECK(back == v);
}

TEST_CASE("factoring budget exhaustion is a clean miss")
{
    // Two ~64-bit primes; 256 Brent steps cannot split the product.
    Int a = (Int(1) << 61) - 1;
    Int b = (Int(1) << 89) - 1;
    CHECK_FALSE(factor(a * b, 256).has_value());
}
