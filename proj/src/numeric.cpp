#include "ecdlp/numeric.hpp"

#include "ecdlp/rng.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace ecdlp {

namespace {

bool miller_rabin_round(const Int& m, const Int& base, const Int& d, unsigned r)
{
    Int a = mod_reduce(base, m);
    if (a <= 1)
        return true;
    Int x = mod_pow(a, d, m);
    if (x == 1 || x == m - 1)
        return true;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % m;
        if (x == m - 1)
            return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& m)
{
    if (m < 2)
        throw std::invalid_argument("is_prime: argument must be >= 2");
    static const std::array<unsigned, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned s : small) {
        if (m == s)
            return true;
        if (m % s == 0)
            return false;
    }

    Int d = m - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }

    if (m < (Int(1) << 64)) {
        // This witness set is deterministic for all m < 2^64.
        for (unsigned s : small)
            if (!miller_rabin_round(m, s, d, r))
                return false;
        return true;
    }

    Rng rng(0x416C696365u, 0);  // fixed seed: reproducible witness choice
    for (int i = 0; i < 64; ++i) {
        Int base = 2 + rng.below(m - 3);
        if (!miller_rabin_round(m, base, d, r))
            return false;
    }
    return true;
}

namespace {

// Brent's variant of the rho cycle method for integer factoring. Returns a
// nontrivial factor of m (composite, odd, not a prime power handled by
// caller) or nullopt if the step budget runs out.
std::optional<Int> brent_factor(const Int& m, std::uint64_t budget, Rng& rng)
{
    if (m % 2 == 0)
        return Int(2);
    std::uint64_t spent = 0;
    while (spent < budget) {
        Int y = rng.below(m);
        Int c = rng.nonzero_below(m);
        Int x = y, q = 1, g = 1, ys = y;
        std::uint64_t r = 1;
        const std::uint64_t batch = 128;
        while (g == 1 && spent < budget) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = (y * y + c) % m;
            std::uint64_t k = 0;
            while (k < r && g == 1 && spent < budget) {
                ys = y;
                std::uint64_t lim = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % m;
                    Int diff = x > y ? x - y : y - x;
                    q = (q * diff) % m;
                }
                spent += lim;
                g = boost::multiprecision::gcd(q, m);
                k += lim;
            }
            r *= 2;
        }
        if (g == m) {
            // Backtrack one step at a time.
            do {
                ys = (ys * ys + c) % m;
                Int diff = x > ys ? x - ys : ys - x;
                g = boost::multiprecision::gcd(diff, m);
            } while (g == 1);
        }
        if (g != 1 && g != m)
            return g;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Factorization> factor(Int m, std::uint64_t step_budget)
{
    if (m < 1)
        throw std::invalid_argument("factor: argument must be >= 1");
    std::map<Int, unsigned> found;
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
        while (m % p == 0) {
            ++found[p];
            m /= p;
        }
    }
    for (Int p = 53; p * p <= m && p < 100000; p += 2) {
        while (m % p == 0) {
            ++found[p];
            m /= p;
        }
    }

    Rng rng(0x42726E74u, 0);
    std::vector<Int> pending;
    if (m > 1)
        pending.push_back(m);
    while (!pending.empty()) {
        Int v = pending.back();
        pending.pop_back();
        if (is_prime(v)) {
            ++found[v];
            continue;
        }
        auto f = brent_factor(v, step_budget, rng);
        if (!f)
            return std::nullopt;
        pending.push_back(*f);
        pending.push_back(v / *f);
    }

    Factorization out(found.begin(), found.end());
    return out;
}

}  // namespace ecdlp
