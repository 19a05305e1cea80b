#include "ecdlp/ladder.hpp"

#include "ecdlp/numeric.hpp"
#include "ecdlp/rng.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace ecdlp {

CountingMethod counting_method(unsigned k, const LadderConfig& cfg)
{
    if (k <= cfg.exhaustive_cap_bits)
        return CountingMethod::Exhaustive;
    if (k <= cfg.counting_cap_bits)
        return CountingMethod::BsgsHasse;
    return CountingMethod::VerifyOnly;
}

Int count_points_exhaustive(const Int& p)
{
    if (p > (Int(1) << 28))
        throw CountingInfeasible("exhaustive count: modulus too large");
    const std::uint64_t m = p.convert_to<std::uint64_t>();
    std::vector<char> square(m, 0);
    for (std::uint64_t y = 0; y < m; ++y)
        square[y * y % m] = 1;
    // n = 1 + sum over x of (1 + chi(x^3 + 7)).
    std::uint64_t count = 1;
    for (std::uint64_t x = 0; x < m; ++x) {
        std::uint64_t z = (x * x % m * x + kCurveB) % m;
        count += (z == 0) ? 1 : (square[z] ? 2 : 0);
    }
    return Int(count);
}

namespace {

// Random curve point; the seed stream is derived from p so counting is a
// deterministic function of the modulus.
CurvePoint random_point(const Int& p, Rng& rng)
{
    for (;;) {
        Int x = rng.below(p);
        FieldElement fx(x, p);
        FieldElement rhs = fx * fx * fx + FieldElement(kCurveB, p);
        int chi = legendre(rhs);
        if (chi < 0)
            continue;
        if (chi == 0)
            return CurvePoint(fx, FieldElement(0, p));
        return CurvePoint(fx, sqrt_mod(rhs));
    }
}

// Smallest M in [lo, lo + width] with [M]P identity, via baby-step/giant-step
// with the negation shortcut. P has odd-or-even order dividing some such M.
Int multiple_of_order_in_interval(const CurvePoint& P, const Int& lo, const Int& width)
{
    const Int& p = P.modulus();
    Int m = isqrt_ceil(width + 1);
    std::size_t baby_count = m.convert_to<std::size_t>();

    std::vector<JacobianPoint> baby_jac;
    baby_jac.reserve(baby_count);
    JacobianPoint acc = to_jacobian(P);
    JacobianPoint Pj = acc;
    for (std::size_t i = 1; i < baby_count; ++i) {
        baby_jac.push_back(acc);  // [i]P
        acc = jac_add(acc, Pj, p);
    }
    std::vector<CurvePoint> baby = batch_to_affine(baby_jac, p);

    // (x, index) sorted for lookup; index i corresponds to [i+1]P.
    std::vector<std::pair<Int, std::size_t>> by_x;
    by_x.reserve(baby.size());
    for (std::size_t i = 0; i < baby.size(); ++i)
        if (!baby[i].is_infinity())
            by_x.emplace_back(baby[i].x().value(), i);
    std::sort(by_x.begin(), by_x.end());

    Int gmax = width / m + 1;
    std::size_t giant_count = (gmax + 1).convert_to<std::size_t>();

    // G_g = -[lo]P - g*[m]P; a hit [i]P = G_g means [lo + g*m + i]P = O.
    JacobianPoint negS = to_jacobian(negate(scalar_mul(m, P)));
    JacobianPoint cur = to_jacobian(negate(scalar_mul(lo, P)));
    std::vector<JacobianPoint> giant_jac;
    giant_jac.reserve(giant_count);
    for (std::size_t g = 0; g < giant_count; ++g) {
        giant_jac.push_back(cur);
        cur = jac_add(cur, negS, p);
    }
    std::vector<Int> giant_identity;  // g values where G_g is the identity
    std::vector<JacobianPoint> giant_nonid;
    std::vector<Int> giant_g;
    for (std::size_t g = 0; g < giant_count; ++g) {
        if (giant_jac[g].is_identity())
            giant_identity.push_back(Int(g));
        else {
            giant_nonid.push_back(giant_jac[g]);
            giant_g.push_back(Int(g));
        }
    }
    std::vector<CurvePoint> giant = batch_to_affine(giant_nonid, p);

    Int best = -1;
    auto consider = [&](const Int& j) {
        if (j < 0)
            return;
        Int M = lo + j;
        if (M <= 0)
            return;
        if (best < 0 || M < best)
            best = M;
    };
    for (const Int& g : giant_identity)
        consider(g * m);  // T_g identity: [0]P matches
    for (std::size_t idx = 0; idx < giant.size(); ++idx) {
        const Int& gx = giant[idx].x().value();
        auto it = std::lower_bound(by_x.begin(), by_x.end(), std::make_pair(gx, std::size_t(0)));
        for (; it != by_x.end() && it->first == gx; ++it) {
            Int i = Int(it->second + 1);
            if (baby[it->second].y() == giant[idx].y())
                consider(giant_g[idx] * m + i);
            else
                consider(giant_g[idx] * m - i);
        }
    }
    if (best < 0)
        throw CountingInfeasible("order search found no annihilating multiple in the Hasse interval");
    return best;
}

// Exact order of P given a multiple M with [M]P identity.
Int exact_order(const CurvePoint& P, Int M, std::uint64_t factoring_budget)
{
    auto fac = factor(M, factoring_budget);
    if (!fac)
        throw CountingInfeasible("order reduction: factoring budget exhausted");
    Int e = std::move(M);
    for (const auto& [q, _] : *fac)
        while (e % q == 0 && scalar_mul(e / q, P).is_infinity())
            e /= q;
    return e;
}

}  // namespace

std::optional<Int> count_points_bsgs(const Int& p, unsigned point_retries)
{
    Int w = 2 * isqrt_ceil(p);
    Int lo = p + 1 - w;
    if (lo < 1)
        lo = 1;
    Int hi = p + 1 + w;
    Int width = hi - lo;

    Rng rng(0x4253475348617373ULL, (p & Int(0xFFFFFFFFFFFFFFFFULL)).convert_to<std::uint64_t>());
    Int L = 1;
    for (unsigned attempt = 0; attempt < point_retries; ++attempt) {
        CurvePoint P = random_point(p, rng);
        Int M = multiple_of_order_in_interval(P, lo, width);
        Int e = exact_order(P, M, 1u << 20);
        L = boost::multiprecision::lcm(L, e);
        // The group order is the unique multiple of L in the interval, when
        // unique. Several multiples means L is still a proper divisor, which
        // only happens for composite orders.
        Int q1 = hi / L;
        Int q0 = (lo - 1) / L;
        if (q1 - q0 == 1)
            return q1 * L;
    }
    return std::nullopt;
}

Int count_points(const Int& p, const LadderConfig& cfg)
{
    unsigned k = static_cast<unsigned>(bit_length(p));
    switch (counting_method(k, cfg)) {
    case CountingMethod::Exhaustive:
        return count_points_exhaustive(p);
    case CountingMethod::BsgsHasse: {
        auto n = count_points_bsgs(p, cfg.bsgs_point_retries);
        if (!n)
            throw CountingInfeasible("no unique order after retry budget (composite order)");
        return *n;
    }
    case CountingMethod::VerifyOnly:
        break;
    }
    throw CountingInfeasible("point counting beyond the configured cap; use verify mode");
}

std::optional<Int> embedding_degree(const Int& p, const Int& n, std::uint64_t factoring_budget)
{
    auto fac = factor(n - 1, factoring_budget);
    if (!fac)
        return std::nullopt;
    Int r = n - 1;
    for (const auto& [q, _] : *fac)
        while (r % q == 0 && mod_pow(p, r / q, n) == 1)
            r /= q;
    return r;
}

Int base_point_abscissa()
{
    return from_hex("79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798");
}

CurvePoint canonical_generator(const Int& p, unsigned k)
{
    Int span = Int(1) << k;
    Int x_seed = base_point_abscissa() & (span - 1);
    Int x = x_seed;
    for (Int tried = 0; tried < span; ++tried) {
        if (x < p) {
            int chi = legendre(x * x % p * x % p + kCurveB, p);
            if (chi == 1) {
                FieldElement fx(x, p);
                FieldElement rhs = fx * fx * fx + FieldElement(kCurveB, p);
                return CurvePoint(fx, sqrt_mod(rhs));
            }
        }
        if (x == 0)
            x = span;  // wrap modulo 2^k, once
        --x;
    }
    throw std::runtime_error("canonical generator: no residue abscissa below p");
}

ChallengeCard generate_card(unsigned k, std::uint64_t seed, const LadderConfig& cfg)
{
    if (k < 6 || k > 256)
        throw std::invalid_argument("generate_card: bit length must be in [6, 256]");
    CountingMethod method = counting_method(k, cfg);
    if (method == CountingMethod::VerifyOnly)
        throw CountingInfeasible("point counting beyond the configured cap; use verify mode");

    Int hi = (Int(1) << k) - 1;
    Int lo = Int(1) << (k - 1);
    // In the exhaustive regime the smallest field keeps counting cheap, so
    // the search ascends from 2^(k-1); above it the search descends from
    // 2^k - 1 to take the largest field of the bit length.
    bool ascending = method == CountingMethod::Exhaustive;
    for (Int p = ascending ? lo + 1 : hi; ascending ? p <= hi : p >= lo;
         p += ascending ? 2 : -2) {
        if (!is_prime(p))
            continue;
        Int n;
        if (method == CountingMethod::Exhaustive) {
            n = count_points_exhaustive(p);
        } else {
            auto counted = count_points_bsgs(p, cfg.bsgs_point_retries);
            if (!counted)
                continue;  // ambiguity implies a composite order
            n = *counted;
        }
        if (n == p || !is_prime(n))
            continue;

        CurvePoint G = canonical_generator(p, k);
        ChallengeCard card;
        card.k = k;
        card.p = p;
        card.n = n;
        card.r = embedding_degree(p, n, cfg.factoring_budget);
        card.gx = G.x().value();
        card.gy = G.y().value();
        Rng rng(seed);
        Int d = rng.nonzero_below(n);
        CurvePoint Q = scalar_mul(d, G);
        card.qx = Q.x().value();
        card.qy = Q.y().value();
        card.d = d;
        return card;
    }
    throw std::runtime_error("generate_card: no prime-order curve at this bit length");
}

}  // namespace ecdlp
