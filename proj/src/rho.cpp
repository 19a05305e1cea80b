#include "ecdlp/rho.hpp"

#include "ecdlp/rng.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

namespace ecdlp {

std::vector<UpdateRule> make_rules(const Int& n, unsigned partitions, std::uint64_t seed)
{
    if (partitions < 3)
        throw std::invalid_argument("make_rules: at least 3 partitions required");
    Rng rng(seed, 0xA11u);
    std::vector<UpdateRule> rules;
    rules.reserve(partitions);
    for (unsigned j = 0; j + 1 < partitions; ++j)
        rules.push_back({1, rng.nonzero_below(n), rng.nonzero_below(n)});
    rules.push_back({2, 0, 0});
    return rules;
}

unsigned partition(const CurvePoint& X, unsigned m)
{
    if (X.is_infinity())
        throw std::domain_error("partition: point at infinity");
    unsigned bits = static_cast<unsigned>(ceil_log2(Int(m)));
    Int mask = (Int(1) << bits) - 1;
    return ((X.x().value() & mask) % m).convert_to<unsigned>();
}

std::optional<Int> solve_collision(const Int& ai, const Int& bi, const Int& aj, const Int& bj,
                                   const Int& n)
{
    Int denom = mod_reduce(bj - bi, n);
    if (denom == 0)
        return std::nullopt;
    return mod_reduce(mod_reduce(ai - aj, n) * mod_inverse(denom, n), n);
}

std::string stats_to_json(const RhoStats& s)
{
    nlohmann::json j;
    j["ops"] = s.ops;
    j["dps"] = s.dps;
    j["restarts"] = s.restarts;
    j["wall_ms"] = s.wall_ms;
    j["d"] = to_hex(s.d);
    return j.dump(2) + "\n";
}

std::vector<CurvePoint> rule_hops(const std::vector<UpdateRule>& rules, const CurvePoint& G,
                                  const CurvePoint& Q)
{
    std::vector<CurvePoint> hops;
    hops.reserve(rules.size());
    for (const UpdateRule& r : rules)
        hops.push_back(r.alpha == 2
                           ? CurvePoint::infinity(G.modulus())
                           : point_add(scalar_mul(r.beta, G), scalar_mul(r.gamma, Q)));
    return hops;
}

namespace {

WalkState canonicalized(WalkState st, const Int& n, bool use_negation)
{
    if (use_negation && !st.X.is_infinity()) {
        const Int& p = st.X.modulus();
        if (st.X.y().value() > (p - 1) / 2) {
            st.X = negate(st.X);
            st.a = mod_reduce(-st.a, n);
            st.b = mod_reduce(-st.b, n);
        }
    }
    return st;
}

}  // namespace

WalkState step(const WalkState& st, const std::vector<UpdateRule>& rules,
               const std::vector<CurvePoint>& hops, const CurvePoint& G, const CurvePoint& Q,
               const Int& n, bool use_negation)
{
    (void)G;
    (void)Q;
    unsigned j = partition(st.X, static_cast<unsigned>(rules.size()));
    WalkState out = st;
    if (rules[j].alpha == 2) {
        out.X = point_add(st.X, st.X);
        out.a = mod_reduce(2 * st.a, n);
        out.b = mod_reduce(2 * st.b, n);
    } else {
        out.X = point_add(st.X, hops[j]);
        out.a = mod_reduce(st.a + rules[j].beta, n);
        out.b = mod_reduce(st.b + rules[j].gamma, n);
    }
    ++out.steps;
    return canonicalized(std::move(out), n, use_negation);
}

namespace {

struct DpEntry {
    Int a, b;
    unsigned walker = 0;
};

// Shared collision table. Key: canonical x plus y parity.
struct DpTable {
    std::map<std::pair<Int, int>, DpEntry> entries;
    std::mutex mu;
};

// One walk with negation canonicalization and fruitless-cycle escape.
struct Walker {
    const Int& p;
    const Int& n;
    const CurvePoint& G;
    const CurvePoint& Q;
    const std::vector<UpdateRule>& rules;
    const std::vector<CurvePoint>& hops;  // [beta_j]G + [gamma_j]Q per additive rule
    bool use_negation;

    WalkState st;
    std::vector<CurvePoint> history;  // last 4 points, ring
    std::size_t hist_pos = 0;

    Walker(const Int& p_, const Int& n_, const CurvePoint& G_, const CurvePoint& Q_,
           const std::vector<UpdateRule>& rules_, const std::vector<CurvePoint>& hops_,
           bool neg)
        : p(p_), n(n_), G(G_), Q(Q_), rules(rules_), hops(hops_), use_negation(neg),
          st{0, 0, CurvePoint::infinity(p_), 0}
    {
    }

    void restart(Rng& rng)
    {
        do {
            st.a = rng.nonzero_below(n);
            st.b = rng.below(n);
            st.X = point_add(scalar_mul(st.a, G), scalar_mul(st.b, Q));
        } while (st.X.is_infinity());
        st = canonicalized(std::move(st), n, use_negation);
        history.clear();
        hist_pos = 0;
    }

    void apply_double()
    {
        st.X = point_add(st.X, st.X);
        st.a = mod_reduce(2 * st.a, n);
        st.b = mod_reduce(2 * st.b, n);
        ++st.steps;
        st = canonicalized(std::move(st), n, use_negation);
    }

    // One walk step; returns group operations spent (1, or 2 after a
    // fruitless-cycle escape).
    unsigned advance()
    {
        unsigned ops = 1;
        st = step(st, rules, hops, G, Q, n, use_negation);

        // Negation-map fruitless cycles have length 2 or 4; escape by
        // doubling when the new point reappears in the recent window.
        bool cycled = false;
        for (const CurvePoint& h : history)
            if (h == st.X)
                cycled = true;
        if (cycled) {
            apply_double();
            ++ops;
            history.clear();
            hist_pos = 0;
        } else {
            if (history.size() < 4) {
                history.push_back(st.X);
            } else {
                history[hist_pos] = st.X;
                hist_pos = (hist_pos + 1) % 4;
            }
        }
        return ops;
    }
};

}  // namespace

RhoStats solve(const ChallengeCard& card, const RhoConfig& cfg)
{
    const Int& p = card.p;
    const Int& n = card.n;
    CurvePoint G = card.generator();
    CurvePoint Q = card.public_key();

    auto t0 = std::chrono::steady_clock::now();

    int dp_bits = cfg.dp_bits >= 0 ? cfg.dp_bits
                                   : std::max(1, static_cast<int>(card.k) / 4 - 2);
    Int dp_mask = (Int(1) << dp_bits) - 1;

    std::vector<UpdateRule> rules = make_rules(n, cfg.partitions, cfg.seed);
    std::vector<CurvePoint> hops = rule_hops(rules, G, Q);

    const Int budget = Int(cfg.budget_multiplier) * isqrt_ceil(n);

    RhoStats stats;
    std::atomic<std::uint64_t> total_ops{0};
    std::atomic<std::uint64_t> total_dps{0};
    std::atomic<std::uint64_t> total_restarts{0};
    std::atomic<bool> solved{false};
    std::atomic<bool> exhausted{false};
    Int answer;
    std::mutex answer_mu;

    DpTable table;

    auto finish = [&](const Int& d) {
        std::lock_guard<std::mutex> lk(answer_mu);
        if (!solved.load()) {
            answer = d;
            solved.store(true);
        }
    };

    auto run_floyd = [&](unsigned id) {
        Rng rng(cfg.seed, id + 1);
        Walker tortoise(p, n, G, Q, rules, hops, cfg.use_negation);
        Walker hare(p, n, G, Q, rules, hops, cfg.use_negation);
        for (;;) {
            if (solved.load())
                return;
            tortoise.restart(rng);
            hare.st = tortoise.st;
            hare.history.clear();
            hare.hist_pos = 0;
            for (;;) {
                if (solved.load())
                    return;
                std::uint64_t spent = tortoise.advance();
                spent += hare.advance();
                spent += hare.advance();
                if (total_ops.fetch_add(spent) + spent >= budget) {
                    exhausted.store(true);
                    return;
                }
                if (tortoise.st.X == hare.st.X) {
                    auto d = solve_collision(tortoise.st.a, tortoise.st.b, hare.st.a,
                                             hare.st.b, n);
                    if (d && scalar_mul(*d, G) == Q) {
                        finish(*d);
                        return;
                    }
                    total_restarts.fetch_add(1);
                    break;
                }
            }
        }
    };

    // A walk that produces no distinguished point for this long is almost
    // surely stuck in a fruitless cycle longer than the escape window.
    const std::uint64_t stall_limit = std::uint64_t(64) << dp_bits;

    auto run_dp = [&](unsigned id) {
        Rng rng(cfg.seed, id + 1);
        Walker w(p, n, G, Q, rules, hops, cfg.use_negation);
        w.restart(rng);
        std::uint64_t since_dp = 0;
        for (;;) {
            if (solved.load())
                return;
            std::uint64_t spent = w.advance();
            if (total_ops.fetch_add(spent) + spent >= budget) {
                exhausted.store(true);
                return;
            }
            if (w.st.X.is_infinity()) {  // walked onto the identity; worthless
                total_restarts.fetch_add(1);
                w.restart(rng);
                since_dp = 0;
                continue;
            }
            if ((w.st.X.x().value() & dp_mask) != 0) {
                if (++since_dp >= stall_limit) {
                    total_restarts.fetch_add(1);
                    w.restart(rng);
                    since_dp = 0;
                }
                continue;
            }
            since_dp = 0;

            std::pair<Int, int> key{w.st.X.x().value(),
                                    static_cast<int>(w.st.X.y().value() & 1)};
            bool restart_walk = false;
            std::optional<Int> found;
            {
                std::lock_guard<std::mutex> lk(table.mu);
                auto it = table.entries.find(key);
                if (it == table.entries.end()) {
                    table.entries.emplace(key, DpEntry{w.st.a, w.st.b, id});
                    total_dps.fetch_add(1);
                } else if (it->second.a == w.st.a && it->second.b == w.st.b) {
                    restart_walk = true;  // the same trajectory revisited
                } else {
                    found = solve_collision(it->second.a, it->second.b, w.st.a, w.st.b, n);
                    if (!found)
                        restart_walk = true;
                }
            }
            if (found) {
                if (scalar_mul(*found, G) == Q) {
                    finish(*found);
                    return;
                }
                restart_walk = true;
            }
            if (restart_walk) {
                total_restarts.fetch_add(1);
                w.restart(rng);
            }
        }
    };

    auto run = [&](unsigned id) {
        if (cfg.use_floyd)
            run_floyd(id);
        else
            run_dp(id);
    };

    unsigned walkers = std::max(1u, cfg.max_walkers);
    if (walkers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned id = 0; id < walkers; ++id)
            threads.emplace_back(run, id);
        for (auto& t : threads)
            t.join();
    }

    stats.ops = total_ops.load();
    stats.dps = total_dps.load();
    stats.restarts = total_restarts.load();
    stats.wall_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              t0)
            .count());
    if (!solved.load())
        throw BudgetExhausted("rho: step budget exhausted after " + std::to_string(stats.ops) +
                              " operations");
    stats.d = answer;
    return stats;
}

KangarooResult solve_kangaroo(const ChallengeCard& card, const Int& lo, const Int& width,
                              std::uint64_t seed)
{
    if (width < 1)
        throw std::invalid_argument("solve_kangaroo: width must be positive");
    const Int& n = card.n;
    CurvePoint G = card.generator();
    CurvePoint Q = card.public_key();

    KangarooResult res;
    if (width == 1) {
        if (scalar_mul(mod_reduce(lo, n), G) != Q)
            throw BudgetExhausted("kangaroo: d is not the claimed value");
        res.d = mod_reduce(lo, n);
        return res;
    }

    Int root = isqrt_ceil(width);
    // Power-of-two jumps; table size chosen so the mean jump is about
    // sqrt(width) / 2.
    unsigned L = 1;
    while (L < 40 && ((Int(1) << L) - 1) / L < root / 2)
        ++L;
    std::vector<CurvePoint> jump_pts;
    std::vector<Int> jump_len;
    for (unsigned i = 0; i < L; ++i) {
        jump_len.push_back(Int(1) << i);
        jump_pts.push_back(scalar_mul(jump_len.back(), G));
    }

    int dp_bits = std::max(1, static_cast<int>(bit_length(width)) / 2 - 2);
    Int dp_mask = (Int(1) << dp_bits) - 1;

    const std::uint64_t budget = 400 * root.convert_to<std::uint64_t>() + 4096;

    struct Trap {
        bool tame;
        Int scalar;  // tame: position u with point [u]G; wild: v with Q + [v]G
        Int y;
    };
    std::map<Int, Trap> traps;

    Rng rng(seed, 0x6B616E67u);
    for (unsigned attempt = 0; attempt < 3; ++attempt) {
        Int u = lo + width / 2 + (attempt == 0 ? Int(0) : rng.below(width));
        CurvePoint T = scalar_mul(mod_reduce(u, n), G);
        Int v = 0;
        CurvePoint W = Q;

        auto try_collide = [&](bool tame, const Int& scalar, const CurvePoint& P)
            -> std::optional<Int> {
            if (P.is_infinity())
                return std::nullopt;
            if ((P.x().value() & dp_mask) != 0)
                return std::nullopt;
            auto it = traps.find(P.x().value());
            if (it == traps.end()) {
                traps.emplace(P.x().value(), Trap{tame, scalar, P.y().value()});
                ++res.traps;
                return std::nullopt;
            }
            if (it->second.tame == tame)
                return std::nullopt;
            const Int& tu = tame ? scalar : it->second.scalar;
            const Int& wv = tame ? it->second.scalar : scalar;
            bool same_y = it->second.y == P.y().value();
            // Same y: [u]G = Q + [v]G. Opposite y: [u]G = -(Q + [v]G).
            Int d = same_y ? mod_reduce(tu - wv, n) : mod_reduce(-tu - wv, n);
            if (scalar_mul(d, G) == Q)
                return d;
            return std::nullopt;
        };

        std::uint64_t spent = 0;
        while (spent < budget) {
            // Tame step.
            if (!T.is_infinity()) {
                unsigned j = partition(T, L);
                T = point_add(T, jump_pts[j]);
                u += jump_len[j];
                ++spent;
                ++res.ops;
                if (auto d = try_collide(true, u, T)) {
                    res.d = *d;
                    return res;
                }
            } else {
                T = scalar_mul(mod_reduce(u, n), G);  // stepped onto the identity
            }
            // Wild step.
            if (!W.is_infinity()) {
                unsigned j = partition(W, L);
                W = point_add(W, jump_pts[j]);
                v += jump_len[j];
                ++spent;
                ++res.ops;
                if (auto d = try_collide(false, v, W)) {
                    res.d = *d;
                    return res;
                }
            } else {
                W = point_add(Q, scalar_mul(mod_reduce(v, n), G));
            }
        }
    }
    throw BudgetExhausted("kangaroo: traps exhausted; secret outside the stated interval?");
}

}  // namespace ecdlp
