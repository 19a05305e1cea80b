#include "ecdlp/card.hpp"
#include "ecdlp/cost.hpp"
#include "ecdlp/curve.hpp"
#include "ecdlp/datasets.hpp"
#include "ecdlp/ladder.hpp"
#include "ecdlp/rho.hpp"
#include "ecdlp/shor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <tuple>

namespace {

using namespace ecdlp;
using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 0x1ADDE12ULL;

// Exit codes: 0 success, 1 semantic failure, 2 usage or infeasible,
// 3 budget exhausted.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_generate(unsigned k, std::uint64_t seed, const std::string& out)
{
    ChallengeCard card;
    try {
        card = generate_card(k, seed);
    } catch (const CountingInfeasible& e) {
        std::cerr << "generate: " << e.what() << "; use `verify` on a published card instead\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "generate: " << e.what() << '\n';
        return kUsage;
    }
    std::string text = card_to_json(card);
    if (out.empty())
        std::cout << text;
    else
        write_text(out, text);
    return kOk;
}

int report_card(const ChallengeCard& card, const std::string& label)
{
    VerificationReport rep = verify_card(card);
    std::cout << label << ":\n";
    for (const auto& c : rep.checks) {
        std::cout << "  " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.detail.empty())
            std::cout << " (" << c.detail << ")";
        std::cout << '\n';
    }
    return rep.all_pass() ? kOk : kFail;
}

int cmd_verify(const std::string& path, bool all_appendix)
{
    if (all_appendix) {
        std::vector<ChallengeCard> cards;
        try {
            cards = load_appendix_cards();
        } catch (const std::exception& e) {
            std::cerr << "verify: " << e.what() << '\n';
            return kUsage;
        }
        int rc = kOk;
        unsigned passed = 0;
        for (const auto& card : cards) {
            if (report_card(card, std::to_string(card.k) + "-bit card") == kOk)
                ++passed;
            else
                rc = kFail;
        }
        std::cout << passed << "/" << cards.size() << " cards pass\n";
        return rc;
    }
    ChallengeCard card;
    try {
        card = load_card(path);
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return kUsage;
    }
    return report_card(card, path);
}

Int brute_force(const ChallengeCard& card)
{
    CurvePoint G = card.generator();
    CurvePoint Q = card.public_key();
    CurvePoint X = G;
    for (Int d = 1; d < card.n; ++d) {
        if (X == Q)
            return d;
        X = point_add(X, G);
    }
    throw std::runtime_error("brute force: no scalar maps G to Q");
}

struct SolveFlags {
    std::string method = "rho";
    std::uint64_t seed = kDefaultSeed;
    unsigned walkers = 1;
    unsigned partitions = 32;
    int dp_bits = -1;
    bool no_negation = false;
    bool floyd = false;
    unsigned budget_multiplier = 64;
    std::string lo_hex;
    std::uint64_t width = 0;
    std::string out;
};

int cmd_solve(const std::string& path, const SolveFlags& f)
{
    ChallengeCard card;
    try {
        card = load_card(path);
    } catch (const std::exception& e) {
        std::cerr << "solve: " << e.what() << '\n';
        return kUsage;
    }

    RhoStats stats;
    auto t0 = std::chrono::steady_clock::now();
    if (f.method == "brute") {
        if (card.k > 24) {
            std::cerr << "solve: brute force refused above 24 bits\n";
            return kUsage;
        }
        stats.d = brute_force(card);
        stats.ops = (stats.d - 1).convert_to<std::uint64_t>();
    } else if (f.method == "kangaroo") {
        if (f.lo_hex.empty() || f.width == 0) {
            std::cerr << "solve: kangaroo needs --lo and --width\n";
            return kUsage;
        }
        KangarooResult res = solve_kangaroo(card, from_hex(f.lo_hex), Int(f.width), f.seed);
        stats.d = res.d;
        stats.ops = res.ops;
        stats.dps = res.traps;
    } else if (f.method == "rho") {
        RhoConfig cfg;
        cfg.seed = f.seed;
        cfg.max_walkers = f.walkers;
        cfg.partitions = f.partitions;
        cfg.dp_bits = f.dp_bits;
        cfg.use_negation = !f.no_negation;
        cfg.use_floyd = f.floyd;
        cfg.budget_multiplier = f.budget_multiplier;
        stats = solve(card, cfg);
    } else {
        std::cerr << "solve: unknown method " << f.method << '\n';
        return kUsage;
    }
    stats.wall_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              t0)
            .count());

    if (scalar_mul(stats.d, card.generator()) != card.public_key()) {
        std::cerr << "solve: result failed the final [d]G = Q check\n";
        return kFail;
    }
    std::string text = stats_to_json(stats);
    std::cout << "d = " << to_hex(stats.d) << '\n' << text;
    if (!f.out.empty())
        write_text(f.out, text);
    return kOk;
}

struct ShorFlags {
    std::string card_path;
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    std::uint64_t samples = 100;
    std::uint64_t seed = kDefaultSeed;
    bool check = false;
    std::string out;
};

int cmd_shor_sample(const ShorFlags& f)
{
    if (f.samples == 0) {
        std::cerr << "shor-sample: --samples must be positive\n";
        return kUsage;
    }
    std::optional<ChallengeCard> card;
    Int n, d;
    if (!f.card_path.empty()) {
        try {
            card = load_card(f.card_path);
        } catch (const std::exception& e) {
            std::cerr << "shor-sample: " << e.what() << '\n';
            return kUsage;
        }
        if (!card->d) {
            std::cerr << "shor-sample: card has no recorded secret\n";
            return kUsage;
        }
        n = card->n;
        d = *card->d;
    } else if (f.n > 0 && f.d > 0) {
        n = Int(f.n);
        d = Int(f.d);
    } else {
        std::cerr << "shor-sample: pass a card path or --n and --d\n";
        return kUsage;
    }

    ShorInstance inst(n, d);
    auto batch = sample_many(inst, f.samples, f.seed);

    std::ostringstream csv;
    csv << "a,b\n";
    for (const auto& s : batch)
        csv << s.a << ',' << s.b << '\n';
    if (!f.out.empty())
        write_text(f.out, csv.str());
    else
        std::cout << csv.str();

    if (f.check) {
        if (n > 64) {
            std::cerr << "shor-sample: --check requires n <= 64\n";
            return kUsage;
        }
        auto prob = dense_simulate(inst);
        std::size_t nn = n.convert_to<std::size_t>();
        std::size_t dd = d.convert_to<std::size_t>();
        double worst = 0.0;
        for (std::size_t a = 0; a < nn; ++a)
            for (std::size_t b = 0; b < nn; ++b) {
                double expect = (b == a * dd % nn) ? 1.0 / nn : 0.0;
                worst = std::max(worst, std::abs(prob[a][b] - expect));
            }
        std::cout << "dense check max deviation: " << worst << '\n';
        if (worst > 1e-12)
            return kFail;
    }

    json summary;
    summary["n"] = n.convert_to<std::uint64_t>();
    std::uint64_t used = 0;
    Int recovered = -1;
    for (const auto& s : batch) {
        ++used;
        if (mod_reduce(s.a, n) == 0)
            continue;
        Int cand = mod_reduce(s.b * mod_inverse(s.a, n), n);
        bool ok = card ? scalar_mul(cand, card->generator()) == card->public_key() : cand == d;
        if (ok) {
            recovered = cand;
            break;
        }
    }
    if (recovered < 0) {
        std::cerr << "shor-sample: recovery failed (all samples degenerate)\n";
        return kFail;
    }
    summary["recovered_d"] = to_hex(recovered);
    summary["samples_used"] = used;
    std::cout << summary.dump(2) << '\n';
    return kOk;
}

struct EstimateFlags {
    std::string code = "surface";
    unsigned bits = 256;
    CodeParams params;
    std::string schedule = "low-depth";
    std::string regime = "aggressive";
    bool from_dataset = false;
    std::string emit;
};

std::string logical_table_id(const std::string& schedule)
{
    if (schedule == "low-width")
        return "ms_logical_low_width";
    if (schedule == "low-t")
        return "ms_logical_low_t";
    if (schedule == "low-depth")
        return "ms_logical_low_depth";
    throw std::invalid_argument("unknown schedule: " + schedule);
}

int cmd_estimate(const EstimateFlags& f)
{
    if (f.params.p <= 0 || f.params.p >= f.params.p_th) {
        std::cerr << "estimate: need 0 < p < pth\n";
        return kUsage;
    }
    DatasetRegistry reg;

    if (f.code == "classical") {
        std::vector<unsigned> bits;
        for (const auto& row : reg.table("fig2_classical").rows)
            bits.push_back(static_cast<unsigned>(std::stoul(row.at(0))));
        std::string csv = emit_classical_curve(bits);
        if (!f.emit.empty())
            write_text(f.emit, csv);
        else
            std::cout << csv;
        return kOk;
    }

    if (f.from_dataset) {
        std::string id;
        if (f.code == "repcat") {
            id = "repcat";
        } else {
            // Surface table ids use lowdepth/lowt/lowwidth, no hyphen.
            std::string sched = f.schedule;
            sched.erase(std::remove(sched.begin(), sched.end(), '-'), sched.end());
            id = "surface_" + sched + "_" + f.regime;
        }
        const DatasetTable& t = reg.table(id);
        json out;
        out["table"] = id;
        out["b"] = f.bits;
        for (std::size_t i = 1; i < t.columns.size(); ++i)
            out[t.columns[i]] = t.cell(f.bits, t.columns[i]);
        std::cout << out.dump(2) << '\n';
        return kOk;
    }

    if (f.code == "repcat") {
        std::cerr << "estimate: repetition-cat figures are dataset-backed; pass --from-dataset\n";
        return kUsage;
    }
    if (f.code != "surface") {
        std::cerr << "estimate: unknown code " << f.code << '\n';
        return kUsage;
    }

    const DatasetTable& logical = reg.table(logical_table_id(f.schedule));
    auto estimate_row = [&](unsigned b) {
        double n_log = logical.value(b, "width");
        double t_count = logical.value(b, "t_count");
        double t_depth = logical.value(b, "t_depth");
        int dist = min_distance(t_count, f.params);
        double n_phys =
            physical_footprint(n_log, f.params.factories, dist, dist, f.params);
        RuntimeResult rt = runtime(t_depth, t_count, f.params.factories, dist, f.params);
        return std::tuple<int, double, RuntimeResult>(dist, n_phys, rt);
    };

    if (!f.emit.empty()) {
        std::vector<EstimatePoint> pts;
        for (const auto& row : logical.rows) {
            unsigned b = static_cast<unsigned>(std::stoul(row.at(0)));
            auto [dist, n_phys, rt] = estimate_row(b);
            pts.push_back({b, n_phys, rt.seconds});
        }
        write_text(f.emit, emit_estimate_curve(pts));
        return kOk;
    }

    auto [dist, n_phys, rt] = estimate_row(f.bits);
    json out;
    out["b"] = f.bits;
    out["schedule"] = f.schedule;
    out["d"] = dist;
    out["N_phys"] = n_phys;
    out["t_seconds"] = rt.seconds;
    out["limiting"] = rt.limit == LimitingTerm::Depth ? "depth" : "supply";
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_emit_datasets(const std::string& out_dir, bool check)
{
    DatasetRegistry reg;
    int rc = kOk;
    for (const std::string& id : reg.ids()) {
        const DatasetTable& t = reg.table(id);
        std::string text = t.serialize();
        if (!out_dir.empty())
            write_text(out_dir + "/" + t.file, text);
        if (check) {
            std::ifstream in(reg.directory() + "/" + t.file, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            bool same = buf.str() == text;
            std::cout << id << ": " << (same ? "byte-identical" : "MISMATCH") << '\n';
            if (!same)
                rc = kFail;
        } else if (out_dir.empty()) {
            std::cout << id << " -> " << t.file << " (" << t.rows.size() << " rows)\n";
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Deterministic ECDLP challenge ladder: generate, verify, solve, and cost"};
    app.require_subcommand(1);

    unsigned gen_k = 6;
    std::uint64_t gen_seed = kDefaultSeed;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "Construct the challenge card for a bit length");
    gen->add_option("--k", gen_k, "Bit length (6..256; counting-feasible sizes only)")
        ->required();
    gen->add_option("--seed", gen_seed, "RNG seed for the secret scalar");
    gen->add_option("--out", gen_out, "Output card path (default stdout)");

    std::string ver_path;
    bool ver_all = false;
    auto* ver = app.add_subcommand("verify", "Check every structural invariant of a card");
    ver->add_option("path", ver_path, "Card JSON path");
    ver->add_flag("--all-appendix", ver_all, "Verify all bundled published cards");

    SolveFlags sf;
    std::string solve_path;
    auto* sol = app.add_subcommand("solve", "Recover the secret scalar of a card");
    sol->add_option("path", solve_path, "Card JSON path")->required();
    sol->add_option("--method", sf.method, "rho | kangaroo | brute");
    sol->add_option("--seed", sf.seed, "RNG seed");
    sol->add_option("--walkers", sf.walkers, "Parallel walkers (rho)");
    sol->add_option("--partitions", sf.partitions, "Walk partitions (rho)");
    sol->add_option("--dp-bits", sf.dp_bits, "Distinguished-point bits (rho; -1 auto)");
    sol->add_flag("--no-negation", sf.no_negation, "Disable the negation map (rho)");
    sol->add_flag("--floyd", sf.floyd, "Memoryless cycle-finding mode (rho)");
    sol->add_option("--budget-multiplier", sf.budget_multiplier,
                    "Step budget as a multiple of sqrt(n)");
    sol->add_option("--lo", sf.lo_hex, "Interval start, hex (kangaroo)");
    sol->add_option("--width", sf.width, "Interval width (kangaroo)");
    sol->add_option("--out", sf.out, "Stats JSON output path");

    ShorFlags hf;
    auto* sho = app.add_subcommand("shor-sample", "Sample the ideal period-finding output law");
    sho->add_option("card", hf.card_path, "Card JSON path (uses its recorded secret)");
    sho->add_option("--n", hf.n, "Group order (alternative to a card)");
    sho->add_option("--d", hf.d, "Secret scalar (alternative to a card)");
    sho->add_option("--samples", hf.samples, "Number of samples");
    sho->add_option("--seed", hf.seed, "RNG seed");
    sho->add_flag("--check", hf.check, "Cross-check against the dense simulator (n <= 64)");
    sho->add_option("--out", hf.out, "CSV output path (default stdout)");

    EstimateFlags ef;
    auto* est = app.add_subcommand("estimate", "Evaluate cost models or query bundled tables");
    est->add_option("--code", ef.code, "surface | repcat | classical");
    est->add_option("--bits", ef.bits, "Bit strength b");
    est->add_option("--p", ef.params.p, "Physical error rate");
    est->add_option("--pth", ef.params.p_th, "Threshold error rate");
    est->add_option("--tau", ef.params.tau, "Cycle time, seconds");
    est->add_option("--factories", ef.params.factories, "Factory count F");
    est->add_option("--rfac", ef.params.r_fac, "Factory output rate per cycle");
    est->add_option("--eps", ef.params.eps_target, "Run failure budget");
    est->add_option("--schedule", ef.schedule, "low-width | low-t | low-depth");
    est->add_option("--regime", ef.regime, "aggressive | conservative (dataset queries)");
    est->add_flag("--from-dataset", ef.from_dataset, "Return published values verbatim");
    est->add_option("--emit", ef.emit, "Emit a CSV curve to this path");

    std::string emit_out;
    bool emit_check = false;
    auto* emd = app.add_subcommand("emit-datasets", "Re-serialize the bundled tables");
    emd->add_option("--out", emit_out, "Directory to write the CSV files into");
    emd->add_flag("--check", emit_check, "Compare against the bundled files byte for byte");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen)
            return cmd_generate(gen_k, gen_seed, gen_out);
        if (*ver) {
            if (!ver_all && ver_path.empty()) {
                std::cerr << "verify: pass a card path or --all-appendix\n";
                return kUsage;
            }
            return cmd_verify(ver_path, ver_all);
        }
        if (*sol)
            return cmd_solve(solve_path, sf);
        if (*sho)
            return cmd_shor_sample(hf);
        if (*est)
            return cmd_estimate(ef);
        if (*emd)
            return cmd_emit_datasets(emit_out, emit_check);
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kBudget;
    } catch (const DatasetError& e) {
        std::cerr << "dataset error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
