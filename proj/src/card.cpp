#include "ecdlp/card.hpp"

#include "ecdlp/datasets.hpp"
#include "ecdlp/ladder.hpp"
#include "ecdlp/numeric.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ecdlp {

namespace {

using nlohmann::json;

json to_json_obj(const ChallengeCard& card)
{
    json j;
    j["k"] = card.k;
    j["p"] = to_hex(card.p);
    j["n"] = to_hex(card.n);
    j["r"] = card.r ? json(to_hex(*card.r)) : json(nullptr);
    j["Gx"] = to_hex(card.gx);
    j["Gy"] = to_hex(card.gy);
    j["Qx"] = to_hex(card.qx);
    j["Qy"] = to_hex(card.qy);
    j["d"] = card.d ? json(to_hex(*card.d)) : json(nullptr);
    return j;
}

ChallengeCard from_json_obj(const json& j)
{
    ChallengeCard card;
    card.k = j.at("k").get<unsigned>();
    card.p = from_hex(j.at("p").get<std::string>());
    card.n = from_hex(j.at("n").get<std::string>());
    if (!j.at("r").is_null())
        card.r = from_hex(j.at("r").get<std::string>());
    card.gx = from_hex(j.at("Gx").get<std::string>());
    card.gy = from_hex(j.at("Gy").get<std::string>());
    card.qx = from_hex(j.at("Qx").get<std::string>());
    card.qy = from_hex(j.at("Qy").get<std::string>());
    if (!j.at("d").is_null())
        card.d = from_hex(j.at("d").get<std::string>());
    return card;
}

}  // namespace

std::string card_to_json(const ChallengeCard& card)
{
    return to_json_obj(card).dump(2) + "\n";
}

ChallengeCard card_from_json(const std::string& text)
{
    return from_json_obj(json::parse(text));
}

ChallengeCard load_card(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open card file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return card_from_json(buf.str());
}

void save_card(const ChallengeCard& card, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write card file: " + path);
    out << card_to_json(card);
}

std::vector<ChallengeCard> load_appendix_cards(const std::string& dir)
{
    std::string base = dir.empty() ? data_directory() : dir;
    std::ifstream in(base + "/appendix_cards.json");
    if (!in)
        throw std::runtime_error("cannot open " + base + "/appendix_cards.json");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::vector<ChallengeCard> cards;
    for (const auto& j : json::parse(buf.str()))
        cards.push_back(from_json_obj(j));
    return cards;
}

VerificationReport verify_card(const ChallengeCard& card)
{
    VerificationReport rep;
    auto add = [&rep](std::string name, bool pass, std::string detail = {}) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    bool p_prime = card.p >= 2 && is_prime(card.p);
    add("p_prime", p_prime);
    bool n_prime = card.n >= 2 && is_prime(card.n);
    add("n_prime", n_prime);

    GroupContext g(card.p, card.n);
    add("hasse_interval", g.order_in_hasse_interval());

    // The Hasse interval around a k-bit prime permits orders of k-1 to k+1
    // bits; several published cards sit at those edges.
    std::size_t nb = ceil_log2(card.n);
    add("order_bitlength", nb + 1 >= card.k && nb <= card.k + 1,
        "ceil(log2 n) = " + std::to_string(nb) + ", k = " + std::to_string(card.k));
    add("p_bitlength", bit_length(card.p) == card.k);

    CurvePoint G = card.generator();
    CurvePoint Q = card.public_key();
    bool g_on = is_on_curve(G);
    bool q_on = is_on_curve(Q);
    add("G_on_curve", g_on);
    add("Q_on_curve", q_on);

    if (g_on && G != CurvePoint::infinity(card.p))
        add("nG_infinity", scalar_mul(card.n, G).is_infinity());
    else
        add("nG_infinity", false, "generator invalid");
    if (q_on)
        add("nQ_infinity", scalar_mul(card.n, Q).is_infinity());
    else
        add("nQ_infinity", false, "public key invalid");

    try {
        CurvePoint C = canonical_generator(card.p, card.k);
        bool x_ok = C.x().value() == card.gx;
        bool y_ok = card.gy == C.y().value() || card.gy == mod_reduce(card.p - C.y().value(), card.p);
        add("canonical_generator", x_ok && y_ok,
            x_ok ? (y_ok ? "" : "y is not a square root of x^3+7") : "abscissa mismatch");
    } catch (const std::exception& e) {
        add("canonical_generator", false, e.what());
    }

    if (card.r) {
        bool ok = n_prime && mod_pow(card.p, *card.r, card.n) == 1 && (card.n - 1) % *card.r == 0;
        std::string detail;
        if (ok) {
            // Minimality: p^(r/q) != 1 for every prime q | r, when r factors
            // within budget.
            if (auto fac = factor(*card.r, 1u << 16)) {
                for (const auto& [q, _] : *fac)
                    if (mod_pow(card.p, *card.r / q, card.n) == 1)
                        ok = false;
            } else {
                detail = "minimality unverified (factoring budget)";
            }
        }
        add("embedding_degree", ok, detail);
    } else {
        add("embedding_degree", true, "unverified (not recorded)");
    }

    if (card.d) {
        add("secret_matches", *card.d >= 1 && *card.d < card.n && scalar_mul(*card.d, G) == Q);
    } else {
        add("secret_matches", true, "no secret recorded");
    }

    return rep;
}

}  // namespace ecdlp
