#include "tiltwall/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

using namespace tiltwall;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCompleteness = 4;

ChernCharacter parse_character(const std::string& text) {
    std::vector<Rat> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
    if (parts.size() != 3 && parts.size() != 4)
        throw ParseError("character needs 3 or 4 comma-separated rationals, got " + text);
    return {parts[0], parts[1], parts[2],
            parts.size() == 4 ? std::optional<Rat>(parts[3]) : std::nullopt};
}

json char_json(const ChernCharacter& v) {
    json a = json::array();
    a.push_back(to_text(v.ch0));
    a.push_back(to_text(v.ch1));
    a.push_back(to_text(v.ch2));
    if (v.ch3) a.push_back(to_text(*v.ch3));
    return a;
}

json slope_json(const SlopeValue& s) {
    if (!s.is_infinite) return to_text(s.value);
    return s.negative_sign ? "-inf" : "inf";
}

void emit(const json& j, const std::string& summary) {
    std::cout << j.dump(2) << "\n";
    std::cerr << summary << "\n";
}

/// Honors the documented parallelism cap; enumeration is currently sequential,
/// so any positive value is accepted and a cap of zero/garbage is a usage error.
void check_threads_env() {
    const char* env = std::getenv("TILTWALL_THREADS");
    if (!env) return;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw ParseError("TILTWALL_THREADS must be a positive integer");
}

struct CharArgs {
    int d = 0;
    std::string ch;
    std::string twist_beta;
    bool want_delta = false;
    bool want_slope = false;
    bool assert_lattice = false;
};

int cmd_char(const CharArgs& a) {
    const auto ctx = FanoContext::of_degree(a.d);
    const ChernCharacter raw = parse_character(a.ch);
    const ChernCharacter v =
        make_character(raw.ch0, raw.ch1, raw.ch2, raw.ch3, a.assert_lattice, ctx);
    json out;
    out["schema"] = 1;
    out["command"] = "char";
    out["degree"] = a.d;
    out["ch"] = char_json(v);
    out["lattice"] = satisfies_lattice(v, ctx);
    if (!a.twist_beta.empty()) {
        const Rat beta = parse_rational(a.twist_beta);
        out["twist_beta"] = to_text(beta);
        out["twisted"] = char_json(twist(v, beta, ctx));
    }
    if (a.want_delta) out["delta"] = to_text(discriminant(v, ctx));
    if (a.want_slope) out["slope"] = slope_json(slope_mumford(v, ctx));
    emit(out, "char: degree " + std::to_string(a.d) + ", lattice " +
                  (out["lattice"].get<bool>() ? "ok" : "violated"));
    return kExitOk;
}

struct PairArgs {
    int d = 0;
    std::string left, right;
};

int cmd_pair(const PairArgs& a) {
    const auto ctx = FanoContext::of_degree(a.d);
    const ChernCharacter l = parse_character(a.left);
    const ChernCharacter r = parse_character(a.right);
    const Rat chi = euler_pairing(l, r, ctx);
    json out;
    out["schema"] = 1;
    out["command"] = "pair";
    out["degree"] = a.d;
    out["left"] = char_json(l);
    out["right"] = char_json(r);
    out["chi"] = to_text(chi);
    emit(out, "pair: chi = " + to_text(chi));
    return kExitOk;
}

struct WallsArgs {
    int d = 0;
    std::string ch;
    std::string beta;
    std::string alpha_sq_min = "0";
    std::string alpha_sq_max = "1/4";
    long rank_cap = -1;
};

int cmd_walls(const WallsArgs& a) {
    const auto ctx = FanoContext::of_degree(a.d);
    const ChernCharacter target = parse_character(a.ch);
    const Rat beta = parse_rational(a.beta);
    const Rat lo = parse_rational(a.alpha_sq_min);
    const Rat hi = parse_rational(a.alpha_sq_max);
    const std::optional<long> cap =
        a.rank_cap >= 0 ? std::optional<long>(a.rank_cap) : std::nullopt;
    const auto e = enumerate_walls_on_line(target, ctx, beta, lo, hi, cap);
    json out;
    out["schema"] = 1;
    out["command"] = "walls";
    out["degree"] = a.d;
    out["target"] = char_json(target);
    out["beta"] = to_text(beta);
    out["alpha_sq_range"] = json::array({to_text(lo), to_text(hi)});
    json cands = json::array();
    for (const auto& c : e.candidates) {
        json entry;
        entry["sub"] = char_json(c.sub);
        entry["quot"] = char_json(c.quot);
        entry["a"] = c.a.str();
        entry["b"] = c.b.str();
        entry["c"] = c.c ? json(c.c->str()) : json(nullptr);
        if (c.alpha_sq) entry["alpha_sq"] = to_text(*c.alpha_sq);
        if (c.alpha_window)
            entry["alpha_window"] =
                json::array({to_text(c.alpha_window->lo), to_text(c.alpha_window->hi)});
        json tags = json::array();
        for (const Tag t : c.tags) tags.push_back(tag_name(t));
        entry["classification"] = tags;
        cands.push_back(entry);
    }
    out["candidates"] = cands;
    json cert;
    cert["complete"] = e.certificate.complete;
    cert["rank_bound"] = e.certificate.rank_bound_used.str();
    switch (e.certificate.derivation) {
    case CompletenessCertificate::Derivation::DeltaInterval:
        cert["derivation"] = "delta-interval";
        break;
    case CompletenessCertificate::Derivation::SlopeMonotone:
        cert["derivation"] = "slope-monotone";
        break;
    case CompletenessCertificate::Derivation::UserCap:
        cert["derivation"] = "user-cap";
        break;
    }
    out["certificate"] = cert;
    emit(out, "walls: " + std::to_string(e.candidates.size()) + " candidates, " +
                  std::to_string(e.survivors().size()) + " survivors, " +
                  (e.certificate.complete ? "complete" : "rank-capped"));
    return kExitOk;
}

struct VerifyArgs {
    std::string scenario;
    int d = 0;
};

const std::map<std::string, std::pair<int, int>> kScenarioDegrees = {
    {"prop4.1", {1, 5}}, {"lemma5.2", {3, 5}}, {"prop5.3", {3, 5}},  {"prop6.5", {2, 5}},
    {"numclass", {1, 5}}, {"diophantine", {0, 0}}, {"pairings", {0, 0}},
};

ScenarioReport run_scenario(const std::string& id, int d) {
    if (id == "prop4.1") return verify_prop_4_1(d);
    if (id == "lemma5.2") return verify_lemma_5_2(d);
    if (id == "prop5.3") return verify_prop_5_3(d);
    if (id == "prop6.5") return verify_prop_6_5(d);
    if (id == "numclass") return verify_numerical_class(d);
    if (id == "diophantine") return verify_diophantine();
    return verify_pairings();
}

int cmd_verify(const VerifyArgs& a) {
    std::vector<ScenarioReport> reports;
    if (a.scenario.empty()) {
        if (a.d != 0) throw ParseError("--d requires --scenario");
        reports = verify_all();
    } else {
        const auto it = kScenarioDegrees.find(a.scenario);
        if (it == kScenarioDegrees.end()) throw ParseError("unknown scenario " + a.scenario);
        const auto [lo, hi] = it->second;
        if (a.d != 0) {
            if (a.d < lo || a.d > hi)
                throw ParseError("scenario " + a.scenario + ": unsupported degree " +
                                 std::to_string(a.d));
            reports.push_back(run_scenario(a.scenario, a.d));
        } else if (lo == 0) {
            reports.push_back(run_scenario(a.scenario, 0));
        } else {
            // Default degree sweep mirrors the full run.
            const int first = a.scenario == "numclass" ? 3 : lo;
            for (int d = first; d <= hi; ++d) reports.push_back(run_scenario(a.scenario, d));
        }
    }
    json out;
    out["schema"] = 1;
    out["command"] = "verify";
    json arr = json::array();
    int matches = 0;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        matches += r.match ? 1 : 0;
    }
    out["reports"] = arr;
    out["all_match"] = matches == static_cast<int>(reports.size());
    emit(out, "verify: " + std::to_string(reports.size()) + " reports, " +
                  std::to_string(matches) + " match, " +
                  std::to_string(reports.size() - matches) + " mismatch");
    return out["all_match"].get<bool>() ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-rational tilt-stability wall computations on degree-d threefolds"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);

    CharArgs ca;
    auto* sc_char = app.add_subcommand("char", "Character, twist, discriminant, slope");
    sc_char->add_option("--d", ca.d, "degree, 1..5")->required();
    sc_char->add_option("--ch", ca.ch, "character r,c1,c2[,c3]")->required();
    sc_char->add_option("--twist", ca.twist_beta, "also print the beta-twisted character");
    sc_char->add_flag("--delta", ca.want_delta, "also print the discriminant");
    sc_char->add_flag("--slope", ca.want_slope, "also print the slope");
    sc_char->add_flag("--assert-lattice", ca.assert_lattice, "fail on lattice violation");

    PairArgs pa;
    auto* sc_pair = app.add_subcommand("pair", "Euler pairing of two characters");
    sc_pair->add_option("--d", pa.d, "degree, 1..5")->required();
    sc_pair->add_option("--left", pa.left, "left character r,c1,c2,c3")->required();
    sc_pair->add_option("--right", pa.right, "right character r,c1,c2,c3")->required();

    WallsArgs wa;
    auto* sc_walls = app.add_subcommand("walls", "Certified wall enumeration on a vertical line");
    sc_walls->add_option("--d", wa.d, "degree, 1..5")->required();
    sc_walls->add_option("--ch", wa.ch, "target character r,c1,c2")->required();
    sc_walls->add_option("--beta", wa.beta, "line position")->required();
    sc_walls->add_option("--alpha-sq-min", wa.alpha_sq_min, "range lower bound, open (default 0)");
    sc_walls->add_option("--alpha-sq-max", wa.alpha_sq_max, "range upper bound, closed (default 1/4)");
    sc_walls->add_option("--rank-cap", wa.rank_cap, "override the derived rank bound");

    VerifyArgs va;
    auto* sc_verify = app.add_subcommand("verify", "Scenario reports against checked-in fixtures");
    sc_verify->add_option("--scenario", va.scenario,
                          "prop4.1 | lemma5.2 | prop5.3 | prop6.5 | numclass | diophantine | pairings");
    sc_verify->add_option("--d", va.d, "restrict to one degree");

    try {
        app.parse(argc, argv);
        check_threads_env();
        if (sc_char->parsed()) return cmd_char(ca);
        if (sc_pair->parsed()) return cmd_pair(pa);
        if (sc_walls->parsed()) return cmd_walls(wa);
        return cmd_verify(va);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnboundedSearchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompleteness;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
