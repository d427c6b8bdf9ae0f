#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "banknet/contagion.hpp"
#include "banknet/params.hpp"
#include "banknet/thresholds.hpp"
#include "banknet/validation.hpp"
#include "banknet/verification.hpp"
#include "banknet/version.hpp"

namespace banknet {

using Json = nlohmann::ordered_json;

// 17 significant digits: enough to round-trip any binary64 exactly.
inline std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// ---------------------------------------------------------------------------
// scenario files

struct Scenario {
    ModelParams params;
    std::uint64_t seed = 0;
    std::uint64_t trials = 10000;
};

inline Scenario scenario_from_json(const Json& j)
{
    if (!j.is_object()) throw invalid_params("scenario: top level must be a JSON object");
    static const char* const known[] = {"n", "r", "R_H", "R_L", "L",   "X",
                                        "B0", "B1", "u", "beta", "p",
                                        "seed", "trials"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw invalid_params("scenario: unknown field '" + key + "'");
    }
    auto want_int = [&j](const char* name) {
        if (!j.contains(name)) throw invalid_params(std::string("scenario: missing field '") + name + "'");
        if (!j.at(name).is_number_integer())
            throw invalid_params(std::string("scenario: field '") + name + "' must be an integer");
        return j.at(name).get<long long>();
    };
    auto want_num = [&j](const char* name) {
        if (!j.contains(name)) throw invalid_params(std::string("scenario: missing field '") + name + "'");
        if (!j.at(name).is_number())
            throw invalid_params(std::string("scenario: field '") + name + "' must be a number");
        return j.at(name).get<double>();
    };

    Scenario sc;
    sc.params.n = static_cast<int>(want_int("n"));
    sc.params.r = static_cast<int>(want_int("r"));
    sc.params.R_H = want_num("R_H");
    sc.params.R_L = want_num("R_L");
    sc.params.L = want_num("L");
    sc.params.X = want_num("X");
    sc.params.B0 = want_num("B0");
    sc.params.B1 = want_num("B1");
    sc.params.u = want_num("u");
    sc.params.beta = want_num("beta");
    sc.params.p = want_num("p");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer() || j.at("seed").get<long long>() < 0)
            throw invalid_params("scenario: field 'seed' must be a nonnegative integer");
        sc.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("trials")) {
        if (!j.at("trials").is_number_integer() || j.at("trials").get<long long>() < 1)
            throw invalid_params("scenario: field 'trials' must be a positive integer");
        sc.trials = j.at("trials").get<std::uint64_t>();
    }
    check_structure(sc.params); // structural invariants hold from the moment of load
    return sc;
}

inline Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw io_error("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("cannot read scenario file: " + path);
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_params(std::string("scenario: malformed JSON: ") + e.what());
    }
    return scenario_from_json(j);
}

// ---------------------------------------------------------------------------
// sweep grids

struct PAxis {
    double start = 0, step = 0, stop = 0;
};
struct RAxis {
    int lo = 0, hi = 0;
};
struct SweepSpec {
    std::optional<PAxis> p_axis;
    std::optional<RAxis> r_axis;
};

// Grammar: comma-separated axes, "p=start:step:stop" and "r=lo..hi" (or a
// single "r=k"). Either axis may be omitted; the scenario value then stays
// fixed.
inline SweepSpec parse_sweep(const std::string& spec)
{
    SweepSpec out;
    std::stringstream ss(spec);
    std::string axis;
    bool any = false;
    while (std::getline(ss, axis, ',')) {
        any = true;
        const auto eq = axis.find('=');
        if (eq == std::string::npos)
            throw invalid_params("sweep: expected key=values in '" + axis + "'");
        const std::string key = axis.substr(0, eq);
        const std::string val = axis.substr(eq + 1);
        try {
            if (key == "p") {
                if (out.p_axis) throw invalid_params("sweep: duplicate p axis");
                PAxis ax;
                std::size_t c1 = val.find(':');
                std::size_t c2 = val.find(':', c1 == std::string::npos ? c1 : c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw invalid_params("sweep: p axis needs start:step:stop");
                ax.start = std::stod(val.substr(0, c1));
                ax.step = std::stod(val.substr(c1 + 1, c2 - c1 - 1));
                ax.stop = std::stod(val.substr(c2 + 1));
                if (!(ax.stop >= ax.start))
                    throw invalid_params("sweep: p axis needs stop >= start");
                if (ax.stop > ax.start && !(ax.step > 0.0))
                    throw invalid_params("sweep: p axis needs step > 0");
                out.p_axis = ax;
            } else if (key == "r") {
                if (out.r_axis) throw invalid_params("sweep: duplicate r axis");
                RAxis ax;
                const auto dots = val.find("..");
                if (dots == std::string::npos) {
                    ax.lo = ax.hi = std::stoi(val);
                } else {
                    ax.lo = std::stoi(val.substr(0, dots));
                    ax.hi = std::stoi(val.substr(dots + 2));
                }
                if (ax.hi < ax.lo) throw invalid_params("sweep: r axis needs lo <= hi");
                out.r_axis = ax;
            } else {
                throw invalid_params("sweep: unknown axis '" + key + "'");
            }
        } catch (const std::logic_error& e) {
            // stod/stoi failures land here alongside our own messages
            if (dynamic_cast<const invalid_params*>(&e)) throw;
            throw invalid_params("sweep: cannot parse '" + axis + "'");
        }
    }
    if (!any || (!out.p_axis && !out.r_axis))
        throw invalid_params("sweep: need at least one of p=..., r=...");
    return out;
}

struct SweepRow {
    double p = 0;
    int r = 0;
    std::string regime;
    double p_soc = 0, p_ind = 0, p_star = 0;
    double social_gain = 0, private_deviation_gain = 0;
    std::string restriction_status; // "ok" or failed restriction ids "eq1;eq4"
};

// One row per grid point, r-major then p. Points failing restrictions are
// kept and annotated; points where a formula is undefined keep the row with
// NaN numerics and regime "Degenerate". Structurally impossible points throw.
inline std::vector<SweepRow> run_sweep(const ModelParams& base, const SweepSpec& spec)
{
    std::vector<int> r_values;
    if (spec.r_axis)
        for (int r = spec.r_axis->lo; r <= spec.r_axis->hi; ++r) r_values.push_back(r);
    else
        r_values.push_back(base.r);

    std::vector<double> p_values;
    if (spec.p_axis) {
        const PAxis& ax = *spec.p_axis;
        if (ax.stop == ax.start) {
            p_values.push_back(ax.start);
        } else {
            for (int k = 0;; ++k) {
                const double p = ax.start + k * ax.step;
                if (p > ax.stop + ax.step * 1e-9) break;
                p_values.push_back(p);
            }
        }
    } else {
        p_values.push_back(base.p);
    }

    std::vector<SweepRow> rows;
    rows.reserve(r_values.size() * p_values.size());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int r : r_values) {
        for (double p : p_values) {
            ModelParams mp = base;
            mp.r = r;
            mp.p = p;
            check_structure(mp); // structurally impossible grids are an error

            SweepRow row;
            row.p = p;
            row.r = r;
            const ValidationReport rep = validate_params(mp);
            if (rep.all_pass) {
                row.restriction_status = "ok";
            } else {
                std::string st;
                for (const auto& rc : rep.restrictions)
                    if (!rc.pass) st += (st.empty() ? "" : ";") + ("eq" + std::to_string(rc.id));
                row.restriction_status = st;
            }
            try {
                const ThresholdSet t = compute_thresholds(mp);
                const RegimeReport reg = classify_regime(mp, t);
                const WelfareGains g = welfare_gains(mp, t);
                row.regime = to_string(reg.regime);
                row.p_soc = t.p_soc;
                row.p_ind = t.p_ind;
                row.p_star = t.p_star;
                row.social_gain = g.social_gain;
                row.private_deviation_gain = g.private_deviation_gain;
            } catch (const degenerate_model&) {
                row.regime = "Degenerate";
                row.p_soc = row.p_ind = row.p_star = nan;
                row.social_gain = row.private_deviation_gain = nan;
            } catch (const invalid_params&) {
                // formula domain violated (structure already checked above)
                row.regime = "Degenerate";
                row.p_soc = row.p_ind = row.p_star = nan;
                row.social_gain = row.private_deviation_gain = nan;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// JSON emission

inline Json json_of(const ModelParams& mp)
{
    return Json{{"n", mp.n},   {"r", mp.r},   {"R_H", mp.R_H}, {"R_L", mp.R_L},
                {"L", mp.L},   {"X", mp.X},   {"B0", mp.B0},   {"B1", mp.B1},
                {"u", mp.u},   {"beta", mp.beta}, {"p", mp.p}};
}

inline Json json_of(const ValidationReport& rep)
{
    Json arr = Json::array();
    for (const auto& rc : rep.restrictions) {
        Json parts = Json::array();
        for (const auto& c : rc.parts)
            parts.push_back(Json{{"label", c.label},
                                 {"lhs", c.lhs},
                                 {"rel", c.rel},
                                 {"rhs", c.rhs},
                                 {"pass", c.pass}});
        arr.push_back(Json{{"eq", rc.id}, {"pass", rc.pass}, {"comparisons", parts}});
    }
    return Json{{"restrictions", arr}, {"all_pass", rep.all_pass}};
}

inline Json json_of(const ThresholdSet& t)
{
    return Json{{"D_max", t.D_max},     {"D_safe", t.D_safe},
                {"D_star", t.D_star},   {"D_term", t.D_term},
                {"D_r_aut", t.D_r_aut}, {"D_s_aut", t.D_s_aut},
                {"R_star", t.R_star},   {"s_safe", t.s_safe},
                {"I", t.I},             {"u_lo", t.u_lo},
                {"u_hi", t.u_hi},       {"p_ind", t.p_ind},
                {"p_soc", t.p_soc},     {"p_term", t.p_term},
                {"p_f_aut", t.p_f_aut}, {"p_r_aut", t.p_r_aut},
                {"p_s_aut", t.p_s_aut}, {"p_aut", t.p_aut},
                {"p_star", t.p_star}};
}

inline Json json_of(const RegimeReport& rep)
{
    return Json{{"regime", to_string(rep.regime)},
                {"socially_desirable", rep.socially_desirable},
                {"privately_chosen", rep.privately_chosen},
                {"theorem_applicable", rep.theorem_applicable},
                {"thresholds", json_of(rep.thresholds)},
                {"thresholds_above_one", thresholds_above_one(rep.thresholds)}};
}

inline Json json_of(const MCReport& rep)
{
    Json dist = Json::array();
    for (const auto& [failed, trials] : rep.failure_distribution)
        dist.push_back(Json{{"failed_banks", failed}, {"trials", trials}});
    return Json{{"trials", rep.trials},
                {"seed", rep.seed},
                {"generator", rep.generator},
                {"insured", rep.insured},
                {"intervene", rep.intervene},
                {"bad_state_trials", rep.bad_state_trials},
                {"bad_state_frequency", rep.bad_state_frequency},
                {"shocked_histogram", rep.shocked_histogram},
                {"failure_distribution", dist},
                {"mean_bank_payoff", rep.mean_bank_payoff},
                {"injections", rep.injections}};
}

inline Json json_of(const std::vector<SweepRow>& rows)
{
    Json arr = Json::array();
    for (const auto& row : rows)
        arr.push_back(Json{{"p", row.p},
                           {"r", row.r},
                           {"regime", row.regime},
                           {"p_soc", row.p_soc},
                           {"p_ind", row.p_ind},
                           {"p_star", row.p_star},
                           {"social_gain", row.social_gain},
                           {"private_deviation_gain", row.private_deviation_gain},
                           {"restriction_status", row.restriction_status}});
    return arr;
}

inline Json json_of(const std::vector<CheckResult>& checks)
{
    Json arr = Json::array();
    bool all = true;
    for (const auto& c : checks) {
        all = all && c.pass;
        arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return Json{{"checks", arr}, {"all_pass", all}};
}

// Envelope shared by every report.
inline Json make_report(const std::string& command, std::uint64_t seed)
{
    return Json{{"command", command},
                {"version", kVersion},
                {"generator", RngStream::generator_name()},
                {"seed", seed}};
}

// ---------------------------------------------------------------------------
// CSV emission (one flat table per command; every row carries the metadata)

namespace csv_detail {

inline std::string meta_header() { return "version,generator,seed"; }
inline std::string meta_row(std::uint64_t seed)
{
    return std::string(kVersion) + "," + RngStream::generator_name() + "," +
           std::to_string(seed);
}

} // namespace csv_detail

inline std::string csv_of(const ValidationReport& rep, std::uint64_t seed)
{
    std::string out = "eq,label,lhs,rel,rhs,pass," + csv_detail::meta_header() + "\n";
    for (const auto& rc : rep.restrictions)
        for (const auto& c : rc.parts)
            out += std::to_string(rc.id) + "," + csv_escape(c.label) + "," +
                   fmt17(c.lhs) + "," + c.rel + "," + fmt17(c.rhs) + "," +
                   (c.pass ? "true" : "false") + "," + csv_detail::meta_row(seed) + "\n";
    return out;
}

inline std::string csv_of(const ThresholdSet& t, std::uint64_t seed)
{
    std::string out =
        "D_max,D_safe,D_star,D_term,D_r_aut,D_s_aut,R_star,s_safe,I,u_lo,u_hi,"
        "p_ind,p_soc,p_term,p_f_aut,p_r_aut,p_s_aut,p_aut,p_star," +
        csv_detail::meta_header() + "\n";
    const double vals[] = {t.D_max, t.D_safe, t.D_star, t.D_term, t.D_r_aut,
                           t.D_s_aut, t.R_star, t.s_safe, t.I, t.u_lo, t.u_hi,
                           t.p_ind, t.p_soc, t.p_term, t.p_f_aut, t.p_r_aut,
                           t.p_s_aut, t.p_aut, t.p_star};
    bool first = true;
    for (double v : vals) {
        if (!first) out += ",";
        first = false;
        out += fmt17(v);
    }
    out += "," + csv_detail::meta_row(seed) + "\n";
    return out;
}

inline std::string csv_of(const RegimeReport& rep, std::uint64_t seed)
{
    std::string out =
        "regime,socially_desirable,privately_chosen,theorem_applicable,p_soc,"
        "p_ind,p_star," + csv_detail::meta_header() + "\n";
    out += std::string(to_string(rep.regime)) + "," +
           (rep.socially_desirable ? "true" : "false") + "," +
           (rep.privately_chosen ? "true" : "false") + "," +
           (rep.theorem_applicable ? "true" : "false") + "," +
           fmt17(rep.thresholds.p_soc) + "," + fmt17(rep.thresholds.p_ind) + "," +
           fmt17(rep.thresholds.p_star) + "," + csv_detail::meta_row(seed) + "\n";
    return out;
}

inline std::string csv_of(const MCReport& rep)
{
    std::string out =
        "trials,insured,intervene,bad_state_trials,bad_state_frequency,"
        "mean_bank_payoff,injections";
    for (std::size_t i = 0; i < rep.shocked_histogram.size(); ++i)
        out += ",hist_" + std::to_string(i);
    for (const auto& [failed, trials] : rep.failure_distribution) {
        (void)trials;
        out += ",failures_" + std::to_string(failed);
    }
    out += "," + csv_detail::meta_header() + "\n";
    out += std::to_string(rep.trials) + "," + (rep.insured ? "true" : "false") +
           "," + (rep.intervene ? "true" : "false") + "," +
           std::to_string(rep.bad_state_trials) + "," +
           fmt17(rep.bad_state_frequency) + "," + fmt17(rep.mean_bank_payoff) +
           "," + std::to_string(rep.injections);
    for (std::uint64_t h : rep.shocked_histogram) out += "," + std::to_string(h);
    for (const auto& [failed, trials] : rep.failure_distribution) {
        (void)failed;
        out += "," + std::to_string(trials);
    }
    out += "," + csv_detail::meta_row(rep.seed) + "\n";
    return out;
}

inline std::string csv_of(const std::vector<SweepRow>& rows, std::uint64_t seed)
{
    std::string out =
        "p,r,regime,p_soc,p_ind,p_star,social_gain,private_deviation_gain,"
        "restriction_status," + csv_detail::meta_header() + "\n";
    for (const auto& row : rows)
        out += fmt17(row.p) + "," + std::to_string(row.r) + "," + row.regime +
               "," + fmt17(row.p_soc) + "," + fmt17(row.p_ind) + "," +
               fmt17(row.p_star) + "," + fmt17(row.social_gain) + "," +
               fmt17(row.private_deviation_gain) + "," +
               csv_escape(row.restriction_status) + "," +
               csv_detail::meta_row(seed) + "\n";
    return out;
}

inline std::string csv_of(const std::vector<CheckResult>& checks, std::uint64_t seed)
{
    std::string out = "name,pass,detail," + csv_detail::meta_header() + "\n";
    for (const auto& c : checks)
        out += csv_escape(c.name) + "," + (c.pass ? "true" : "false") + "," +
               csv_escape(c.detail) + "," + csv_detail::meta_row(seed) + "\n";
    return out;
}

// ---------------------------------------------------------------------------

inline void write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw io_error("cannot open output file: " + path);
    out << text;
    if (!out) throw io_error("cannot write output file: " + path);
}

} // namespace banknet
