#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "banknet/combinatorics.hpp"
#include "banknet/params.hpp"

namespace banknet {

// Break-even debt face values per unit borrowed, and the break-even gross
// rate R_star. D_max is evaluated at R_star, where it coincides with D_star.
struct DebtLevels {
    double D_max = 0;   // largest rollable face value at rate R_star
    double D_safe = 0;  // insured network
    double D_star = 0;  // uninsured network with full contagion
    double D_term = 0;  // term (two-period) debt
    double D_r_aut = 0; // autarky against counter-party risk only
    double D_s_aut = 0; // full autarky, shocks unhedged
    double R_star = 0;  // break-even gross interest rate
};

namespace detail {

// net continuation value pledgeable to lenders; every break-even level leans on it
inline double pledgeable_value(const ModelParams& mp)
{
    const double a = mp.R_H - mp.B1 + mp.X;
    if (!(a > 0.0))
        throw degenerate_model("R_H - B1 + X must be positive");
    return a;
}

inline void check_positive_denominator(double d, const char* where)
{
    if (!(d > 0.0)) throw degenerate_model(std::string(where) + ": nonpositive denominator");
}

} // namespace detail

inline DebtLevels debt_levels(const ModelParams& mp)
{
    check_structure(mp);
    const double a = detail::pledgeable_value(mp);
    const double pn = mp.p / mp.n;

    DebtLevels d;
    d.D_star = (1.0 - mp.p) * a + mp.p * mp.L;
    const double rdenom = 1.0 - mp.p * (1.0 - mp.L / a);
    detail::check_positive_denominator(rdenom, "R_star");
    d.R_star = 1.0 / rdenom;
    d.D_max = a / d.R_star;
    d.D_safe = (1.0 - pn) * a + pn * mp.L;
    d.D_term = (1.0 - pn) * (mp.X + mp.R_H) - mp.B0 - mp.B1 + pn * mp.B1 + pn * mp.R_L;
    d.D_r_aut = (1.0 - pn) * (mp.R_H - mp.B1 + mp.X * to_double(survival_mass(mp.r))) +
                pn * mp.L;
    d.D_s_aut = (1.0 - pn) * (mp.R_H - 2.0 * mp.r * mp.u) + pn * mp.L;
    return d;
}

// Actuarially fair premium per unit of counter-party cover.
inline double s_safe(const ModelParams& mp)
{
    check_structure(mp);
    return (1.0 - mp.beta) / mp.n + mp.beta * mp.p / mp.n;
}

// Equity injection that restores the incentive constraint of a bank that lost
// r hedges: I = r u + X - B1. Must be positive to mean anything.
inline double debt_reduction(const ModelParams& mp)
{
    check_structure(mp);
    const double inj = mp.r * mp.u + mp.X - mp.B1;
    if (!(inj > 0.0))
        throw invalid_params("u: r*u + X - B1 must be positive");
    return inj;
}

struct UInterval {
    double lo = 0; // B1 - X
    double hi = 0; // u_upper_bound(B1, r)
};

// Open interval of shock sizes compatible with the hedging restriction.
inline UInterval u_feasible_interval(const ModelParams& mp)
{
    check_structure(mp);
    UInterval itv;
    itv.lo = mp.B1 - mp.X;
    itv.hi = u_upper_bound(mp.B1, mp.r);
    if (!(itv.hi > itv.lo))
        throw degenerate_model("empty feasible shock interval: u_upper_bound <= B1 - X");
    return itv;
}

// recurring denominator core of the probability thresholds
inline double threshold_core(const ModelParams& mp)
{
    return mp.R_H + mp.X - mp.L - mp.B1 * (1.0 - mp.beta);
}

// Shock probability above which an individual bank prefers buying cover.
inline double p_ind(const ModelParams& mp)
{
    check_structure(mp);
    const double inj = debt_reduction(mp);
    const double denom = mp.beta * mp.B1;
    detail::check_positive_denominator(denom, "p_ind");
    return inj * (1.0 - mp.beta) / denom;
}

// Shock probability above which network-wide cover raises total surplus.
inline double p_soc(const ModelParams& mp)
{
    check_structure(mp);
    const double inj = debt_reduction(mp);
    const double denom = (mp.n - 1.0) * threshold_core(mp);
    detail::check_positive_denominator(denom, "p_soc");
    return 2.0 * inj * mp.r * (1.0 - mp.beta) / denom;
}

// Shock probability below which short-term debt dominates term debt.
inline double p_term(const ModelParams& mp)
{
    check_structure(mp);
    const double denom =
        threshold_core(mp) + (mp.R_L + mp.beta * mp.B1 - mp.L) / (mp.n - 1.0);
    detail::check_positive_denominator(denom, "p_term");
    return (1.0 - mp.beta) * (mp.n / (mp.n - 1.0)) * mp.B0 / denom;
}

// Shock probability below which the levered network beats full autarky.
inline double p_f_aut(const ModelParams& mp)
{
    check_structure(mp);
    const double denom =
        threshold_core(mp) - (mp.beta / mp.n) * (mp.R_H - mp.R_L);
    detail::check_positive_denominator(denom, "p_f_aut");
    return (1.0 - mp.beta) * (mp.R_H + mp.X - mp.B1 - mp.R_L) / denom;
}

// Shock probability below which hedged banking beats autarky against
// counter-party risk alone.
inline double p_r_aut(const ModelParams& mp)
{
    check_structure(mp);
    const double lost = 1.0 - to_double(survival_mass(mp.r)); // failure mass
    const double denom =
        threshold_core(mp) -
        ((mp.n * mp.beta - 1.0) / (mp.n - 1.0)) * mp.X * lost;
    detail::check_positive_denominator(denom, "p_r_aut");
    return (1.0 - mp.beta) * (mp.n / (mp.n - 1.0)) * mp.X * lost / denom;
}

// Shock probability below which hedged banking beats shock autarky.
inline double p_s_aut(const ModelParams& mp)
{
    check_structure(mp);
    const double stake = 2.0 * mp.r * mp.u + mp.X - mp.B1;
    const double denom = mp.R_H + mp.X - mp.L - mp.B1 + mp.beta * mp.B1 +
                         ((1.0 - mp.beta) / (mp.n - 1.0)) * stake;
    detail::check_positive_denominator(denom, "p_s_aut");
    return (1.0 - mp.beta) * (mp.n / (mp.n - 1.0)) * stake / denom;
}

// Every closed-form quantity in one bundle. Probabilities are reported as
// computed, never clamped; use thresholds_above_one to flag the ones > 1.
struct ThresholdSet {
    double D_max = 0;
    double D_safe = 0;
    double D_star = 0;
    double D_term = 0;
    double D_r_aut = 0;
    double D_s_aut = 0;
    double R_star = 0;
    double s_safe = 0;
    double I = 0;
    double u_lo = 0;
    double u_hi = 0;
    double p_ind = 0;
    double p_soc = 0;
    double p_term = 0;
    double p_f_aut = 0;
    double p_r_aut = 0;
    double p_s_aut = 0;
    double p_aut = 0;  // min of the three autarky thresholds
    double p_star = 0; // min(p_ind, p_aut, p_term)
};

inline ThresholdSet compute_thresholds(const ModelParams& mp)
{
    check_structure(mp);
    ThresholdSet t;
    const DebtLevels d = debt_levels(mp);
    t.D_max = d.D_max;
    t.D_safe = d.D_safe;
    t.D_star = d.D_star;
    t.D_term = d.D_term;
    t.D_r_aut = d.D_r_aut;
    t.D_s_aut = d.D_s_aut;
    t.R_star = d.R_star;
    t.s_safe = s_safe(mp);
    t.I = debt_reduction(mp);
    const UInterval itv = u_feasible_interval(mp);
    t.u_lo = itv.lo;
    t.u_hi = itv.hi;
    t.p_ind = p_ind(mp);
    t.p_soc = p_soc(mp);
    t.p_term = p_term(mp);
    t.p_f_aut = p_f_aut(mp);
    t.p_r_aut = p_r_aut(mp);
    t.p_s_aut = p_s_aut(mp);
    t.p_aut = std::min({t.p_s_aut, t.p_r_aut, t.p_f_aut});
    t.p_star = std::min({t.p_ind, t.p_aut, t.p_term});
    return t;
}

// Probability thresholds are meaningful only up to 1; larger values are legal
// outputs and merely flagged.
inline std::vector<std::string> thresholds_above_one(const ThresholdSet& t)
{
    std::vector<std::string> out;
    const std::pair<const char*, double> probs[] = {
        {"p_ind", t.p_ind},   {"p_soc", t.p_soc},     {"p_term", t.p_term},
        {"p_f_aut", t.p_f_aut}, {"p_r_aut", t.p_r_aut}, {"p_s_aut", t.p_s_aut},
        {"p_aut", t.p_aut},   {"p_star", t.p_star},
    };
    for (const auto& [name, v] : probs)
        if (v > 1.0) out.emplace_back(name);
    return out;
}

// Gains from counter-party cover, per bank, discounted to the initial date.
struct WelfareGains {
    // one bank buying cover while everyone else already has it
    double private_deviation_gain = 0;
    // the fully covered network versus the uninsured contagious one
    double social_gain = 0;
};

inline WelfareGains welfare_gains(const ModelParams& mp, const ThresholdSet& t)
{
    check_structure(mp);
    const double cover_cost = t.s_safe * 2.0 * mp.r * t.I;
    const double neighbor_hit = mp.beta * (2.0 * mp.r * mp.p / mp.n) * (mp.B1 + t.I);

    WelfareGains g;
    g.private_deviation_gain = neighbor_hit - cover_cost;

    const double insured_payoff =
        mp.beta * (1.0 - (1.0 + 2.0 * mp.r) * mp.p / mp.n) * mp.B1 +
        neighbor_hit - cover_cost - (1.0 - t.D_safe);
    const double contagious_payoff =
        mp.beta * (1.0 - mp.p) * mp.B1 - (1.0 - t.D_star);
    g.social_gain = insured_payoff - contagious_payoff;
    return g;
}

} // namespace banknet
