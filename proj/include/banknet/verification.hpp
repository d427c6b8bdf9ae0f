#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "banknet/combinatorics.hpp"
#include "banknet/contagion.hpp"
#include "banknet/sampling.hpp"
#include "banknet/thresholds.hpp"

// Self-checks pitting every closed form against an independent route:
// brute-force enumeration, break-even identities, and the r = 1 special
// cases written out verbatim. Shared by the `verify` subcommand and the
// acceptance suite.

namespace banknet {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace verify_detail {

inline bool close_rel(double a, double b, double tol)
{
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tol * scale;
}

inline std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace verify_detail

// Closed form vs enumeration across radii, 50 (B1, u) pairs each, rel 1e-12.
inline CheckResult check_oracle_equivalence(int r_max = 8, int pairs_per_r = 50,
                                            std::uint64_t seed = 2024)
{
    using verify_detail::close_rel;
    CheckResult res{"oracle-equivalence", true, ""};
    RngStream rng(seed);
    for (int r = 1; r <= r_max; ++r) {
        for (int i = 0; i < pairs_per_r; ++i) {
            const double B1 = rng.next_in(0.05, 0.6);
            const double u = rng.next_in(0.0, 0.6 * B1);
            const double closed = expected_unhedged_payoff(B1, u, r);
            const double brute = enumerate_unhedged_payoff(B1, u, r);
            if (!close_rel(closed, brute, 1e-12)) {
                res.pass = false;
                res.detail = "r=" + std::to_string(r) +
                             " closed=" + verify_detail::fmt(closed) +
                             " brute=" + verify_detail::fmt(brute);
                return res;
            }
        }
    }
    res.detail = "r=1.." + std::to_string(r_max) + ", " +
                 std::to_string(pairs_per_r) + " pairs each, rel 1e-12";
    return res;
}

// hedging_preferred <=> u < u_upper_bound <=> B1 > enumerated mean, with u
// drawn on both sides of the bound (skipping a 1e-9 relative band at it),
// plus the exact r = 1 bound B1/2.
inline CheckResult check_hedging_three_way(int draws = 1000, std::uint64_t seed = 2025)
{
    CheckResult res{"hedging-three-way", true, ""};
    RngStream rng(seed);
    int done = 0;
    while (done < draws) {
        const int r = 1 + static_cast<int>(rng.next_below(6));
        const double B1 = rng.next_in(0.1, 0.5);
        const double hi = u_upper_bound(B1, r);
        const double u = rng.next_in(0.0, 1.6 * hi);
        if (std::fabs(u - hi) <= 1e-9 * hi) continue;
        ++done;
        const bool preferred = hedging_preferred(B1, u, r);
        const bool below = u < hi;
        const bool beats = enumerate_unhedged_payoff(B1, u, r) < B1;
        if (preferred != below || preferred != beats) {
            res.pass = false;
            res.detail = "r=" + std::to_string(r) + " B1=" + verify_detail::fmt(B1) +
                         " u=" + verify_detail::fmt(u);
            return res;
        }
    }
    const double half = u_upper_bound(0.3, 1);
    if (half != 0.15) {
        res.pass = false;
        res.detail = "r=1 bound: expected B1/2, got " + verify_detail::fmt(half);
        return res;
    }
    res.detail = std::to_string(draws) + " draws both sides of the bound";
    return res;
}

// Four break-even identities, rel 1e-12, over random valid sets:
//   (1-p) R* D* + p L = D*            (lenders break even in expectation)
//   R* D* = R_H - B1 + X              (the rolled claim exhausts pledgeable value)
//   (1 - p/n)(R_H - B1 + X) + (p/n) L = D_safe
//   beta (1-p) 2rI = 2rI - 2nrI s_safe (fair premium refunds the cover)
inline CheckResult check_breakeven_identities(int sets = 500, std::uint64_t seed = 2026)
{
    using verify_detail::close_rel;
    CheckResult res{"break-even-identities", true, ""};
    RngStream rng(seed);
    for (int i = 0; i < sets; ++i) {
        const ModelParams mp = random_valid_params(rng);
        const ThresholdSet t = compute_thresholds(mp);
        const double a = mp.R_H - mp.B1 + mp.X;
        const double lhs1 = (1.0 - mp.p) * t.R_star * t.D_star + mp.p * mp.L;
        const double lhs2 = t.R_star * t.D_star;
        const double lhs3 =
            (1.0 - mp.p / mp.n) * a + (mp.p / mp.n) * mp.L;
        const double cover = 2.0 * mp.r * t.I;
        const double lhs4 = mp.beta * (1.0 - mp.p) * cover;
        const double rhs4 = cover - 2.0 * mp.n * mp.r * t.I * t.s_safe;
        const bool ok = close_rel(lhs1, t.D_star, 1e-12) &&
                        close_rel(lhs2, a, 1e-12) &&
                        close_rel(lhs3, t.D_safe, 1e-12) &&
                        close_rel(lhs4, rhs4, 1e-12);
        if (!ok) {
            res.pass = false;
            res.detail = "set " + std::to_string(i);
            return res;
        }
    }
    res.detail = std::to_string(sets) + " random valid sets, 4 identities, rel 1e-12";
    return res;
}

// r = 1 reductions written out verbatim and compared to the general forms.
inline CheckResult check_r1_corollaries(int sets = 100, std::uint64_t seed = 2027)
{
    using verify_detail::close_rel;
    CheckResult res{"r1-corollaries", true, ""};
    RngStream rng(seed);
    SamplerOptions opt;
    opt.r_min = opt.r_max = 1;
    for (int i = 0; i < sets; ++i) {
        const ModelParams mp = random_valid_params(rng, opt);
        const ThresholdSet t = compute_thresholds(mp);
        const double core = mp.R_H + mp.X - mp.L - mp.B1 * (1.0 - mp.beta);
        const double soc1 =
            2.0 * t.I * (1.0 - mp.beta) / ((mp.n - 1.0) * core);
        const double q = mp.X / 4.0;
        const double raut1 = (1.0 - mp.beta) * (mp.n / (mp.n - 1.0)) * q /
                             (core - ((mp.n * mp.beta - 1.0) / (mp.n - 1.0)) * q);
        const double stake = 2.0 * mp.u + mp.X - mp.B1;
        const double saut1 =
            (1.0 - mp.beta) * (mp.n / (mp.n - 1.0)) * stake /
            (mp.R_H + mp.X - mp.L - mp.B1 + mp.beta * mp.B1 +
             ((1.0 - mp.beta) / (mp.n - 1.0)) * stake);
        const double bound1 = mp.B1 / 2.0;
        // one failed counter-party out of two: lenders recover the average of
        // the continued claim and R_L, never enough to roll over
        const double face = mp.R_H + mp.X - mp.B1;
        const bool roll1 = 0.5 * face + 0.5 * mp.R_L >= face;
        const bool ok = close_rel(soc1, t.p_soc, 1e-12) &&
                        close_rel(raut1, t.p_r_aut, 1e-12) &&
                        close_rel(saut1, t.p_s_aut, 1e-12) &&
                        close_rel(bound1, t.u_hi, 1e-12) &&
                        roll1 == rollover_feasible(1, mp);
        if (!ok) {
            res.pass = false;
            res.detail = "set " + std::to_string(i);
            return res;
        }
    }
    res.detail = std::to_string(sets) + " random valid r=1 sets, rel 1e-12";
    return res;
}

// Identity and consistency checks at one given parameter set.
inline CheckResult check_scenario_consistency(const ModelParams& mp)
{
    using verify_detail::close_rel;
    CheckResult res{"scenario-consistency", true, ""};
    const ThresholdSet t = compute_thresholds(mp);
    const double a = mp.R_H - mp.B1 + mp.X;
    bool ok = close_rel(t.D_max, t.D_star, 1e-12);
    ok = ok && close_rel(t.R_star * t.D_star, a, 1e-12);
    ok = ok && t.u_lo == mp.B1 - mp.X;
    ok = ok && t.p_aut == std::min({t.p_s_aut, t.p_r_aut, t.p_f_aut});
    ok = ok && t.p_star == std::min({t.p_ind, t.p_aut, t.p_term});
    ok = ok && t.D_star <= t.D_safe && t.D_safe < 1.0 && t.R_star >= 1.0;
    ok = ok && hedging_preferred(mp.B1, mp.u, mp.r) == (mp.u < t.u_hi);
    ok = ok && close_rel(enumerate_unhedged_payoff(mp.B1, mp.u, mp.r),
                         expected_unhedged_payoff(mp.B1, mp.u, mp.r), 1e-12);
    res.pass = ok;
    res.detail = ok ? "identities and oracle agree at the given scenario"
                    : "identity mismatch at the given scenario";
    return res;
}

inline std::vector<CheckResult> run_verify_suite(const ModelParams& scenario)
{
    return {
        check_oracle_equivalence(),
        check_hedging_three_way(),
        check_breakeven_identities(),
        check_r1_corollaries(),
        check_scenario_consistency(scenario),
    };
}

} // namespace banknet
