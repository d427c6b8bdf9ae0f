#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "banknet/params.hpp"
#include "banknet/rng.hpp"
#include "banknet/sampling.hpp"
#include "banknet/thresholds.hpp"

using namespace banknet;

namespace {

bool close_rel(double a, double b, double tol)
{
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tol * scale;
}

} // namespace

TEST_CASE("reference configuration reproduces its exact-fraction constants")
{
    const ModelParams mp = canonical_scenario();
    const ThresholdSet t = compute_thresholds(mp);

    // references are small exact fractions, evaluated here as one division
    CHECK(close_rel(t.D_star, 399.0 / 400.0, 1e-9));
    CHECK(close_rel(t.D_max, 399.0 / 400.0, 1e-9));
    CHECK(close_rel(t.R_star, 400.0 / 399.0, 1e-9));
    CHECK(close_rel(t.D_safe, 3199.0 / 3200.0, 1e-9));
    CHECK(close_rel(t.D_term, 1199.0 / 1600.0, 1e-9));
    CHECK(close_rel(t.D_r_aut, 30391.0 / 32000.0, 1e-9));
    CHECK(close_rel(t.D_s_aut, 34391.0 / 40000.0, 1e-9));
    CHECK(close_rel(t.s_safe, 209.0 / 16000.0, 1e-9));
    CHECK(close_rel(t.I, 0.02, 1e-9));
    CHECK(close_rel(t.u_lo, 0.1, 1e-9));
    CHECK(close_rel(t.u_hi, 0.15, 1e-9));
    CHECK(close_rel(t.p_ind, 1.0 / 135.0, 1e-9));
    CHECK(close_rel(t.p_soc, 2.0 / 2695.0, 1e-9));
    CHECK(close_rel(t.p_term, 5.0 / 129.0, 1e-9));
    CHECK(close_rel(t.p_f_aut, 80.0 / 517.0, 1e-9));
    CHECK(close_rel(t.p_r_aut, 1.0 / 127.0, 1e-9));
    CHECK(close_rel(t.p_s_aut, 4.0 / 193.0, 1e-9));
    // the risky-autarky bound is the smallest of the three autarky bounds here
    CHECK(t.p_aut == t.p_r_aut);
    // and the private-incentive bound is the overall binding one
    CHECK(t.p_star == t.p_ind);

    SECTION("no threshold exceeds one at the reference point")
    {
        CHECK(thresholds_above_one(t).empty());
    }

    SECTION("the bundle quotes the underlying functions verbatim")
    {
        CHECK(t.s_safe == s_safe(mp));
        CHECK(t.I == debt_reduction(mp));
        CHECK(t.p_ind == p_ind(mp));
        CHECK(t.p_soc == p_soc(mp));
        CHECK(t.p_term == p_term(mp));
        CHECK(t.p_f_aut == p_f_aut(mp));
        CHECK(t.p_r_aut == p_r_aut(mp));
        CHECK(t.p_s_aut == p_s_aut(mp));
        const DebtLevels d = debt_levels(mp);
        CHECK(t.D_star == d.D_star);
        CHECK(t.D_safe == d.D_safe);
        CHECK(t.R_star == d.R_star);
    }
}

TEST_CASE("degenerate probabilities collapse the debt levels as expected")
{
    ModelParams mp = canonical_scenario();

    SECTION("p = 0: no discount, all value pledgeable at par")
    {
        mp.p = 0.0;
        const DebtLevels d = debt_levels(mp);
        const double a = mp.R_H - mp.B1 + mp.X;
        CHECK(d.D_star == a);
        CHECK(d.D_safe == a);
        CHECK(d.D_max == a);
        CHECK(d.R_star == 1.0);
        CHECK(close_rel(d.D_term, 0.75, 1e-12));
        CHECK(s_safe(mp) == (1.0 - mp.beta) / mp.n);
    }

    SECTION("p = 1: only the liquidation value is pledgeable")
    {
        mp.p = 1.0;
        const DebtLevels d = debt_levels(mp);
        CHECK(d.D_star == mp.L);
        CHECK(d.R_star > 1.0);
    }

    SECTION("p = 1 with worthless liquidation leaves no break-even rate")
    {
        mp.p = 1.0;
        mp.L = 0.0;
        CHECK_THROWS_AS(debt_levels(mp), degenerate_model);
    }
}

TEST_CASE("premium tends to the actuarial rate as patience grows")
{
    ModelParams mp = canonical_scenario();
    mp.beta = 1.0 - 1e-9;
    CHECK(std::fabs(s_safe(mp) - mp.p / mp.n) < 1e-9);

    SECTION("all probability thresholds vanish with the discount wedge")
    {
        mp.beta = 1.0 - 1e-6;
        const ThresholdSet t = compute_thresholds(mp);
        CHECK(t.p_ind < 1e-4);
        CHECK(t.p_soc < 1e-4);
        CHECK(t.p_term < 1e-4);
        CHECK(t.p_f_aut < 1e-4);
        CHECK(t.p_r_aut < 1e-4);
        CHECK(t.p_s_aut < 1e-4);
    }
}

TEST_CASE("domain guards reject parameter corners the formulas cannot price")
{
    ModelParams mp = canonical_scenario();

    SECTION("nonpositive pledgeable value")
    {
        mp.R_H = 0.2;
        mp.R_L = 0.0;
        mp.X = 0.05; // R_H - B1 + X = -0.05
        CHECK_THROWS_AS(debt_levels(mp), degenerate_model);
    }

    SECTION("shock too small to fund the stabilizing injection")
    {
        mp.u = 0.09; // r u + X - B1 = -0.01
        CHECK_THROWS_AS(debt_reduction(mp), invalid_params);
        CHECK_THROWS_AS(compute_thresholds(mp), invalid_params);
    }

    SECTION("empty shock window")
    {
        mp.X = 0.0; // lower bound B1 = 0.3 above the hedging bound 0.15
        CHECK_THROWS_AS(u_feasible_interval(mp), degenerate_model);
    }

    SECTION("nonpositive threshold denominators")
    {
        ModelParams big_l = canonical_scenario();
        big_l.L = 2.0; // core value negative
        CHECK_THROWS_AS(p_soc(big_l), degenerate_model);
        CHECK_THROWS_AS(compute_thresholds(big_l), degenerate_model);

        ModelParams mid_l = canonical_scenario();
        mid_l.L = 1.25; // core still positive, term/autarky denominators not
        CHECK_NOTHROW(p_soc(mid_l));
        CHECK_THROWS_AS(p_term(mid_l), degenerate_model);
        CHECK_THROWS_AS(p_f_aut(mid_l), degenerate_model);
    }
}

TEST_CASE("thresholds above one are flagged, not clamped")
{
    ModelParams mp = canonical_scenario();
    mp.L = 1.05; // squeezes the full-autarky denominator below (1-beta)*numerator
    const ThresholdSet t = compute_thresholds(mp);
    CHECK(t.p_f_aut > 1.0);
    const auto flagged = thresholds_above_one(t);
    REQUIRE(flagged.size() == 1);
    CHECK(flagged[0] == "p_f_aut");
    // the minimum still reflects the raw values
    CHECK(t.p_aut == std::min({t.p_s_aut, t.p_r_aut, t.p_f_aut}));
}

TEST_CASE("shock window at the reference point")
{
    ModelParams mp = canonical_scenario();
    const UInterval itv = u_feasible_interval(mp);
    CHECK(itv.lo == mp.B1 - mp.X);
    CHECK(close_rel(itv.lo, 0.1, 1e-9));
    CHECK(itv.hi == 0.15);
    CHECK(itv.lo < mp.u);
    CHECK(mp.u < itv.hi);

    mp.r = 2;
    CHECK(close_rel(u_feasible_interval(mp).hi, 0.125, 1e-9));
}

TEST_CASE("ordering invariants hold across random valid parameter sets")
{
    RngStream rng(31);
    for (int i = 0; i < 100; ++i) {
        const ModelParams mp = random_valid_params(rng);
        const ThresholdSet t = compute_thresholds(mp);
        CHECK(t.D_star <= t.D_safe);
        CHECK(t.D_safe < 1.0);
        CHECK(t.R_star >= 1.0);
        CHECK(close_rel(t.D_max, t.D_star, 1e-12));
        CHECK(t.p_aut == std::min({t.p_s_aut, t.p_r_aut, t.p_f_aut}));
        CHECK(t.p_star == std::min({t.p_ind, t.p_aut, t.p_term}));
        CHECK(t.I > 0.0);
        CHECK(t.u_lo < mp.u);
        CHECK(mp.u < t.u_hi);
        CHECK(t.s_safe > 0.0);
    }
}

TEST_CASE("welfare gains at the reference point: socially useful, privately rejected")
{
    const ModelParams mp = canonical_scenario();
    const ThresholdSet t = compute_thresholds(mp);
    const WelfareGains g = welfare_gains(mp, t);
    CHECK(close_rel(g.private_deviation_gain, -13.0 / 80000.0, 1e-9));
    CHECK(close_rel(g.social_gain, 459.0 / 160000.0, 1e-9));
    CHECK(g.private_deviation_gain < 0.0);
    CHECK(g.social_gain > 0.0);
    // consistent with the thresholds: p below the private bound, above the social
    CHECK(mp.p < t.p_ind);
    CHECK(mp.p > t.p_soc);
}

TEST_CASE("welfare signs agree with the probability thresholds")
{
    RngStream rng(32);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const ModelParams mp = random_valid_params(rng);
        const ThresholdSet t = compute_thresholds(mp);
        const WelfareGains g = welfare_gains(mp, t);
        if (std::fabs(mp.p - t.p_ind) > 1e-9 * std::max(mp.p, t.p_ind)) {
            CHECK((g.private_deviation_gain > 0.0) == (mp.p > t.p_ind));
            ++checked;
        }
        if (std::fabs(mp.p - t.p_soc) > 1e-9 * std::max(mp.p, t.p_soc)) {
            CHECK((g.social_gain > 0.0) == (mp.p > t.p_soc));
            ++checked;
        }
    }
    CHECK(checked >= 150); // the knife-edge skip must stay the rare case
}

TEST_CASE("private gain vanishes exactly at the incentive threshold")
{
    ModelParams mp = canonical_scenario();
    const ThresholdSet base = compute_thresholds(mp);
    mp.p = base.p_ind; // fair-premium point: cover is value-neutral
    const ThresholdSet t = compute_thresholds(mp);
    const WelfareGains g = welfare_gains(mp, t);
    CHECK(std::fabs(g.private_deviation_gain) < 1e-15);
}

TEST_CASE("a maximal book insures a bank against every other bank")
{
    // with 2r = n-1, the per-neighbor hit probability sums to (n-1)p/n
    const int n = 9;
    const int r = 4;
    RngStream rng(33);
    for (int i = 0; i < 20; ++i) {
        const double p = rng.next_in(0.0, 1.0);
        CHECK(2.0 * r * p / n == (n - 1.0) * p / n);
    }
}
