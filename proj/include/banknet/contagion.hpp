#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "banknet/params.hpp"
#include "banknet/rng.hpp"
#include "banknet/thresholds.hpp"

namespace banknet {

enum class BankStatus : unsigned char { Operating, Failed };

// Outcome of one cascade: who failed, in which synchronous round, and who was
// kept alive by an outside injection (intervention runs only).
struct NetworkState {
    int n = 0;
    bool insured = false;
    std::vector<BankStatus> status;
    std::vector<std::optional<int>> failure_round; // empty optional = operating
    std::vector<bool> rescued;
    int rounds = 0; // highest assigned failure round

    int failed_count() const
    {
        int c = 0;
        for (auto s : status) c += (s == BankStatus::Failed) ? 1 : 0;
        return c;
    }
    bool all_failed() const { return failed_count() == n; }
};

// Can a bank whose counter-parties failed still roll its debt over? Lenders
// price the survival odds (2r - n_d)/2r against recovering R_L on failure;
// indifference counts as feasible. n_d = 0 is always feasible.
inline bool rollover_feasible(int failed_neighbors, const ModelParams& mp)
{
    check_structure(mp);
    const int two_r = 2 * mp.r;
    if (failed_neighbors < 0 || failed_neighbors > two_r)
        throw invalid_params("failed_neighbors: need 0 <= n_d <= 2r");
    const double p_survive = static_cast<double>(two_r - failed_neighbors) / two_r;
    const double p_fail = static_cast<double>(failed_neighbors) / two_r;
    const double face = mp.R_H + mp.X - mp.B1; // short-term face value
    return p_survive * face + p_fail * mp.R_L >= face;
}

struct CascadeOptions {
    bool insured = false;
    // Inject I into any bank whose rollover fails while it has >= r failed
    // neighbors; one injection stabilizes the bank for good. Banks short of
    // that threshold still fail when their rollover fails.
    bool intervene = false;
};

// Synchronous-round cascade from an initial failure set. Insured networks
// stop at the initial set: cover makes every rollover whole. Uninsured
// networks iterate the rollover rule to its fixed point (at most n rounds).
inline NetworkState cascade(const std::vector<int>& initial_failed,
                            CascadeOptions opt, const ModelParams& mp)
{
    check_structure(mp);
    NetworkState st;
    st.n = mp.n;
    st.insured = opt.insured;
    st.status.assign(static_cast<std::size_t>(mp.n), BankStatus::Operating);
    st.failure_round.assign(static_cast<std::size_t>(mp.n), std::nullopt);
    st.rescued.assign(static_cast<std::size_t>(mp.n), false);

    for (int i : initial_failed) {
        if (i < 0 || i >= mp.n)
            throw std::out_of_range("bank index out of range");
        st.status[static_cast<std::size_t>(i)] = BankStatus::Failed;
        st.failure_round[static_cast<std::size_t>(i)] = 0;
    }
    if (opt.insured || initial_failed.empty()) return st;

    // feasibility only depends on the failed-neighbor count
    std::vector<bool> feasible(static_cast<std::size_t>(2 * mp.r + 1));
    for (int k = 0; k <= 2 * mp.r; ++k)
        feasible[static_cast<std::size_t>(k)] = rollover_feasible(k, mp);

    for (int round = 1; round <= mp.n; ++round) {
        std::vector<int> next;
        for (int i = 0; i < mp.n; ++i) {
            if (st.status[static_cast<std::size_t>(i)] == BankStatus::Failed) continue;
            if (st.rescued[static_cast<std::size_t>(i)]) continue;
            int down = 0;
            for (int k = 1; k <= mp.r; ++k) {
                const int left = ((i - k) % mp.n + mp.n) % mp.n;
                const int right = (i + k) % mp.n;
                down += st.status[static_cast<std::size_t>(left)] == BankStatus::Failed;
                down += st.status[static_cast<std::size_t>(right)] == BankStatus::Failed;
            }
            if (down == 0 || feasible[static_cast<std::size_t>(down)]) continue;
            if (opt.intervene && down >= mp.r)
                st.rescued[static_cast<std::size_t>(i)] = true;
            else
                next.push_back(i);
        }
        if (next.empty()) break;
        for (int i : next) {
            st.status[static_cast<std::size_t>(i)] = BankStatus::Failed;
            st.failure_round[static_cast<std::size_t>(i)] = round;
        }
        st.rounds = round;
    }
    return st;
}

inline NetworkState cascade(const std::vector<int>& initial_failed, bool insured,
                            const ModelParams& mp)
{
    return cascade(initial_failed, CascadeOptions{insured, false}, mp);
}

enum class Regime {
    ContagiousUninsured, // sparse web, shock odds low: banks stay uncovered,
                         // one bad project takes the whole ring down
    InsuredStable,       // dense web (2r >= n/2): cover is individually chosen
                         // and failures stay contained
    OutOfTheoremRange,   // sparse web with shock odds past p_star
};

inline const char* to_string(Regime r)
{
    switch (r) {
        case Regime::ContagiousUninsured: return "ContagiousUninsured";
        case Regime::InsuredStable: return "InsuredStable";
        case Regime::OutOfTheoremRange: return "OutOfTheoremRange";
    }
    return "?";
}

struct RegimeReport {
    Regime regime = Regime::OutOfTheoremRange;
    bool socially_desirable = false; // p > p_soc
    bool privately_chosen = false;   // p >= p_ind, or the dense-web rule bites
    bool theorem_applicable = false; // p < p_star
    ThresholdSet thresholds;
};

inline RegimeReport classify_regime(const ModelParams& mp, const ThresholdSet& t)
{
    check_structure(mp);
    RegimeReport rep;
    rep.thresholds = t;
    const bool dense = 4 * mp.r >= mp.n; // 2r >= n/2 without rounding
    rep.socially_desirable = mp.p > t.p_soc;
    rep.privately_chosen = dense || mp.p >= t.p_ind;
    rep.theorem_applicable = mp.p < t.p_star;
    if (dense)
        rep.regime = Regime::InsuredStable;
    else if (mp.p < t.p_star)
        rep.regime = Regime::ContagiousUninsured;
    else
        rep.regime = Regime::OutOfTheoremRange;
    return rep;
}

// With probability p the bad state hits and a uniformly chosen bank's project
// sours; otherwise nothing happens.
inline std::optional<int> draw_bad_state(RngStream& rng, const ModelParams& mp)
{
    check_structure(mp);
    if (!rng.bernoulli(mp.p)) return std::nullopt;
    return static_cast<int>(rng.next_below(static_cast<std::uint32_t>(mp.n)));
}

struct MCReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string generator;
    bool insured = false;
    bool intervene = false;
    std::uint64_t bad_state_trials = 0;
    double bad_state_frequency = 0;
    std::vector<std::uint64_t> shocked_histogram;                   // n cells
    std::vector<std::pair<int, std::uint64_t>> failure_distribution; // count -> trials
    double mean_bank_payoff = 0; // realized discounted net payoff per bank-trial
    std::uint64_t injections = 0;
};

// Seeded simulation of `trials` independent periods. A trial draws the bad
// state, runs the cascade, and books every bank's realized payoff: equity and
// premium up front, discounted B1 (plus cover payout per failed counter-party
// when insured) on survival, nothing on failure.
inline MCReport monte_carlo(const ModelParams& mp, std::uint64_t trials,
                            std::uint64_t seed, bool insured, bool intervene = false)
{
    check_structure(mp);
    if (trials < 1) throw invalid_params("trials: need trials >= 1");

    const DebtLevels d = debt_levels(mp);
    const double premium = s_safe(mp);
    const double cover = insured ? debt_reduction(mp) : 0.0;
    const double upfront = insured
        ? (1.0 - d.D_safe) + premium * 2.0 * mp.r * cover
        : (1.0 - d.D_star);

    MCReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.generator = RngStream::generator_name();
    rep.insured = insured;
    rep.intervene = intervene;
    rep.shocked_histogram.assign(static_cast<std::size_t>(mp.n), 0);

    RngStream rng(seed);
    std::vector<std::uint64_t> failures_by_count(static_cast<std::size_t>(mp.n) + 1, 0);
    double payoff_total = 0.0;

    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::optional<int> shocked = draw_bad_state(rng, mp);
        if (!shocked) {
            ++failures_by_count[0];
            payoff_total += mp.n * (mp.beta * mp.B1 - upfront);
            continue;
        }
        ++rep.bad_state_trials;
        ++rep.shocked_histogram[static_cast<std::size_t>(*shocked)];
        const NetworkState st =
            cascade({*shocked}, CascadeOptions{insured, intervene}, mp);
        ++failures_by_count[static_cast<std::size_t>(st.failed_count())];
        for (bool r : st.rescued) rep.injections += r ? 1 : 0;
        for (int i = 0; i < mp.n; ++i) {
            double gross = 0.0;
            if (st.status[static_cast<std::size_t>(i)] == BankStatus::Operating) {
                gross = mp.B1;
                if (insured) {
                    int down = 0;
                    for (int j : neighbors(i, mp))
                        down += st.status[static_cast<std::size_t>(j)] ==
                                BankStatus::Failed;
                    gross += cover * down;
                }
            }
            payoff_total += mp.beta * gross - upfront;
        }
    }

    rep.bad_state_frequency =
        static_cast<double>(rep.bad_state_trials) / static_cast<double>(trials);
    for (int c = 0; c <= mp.n; ++c)
        if (failures_by_count[static_cast<std::size_t>(c)] > 0)
            rep.failure_distribution.emplace_back(
                c, failures_by_count[static_cast<std::size_t>(c)]);
    rep.mean_bank_payoff =
        payoff_total / (static_cast<double>(trials) * static_cast<double>(mp.n));
    return rep;
}

} // namespace banknet
