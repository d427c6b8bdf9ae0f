#pragma once

#include <bit>
#include <cstdint>

#include "banknet/errors.hpp"
#include "banknet/rational.hpp"

namespace banknet {

// Brute-force enumeration walks all 2^(2r) sign vectors; refuse sizes past
// this cap (2^24 outcomes) rather than silently crawl.
inline constexpr int kEnumerationCap = 12;

inline void check_radius(int r)
{
    if (r < 1) throw invalid_params("r: need r >= 1");
}

// A bank that lost every hedge faces 2r independent +/-u shocks. With K of
// them negative the net position is (2r-2K)u; the bank survives only while
// the net is nonnegative, i.e. K <= r.
inline bool unhedged_failure_check(int minus_count, int r)
{
    check_radius(r);
    if (minus_count < 0 || minus_count > 2 * r)
        throw invalid_params("minus_count: need 0 <= minus_count <= 2r");
    return minus_count > r;
}

// Probability mass of the surviving sign vectors:
//   (2r)!/2^(2r) * sum_{K=0..r} 1/(K!(2r-K)!)  =  2^-2r * sum_{K=0..r} C(2r,K).
// Lies in (1/2, 1]; 3/4 at r=1, 11/16 at r=2.
inline Rational survival_mass(int r)
{
    check_radius(r);
    BigInt num = 0;
    for (int K = 0; K <= r; ++K) num += big_binomial(2 * r, K);
    return Rational(num, big_pow2(2 * r));
}

// sum_{K=0..r} (2r-2K)/(K!(2r-K)!); 1 at r=1, 1/2 at r=2. The K=r term is 0.
inline Rational drift_sum(int r)
{
    check_radius(r);
    Rational out = 0;
    for (int K = 0; K <= r; ++K)
        out += Rational(BigInt(2 * r - 2 * K),
                        big_factorial(K) * big_factorial(2 * r - K));
    return out;
}

// Coefficient of u in the expected unhedged payoff: (2r)!/2^(2r) * drift_sum.
inline Rational unhedged_drift_weight(int r)
{
    check_radius(r);
    return Rational(big_factorial(2 * r), big_pow2(2 * r)) * drift_sum(r);
}

// Expected payoff of a bank that skips hedging entirely:
//   (2r)!/2^(2r) * sum_{K=0..r} (B1 + (2r-2K)u) / (K!(2r-K)!)
// = survival_mass(r)*B1 + unhedged_drift_weight(r)*u.
inline double expected_unhedged_payoff(double B1, double u, int r)
{
    check_radius(r);
    return to_double(survival_mass(r)) * B1 + to_double(unhedged_drift_weight(r)) * u;
}

// Same quantity by direct enumeration of all 2^(2r) sign vectors, used as the
// oracle for the closed form. Survivor count and total drift are accumulated
// as exact integers; only the final linear combination is floating point.
inline double enumerate_unhedged_payoff(double B1, double u, int r)
{
    check_radius(r);
    if (r > kEnumerationCap)
        throw invalid_params("r: enumeration supports r <= 12");
    const std::uint32_t vectors = 1u << (2 * r);
    std::uint64_t survivors = 0;
    std::int64_t drift_total = 0;
    for (std::uint32_t bits = 0; bits < vectors; ++bits) {
        const int K = std::popcount(bits); // minus entries
        if (K <= r) {
            ++survivors;
            drift_total += 2 * r - 2 * K;
        }
    }
    const double scale = static_cast<double>(vectors);
    return (static_cast<double>(survivors) * B1 +
            static_cast<double>(drift_total) * u) / scale;
}

// Largest u below which full hedging beats the unhedged gamble:
//   B1 * (2^(2r) - sum_{K=0..r} C(2r,K)) / ((2r)! * drift_sum(r)).
// B1/2 at r=1, 5*B1/12 at r=2.
inline double u_upper_bound(double B1, int r)
{
    check_radius(r);
    BigInt lost = big_pow2(2 * r);
    for (int K = 0; K <= r; ++K) lost -= big_binomial(2 * r, K);
    const Rational frac(Rational(lost) / (Rational(big_factorial(2 * r)) * drift_sum(r)));
    return to_double(frac) * B1;
}

// True when the guaranteed hedged payoff B1 strictly beats the expected
// unhedged payoff. Indifference counts as not preferred.
inline bool hedging_preferred(double B1, double u, int r)
{
    check_radius(r);
    return expected_unhedged_payoff(B1, u, r) < B1;
}

} // namespace banknet
