#pragma once

#include <algorithm>
#include <cmath>

#include "banknet/contagion.hpp"
#include "banknet/params.hpp"
#include "banknet/rng.hpp"
#include "banknet/thresholds.hpp"
#include "banknet/validation.hpp"

namespace banknet {

struct SamplerOptions {
    int r_min = 1;
    int r_max = 6;
    int n_max = 16;
    // require 2r < n/2 (the sparse topology where contagion is total)
    bool contagious_topology = false;
    // also require every probability threshold to be well defined
    bool usable_thresholds = true;
};

// Draws a parameter set passing all six restrictions (and, by default, with
// non-degenerate thresholds). Construction targets each restriction, then a
// full validate_params pass gates acceptance; the loop is deterministic for a
// given stream.
inline ModelParams random_valid_params(RngStream& rng, SamplerOptions opt = {})
{
    for (int attempt = 0; attempt < 10000; ++attempt) {
        ModelParams mp;
        mp.r = opt.r_min +
               static_cast<int>(rng.next_below(
                   static_cast<std::uint32_t>(opt.r_max - opt.r_min + 1)));
        const int n_floor = opt.contagious_topology ? 4 * mp.r + 1
                                                    : std::max(4, 2 * mp.r + 1);
        if (n_floor > opt.n_max) continue;
        mp.n = n_floor + static_cast<int>(rng.next_below(
                             static_cast<std::uint32_t>(opt.n_max - n_floor + 1)));

        mp.B1 = rng.next_in(0.15, 0.45);
        const double ratio = u_upper_bound(1.0, mp.r); // u bound per unit of B1
        mp.R_H = rng.next_in(1.0, 1.0 + 0.9 * mp.B1 * ratio);
        mp.R_L = rng.next_in(0.0, 0.05);
        mp.p = rng.next_in(0.0005, 0.02);

        // leave room for the shock interval and the shirking cap together
        const double x_lo = mp.B1 * (1.0 - ratio);
        const double x_hi = mp.B1 + 1.0 - mp.R_H;
        if (!(x_hi > x_lo)) continue;
        mp.X = x_lo + rng.next_in(0.05, 0.95) * (x_hi - x_lo);

        const double u_lo = std::max(mp.B1 - mp.X, 0.0);
        const double u_hi = u_upper_bound(mp.B1, mp.r);
        if (!(u_hi > u_lo)) continue;
        mp.u = u_lo + rng.next_in(0.05, 0.95) * (u_hi - u_lo);

        const double l_hi = (1.0 - mp.p / mp.n) * (mp.R_H + mp.X) - mp.B1;
        if (!(l_hi > mp.R_L)) continue;
        mp.L = mp.R_L + rng.next_in(0.1, 0.9) * (l_hi - mp.R_L);

        const double a = mp.R_H - mp.B1 + mp.X;
        const double beta_floor = std::max(
            0.5, (1.0 - (1.0 - mp.p) * a - mp.p * mp.L) / ((1.0 - mp.p) * mp.B1));
        if (!(beta_floor < 0.99)) continue;
        mp.beta = beta_floor + rng.next_in(0.02, 0.95) * (0.99 - beta_floor);

        const double b0_lo = 2.0 * mp.u;
        const double b0_hi = (1.0 - mp.p) * mp.B1;
        if (!(b0_hi > b0_lo)) continue;
        mp.B0 = b0_lo + rng.next_in(0.05, 0.95) * (b0_hi - b0_lo);

        try {
            if (!validate_params(mp).all_pass) continue;
            if (opt.usable_thresholds) (void)compute_thresholds(mp);
        } catch (const degenerate_model&) {
            continue;
        }
        return mp;
    }
    throw degenerate_model("random_valid_params: no acceptable draw in 10000 attempts");
}

// Random +/-u assignment, each sign fair and independent.
inline ShockAssignment random_assignment(RngStream& rng, const ModelParams& mp)
{
    check_structure(mp);
    std::vector<int> signs(static_cast<std::size_t>(mp.n));
    for (auto& s : signs) s = (rng.next_u64() & 1u) ? 1 : -1;
    return assignment_from_signs(signs, mp);
}

} // namespace banknet
