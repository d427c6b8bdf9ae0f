#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "banknet/errors.hpp"

namespace banknet {

// One ring of n banks. Bank i borrows short-term, invests in a long project,
// and hedges an idiosyncratic +/-u shock with its r nearest banks on each
// side, so every bank has 2r counter-parties.
struct ModelParams {
    int n = 0;       // number of banks, n > 3
    int r = 0;       // counter-party radius, r >= 1 and 2r <= n-1
    double R_H = 0;  // project return in the good aggregate state
    double R_L = 0;  // project return in the bad aggregate state
    double L = 0;    // interim liquidation value of the project
    double X = 0;    // extra return accrued between the interim and final dates
    double B0 = 0;   // private benefit from shirking at the initial date
    double B1 = 0;   // private benefit from shirking at the interim date
    double u = 0;    // magnitude of the idiosyncratic shock
    double beta = 0; // lenders' discount factor, 0 < beta < 1
    double p = 0;    // probability of the bad aggregate state, 0 <= p <= 1
};

// The worked reference configuration used across tests and docs.
inline ModelParams canonical_scenario()
{
    ModelParams mp;
    mp.n = 8;
    mp.r = 1;
    mp.R_H = 1.1;
    mp.R_L = 0.0;
    mp.L = 0.5;
    mp.X = 0.2;
    mp.B0 = 0.25;
    mp.B1 = 0.3;
    mp.u = 0.12;
    mp.beta = 0.9;
    mp.p = 0.005;
    return mp;
}

// Rejects structurally unusable inputs before any economic restriction is
// evaluated. Throws invalid_params naming the offending field.
inline void check_structure(const ModelParams& mp)
{
    auto require = [](bool ok, const char* what) {
        if (!ok) throw invalid_params(what);
    };
    require(mp.n > 3, "n: need n > 3");
    require(mp.r >= 1, "r: need r >= 1");
    require(2 * mp.r <= mp.n - 1, "r: need 2r <= n-1");
    auto money = [&require](double v, const char* name) {
        require(std::isfinite(v) && v >= 0.0, name);
    };
    money(mp.R_H, "R_H: need a finite value >= 0");
    money(mp.R_L, "R_L: need a finite value >= 0");
    money(mp.L, "L: need a finite value >= 0");
    money(mp.X, "X: need a finite value >= 0");
    money(mp.B0, "B0: need a finite value >= 0");
    money(mp.B1, "B1: need a finite value >= 0");
    money(mp.u, "u: need a finite value >= 0");
    require(mp.R_L < mp.R_H, "R_L: need R_L < R_H");
    require(std::isfinite(mp.beta) && mp.beta > 0.0 && mp.beta < 1.0,
            "beta: need 0 < beta < 1");
    require(std::isfinite(mp.p) && mp.p >= 0.0 && mp.p <= 1.0,
            "p: need 0 <= p <= 1");
}

// The 2r counter-parties of bank i, ordered i-r, ..., i-1, i+1, ..., i+r
// (all mod n). Throws std::out_of_range for a bad index.
inline std::vector<int> neighbors(int i, const ModelParams& mp)
{
    check_structure(mp);
    if (i < 0 || i >= mp.n)
        throw std::out_of_range("bank index out of range");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(2 * mp.r));
    for (int k = mp.r; k >= 1; --k)
        out.push_back(((i - k) % mp.n + mp.n) % mp.n);
    for (int k = 1; k <= mp.r; ++k)
        out.push_back((i + k) % mp.n);
    return out;
}

// A realization of the n idiosyncratic shocks; every entry is exactly +u or -u.
struct ShockAssignment {
    std::vector<double> eps;
};

// Builds an assignment from +1/-1 signs.
inline ShockAssignment assignment_from_signs(const std::vector<int>& signs,
                                             const ModelParams& mp)
{
    check_structure(mp);
    if (static_cast<int>(signs.size()) != mp.n)
        throw invalid_params("signs: need exactly n entries");
    ShockAssignment a;
    a.eps.reserve(signs.size());
    for (int s : signs) {
        if (s != 1 && s != -1) throw invalid_params("signs: entries must be +1 or -1");
        a.eps.push_back(s == 1 ? mp.u : -mp.u);
    }
    return a;
}

// Net shock position of bank i: the r shocks at offsets i-1..i-r enter with a
// plus, the r at offsets i-(r+1)..i-2r with a minus. Computed as an integer
// multiple of u so the result carries a single rounding.
inline double shock_exposure(int i, const ShockAssignment& shocks,
                             const ModelParams& mp)
{
    check_structure(mp);
    if (i < 0 || i >= mp.n)
        throw std::out_of_range("bank index out of range");
    if (static_cast<int>(shocks.eps.size()) != mp.n)
        throw invalid_params("shocks: need exactly n entries");
    int net = 0;
    for (int k = 1; k <= 2 * mp.r; ++k) {
        const int j = ((i - k) % mp.n + mp.n) % mp.n;
        const int sign = shocks.eps[static_cast<std::size_t>(j)] >= 0.0 ? 1 : -1;
        net += (k <= mp.r) ? sign : -sign;
    }
    return static_cast<double>(net) * mp.u;
}

} // namespace banknet
