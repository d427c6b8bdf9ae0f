#pragma once

#include <string>
#include <vector>

#include "banknet/combinatorics.hpp"
#include "banknet/params.hpp"

namespace banknet {

// One evaluated inequality: lhs REL rhs, compared exactly in binary64.
struct Comparison {
    std::string label;
    double lhs = 0;
    std::string rel;
    double rhs = 0;
    bool pass = false;
};

// One of the six model restrictions; compound restrictions carry one
// Comparison per inequality and pass only if every part passes.
struct RestrictionCheck {
    int id = 0;
    std::vector<Comparison> parts;
    bool pass = false;
};

struct ValidationReport {
    std::vector<RestrictionCheck> restrictions; // exactly six entries
    bool all_pass = false;
};

namespace detail {

inline Comparison cmp_lt(std::string label, double lhs, double rhs)
{
    return {std::move(label), lhs, "<", rhs, lhs < rhs};
}
inline Comparison cmp_le(std::string label, double lhs, double rhs)
{
    return {std::move(label), lhs, "<=", rhs, lhs <= rhs};
}
inline Comparison cmp_gt(std::string label, double lhs, double rhs)
{
    return {std::move(label), lhs, ">", rhs, lhs > rhs};
}
inline Comparison cmp_ge(std::string label, double lhs, double rhs)
{
    return {std::move(label), lhs, ">=", rhs, lhs >= rhs};
}

inline RestrictionCheck seal(int id, std::vector<Comparison> parts)
{
    RestrictionCheck rc;
    rc.id = id;
    rc.pass = true;
    for (const auto& c : parts) rc.pass = rc.pass && c.pass;
    rc.parts = std::move(parts);
    return rc;
}

} // namespace detail

// Evaluates the six economic restrictions. Structural problems throw
// invalid_params before any restriction is looked at; restriction failures
// are reported, not thrown. All comparisons are exact binary64, no tolerance.
inline ValidationReport validate_params(const ModelParams& mp)
{
    using namespace detail;
    check_structure(mp);

    const double pn = mp.p / mp.n;

    ValidationReport rep;
    rep.restrictions.reserve(6);

    // liquidation value sits strictly between the bad return and what an
    // interim lender could recover from a continued project
    rep.restrictions.push_back(seal(1, {
        cmp_lt("R_L < L", mp.R_L, mp.L),
        cmp_lt("L < (1 - p/n)(R_H + X) - B1", mp.L,
               (1.0 - pn) * (mp.R_H + mp.X) - mp.B1),
    }));

    // good/bad return spread wide enough to make effort matter
    rep.restrictions.push_back(seal(2, {
        cmp_gt("R_H - R_L > 2 B1 / (1 - p/n)", mp.R_H - mp.R_L,
               2.0 * mp.B1 / (1.0 - pn)),
    }));

    // interim shirking benefit covers the final-date upside; compared with the
    // unit moved across so the boundary case is not lost to cancellation
    rep.restrictions.push_back(seal(3, {
        cmp_ge("B1 + 1 >= R_H + X", mp.B1 + 1.0, mp.R_H + mp.X),
    }));

    // shock size: big enough that one lost hedge can sink a bank, small
    // enough that every bank still prefers to hedge
    rep.restrictions.push_back(seal(4, {
        cmp_lt("B1 - X < u", mp.B1 - mp.X, mp.u),
        cmp_lt("u < u_upper_bound(B1, r)", mp.u, u_upper_bound(mp.B1, mp.r)),
    }));

    // patient enough lenders; the second bound keeps the levered payoff positive
    rep.restrictions.push_back(seal(5, {
        cmp_gt("beta > 1/2", mp.beta, 0.5),
        cmp_gt("beta > (1 - (1-p)(R_H - B1 + X) - p L) / ((1-p) B1)", mp.beta,
               (1.0 - (1.0 - mp.p) * (mp.R_H - mp.B1 + mp.X) - mp.p * mp.L) /
                   ((1.0 - mp.p) * mp.B1)),
    }));

    // initial shirking benefit between the hedging stake and the discounted
    // interim benefit
    rep.restrictions.push_back(seal(6, {
        cmp_le("2u <= B0", 2.0 * mp.u, mp.B0),
        cmp_lt("B0 < (1-p) B1", mp.B0, (1.0 - mp.p) * mp.B1),
    }));

    rep.all_pass = true;
    for (const auto& rc : rep.restrictions) rep.all_pass = rep.all_pass && rc.pass;
    return rep;
}

} // namespace banknet
