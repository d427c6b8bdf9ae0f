// Minimal tour: validate the reference scenario, print its thresholds,
// trace one uninsured cascade, and run a short simulation.

#include <cstdio>

#include "banknet/banknet.hpp"

int main()
{
    using namespace banknet;

    const ModelParams mp = canonical_scenario();

    const ValidationReport rep = validate_params(mp);
    std::printf("restrictions: %s\n", rep.all_pass ? "all pass" : "FAIL");

    const ThresholdSet t = compute_thresholds(mp);
    std::printf("D_star=%.6f  D_safe=%.6f  R_star=%.7f\n", t.D_star, t.D_safe,
                t.R_star);
    std::printf("p_ind=%.7f  p_soc=%.7f  p_star=%.7f\n", t.p_ind, t.p_soc,
                t.p_star);

    const RegimeReport reg = classify_regime(mp, t);
    std::printf("regime: %s\n", to_string(reg.regime));

    const NetworkState st = cascade({0}, /*insured=*/false, mp);
    std::printf("uninsured cascade from bank 0: %d/%d failed in %d rounds\n",
                st.failed_count(), st.n, st.rounds);

    const MCReport mc = monte_carlo(mp, 20000, /*seed=*/42, /*insured=*/false);
    std::printf("simulated bad-state frequency: %.5f (p=%.5f)\n",
                mc.bad_state_frequency, mp.p);
    return 0;
}
