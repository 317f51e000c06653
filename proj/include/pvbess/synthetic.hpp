#pragma once

#include <cstdint>

#include "pvbess/profile.hpp"

namespace pvbess {

// Stand-in for non-distributable measured household data: a two-peak
// residential load and a sinusoidal PV envelope with cloud noise.
// Generation is deterministic for a given spec (fixed PRNG, no platform-
// dependent distributions).
struct SynthSpec {
    size_t steps = 35040;        // number of samples
    double dt_hours = 0.25;      // sample interval
    double load_kwh = 2774.0;    // target sum(load)*dt over the generated span
    double pv_wh_per_wp = 1020.0;  // target sum(pv)*dt over the generated span
    uint64_t seed = 42;
};

// Target totals are matched exactly by a final rescale (well within 0.1%).
Profile synth_load_profile(const SynthSpec& spec);
Profile synth_pv_profile(const SynthSpec& spec);

} // namespace pvbess
