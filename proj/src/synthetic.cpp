#include "pvbess/synthetic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace pvbess {

namespace {

constexpr double kPi = 3.14159265358979323846;

// mt19937_64 output mapped to [0,1) by hand; std::uniform_real_distribution
// is implementation-defined and would break cross-platform determinism.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_spec(const SynthSpec& spec) {
    if (spec.steps == 0) throw std::invalid_argument("synth: steps must be positive");
    if (!(spec.dt_hours > 0.0)) throw std::invalid_argument("synth: dt_hours must be positive");
}

void rescale_to_target(std::vector<double>& v, double dt, double target_energy) {
    double sum = 0.0;
    for (double x : v) sum += x;
    double e = sum * dt;
    if (e <= 0.0) throw std::runtime_error("synth: generated profile has zero energy");
    double k = target_energy / e;
    for (double& x : v) x *= k;
}

} // namespace

Profile synth_load_profile(const SynthSpec& spec) {
    check_spec(spec);
    if (!(spec.load_kwh > 0.0)) throw std::invalid_argument("synth: load_kwh must be positive");

    std::mt19937_64 rng(spec.seed);
    std::vector<double> v(spec.steps);

    // Two-peak residential shape: base load, morning peak around 07:30,
    // larger evening peak around 19:30, weekend daytime boost, mild noise.
    double noise = 1.0;
    for (size_t t = 0; t < spec.steps; ++t) {
        double hours = static_cast<double>(t) * spec.dt_hours;
        double hod = std::fmod(hours, 24.0);
        int day = static_cast<int>(hours / 24.0);
        bool weekend = (day % 7) >= 5;

        double base = 140.0;
        double morning = 420.0 * std::exp(-0.5 * std::pow((hod - 7.5) / 1.2, 2));
        double evening = 900.0 * std::exp(-0.5 * std::pow((hod - 19.5) / 2.0, 2));
        double daytime = weekend ? 250.0 * std::exp(-0.5 * std::pow((hod - 13.0) / 3.0, 2)) : 0.0;

        noise = 0.85 * noise + 0.15 * (0.6 + 0.8 * next_uniform(rng));
        v[t] = (base + morning + evening + daytime) * noise;
    }
    rescale_to_target(v, spec.dt_hours, spec.load_kwh * 1000.0);  // kWh -> Wh

    Profile p;
    p.kind = ProfileKind::Load;
    p.values = std::move(v);
    p.dt_hours = spec.dt_hours;
    p.start_label = "synthetic";
    validate_profile(p);
    return p;
}

Profile synth_pv_profile(const SynthSpec& spec) {
    check_spec(spec);
    if (!(spec.pv_wh_per_wp > 0.0))
        throw std::invalid_argument("synth: pv_wh_per_wp must be positive");

    std::mt19937_64 rng(spec.seed + 1);
    std::vector<double> v(spec.steps);

    double cloud = 0.8;  // slow multiplicative cloud state in [0.15, 1]
    for (size_t t = 0; t < spec.steps; ++t) {
        double hours = static_cast<double>(t) * spec.dt_hours;
        double hod = std::fmod(hours, 24.0);
        int day = static_cast<int>(hours / 24.0);

        // Day length and amplitude vary over the season; day 80 ~ equinox.
        double season = std::sin(2.0 * kPi * (static_cast<double>(day) - 80.0) / 365.0);
        double half_width = 6.0 + 1.8 * season;      // hours of daylight around noon
        double amplitude = 0.78 + 0.22 * season;

        double x = (hod - 12.5) / half_width;
        double envelope = (std::abs(x) < 1.0) ? std::pow(std::cos(0.5 * kPi * x), 1.4) : 0.0;

        // Cloud noise: slow AR(1) state plus occasional fast dips.
        cloud = 0.92 * cloud + 0.08 * (0.15 + 0.85 * next_uniform(rng));
        double dip = (next_uniform(rng) < 0.04) ? 0.5 + 0.5 * next_uniform(rng) : 1.0;

        v[t] = amplitude * envelope * cloud * dip;
    }
    rescale_to_target(v, spec.dt_hours, spec.pv_wh_per_wp);

    Profile p;
    p.kind = ProfileKind::PvNormalized;
    p.values = std::move(v);
    p.dt_hours = spec.dt_hours;
    p.start_label = "synthetic";
    validate_profile(p);
    return p;
}

} // namespace pvbess
