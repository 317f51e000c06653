#pragma once

#include <string>
#include <vector>

namespace pvbess {

enum class ProfileKind { Load, PvNormalized };

// Fixed-resolution time series: household load in W, or normalized PV
// generation in W/Wp. Immutable after construction; all operations return
// new profiles.
struct Profile {
    ProfileKind kind = ProfileKind::Load;
    std::vector<double> values;
    double dt_hours = 0.25;
    std::string start_label;

    size_t size() const { return values.size(); }
    double span_hours() const { return static_cast<double>(values.size()) * dt_hours; }
};

// Throws std::invalid_argument on invariant violations:
// empty, non-finite or negative samples, dt <= 0, pv sample > 1.5.
// PV samples in (1.0, 1.5] are legal (irradiance above STC); the returned
// string is non-empty iff a warning applies.
std::string validate_profile(const Profile& p);

// One numeric sample per row, optional single header line, '.' decimal point.
Profile load_profile_csv(const std::string& path, ProfileKind kind, double dt_hours);

// Writes one sample per row using shortest round-trip formatting.
void save_profile_csv(const Profile& p, const std::string& path);

// Block-averages `factor` consecutive samples; dt grows by `factor`.
// Length must be divisible by `factor`.
Profile resample_average(const Profile& p, size_t factor);

// Total energy sum(values) * dt. Wh for load profiles, Wh/Wp for pv.
double annual_energy(const Profile& p);

} // namespace pvbess
