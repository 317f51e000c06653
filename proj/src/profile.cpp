#include "pvbess/profile.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pvbess/io_util.hpp"

namespace pvbess {

std::string validate_profile(const Profile& p) {
    if (p.values.empty()) throw std::invalid_argument("profile is empty");
    if (!(p.dt_hours > 0.0) || !std::isfinite(p.dt_hours))
        throw std::invalid_argument("profile dt_hours must be positive");
    std::string warning;
    for (size_t i = 0; i < p.values.size(); ++i) {
        double v = p.values[i];
        if (!std::isfinite(v))
            throw std::invalid_argument("non-finite sample at row " + std::to_string(i + 1));
        if (v < 0.0)
            throw std::invalid_argument("negative sample at row " + std::to_string(i + 1));
        if (p.kind == ProfileKind::PvNormalized) {
            if (v > 1.5)
                throw std::invalid_argument("pv sample " + format_double(v) + " at row " +
                                            std::to_string(i + 1) + " exceeds 1.5 W/Wp");
            if (v > 1.0 && warning.empty())
                warning = "pv sample above 1.0 W/Wp at row " + std::to_string(i + 1) +
                          " (allowed up to 1.5)";
        }
    }
    return warning;
}

Profile load_profile_csv(const std::string& path, ProfileKind kind, double dt_hours) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file: " + path);

    Profile p;
    p.kind = kind;
    p.dt_hours = dt_hours;

    std::string line;
    size_t row = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        double v;
        if (!parse_double(line, v)) {
            if (first) { first = false; continue; }  // single header line allowed
            throw std::runtime_error("parse failure at row " + std::to_string(row) +
                                     " of " + path + ": '" + line + "'");
        }
        first = false;
        if (!std::isfinite(v))
            throw std::runtime_error("non-finite sample at row " + std::to_string(row));
        if (v < 0.0)
            throw std::runtime_error("negative sample at row " + std::to_string(row));
        p.values.push_back(v);
    }
    if (p.values.empty()) throw std::runtime_error("empty profile file: " + path);
    validate_profile(p);
    return p;
}

void save_profile_csv(const Profile& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write profile file: " + path);
    for (double v : p.values) out << format_double(v) << '\n';
}

Profile resample_average(const Profile& p, size_t factor) {
    if (factor == 0) throw std::invalid_argument("resample factor must be positive");
    if (p.values.size() % factor != 0)
        throw std::invalid_argument("profile length " + std::to_string(p.values.size()) +
                                    " not divisible by resample factor " + std::to_string(factor));
    if (factor == 1) return p;

    Profile out;
    out.kind = p.kind;
    out.dt_hours = p.dt_hours * static_cast<double>(factor);
    out.start_label = p.start_label;
    out.values.reserve(p.values.size() / factor);
    for (size_t i = 0; i < p.values.size(); i += factor) {
        double sum = 0.0;
        for (size_t j = 0; j < factor; ++j) sum += p.values[i + j];
        out.values.push_back(sum / static_cast<double>(factor));
    }
    return out;
}

double annual_energy(const Profile& p) {
    double sum = 0.0;
    for (double v : p.values) sum += v;
    return sum * p.dt_hours;
}

} // namespace pvbess
