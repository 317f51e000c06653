#include "pvbess/loss_models.hpp"

#include <cmath>
#include <stdexcept>

namespace pvbess {

std::pair<double, double> fit_battery_efficiency(
    const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("battery fit: need at least 2 points");

    double cmin = points.front().first, cmax = points.front().first;
    for (const auto& [c, eta] : points) {
        if (!(eta > 0.0) || eta > 1.0)
            throw std::invalid_argument("battery fit: efficiency out of (0, 1]");
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
    }
    if (!(cmax > cmin))
        throw std::invalid_argument("battery fit: insufficient distinct C-rates");

    double n = static_cast<double>(points.size());
    double sum_c = 0.0, sum_e = 0.0;
    for (const auto& [c, eta] : points) { sum_c += c; sum_e += eta; }
    double mean_c = sum_c / n, mean_e = sum_e / n;

    double sxx = 0.0, sxy = 0.0;
    for (const auto& [c, eta] : points) {
        sxx += (c - mean_c) * (c - mean_c);
        sxy += (c - mean_c) * (eta - mean_e);
    }
    double beta = sxy / sxx;
    double alpha = mean_e - beta * mean_c;
    return {alpha, beta};
}

BatteryLossParams derive_battery_loss_params(double alpha, double beta, double ts_hours) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("battery params: alpha must be in (0, 1]");
    if (!(beta < 0.0))
        throw std::invalid_argument("battery params: beta must be negative");
    if (!(ts_hours > 0.0))
        throw std::invalid_argument("battery params: ts_hours must be positive");

    BatteryLossParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.ts_hours = ts_hours;
    p.lambda = 1.0 - alpha;
    p.gamma = -beta * ts_hours;
    return p;
}

ConverterLossParams make_converter_loss_params(double a, double b, double c, double p_nom_og) {
    if (!(p_nom_og > 0.0))
        throw std::invalid_argument("converter params: p_nom_og must be positive");
    if (a < 0.0) throw std::invalid_argument("converter params: a must be >= 0");
    if (b < 0.0 || b >= 1.0)
        throw std::invalid_argument("converter params: b must be in [0, 1)");
    if (!(c > 0.0)) throw std::invalid_argument("converter params: c must be positive");

    ConverterLossParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.p_nom_og = p_nom_og;
    p.a_tilde = a / p_nom_og;
    p.c_tilde = c * p_nom_og;
    return p;
}

LinearEfficiency make_linear_efficiency(double eta) {
    if (!(eta > 0.0) || eta > 1.0)
        throw std::invalid_argument("linear efficiency must be in (0, 1]");
    return LinearEfficiency{eta};
}

double battery_loss_exact(double p, double e_nom, const BatteryLossParams& params) {
    if (!(e_nom > 0.0)) throw std::invalid_argument("battery loss: e_nom must be positive");
    return params.lambda * p + params.gamma * p * p / e_nom;
}

double converter_loss_exact(double p, double p_nom, const ConverterLossParams& params) {
    if (p_nom == 0.0) {
        if (p == 0.0) return 0.0;  // component absent
        throw std::invalid_argument("converter loss: p > 0 at zero rating");
    }
    return p_nom * params.a_tilde + params.b * p + params.c_tilde * p * p / p_nom;
}

double converter_loss_linear(double p, const LinearEfficiency& eff) {
    return (1.0 - eff.eta) * p;
}

double battery_loss_linear(double p, const LinearEfficiency& eff) {
    return (1.0 - eff.eta) * p;
}

double best_point_efficiency(const ConverterLossParams& params) {
    return 1.0 - params.b - 2.0 * std::sqrt(params.a_tilde * params.c_tilde);
}

double best_point_efficiency(const BatteryLossParams& params) {
    return params.alpha;
}

} // namespace pvbess
