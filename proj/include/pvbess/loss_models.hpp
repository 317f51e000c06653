#pragma once

#include <utility>
#include <vector>

namespace pvbess {

// Quadratic battery cell loss model:  loss(p) = lambda*p + gamma*p^2/e_nom.
// Derived from an efficiency line eta(C) = alpha + beta*C fitted on cell
// measurements; lambda = 1 - alpha, gamma = -beta * ts_hours.
struct BatteryLossParams {
    double alpha = 0.995;
    double beta = -0.025;
    double ts_hours = 1.0;  // converts the fitted per-sample C coefficient to hours
    double lambda = 0.005;
    double gamma = 0.025;   // h
};

// Quadratic converter loss model fitted at rating p_nom_og and rescaled to an
// arbitrary rating:  loss(p, p_nom) = p_nom*a_tilde + b*p + c_tilde*p^2/p_nom.
struct ConverterLossParams {
    double a = 0.0;         // W, constant loss at the original rating
    double b = 0.0;         // dimensionless linear coefficient
    double c = 0.0;         // 1/W, quadratic coefficient at the original rating
    double p_nom_og = 0.0;  // W, rating the fit was made at
    double a_tilde = 0.0;   // a / p_nom_og
    double c_tilde = 0.0;   // c * p_nom_og
};

struct LinearEfficiency {
    double eta = 1.0;  // in (0, 1]
};

// Ordinary least squares line eta = alpha + beta*C through (c_rate, efficiency)
// points. Requires >= 2 distinct c_rates and efficiencies in (0, 1].
std::pair<double, double> fit_battery_efficiency(
    const std::vector<std::pair<double, double>>& points);

// Validates and fills the derived coefficients. Requires 0 < alpha <= 1,
// beta < 0, ts_hours > 0.
BatteryLossParams derive_battery_loss_params(double alpha, double beta, double ts_hours);

// Validates and fills a_tilde/c_tilde. Requires p_nom_og > 0, a >= 0,
// 0 <= b < 1, c > 0.
ConverterLossParams make_converter_loss_params(double a, double b, double c, double p_nom_og);

LinearEfficiency make_linear_efficiency(double eta);

// Cell loss in W at charge or discharge power p (W) and rated energy e_nom (Wh).
double battery_loss_exact(double p, double e_nom, const BatteryLossParams& params);

// Converter loss in W at throughput p (W) and rating p_nom (W). Zero-rated
// idle converters (p == 0, p_nom == 0) are legal and lose nothing; p > 0 at
// p_nom == 0 is an error. p above p_nom is evaluated as-is (solver tolerance
// can overshoot the rating slightly).
double converter_loss_exact(double p, double p_nom, const ConverterLossParams& params);

double converter_loss_linear(double p, const LinearEfficiency& eff);
double battery_loss_linear(double p, const LinearEfficiency& eff);

// Highest efficiency the quadratic model attains over p in (0, p_nom]:
// 1 - b - 2*sqrt(a_tilde*c_tilde), independent of the rating. Used as the
// default constant efficiency of the linear formulation so linear losses
// never exceed quadratic losses at any operating point.
double best_point_efficiency(const ConverterLossParams& params);

// Battery counterpart: the C->0 limit of eta(C), i.e. alpha.
double best_point_efficiency(const BatteryLossParams& params);

} // namespace pvbess
