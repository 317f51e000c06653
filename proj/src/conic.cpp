#include "pvbess/conic.hpp"

#include <cmath>
#include <stdexcept>

#include "pvbess/io_util.hpp"

namespace pvbess {

void ConicProgram::check_var(int idx, const char* what) const {
    if (idx < 0 || idx >= num_vars())
        throw std::invalid_argument(std::string(what) + ": variable index out of range");
}

int ConicProgram::add_variable(double lower, double upper, double objective_coeff) {
    if (lower > upper) throw std::invalid_argument("add_variable: lower > upper");
    if (std::isnan(lower) || std::isnan(upper) || !std::isfinite(objective_coeff))
        throw std::invalid_argument("add_variable: invalid bound or coefficient");
    lower_.push_back(lower);
    upper_.push_back(upper);
    obj_coeffs_.push_back(objective_coeff);
    return num_vars() - 1;
}

int ConicProgram::add_linear(LinearConstraint c) {
    for (const auto& [idx, coeff] : c.terms) {
        check_var(idx, "add_linear");
        if (!std::isfinite(coeff)) throw std::invalid_argument("add_linear: non-finite coefficient");
    }
    if (!std::isfinite(c.rhs)) throw std::invalid_argument("add_linear: non-finite rhs");
    lin_.push_back(std::move(c));
    return static_cast<int>(lin_.size()) - 1;
}

int ConicProgram::add_linear(std::vector<std::pair<int, double>> terms, Relation rel, double rhs) {
    return add_linear(LinearConstraint{std::move(terms), rel, rhs});
}

int ConicProgram::add_rsoc(int u, int v, AffineExpr w) {
    check_var(u, "add_rsoc");
    check_var(v, "add_rsoc");
    for (const auto& [idx, coeff] : w.terms) {
        check_var(idx, "add_rsoc");
        if (!std::isfinite(coeff)) throw std::invalid_argument("add_rsoc: non-finite coefficient");
    }
    if (!std::isfinite(w.constant)) throw std::invalid_argument("add_rsoc: non-finite constant");
    if (lower_[u] < 0.0) lower_[u] = 0.0;
    if (lower_[v] < 0.0) lower_[v] = 0.0;
    rsoc_.push_back(RsocConstraint{u, v, std::move(w)});
    return static_cast<int>(rsoc_.size()) - 1;
}

void ConicProgram::set_bounds(int var, double lower, double upper) {
    check_var(var, "set_bounds");
    if (lower > upper) throw std::invalid_argument("set_bounds: lower > upper");
    lower_[var] = lower;
    upper_[var] = upper;
}

double ConicProgram::evaluate_objective(const std::vector<double>& x) const {
    double obj = obj_constant_;
    for (int i = 0; i < num_vars(); ++i) obj += obj_coeffs_[i] * x[i];
    return obj;
}

void ConicProgram::dump(std::ostream& os) const {
    auto expr = [&](const std::vector<std::pair<int, double>>& terms) {
        std::string s;
        for (const auto& [idx, c] : terms) {
            if (!s.empty()) s += " + ";
            s += format_double(c) + "*x" + std::to_string(idx);
        }
        return s.empty() ? std::string("0") : s;
    };
    os << "vars " << num_vars() << "\n";
    for (int i = 0; i < num_vars(); ++i)
        os << "bound x" << i << " in [" << format_double(lower_[i]) << ", "
           << format_double(upper_[i]) << "] obj " << format_double(obj_coeffs_[i]) << "\n";
    for (const auto& c : lin_) {
        const char* rel = c.rel == Relation::Eq ? "==" : (c.rel == Relation::Le ? "<=" : ">=");
        os << "lin " << expr(c.terms) << " " << rel << " " << format_double(c.rhs) << "\n";
    }
    for (const auto& c : rsoc_) {
        os << "rsoc x" << c.u << " * x" << c.v << " >= (" << expr(c.w.terms);
        if (c.w.constant != 0.0) os << " + " << format_double(c.w.constant);
        os << ")^2\n";
    }
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::NumericalFailure: return "numerical_failure";
        case SolveStatus::IterationLimit: return "iteration_limit";
    }
    return "unknown";
}

FeasibilityReport check_solution(const ConicProgram& prog, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != prog.num_vars())
        throw std::invalid_argument("check_solution: size mismatch");

    FeasibilityReport rep;
    for (int i = 0; i < prog.num_vars(); ++i) {
        if (std::isfinite(prog.lower(i)))
            rep.max_bound_violation = std::max(rep.max_bound_violation, prog.lower(i) - x[i]);
        if (std::isfinite(prog.upper(i)))
            rep.max_bound_violation = std::max(rep.max_bound_violation, x[i] - prog.upper(i));
    }

    for (const auto& c : prog.linear_constraints()) {
        double lhs = 0.0, scale = 1.0;
        for (const auto& [idx, coeff] : c.terms) {
            lhs += coeff * x[idx];
            scale = std::max(scale, std::abs(coeff * x[idx]));
        }
        scale = std::max(scale, std::abs(c.rhs));
        double resid = lhs - c.rhs;
        double viol = 0.0;
        switch (c.rel) {
            case Relation::Eq: viol = std::abs(resid); break;
            case Relation::Le: viol = std::max(0.0, resid); break;
            case Relation::Ge: viol = std::max(0.0, -resid); break;
        }
        rep.max_linear_violation = std::max(rep.max_linear_violation, viol / scale);
    }

    for (const auto& c : prog.rsoc_constraints()) {
        double w = c.w.constant;
        for (const auto& [idx, coeff] : c.w.terms) w += coeff * x[idx];
        double u = x[c.u], v = x[c.v];
        double viol = std::max({w * w - u * v, -u, -v});
        rep.max_cone_violation =
            std::max(rep.max_cone_violation, viol / std::max(1.0, w * w));
    }

    rep.objective = prog.evaluate_objective(x);
    return rep;
}

} // namespace pvbess
