#pragma once

#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace pvbess {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Sparse affine expression sum(coeff_i * x_i) + constant.
struct AffineExpr {
    std::vector<std::pair<int, double>> terms;
    double constant = 0.0;

    AffineExpr() = default;
    AffineExpr(double c) : constant(c) {}
    static AffineExpr var(int idx, double coeff = 1.0) {
        AffineExpr e;
        e.terms.emplace_back(idx, coeff);
        return e;
    }
    void add(int idx, double coeff) { terms.emplace_back(idx, coeff); }
};

enum class Relation { Eq, Le, Ge };

struct LinearConstraint {
    std::vector<std::pair<int, double>> terms;
    Relation rel = Relation::Eq;
    double rhs = 0.0;
};

// u * v >= w^2 with u, v >= 0. u and v are program variables, w is affine.
struct RsocConstraint {
    int u = -1;
    int v = -1;
    AffineExpr w;
};

// Linear objective over linear constraints, variable bounds, and rotated
// second-order cones. Construction is single-writer; solving never mutates.
class ConicProgram {
  public:
    int add_variable(double lower, double upper, double objective_coeff = 0.0);
    int add_linear(LinearConstraint c);
    int add_linear(std::vector<std::pair<int, double>> terms, Relation rel, double rhs);
    // Tightens unbounded-below u/v to lower bound 0 (cone membership implies it).
    int add_rsoc(int u, int v, AffineExpr w);

    void set_objective_constant(double c) { obj_constant_ = c; }
    void set_bounds(int var, double lower, double upper);

    int num_vars() const { return static_cast<int>(lower_.size()); }
    double lower(int i) const { return lower_[i]; }
    double upper(int i) const { return upper_[i]; }
    double objective_coeff(int i) const { return obj_coeffs_[i]; }
    double objective_constant() const { return obj_constant_; }
    const std::vector<LinearConstraint>& linear_constraints() const { return lin_; }
    const std::vector<RsocConstraint>& rsoc_constraints() const { return rsoc_; }

    double evaluate_objective(const std::vector<double>& x) const;

    // One constraint per line; debugging aid, not a stability contract.
    void dump(std::ostream& os) const;

  private:
    void check_var(int idx, const char* what) const;

    std::vector<double> lower_, upper_, obj_coeffs_;
    double obj_constant_ = 0.0;
    std::vector<LinearConstraint> lin_;
    std::vector<RsocConstraint> rsoc_;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, NumericalFailure, IterationLimit };

std::string to_string(SolveStatus s);

struct ConicSolution {
    SolveStatus status = SolveStatus::NumericalFailure;
    double objective_value = 0.0;
    std::vector<double> var_values;
    double solve_time_s = 0.0;
    int iterations = 0;
    // Residuals achieved by the solver, for diagnostics.
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double duality_gap = 0.0;
};

// Re-evaluates every bound, linear constraint, and cone from the raw program
// data; independent of any solver internals.
struct FeasibilityReport {
    double max_bound_violation = 0.0;      // absolute
    double max_linear_violation = 0.0;     // relative to row scale
    double max_cone_violation = 0.0;       // relative: (w^2 - u*v) / max(1, w^2)
    double objective = 0.0;                // recomputed c'x + constant
    bool within(double tol) const {
        return max_bound_violation <= tol && max_linear_violation <= tol &&
               max_cone_violation <= tol;
    }
};

FeasibilityReport check_solution(const ConicProgram& prog, const std::vector<double>& x);

} // namespace pvbess
