#pragma once

#include <vector>

#include "simplicial/problem.hpp"
#include "simplicial/weights.hpp"

namespace simplicial {

/// A strongly convex C1 scalar function with its convexity parameter; the
/// weighted combination sum w_i f_i carries alpha = sum w_i alpha_i.
struct ScalarObjective {
    std::function<scalar_t(const vector_t&)> evaluate;
    std::function<vector_t(const vector_t&)> gradient;
    std::function<matrix_t(const vector_t&)> hessian;  // empty if any active objective is C1 only
    scalar_t alpha = 0;

    bool has_hessian() const { return static_cast<bool>(hessian); }
};

/// Solver result with an a-posteriori error radius: strong convexity gives
/// |x - x_true| <= |grad F(x)| / alpha, so error_radius = gradient_norm / alpha
/// and convergence is declared once gradient_norm <= alpha * tol_x.
struct CertifiedMinimizer {
    vector_t x;
    scalar_t gradient_norm = 0;
    scalar_t error_radius = 0;
    int iterations = 0;
    bool converged = false;
};

/// Objective values at x0 and after each accepted step, for descent checks.
struct MinimizeTrace {
    std::vector<scalar_t> objective_values;
};

/// The combination sum w_i f_i over the support of w. A Hessian is exposed
/// only when every supported objective provides one.
ScalarObjective weighted_objective(const ProblemInstance& problem, const WeightVector& w);

inline constexpr scalar_t kDefaultTolX = 1e-8;
inline constexpr int kDefaultMaxIter = 10'000;

/// Minimizes a strongly convex objective: Newton steps (when a Hessian is
/// available and the step passes the line search) with gradient-descent
/// fallback, Armijo backtracking by halving. Deterministic.
CertifiedMinimizer minimize(const ScalarObjective& objective, const vector_t& x0,
                            scalar_t tol_x = kDefaultTolX, int max_iter = kDefaultMaxIter,
                            MinimizeTrace* trace = nullptr);

}  // namespace simplicial
