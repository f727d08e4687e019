#include "simplicial/solver.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>

namespace simplicial {

ScalarObjective weighted_objective(const ProblemInstance& problem, const WeightVector& w) {
    if (w.dim() != problem.m())
        throw std::invalid_argument("weighted_objective: weight/objective count mismatch");

    // Summing over the support only keeps the arithmetic of a face-embedded
    // weight bitwise identical to the corresponding subproblem combination.
    const std::vector<index_t> support = w.support();
    const vector_t weights = w.coordinates();
    const index_t n = problem.n();

    ScalarObjective combined;
    combined.alpha = 0;
    bool hessian_available = true;
    for (index_t i : support) {
        combined.alpha += weights[i] * problem.objective(i).alpha;
        hessian_available = hessian_available && problem.objective(i).has_hessian();
    }

    // The lambdas copy the objective list; ProblemInstance objectives are
    // immutable shared callbacks, so this keeps the combination self-contained.
    auto objectives = problem.objectives();

    combined.evaluate = [objectives, support, weights](const vector_t& x) -> scalar_t {
        scalar_t value = 0;
        for (index_t i : support)
            value += weights[i] * objectives[static_cast<std::size_t>(i)].evaluate(x);
        return value;
    };
    combined.gradient = [objectives, support, weights, n](const vector_t& x) -> vector_t {
        vector_t g = vector_t::Zero(n);
        for (index_t i : support)
            g += weights[i] * objectives[static_cast<std::size_t>(i)].gradient(x);
        return g;
    };
    if (hessian_available) {
        combined.hessian = [objectives, support, weights, n](const vector_t& x) -> matrix_t {
            matrix_t H = matrix_t::Zero(n, n);
            for (index_t i : support)
                H += weights[i] * objectives[static_cast<std::size_t>(i)].hessian(x);
            return H;
        };
    }
    return combined;
}

namespace {

constexpr scalar_t kArmijoSlope = 1e-4;
constexpr int kMaxHalvings = 60;

// Backtracking by halving from t = 1. Returns the accepted step length, or 0
// if no decrease was found down to 2^-60 (iterate numerically optimal).
scalar_t armijo_step(const ScalarObjective& objective, const vector_t& x, scalar_t fx,
                     const vector_t& direction, scalar_t directional_derivative, vector_t& x_next,
                     scalar_t& fx_next) {
    scalar_t t = 1.0;
    for (int halving = 0; halving < kMaxHalvings; ++halving) {
        x_next = x + t * direction;
        fx_next = objective.evaluate(x_next);
        if (fx_next <= fx + kArmijoSlope * t * directional_derivative) return t;
        t *= 0.5;
    }
    return 0.0;
}

}  // namespace

CertifiedMinimizer minimize(const ScalarObjective& objective, const vector_t& x0, scalar_t tol_x,
                            int max_iter, MinimizeTrace* trace) {
    if (!(tol_x > 0)) throw std::invalid_argument("minimize: tol_x must be positive");
    if (!(objective.alpha > 0)) throw std::invalid_argument("minimize: alpha must be positive");

    CertifiedMinimizer result;
    result.x = x0;
    scalar_t fx = objective.evaluate(result.x);
    vector_t g = objective.gradient(result.x);
    result.gradient_norm = g.norm();
    if (trace) trace->objective_values.push_back(fx);

    const scalar_t gradient_tol = objective.alpha * tol_x;
    vector_t x_next(x0.size());

    while (result.gradient_norm > gradient_tol && result.iterations < max_iter) {
        vector_t direction = -g;
        scalar_t slope = -result.gradient_norm * result.gradient_norm;
        if (objective.has_hessian()) {
            const matrix_t H = objective.hessian(result.x);
            Eigen::LLT<matrix_t> llt(H);
            if (llt.info() == Eigen::Success) {
                const vector_t newton = -llt.solve(g);
                const scalar_t newton_slope = g.dot(newton);
                if (newton_slope < 0) {
                    direction = newton;
                    slope = newton_slope;
                }
            }
        }

        scalar_t fx_next = fx;
        const scalar_t step = armijo_step(objective, result.x, fx, direction, slope, x_next, fx_next);
        if (step == 0.0) break;  // no further decrease representable

        result.x = x_next;
        fx = fx_next;
        g = objective.gradient(result.x);
        result.gradient_norm = g.norm();
        ++result.iterations;
        if (trace) trace->objective_values.push_back(fx);
    }

    result.error_radius = result.gradient_norm / objective.alpha;
    result.converged = result.gradient_norm <= gradient_tol;
    return result;
}

}  // namespace simplicial
