#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "simplicial/problem.hpp"
#include "simplicial/solver.hpp"
#include "simplicial/weights.hpp"

namespace simplicial {

inline constexpr scalar_t kDefaultRankThreshold = 1e-8;

/// One evaluation of the scalarization map: the weight, the computed
/// minimizer of sum w_i f_i, its image, and the optimality diagnostics.
struct ParetoSample {
    WeightVector w;
    vector_t x;
    vector_t f_values;
    scalar_t kkt_residual = 0;  // |sum w_i grad f_i(x)|
    index_t jacobian_rank = 0;  // numerical rank of df_x
    scalar_t error_radius = 0;
    bool converged = false;
};

/// Numerical rank: count of singular values above threshold * sigma_max;
/// rank 0 when sigma_max == 0.
index_t numerical_rank(const matrix_t& matrix, scalar_t threshold = kDefaultRankThreshold);

/// Singular values of df_x in descending order (for rank diagnostics).
vector_t jacobian_singular_values(const ProblemInstance& problem, const vector_t& x);

/// Evaluates x*(w) = argmin sum w_i f_i by a certified solve started at x0
/// (default 0). Non-convergence is reported through the sample, not thrown.
ParetoSample x_star(const ProblemInstance& problem, const WeightVector& w,
                    scalar_t tol_x = kDefaultTolX,
                    scalar_t rank_threshold = kDefaultRankThreshold,
                    const std::optional<vector_t>& x0 = std::nullopt,
                    int max_iter = kDefaultMaxIter);

/// One sample per grid weight, each solve warm-started from the previous
/// solution in grid order; deterministic given the grid.
std::vector<ParetoSample> sample_pareto(const ProblemInstance& problem,
                                        const std::vector<WeightVector>& grid,
                                        scalar_t tol_x = kDefaultTolX,
                                        scalar_t rank_threshold = kDefaultRankThreshold);

bool all_converged(const std::vector<ParetoSample>& samples);

/// Union of the balls Omega_i = {x : f_i(x_i) + (alpha_i/2)|x - x_i|^2 <= f_i(x_1)}
/// around the per-objective minimizers x_i; the Pareto set lies inside it.
struct BoundingRegion {
    std::vector<vector_t> centers;  // certified minimizer of each objective
    vector_t radii;                 // sqrt(2 (f_i(x_1) - f_i(x_i)) / alpha_i)
    scalar_t reference_value = 0;   // f_1(x_1)

    /// Membership with an optional additive slack on each radius.
    bool contains(const vector_t& x, scalar_t slack = 0.0) const;

    /// min over i of |x - x_i| - r_i; <= 0 inside.
    scalar_t excess(const vector_t& x) const;
};

/// Solves every single-objective problem and assembles the region; throws
/// std::runtime_error if any per-objective solve fails to converge.
BoundingRegion bounding_region(const ProblemInstance& problem, scalar_t tol_x = kDefaultTolX);

/// Indices of the non-dominated vectors under the strict Pareto definition
/// (no other point <= everywhere and < somewhere). O(N^2) pairwise scan.
std::vector<std::size_t> dominance_filter(const std::vector<vector_t>& points);

/// Indices of the weakly non-dominated vectors (no other point < everywhere).
/// Always a superset of dominance_filter's result.
std::vector<std::size_t> weak_dominance_filter(const std::vector<vector_t>& points);

/// One-sided difference quotients of s -> x*((1-s) from + s to) at parameter s:
/// (left, right) where left = (x(s) - x(s-h))/h and right = (x(s+h) - x(s))/h.
std::pair<vector_t, vector_t> one_sided_quotients(const ProblemInstance& problem,
                                                  const WeightVector& from, const WeightVector& to,
                                                  scalar_t s, scalar_t h,
                                                  scalar_t tol_x = kDefaultTolX);

}  // namespace simplicial
