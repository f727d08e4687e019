#include "simplicial/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/SVD>

namespace simplicial {

index_t numerical_rank(const matrix_t& matrix, scalar_t threshold) {
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw std::invalid_argument("numerical_rank: threshold must lie in (0, 1)");
    Eigen::JacobiSVD<matrix_t> svd(matrix);
    const vector_t sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma[0] == 0.0) return 0;
    index_t rank = 0;
    for (index_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] > threshold * sigma[0]) ++rank;
    return rank;
}

vector_t jacobian_singular_values(const ProblemInstance& problem, const vector_t& x) {
    Eigen::JacobiSVD<matrix_t> svd(jacobian(problem, x));
    return svd.singularValues();
}

ParetoSample x_star(const ProblemInstance& problem, const WeightVector& w, scalar_t tol_x,
                    scalar_t rank_threshold, const std::optional<vector_t>& x0, int max_iter) {
    const ScalarObjective combined = weighted_objective(problem, w);
    const vector_t start = x0 ? *x0 : vector_t(vector_t::Zero(problem.n()));
    const CertifiedMinimizer solution = minimize(combined, start, tol_x, max_iter);

    ParetoSample sample{w, solution.x, evaluate_all(problem, solution.x), 0, 0, 0, false};
    sample.kkt_residual = combined.gradient(solution.x).norm();
    sample.jacobian_rank = numerical_rank(jacobian(problem, solution.x), rank_threshold);
    sample.error_radius = solution.error_radius;
    sample.converged = solution.converged;
    return sample;
}

std::vector<ParetoSample> sample_pareto(const ProblemInstance& problem,
                                        const std::vector<WeightVector>& grid, scalar_t tol_x,
                                        scalar_t rank_threshold) {
    if (grid.empty()) throw std::invalid_argument("sample_pareto: empty grid");
    std::vector<ParetoSample> samples;
    samples.reserve(grid.size());
    std::optional<vector_t> warm;
    for (const WeightVector& w : grid) {
        samples.push_back(x_star(problem, w, tol_x, rank_threshold, warm));
        warm = samples.back().x;
    }
    return samples;
}

bool all_converged(const std::vector<ParetoSample>& samples) {
    return std::all_of(samples.begin(), samples.end(),
                       [](const ParetoSample& s) { return s.converged; });
}

bool BoundingRegion::contains(const vector_t& x, scalar_t slack) const {
    return excess(x) <= slack;
}

scalar_t BoundingRegion::excess(const vector_t& x) const {
    scalar_t best = std::numeric_limits<scalar_t>::infinity();
    for (std::size_t i = 0; i < centers.size(); ++i)
        best = std::min(best, (x - centers[i]).norm() - radii[static_cast<index_t>(i)]);
    return best;
}

BoundingRegion bounding_region(const ProblemInstance& problem, scalar_t tol_x) {
    const index_t m = problem.m();
    BoundingRegion region;
    region.centers.reserve(static_cast<std::size_t>(m));
    region.radii.resize(m);

    for (index_t i = 0; i < m; ++i) {
        const ScalarObjective single = weighted_objective(problem, WeightVector::vertex(m, i));
        const CertifiedMinimizer solution = minimize(single, vector_t::Zero(problem.n()), tol_x);
        if (!solution.converged)
            throw std::runtime_error("bounding_region: objective " + std::to_string(i + 1) +
                                     " did not converge");
        region.centers.push_back(solution.x);
    }

    const vector_t& x1 = region.centers.front();
    region.reference_value = problem.objective(0).evaluate(x1);
    for (index_t i = 0; i < m; ++i) {
        const ObjectiveSpec& objective = problem.objective(i);
        const scalar_t gap = objective.evaluate(x1) - objective.evaluate(region.centers[static_cast<std::size_t>(i)]);
        region.radii[i] = std::sqrt(2.0 * std::max(gap, 0.0) / objective.alpha);
    }
    return region;
}

namespace {

bool dominates_strictly(const vector_t& candidate, const vector_t& point) {
    bool some_strict = false;
    for (index_t i = 0; i < point.size(); ++i) {
        if (candidate[i] > point[i]) return false;
        if (candidate[i] < point[i]) some_strict = true;
    }
    return some_strict;
}

bool dominates_everywhere(const vector_t& candidate, const vector_t& point) {
    for (index_t i = 0; i < point.size(); ++i)
        if (candidate[i] >= point[i]) return false;
    return true;
}

template <typename Dominates>
std::vector<std::size_t> filter(const std::vector<vector_t>& points, Dominates dominated_by) {
    if (!points.empty()) {
        const index_t m = points.front().size();
        for (const vector_t& p : points)
            if (p.size() != m) throw std::invalid_argument("dominance filter: mixed vector lengths");
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j)
            dominated = (j != i) && dominated_by(points[j], points[i]);
        if (!dominated) kept.push_back(i);
    }
    return kept;
}

}  // namespace

std::vector<std::size_t> dominance_filter(const std::vector<vector_t>& points) {
    return filter(points, dominates_strictly);
}

std::vector<std::size_t> weak_dominance_filter(const std::vector<vector_t>& points) {
    return filter(points, dominates_everywhere);
}

std::pair<vector_t, vector_t> one_sided_quotients(const ProblemInstance& problem,
                                                  const WeightVector& from, const WeightVector& to,
                                                  scalar_t s, scalar_t h, scalar_t tol_x) {
    if (!(h > 0)) throw std::invalid_argument("one_sided_quotients: h must be positive");
    if (from.dim() != problem.m() || to.dim() != problem.m())
        throw std::invalid_argument("one_sided_quotients: weight dimension mismatch");
    if (s - h < 0.0 || s + h > 1.0)
        throw std::invalid_argument("one_sided_quotients: s +- h must stay in [0, 1]");

    auto at = [&](scalar_t u) -> vector_t {
        const vector_t coords = (1.0 - u) * from.coordinates() + u * to.coordinates();
        return x_star(problem, WeightVector::normalized(coords), tol_x).x;
    };
    const vector_t center = at(s);
    const vector_t right = (at(s + h) - center) / h;
    const vector_t left = (center - at(s - h)) / h;
    return {left, right};
}

}  // namespace simplicial
