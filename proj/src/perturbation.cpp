#include "simplicial/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "simplicial/format.hpp"
#include "simplicial/random.hpp"

namespace simplicial {

LinearPerturbation::LinearPerturbation(matrix_t matrix, std::vector<index_t> zero_rows)
    : matrix_(std::move(matrix)), zero_rows_(std::move(zero_rows)) {
    for (std::size_t i = 0; i < zero_rows_.size(); ++i) {
        const index_t row = zero_rows_[i];
        if (row < 0 || row >= matrix_.rows())
            throw std::invalid_argument("LinearPerturbation: zero row out of range");
        if (i > 0 && zero_rows_[i] <= zero_rows_[i - 1])
            throw std::invalid_argument("LinearPerturbation: zero rows must be strictly increasing");
        if (!matrix_.row(row).isZero(0.0))
            throw std::invalid_argument("LinearPerturbation: pinned row is not exactly zero");
    }
}

ProblemInstance apply_perturbation(const ProblemInstance& problem, const LinearPerturbation& pi) {
    if (pi.m() != problem.m() || pi.n() != problem.n())
        throw std::invalid_argument("apply_perturbation: shape mismatch");
    std::vector<ObjectiveSpec> perturbed;
    perturbed.reserve(static_cast<std::size_t>(problem.m()));
    for (index_t i = 0; i < problem.m(); ++i) {
        const ObjectiveSpec& base = problem.objective(i);
        const vector_t row = pi.matrix().row(i).transpose();
        ObjectiveSpec shifted = base;
        if (!row.isZero(0.0)) {
            shifted.evaluate = [base, row](const vector_t& x) -> scalar_t {
                return base.evaluate(x) + row.dot(x);
            };
            shifted.gradient = [base, row](const vector_t& x) -> vector_t {
                return base.gradient(x) + row;
            };
            // Hessian and alpha carry over unchanged.
        }
        perturbed.push_back(std::move(shifted));
    }
    return ProblemInstance(problem.name() + "+pi", problem.n(), std::move(perturbed));
}

LinearPerturbation sample_perturbation(index_t m, index_t n, const std::vector<index_t>& zero_rows,
                                       scalar_t scale, std::uint64_t seed) {
    if (!(scale > 0)) throw std::invalid_argument("sample_perturbation: scale must be positive");
    Rng rng(seed);
    matrix_t matrix = matrix_t::Zero(m, n);
    for (index_t i = 0; i < m; ++i) {
        if (std::find(zero_rows.begin(), zero_rows.end(), i) != zero_rows.end()) continue;
        matrix.row(i) = rng.uniform_vector(n, -scale, scale).transpose();
    }
    return LinearPerturbation(std::move(matrix), zero_rows);
}

GenericityStats genericity_experiment(const ProblemInstance& problem,
                                      const std::vector<index_t>& zero_rows, int trials,
                                      int resolution, scalar_t tol_x, std::uint64_t seed,
                                      scalar_t scale, scalar_t rank_threshold) {
    if (trials < 1) throw std::invalid_argument("genericity_experiment: trials must be >= 1");
    const index_t m = problem.m();
    const index_t n = problem.n();

    GenericityStats stats;
    stats.trials = trials;
    stats.hypothesis_met = (n - 2 * m + 4) > 0;
    stats.worst_min_singular_gap = std::numeric_limits<scalar_t>::infinity();

    const std::vector<WeightVector> grid = simplex_grid(m, resolution);
    const index_t free_rows = m - static_cast<index_t>(zero_rows.size());

    for (int trial = 0; trial < trials; ++trial) {
        GenericityTrial record;
        record.index = trial;
        record.seed = derive_stream(seed, static_cast<std::uint64_t>(trial));

        const LinearPerturbation pi = sample_perturbation(m, n, zero_rows, scale, record.seed);
        record.perturbation = pi.matrix();
        const ProblemInstance perturbed = apply_perturbation(problem, pi);
        const std::vector<ParetoSample> samples =
            sample_pareto(perturbed, grid, tol_x, rank_threshold);

        record.converged = all_converged(samples);
        scalar_t min_gap = std::numeric_limits<scalar_t>::infinity();
        bool held = true;
        for (const ParetoSample& sample : samples) {
            held = held && (sample.jacobian_rank == m - 1);
            if (m >= 2) {
                const vector_t sigma = jacobian_singular_values(perturbed, sample.x);
                if (sigma.size() >= m - 1 && sigma[0] > 0)
                    min_gap = std::min(min_gap, sigma[m - 2] / sigma[0]);
                else
                    min_gap = 0;
            }
        }
        if (!std::isfinite(min_gap)) min_gap = 1.0;
        record.min_singular_gap = min_gap;
        record.rank_condition_held = held;

        if (!record.converged) {
            ++stats.inconclusive;
        } else if (held) {
            ++stats.successes;
        } else {
            ++stats.failures;
            // With a single free row the failure mode of interest is a
            // segment Pareto set toward the free minimizer; record it.
            if (free_rows == 1) {
                index_t free_row = 0;
                for (index_t i = 0; i < m; ++i)
                    if (std::find(zero_rows.begin(), zero_rows.end(), i) == zero_rows.end())
                        free_row = i;
                const ScalarObjective free_objective =
                    weighted_objective(perturbed, WeightVector::vertex(m, free_row));
                const CertifiedMinimizer p = minimize(free_objective, vector_t::Zero(n), tol_x);
                if (p.converged && p.x.norm() > 0)
                    record.segment = segment_check(samples, p.x, 1e-6,
                                                   1.5 / static_cast<scalar_t>(resolution));
            }
        }
        stats.worst_min_singular_gap = std::min(stats.worst_min_singular_gap, min_gap);
        stats.trial_records.push_back(std::move(record));
    }
    if (!std::isfinite(stats.worst_min_singular_gap)) stats.worst_min_singular_gap = 1.0;
    return stats;
}

CheckResult segment_check(const std::vector<ParetoSample>& samples, const vector_t& p,
                          scalar_t tol, scalar_t max_gap) {
    if (p.norm() == 0) throw std::invalid_argument("segment_check: p must be non-zero");
    CheckResult result{"segment", true, 0, "",
                       "worst_case = max distance to the segment {t p : t in [0,1]}; coverage "
                       "gap bound " + format_double(max_gap) + "."};
    const scalar_t p_norm2 = p.squaredNorm();
    std::vector<scalar_t> ts;
    ts.reserve(samples.size());
    for (const ParetoSample& sample : samples) {
        const scalar_t t = std::clamp(sample.x.dot(p) / p_norm2, 0.0, 1.0);
        ts.push_back(t);
        const scalar_t distance = (sample.x - t * p).norm();
        if (distance > result.worst_case) {
            result.worst_case = distance;
            result.witness = "x=" + format_vector(sample.x);
        }
    }
    if (result.worst_case > tol) result.passed = false;

    std::sort(ts.begin(), ts.end());
    scalar_t coverage_gap = ts.empty() ? 1.0 : std::max(ts.front() - 0.0, 1.0 - ts.back());
    for (std::size_t i = 1; i < ts.size(); ++i)
        coverage_gap = std::max(coverage_gap, ts[i] - ts[i - 1]);
    if (coverage_gap > max_gap) {
        result.passed = false;
        result.details += " coverage gap " + format_double(coverage_gap) + " exceeds bound.";
    }
    return result;
}

}  // namespace simplicial
