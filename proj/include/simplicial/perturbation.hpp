#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simplicial/pareto.hpp"
#include "simplicial/verify.hpp"

namespace simplicial {

/// A linear map added componentwise to the objectives: row i is the linear
/// form added to f_i. Rows listed in zero_rows are pinned to exact zeros,
/// modelling the subspace of perturbations that leave those components fixed.
class LinearPerturbation {
public:
    /// Validates the zero rows are exactly zero and sorted in range.
    LinearPerturbation(matrix_t matrix, std::vector<index_t> zero_rows);

    const matrix_t& matrix() const { return matrix_; }
    const std::vector<index_t>& zero_rows() const { return zero_rows_; }
    index_t m() const { return matrix_.rows(); }
    index_t n() const { return matrix_.cols(); }

private:
    matrix_t matrix_;
    std::vector<index_t> zero_rows_;
};

/// f + pi: objective i becomes f_i + <row_i, .>, same alpha_i (linear terms
/// do not change the convexity parameter), gradients shifted by row_i,
/// Hessians unchanged.
ProblemInstance apply_perturbation(const ProblemInstance& problem, const LinearPerturbation& pi);

/// Free rows i.i.d. uniform in [-scale, scale]^n from a seeded generator;
/// zero rows exactly zero. Deterministic in the seed.
LinearPerturbation sample_perturbation(index_t m, index_t n, const std::vector<index_t>& zero_rows,
                                       scalar_t scale, std::uint64_t seed);

/// One Monte-Carlo trial of the genericity experiment.
struct GenericityTrial {
    int index = 0;
    std::uint64_t seed = 0;
    matrix_t perturbation;
    bool converged = false;
    bool rank_condition_held = false;
    scalar_t min_singular_gap = 0;  // min over samples of sigma_{m-1}/sigma_1
    std::optional<CheckResult> segment;  // one-free-row failures carry segment evidence
};

/// Tally of the experiment; with the dimension hypothesis n - 2m + 4 > 0 met,
/// failures witness the measure-zero exceptional set (and are flagged).
struct GenericityStats {
    int trials = 0;
    int successes = 0;
    int failures = 0;
    int inconclusive = 0;  // solver failures, counted separately
    bool hypothesis_met = false;
    scalar_t worst_min_singular_gap = 0;
    std::vector<GenericityTrial> trial_records;
};

/// Runs `trials` perturb-sample-check rounds. Per-trial generators derive
/// from the base seed by the stream rule derive_stream(seed, trial index), so
/// results are independent of evaluation order.
GenericityStats genericity_experiment(const ProblemInstance& problem,
                                      const std::vector<index_t>& zero_rows, int trials,
                                      int resolution, scalar_t tol_x, std::uint64_t seed,
                                      scalar_t scale = 1.0,
                                      scalar_t rank_threshold = kDefaultRankThreshold);

/// Passes iff every sampled x lies within tol of the segment {t p : t in [0,1]}
/// and the projection parameters cover [0,1] with no gap above max_gap.
CheckResult segment_check(const std::vector<ParetoSample>& samples, const vector_t& p,
                          scalar_t tol, scalar_t max_gap = 1.0);

}  // namespace simplicial
