#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simplicial/pareto.hpp"

namespace simplicial {

/// Outcome of one numerical check. The meaning of worst_case is check
/// specific and spelled out in details; witness describes the inputs that
/// achieved it.
struct CheckResult {
    std::string name;
    bool passed = false;
    scalar_t worst_case = 0;
    std::string witness;
    std::string details;
};

enum class Verdict { consistent_with_simplicial, rank_condition_fails, inconsistent };

std::string to_string(Verdict verdict);

/// Aggregated report over the eight checks. Wording is deliberately
/// "consistent with": finite sampling witnesses, it does not prove.
struct SimplicialityReport {
    std::string problem_name;
    int grid_resolution = 0;
    scalar_t tol_x = 0;
    scalar_t rank_threshold = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    Verdict verdict = Verdict::inconsistent;
};

/// Every converged sample must satisfy |sum w_i grad f_i(x)| <=
/// (sum w_i alpha_i) tol_x + 1e-9. worst_case = max excess over the bound.
CheckResult check_kkt(const std::vector<ParetoSample>& samples, const ProblemInstance& problem,
                      scalar_t tol_x);

/// Rank of df_x must equal m-1 at every sample; rank can never exceed m-1 at
/// a Pareto point (critical-point containment), so rank-m samples are flagged
/// as inconsistent in details. worst_case = max |rank - (m-1)|.
CheckResult check_rank_condition(const std::vector<ParetoSample>& samples, index_t m);

/// Sampled lower bounds K_i = max |f_i(x) - f_i(y)| over sample pairs,
/// and K0 = max_i K_i. Requires at least two samples.
std::pair<vector_t, scalar_t> estimate_K0(const std::vector<ParetoSample>& samples);

/// Hölder bound |x*(w) - x*(w~)| <= sqrt((K0/alpha0) sum |w_i - w~_i|) on all
/// sample pairs, with additive slack 2 tol_x. worst_case = max LHS/RHS ratio.
CheckResult check_holder(const std::vector<ParetoSample>& samples, scalar_t alpha0, scalar_t K0,
                         scalar_t tol_x);

/// All pairs with |w - w~|_1 >= weight_gap must have |x - x~| > margin.
/// worst_case = smallest observed separation among such pairs.
CheckResult check_injectivity_x_star(const std::vector<ParetoSample>& samples, scalar_t margin,
                                     scalar_t weight_gap);

/// Pairs with distinct x (separation > margin) must have f-images separated
/// by > margin. worst_case = smallest image separation among distinct pairs.
CheckResult check_injectivity_f(const std::vector<ParetoSample>& samples, scalar_t margin);

/// Compares x* of the full problem on the face Delta_I against x* of the
/// subproblem f_I over a resolution grid; deviations must stay within
/// 2 tol_x + slack. worst_case = max deviation.
CheckResult check_face_consistency(const ProblemInstance& problem, const SubsetIndex& I,
                                   int resolution, scalar_t tol_x, scalar_t slack = 1e-12);

struct ReportConfig {
    int resolution = 20;
    scalar_t tol_x = kDefaultTolX;
    scalar_t rank_threshold = kDefaultRankThreshold;
    std::uint64_t seed = 0;
    std::optional<scalar_t> analytic_K0;  // preferred over the sampled estimate
    scalar_t k0_inflation = 1.5;          // applied to the sampled estimate (a lower bound)
    scalar_t injectivity_margin_factor = 10.0;   // margin = factor * tol_x
    scalar_t bounding_slack_factor = 10.0;       // radius slack = factor * tol_x
};

/// Runs all checks (face consistency over every non-empty subset of
/// objectives) and classifies the problem.
SimplicialityReport build_report(const ProblemInstance& problem, const ReportConfig& config = {});

}  // namespace simplicial
