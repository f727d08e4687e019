#include "simplicial/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "simplicial/format.hpp"

namespace simplicial {

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::consistent_with_simplicial: return "consistent_with_simplicial";
        case Verdict::rank_condition_fails: return "rank_condition_fails";
        case Verdict::inconsistent: return "inconsistent";
    }
    return "inconsistent";
}

namespace {

constexpr scalar_t kKktAbsoluteSlack = 1e-9;

long count_unconverged(const std::vector<ParetoSample>& samples) {
    return std::count_if(samples.begin(), samples.end(),
                         [](const ParetoSample& s) { return !s.converged; });
}

void note_unconverged(CheckResult& result, long unconverged) {
    if (unconverged > 0) {
        result.passed = false;
        result.details += " inconclusive: " + std::to_string(unconverged) + " unconverged samples.";
    }
}

}  // namespace

CheckResult check_kkt(const std::vector<ParetoSample>& samples, const ProblemInstance& problem,
                      scalar_t tol_x) {
    CheckResult result{"kkt", true, -std::numeric_limits<scalar_t>::infinity(), "",
                       "worst_case = max residual excess over (sum w_i alpha_i) tol_x + 1e-9."};
    for (const ParetoSample& sample : samples) {
        if (!sample.converged) continue;
        scalar_t alpha_w = 0;
        for (index_t i : sample.w.support()) alpha_w += sample.w[i] * problem.objective(i).alpha;
        const scalar_t excess = sample.kkt_residual - (alpha_w * tol_x + kKktAbsoluteSlack);
        if (excess > result.worst_case) {
            result.worst_case = excess;
            result.witness = "w=" + format_vector(sample.w.coordinates()) +
                             " residual=" + format_double(sample.kkt_residual);
        }
    }
    if (samples.empty() || !std::isfinite(result.worst_case)) result.worst_case = 0;
    result.passed = result.worst_case <= 0;
    note_unconverged(result, count_unconverged(samples));
    return result;
}

CheckResult check_rank_condition(const std::vector<ParetoSample>& samples, index_t m) {
    CheckResult result{"rank_condition", true, 0, "",
                       "worst_case = max |rank - (m-1)| over samples."};
    bool rank_exceeds = false;
    for (const ParetoSample& sample : samples) {
        if (!sample.converged) continue;
        const scalar_t deviation = std::abs(static_cast<scalar_t>(sample.jacobian_rank - (m - 1)));
        if (deviation > result.worst_case) {
            result.worst_case = deviation;
            result.witness = "w=" + format_vector(sample.w.coordinates()) +
                             " rank=" + std::to_string(sample.jacobian_rank);
        }
        if (sample.jacobian_rank > m - 1) rank_exceeds = true;
    }
    result.passed = result.worst_case == 0;
    if (rank_exceeds)
        result.details +=
            " inconsistent: rank exceeds m-1 at a Pareto sample (critical-point containment "
            "violated).";
    note_unconverged(result, count_unconverged(samples));
    return result;
}

std::pair<vector_t, scalar_t> estimate_K0(const std::vector<ParetoSample>& samples) {
    if (samples.size() < 2) throw std::invalid_argument("estimate_K0: need at least two samples");
    vector_t lo = samples.front().f_values;
    vector_t hi = samples.front().f_values;
    for (const ParetoSample& sample : samples) {
        lo = lo.cwiseMin(sample.f_values);
        hi = hi.cwiseMax(sample.f_values);
    }
    vector_t K = hi - lo;
    return {K, K.maxCoeff()};
}

CheckResult check_holder(const std::vector<ParetoSample>& samples, scalar_t alpha0, scalar_t K0,
                         scalar_t tol_x) {
    if (!(alpha0 > 0)) throw std::invalid_argument("check_holder: alpha0 must be positive");
    if (K0 < 0) throw std::invalid_argument("check_holder: K0 must be non-negative");
    CheckResult result{"holder", true, 0, "",
                       "worst_case = max |dx| / sqrt((K0/alpha0) |dw|_1); slack 2 tol_x."};
    const scalar_t slack = 2.0 * tol_x;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            const scalar_t lhs = (samples[i].x - samples[j].x).norm();
            const scalar_t l1 =
                (samples[i].w.coordinates() - samples[j].w.coordinates()).lpNorm<1>();
            const scalar_t rhs = std::sqrt(K0 / alpha0 * l1);
            if (lhs > rhs + slack) result.passed = false;
            if (rhs > 0 && lhs / rhs > result.worst_case) {
                result.worst_case = lhs / rhs;
                result.witness = "w=" + format_vector(samples[i].w.coordinates()) +
                                 " w~=" + format_vector(samples[j].w.coordinates());
            }
        }
    }
    note_unconverged(result, count_unconverged(samples));
    return result;
}

CheckResult check_injectivity_x_star(const std::vector<ParetoSample>& samples, scalar_t margin,
                                     scalar_t weight_gap) {
    CheckResult result{"x_star_injectivity", true, 0, "",
                       "worst_case = min |dx| over pairs with |dw|_1 >= grid step; must exceed "
                       "the margin."};
    const scalar_t gap = weight_gap * (1.0 - 1e-12);
    scalar_t smallest = std::numeric_limits<scalar_t>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            const scalar_t l1 =
                (samples[i].w.coordinates() - samples[j].w.coordinates()).lpNorm<1>();
            if (l1 < gap) continue;
            const scalar_t separation = (samples[i].x - samples[j].x).norm();
            if (separation < smallest) {
                smallest = separation;
                result.witness = "w=" + format_vector(samples[i].w.coordinates()) +
                                 " w~=" + format_vector(samples[j].w.coordinates());
            }
        }
    }
    if (std::isfinite(smallest)) {
        result.worst_case = smallest;
        result.passed = smallest > margin;
    } else {
        result.details += " no weight-separated pairs (vacuous).";
    }
    note_unconverged(result, count_unconverged(samples));
    return result;
}

CheckResult check_injectivity_f(const std::vector<ParetoSample>& samples, scalar_t margin) {
    CheckResult result{"f_injectivity", true, 0, "",
                       "worst_case = min |df| over pairs with distinct x; must exceed the margin."};
    scalar_t smallest = std::numeric_limits<scalar_t>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            if ((samples[i].x - samples[j].x).norm() <= margin) continue;  // duplicates excluded
            const scalar_t separation = (samples[i].f_values - samples[j].f_values).norm();
            if (separation < smallest) {
                smallest = separation;
                result.witness = "x=" + format_vector(samples[i].x) +
                                 " x~=" + format_vector(samples[j].x);
            }
        }
    }
    if (std::isfinite(smallest)) {
        result.worst_case = smallest;
        result.passed = smallest > margin;
    } else {
        result.details += " no distinct-x pairs (vacuous).";
    }
    note_unconverged(result, count_unconverged(samples));
    return result;
}

CheckResult check_face_consistency(const ProblemInstance& problem, const SubsetIndex& I,
                                   int resolution, scalar_t tol_x, scalar_t slack) {
    CheckResult result{"face_consistency", true, 0, "",
                       "worst_case = max |x*_full(embed(w)) - x*_sub(w)|; bound 2 tol_x + slack."};
    const ProblemInstance subproblem = restrict_to(problem, I);
    long unconverged = 0;
    for (const WeightVector& w_sub : simplex_grid(I.size(), resolution)) {
        const ParetoSample full = x_star(problem, face_embed(I, w_sub, problem.m()), tol_x);
        const ParetoSample sub = x_star(subproblem, w_sub, tol_x);
        if (!full.converged || !sub.converged) ++unconverged;
        const scalar_t deviation = (full.x - sub.x).norm();
        if (deviation > result.worst_case) {
            result.worst_case = deviation;
            result.witness = "I size " + std::to_string(I.size()) +
                             " w_sub=" + format_vector(w_sub.coordinates());
        }
    }
    result.passed = result.worst_case <= 2.0 * tol_x + slack;
    note_unconverged(result, unconverged);
    return result;
}

SimplicialityReport build_report(const ProblemInstance& problem, const ReportConfig& config) {
    const index_t m = problem.m();
    SimplicialityReport report;
    report.problem_name = problem.name();
    report.grid_resolution = config.resolution;
    report.tol_x = config.tol_x;
    report.rank_threshold = config.rank_threshold;
    report.seed = config.seed;

    const std::vector<ParetoSample> samples = sample_pareto(
        problem, simplex_grid(m, config.resolution), config.tol_x, config.rank_threshold);

    report.checks.push_back(check_kkt(samples, problem, config.tol_x));
    report.checks.push_back(check_rank_condition(samples, m));

    scalar_t K0;
    std::string k0_note;
    if (config.analytic_K0) {
        K0 = *config.analytic_K0;
        k0_note = " K0=" + format_double(K0) + " (analytic).";
    } else if (samples.size() < 2) {
        K0 = 0.0;  // single-point grid, the bound is vacuous
        k0_note = " K0=0 (single sample).";
    } else {
        K0 = estimate_K0(samples).second * config.k0_inflation;
        k0_note = " K0=" + format_double(K0) + " (sampled estimate x " +
                  format_double(config.k0_inflation) + ").";
    }
    CheckResult holder = check_holder(samples, problem.min_alpha(), K0, config.tol_x);
    holder.details += k0_note;
    report.checks.push_back(std::move(holder));

    const scalar_t margin = config.injectivity_margin_factor * config.tol_x;
    const scalar_t weight_gap = 2.0 / static_cast<scalar_t>(config.resolution);
    report.checks.push_back(check_injectivity_x_star(samples, margin, weight_gap));
    report.checks.push_back(check_injectivity_f(samples, margin));

    CheckResult face{"face_consistency", true, 0, "",
                     "worst_case = max deviation over all non-empty objective subsets."};
    for (const SubsetIndex& I : SubsetIndex::all_nonempty(m)) {
        const CheckResult one = check_face_consistency(problem, I, config.resolution, config.tol_x);
        if (one.worst_case >= face.worst_case) {
            face.worst_case = one.worst_case;
            face.witness = one.witness;
        }
        face.passed = face.passed && one.passed;
    }
    report.checks.push_back(std::move(face));

    CheckResult bounding{"bounding_region", true, 0, "",
                         "worst_case = max over samples of min_i (|x - x_i| - r_i); slack " +
                             format_double(config.bounding_slack_factor) + " tol_x."};
    const BoundingRegion region = bounding_region(problem, config.tol_x);
    bounding.worst_case = -std::numeric_limits<scalar_t>::infinity();
    for (const ParetoSample& sample : samples) {
        const scalar_t excess = region.excess(sample.x);
        if (excess > bounding.worst_case) {
            bounding.worst_case = excess;
            bounding.witness = "w=" + format_vector(sample.w.coordinates());
        }
    }
    if (!std::isfinite(bounding.worst_case)) bounding.worst_case = 0;
    bounding.passed = bounding.worst_case <= config.bounding_slack_factor * config.tol_x;
    report.checks.push_back(std::move(bounding));

    CheckResult dominance{"dominance_consistency", true, 0, "",
                          "worst_case = number of sampled Pareto images dropped by either "
                          "dominance filter."};
    std::vector<vector_t> images;
    images.reserve(samples.size());
    for (const ParetoSample& sample : samples) images.push_back(sample.f_values);
    const std::size_t strict = dominance_filter(images).size();
    const std::size_t weak = weak_dominance_filter(images).size();
    dominance.worst_case =
        static_cast<scalar_t>((images.size() - strict) + (images.size() - weak));
    dominance.passed = strict == images.size() && weak == images.size();
    report.checks.push_back(std::move(dominance));

    // Classification. Without the rank condition the theory still promises
    // everything except injectivity of x*, so an injectivity failure in the
    // presence of a rank failure does not make the run inconsistent. A rank
    // above m-1 contradicts critical-point containment and always does.
    bool all_passed = true;
    bool rank_failed = false;
    bool other_failed = false;
    bool rank_exceeds = false;
    for (const ParetoSample& sample : samples)
        rank_exceeds = rank_exceeds || (sample.converged && sample.jacobian_rank > m - 1);
    for (const CheckResult& check : report.checks) {
        all_passed = all_passed && check.passed;
        if (check.name == "rank_condition") rank_failed = !check.passed;
        else if (check.name != "x_star_injectivity") other_failed = other_failed || !check.passed;
    }
    if (all_passed)
        report.verdict = Verdict::consistent_with_simplicial;
    else if (rank_failed && !other_failed && !rank_exceeds)
        report.verdict = Verdict::rank_condition_fails;
    else
        report.verdict = Verdict::inconsistent;
    return report;
}

}  // namespace simplicial
