// Acceptance suite: one pass/fail line per criterion, exit 1 if any fail.
// Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "simplicial/catalog.hpp"
#include "simplicial/convexity.hpp"
#include "simplicial/format.hpp"
#include "simplicial/pareto.hpp"
#include "simplicial/perturbation.hpp"
#include "simplicial/verify.hpp"
#include "test_util.hpp"

using namespace simplicial;
using namespace simplicial::testing;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s | %s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
                detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

vector_t example1_closed_form(scalar_t a, const WeightVector& w) {
    vector_t x(3);
    x << a * w[0] / (a * w[0] + (1.0 - w[0])), w[1], w[2];
    return x;
}

scalar_t example2_closed_form(scalar_t w1) {
    return w1 < 0.5 ? 2.0 * w1 : (w1 + 1.0) / (2.0 - w1);
}

void criterion_1_closed_form_agreement() {
    const auto start = std::chrono::steady_clock::now();
    const scalar_t tol_x = 1e-8;
    scalar_t worst = 0;
    for (scalar_t a : {1.0, 4.0, 0.25}) {
        const ProblemInstance problem = catalog_get("example1", {{"a", a}});
        const auto grid = simplex_grid(3, 20);
        const auto samples = sample_pareto(problem, grid, tol_x);
        for (std::size_t i = 0; i < samples.size(); ++i)
            worst = std::max(worst,
                             (samples[i].x - example1_closed_form(a, grid[i])).norm());
    }
    const double elapsed = seconds_since(start);
    criterion(1, "closed-form agreement on example1, a in {1, 4, 1/4}",
              worst <= 1e-6 && elapsed < 10.0,
              "max |x - oracle| = " + format_double(worst) + " over 3x231 weights in " +
                  format_double(elapsed) + " s (bounds 1e-6, 10 s)");
}

void criterion_2_example2_piecewise() {
    const scalar_t tol_x = 1e-8;
    const ProblemInstance problem = catalog_get("example2");
    const auto grid = simplex_grid(2, 100);
    const auto samples = sample_pareto(problem, grid, tol_x);
    scalar_t worst = 0;
    for (std::size_t i = 0; i < samples.size(); ++i)
        worst = std::max(worst, std::abs(samples[i].x[0] - example2_closed_form(grid[i][0])));

    const auto [left, right] = one_sided_quotients(problem, WeightVector::vertex(2, 1),
                                                   WeightVector::vertex(2, 0), 0.5, 1e-4, tol_x);
    const scalar_t left_err = std::abs(left[0] - 2.0);
    const scalar_t right_err = std::abs(right[0] - 4.0 / 3.0);
    criterion(2, "example2 piecewise oracle and one-sided quotients at w1 = 1/2",
              worst <= 1e-6 && left_err <= 1e-2 && right_err <= 1e-2,
              "max |x - oracle| = " + format_double(worst) + " on 101 weights; quotient errors " +
                  format_double(left_err) + " / " + format_double(right_err) +
                  " (bounds 1e-6, 1e-2)");
}

void criterion_3_verdicts() {
    ReportConfig config;  // resolution 20, tol 1e-8, threshold 1e-8
    bool ok = true;
    std::string detail;
    auto expect = [&](const std::string& name, const CatalogParams& params, Verdict expected) {
        config.analytic_K0 = catalog_analytic_k0(name, params);
        const Verdict got = build_report(catalog_get(name, params), config).verdict;
        ok = ok && (got == expected);
        if (!detail.empty()) detail += ", ";
        detail += name;
        if (params.count("a")) detail += "(a=" + format_double(params.at("a")) + ")";
        detail += "=" + to_string(got);
    };
    expect("remark3_rank_deficient", {}, Verdict::rank_condition_fails);
    expect("remark4_identical_norms", {}, Verdict::rank_condition_fails);
    expect("example1", {{"a", 1.0}}, Verdict::consistent_with_simplicial);
    expect("example1", {{"a", 4.0}}, Verdict::consistent_with_simplicial);
    expect("example1", {{"a", 0.25}}, Verdict::consistent_with_simplicial);
    expect("example2", {}, Verdict::consistent_with_simplicial);
    criterion(3, "counterexample classification (exact verdict match)", ok, detail);
}

void criterion_4_segment_and_genericity() {
    const scalar_t tol_x = 1e-8;
    const ProblemInstance r4 = catalog_get("remark4_identical_norms");

    // One free component: the Pareto set is the segment toward p = -a/2.
    const LinearPerturbation pi = sample_perturbation(3, 3, {1, 2}, 1.0, 0);
    const ProblemInstance shifted = apply_perturbation(r4, pi);
    const vector_t p = -0.5 * pi.matrix().row(0).transpose();
    const auto samples = sample_pareto(shifted, simplex_grid(3, 20), tol_x);

    scalar_t worst_distance = 0;
    bool interior_rank_1 = true;
    const scalar_t p_norm2 = p.squaredNorm();
    for (const ParetoSample& sample : samples) {
        const scalar_t t = std::clamp(sample.x.dot(p) / p_norm2, 0.0, 1.0);
        worst_distance = std::max(worst_distance, (sample.x - t * p).norm());
        if (sample.w[0] > 0.0 && sample.w[0] < 1.0)
            interior_rank_1 = interior_rank_1 && (sample.jacobian_rank == 1);
    }
    const CheckResult segment = segment_check(samples, p, 1e-6, 1.5 / 20);

    // Two free components: 100 seeded Monte-Carlo trials.
    const GenericityStats stats = genericity_experiment(r4, {0}, 100, 20, tol_x, 0);

    criterion(4, "remark4 segment (one free row) and 100-trial genericity (two free rows)",
              worst_distance <= 1e-6 && interior_rank_1 && segment.passed &&
                  stats.hypothesis_met && stats.failures == 0 && stats.inconclusive == 0,
              "max segment distance " + format_double(worst_distance) +
                  " (bound 1e-6), interior ranks all 1: " + (interior_rank_1 ? "yes" : "no") +
                  ", segment check " + (segment.passed ? "passed" : "failed") + ", failures " +
                  std::to_string(stats.failures) + "/100");
}

void criterion_5_holder_suite() {
    const scalar_t tol_x = 1e-8;
    bool ok = true;
    scalar_t worst_ratio = 0;
    for (int resolution : {10, 15, 20}) {
        {
            const ProblemInstance p1 = catalog_get("example1", {{"a", 1.0}});
            const auto samples = sample_pareto(p1, simplex_grid(3, resolution), tol_x);
            const CheckResult holder = check_holder(samples, p1.min_alpha(), 2.0, tol_x);
            ok = ok && holder.passed;
            worst_ratio = std::max(worst_ratio, holder.worst_case);
        }
        {
            const ProblemInstance e2 = catalog_get("example2");
            const auto samples = sample_pareto(e2, simplex_grid(2, resolution), tol_x);
            const CheckResult holder = check_holder(samples, e2.min_alpha(), 4.0, tol_x);
            ok = ok && holder.passed;
            worst_ratio = std::max(worst_ratio, holder.worst_case);
        }
    }
    criterion(5, "Hölder bound with analytic K0 (example1 a=1: K0=2; example2: K0=4)", ok,
              "resolutions 10/15/20, zero violating pairs; worst LHS/RHS ratio " +
                  format_double(worst_ratio));
}

void criterion_6_kkt_residuals() {
    const scalar_t tol_x = 1e-8;
    bool ok = true;
    scalar_t worst_excess = -1;
    long checked = 0;
    auto run = [&](const std::string& name, const CatalogParams& params) {
        const ProblemInstance problem = catalog_get(name, params);
        for (const ParetoSample& s :
             sample_pareto(problem, simplex_grid(problem.m(), 20), tol_x)) {
            if (!s.converged) {
                ok = false;
                continue;
            }
            scalar_t alpha_w = 0;
            for (index_t i : s.w.support()) alpha_w += s.w[i] * problem.objective(i).alpha;
            const scalar_t excess = s.kkt_residual - (alpha_w * tol_x + 1e-9);
            worst_excess = std::max(worst_excess, excess);
            ok = ok && (excess <= 0);
            ++checked;
        }
    };
    run("example1", {{"a", 1.0}});
    run("example1", {{"a", 4.0}});
    run("example1", {{"a", 0.25}});
    run("example2", {});
    run("remark3_rank_deficient", {});
    run("remark4_identical_norms", {});
    criterion(6, "KKT residual bound |sum w_i grad f_i| <= (sum w_i alpha_i) tol + 1e-9", ok,
              std::to_string(checked) + " samples, worst excess " + format_double(worst_excess));
}

void criterion_7_face_consistency() {
    const scalar_t tol_x = 1e-8;
    const ProblemInstance p4 = catalog_get("example1", {{"a", 4.0}});
    scalar_t worst = 0;
    int subsets = 0;
    for (const SubsetIndex& I : SubsetIndex::all_nonempty(3)) {
        const CheckResult face = check_face_consistency(p4, I, 10, tol_x);
        worst = std::max(worst, face.worst_case);
        ++subsets;
    }
    criterion(7, "face consistency over all 7 subsets of example1 a=4 at resolution 10",
              worst <= 2e-8 && subsets == 7,
              "max |x*_full - x*_sub| = " + format_double(worst) + " (bound 2e-8)");
}

void criterion_8_dominance_oracles() {
    const scalar_t tol_x = 1e-8;
    bool ok = true;
    double scan_seconds = 0;
    auto run = [&](const std::string& name, const CatalogParams& params) {
        const ProblemInstance problem = catalog_get(name, params);
        const auto samples = sample_pareto(problem, simplex_grid(problem.m(), 20), tol_x);
        std::vector<vector_t> images;
        images.reserve(samples.size());
        for (const ParetoSample& s : samples) images.push_back(s.f_values);
        const auto start = std::chrono::steady_clock::now();
        const auto strict = dominance_filter(images);
        const auto weak = weak_dominance_filter(images);
        scan_seconds = std::max(scan_seconds, seconds_since(start));
        ok = ok && strict.size() == images.size() && weak.size() == images.size();
    };
    run("example1", {{"a", 1.0}});
    run("example1", {{"a", 4.0}});
    run("example1", {{"a", 0.25}});
    run("example2", {});
    run("remark3_rank_deficient", {});
    run("remark4_identical_norms", {});
    criterion(8, "dominance filters retain 100% of sampled Pareto images", ok && scan_seconds < 1.0,
              "N=231 pairwise scan in " + format_double(scan_seconds) + " s (bound 1 s)");
}

void criterion_9_bounding_region() {
    const scalar_t tol_x = 1e-8;
    bool ok = true;
    scalar_t worst_excess = -std::numeric_limits<scalar_t>::infinity();
    auto run = [&](const std::string& name, const CatalogParams& params) {
        const ProblemInstance problem = catalog_get(name, params);
        const BoundingRegion region = bounding_region(problem, tol_x);
        for (const ParetoSample& s :
             sample_pareto(problem, simplex_grid(problem.m(), 20), tol_x)) {
            worst_excess = std::max(worst_excess, region.excess(s.x));
            ok = ok && region.contains(s.x);
        }
    };
    run("example1", {{"a", 1.0}});
    run("example1", {{"a", 4.0}});
    run("example1", {{"a", 0.25}});
    run("example2", {});
    run("remark3_rank_deficient", {});
    run("remark4_identical_norms", {});
    criterion(9, "bounding region contains every sampled Pareto point (exact predicate)", ok,
              "worst membership excess " + format_double(worst_excess));
}

void criterion_10_convexity_certificates() {
    bool ok = true;
    scalar_t worst_margin = 0;
    for (const std::string& name : catalog_names()) {
        const ProblemInstance problem = catalog_get(name);
        for (index_t i = 0; i < problem.m(); ++i) {
            const ObjectiveSpec& obj = problem.objective(i);
            const auto triples =
                sample_probe_triples(problem.n(), 1000, derive_stream(1000, i));
            const auto points = sample_probe_points(problem.n(), 1000, derive_stream(2000, i));
            const auto mid = certify_midpoint(obj, obj.alpha, triples);
            const auto shifted = certify_shifted_convexity(obj, obj.alpha, triples);
            ok = ok && mid.passed && shifted.passed;
            worst_margin = std::min({worst_margin, mid.worst_margin, shifted.worst_margin});
            if (obj.has_hessian()) {
                const auto hess = certify_hessian(obj, obj.alpha, points);
                ok = ok && hess.passed;
                worst_margin = std::min(worst_margin, hess.worst_margin);
            }
        }
    }

    // Appendix norm identity on 1000 seeded triples.
    Rng rng(derive_stream(3000, 0));
    scalar_t worst_identity = 0;
    for (int i = 0; i < 1000; ++i) {
        const vector_t x = rng.uniform_vector(3, -2, 2);
        const vector_t y = rng.uniform_vector(3, -2, 2);
        const scalar_t t = rng.uniform01();
        const scalar_t lhs =
            t * x.squaredNorm() + (1 - t) * y.squaredNorm() - (t * x + (1 - t) * y).squaredNorm();
        const scalar_t rhs = t * ( 1 - t) * (x - y).squaredNorm();
        worst_identity = std::max(worst_identity, std::abs(lhs - rhs));
    }
    ok = ok && worst_identity <= 1e-12;

    // exp(x) is falsified at every tested alpha >= 0.01.
    const ObjectiveSpec expf = exp_objective();
    bool exp_falsified = true;
    for (scalar_t alpha : {0.01, 0.1, 1.0}) {
        const auto violating =
            find_violating_triple(expf, alpha, -10.0, 10.0, 1, derive_stream(4000, 0));
        exp_falsified = exp_falsified && violating.has_value() &&
                        !certify_midpoint(expf, alpha, {*violating}).passed;
    }
    ok = ok && exp_falsified;

    criterion(10, "convexity certificates at declared alpha; norm identity; exp(x) falsified", ok,
              "worst certificate margin " + format_double(worst_margin) +
                  " (slack 1e-9), norm-identity error " + format_double(worst_identity) +
                  " (bound 1e-12), exp falsified for alpha in {0.01, 0.1, 1}: " +
                  (exp_falsified ? "yes" : "no"));
}

}  // namespace

int main() {
    criterion_1_closed_form_agreement();
    criterion_2_example2_piecewise();
    criterion_3_verdicts();
    criterion_4_segment_and_genericity();
    criterion_5_holder_suite();
    criterion_6_kkt_residuals();
    criterion_7_face_consistency();
    criterion_8_dominance_oracles();
    criterion_9_bounding_region();
    criterion_10_convexity_certificates();

    std::printf("%d/10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
