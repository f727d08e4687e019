#include <doctest.h>

#include <cmath>

#include "simplicial/catalog.hpp"
#include "simplicial/perturbation.hpp"
#include "simplicial/serialize.hpp"
#include "simplicial/verify.hpp"

using namespace simplicial;

namespace {

std::vector<ParetoSample> catalog_samples(const std::string& name, const CatalogParams& params,
                                          int resolution) {
    const ProblemInstance problem = catalog_get(name, params);
    return sample_pareto(problem, simplex_grid(problem.m(), resolution));
}

}  // namespace

TEST_CASE("rank condition check") {
    const auto good = catalog_samples("example1", {{"a", 4.0}}, 10);
    const CheckResult pass = check_rank_condition(good, 3);
    CHECK(pass.passed);
    CHECK(pass.worst_case == 0.0);
    for (const ParetoSample& s : good) CHECK(s.jacobian_rank == 2);

    const auto degenerate = catalog_samples("remark3_rank_deficient", {}, 10);
    const CheckResult fail = check_rank_condition(degenerate, 2);
    CHECK_FALSE(fail.passed);
    CHECK(fail.worst_case == 1.0);

    // One perturbed component of remark4: gradients stay parallel along the
    // segment, so the rank sticks at 1 instead of m - 1 = 2.
    const ProblemInstance r4 = catalog_get("remark4_identical_norms");
    matrix_t rows = matrix_t::Zero(3, 3);
    rows(0, 0) = 1.0;
    const ProblemInstance perturbed =
        apply_perturbation(r4, LinearPerturbation(rows, {1, 2}));
    const auto segment_samples = sample_pareto(perturbed, simplex_grid(3, 10));
    for (const ParetoSample& s : segment_samples) CHECK(s.jacobian_rank == 1);
    CHECK_FALSE(check_rank_condition(segment_samples, 3).passed);
}

TEST_CASE("estimate_K0") {
    const auto samples = catalog_samples("example1", {{"a", 1.0}}, 20);
    const auto [K, K0] = estimate_K0(samples);
    CHECK(K0 == doctest::Approx(2.0).epsilon(1e-7));
    for (index_t i = 0; i < 3; ++i) CHECK(K[i] == doctest::Approx(2.0).epsilon(1e-7));

    // Duplicated sample: spread zero.
    const std::vector<ParetoSample> twice{samples[0], samples[0]};
    CHECK(estimate_K0(twice).second == 0.0);

    const auto e2 = catalog_samples("example2", {}, 20);
    CHECK(estimate_K0(e2).first[0] == doctest::Approx(4.0).epsilon(1e-7));

    CHECK_THROWS_AS(estimate_K0({samples[0]}), std::invalid_argument);
}

TEST_CASE("Hölder continuity check") {
    const auto triangle = catalog_samples("example1", {{"a", 1.0}}, 15);
    const CheckResult bound = check_holder(triangle, 2.0, 2.0, 1e-8);
    CHECK(bound.passed);
    CHECK(bound.worst_case <= 1.0 + 1e-9);

    // Pairs straddling w_1 = 1/2 cross the closed-form branch point.
    const auto line = catalog_samples("example2", {}, 20);
    CHECK(check_holder(line, 2.0, 4.0, 1e-8).passed);

    // Identical weights contribute nothing (0 <= 0 with slack).
    const std::vector<ParetoSample> duplicated{triangle[3], triangle[3]};
    CHECK(check_holder(duplicated, 2.0, 2.0, 1e-8).passed);

    CHECK_THROWS_AS(check_holder(triangle, 0.0, 2.0, 1e-8), std::invalid_argument);
}

TEST_CASE("injectivity checks") {
    const auto curved = catalog_samples("example1", {{"a", 4.0}}, 10);
    CHECK(check_injectivity_x_star(curved, 1e-7, 2.0 / 10).passed);
    CHECK(check_injectivity_f(curved, 1e-7).passed);

    const auto collapsed = catalog_samples("remark3_rank_deficient", {}, 10);
    CHECK_FALSE(check_injectivity_x_star(collapsed, 1e-7, 2.0 / 10).passed);
    // All x coincide, so no distinct pairs exist and f-injectivity is vacuous.
    CHECK(check_injectivity_f(collapsed, 1e-7).passed);

    const auto single_point = catalog_samples("remark4_identical_norms", {}, 10);
    CHECK(check_injectivity_f(single_point, 1e-7).passed);

    // A single sample has no weight-separated pairs at all.
    const std::vector<ParetoSample> one{curved[0]};
    CHECK(check_injectivity_x_star(one, 1e-7, 2.0 / 10).passed);
}

TEST_CASE("face consistency check") {
    const ProblemInstance p4 = catalog_get("example1", {{"a", 4.0}});

    const CheckResult back_face = check_face_consistency(p4, SubsetIndex({1, 2}, 3), 8, 1e-8);
    CHECK(back_face.passed);
    CHECK(back_face.worst_case <= 2e-8);

    const CheckResult full = check_face_consistency(p4, SubsetIndex({0, 1, 2}, 3), 4, 1e-8);
    CHECK(full.passed);
    CHECK(full.worst_case == 0.0);  // identical arithmetic on both routes

    const ProblemInstance e2 = catalog_get("example2");
    const CheckResult f1_only = check_face_consistency(e2, SubsetIndex({0}, 2), 1, 1e-8);
    CHECK(f1_only.passed);
}

TEST_CASE("build_report classifies the catalog") {
    ReportConfig config;
    config.resolution = 10;

    for (scalar_t a : {1.0, 4.0, 0.25}) {
        config.analytic_K0 = catalog_analytic_k0("example1", {{"a", a}});
        const SimplicialityReport report =
            build_report(catalog_get("example1", {{"a", a}}), config);
        CHECK(report.verdict == Verdict::consistent_with_simplicial);
        REQUIRE(report.checks.size() == 8);
        for (const CheckResult& check : report.checks) CHECK(check.passed);
    }

    config.analytic_K0 = catalog_analytic_k0("example2");
    CHECK(build_report(catalog_get("example2"), config).verdict ==
          Verdict::consistent_with_simplicial);

    config.analytic_K0 = catalog_analytic_k0("remark3_rank_deficient");
    const SimplicialityReport r3 = build_report(catalog_get("remark3_rank_deficient"), config);
    CHECK(r3.verdict == Verdict::rank_condition_fails);

    config.analytic_K0 = catalog_analytic_k0("remark4_identical_norms");
    const SimplicialityReport r4 = build_report(catalog_get("remark4_identical_norms"), config);
    CHECK(r4.verdict == Verdict::rank_condition_fails);

    // Deterministic: identical config produces byte-identical serialization.
    const SimplicialityReport r4_again =
        build_report(catalog_get("remark4_identical_norms"), config);
    CHECK(report_to_json(r4).dump(2) == report_to_json(r4_again).dump(2));
}

TEST_CASE("a non-rank failure classifies as inconsistent") {
    // An absurdly small K0 makes the Hölder check fail while the rank
    // condition holds, which the theory cannot explain away.
    ReportConfig config;
    config.resolution = 8;
    config.analytic_K0 = 1e-6;
    const SimplicialityReport report = build_report(catalog_get("example1", {{"a", 1.0}}), config);
    CHECK(report.verdict == Verdict::inconsistent);
}

TEST_CASE("report without an analytic K0 inflates the sampled estimate") {
    ReportConfig config;
    config.resolution = 8;
    config.analytic_K0 = std::nullopt;
    const SimplicialityReport report = build_report(catalog_get("example1", {{"a", 1.0}}), config);
    CHECK(report.verdict == Verdict::consistent_with_simplicial);
    bool found = false;
    for (const CheckResult& check : report.checks)
        if (check.name == "holder") {
            found = true;
            CHECK(check.details.find("sampled estimate") != std::string::npos);
        }
    CHECK(found);
}
