#include "simplicial/serialize.hpp"

namespace simplicial {

namespace {

nlohmann::ordered_json vector_to_json(const vector_t& v) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (index_t i = 0; i < v.size(); ++i) array.push_back(v[i]);
    return array;
}

nlohmann::ordered_json matrix_to_json(const matrix_t& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (index_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i).transpose()));
    return rows;
}

nlohmann::ordered_json check_to_json(const CheckResult& check) {
    return nlohmann::ordered_json{{"name", check.name},
                                  {"passed", check.passed},
                                  {"worst_case", check.worst_case},
                                  {"witness", check.witness},
                                  {"details", check.details}};
}

}  // namespace

nlohmann::ordered_json report_to_json(const SimplicialityReport& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& check : report.checks) checks.push_back(check_to_json(check));
    return nlohmann::ordered_json{
        {"schema_version", kSchemaVersion},
        {"problem", report.problem_name},
        {"config",
         {{"resolution", report.grid_resolution},
          {"tol_x", report.tol_x},
          {"rank_threshold", report.rank_threshold},
          {"seed", report.seed}}},
        {"checks", checks},
        {"verdict", to_string(report.verdict)}};
}

nlohmann::ordered_json genericity_to_json(const std::string& problem_name,
                                          const std::vector<index_t>& zero_rows, int resolution,
                                          scalar_t tol_x, scalar_t scale, std::uint64_t seed,
                                          const GenericityStats& stats) {
    nlohmann::ordered_json zero = nlohmann::ordered_json::array();
    for (index_t i : zero_rows) zero.push_back(i + 1);  // 1-based externally

    nlohmann::ordered_json trials = nlohmann::ordered_json::array();
    for (const GenericityTrial& trial : stats.trial_records) {
        nlohmann::ordered_json entry{{"index", trial.index},
                                     {"seed", trial.seed},
                                     {"matrix", matrix_to_json(trial.perturbation)},
                                     {"converged", trial.converged},
                                     {"rank_condition_held", trial.rank_condition_held},
                                     {"min_singular_gap", trial.min_singular_gap}};
        if (trial.segment) entry["segment"] = check_to_json(*trial.segment);
        trials.push_back(std::move(entry));
    }

    return nlohmann::ordered_json{{"schema_version", kSchemaVersion},
                                  {"problem", problem_name},
                                  {"config",
                                   {{"zero_rows", zero},
                                    {"trials", stats.trials},
                                    {"scale", scale},
                                    {"resolution", resolution},
                                    {"tol_x", tol_x},
                                    {"seed", seed}}},
                                  {"hypothesis_met", stats.hypothesis_met},
                                  {"exploratory", !stats.hypothesis_met},
                                  {"successes", stats.successes},
                                  {"failures", stats.failures},
                                  {"inconclusive", stats.inconclusive},
                                  {"worst_min_singular_gap", stats.worst_min_singular_gap},
                                  {"trial_records", trials}};
}

nlohmann::ordered_json samples_to_json(const std::string& problem_name, int resolution,
                                       scalar_t tol_x, const std::vector<ParetoSample>& samples) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ParetoSample& sample : samples) {
        rows.push_back(nlohmann::ordered_json{{"w", vector_to_json(sample.w.coordinates())},
                                              {"x", vector_to_json(sample.x)},
                                              {"f", vector_to_json(sample.f_values)},
                                              {"kkt_residual", sample.kkt_residual},
                                              {"rank", sample.jacobian_rank},
                                              {"error_radius", sample.error_radius},
                                              {"converged", sample.converged}});
    }
    return nlohmann::ordered_json{
        {"schema_version", kSchemaVersion},
        {"problem", problem_name},
        {"config", {{"resolution", resolution}, {"tol_x", tol_x}}},
        {"samples", rows}};
}

LinearPerturbation perturbation_from_json(const nlohmann::ordered_json& trial,
                                          const std::vector<index_t>& zero_rows) {
    const auto& rows = trial.at("matrix");
    const index_t m = static_cast<index_t>(rows.size());
    const index_t n = m > 0 ? static_cast<index_t>(rows.at(0).size()) : 0;
    matrix_t matrix(m, n);
    for (index_t i = 0; i < m; ++i)
        for (index_t j = 0; j < n; ++j)
            matrix(i, j) = rows.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)).get<scalar_t>();
    return LinearPerturbation(std::move(matrix), zero_rows);
}

}  // namespace simplicial
