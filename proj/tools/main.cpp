#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simplicial/catalog.hpp"
#include "simplicial/format.hpp"
#include "simplicial/pareto.hpp"
#include "simplicial/perturbation.hpp"
#include "simplicial/serialize.hpp"
#include "simplicial/verify.hpp"

namespace {

using namespace simplicial;

constexpr int kExitPartial = 2;
constexpr int kExitUsage = 64;     // unknown problem, bad arguments
constexpr int kExitIoError = 74;   // output could not be written
constexpr int kExitInternal = 70;

struct CommonOptions {
    std::string problem;
    std::optional<scalar_t> a;
    int resolution = 20;
    scalar_t tol_x = kDefaultTolX;
    scalar_t rank_threshold = kDefaultRankThreshold;
    std::uint64_t seed = 0;
    std::string output = "-";
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_problem = true) {
    if (with_problem)
        cmd->add_option("--problem", opts.problem, "catalog problem name")->required()
            ->envname("SIMPLICIAL_PROBLEM");
    cmd->add_option("--a", opts.a, "parameter a of example1 (a > 0)")->envname("SIMPLICIAL_A");
    cmd->add_option("--resolution", opts.resolution, "simplex lattice resolution")
        ->envname("SIMPLICIAL_RESOLUTION")->check(CLI::PositiveNumber);
    cmd->add_option("--tol-x", opts.tol_x, "certified accuracy of each solve")
        ->envname("SIMPLICIAL_TOL_X")->check(CLI::PositiveNumber);
    cmd->add_option("--rank-threshold", opts.rank_threshold,
                    "relative singular value cutoff in (0,1)")
        ->envname("SIMPLICIAL_RANK_THRESHOLD")->check(CLI::Range(1e-300, 1.0));
    cmd->add_option("--seed", opts.seed, "base seed for randomized runs")
        ->envname("SIMPLICIAL_SEED");
    cmd->add_option("--output", opts.output, "output path, '-' for stdout")
        ->envname("SIMPLICIAL_OUTPUT");
}

CatalogParams params_of(const CommonOptions& opts) {
    CatalogParams params;
    if (opts.a) params["a"] = *opts.a;
    return params;
}

// Writes atomically: temp file in the same directory, then rename.
int write_output(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::cout << content;
        return 0;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "error: cannot open '" << tmp << "' for writing\n";
            return kExitIoError;
        }
        out << content;
        if (!out.good()) {
            std::cerr << "error: short write to '" << tmp << "'\n";
            return kExitIoError;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::cerr << "error: cannot rename '" << tmp << "' to '" << path << "': " << ec.message()
                  << "\n";
        return kExitIoError;
    }
    return 0;
}

std::string samples_to_csv(const std::vector<ParetoSample>& samples, index_t m, index_t n) {
    std::string csv;
    for (index_t i = 1; i <= m; ++i) csv += "w_" + std::to_string(i) + ",";
    for (index_t i = 1; i <= n; ++i) csv += "x_" + std::to_string(i) + ",";
    for (index_t i = 1; i <= m; ++i) csv += "f_" + std::to_string(i) + ",";
    csv += "kkt_residual,rank,error_radius\n";
    for (const ParetoSample& sample : samples) {
        for (index_t i = 0; i < m; ++i) csv += format_double(sample.w[i]) + ",";
        for (index_t i = 0; i < n; ++i) csv += format_double(sample.x[i]) + ",";
        for (index_t i = 0; i < m; ++i) csv += format_double(sample.f_values[i]) + ",";
        csv += format_double(sample.kkt_residual) + "," + std::to_string(sample.jacobian_rank) +
               "," + format_double(sample.error_radius) + "\n";
    }
    return csv;
}

int cmd_pareto(const CommonOptions& opts, const std::string& format) {
    const ProblemInstance problem = catalog_get(opts.problem, params_of(opts));
    const std::vector<ParetoSample> samples =
        sample_pareto(problem, simplex_grid(problem.m(), opts.resolution), opts.tol_x,
                      opts.rank_threshold);
    std::string content;
    if (format == "json")
        content = samples_to_json(problem.name(), opts.resolution, opts.tol_x, samples).dump(2) + "\n";
    else
        content = samples_to_csv(samples, problem.m(), problem.n());
    const int io = write_output(opts.output, content);
    if (io != 0) return io;
    return all_converged(samples) ? 0 : kExitPartial;
}

int cmd_verify(const CommonOptions& opts) {
    const CatalogParams params = params_of(opts);
    const ProblemInstance problem = catalog_get(opts.problem, params);
    ReportConfig config;
    config.resolution = opts.resolution;
    config.tol_x = opts.tol_x;
    config.rank_threshold = opts.rank_threshold;
    config.seed = opts.seed;
    config.analytic_K0 = catalog_analytic_k0(opts.problem, params);
    const SimplicialityReport report = build_report(problem, config);
    const int io = write_output(opts.output, report_to_json(report).dump(2) + "\n");
    if (io != 0) return io;
    switch (report.verdict) {
        case Verdict::consistent_with_simplicial: return 0;
        case Verdict::rank_condition_fails: return 1;
        case Verdict::inconsistent: return 2;
    }
    return kExitInternal;
}

int cmd_perturb(const CommonOptions& opts, const std::vector<int>& zero_rows_1based, int trials,
                scalar_t scale) {
    const ProblemInstance problem = catalog_get(opts.problem, params_of(opts));
    std::vector<index_t> zero_rows;
    for (int row : zero_rows_1based) {
        if (row < 1 || row > problem.m())
            throw std::invalid_argument("perturb: zero row index out of range (1-based)");
        zero_rows.push_back(static_cast<index_t>(row - 1));
    }
    std::sort(zero_rows.begin(), zero_rows.end());
    const GenericityStats stats =
        genericity_experiment(problem, zero_rows, trials, opts.resolution, opts.tol_x, opts.seed,
                              scale, opts.rank_threshold);
    const auto doc = genericity_to_json(problem.name(), zero_rows, opts.resolution, opts.tol_x,
                                        scale, opts.seed, stats);
    const int io = write_output(opts.output, doc.dump(2) + "\n");
    if (io != 0) return io;
    if (!stats.hypothesis_met) return 0;  // exploratory run, flagged in the output
    return (stats.failures == 0 && stats.inconclusive == 0) ? 0 : 1;
}

int cmd_diff_probe(const CommonOptions& opts, const std::vector<scalar_t>& from_coords,
                   const std::vector<scalar_t>& to_coords, const std::vector<scalar_t>& at,
                   scalar_t h) {
    if (!(h > 0)) throw std::invalid_argument("diff-probe: h must be positive");
    const ProblemInstance problem = catalog_get(opts.problem, params_of(opts));
    auto to_weight = [&](const std::vector<scalar_t>& coords) {
        vector_t v(static_cast<index_t>(coords.size()));
        for (std::size_t i = 0; i < coords.size(); ++i) v[static_cast<index_t>(i)] = coords[i];
        return WeightVector::normalized(std::move(v));
    };
    const WeightVector from = to_weight(from_coords);
    const WeightVector to = to_weight(to_coords);
    std::string content;
    for (scalar_t s : at) {
        const auto [left, right] = one_sided_quotients(problem, from, to, s, h, opts.tol_x);
        content += "s=" + format_double(s) + " left=" + format_vector(left) +
                   " right=" + format_vector(right) + "\n";
    }
    return write_output(opts.output, content);
}

int cmd_catalog_list() {
    std::string content;
    for (const std::string& name : catalog_names())
        content += name + "  " + catalog_describe(name) + "\n";
    std::cout << content;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto sets of strongly convex problems via simplex scalarization, "
                 "with numerical simpliciality verification"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    CommonOptions opts;

    auto* pareto_cmd = app.add_subcommand("pareto", "sample x*(w) over a simplex lattice (CSV)");
    std::string format = "csv";
    add_common(pareto_cmd, opts);
    pareto_cmd->add_option("--format", format, "csv or json")
        ->envname("SIMPLICIAL_FORMAT")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the simpliciality check suite (JSON)");
    add_common(verify_cmd, opts);

    auto* perturb_cmd =
        app.add_subcommand("perturb", "seeded linear-perturbation genericity experiment (JSON)");
    add_common(perturb_cmd, opts);
    std::vector<int> zero_rows;
    int trials = 100;
    scalar_t scale = 1.0;
    perturb_cmd->add_option("--zero-rows", zero_rows, "1-based objective rows pinned to zero")
        ->delimiter(',');
    perturb_cmd->add_option("--trials", trials, "number of Monte-Carlo trials")
        ->check(CLI::PositiveNumber);
    perturb_cmd->add_option("--scale", scale, "uniform box half-width for free rows")
        ->check(CLI::PositiveNumber);

    auto* probe_cmd = app.add_subcommand(
        "diff-probe", "one-sided difference quotients of x* along a weight path");
    add_common(probe_cmd, opts);
    std::vector<scalar_t> from_coords, to_coords, at;
    scalar_t h = 1e-4;
    probe_cmd->add_option("--from", from_coords, "path start weights")->delimiter(',')->required();
    probe_cmd->add_option("--to", to_coords, "path end weights")->delimiter(',')->required();
    probe_cmd->add_option("--at", at, "path parameters to probe")->delimiter(',')->required();
    probe_cmd->add_option("--h", h, "difference step (h > 0)");

    auto* catalog_cmd = app.add_subcommand("catalog", "built-in problem catalog");
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog problems");
    catalog_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (pareto_cmd->parsed()) return cmd_pareto(opts, format);
        if (verify_cmd->parsed()) return cmd_verify(opts);
        if (perturb_cmd->parsed()) return cmd_perturb(opts, zero_rows, trials, scale);
        if (probe_cmd->parsed()) return cmd_diff_probe(opts, from_coords, to_coords, at, h);
        if (catalog_cmd->parsed() && list_cmd->parsed()) return cmd_catalog_list();
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
