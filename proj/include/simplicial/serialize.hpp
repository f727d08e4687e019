#pragma once

#include <json.hpp>

#include "simplicial/pareto.hpp"
#include "simplicial/perturbation.hpp"
#include "simplicial/verify.hpp"

namespace simplicial {

inline constexpr int kSchemaVersion = 1;

/// Versioned JSON document for a simpliciality report.
nlohmann::ordered_json report_to_json(const SimplicialityReport& report);

/// Versioned JSON document for a genericity experiment, including per-trial
/// seeds and perturbation matrices (exact zeros round-trip exactly).
nlohmann::ordered_json genericity_to_json(const std::string& problem_name,
                                          const std::vector<index_t>& zero_rows, int resolution,
                                          scalar_t tol_x, scalar_t scale, std::uint64_t seed,
                                          const GenericityStats& stats);

/// Versioned JSON document for a Pareto sample sweep.
nlohmann::ordered_json samples_to_json(const std::string& problem_name, int resolution,
                                       scalar_t tol_x, const std::vector<ParetoSample>& samples);

/// Reads a perturbation matrix back from the JSON emitted above.
LinearPerturbation perturbation_from_json(const nlohmann::ordered_json& trial,
                                          const std::vector<index_t>& zero_rows);

}  // namespace simplicial
