#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplicial/problem.hpp"

namespace simplicial {

using CatalogParams = std::map<std::string, scalar_t>;

/// Builds a named built-in problem. Known names:
///   example1                three quadratics on R^3, parameter a > 0 (default 1)
///   example2                two objectives on R, the second C1 but not C2
///   remark3_rank_deficient  f(x) = (x^2, x^2) on R
///   remark4_identical_norms f_i(x) = |x|^2, i = 1..3, on R^3
/// Throws std::invalid_argument for unknown names or invalid parameters.
ProblemInstance catalog_get(const std::string& name, const CatalogParams& params = {});

/// Names accepted by catalog_get, in listing order.
std::vector<std::string> catalog_names();

/// One-line description per catalog entry, for the CLI listing.
std::string catalog_describe(const std::string& name);

/// Analytic Hölder constant K0 = max_i max_{x,y in Pareto set} |f_i(x)-f_i(y)|
/// where a closed form of the Pareto set makes it available.
std::optional<scalar_t> catalog_analytic_k0(const std::string& name, const CatalogParams& params = {});

}  // namespace simplicial
