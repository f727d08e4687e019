#include "simplicial/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simplicial {

namespace {

// Quadratic c_i (x_i - p_i)^2 summed over coordinates. Tight convexity
// parameter 2*min(c): the Hessian is the constant diag(2c).
ObjectiveSpec diagonal_quadratic(vector_t c, vector_t p) {
    const index_t n = c.size();
    ObjectiveSpec obj;
    obj.evaluate = [c, p](const vector_t& x) -> scalar_t {
        return (c.array() * (x - p).array().square()).sum();
    };
    obj.gradient = [c, p](const vector_t& x) -> vector_t {
        return 2.0 * c.array() * (x - p).array();
    };
    obj.hessian = [c, n](const vector_t&) -> matrix_t {
        return matrix_t((2.0 * c).asDiagonal());
    };
    obj.alpha = 2.0 * c.minCoeff();
    obj.smoothness = Smoothness::c2_or_higher;
    return obj;
}

vector_t unit(index_t n, index_t i) {
    vector_t e = vector_t::Zero(n);
    e[i] = 1.0;
    return e;
}

ObjectiveSpec example2_f2() {
    ObjectiveSpec obj;
    obj.evaluate = [](const vector_t& x) -> scalar_t {
        const scalar_t t = x[0];
        return t < 1.0 ? t * t : t * t + (t - 1.0) * (t - 1.0);
    };
    // C1 only: the second derivative jumps from 2 to 4 at x = 1, but the
    // one-sided gradient values agree there (both equal 2).
    obj.gradient = [](const vector_t& x) -> vector_t {
        const scalar_t t = x[0];
        vector_t g(1);
        g[0] = t < 1.0 ? 2.0 * t : 4.0 * t - 2.0;
        return g;
    };
    obj.alpha = 2.0;
    obj.smoothness = Smoothness::c1;
    return obj;
}

ObjectiveSpec squared_norm_objective(index_t n) {
    ObjectiveSpec obj;
    obj.evaluate = [](const vector_t& x) -> scalar_t { return x.squaredNorm(); };
    obj.gradient = [](const vector_t& x) -> vector_t { return 2.0 * x; };
    obj.hessian = [n](const vector_t&) -> matrix_t { return 2.0 * matrix_t::Identity(n, n); };
    obj.alpha = 2.0;
    obj.smoothness = Smoothness::c2_or_higher;
    return obj;
}

scalar_t param_a(const CatalogParams& params) {
    scalar_t a = 1.0;
    for (const auto& [key, value] : params) {
        if (key == "a")
            a = value;
        else
            throw std::invalid_argument("catalog: unknown parameter '" + key + "'");
    }
    if (!(a > 0)) throw std::invalid_argument("catalog: parameter a must be positive");
    return a;
}

void reject_params(const std::string& name, const CatalogParams& params) {
    if (!params.empty())
        throw std::invalid_argument("catalog: problem '" + name + "' takes no parameters");
}

}  // namespace

ProblemInstance catalog_get(const std::string& name, const CatalogParams& params) {
    if (name == "example1") {
        const scalar_t a = param_a(params);
        vector_t c1(3), c(3);
        c1 << a, 1.0, 1.0;
        c << 1.0, 1.0, 1.0;
        std::vector<ObjectiveSpec> objectives;
        objectives.push_back(diagonal_quadratic(c1, unit(3, 0)));
        objectives.push_back(diagonal_quadratic(c, unit(3, 1)));
        objectives.push_back(diagonal_quadratic(c, unit(3, 2)));
        return ProblemInstance("example1", 3, std::move(objectives));
    }
    if (name == "example2") {
        reject_params(name, params);
        vector_t c(1), p(1);
        c << 1.0;
        p << 2.0;
        std::vector<ObjectiveSpec> objectives;
        objectives.push_back(diagonal_quadratic(c, p));
        objectives.push_back(example2_f2());
        return ProblemInstance("example2", 1, std::move(objectives));
    }
    if (name == "remark3_rank_deficient") {
        reject_params(name, params);
        std::vector<ObjectiveSpec> objectives(2, squared_norm_objective(1));
        return ProblemInstance("remark3_rank_deficient", 1, std::move(objectives));
    }
    if (name == "remark4_identical_norms") {
        reject_params(name, params);
        std::vector<ObjectiveSpec> objectives(3, squared_norm_objective(3));
        return ProblemInstance("remark4_identical_norms", 3, std::move(objectives));
    }
    throw std::invalid_argument("catalog: unknown problem '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"example1", "example2", "remark3_rank_deficient", "remark4_identical_norms"};
}

std::string catalog_describe(const std::string& name) {
    if (name == "example1")
        return "m=3, n=3: shifted quadratics, parameter a>0 (default 1); Pareto set is a (curved) triangle";
    if (name == "example2")
        return "m=2, n=1: (x-2)^2 paired with a piecewise quadratic that is C1 but not C2";
    if (name == "remark3_rank_deficient")
        return "m=2, n=1: f(x) = (x^2, x^2); Pareto set is the single point 0, rank df_0 = 0";
    if (name == "remark4_identical_norms")
        return "m=3, n=3: three copies of |x|^2; Pareto set is {0} until two components are perturbed";
    throw std::invalid_argument("catalog: unknown problem '" + name + "'");
}

std::optional<scalar_t> catalog_analytic_k0(const std::string& name, const CatalogParams& params) {
    if (name == "example1") {
        // On the Pareto set, f_1 ranges over [0, a+1] and f_2, f_3 over [0, 2].
        const scalar_t a = param_a(params);
        return std::max(a + 1.0, 2.0);
    }
    if (name == "example2") return 4.0;
    if (name == "remark3_rank_deficient") return 0.0;
    if (name == "remark4_identical_norms") return 0.0;
    return std::nullopt;
}

}  // namespace simplicial
