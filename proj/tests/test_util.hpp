#pragma once

#include <cmath>
#include <optional>

#include "simplicial/convexity.hpp"
#include "simplicial/problem.hpp"
#include "simplicial/random.hpp"

namespace simplicial::testing {

inline bool exactly_equal(const vector_t& a, const vector_t& b) {
    return a.size() == b.size() && (a.array() == b.array()).all();
}

inline bool exactly_equal(const matrix_t& a, const matrix_t& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

inline vector_t fd_gradient(const ObjectiveSpec& objective, const vector_t& x, scalar_t h = 1e-6) {
    vector_t g(x.size());
    for (index_t j = 0; j < x.size(); ++j) {
        vector_t lo = x, hi = x;
        lo[j] -= h;
        hi[j] += h;
        g[j] = (objective.evaluate(hi) - objective.evaluate(lo)) / (2 * h);
    }
    return g;
}

inline matrix_t fd_hessian(const ObjectiveSpec& objective, const vector_t& x, scalar_t h = 1e-6) {
    matrix_t H(x.size(), x.size());
    for (index_t j = 0; j < x.size(); ++j) {
        vector_t lo = x, hi = x;
        lo[j] -= h;
        hi[j] += h;
        H.col(j) = (objective.gradient(hi) - objective.gradient(lo)) / (2 * h);
    }
    return H;
}

// exp(x) on R: strictly convex but not strongly convex for any alpha once
// probed far enough to the left.
inline ObjectiveSpec exp_objective() {
    ObjectiveSpec obj;
    obj.evaluate = [](const vector_t& x) -> scalar_t { return std::exp(x[0]); };
    obj.gradient = [](const vector_t& x) -> vector_t {
        vector_t g(1);
        g[0] = std::exp(x[0]);
        return g;
    };
    obj.alpha = 1.0;  // deliberately bogus; certificates should falsify it
    obj.smoothness = Smoothness::c2_or_higher;
    return obj;
}

// Brute-force search for a triple violating the strong-convexity inequality
// at the claimed alpha; the oracle the certificates are tested against.
inline std::optional<ProbeTriple> find_violating_triple(const ObjectiveSpec& objective,
                                                        scalar_t alpha, scalar_t lo, scalar_t hi,
                                                        index_t n, std::uint64_t seed,
                                                        int attempts = 20000) {
    Rng rng(seed);
    for (int i = 0; i < attempts; ++i) {
        ProbeTriple triple{rng.uniform_vector(n, lo, hi), rng.uniform_vector(n, lo, hi),
                           rng.uniform01()};
        const vector_t mid = triple.t * triple.x + (1.0 - triple.t) * triple.y;
        const scalar_t rhs = triple.t * objective.evaluate(triple.x) +
                             (1.0 - triple.t) * objective.evaluate(triple.y) -
                             0.5 * alpha * triple.t * (1.0 - triple.t) *
                                 (triple.x - triple.y).squaredNorm();
        if (objective.evaluate(mid) > rhs + 1e-9) return triple;
    }
    return std::nullopt;
}

}  // namespace simplicial::testing
