#pragma once

#include <cstdint>
#include <vector>

#include "simplicial/problem.hpp"

namespace simplicial {

enum class CertifyMethod { midpoint_definition, shifted_convexity, hessian_eigenvalue };

/// Outcome of a sampling-based strong-convexity check. A certificate can
/// falsify a claimed parameter; it never proves it (sampling is incomplete).
struct ConvexityCertificate {
    CertifyMethod method;
    scalar_t alpha_tested;
    long samples_used;
    scalar_t worst_margin;  // most negative slack observed; >= -tolerance means pass
    bool passed;
};

/// A probe (x, y, t) with t in [0, 1] for the segment-based characterizations.
struct ProbeTriple {
    vector_t x;
    vector_t y;
    scalar_t t;
};

inline constexpr scalar_t kConvexitySlack = 1e-9;

/// Seeded probes uniform in [lo, hi]^n, t uniform in [0, 1].
std::vector<ProbeTriple> sample_probe_triples(index_t n, int count, std::uint64_t seed,
                                              scalar_t lo = -2.0, scalar_t hi = 2.0);

/// Seeded points uniform in [lo, hi]^n.
std::vector<vector_t> sample_probe_points(index_t n, int count, std::uint64_t seed,
                                          scalar_t lo = -2.0, scalar_t hi = 2.0);

/// Checks the defining inequality
///   f(tx + (1-t)y) <= t f(x) + (1-t) f(y) - (alpha/2) t (1-t) |x - y|^2
/// on every triple.
ConvexityCertificate certify_midpoint(const ObjectiveSpec& objective, scalar_t alpha,
                                      const std::vector<ProbeTriple>& pairs,
                                      scalar_t slack = kConvexitySlack);

/// Checks plain convexity of g(x) = f(x) - (alpha/2) |x|^2 on every triple.
/// Equivalent to certify_midpoint by the norm identity; verdicts must agree.
ConvexityCertificate certify_shifted_convexity(const ObjectiveSpec& objective, scalar_t alpha,
                                               const std::vector<ProbeTriple>& pairs,
                                               scalar_t slack = kConvexitySlack);

/// Checks that the minimal Hessian eigenvalue is >= alpha - slack at every
/// probe point. Throws for C1-only objectives ("Hessian characterization
/// unavailable").
ConvexityCertificate certify_hessian(const ObjectiveSpec& objective, scalar_t alpha,
                                     const std::vector<vector_t>& probe_points,
                                     scalar_t slack = kConvexitySlack);

}  // namespace simplicial
