#include "simplicial/convexity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "simplicial/random.hpp"

namespace simplicial {

std::vector<ProbeTriple> sample_probe_triples(index_t n, int count, std::uint64_t seed,
                                              scalar_t lo, scalar_t hi) {
    Rng rng(seed);
    std::vector<ProbeTriple> triples;
    triples.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        ProbeTriple triple;
        triple.x = rng.uniform_vector(n, lo, hi);
        triple.y = rng.uniform_vector(n, lo, hi);
        triple.t = rng.uniform01();
        triples.push_back(std::move(triple));
    }
    return triples;
}

std::vector<vector_t> sample_probe_points(index_t n, int count, std::uint64_t seed,
                                          scalar_t lo, scalar_t hi) {
    Rng rng(seed);
    std::vector<vector_t> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) points.push_back(rng.uniform_vector(n, lo, hi));
    return points;
}

namespace {

void check_alpha(scalar_t alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("certify: alpha must be positive");
}

void check_t(scalar_t t) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("certify: t must lie in [0, 1]");
}

template <typename MarginFn>
ConvexityCertificate run_triples(CertifyMethod method, scalar_t alpha,
                                 const std::vector<ProbeTriple>& pairs, scalar_t slack,
                                 MarginFn margin_of) {
    check_alpha(alpha);
    ConvexityCertificate cert{method, alpha, static_cast<long>(pairs.size()),
                              std::numeric_limits<scalar_t>::infinity(), true};
    if (pairs.empty()) cert.worst_margin = 0.0;
    for (const ProbeTriple& triple : pairs) {
        check_t(triple.t);
        cert.worst_margin = std::min(cert.worst_margin, margin_of(triple));
    }
    cert.passed = cert.worst_margin >= -slack;
    return cert;
}

}  // namespace

ConvexityCertificate certify_midpoint(const ObjectiveSpec& objective, scalar_t alpha,
                                      const std::vector<ProbeTriple>& pairs, scalar_t slack) {
    auto margin = [&](const ProbeTriple& p) -> scalar_t {
        const scalar_t t = p.t;
        const vector_t mid = t * p.x + (1.0 - t) * p.y;
        const scalar_t lhs = objective.evaluate(mid);
        const scalar_t rhs = t * objective.evaluate(p.x) + (1.0 - t) * objective.evaluate(p.y) -
                             0.5 * alpha * t * (1.0 - t) * (p.x - p.y).squaredNorm();
        return rhs - lhs;
    };
    return run_triples(CertifyMethod::midpoint_definition, alpha, pairs, slack, margin);
}

ConvexityCertificate certify_shifted_convexity(const ObjectiveSpec& objective, scalar_t alpha,
                                               const std::vector<ProbeTriple>& pairs,
                                               scalar_t slack) {
    auto g = [&](const vector_t& z) -> scalar_t {
        return objective.evaluate(z) - 0.5 * alpha * z.squaredNorm();
    };
    auto margin = [&](const ProbeTriple& p) -> scalar_t {
        const scalar_t t = p.t;
        const vector_t mid = t * p.x + (1.0 - t) * p.y;
        return t * g(p.x) + (1.0 - t) * g(p.y) - g(mid);
    };
    return run_triples(CertifyMethod::shifted_convexity, alpha, pairs, slack, margin);
}

ConvexityCertificate certify_hessian(const ObjectiveSpec& objective, scalar_t alpha,
                                     const std::vector<vector_t>& probe_points, scalar_t slack) {
    check_alpha(alpha);
    if (objective.smoothness != Smoothness::c2_or_higher || !objective.has_hessian())
        throw std::invalid_argument("Hessian characterization unavailable");
    ConvexityCertificate cert{CertifyMethod::hessian_eigenvalue, alpha,
                              static_cast<long>(probe_points.size()),
                              std::numeric_limits<scalar_t>::infinity(), true};
    if (probe_points.empty()) cert.worst_margin = 0.0;
    for (const vector_t& point : probe_points) {
        Eigen::SelfAdjointEigenSolver<matrix_t> eigensolver(objective.hessian(point));
        const scalar_t min_eig = eigensolver.eigenvalues().minCoeff();
        cert.worst_margin = std::min(cert.worst_margin, min_eig - alpha);
    }
    cert.passed = cert.worst_margin >= -slack;
    return cert;
}

}  // namespace simplicial
