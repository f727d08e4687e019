#include "simplicial/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplicial {

namespace {

// Pins the left-to-right float sum to exactly 1.0 by absorbing the rounding
// residual into the last positive coordinate; exact zeros stay untouched.
// (Adjusting the last summand makes the sequential total round to 1.0.)
void fix_sum(vector_t& coordinates) {
    index_t last = -1;
    for (index_t i = 0; i < coordinates.size(); ++i)
        if (coordinates[i] > 0.0) last = i;
    if (last < 0) throw std::invalid_argument("WeightVector: coordinates sum to zero");
    scalar_t rest = 0.0;
    for (index_t i = 0; i < coordinates.size(); ++i)
        if (i != last) rest += coordinates[i];
    const scalar_t fixed = 1.0 - rest;
    if (!(fixed > 0.0)) throw std::invalid_argument("WeightVector: degenerate coordinates");
    coordinates[last] = fixed;
}

}  // namespace

WeightVector::WeightVector(vector_t coordinates) : coordinates_(std::move(coordinates)) {
    for (index_t i = 0; i < coordinates_.size(); ++i)
        if (coordinates_[i] > 0.0) support_.push_back(i);
}

WeightVector WeightVector::normalized(vector_t coordinates) {
    if (coordinates.size() == 0) throw std::invalid_argument("WeightVector: empty coordinates");
    for (index_t i = 0; i < coordinates.size(); ++i)
        if (coordinates[i] < 0.0) throw std::invalid_argument("WeightVector: negative coordinate");
    const scalar_t sum = coordinates.sum();
    if (!(sum > 0.0)) throw std::invalid_argument("WeightVector: coordinates sum to zero");
    if (sum != 1.0) coordinates /= sum;
    fix_sum(coordinates);
    return WeightVector(std::move(coordinates));
}

WeightVector WeightVector::lattice(const std::vector<int>& k, int resolution) {
    if (resolution < 1) throw std::invalid_argument("WeightVector: resolution must be >= 1");
    if (k.empty()) throw std::invalid_argument("WeightVector: empty multi-index");
    int total = 0;
    for (int ki : k) {
        if (ki < 0) throw std::invalid_argument("WeightVector: negative lattice index");
        total += ki;
    }
    if (total != resolution)
        throw std::invalid_argument("WeightVector: lattice indices must sum to the resolution");
    vector_t coordinates(static_cast<index_t>(k.size()));
    for (std::size_t i = 0; i < k.size(); ++i)
        coordinates[static_cast<index_t>(i)] =
            static_cast<scalar_t>(k[i]) / static_cast<scalar_t>(resolution);
    fix_sum(coordinates);
    return WeightVector(std::move(coordinates));
}

WeightVector WeightVector::vertex(index_t m, index_t i) {
    if (i < 0 || i >= m) throw std::invalid_argument("WeightVector: vertex index out of range");
    vector_t coordinates = vector_t::Zero(m);
    coordinates[i] = 1.0;
    return WeightVector(std::move(coordinates));
}

std::size_t simplex_grid_size(index_t m, int resolution, std::size_t max_count) {
    if (m < 1) throw std::invalid_argument("simplex_grid: m must be >= 1");
    if (resolution < 1) throw std::invalid_argument("simplex_grid: resolution must be >= 1");
    // C(resolution + m - 1, m - 1) built incrementally; bail out at the cap.
    std::size_t count = 1;
    for (index_t j = 1; j < m; ++j) {
        count = count * (static_cast<std::size_t>(resolution) + static_cast<std::size_t>(j)) /
                static_cast<std::size_t>(j);
        if (count > max_count)
            throw std::overflow_error("simplex_grid: lattice size exceeds the configured cap");
    }
    return count;
}

std::vector<WeightVector> simplex_grid(index_t m, int resolution, std::size_t max_count) {
    const std::size_t count = simplex_grid_size(m, resolution, max_count);
    std::vector<WeightVector> grid;
    grid.reserve(count);
    std::vector<int> k(static_cast<std::size_t>(m), 0);
    // Descending lexicographic enumeration of multi-indices summing to the
    // resolution; warm-start sweeps rely on this order being deterministic.
    auto emit = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == k.size()) {
            k[pos] = remaining;
            grid.push_back(WeightVector::lattice(k, resolution));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            k[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    emit(emit, 0, resolution);
    return grid;
}

WeightVector face_embed(const SubsetIndex& I, const WeightVector& w_sub, index_t m) {
    if (I.ambient() != m) throw std::invalid_argument("face_embed: subset ambient mismatch");
    if (w_sub.dim() != I.size())
        throw std::invalid_argument("face_embed: weight dimension must equal the subset size");
    vector_t coordinates = vector_t::Zero(m);
    for (index_t j = 0; j < I.size(); ++j)
        coordinates[I.members()[static_cast<std::size_t>(j)]] = w_sub[j];
    // Placement preserves the exact unit sum; no renormalization, so the
    // embedded coordinates match w_sub bitwise.
    return WeightVector(std::move(coordinates));
}

WeightVector face_restrict(const WeightVector& w, const SubsetIndex& I) {
    if (I.ambient() != w.dim()) throw std::invalid_argument("face_restrict: ambient mismatch");
    for (index_t i : w.support())
        if (!std::binary_search(I.members().begin(), I.members().end(), i))
            throw std::invalid_argument("face_restrict: support not contained in the face");
    vector_t coordinates(I.size());
    for (index_t j = 0; j < I.size(); ++j)
        coordinates[j] = w[I.members()[static_cast<std::size_t>(j)]];
    return WeightVector(std::move(coordinates));
}

}  // namespace simplicial
