#pragma once

#include <vector>

#include "simplicial/problem.hpp"
#include "simplicial/types.hpp"

namespace simplicial {

/// A point of the standard simplex with exact face-membership bookkeeping:
/// coordinates sum to 1.0 exactly (the largest coordinate absorbs the
/// rounding residual) and the support {i : w_i > 0} is maintained as written,
/// so zero coordinates are exact zeros.
class WeightVector {
public:
    /// Validates non-negativity, divides by the sum, fixes the sum to 1.0.
    static WeightVector normalized(vector_t coordinates);

    /// Lattice point k / resolution with sum(k) == resolution.
    static WeightVector lattice(const std::vector<int>& k, int resolution);

    /// The i-th vertex e_i of Delta^{m-1}.
    static WeightVector vertex(index_t m, index_t i);

    const vector_t& coordinates() const { return coordinates_; }
    const std::vector<index_t>& support() const { return support_; }
    index_t dim() const { return coordinates_.size(); }
    scalar_t operator[](index_t i) const { return coordinates_[i]; }

private:
    explicit WeightVector(vector_t coordinates);

    friend WeightVector face_embed(const SubsetIndex& I, const WeightVector& w_sub, index_t m);
    friend WeightVector face_restrict(const WeightVector& w, const SubsetIndex& I);

    vector_t coordinates_;
    std::vector<index_t> support_;
};

/// All lattice points {k/resolution : sum(k) = resolution} of Delta^{m-1},
/// in descending lexicographic order of the multi-index k. The count is
/// C(resolution + m - 1, m - 1); exceeding max_count throws overflow_error.
std::vector<WeightVector> simplex_grid(index_t m, int resolution,
                                       std::size_t max_count = 2'000'000);

/// Binomial C(resolution + m - 1, m - 1) guarded against overflow of the cap.
std::size_t simplex_grid_size(index_t m, int resolution, std::size_t max_count = 2'000'000);

/// Embeds a weight on Delta^{|I|-1} into the face Delta_I of Delta^{m-1}:
/// coordinates of I filled in order, the rest exactly zero.
WeightVector face_embed(const SubsetIndex& I, const WeightVector& w_sub, index_t m);

/// Inverse of face_embed on its image; requires support(w) within I.
WeightVector face_restrict(const WeightVector& w, const SubsetIndex& I);

}  // namespace simplicial
