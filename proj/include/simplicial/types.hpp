#pragma once

#include <Eigen/Dense>

namespace simplicial {

/** Scalar type; all arithmetic is 64-bit IEEE. */
using scalar_t = double;

/** Dense column vector. */
using vector_t = Eigen::Matrix<scalar_t, Eigen::Dynamic, 1>;

/** Dense matrix. */
using matrix_t = Eigen::Matrix<scalar_t, Eigen::Dynamic, Eigen::Dynamic>;

/** Index type shared with Eigen. */
using index_t = Eigen::Index;

}  // namespace simplicial
