#pragma once

#include <functional>
#include <string>
#include <vector>

#include "simplicial/types.hpp"

namespace simplicial {

enum class Smoothness { c1, c2_or_higher };

/// One strongly convex objective f_i: R^n -> R given as callbacks, together
/// with its declared convexity parameter alpha_i > 0. The Hessian callback is
/// empty for objectives that are C1 only.
struct ObjectiveSpec {
    std::function<scalar_t(const vector_t&)> evaluate;
    std::function<vector_t(const vector_t&)> gradient;
    std::function<matrix_t(const vector_t&)> hessian;  // empty if unavailable
    scalar_t alpha = 0;
    Smoothness smoothness = Smoothness::c2_or_higher;

    bool has_hessian() const { return static_cast<bool>(hessian); }
};

/// Immutable bundle of m objectives sharing the decision space R^n.
/// Safe to share across threads; all operations on it are pure.
class ProblemInstance {
public:
    ProblemInstance(std::string name, index_t n, std::vector<ObjectiveSpec> objectives);

    const std::string& name() const { return name_; }
    index_t n() const { return n_; }
    index_t m() const { return static_cast<index_t>(objectives_.size()); }
    const ObjectiveSpec& objective(index_t i) const { return objectives_.at(static_cast<std::size_t>(i)); }
    const std::vector<ObjectiveSpec>& objectives() const { return objectives_; }

    /// Smallest declared convexity parameter, the alpha_0 of the Hölder bound.
    scalar_t min_alpha() const;

private:
    std::string name_;
    index_t n_;
    std::vector<ObjectiveSpec> objectives_;
};

/// Non-empty, strictly increasing subset of the objective indices {0,...,m-1},
/// identifying a subproblem f_I and the simplex face Delta_I.
class SubsetIndex {
public:
    /// Validates: non-empty, sorted strictly increasing, within [0, m).
    SubsetIndex(std::vector<index_t> members, index_t m);

    const std::vector<index_t>& members() const { return members_; }
    index_t size() const { return static_cast<index_t>(members_.size()); }
    index_t ambient() const { return m_; }
    bool is_full() const { return size() == m_; }

    /// All 2^m - 1 non-empty subsets, in mask order.
    static std::vector<SubsetIndex> all_nonempty(index_t m);

private:
    std::vector<index_t> members_;
    index_t m_;
};

/// f(x) as a vector of length m.
vector_t evaluate_all(const ProblemInstance& problem, const vector_t& x);

/// df_x as the m-by-n matrix of stacked gradient rows.
matrix_t jacobian(const ProblemInstance& problem, const vector_t& x);

/// The subproblem f_I: same decision space, objectives restricted to I.
ProblemInstance restrict_to(const ProblemInstance& problem, const SubsetIndex& I);

}  // namespace simplicial
