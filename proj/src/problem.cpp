#include "simplicial/problem.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplicial {

ProblemInstance::ProblemInstance(std::string name, index_t n, std::vector<ObjectiveSpec> objectives)
    : name_(std::move(name)), n_(n), objectives_(std::move(objectives)) {
    if (n_ <= 0) throw std::invalid_argument("ProblemInstance: n must be positive");
    if (objectives_.empty()) throw std::invalid_argument("ProblemInstance: need at least one objective");
    for (const auto& obj : objectives_) {
        if (!obj.evaluate || !obj.gradient)
            throw std::invalid_argument("ProblemInstance: objective missing evaluate/gradient");
        if (!(obj.alpha > 0))
            throw std::invalid_argument("ProblemInstance: convexity parameter must be positive");
    }
}

scalar_t ProblemInstance::min_alpha() const {
    scalar_t a = objectives_.front().alpha;
    for (const auto& obj : objectives_) a = std::min(a, obj.alpha);
    return a;
}

SubsetIndex::SubsetIndex(std::vector<index_t> members, index_t m)
    : members_(std::move(members)), m_(m) {
    if (members_.empty()) throw std::invalid_argument("SubsetIndex: empty subset");
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 0 || members_[i] >= m_)
            throw std::invalid_argument("SubsetIndex: member out of range");
        if (i > 0 && members_[i] <= members_[i - 1])
            throw std::invalid_argument("SubsetIndex: members must be strictly increasing");
    }
}

std::vector<SubsetIndex> SubsetIndex::all_nonempty(index_t m) {
    std::vector<SubsetIndex> subsets;
    const std::uint64_t total = (1ULL << m);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        std::vector<index_t> members;
        for (index_t i = 0; i < m; ++i)
            if (mask & (1ULL << i)) members.push_back(i);
        subsets.emplace_back(std::move(members), m);
    }
    return subsets;
}

namespace {
void check_dim(const ProblemInstance& problem, const vector_t& x) {
    if (x.size() != problem.n())
        throw std::invalid_argument("dimension mismatch: x has size " + std::to_string(x.size()) +
                                    ", problem expects " + std::to_string(problem.n()));
}
}  // namespace

vector_t evaluate_all(const ProblemInstance& problem, const vector_t& x) {
    check_dim(problem, x);
    vector_t values(problem.m());
    for (index_t i = 0; i < problem.m(); ++i) values[i] = problem.objective(i).evaluate(x);
    return values;
}

matrix_t jacobian(const ProblemInstance& problem, const vector_t& x) {
    check_dim(problem, x);
    matrix_t J(problem.m(), problem.n());
    for (index_t i = 0; i < problem.m(); ++i) J.row(i) = problem.objective(i).gradient(x).transpose();
    return J;
}

ProblemInstance restrict_to(const ProblemInstance& problem, const SubsetIndex& I) {
    if (I.ambient() != problem.m())
        throw std::invalid_argument("restrict_to: subset drawn from a different objective count");
    std::vector<ObjectiveSpec> subset;
    subset.reserve(static_cast<std::size_t>(I.size()));
    for (index_t i : I.members()) subset.push_back(problem.objective(i));
    return ProblemInstance(problem.name() + "|subproblem", problem.n(), std::move(subset));
}

}  // namespace simplicial
