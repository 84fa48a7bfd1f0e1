#pragma once

#include <cstddef>
#include <vector>

#include "fuzzymin/concept.hpp"
#include "fuzzymin/interpretation.hpp"

namespace fuzzymin {

/// Dense square matrix of degrees, all zero initially.
class DegreeMatrix {
public:
    explicit DegreeMatrix(std::size_t n) : n_(n), cells_(n * n) {}

    std::size_t size() const { return n_; }
    const Degree &operator()(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }
    Degree &operator()(std::size_t x, std::size_t y) { return cells_[x * n_ + y]; }

    friend bool operator==(const DegreeMatrix &, const DegreeMatrix &) = default;

private:
    std::size_t n_;
    std::vector<Degree> cells_;
};

/// R^I as a dense matrix. Throws FeatureError when R uses a constructor
/// outside `phi` and UsageError on names unknown to `i`.
DegreeMatrix eval_role(const Interpretation &i, const RoleExpr &r, FeatureSet phi);

/// C^I(x) for every element x, indexed by element id.
std::vector<Degree> eval_concept(const Interpretation &i, const ConceptExpr &c, FeatureSet phi);

} // namespace fuzzymin
