#pragma once

#include <cstddef>

#include "fuzzymin/graph.hpp"
#include "fuzzymin/interpretation.hpp"
#include "fuzzymin/partition.hpp"

namespace fuzzymin {

/// Fuzzy graph of `i` for the features `phi`: one vertex per element,
/// vertex labels for the concept names (plus one crisp label "{a}" per
/// individual a when nominals are enabled), edge labels for the role names
/// (plus "r-" carrying the transpose of each r when inverse is enabled).
FuzzyGraph interpretation_to_graph(const Interpretation &i, FeatureSet phi);

/// Quotient of `i` by the blocks of `p`, a stable partition of
/// g = interpretation_to_graph(i, phi). Each block becomes an element named
/// after its members, e.g. "{v,w}"; concept degrees come from any member and
/// r(X, Y) = sup E(x, r, Y) for the least member x of X.
Interpretation quotient(const Interpretation &i, const Partition &p, const FuzzyGraph &g);

struct Minimization {
    Interpretation result;
    Partition partition;
    GraphStats stats;
    std::size_t iterations = 0;
};

Minimization minimize_detailed(const Interpretation &i, FeatureSet phi);

/// The quotient of `i` by its largest crisp auto-bisimulation for `phi`.
inline Interpretation minimize(const Interpretation &i, FeatureSet phi) { return minimize_detailed(i, phi).result; }

/// Restriction of `i` to the elements reachable from named individuals over
/// nonzero role instances, following inverses too when they are enabled.
/// Throws UsageError when `i` has no named individuals.
Interpretation prune_unreachable(const Interpretation &i, FeatureSet phi);

} // namespace fuzzymin
