#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzymin/graph.hpp"
#include "fuzzymin/partition.hpp"

namespace fuzzymin {

/// Groups vertices by label vector and, per edge label r, by sup E(x, r, V).
Partition initial_partition(const FuzzyGraph &g);

/// Coarsest refinement of `p` stable w.r.t. both <splitter, r> and
/// <compound \ splitter, r>. Requires a non-empty splitter strictly inside
/// `compound`, both unions of blocks of `p`.
Partition split(const FuzzyGraph &g, const Partition &p, std::span<const Vertex> splitter,
                std::span<const Vertex> compound, LabelId r);

/// One pass of the main refinement loop.
struct RefinementStep {
    LabelId label;
    std::vector<Vertex> splitter; ///< Y', a block of P at the time it was chosen
    std::vector<Vertex> compound; ///< Y, the compound block of Q_label it came from
    bool changed;                 ///< whether P got finer
    Partition after;
};

struct RefinementOptions {
    bool record_trace = false;
    /// Recompute every degree aggregate from scratch after each split and
    /// throw std::logic_error on disagreement. Quadratic; for tests.
    bool verify_aggregates = false;
};

struct RefinementResult {
    Partition partition;
    std::size_t iterations = 0;
    std::vector<RefinementStep> trace;
};

/// Partition of the largest crisp bisimulation of `g`, computed by
/// smaller-half splitter refinement in O((m log l + n) log n).
///
/// Ties are broken deterministically: the lowest edge label with a pending
/// compound block, that label's oldest pending block, and within it the
/// first of its (at most two) leading sub-blocks whose size is at most half.
RefinementResult compute_coarsest_bisimulation(const FuzzyGraph &g, const RefinementOptions &options = {});

inline Partition compcb(const FuzzyGraph &g) { return compute_coarsest_bisimulation(g).partition; }

/// Reference implementation: signature refinement to a fixpoint, comparing
/// exact degrees directly. Quadratic-ish; used as a test oracle.
Partition naive_coarsest_stable_refinement(const FuzzyGraph &g);

/// Every block has a constant sup E(x, r, Y) for every block Y and label r.
bool is_stable(const FuzzyGraph &g, const Partition &p);

} // namespace fuzzymin
