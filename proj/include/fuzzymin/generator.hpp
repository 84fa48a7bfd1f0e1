#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fuzzymin/algebra.hpp"
#include "fuzzymin/concept.hpp"
#include "fuzzymin/graph.hpp"
#include "fuzzymin/interpretation.hpp"
#include "fuzzymin/statements.hpp"

namespace fuzzymin {

struct GeneratorParams {
    std::size_t min_vertices = 1;
    std::size_t max_vertices = 30;
    std::size_t max_edges = 150;
    std::size_t max_degree_pool = 8; ///< distinct nonzero edge degrees
    std::size_t max_vertex_labels = 3;
    std::size_t max_edge_labels = 3;
    std::size_t max_concept_names = 3;
    std::size_t max_role_names = 2;
    std::size_t max_individuals = 3;
    std::size_t max_role_depth = 2;
    FeatureSet features = FeatureSet::psi();
    std::uint64_t seed = 0;
};

/// Seeded source of random test instances. The same parameters, algebra and
/// call sequence always produce the same instances on every platform.
class InstanceGenerator {
public:
    InstanceGenerator(GeneratorParams params, Algebra algebra);

    const GeneratorParams &params() const { return params_; }
    const Algebra &algebra() const { return algebra_; }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi);

    /// `count` distinct nonzero degrees of the algebra (fewer if a finite
    /// chain has fewer elements), increasing.
    std::vector<Degree> degree_pool(std::size_t count);

    FuzzyGraph graph();
    /// Exactly n vertices and m distinct edges over `edge_labels` labels with
    /// max_degree_pool distinct degrees and no vertex labels.
    FuzzyGraph graph(std::size_t n, std::size_t m, std::size_t edge_labels);
    /// Half of the time the result is two copies of one smaller random
    /// interpretation, so that it has non-trivial bisimilarity classes.
    Interpretation interpretation();

    /// Random concept of depth at most `depth` over the signature of `i`
    /// using only constructors enabled in the params' feature set.
    ConceptPtr concept_expr(const Interpretation &i, std::size_t depth);
    RolePtr role(const Interpretation &i, std::size_t depth);

    TBoxAxiom tbox_axiom(const Interpretation &i, std::size_t depth);
    /// Requires at least one named individual in `i`.
    ConceptAssertion concept_assertion(const Interpretation &i, std::size_t depth);

private:
    Degree any_degree();

    GeneratorParams params_;
    Algebra algebra_;
    std::mt19937_64 rng_;
};

} // namespace fuzzymin
