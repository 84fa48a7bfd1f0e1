#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzzymin/generator.hpp"

namespace fuzzymin {

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::size_t cases = 200;
    std::size_t max_vertices = 25;
    std::size_t concepts_per_case = 20;
    std::size_t concept_depth = 4;
    std::size_t axioms_per_case = 10;
    std::size_t assertions_per_case = 10;
    std::size_t axiom_depth = 3;
};

struct VerifyReport {
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures; ///< one line per failed case

    bool ok() const { return failed == 0; }
};

/// Godel, product, Lukasiewicz and a 6-element Lukasiewicz chain.
std::vector<Algebra> reference_algebras();

/// Feature sets exercised by the property checks: psi, psi + nominal,
/// psi + inverse, psi + universal (psi already has it), psi - universal.
std::vector<FeatureSet> reference_feature_sets();

/// Refinement result against the naive oracle, stability, and refinement of
/// the initial partition. Returns a description of the first failure.
std::optional<std::string> check_graph_case(const FuzzyGraph &g);

/// Canonical bisimulation to the quotient, idempotence, agreement of the
/// largest auto-bisimulation with the refinement partition, concept
/// invariance on bisimilar pairs and preservation of random TBox axioms and
/// assertions. Without the universal role, pruning plus minimization must
/// stay bisimilar to the input. Random expressions come from `gen`.
std::optional<std::string> check_interpretation_case(const Interpretation &i, FeatureSet phi, InstanceGenerator &gen,
                                                     const VerifyOptions &options);

/// Runs `options.cases` cases, each one random graph and one random
/// interpretation, cycling through the reference algebras and feature sets.
VerifyReport run_verification(const VerifyOptions &options);

} // namespace fuzzymin
