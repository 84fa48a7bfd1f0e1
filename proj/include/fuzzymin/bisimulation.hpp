#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzymin/interpretation.hpp"

namespace fuzzymin {

/// Pairs (x, x') of elements of two interpretations, sorted and unique.
using Relation = std::vector<std::pair<Element, Element>>;

void normalize(Relation &z);

enum class BisimCondition { LabelAgreement, Forth, Back, NominalAgreement, Totality, Surjectivity };

const char *condition_name(BisimCondition c);

struct BisimulationReport {
    bool holds = true;
    std::optional<BisimCondition> violated;
    /// Witness pair; for totality only `left` is set, for surjectivity only `right`.
    std::optional<Element> left, right;
    std::string detail;
};

/// Checks the crisp bisimulation conditions for `phi` and reports the first
/// violated one, in the order label agreement, forth, back, nominal
/// agreement, totality, surjectivity. Forth and back range over role names
/// and, when inverse is enabled, their inverses; the last two apply only
/// when the universal role is enabled and `z` is non-empty.
///
/// Throws UsageError unless both interpretations share the algebra and the
/// same concept, role and individual names.
BisimulationReport is_bisimulation(const Interpretation &i1, const Interpretation &i2, const Relation &z,
                                   FeatureSet phi);

/// The largest bisimulation between i1 and i2, or the empty relation if the
/// universal role is enabled and no non-empty relation is total and surjective.
Relation largest_bisimulation(const Interpretation &i1, const Interpretation &i2, FeatureSet phi);

/// Every named individual is related to its counterpart by the largest
/// bisimulation. Throws UsageError when there are no named individuals.
bool are_bisimilar(const Interpretation &i1, const Interpretation &i2, FeatureSet phi);

} // namespace fuzzymin
