#pragma once

#include <string>
#include <variant>

#include "fuzzymin/concept.hpp"
#include "fuzzymin/interpretation.hpp"

namespace fuzzymin {

enum class Comparison { Ge, Gt, Le, Lt };

const char *comparison_symbol(Comparison op);
bool compare(const Degree &value, Comparison op, const Degree &bound);

/// C(a) op p
struct ConceptAssertion {
    ConceptPtr concept_expr;
    std::string individual;
    Comparison op;
    Degree bound;
};

/// R(a, b) op p
struct RoleAssertion {
    RolePtr role;
    std::string from;
    std::string to;
    Comparison op;
    Degree bound;
};

struct SameIndividual {
    std::string a, b;
};

struct DistinctIndividuals {
    std::string a, b;
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion, SameIndividual, DistinctIndividuals>;

/// (C subsumed-by D) op p, with op one of Ge or Gt.
struct TBoxAxiom {
    ConceptPtr lhs;
    ConceptPtr rhs;
    Comparison op = Comparison::Ge;
    Degree bound;
};

bool satisfies(const Interpretation &i, FeatureSet phi, const Assertion &a);
/// (C -> D)(x) op p for every element x.
bool satisfies(const Interpretation &i, FeatureSet phi, const TBoxAxiom &axiom);

} // namespace fuzzymin
