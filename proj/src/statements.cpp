#include "fuzzymin/statements.hpp"

#include <algorithm>

#include "fuzzymin/errors.hpp"
#include "fuzzymin/semantics.hpp"

namespace fuzzymin {

const char *comparison_symbol(Comparison op) {
    switch (op) {
    case Comparison::Ge: return ">=";
    case Comparison::Gt: return ">";
    case Comparison::Le: return "<=";
    case Comparison::Lt: return "<";
    }
    return "?";
}

bool compare(const Degree &value, Comparison op, const Degree &bound) {
    switch (op) {
    case Comparison::Ge: return value >= bound;
    case Comparison::Gt: return value > bound;
    case Comparison::Le: return value <= bound;
    case Comparison::Lt: return value < bound;
    }
    return false;
}

bool satisfies(const Interpretation &i, FeatureSet phi, const Assertion &a) {
    struct Visitor {
        const Interpretation &i;
        FeatureSet phi;

        bool operator()(const ConceptAssertion &s) const {
            const Element x = i.individual(s.individual);
            return compare(eval_concept(i, *s.concept_expr, phi)[x], s.op, s.bound);
        }
        bool operator()(const RoleAssertion &s) const {
            const Element x = i.individual(s.from);
            const Element y = i.individual(s.to);
            return compare(eval_role(i, *s.role, phi)(x, y), s.op, s.bound);
        }
        bool operator()(const SameIndividual &s) const { return i.individual(s.a) == i.individual(s.b); }
        bool operator()(const DistinctIndividuals &s) const { return i.individual(s.a) != i.individual(s.b); }
    };
    return std::visit(Visitor{i, phi}, a);
}

bool satisfies(const Interpretation &i, FeatureSet phi, const TBoxAxiom &axiom) {
    if (axiom.op != Comparison::Ge && axiom.op != Comparison::Gt)
        throw UsageError("TBox axioms take >= or > bounds");
    const auto values = eval_concept(i, *make_implies(axiom.lhs, axiom.rhs), phi);
    return std::all_of(values.begin(), values.end(), [&](const Degree &d) { return compare(d, axiom.op, axiom.bound); });
}

} // namespace fuzzymin
