#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "fuzzymin/degree.hpp"
#include "fuzzymin/interpretation.hpp"

namespace fuzzymin {

struct ConceptExpr;
struct RoleExpr;
using ConceptPtr = std::shared_ptr<const ConceptExpr>;
using RolePtr = std::shared_ptr<const RoleExpr>;

enum class ConceptKind { Constant, Atomic, Nominal, Baaz, Not, And, Or, Implies, Forall, Exists };
enum class RoleKind { Atomic, Inverse, Compose, Union, Star, Test, Universal };

/// Concept syntax tree. Which fields are meaningful depends on `kind`:
/// Constant uses `degree`; Atomic and Nominal use `name`; unary nodes use
/// `left`; binary nodes use `left` and `right`; quantifiers use `role` and `left`.
struct ConceptExpr {
    ConceptKind kind;
    Degree degree;
    std::string name;
    ConceptPtr left;
    ConceptPtr right;
    RolePtr role;
};

/// Role syntax tree. Atomic uses `name`; Inverse and Star use `left`;
/// Compose and Union use `left` and `right`; Test uses `test`.
struct RoleExpr {
    RoleKind kind;
    std::string name;
    RolePtr left;
    RolePtr right;
    ConceptPtr test;
};

ConceptPtr make_constant(Degree d);
ConceptPtr make_atomic(std::string name);
ConceptPtr make_nominal(std::string individual);
ConceptPtr make_baaz(ConceptPtr c);
ConceptPtr make_not(ConceptPtr c);
ConceptPtr make_and(ConceptPtr c, ConceptPtr d);
ConceptPtr make_or(ConceptPtr c, ConceptPtr d);
ConceptPtr make_implies(ConceptPtr c, ConceptPtr d);
ConceptPtr make_forall(RolePtr r, ConceptPtr c);
ConceptPtr make_exists(RolePtr r, ConceptPtr c);

RolePtr make_role(std::string name);
RolePtr make_inverse(RolePtr r);
RolePtr make_compose(RolePtr r, RolePtr s);
RolePtr make_union(RolePtr r, RolePtr s);
RolePtr make_star(RolePtr r);
RolePtr make_test(ConceptPtr c);
RolePtr make_universal();

/// Structural equality.
bool equal(const ConceptExpr &a, const ConceptExpr &b);
bool equal(const RoleExpr &a, const RoleExpr &b);

/// Nesting depth of quantifiers and connectives; atoms have depth 0.
std::size_t depth(const ConceptExpr &c);

/// Features the expression uses (always including baaz).
FeatureSet features_of(const ConceptExpr &c);
FeatureSet features_of(const RoleExpr &r);

/// Throws FeatureError naming the first constructor not enabled by `phi`.
void require_features(const ConceptExpr &c, FeatureSet phi);
void require_features(const RoleExpr &r, FeatureSet phi);

} // namespace fuzzymin
