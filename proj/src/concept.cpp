#include "fuzzymin/concept.hpp"

#include <algorithm>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

namespace {

ConceptPtr node(ConceptKind kind, ConceptPtr left = nullptr, ConceptPtr right = nullptr, RolePtr role = nullptr) {
    if (!left && kind != ConceptKind::Constant && kind != ConceptKind::Atomic && kind != ConceptKind::Nominal)
        throw UsageError("missing operand in concept expression");
    return std::make_shared<const ConceptExpr>(
        ConceptExpr{kind, Degree::zero(), {}, std::move(left), std::move(right), std::move(role)});
}

RolePtr role_node(RoleKind kind, RolePtr left, RolePtr right = nullptr) {
    if (!left) throw UsageError("missing operand in role expression");
    return std::make_shared<const RoleExpr>(RoleExpr{kind, {}, std::move(left), std::move(right), nullptr});
}

bool same(const ConceptPtr &a, const ConceptPtr &b) {
    if (!a || !b) return !a && !b;
    return equal(*a, *b);
}

bool same(const RolePtr &a, const RolePtr &b) {
    if (!a || !b) return !a && !b;
    return equal(*a, *b);
}

void collect(const RoleExpr &r, FeatureSet &out);

void collect(const ConceptExpr &c, FeatureSet &out) {
    if (c.kind == ConceptKind::Nominal) out = out.with(Feature::Nominal);
    if (c.left) collect(*c.left, out);
    if (c.right) collect(*c.right, out);
    if (c.role) collect(*c.role, out);
}

void collect(const RoleExpr &r, FeatureSet &out) {
    switch (r.kind) {
    case RoleKind::Atomic: break;
    case RoleKind::Inverse: out = out.with(Feature::Inverse); break;
    case RoleKind::Compose: out = out.with(Feature::Composition); break;
    case RoleKind::Union: out = out.with(Feature::Union); break;
    case RoleKind::Star: out = out.with(Feature::Star); break;
    case RoleKind::Test: out = out.with(Feature::Test); break;
    case RoleKind::Universal: out = out.with(Feature::Universal); break;
    }
    if (r.left) collect(*r.left, out);
    if (r.right) collect(*r.right, out);
    if (r.test) collect(*r.test, out);
}

const char *construct_name(Feature f) {
    switch (f) {
    case Feature::Composition: return "role composition";
    case Feature::Union: return "role union";
    case Feature::Star: return "reflexive-transitive closure";
    case Feature::Test: return "test roles";
    case Feature::Inverse: return "inverse roles";
    case Feature::Universal: return "the universal role";
    case Feature::Nominal: return "nominals";
    case Feature::Baaz: return "the Baaz projection";
    }
    return "?";
}

void check(FeatureSet used, FeatureSet phi) {
    for (auto f : {Feature::Composition, Feature::Union, Feature::Star, Feature::Test, Feature::Inverse,
                   Feature::Universal, Feature::Nominal})
        if (used.has(f) && !phi.has(f)) throw FeatureError(feature_name(f), construct_name(f));
}

} // namespace

ConceptPtr make_constant(Degree d) {
    return std::make_shared<const ConceptExpr>(ConceptExpr{ConceptKind::Constant, std::move(d), {}, nullptr, nullptr, nullptr});
}

ConceptPtr make_atomic(std::string name) {
    return std::make_shared<const ConceptExpr>(ConceptExpr{ConceptKind::Atomic, {}, std::move(name), nullptr, nullptr, nullptr});
}

ConceptPtr make_nominal(std::string individual) {
    return std::make_shared<const ConceptExpr>(
        ConceptExpr{ConceptKind::Nominal, {}, std::move(individual), nullptr, nullptr, nullptr});
}

ConceptPtr make_baaz(ConceptPtr c) { return node(ConceptKind::Baaz, std::move(c)); }
ConceptPtr make_not(ConceptPtr c) { return node(ConceptKind::Not, std::move(c)); }
ConceptPtr make_and(ConceptPtr c, ConceptPtr d) { return node(ConceptKind::And, std::move(c), std::move(d)); }
ConceptPtr make_or(ConceptPtr c, ConceptPtr d) { return node(ConceptKind::Or, std::move(c), std::move(d)); }
ConceptPtr make_implies(ConceptPtr c, ConceptPtr d) { return node(ConceptKind::Implies, std::move(c), std::move(d)); }

ConceptPtr make_forall(RolePtr r, ConceptPtr c) {
    if (!r) throw UsageError("missing role in quantifier");
    return node(ConceptKind::Forall, std::move(c), nullptr, std::move(r));
}

ConceptPtr make_exists(RolePtr r, ConceptPtr c) {
    if (!r) throw UsageError("missing role in quantifier");
    return node(ConceptKind::Exists, std::move(c), nullptr, std::move(r));
}

RolePtr make_role(std::string name) {
    return std::make_shared<const RoleExpr>(RoleExpr{RoleKind::Atomic, std::move(name), nullptr, nullptr, nullptr});
}

RolePtr make_inverse(RolePtr r) { return role_node(RoleKind::Inverse, std::move(r)); }
RolePtr make_compose(RolePtr r, RolePtr s) { return role_node(RoleKind::Compose, std::move(r), std::move(s)); }
RolePtr make_union(RolePtr r, RolePtr s) { return role_node(RoleKind::Union, std::move(r), std::move(s)); }
RolePtr make_star(RolePtr r) { return role_node(RoleKind::Star, std::move(r)); }

RolePtr make_test(ConceptPtr c) {
    if (!c) throw UsageError("missing concept in test role");
    return std::make_shared<const RoleExpr>(RoleExpr{RoleKind::Test, {}, nullptr, nullptr, std::move(c)});
}

RolePtr make_universal() {
    return std::make_shared<const RoleExpr>(RoleExpr{RoleKind::Universal, {}, nullptr, nullptr, nullptr});
}

bool equal(const ConceptExpr &a, const ConceptExpr &b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case ConceptKind::Constant: return a.degree == b.degree;
    case ConceptKind::Atomic:
    case ConceptKind::Nominal: return a.name == b.name;
    default: return same(a.left, b.left) && same(a.right, b.right) && same(a.role, b.role);
    }
}

bool equal(const RoleExpr &a, const RoleExpr &b) {
    if (a.kind != b.kind) return false;
    if (a.kind == RoleKind::Atomic) return a.name == b.name;
    return same(a.left, b.left) && same(a.right, b.right) && same(a.test, b.test);
}

std::size_t depth(const ConceptExpr &c) {
    std::size_t d = 0;
    if (c.left) d = std::max(d, depth(*c.left));
    if (c.right) d = std::max(d, depth(*c.right));
    return c.left ? d + 1 : 0;
}

FeatureSet features_of(const ConceptExpr &c) {
    FeatureSet out;
    collect(c, out);
    return out;
}

FeatureSet features_of(const RoleExpr &r) {
    FeatureSet out;
    collect(r, out);
    return out;
}

void require_features(const ConceptExpr &c, FeatureSet phi) { check(features_of(c), phi); }
void require_features(const RoleExpr &r, FeatureSet phi) { check(features_of(r), phi); }

} // namespace fuzzymin
