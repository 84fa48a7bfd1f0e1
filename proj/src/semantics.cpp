#include "fuzzymin/semantics.hpp"

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

namespace {

class Evaluator {
public:
    explicit Evaluator(const Interpretation &i) : i_(i), alg_(i.algebra()), n_(i.size()) {}

    DegreeMatrix role(const RoleExpr &r) const {
        DegreeMatrix out(n_);
        switch (r.kind) {
        case RoleKind::Atomic:
            for (const auto &inst : i_.role_extension(role_index(r.name))) out(inst.from, inst.to) = inst.degree;
            break;
        case RoleKind::Inverse: {
            auto m = role(*r.left);
            for (std::size_t x = 0; x < n_; ++x)
                for (std::size_t y = 0; y < n_; ++y) out(x, y) = m(y, x);
            break;
        }
        case RoleKind::Compose: {
            auto a = role(*r.left);
            auto b = role(*r.right);
            for (std::size_t x = 0; x < n_; ++x)
                for (std::size_t z = 0; z < n_; ++z) {
                    if (a(x, z).is_zero()) continue;
                    for (std::size_t y = 0; y < n_; ++y) {
                        if (b(z, y).is_zero()) continue;
                        auto d = alg_.tnorm(a(x, z), b(z, y));
                        if (out(x, y) < d) out(x, y) = std::move(d);
                    }
                }
            break;
        }
        case RoleKind::Union: {
            auto a = role(*r.left);
            auto b = role(*r.right);
            for (std::size_t x = 0; x < n_; ++x)
                for (std::size_t y = 0; y < n_; ++y) out(x, y) = max_degree(a(x, y), b(x, y));
            break;
        }
        case RoleKind::Star: {
            out = role(*r.left);
            for (std::size_t x = 0; x < n_; ++x) out(x, x) = Degree::one();
            // Path degrees never grow along a path, so simple paths suffice
            // and one Floyd-Warshall sweep reaches the closure.
            for (std::size_t k = 0; k < n_; ++k)
                for (std::size_t x = 0; x < n_; ++x) {
                    if (x == k || out(x, k).is_zero()) continue;
                    for (std::size_t y = 0; y < n_; ++y) {
                        if (out(k, y).is_zero()) continue;
                        auto d = alg_.tnorm(out(x, k), out(k, y));
                        if (out(x, y) < d) out(x, y) = std::move(d);
                    }
                }
            break;
        }
        case RoleKind::Test: {
            auto c = concept_values(*r.test);
            for (std::size_t x = 0; x < n_; ++x) out(x, x) = std::move(c[x]);
            break;
        }
        case RoleKind::Universal:
            for (std::size_t x = 0; x < n_; ++x)
                for (std::size_t y = 0; y < n_; ++y) out(x, y) = Degree::one();
            break;
        }
        return out;
    }

    std::vector<Degree> concept_values(const ConceptExpr &c) const {
        std::vector<Degree> out(n_);
        switch (c.kind) {
        case ConceptKind::Constant:
            if (!alg_.contains(c.degree))
                throw UsageError("degree " + c.degree.to_string() + " is not an element of " + alg_.name());
            out.assign(n_, c.degree);
            break;
        case ConceptKind::Atomic: {
            auto index = i_.find_concept(c.name);
            if (!index) throw UsageError("unknown concept name '" + c.name + "'");
            auto ext = i_.concept_extension(*index);
            out.assign(ext.begin(), ext.end());
            break;
        }
        case ConceptKind::Nominal:
            out[i_.individual(c.name)] = Degree::one();
            break;
        case ConceptKind::Baaz:
            out = concept_values(*c.left);
            for (auto &d : out) d = alg_.baaz(d);
            break;
        case ConceptKind::Not:
            out = concept_values(*c.left);
            for (auto &d : out) d = alg_.negation(d);
            break;
        case ConceptKind::And:
        case ConceptKind::Or:
        case ConceptKind::Implies: {
            auto a = concept_values(*c.left);
            auto b = concept_values(*c.right);
            for (std::size_t x = 0; x < n_; ++x)
                out[x] = c.kind == ConceptKind::And  ? alg_.tnorm(a[x], b[x])
                         : c.kind == ConceptKind::Or ? alg_.snorm(a[x], b[x])
                                                     : alg_.residuum(a[x], b[x]);
            break;
        }
        case ConceptKind::Forall:
        case ConceptKind::Exists:
            out = quantifier(c);
            break;
        }
        return out;
    }

private:
    std::size_t role_index(const std::string &name) const {
        auto index = i_.find_role(name);
        if (!index) throw UsageError("unknown role name '" + name + "'");
        return *index;
    }

    // Absent role pairs contribute 0 (x) c = 0 to a sup and (0 => c) = 1 to an
    // inf, so both quantifiers only need the nonzero entries of R.
    std::vector<Degree> quantifier(const ConceptExpr &c) const {
        const bool exists = c.kind == ConceptKind::Exists;
        auto body = concept_values(*c.left);
        std::vector<Degree> out(n_, exists ? Degree::zero() : Degree::one());
        auto visit = [&](std::size_t x, std::size_t y, const Degree &r) {
            if (exists) {
                auto d = alg_.tnorm(r, body[y]);
                if (out[x] < d) out[x] = std::move(d);
            } else {
                auto d = alg_.residuum(r, body[y]);
                if (d < out[x]) out[x] = std::move(d);
            }
        };
        const RoleExpr &r = *c.role;
        if (r.kind == RoleKind::Atomic) {
            for (const auto &inst : i_.role_extension(role_index(r.name))) visit(inst.from, inst.to, inst.degree);
        } else if (r.kind == RoleKind::Inverse && r.left->kind == RoleKind::Atomic) {
            for (const auto &inst : i_.role_extension(role_index(r.left->name))) visit(inst.to, inst.from, inst.degree);
        } else {
            auto m = role(r);
            for (std::size_t x = 0; x < n_; ++x)
                for (std::size_t y = 0; y < n_; ++y)
                    if (!m(x, y).is_zero()) visit(x, y, m(x, y));
        }
        return out;
    }

    const Interpretation &i_;
    const Algebra &alg_;
    std::size_t n_;
};

} // namespace

DegreeMatrix eval_role(const Interpretation &i, const RoleExpr &r, FeatureSet phi) {
    require_features(r, phi);
    return Evaluator(i).role(r);
}

std::vector<Degree> eval_concept(const Interpretation &i, const ConceptExpr &c, FeatureSet phi) {
    require_features(c, phi);
    return Evaluator(i).concept_values(c);
}

} // namespace fuzzymin
