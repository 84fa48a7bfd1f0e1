#include "fuzzymin/generator.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

namespace {

constexpr std::int64_t kGrid = 20; // unit-interval degrees are drawn from k/20

} // namespace

InstanceGenerator::InstanceGenerator(GeneratorParams params, Algebra algebra)
    : params_(params), algebra_(std::move(algebra)), rng_(params.seed) {
    if (params_.min_vertices == 0 || params_.min_vertices > params_.max_vertices)
        throw UsageError("generator needs 1 <= min_vertices <= max_vertices");
}

std::uint64_t InstanceGenerator::below(std::uint64_t bound) {
    if (bound == 0) throw UsageError("empty range");
    return rng_() % bound;
}

std::size_t InstanceGenerator::between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

std::vector<Degree> InstanceGenerator::degree_pool(std::size_t count) {
    std::vector<Degree> candidates;
    if (algebra_.is_finite()) {
        for (std::size_t k = 1; k < algebra_.chain_length(); ++k) candidates.push_back(algebra_.element(k));
    } else {
        for (std::int64_t k = 1; k <= kGrid; ++k) candidates.push_back(Degree::fraction(k, kGrid));
    }
    std::vector<Degree> pool;
    while (pool.size() < count && !candidates.empty()) {
        auto pick = candidates.begin() + static_cast<std::ptrdiff_t>(below(candidates.size()));
        pool.push_back(*pick);
        candidates.erase(pick);
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

Degree InstanceGenerator::any_degree() {
    if (algebra_.is_finite()) return algebra_.element(below(algebra_.chain_length()));
    return Degree::fraction(static_cast<std::int64_t>(below(kGrid + 1)), kGrid);
}

FuzzyGraph InstanceGenerator::graph() {
    GraphBuilder b;
    const std::size_t n = between(params_.min_vertices, params_.max_vertices);
    for (std::size_t v = 0; v < n; ++v) b.add_vertex("v" + std::to_string(v));

    const std::size_t vertex_labels = between(0, params_.max_vertex_labels);
    const std::size_t label_values = between(1, 3);
    auto label_pool = degree_pool(label_values);
    label_pool.push_back(Degree::zero());
    for (std::size_t a = 0; a < vertex_labels; ++a) {
        const LabelId id = b.add_vertex_label("A" + std::to_string(a));
        for (Vertex v = 0; v < n; ++v) b.set_label(v, id, label_pool[below(label_pool.size())]);
    }

    const std::size_t edge_labels = between(1, std::max<std::size_t>(1, params_.max_edge_labels));
    for (std::size_t r = 0; r < edge_labels; ++r) b.add_edge_label("r" + std::to_string(r));
    const auto pool = degree_pool(between(1, std::max<std::size_t>(1, params_.max_degree_pool)));
    const std::size_t m = between(0, std::min(params_.max_edges, n * n * edge_labels));
    std::set<std::tuple<Vertex, LabelId, Vertex>> used;
    for (std::size_t k = 0; k < m; ++k) {
        const auto key = std::tuple{static_cast<Vertex>(below(n)), static_cast<LabelId>(below(edge_labels)),
                                    static_cast<Vertex>(below(n))};
        if (!used.insert(key).second) continue;
        b.add_edge(std::get<0>(key), std::get<1>(key), std::get<2>(key), pool[below(pool.size())]);
    }
    return std::move(b).build();
}

FuzzyGraph InstanceGenerator::graph(std::size_t n, std::size_t m, std::size_t edge_labels) {
    if (n == 0 || edge_labels == 0 || m > n * n * edge_labels) throw UsageError("impossible graph size");
    GraphBuilder b;
    for (std::size_t v = 0; v < n; ++v) b.add_vertex("v" + std::to_string(v));
    for (std::size_t r = 0; r < edge_labels; ++r) b.add_edge_label("r" + std::to_string(r));
    const auto pool = degree_pool(params_.max_degree_pool);
    std::set<std::tuple<Vertex, LabelId, Vertex>> used;
    while (used.size() < m) {
        const auto key = std::tuple{static_cast<Vertex>(below(n)), static_cast<LabelId>(below(edge_labels)),
                                    static_cast<Vertex>(below(n))};
        if (!used.insert(key).second) continue;
        b.add_edge(std::get<0>(key), std::get<1>(key), std::get<2>(key), pool[below(pool.size())]);
    }
    return std::move(b).build();
}

Interpretation InstanceGenerator::interpretation() {
    const bool doubled = params_.max_vertices >= 2 && below(2) == 0;
    const std::size_t hi = doubled ? params_.max_vertices / 2 : params_.max_vertices;
    const std::size_t n = between(std::min(params_.min_vertices, hi), hi);
    const std::size_t copies = doubled ? 2 : 1;

    InterpretationBuilder b(algebra_);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t x = 0; x < n; ++x) b.add_element((c ? "y" : "x") + std::to_string(x));
    auto at = [n](std::size_t copy, std::size_t x) { return static_cast<Element>(copy * n + x); };

    const std::size_t individuals = between(1, std::max<std::size_t>(1, params_.max_individuals));
    for (std::size_t a = 0; a < individuals; ++a) b.add_individual("o" + std::to_string(a), at(0, below(n)));

    auto label_pool = degree_pool(between(1, 2));
    label_pool.push_back(Degree::zero());
    const std::size_t concepts = between(1, std::max<std::size_t>(1, params_.max_concept_names));
    for (std::size_t a = 0; a < concepts; ++a) {
        const auto id = b.add_concept_name("A" + std::to_string(a));
        for (std::size_t x = 0; x < n; ++x) {
            const Degree d = label_pool[below(label_pool.size())];
            for (std::size_t c = 0; c < copies; ++c) b.set_concept(id, at(c, x), d);
        }
    }

    const auto pool = degree_pool(between(1, 3));
    const std::size_t roles = between(1, std::max<std::size_t>(1, params_.max_role_names));
    for (std::size_t r = 0; r < roles; ++r) {
        const auto id = b.add_role_name("r" + std::to_string(r));
        const std::size_t m = between(0, 2 * n);
        std::set<std::pair<std::size_t, std::size_t>> used;
        for (std::size_t k = 0; k < m; ++k) {
            const std::size_t x = below(n), y = below(n);
            if (!used.emplace(x, y).second) continue;
            const Degree d = pool[below(pool.size())];
            for (std::size_t c = 0; c < copies; ++c) b.add_role_instance(id, at(c, x), at(c, y), d);
        }
    }
    return std::move(b).build();
}

RolePtr InstanceGenerator::role(const Interpretation &i, std::size_t depth) {
    const FeatureSet phi = params_.features;
    auto atomic = [&]() -> RolePtr {
        auto r = make_role(i.role_names()[below(i.role_names().size())]);
        if (phi.has(Feature::Inverse) && below(3) == 0) return make_inverse(r);
        return r;
    };
    if (depth == 0 || below(3) == 0) {
        if (phi.has(Feature::Universal) && below(6) == 0) return make_universal();
        return atomic();
    }
    std::vector<RoleKind> options;
    for (auto [feature, kind] : {std::pair{Feature::Composition, RoleKind::Compose}, {Feature::Union, RoleKind::Union},
                                 {Feature::Star, RoleKind::Star}, {Feature::Test, RoleKind::Test},
                                 {Feature::Inverse, RoleKind::Inverse}})
        if (phi.has(feature)) options.push_back(kind);
    if (options.empty()) return atomic();
    // Operands are drawn into locals: argument evaluation order is unspecified.
    switch (options[below(options.size())]) {
    case RoleKind::Compose: {
        auto r = role(i, depth - 1);
        return make_compose(r, role(i, depth - 1));
    }
    case RoleKind::Union: {
        auto r = role(i, depth - 1);
        return make_union(r, role(i, depth - 1));
    }
    case RoleKind::Star: return make_star(role(i, depth - 1));
    case RoleKind::Test: return make_test(concept_expr(i, 1));
    case RoleKind::Inverse: return make_inverse(role(i, depth - 1));
    default: return atomic();
    }
}

ConceptPtr InstanceGenerator::concept_expr(const Interpretation &i, std::size_t depth) {
    const FeatureSet phi = params_.features;
    if (depth == 0 || below(5) == 0) {
        const bool nominal = phi.has(Feature::Nominal) && !i.individual_names().empty() && below(5) == 0;
        if (nominal) return make_nominal(i.individual_names()[below(i.individual_names().size())]);
        if (!i.concept_names().empty() && below(3) != 0)
            return make_atomic(i.concept_names()[below(i.concept_names().size())]);
        return make_constant(any_degree());
    }
    const std::size_t role_depth = std::min(params_.max_role_depth, depth - 1);
    switch (below(7)) {
    case 0: return make_baaz(concept_expr(i, depth - 1));
    case 1: return make_not(concept_expr(i, depth - 1));
    case 2: {
        auto c = concept_expr(i, depth - 1);
        return make_and(c, concept_expr(i, depth - 1));
    }
    case 3: {
        auto c = concept_expr(i, depth - 1);
        return make_or(c, concept_expr(i, depth - 1));
    }
    case 4: {
        auto c = concept_expr(i, depth - 1);
        return make_implies(c, concept_expr(i, depth - 1));
    }
    case 5: {
        auto r = role(i, role_depth);
        return make_forall(r, concept_expr(i, depth - 1));
    }
    default: {
        auto r = role(i, role_depth);
        return make_exists(r, concept_expr(i, depth - 1));
    }
    }
}

TBoxAxiom InstanceGenerator::tbox_axiom(const Interpretation &i, std::size_t depth) {
    auto lhs = concept_expr(i, depth);
    auto rhs = concept_expr(i, depth);
    const Comparison op = below(2) ? Comparison::Ge : Comparison::Gt;
    return TBoxAxiom{lhs, rhs, op, any_degree()};
}

ConceptAssertion InstanceGenerator::concept_assertion(const Interpretation &i, std::size_t depth) {
    if (i.individual_names().empty()) throw UsageError("assertions need a named individual");
    auto c = concept_expr(i, depth);
    const auto &a = i.individual_names()[below(i.individual_names().size())];
    const Comparison ops[] = {Comparison::Ge, Comparison::Gt, Comparison::Le, Comparison::Lt};
    return ConceptAssertion{c, a, ops[below(4)], any_degree()};
}

} // namespace fuzzymin
