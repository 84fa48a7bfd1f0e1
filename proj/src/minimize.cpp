#include "fuzzymin/minimize.hpp"

#include <deque>
#include <map>

#include "fuzzymin/errors.hpp"
#include "fuzzymin/refine.hpp"

namespace fuzzymin {

FuzzyGraph interpretation_to_graph(const Interpretation &i, FeatureSet phi) {
    GraphBuilder b;
    for (const auto &name : i.element_names()) b.add_vertex(name);

    for (std::size_t c = 0; c < i.concept_names().size(); ++c) {
        const LabelId label = b.add_vertex_label(i.concept_names()[c]);
        const auto ext = i.concept_extension(c);
        for (Vertex v = 0; v < ext.size(); ++v) b.set_label(v, label, ext[v]);
    }
    if (phi.has(Feature::Nominal))
        for (const auto &a : i.individual_names()) b.set_label(i.individual(a), b.add_vertex_label("{" + a + "}"), Degree::one());

    std::vector<LabelId> forward;
    for (const auto &r : i.role_names()) forward.push_back(b.add_edge_label(r));
    for (std::size_t r = 0; r < i.role_names().size(); ++r)
        for (const auto &inst : i.role_extension(r)) b.add_edge(inst.from, forward[r], inst.to, inst.degree);

    if (phi.has(Feature::Inverse))
        for (std::size_t r = 0; r < i.role_names().size(); ++r) {
            const LabelId inv = b.add_edge_label(i.role_names()[r] + "-");
            for (const auto &inst : i.role_extension(r)) b.add_edge(inst.to, inv, inst.from, inst.degree);
        }
    return std::move(b).build();
}

Interpretation quotient(const Interpretation &i, const Partition &p, const FuzzyGraph &g) {
    if (p.vertex_count() != i.size() || g.vertex_count() != i.size())
        throw UsageError("partition does not cover the interpretation domain");

    InterpretationBuilder b(i.algebra());
    for (const auto &block : p.blocks()) {
        std::string name = "{";
        for (std::size_t k = 0; k < block.size(); ++k) name += (k ? "," : "") + i.element_name(block[k]);
        b.add_element(name + "}");
    }
    for (const auto &a : i.individual_names()) b.add_individual(a, static_cast<Element>(p.block_of(i.individual(a))));

    for (std::size_t c = 0; c < i.concept_names().size(); ++c) {
        const auto id = b.add_concept_name(i.concept_names()[c]);
        const auto ext = i.concept_extension(c);
        for (std::size_t x = 0; x < p.size(); ++x)
            if (!ext[p.block(x).front()].is_zero()) b.set_concept(id, static_cast<Element>(x), ext[p.block(x).front()]);
    }

    for (std::size_t r = 0; r < i.role_names().size(); ++r) {
        const auto id = b.add_role_name(i.role_names()[r]);
        const LabelId label = g.edge_label(i.role_names()[r]);
        for (std::size_t x = 0; x < p.size(); ++x) {
            std::map<std::size_t, const Degree *> sup;
            for (EdgeId e : g.out_edges(p.block(x).front(), label)) {
                const Edge &edge = g.edge(e);
                auto [it, inserted] = sup.emplace(p.block_of(edge.target), &edge.degree);
                if (!inserted && *it->second < edge.degree) it->second = &edge.degree;
            }
            for (auto [y, d] : sup) b.add_role_instance(id, static_cast<Element>(x), static_cast<Element>(y), *d);
        }
    }
    return std::move(b).build();
}

Minimization minimize_detailed(const Interpretation &i, FeatureSet phi) {
    const FuzzyGraph g = interpretation_to_graph(i, phi);
    auto refined = compute_coarsest_bisimulation(g);
    return Minimization{quotient(i, refined.partition, g), refined.partition, stats(g), refined.iterations};
}

Interpretation prune_unreachable(const Interpretation &i, FeatureSet phi) {
    if (i.individual_names().empty()) throw UsageError("pruning needs at least one named individual");

    std::vector<std::vector<Element>> next(i.size());
    for (std::size_t r = 0; r < i.role_names().size(); ++r)
        for (const auto &inst : i.role_extension(r)) {
            next[inst.from].push_back(inst.to);
            if (phi.has(Feature::Inverse)) next[inst.to].push_back(inst.from);
        }

    std::vector<char> seen(i.size(), 0);
    std::deque<Element> queue;
    for (const auto &a : i.individual_names()) {
        const Element e = i.individual(a);
        if (!seen[e]) {
            seen[e] = 1;
            queue.push_back(e);
        }
    }
    while (!queue.empty()) {
        const Element x = queue.front();
        queue.pop_front();
        for (Element y : next[x])
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
    }

    InterpretationBuilder b(i.algebra());
    std::vector<Element> renamed(i.size());
    for (Element x = 0; x < i.size(); ++x)
        if (seen[x]) renamed[x] = b.add_element(i.element_name(x));
    for (const auto &a : i.individual_names()) b.add_individual(a, renamed[i.individual(a)]);
    for (std::size_t c = 0; c < i.concept_names().size(); ++c) {
        const auto id = b.add_concept_name(i.concept_names()[c]);
        const auto ext = i.concept_extension(c);
        for (Element x = 0; x < i.size(); ++x)
            if (seen[x] && !ext[x].is_zero()) b.set_concept(id, renamed[x], ext[x]);
    }
    for (std::size_t r = 0; r < i.role_names().size(); ++r) {
        const auto id = b.add_role_name(i.role_names()[r]);
        for (const auto &inst : i.role_extension(r))
            if (seen[inst.from] && seen[inst.to]) b.add_role_instance(id, renamed[inst.from], renamed[inst.to], inst.degree);
    }
    return std::move(b).build();
}

} // namespace fuzzymin
