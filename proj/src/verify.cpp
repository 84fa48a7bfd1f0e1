#include "fuzzymin/verify.hpp"

#include <algorithm>
#include <sstream>

#include "fuzzymin/bisimulation.hpp"
#include "fuzzymin/errors.hpp"
#include "fuzzymin/minimize.hpp"
#include "fuzzymin/refine.hpp"
#include "fuzzymin/semantics.hpp"
#include "fuzzymin/syntax.hpp"

namespace fuzzymin {

namespace {

std::string features_label(FeatureSet phi) {
    std::string out;
    for (const auto &name : phi.names()) out += (out.empty() ? "" : ",") + name;
    return out;
}

Partition classes_of(const Relation &z, std::size_t n) {
    std::vector<std::vector<Vertex>> rows(n);
    for (auto [x, y] : z) rows[x].push_back(y);
    std::vector<std::vector<Vertex>> blocks;
    std::vector<char> placed(n, 0);
    for (Vertex x = 0; x < n; ++x) {
        if (placed[x]) continue;
        for (Vertex y : rows[x]) placed[y] = 1;
        blocks.push_back(rows[x]);
    }
    return Partition(n, std::move(blocks));
}

} // namespace

std::vector<Algebra> reference_algebras() {
    return {Algebra::godel(), Algebra::product(), Algebra::lukasiewicz(), Algebra::finite_lukasiewicz(6)};
}

std::vector<FeatureSet> reference_feature_sets() {
    const FeatureSet psi = FeatureSet::psi();
    return {psi, psi.with(Feature::Nominal), psi.with(Feature::Inverse), psi.with(Feature::Universal),
            psi.without(Feature::Universal)};
}

std::optional<std::string> check_graph_case(const FuzzyGraph &g) {
    RefinementOptions opts;
    opts.verify_aggregates = true;
    Partition fast;
    try {
        fast = compute_coarsest_bisimulation(g, opts).partition;
    } catch (const std::logic_error &e) {
        return std::string("aggregate check failed: ") + e.what();
    }
    const Partition slow = naive_coarsest_stable_refinement(g);
    if (!(fast == slow))
        return "refinement " + fast.to_string(g.vertex_names()) + " differs from oracle " + slow.to_string(g.vertex_names());
    if (!is_stable(g, fast)) return "refinement result is not stable";
    if (!fast.refines(initial_partition(g))) return "refinement result does not refine the initial partition";
    return std::nullopt;
}

std::optional<std::string> check_interpretation_case(const Interpretation &i, FeatureSet phi, InstanceGenerator &gen,
                                                     const VerifyOptions &options) {
    const Minimization m = minimize_detailed(i, phi);
    const Interpretation &j = m.result;

    Relation canonical;
    for (Element x = 0; x < i.size(); ++x) canonical.emplace_back(x, static_cast<Element>(m.partition.block_of(x)));
    for (FeatureSet f : {phi, phi.with(Feature::Universal)}) {
        auto report = is_bisimulation(i, j, canonical, f);
        if (!report.holds)
            return std::string("canonical relation fails ") + condition_name(*report.violated) + " under " +
                   features_label(f);
    }

    if (minimize(j, phi).size() != j.size()) return "minimization is not idempotent";

    const Relation auto_bisim = largest_bisimulation(i, i, phi);
    if (!(classes_of(auto_bisim, i.size()) == m.partition))
        return "largest auto-bisimulation disagrees with the refinement partition";

    for (std::size_t k = 0; k < options.concepts_per_case; ++k) {
        auto c = gen.concept_expr(i, options.concept_depth);
        const auto vi = eval_concept(i, *c, phi);
        const auto vj = eval_concept(j, *c, phi);
        for (auto [x, y] : auto_bisim)
            if (vi[x] != vi[y])
                return "concept " + print_concept(*c) + " separates bisimilar " + i.element_name(x) + " and " +
                       i.element_name(y);
        for (Element x = 0; x < i.size(); ++x)
            if (vi[x] != vj[m.partition.block_of(x)])
                return "concept " + print_concept(*c) + " changes value at " + i.element_name(x) + " after minimization";
    }

    for (std::size_t k = 0; k < options.axioms_per_case; ++k) {
        auto ax = gen.tbox_axiom(i, options.axiom_depth);
        if (satisfies(i, phi, ax) != satisfies(j, phi, ax))
            return "TBox axiom (" + print_concept(*ax.lhs) + ") => (" + print_concept(*ax.rhs) + ") not preserved";
    }

    if (!i.individual_names().empty()) {
        for (std::size_t k = 0; k < options.assertions_per_case; ++k) {
            Assertion a = gen.concept_assertion(i, options.axiom_depth);
            if (satisfies(i, phi, a) != satisfies(j, phi, a))
                return "assertion on " + print_concept(*std::get<ConceptAssertion>(a).concept_expr) + " not preserved";
        }
        if (phi.has(Feature::Nominal)) {
            const auto &names = i.individual_names();
            for (const auto &a : names)
                for (const auto &b : names) {
                    if (satisfies(i, phi, Assertion{SameIndividual{a, b}}) != satisfies(j, phi, Assertion{SameIndividual{a, b}}))
                        return "equality of " + a + " and " + b + " not preserved";
                    auto r = gen.role(i, 2);
                    const Comparison ops[] = {Comparison::Ge, Comparison::Gt, Comparison::Le, Comparison::Lt};
                    const Comparison op = ops[gen.below(4)];
                    const Degree p = gen.degree_pool(1).front();
                    Assertion ra = RoleAssertion{r, a, b, op, p};
                    if (satisfies(i, phi, ra) != satisfies(j, phi, ra))
                        return "role assertion " + print_role(*r) + "(" + a + ", " + b + ") not preserved";
                }
        }
        if (!phi.has(Feature::Universal)) {
            const Interpretation pruned = minimize(prune_unreachable(i, phi), phi);
            if (!are_bisimilar(i, pruned, phi)) return "pruned minimization is not bisimilar to the input";
        }
    }
    return std::nullopt;
}

VerifyReport run_verification(const VerifyOptions &options) {
    VerifyReport report;
    const auto algebras = reference_algebras();
    const auto feature_sets = reference_feature_sets();
    for (std::size_t k = 0; k < options.cases; ++k) {
        const Algebra &alg = algebras[k % algebras.size()];
        const FeatureSet phi = feature_sets[k % feature_sets.size()];
        GeneratorParams params;
        params.max_vertices = options.max_vertices;
        params.features = phi;
        params.seed = options.seed * 1000003u + k;
        InstanceGenerator gen(params, alg);

        std::optional<std::string> failure;
        try {
            failure = check_graph_case(gen.graph());
            if (!failure) failure = check_interpretation_case(gen.interpretation(), phi, gen, options);
        } catch (const std::exception &e) {
            failure = std::string("unexpected error: ") + e.what();
        }
        ++report.cases;
        if (failure) {
            ++report.failed;
            std::ostringstream line;
            line << "case " << k << " (" << alg.name() << "; " << features_label(phi) << "): " << *failure;
            report.failures.push_back(line.str());
        } else {
            ++report.passed;
        }
    }
    return report;
}

} // namespace fuzzymin
