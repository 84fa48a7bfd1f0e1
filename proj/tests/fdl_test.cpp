#include <gtest/gtest.h>

#include "fuzzymin/bisimulation.hpp"
#include "fuzzymin/errors.hpp"
#include "fuzzymin/minimize.hpp"
#include "fuzzymin/refine.hpp"
#include "fuzzymin/semantics.hpp"
#include "fuzzymin/statements.hpp"
#include "fuzzymin/syntax.hpp"
#include "support.hpp"

using namespace fuzzymin;
using fuzzymin::testing::deg;
using fuzzymin::testing::is_isomorphic;
using fuzzymin::testing::load_interpretation;

namespace {

const FeatureSet kPsi = FeatureSet::psi();

Degree at(const Interpretation &i, const char *expr, const char *element, FeatureSet phi = kPsi) {
    return eval_concept(i, *parse_concept(expr, phi), phi)[i.element(element)];
}

Relation pairs(const Interpretation &a, const Interpretation &b, std::vector<std::pair<const char *, const char *>> names) {
    Relation z;
    for (auto [x, y] : names) z.emplace_back(a.element(x), b.element(y));
    normalize(z);
    return z;
}

} // namespace

TEST(FeatureSet, NamesAndParsing) {
    EXPECT_TRUE(FeatureSet().has(Feature::Baaz));
    EXPECT_EQ(FeatureSet::parse_list("baaz,comp,union,star,test,universal"), kPsi);
    EXPECT_EQ(kPsi.names(), (std::vector<std::string>{"baaz", "comp", "union", "star", "test", "universal"}));
    EXPECT_THROW(FeatureSet::parse_list("comp,star"), UsageError);
    EXPECT_THROW(FeatureSet::parse_list("baaz,inverted"), UsageError);
    EXPECT_TRUE(kPsi.without(Feature::Baaz).has(Feature::Baaz));
}

TEST(Eval, QuantifierTable) {
    struct Row {
        const char *expr;
        const char *godel, *product, *lukasiewicz;
    };
    const Row rows[] = {{"some r . A", "0.6", "0.48", "0.4"},
                        {"all r . A", "0.6", "0.75", "0.8"},
                        {"some (r* ; r) . A", "0.7", "0.504", "0.4"},
                        {"all (r* ; r) . A", "0.6", "0.75", "0.8"}};
    for (const auto &row : rows) {
        EXPECT_EQ(at(load_interpretation("examples/chain-abc.json", Algebra::godel()), row.expr, "a"), deg(row.godel));
        EXPECT_EQ(at(load_interpretation("examples/chain-abc.json", Algebra::product()), row.expr, "a"), deg(row.product));
        EXPECT_EQ(at(load_interpretation("examples/chain-abc.json", Algebra::lukasiewicz()), row.expr, "a"),
                  deg(row.lukasiewicz));
    }
}

TEST(Eval, TransitiveClosureMatchesPaths) {
    const auto i = load_interpretation("examples/chain-abc.json", Algebra::product());
    const auto m = eval_role(i, *parse_role("r* ; r"), kPsi);
    // a -> c directly 0.5, or via b: 0.8 * 0.7.
    EXPECT_EQ(m(i.element("a"), i.element("c")), max_degree(deg("0.5"), Algebra::product().tnorm(deg("0.8"), deg("0.7"))));
    EXPECT_EQ(m(i.element("c"), i.element("a")), Degree::zero());
    const auto star = eval_role(i, *parse_role("r*"), kPsi);
    for (Element x = 0; x < i.size(); ++x) EXPECT_EQ(star(x, x), Degree::one());
}

TEST(Eval, RoleConstructors) {
    const auto i = load_interpretation("examples/chain-abc.json");
    const auto all = FeatureSet::all();
    const auto u = eval_role(i, *make_universal(), all);
    for (Element x = 0; x < i.size(); ++x)
        for (Element y = 0; y < i.size(); ++y) EXPECT_EQ(u(x, y), Degree::one());
    const auto inv = eval_role(i, *parse_role("r-"), all);
    EXPECT_EQ(inv(i.element("b"), i.element("a")), deg("0.8"));
    const auto test = eval_role(i, *parse_role("A?"), all);
    EXPECT_EQ(test(i.element("b"), i.element("b")), deg("0.6"));
    EXPECT_EQ(test(i.element("a"), i.element("b")), Degree::zero());
    const auto uni = eval_role(i, *parse_role("r | r-"), all);
    EXPECT_EQ(uni(i.element("c"), i.element("b")), deg("0.7"));
}

TEST(Eval, PointwiseConnectives) {
    const auto i = load_interpretation("examples/chain-abc.json", Algebra::lukasiewicz());
    EXPECT_EQ(at(i, "0.3", "b"), deg("0.3"));
    EXPECT_EQ(at(i, "not A", "b"), deg("0.4"));
    EXPECT_EQ(at(i, "A & A", "b"), deg("0.2"));
    EXPECT_EQ(at(i, "A | A", "b"), Degree::one());
    EXPECT_EQ(at(i, "A -> 0.5", "c"), deg("0.6"));
    EXPECT_EQ(at(i, "tri A", "a"), Degree::one());
    EXPECT_EQ(at(i, "tri A", "c"), Degree::zero());
}

TEST(Eval, ForallIgnoresAbsentEdgesOnlyThroughResiduum) {
    const auto i = load_interpretation("examples/chain-abc.json");
    // c has no r-successors: the infimum over all y of (0 => C(y)) is 1.
    EXPECT_EQ(at(i, "all r . 0", "c"), Degree::one());
    EXPECT_EQ(at(i, "some r . 1", "c"), Degree::zero());
    EXPECT_EQ(at(i, "all U . A", "c"), deg("0.6"));
}

TEST(Eval, FeatureAndNameErrors) {
    const auto i = load_interpretation("examples/chain-abc.json");
    EXPECT_THROW(eval_concept(i, *make_exists(make_inverse(make_role("r")), make_atomic("A")), kPsi), FeatureError);
    EXPECT_THROW(eval_concept(i, *make_atomic("B"), kPsi), UsageError);
    EXPECT_THROW(eval_concept(i, *make_nominal("a"), FeatureSet::all()), UsageError);
    EXPECT_THROW(eval_role(i, *make_role("s"), kPsi), UsageError);
}

TEST(Bisimulation, MatchingModels) {
    const auto i = load_interpretation("examples/uvw.json");
    const auto j = load_interpretation("examples/uv-prime.json");
    const auto z = pairs(i, j, {{"u", "u'"}, {"v", "v'"}, {"w", "v'"}});
    for (FeatureSet phi : {FeatureSet(), kPsi, kPsi.with(Feature::Nominal)}) {
        EXPECT_TRUE(is_bisimulation(i, j, z, phi).holds);
        EXPECT_EQ(largest_bisimulation(i, j, phi), z);
    }
    EXPECT_TRUE(are_bisimilar(i, j, kPsi.with(Feature::Nominal)));
    // Incoming degrees differ: v has an r-predecessor at 0.7, v' only at 0.9.
    const auto report = is_bisimulation(i, j, z, FeatureSet::all());
    EXPECT_FALSE(report.holds);
    EXPECT_EQ(report.violated, BisimCondition::Back);
    EXPECT_FALSE(are_bisimilar(i, j, FeatureSet::all()));
}

TEST(Bisimulation, ExtraPairBreaksLabelAgreement) {
    const auto i = load_interpretation("examples/uvw.json");
    const auto j = load_interpretation("examples/uv-prime.json");
    const auto report = is_bisimulation(i, j, pairs(i, j, {{"u", "u'"}, {"u", "v'"}, {"v", "v'"}, {"w", "v'"}}), kPsi);
    EXPECT_FALSE(report.holds);
    EXPECT_EQ(report.violated, BisimCondition::LabelAgreement);
    EXPECT_EQ(report.left, i.element("u"));
    EXPECT_EQ(report.right, j.element("v'"));
}

TEST(Bisimulation, IdentityAndEmptyRelations) {
    const auto i = load_interpretation("examples/two-components.json");
    Relation id;
    for (Element x = 0; x < i.size(); ++x) id.emplace_back(x, x);
    EXPECT_TRUE(is_bisimulation(i, i, id, FeatureSet::all()).holds);
    EXPECT_TRUE(is_bisimulation(i, i, {}, FeatureSet::all()).holds);
}

TEST(Bisimulation, ForthAndUniversalConditions) {
    const auto i = load_interpretation("examples/uvw.json");
    const auto j = load_interpretation("examples/uv-prime.json");
    const auto partial = pairs(i, j, {{"u", "u'"}, {"v", "v'"}});
    auto report = is_bisimulation(i, j, partial, kPsi.without(Feature::Universal));
    EXPECT_EQ(report.violated, BisimCondition::Forth);
    const auto lonely = pairs(i, j, {{"v", "v'"}, {"w", "v'"}});
    EXPECT_TRUE(is_bisimulation(i, j, lonely, kPsi.without(Feature::Universal)).holds);
    report = is_bisimulation(i, j, lonely, kPsi);
    EXPECT_EQ(report.violated, BisimCondition::Totality);
    EXPECT_EQ(report.left, i.element("u"));
}

TEST(Bisimulation, SingletonsWithDifferentLabels) {
    auto single = [](const char *degree) {
        InterpretationBuilder b(Algebra::godel());
        b.add_element("x");
        b.set_concept(b.add_concept_name("A"), 0, deg(degree));
        b.add_role_name("r");
        return std::move(b).build();
    };
    EXPECT_TRUE(largest_bisimulation(single("0.5"), single("0.6"), kPsi).empty());
    EXPECT_EQ(largest_bisimulation(single("0.5"), single("0.5"), kPsi).size(), 1u);
    EXPECT_THROW(are_bisimilar(single("0.5"), single("0.5"), kPsi), UsageError);
}

TEST(Bisimulation, SignatureMismatch) {
    const auto i = load_interpretation("examples/uvw.json");
    const auto k = load_interpretation("examples/two-components.json");
    EXPECT_THROW(is_bisimulation(i, k, {}, kPsi), UsageError);
    const auto p = load_interpretation("examples/uv-prime.json", Algebra::product());
    EXPECT_THROW(largest_bisimulation(i, p, kPsi), UsageError);
}

TEST(Bisimulation, AutoBisimulationMatchesRefinement) {
    const auto i = load_interpretation("examples/two-components.json");
    for (FeatureSet phi : {kPsi, kPsi.with(Feature::Nominal), kPsi.with(Feature::Inverse)}) {
        const auto p = compcb(interpretation_to_graph(i, phi));
        const auto z = largest_bisimulation(i, i, phi);
        Relation expected;
        for (Element x = 0; x < i.size(); ++x)
            for (Element y = 0; y < i.size(); ++y)
                if (p.block_of(x) == p.block_of(y)) expected.emplace_back(x, y);
        EXPECT_EQ(z, expected);
    }
}

TEST(GraphEncoding, TwoComponents) {
    const auto i = load_interpretation("examples/two-components.json");
    const auto g = interpretation_to_graph(i, kPsi);
    EXPECT_EQ(g.vertex_label_count(), 0u);
    EXPECT_EQ(g.edge_label_names(), std::vector<std::string>{"r"});

    const auto go = interpretation_to_graph(i, kPsi.with(Feature::Nominal));
    ASSERT_EQ(go.vertex_label_count(), 1u);
    for (Vertex v = 0; v < go.vertex_count(); ++v)
        EXPECT_EQ(go.label(v, 0), go.vertex_name(v) == "a" ? Degree::one() : Degree::zero());

    const auto gi = interpretation_to_graph(i, kPsi.with(Feature::Inverse));
    EXPECT_EQ(gi.edge_label_names(), (std::vector<std::string>{"r", "r-"}));
    EXPECT_EQ(gi.edge_count(), 20u);
    const LabelId inv = gi.edge_label("r-");
    EXPECT_EQ(sup_degree(gi, gi.vertex("b"), inv, std::vector<Vertex>{gi.vertex("a")}), deg("0.8"));
}

TEST(Quotient, MergesEquivalentElements) {
    const auto i = load_interpretation("examples/uvw.json");
    const auto j = minimize(i, kPsi);
    ASSERT_EQ(j.element_names(), (std::vector<std::string>{"{u}", "{v,w}"}));
    EXPECT_EQ(j.individual("a"), j.element("{u}"));
    const auto r = j.role_extension(0);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].degree, deg("0.9"));
    EXPECT_EQ(r[1].degree, deg("0.8"));
    EXPECT_TRUE(is_isomorphic(j, load_interpretation("examples/uv-prime.json")));
}

TEST(Quotient, IdentityPartitionIsIsomorphic) {
    const auto i = load_interpretation("examples/two-components.json");
    const auto g = interpretation_to_graph(i, kPsi);
    EXPECT_TRUE(is_isomorphic(quotient(i, Partition::discrete(i.size()), g), i));
    EXPECT_THROW(quotient(i, Partition::discrete(3), g), UsageError);
}

TEST(Minimize, TwoComponentsFeatureCases) {
    const auto i = load_interpretation("examples/two-components.json");
    const auto j1 = minimize(i, kPsi);
    ASSERT_EQ(j1.size(), 2u);
    const auto u = j1.individual("o");
    const Element v = u == 0 ? 1 : 0;
    ASSERT_EQ(j1.role_extension(0).size(), 2u);
    for (const auto &inst : j1.role_extension(0)) {
        EXPECT_EQ(inst.to, v);
        EXPECT_EQ(inst.degree, inst.from == u ? deg("0.8") : Degree::one());
    }
    EXPECT_EQ(minimize(i, kPsi.with(Feature::Nominal)).size(), 3u);
    EXPECT_EQ(minimize(i, kPsi.with(Feature::Inverse)).size(), 7u);
    EXPECT_EQ(minimize(i, kPsi.with(Feature::Inverse).with(Feature::Nominal)).size(), 7u);
}

TEST(Minimize, CanonicalRelationIsBisimulation) {
    const auto i = load_interpretation("examples/two-components.json");
    for (FeatureSet phi : {kPsi, kPsi.with(Feature::Nominal), kPsi.with(Feature::Inverse)}) {
        const auto m = minimize_detailed(i, phi);
        Relation z;
        for (Element x = 0; x < i.size(); ++x) z.emplace_back(x, static_cast<Element>(m.partition.block_of(x)));
        EXPECT_TRUE(is_bisimulation(i, m.result, z, phi).holds);
        EXPECT_TRUE(is_bisimulation(i, m.result, z, phi.with(Feature::Universal)).holds);
        EXPECT_EQ(minimize(m.result, phi).size(), m.result.size());
    }
}

TEST(Minimize, SingleElementIsUnchanged) {
    InterpretationBuilder b(Algebra::godel());
    b.add_element("x");
    b.add_role_instance(b.add_role_name("r"), 0, 0, deg("0.5"));
    const auto i = std::move(b).build();
    const auto j = minimize(i, kPsi);
    EXPECT_TRUE(is_isomorphic(i, j));
}

TEST(Prune, TwoComponents) {
    const auto i = load_interpretation("examples/two-components.json");
    const FeatureSet no_u = kPsi.without(Feature::Universal);
    for (FeatureSet phi : {no_u, no_u.with(Feature::Inverse)}) {
        const auto p = prune_unreachable(i, phi);
        EXPECT_EQ(p.element_names(), (std::vector<std::string>{"a", "b", "c", "d", "e"}));
        EXPECT_EQ(p.role_instance_count(), 6u);
        EXPECT_TRUE(are_bisimilar(i, minimize(p, phi), phi));
    }
}

TEST(Prune, AllNamedIsIdentityAndUnnamedIsError) {
    const auto i = load_interpretation("examples/uvw.json");
    EXPECT_TRUE(is_isomorphic(prune_unreachable(i, kPsi), i));
    EXPECT_THROW(prune_unreachable(load_interpretation("examples/chain-abc.json"), kPsi), UsageError);
}

TEST(Satisfies, Assertions) {
    const auto g = load_interpretation("examples/uvw.json", Algebra::godel());
    EXPECT_TRUE(satisfies(g, kPsi, Assertion{ConceptAssertion{parse_concept("some r . A"), "a", Comparison::Ge, deg("0.5")}}));
    EXPECT_FALSE(satisfies(g, kPsi, Assertion{ConceptAssertion{parse_concept("A"), "a", Comparison::Lt, deg("1")}}));
    EXPECT_TRUE(satisfies(g, kPsi, Assertion{RoleAssertion{parse_role("r ; r"), "a", "a", Comparison::Le, deg("0")}}));
    EXPECT_TRUE(satisfies(g, kPsi, Assertion{SameIndividual{"a", "a"}}));
    EXPECT_FALSE(satisfies(g, kPsi, Assertion{DistinctIndividuals{"a", "a"}}));
    EXPECT_THROW(satisfies(g, kPsi, Assertion{SameIndividual{"a", "b"}}), UsageError);
}

TEST(Satisfies, QuantifierValues) {
    auto named = [&](const Algebra &alg) {
        auto j = io::interpretation_to_json(load_interpretation("examples/chain-abc.json", alg));
        j["individuals"] = {{"a", "a"}};
        return io::interpretation_from_json(j, alg);
    };
    const auto godel = named(Algebra::godel());
    const auto product = named(Algebra::product());
    EXPECT_TRUE(satisfies(godel, kPsi, Assertion{ConceptAssertion{parse_concept("some r . A"), "a", Comparison::Ge, deg("0.6")}}));
    EXPECT_FALSE(satisfies(product, kPsi, Assertion{ConceptAssertion{parse_concept("all r . A"), "a", Comparison::Gt, deg("0.75")}}));
    EXPECT_TRUE(satisfies(product, kPsi, Assertion{ConceptAssertion{parse_concept("all r . A"), "a", Comparison::Ge, deg("0.75")}}));
}

TEST(Satisfies, TboxAxioms) {
    const auto i = load_interpretation("examples/chain-abc.json", Algebra::lukasiewicz());
    const auto c = parse_concept("some r . A");
    EXPECT_TRUE(satisfies(i, kPsi, TBoxAxiom{c, c, Comparison::Ge, Degree::one()}));
    EXPECT_FALSE(satisfies(i, kPsi, TBoxAxiom{parse_concept("A"), parse_concept("0.7"), Comparison::Ge, Degree::one()}));
    EXPECT_TRUE(satisfies(i, kPsi, TBoxAxiom{parse_concept("A"), parse_concept("0.7"), Comparison::Ge, deg("0.7")}));
    EXPECT_THROW(satisfies(i, kPsi, TBoxAxiom{c, c, Comparison::Le, Degree::one()}), UsageError);
}
