#include <gtest/gtest.h>

#include <numeric>

#include "fuzzymin/errors.hpp"
#include "fuzzymin/generator.hpp"
#include "fuzzymin/minimize.hpp"
#include "fuzzymin/refine.hpp"
#include "support.hpp"

using namespace fuzzymin;
using fuzzymin::testing::deg;
using fuzzymin::testing::load_graph;
using fuzzymin::testing::load_interpretation;

namespace {

Partition named(const FuzzyGraph &g, std::vector<std::vector<std::string>> blocks) {
    std::vector<std::vector<Vertex>> out;
    for (const auto &block : blocks) {
        out.emplace_back();
        for (const auto &name : block) out.back().push_back(g.vertex(name));
    }
    return Partition(g.vertex_count(), std::move(out));
}

std::vector<Vertex> members(const FuzzyGraph &g, std::vector<std::string> names) {
    std::vector<Vertex> out;
    for (const auto &name : names) out.push_back(g.vertex(name));
    return out;
}

FuzzyGraph two_components(FeatureSet phi) {
    return interpretation_to_graph(load_interpretation("examples/two-components.json"), phi);
}

} // namespace

TEST(Compcb, ThreeVertexGraph) {
    const auto g = load_graph("examples/uvw-graph.json");
    EXPECT_EQ(compcb(g).to_string(g.vertex_names()), "{{u},{v,w}}");
    EXPECT_EQ(naive_coarsest_stable_refinement(g).to_string(g.vertex_names()), "{{u},{v,w}}");
}

TEST(Compcb, TwoComponentsWithInverse) {
    const auto g = two_components(FeatureSet::psi().with(Feature::Inverse));
    EXPECT_EQ(compcb(g), named(g, {{"a"}, {"a2"}, {"b"}, {"c"}, {"b2", "b3"}, {"d"}, {"e"}}));
}

TEST(Compcb, TwoComponentsFeatureCases) {
    const FeatureSet psi = FeatureSet::psi();
    EXPECT_EQ(compcb(two_components(psi)).size(), 2u);
    EXPECT_EQ(compcb(two_components(psi.with(Feature::Nominal))).size(), 3u);
    EXPECT_EQ(compcb(two_components(psi.with(Feature::Inverse))).size(), 7u);
    EXPECT_EQ(compcb(two_components(psi.with(Feature::Inverse).with(Feature::Nominal))).size(), 7u);
}

TEST(Compcb, EdgelessUniformGraphIsOneBlock) {
    GraphBuilder b;
    for (int k = 0; k < 5; ++k) b.add_vertex("x" + std::to_string(k));
    b.add_edge_label("r");
    const auto g = std::move(b).build();
    const auto result = compute_coarsest_bisimulation(g);
    EXPECT_EQ(result.partition, Partition::single_block(5));
    EXPECT_EQ(result.iterations, 0u);
}

TEST(Compcb, CompleteUniformGraphIsOneBlock) {
    GraphBuilder b;
    for (int k = 0; k < 6; ++k) b.add_vertex("x" + std::to_string(k));
    const LabelId r = b.add_edge_label("r");
    for (Vertex x = 0; x < 6; ++x)
        for (Vertex y = 0; y < 6; ++y) b.add_edge(x, r, y, deg("0.4"));
    const auto g = std::move(b).build();
    EXPECT_EQ(naive_coarsest_stable_refinement(g), Partition::single_block(6));
    EXPECT_EQ(compcb(g), Partition::single_block(6));
}

TEST(Compcb, EmptyGraphIsRejected) {
    EXPECT_THROW(compcb(GraphBuilder().build()), UsageError);
    EXPECT_THROW(naive_coarsest_stable_refinement(GraphBuilder().build()), UsageError);
}

TEST(Split, SeparatesBySuccessorDegree) {
    const auto g = two_components(FeatureSet::psi().with(Feature::Inverse));
    const auto p = named(g, {{"a", "a2"}, {"b"}, {"c"}, {"b2", "b3", "d", "e"}});
    EXPECT_EQ(p, initial_partition(g));
    const auto out = split(g, p, members(g, {"b"}), members(g, {"b", "b2", "b3", "c", "d", "e"}), g.edge_label("r"));
    EXPECT_EQ(out, named(g, {{"a"}, {"a2"}, {"b"}, {"b2", "b3", "d", "e"}, {"c"}}));
}

TEST(Split, InverseSplitSeparatesLoops) {
    const auto g = two_components(FeatureSet::psi().with(Feature::Inverse));
    const auto p = named(g, {{"a"}, {"a2"}, {"b"}, {"b2", "b3", "d", "e"}, {"c"}});
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    const auto out = split(g, p, members(g, {"a2"}), all, g.edge_label("r-"));
    EXPECT_EQ(out, named(g, {{"a"}, {"a2"}, {"b"}, {"b2", "b3"}, {"c"}, {"d", "e"}}));
}

TEST(Split, StablePartitionIsUnchanged) {
    const auto g = load_graph("examples/uvw-graph.json");
    const auto p = compcb(g);
    EXPECT_EQ(split(g, p, members(g, {"u"}), members(g, {"u", "v", "w"}), 0), p);
}

TEST(Split, RejectsBadSplitters) {
    const auto g = load_graph("examples/uvw-graph.json");
    const auto p = named(g, {{"u"}, {"v", "w"}});
    EXPECT_THROW(split(g, p, {}, members(g, {"u", "v", "w"}), 0), UsageError);
    EXPECT_THROW(split(g, p, members(g, {"u", "v", "w"}), members(g, {"u", "v", "w"}), 0), UsageError);
    EXPECT_THROW(split(g, p, members(g, {"u"}), members(g, {"u", "v"}), 0), UsageError);
    EXPECT_THROW(split(g, p, members(g, {"v"}), members(g, {"u", "v", "w"}), 0), UsageError);
}

TEST(IsStable, SmallPartitions) {
    const auto g = load_graph("examples/uvw-graph.json");
    EXPECT_TRUE(is_stable(g, compcb(g)));
    EXPECT_FALSE(is_stable(g, Partition::single_block(3)));
    EXPECT_TRUE(is_stable(g, Partition::discrete(3)));
}

TEST(Trace, StepsRefineAndEndAtResult) {
    const auto g = two_components(FeatureSet::psi().with(Feature::Inverse));
    RefinementOptions opts;
    opts.record_trace = true;
    opts.verify_aggregates = true;
    const auto result = compute_coarsest_bisimulation(g, opts);
    ASSERT_EQ(result.trace.size(), result.iterations);
    Partition previous = initial_partition(g);
    for (const auto &step : result.trace) {
        EXPECT_TRUE(step.after.refines(previous));
        EXPECT_EQ(step.changed, !(step.after == previous));
        EXPECT_LE(2 * step.splitter.size(), step.compound.size());
        previous = step.after;
    }
    EXPECT_EQ(previous, result.partition);
}

TEST(Differential, RandomGraphsMatchOracle) {
    const auto algebras = {Algebra::godel(), Algebra::product(), Algebra::lukasiewicz(), Algebra::finite_godel(5)};
    std::uint64_t seed = 1;
    for (const auto &alg : algebras)
        for (int k = 0; k < 60; ++k) {
            GeneratorParams params;
            params.max_vertices = 20;
            params.max_edges = 80;
            params.seed = seed++;
            InstanceGenerator gen(params, alg);
            const auto g = gen.graph();
            RefinementOptions opts;
            opts.verify_aggregates = true;
            const auto result = compute_coarsest_bisimulation(g, opts);
            ASSERT_EQ(result.partition, naive_coarsest_stable_refinement(g)) << "seed " << params.seed;
            ASSERT_TRUE(is_stable(g, result.partition));
            ASSERT_TRUE(result.partition.refines(initial_partition(g)));
            ASSERT_LE(result.iterations, g.edge_label_count() * (g.vertex_count() - 1));
        }
}

TEST(Differential, ResultIsCoarsest) {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        GeneratorParams params;
        params.max_vertices = 12;
        params.max_edges = 40;
        params.max_degree_pool = 3;
        params.seed = seed;
        InstanceGenerator gen(params, Algebra::godel());
        const auto g = gen.graph();
        const auto p = compcb(g);
        const auto p0 = initial_partition(g);
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) {
                auto blocks = p.blocks();
                blocks[a].insert(blocks[a].end(), blocks[b].begin(), blocks[b].end());
                blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
                const Partition merged(g.vertex_count(), std::move(blocks));
                ASSERT_FALSE(merged.refines(p0) && is_stable(g, merged)) << "seed " << seed;
            }
    }
}
