#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fuzzymin/errors.hpp"
#include "fuzzymin/io.hpp"
#include "fuzzymin/refine.hpp"
#include "support.hpp"

using namespace fuzzymin;
using fuzzymin::testing::data_path;
using fuzzymin::testing::deg;
using Json = io::Json;

TEST(DegreeJson, Forms) {
    const auto g = Algebra::godel();
    EXPECT_EQ(io::degree_from_json("0.8", g), deg("4/5"));
    EXPECT_EQ(io::degree_from_json("7/10", g), deg("0.7"));
    EXPECT_EQ(io::degree_from_json(Json(0.8), g), deg("0.8"));
    EXPECT_EQ(io::degree_from_json(Json(1), g), Degree::one());
    EXPECT_EQ(io::degree_from_json(Json(1e-5), g), deg("0.00001"));
    EXPECT_THROW(io::degree_from_json(Json(-0.5), g), ParseError);
    EXPECT_THROW(io::degree_from_json(Json(2), g), ParseError);
    EXPECT_THROW(io::degree_from_json(Json(true), g), UsageError);

    const auto chain = Algebra::finite_lukasiewicz(5);
    EXPECT_EQ(io::degree_from_json("#3", chain), deg("0.75"));
    EXPECT_THROW(io::degree_from_json("#7", chain), UsageError);
    EXPECT_THROW(io::degree_from_json("#x", chain), ParseError);
    EXPECT_THROW(io::degree_from_json("0.3", chain), UsageError);
    EXPECT_EQ(io::degree_to_json(deg("1/3")), Json("1/3"));
    EXPECT_EQ(io::degree_to_json(deg("0.25")), Json("0.25"));
}

TEST(LatticeJson, BundledLatticesRoundTrip) {
    for (const auto &entry : std::filesystem::directory_iterator(data_path("lattices"))) {
        const auto j = io::read_json(entry.path());
        const auto alg = io::lattice_from_json(j);
        EXPECT_EQ(io::lattice_to_json(alg), j) << entry.path();
    }
    EXPECT_EQ(io::algebra_from_selector("lattice:" + data_path("lattices/godel-3.json")), Algebra::finite_godel(3));
    EXPECT_THROW(io::algebra_from_selector("minimum"), UsageError);
    EXPECT_THROW(io::lattice_from_json(Json{{"chain", 2}}), UsageError);
}

TEST(GraphJson, LoadAndWrite) {
    const auto j = io::read_json(data_path("examples/uvw-graph.json"));
    const auto g = io::graph_from_json(j, Algebra::godel());
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 5u);
    EXPECT_EQ(g.label(g.vertex("v"), 0), deg("0.5"));
    const auto again = io::graph_from_json(io::graph_to_json(g), Algebra::godel());
    EXPECT_EQ(io::graph_to_json(again), io::graph_to_json(g));
    EXPECT_EQ(io::partition_to_json(compcb(g), g.vertex_names()), Json::parse(R"([["u"],["v","w"]])"));
}

TEST(GraphJson, Errors) {
    const auto g = Algebra::godel();
    EXPECT_THROW(io::graph_from_json(Json::parse(R"({"edges": []})"), g), UsageError);
    EXPECT_THROW(io::graph_from_json(Json::parse(R"({"vertices": ["x"], "edges": [["x", "r", "y", "1"]]})"), g),
                 UsageError);
    EXPECT_THROW(io::graph_from_json(
                     Json::parse(R"({"vertices": ["x"], "edges": [["x", "r", "x", "1"], ["x", "r", "x", "0.5"]]})"), g),
                 UsageError);
    EXPECT_THROW(io::graph_from_json(Json::parse(R"({"vertices": ["x"], "edges": [["x", "r", "x"]]})"), g),
                 UsageError);
}

TEST(InterpretationJson, RoundTrip) {
    const auto j = io::read_json(data_path("examples/uvw.json"));
    const auto i = io::interpretation_from_json(j, Algebra::godel());
    EXPECT_EQ(i.size(), 3u);
    EXPECT_EQ(i.individual("a"), i.element("u"));
    EXPECT_EQ(i.role_instance_count(), 5u);
    EXPECT_EQ(io::interpretation_to_json(i), j);
}

TEST(InterpretationJson, ZeroRoleInstancesAreDropped) {
    const auto i = io::interpretation_from_json(
        Json::parse(R"({"domain": ["x", "y"], "roles": {"r": [["x", "y", 0], ["y", "x", "0.5"]]}})"), Algebra::godel());
    EXPECT_EQ(i.role_instance_count(), 1u);
}

TEST(InterpretationJson, Errors) {
    const auto g = Algebra::godel();
    EXPECT_THROW(io::interpretation_from_json(Json::parse(R"({"domain": []})"), g), UsageError);
    EXPECT_THROW(io::interpretation_from_json(Json::parse(R"({"domain": ["x"], "individuals": {"a": "y"}})"), g),
                 UsageError);
    EXPECT_THROW(io::interpretation_from_json(
                     Json::parse(R"({"domain": ["x"], "roles": {"r": [["x", "x", "1"], ["x", "x", "1"]]}})"), g),
                 UsageError);
    EXPECT_THROW(io::interpretation_from_json(Json::parse(R"({"domain": ["x"], "concepts": {"A": {"x": "0.3"}}})"),
                                              Algebra::finite_godel(3)),
                 UsageError);
}

TEST(Files, Errors) {
    EXPECT_THROW(io::read_json("/nonexistent/file.json"), IoError);
    const auto path = std::filesystem::temp_directory_path() / "fuzzymin-bad.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    EXPECT_THROW(io::read_json(path), ParseError);
    std::filesystem::remove(path);
}

TEST(RelationJson, RoundTrip) {
    const auto i = io::interpretation_from_json(io::read_json(data_path("examples/uvw.json")), Algebra::godel());
    const auto j =
        io::interpretation_from_json(io::read_json(data_path("examples/uv-prime.json")), Algebra::godel());
    const auto rel = io::read_json(data_path("examples/uvw-relation.json"));
    const auto z = io::relation_from_json(rel, i, j);
    EXPECT_EQ(z.size(), 3u);
    EXPECT_EQ(io::relation_to_json(z, i, j), rel);
    EXPECT_THROW(io::relation_from_json(Json::parse(R"([["u"]])"), i, j), UsageError);
}
