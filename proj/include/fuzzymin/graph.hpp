#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuzzymin/degree.hpp"

namespace fuzzymin {

using Vertex = std::uint32_t;
using LabelId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    Vertex source;
    LabelId label;
    Vertex target;
    Degree degree;
};

struct GraphStats {
    std::size_t n = 0; ///< vertices
    std::size_t m = 0; ///< nonzero edges
    std::size_t l = 0; ///< distinct edge degrees
};

class FuzzyGraph;

/// Collects vertices, labels and edges, then freezes them into a FuzzyGraph.
class GraphBuilder {
public:
    Vertex add_vertex(std::string name);
    LabelId add_vertex_label(std::string name);
    LabelId add_edge_label(std::string name);

    /// Zero degrees are not stored.
    void set_label(Vertex v, LabelId label, Degree degree);
    /// Zero-degree edges are dropped; a second edge on the same
    /// (source, label, target) triple is a UsageError.
    void add_edge(Vertex source, LabelId label, Vertex target, Degree degree);

    Vertex vertex(const std::string &name) const;
    LabelId edge_label(const std::string &name) const;
    LabelId vertex_label(const std::string &name) const;

    FuzzyGraph build() &&;

private:
    std::vector<std::string> vertices_;
    std::vector<std::string> vertex_labels_;
    std::vector<std::string> edge_labels_;
    std::unordered_map<std::string, Vertex> vertex_index_;
    std::unordered_map<std::string, LabelId> vertex_label_index_;
    std::unordered_map<std::string, LabelId> edge_label_index_;
    std::vector<std::vector<std::pair<LabelId, Degree>>> labels_;
    std::vector<Edge> edges_;
};

/// A finite fuzzy labeled graph with sparse edges. Immutable once built.
///
/// Edges are indexed both by (label, source) and by (label, target). Each
/// distinct edge degree also gets a rank 1..l in increasing order, so the
/// refinement code can compare degrees as integers; rank 0 stands for the
/// absent (zero) edge.
class FuzzyGraph {
public:
    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t vertex_label_count() const { return vertex_label_names_.size(); }
    std::size_t edge_label_count() const { return edge_label_names_.size(); }

    const std::string &vertex_name(Vertex v) const { return vertex_names_.at(v); }
    const std::vector<std::string> &vertex_names() const { return vertex_names_; }
    const std::vector<std::string> &vertex_label_names() const { return vertex_label_names_; }
    const std::vector<std::string> &edge_label_names() const { return edge_label_names_; }
    Vertex vertex(const std::string &name) const;
    LabelId edge_label(const std::string &name) const;

    /// Label(v)(label); absent entries are 0.
    const Degree &label(Vertex v, LabelId label) const;
    /// Dense label vector of v, one entry per vertex label.
    std::span<const Degree> label_vector(Vertex v) const;

    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(EdgeId e) const { return edges_[e]; }
    std::span<const EdgeId> out_edges(Vertex v, LabelId label) const;
    std::span<const EdgeId> in_edges(Vertex v, LabelId label) const;

    /// Distinct edge degrees, increasing; rank(e) - 1 indexes into it.
    const std::vector<Degree> &distinct_degrees() const { return distinct_degrees_; }
    std::uint32_t rank(EdgeId e) const { return ranks_[e]; }
    const Degree &degree_of_rank(std::uint32_t rank) const;

private:
    friend class GraphBuilder;
    FuzzyGraph() = default;

    void check_vertex(Vertex v) const;
    void check_edge_label(LabelId r) const;

    std::vector<std::string> vertex_names_;
    std::vector<std::string> vertex_label_names_;
    std::vector<std::string> edge_label_names_;
    std::unordered_map<std::string, Vertex> vertex_index_;
    std::unordered_map<std::string, LabelId> edge_label_index_;
    std::vector<Degree> labels_; // row-major n x |vertex labels|
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> ranks_;
    std::vector<Degree> distinct_degrees_;
    // CSR over (label, vertex)
    std::vector<std::size_t> out_offsets_, in_offsets_;
    std::vector<EdgeId> out_index_, in_index_;
};

/// sup { E(x, r, y) | y in targets }; 0 for an empty target set.
/// `targets` need not be sorted.
Degree sup_degree(const FuzzyGraph &g, Vertex x, LabelId r, std::span<const Vertex> targets);

GraphStats stats(const FuzzyGraph &g);

} // namespace fuzzymin
