#include "fuzzymin/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

Vertex GraphBuilder::add_vertex(std::string name) {
    auto [it, inserted] = vertex_index_.emplace(name, static_cast<Vertex>(vertices_.size()));
    if (!inserted) throw UsageError("duplicate vertex '" + name + "'");
    vertices_.push_back(std::move(name));
    labels_.emplace_back();
    return it->second;
}

LabelId GraphBuilder::add_vertex_label(std::string name) {
    auto [it, inserted] = vertex_label_index_.emplace(name, static_cast<LabelId>(vertex_labels_.size()));
    if (!inserted) throw UsageError("duplicate vertex label '" + name + "'");
    vertex_labels_.push_back(std::move(name));
    return it->second;
}

LabelId GraphBuilder::add_edge_label(std::string name) {
    auto [it, inserted] = edge_label_index_.emplace(name, static_cast<LabelId>(edge_labels_.size()));
    if (!inserted) throw UsageError("duplicate edge label '" + name + "'");
    edge_labels_.push_back(std::move(name));
    return it->second;
}

void GraphBuilder::set_label(Vertex v, LabelId label, Degree degree) {
    if (v >= vertices_.size()) throw UsageError("unknown vertex id " + std::to_string(v));
    if (label >= vertex_labels_.size()) throw UsageError("unknown vertex label id " + std::to_string(label));
    auto &row = labels_[v];
    auto it = std::find_if(row.begin(), row.end(), [&](const auto &p) { return p.first == label; });
    if (it != row.end()) throw UsageError("vertex '" + vertices_[v] + "' has label '" + vertex_labels_[label] + "' twice");
    if (!degree.is_zero()) row.emplace_back(label, std::move(degree));
}

void GraphBuilder::add_edge(Vertex source, LabelId label, Vertex target, Degree degree) {
    if (source >= vertices_.size() || target >= vertices_.size())
        throw UsageError("edge references an unknown vertex");
    if (label >= edge_labels_.size()) throw UsageError("unknown edge label id " + std::to_string(label));
    if (degree.is_zero()) return;
    edges_.push_back(Edge{source, label, target, std::move(degree)});
}

Vertex GraphBuilder::vertex(const std::string &name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) throw UsageError("unknown vertex '" + name + "'");
    return it->second;
}

LabelId GraphBuilder::edge_label(const std::string &name) const {
    auto it = edge_label_index_.find(name);
    if (it == edge_label_index_.end()) throw UsageError("unknown edge label '" + name + "'");
    return it->second;
}

LabelId GraphBuilder::vertex_label(const std::string &name) const {
    auto it = vertex_label_index_.find(name);
    if (it == vertex_label_index_.end()) throw UsageError("unknown vertex label '" + name + "'");
    return it->second;
}

FuzzyGraph GraphBuilder::build() && {
    const std::size_t n = vertices_.size();
    const std::size_t nl = edge_labels_.size();
    const std::size_t nv = vertex_labels_.size();

    FuzzyGraph g;
    g.labels_.assign(n * nv, Degree());
    for (Vertex v = 0; v < n; ++v)
        for (auto &[label, degree] : labels_[v]) g.labels_[v * nv + label] = std::move(degree);

    std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return std::tie(a.label, a.source, a.target) < std::tie(b.label, b.source, b.target);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        const auto &a = edges_[i - 1];
        const auto &b = edges_[i];
        if (a.label == b.label && a.source == b.source && a.target == b.target)
            throw UsageError("duplicate edge (" + vertices_[a.source] + ", " + edge_labels_[a.label] + ", " +
                             vertices_[a.target] + ")");
    }

    std::vector<Degree> distinct;
    distinct.reserve(edges_.size());
    for (const auto &e : edges_) distinct.push_back(e.degree);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    g.ranks_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i)
        g.ranks_[i] = static_cast<std::uint32_t>(
            std::lower_bound(distinct.begin(), distinct.end(), edges_[i].degree) - distinct.begin() + 1);

    auto build_csr = [&](auto key, std::vector<std::size_t> &offsets, std::vector<EdgeId> &index) {
        offsets.assign(nl * n + 1, 0);
        for (const auto &e : edges_) ++offsets[e.label * n + key(e) + 1];
        std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
        index.resize(edges_.size());
        std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
        for (EdgeId id = 0; id < edges_.size(); ++id) {
            const auto &e = edges_[id];
            index[fill[e.label * n + key(e)]++] = id;
        }
    };
    build_csr([](const Edge &e) { return e.source; }, g.out_offsets_, g.out_index_);
    build_csr([](const Edge &e) { return e.target; }, g.in_offsets_, g.in_index_);

    g.distinct_degrees_ = std::move(distinct);
    g.edges_ = std::move(edges_);
    g.vertex_names_ = std::move(vertices_);
    g.vertex_label_names_ = std::move(vertex_labels_);
    g.edge_label_names_ = std::move(edge_labels_);
    g.vertex_index_ = std::move(vertex_index_);
    g.edge_label_index_ = std::move(edge_label_index_);
    return g;
}

Vertex FuzzyGraph::vertex(const std::string &name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) throw UsageError("unknown vertex '" + name + "'");
    return it->second;
}

LabelId FuzzyGraph::edge_label(const std::string &name) const {
    auto it = edge_label_index_.find(name);
    if (it == edge_label_index_.end()) throw UsageError("unknown edge label '" + name + "'");
    return it->second;
}

void FuzzyGraph::check_vertex(Vertex v) const {
    if (v >= vertex_count()) throw UsageError("unknown vertex id " + std::to_string(v));
}

void FuzzyGraph::check_edge_label(LabelId r) const {
    if (r >= edge_label_count()) throw UsageError("unknown edge label id " + std::to_string(r));
}

const Degree &FuzzyGraph::label(Vertex v, LabelId label) const {
    check_vertex(v);
    if (label >= vertex_label_count()) throw UsageError("unknown vertex label id " + std::to_string(label));
    return labels_[v * vertex_label_count() + label];
}

std::span<const Degree> FuzzyGraph::label_vector(Vertex v) const {
    check_vertex(v);
    const std::size_t nv = vertex_label_count();
    return std::span<const Degree>(labels_).subspan(v * nv, nv);
}

std::span<const EdgeId> FuzzyGraph::out_edges(Vertex v, LabelId label) const {
    check_vertex(v);
    check_edge_label(label);
    const std::size_t k = label * vertex_count() + v;
    return std::span<const EdgeId>(out_index_).subspan(out_offsets_[k], out_offsets_[k + 1] - out_offsets_[k]);
}

std::span<const EdgeId> FuzzyGraph::in_edges(Vertex v, LabelId label) const {
    check_vertex(v);
    check_edge_label(label);
    const std::size_t k = label * vertex_count() + v;
    return std::span<const EdgeId>(in_index_).subspan(in_offsets_[k], in_offsets_[k + 1] - in_offsets_[k]);
}

const Degree &FuzzyGraph::degree_of_rank(std::uint32_t rank) const {
    static const Degree zero;
    if (rank == 0) return zero;
    return distinct_degrees_.at(rank - 1);
}

Degree sup_degree(const FuzzyGraph &g, Vertex x, LabelId r, std::span<const Vertex> targets) {
    std::vector<Vertex> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex y : sorted)
        if (y >= g.vertex_count()) throw UsageError("unknown vertex id " + std::to_string(y));
    Degree best;
    for (EdgeId e : g.out_edges(x, r)) {
        const auto &edge = g.edge(e);
        if (std::binary_search(sorted.begin(), sorted.end(), edge.target) && best < edge.degree) best = edge.degree;
    }
    return best;
}

GraphStats stats(const FuzzyGraph &g) {
    return GraphStats{g.vertex_count(), g.edge_count(), g.distinct_degrees().size()};
}

} // namespace fuzzymin
