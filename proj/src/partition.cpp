#include "fuzzymin/partition.hpp"

#include <algorithm>
#include <limits>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

Partition::Partition(std::size_t n, std::vector<std::vector<Vertex>> blocks) : blocks_(std::move(blocks)) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    block_of_.assign(n, unset);
    for (auto &b : blocks_) {
        if (b.empty()) throw UsageError("partition has an empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (Vertex v : blocks_[i]) {
            if (v >= n) throw UsageError("partition mentions vertex " + std::to_string(v) + " outside 0.." + std::to_string(n) + "-1");
            if (block_of_[v] != unset) throw UsageError("partition blocks overlap at vertex " + std::to_string(v));
            block_of_[v] = i;
        }
    for (std::size_t v = 0; v < n; ++v)
        if (block_of_[v] == unset) throw UsageError("partition does not cover vertex " + std::to_string(v));
}

Partition Partition::single_block(std::size_t n) {
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    std::vector<std::vector<Vertex>> blocks;
    if (n > 0) blocks.push_back(std::move(all));
    return Partition(n, std::move(blocks));
}

Partition Partition::discrete(std::size_t n) {
    std::vector<std::vector<Vertex>> blocks;
    for (std::size_t v = 0; v < n; ++v) blocks.push_back({static_cast<Vertex>(v)});
    return Partition(n, std::move(blocks));
}

bool Partition::refines(const Partition &coarser) const {
    if (coarser.vertex_count() != vertex_count()) return false;
    for (const auto &b : blocks_) {
        const auto home = coarser.block_of(b.front());
        for (Vertex v : b)
            if (coarser.block_of(v) != home) return false;
    }
    return true;
}

std::string Partition::to_string(const std::vector<std::string> &names) const {
    std::string out = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += ",";
        out += "{";
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) out += ",";
            out += names.at(blocks_[i][j]);
        }
        out += "}";
    }
    return out + "}";
}

} // namespace fuzzymin
