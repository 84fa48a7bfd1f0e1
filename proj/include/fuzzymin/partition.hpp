#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fuzzymin/graph.hpp"

namespace fuzzymin {

/// A partition of the vertex set {0..n-1} in canonical form: members of
/// each block ascend and blocks are ordered by their least member. Two
/// partitions with the same blocks therefore compare equal.
class Partition {
public:
    Partition() = default;
    /// Throws UsageError unless the blocks are non-empty, disjoint and cover 0..n-1.
    Partition(std::size_t n, std::vector<std::vector<Vertex>> blocks);

    static Partition single_block(std::size_t n);
    static Partition discrete(std::size_t n);

    std::size_t vertex_count() const { return block_of_.size(); }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<std::vector<Vertex>> &blocks() const { return blocks_; }
    const std::vector<Vertex> &block(std::size_t i) const { return blocks_.at(i); }
    std::size_t block_of(Vertex v) const { return block_of_.at(v); }

    /// Every block of *this lies inside a block of `coarser`.
    bool refines(const Partition &coarser) const;

    /// "{{u},{v,w}}" using the given vertex names.
    std::string to_string(const std::vector<std::string> &names) const;

    friend bool operator==(const Partition &a, const Partition &b) { return a.blocks_ == b.blocks_; }

private:
    std::vector<std::vector<Vertex>> blocks_;
    std::vector<std::size_t> block_of_;
};

} // namespace fuzzymin
