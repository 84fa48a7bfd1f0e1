#include "fuzzymin/refine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::vector<std::vector<Vertex>> group_sorted(std::vector<Vertex> order, auto &&less) {
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return less(a, b) || (!less(b, a) && a < b); });
    std::vector<std::vector<Vertex>> blocks;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || less(order[i - 1], order[i])) blocks.emplace_back();
        blocks.back().push_back(order[i]);
    }
    return blocks;
}

std::vector<Vertex> all_vertices(std::size_t n) {
    std::vector<Vertex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
    return v;
}

// Ordered multiset of edge-degree ranks: the degrees of one source's r-edges
// into one block of Q_r.
struct Aggregate {
    Vertex source;
    std::uint32_t qblock;
    std::map<std::uint32_t, std::uint32_t> counts;
    std::uint32_t partner = kNone;

    void insert(std::uint32_t rank) { ++counts[rank]; }
    void remove(std::uint32_t rank) {
        auto it = counts.find(rank);
        if (--it->second == 0) counts.erase(it);
    }
    std::uint32_t max() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

class Refiner {
public:
    Refiner(const FuzzyGraph &g, const RefinementOptions &options)
        : g_(g), options_(options), n_(g.vertex_count()), labels_(g.edge_label_count()) {}

    RefinementResult run();

private:
    struct Block {
        Vertex head = kNone;
        std::uint32_t size = 0;
    };
    struct QBlock {
        std::uint32_t first = kNone; // first P-block in this Q-block
        std::uint32_t blocks = 0;    // number of P-blocks inside
        std::uint32_t size = 0;      // number of vertices inside
        bool queued = false;
    };

    std::size_t slot(std::uint32_t block, LabelId r) const { return std::size_t(block) * labels_ + r; }

    void link(Vertex v, std::uint32_t b);
    void unlink(Vertex v);
    std::uint32_t new_block_beside(std::uint32_t parent);
    void enqueue_if_compound(LabelId r, std::uint32_t q);
    void q_remove(std::uint32_t b, LabelId r);
    void q_insert_after(std::uint32_t b, LabelId r, std::uint32_t after);

    std::vector<Vertex> members(std::uint32_t b) const;
    std::vector<Vertex> q_members(LabelId r, std::uint32_t q) const;
    Partition snapshot() const;

    void init();
    bool split_against(std::uint32_t splitter, LabelId r, std::uint32_t new_q);
    void verify_aggregates() const;

    const FuzzyGraph &g_;
    RefinementOptions options_;
    std::size_t n_;
    std::size_t labels_;

    std::vector<Vertex> next_, prev_;
    std::vector<std::uint32_t> block_of_;
    std::vector<Block> blocks_;

    // Per (P-block, label): owning Q-block and neighbours in its block list.
    std::vector<std::uint32_t> qof_, qnext_, qprev_;
    std::vector<std::vector<QBlock>> q_;
    std::vector<std::deque<std::uint32_t>> queue_;

    std::vector<Aggregate> aggs_;
    std::vector<std::uint32_t> edge_agg_;
};

void Refiner::link(Vertex v, std::uint32_t b) {
    auto &blk = blocks_[b];
    prev_[v] = kNone;
    next_[v] = blk.head;
    if (blk.head != kNone) prev_[blk.head] = v;
    blk.head = v;
    ++blk.size;
    block_of_[v] = b;
}

void Refiner::unlink(Vertex v) {
    auto &blk = blocks_[block_of_[v]];
    if (prev_[v] != kNone) next_[prev_[v]] = next_[v];
    else blk.head = next_[v];
    if (next_[v] != kNone) prev_[next_[v]] = prev_[v];
    --blk.size;
}

void Refiner::q_remove(std::uint32_t b, LabelId r) {
    auto &q = q_[r][qof_[slot(b, r)]];
    const auto p = qprev_[slot(b, r)];
    const auto nx = qnext_[slot(b, r)];
    if (p != kNone) qnext_[slot(p, r)] = nx;
    else q.first = nx;
    if (nx != kNone) qprev_[slot(nx, r)] = p;
    --q.blocks;
    q.size -= blocks_[b].size;
}

void Refiner::q_insert_after(std::uint32_t b, LabelId r, std::uint32_t after) {
    const auto qi = qof_[slot(after, r)];
    qof_[slot(b, r)] = qi;
    const auto nx = qnext_[slot(after, r)];
    qprev_[slot(b, r)] = after;
    qnext_[slot(b, r)] = nx;
    qnext_[slot(after, r)] = b;
    if (nx != kNone) qprev_[slot(nx, r)] = b;
    ++q_[r][qi].blocks;
}

void Refiner::enqueue_if_compound(LabelId r, std::uint32_t qi) {
    auto &q = q_[r][qi];
    if (q.blocks >= 2 && !q.queued) {
        q.queued = true;
        queue_[r].push_back(qi);
    }
}

std::uint32_t Refiner::new_block_beside(std::uint32_t parent) {
    const auto b = static_cast<std::uint32_t>(blocks_.size());
    blocks_.emplace_back();
    qof_.resize(qof_.size() + labels_, kNone);
    qnext_.resize(qnext_.size() + labels_, kNone);
    qprev_.resize(qprev_.size() + labels_, kNone);
    for (LabelId r = 0; r < labels_; ++r) {
        q_insert_after(b, r, parent);
        enqueue_if_compound(r, qof_[slot(b, r)]);
    }
    return b;
}

std::vector<Vertex> Refiner::members(std::uint32_t b) const {
    std::vector<Vertex> out;
    for (Vertex v = blocks_[b].head; v != kNone; v = next_[v]) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> Refiner::q_members(LabelId r, std::uint32_t qi) const {
    std::vector<Vertex> out;
    for (auto b = q_[r][qi].first; b != kNone; b = qnext_[slot(b, r)])
        for (Vertex v = blocks_[b].head; v != kNone; v = next_[v]) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Partition Refiner::snapshot() const {
    std::vector<std::vector<Vertex>> blocks;
    for (std::uint32_t b = 0; b < blocks_.size(); ++b)
        if (blocks_[b].size > 0) blocks.push_back(members(b));
    return Partition(n_, std::move(blocks));
}

void Refiner::init() {
    next_.assign(n_, kNone);
    prev_.assign(n_, kNone);
    block_of_.assign(n_, kNone);

    const Partition p0 = initial_partition(g_);
    blocks_.resize(p0.size());
    // Link in descending order so each list reads in ascending vertex order.
    for (std::uint32_t b = 0; b < p0.size(); ++b) {
        const auto &blk = p0.block(b);
        for (auto it = blk.rbegin(); it != blk.rend(); ++it) link(*it, b);
    }

    qof_.assign(p0.size() * labels_, 0);
    qnext_.assign(p0.size() * labels_, kNone);
    qprev_.assign(p0.size() * labels_, kNone);
    q_.assign(labels_, {});
    queue_.assign(labels_, {});
    for (LabelId r = 0; r < labels_; ++r) {
        QBlock all;
        all.first = 0;
        all.blocks = static_cast<std::uint32_t>(p0.size());
        all.size = static_cast<std::uint32_t>(n_);
        q_[r].push_back(all);
        for (std::uint32_t b = 0; b < p0.size(); ++b) {
            qprev_[slot(b, r)] = b == 0 ? kNone : b - 1;
            qnext_[slot(b, r)] = b + 1 < p0.size() ? b + 1 : kNone;
        }
        enqueue_if_compound(r, 0);
    }

    edge_agg_.assign(g_.edge_count(), kNone);
    for (LabelId r = 0; r < labels_; ++r)
        for (Vertex x = 0; x < n_; ++x) {
            const auto out = g_.out_edges(x, r);
            if (out.empty()) continue;
            const auto id = static_cast<std::uint32_t>(aggs_.size());
            aggs_.push_back(Aggregate{x, 0, {}, kNone});
            for (EdgeId e : out) {
                aggs_[id].insert(g_.rank(e));
                edge_agg_[e] = id;
            }
        }
}

// Refines P so that it is stable w.r.t. both <splitter, r> and <Y \ splitter, r>,
// where Y is the Q_r-block the splitter was just carved out of. Only edges
// into the splitter are scanned: sup E(x, r, Y \ splitter) is what remains in
// x's old aggregate after those edges move to the new one.
bool Refiner::split_against(std::uint32_t splitter, LabelId r, std::uint32_t new_q) {
    std::vector<std::uint32_t> touched;
    for (Vertex y = blocks_[splitter].head; y != kNone; y = next_[y]) {
        for (EdgeId e : g_.in_edges(y, r)) {
            const auto old = edge_agg_[e];
            if (aggs_[old].partner == kNone) {
                aggs_[old].partner = static_cast<std::uint32_t>(aggs_.size());
                aggs_.push_back(Aggregate{aggs_[old].source, new_q, {}, kNone});
                touched.push_back(old);
            }
            const auto fresh = aggs_[old].partner;
            aggs_[old].remove(g_.rank(e));
            aggs_[fresh].insert(g_.rank(e));
            edge_agg_[e] = fresh;
        }
    }

    struct Touch {
        std::uint32_t block;
        std::uint32_t into_splitter;
        std::uint32_t into_rest;
        Vertex x;
    };
    std::vector<Touch> touches;
    touches.reserve(touched.size());
    for (auto old : touched) {
        auto &agg = aggs_[old];
        touches.push_back({block_of_[agg.source], aggs_[agg.partner].max(), agg.max(), agg.source});
        agg.partner = kNone;
    }
    std::sort(touches.begin(), touches.end(), [](const Touch &a, const Touch &b) {
        return std::tie(a.block, a.into_splitter, a.into_rest, a.x) < std::tie(b.block, b.into_splitter, b.into_rest, b.x);
    });

    bool changed = false;
    for (std::size_t i = 0; i < touches.size();) {
        const auto block = touches[i].block;
        std::size_t end = i;
        while (end < touches.size() && touches[end].block == block) ++end;

        // Runs of equal keys inside [i, end).
        std::vector<std::pair<std::size_t, std::size_t>> groups;
        for (std::size_t k = i; k < end; ++k) {
            if (k == i || touches[k].into_splitter != touches[k - 1].into_splitter ||
                touches[k].into_rest != touches[k - 1].into_rest)
                groups.emplace_back(k, k);
            groups.back().second = k + 1;
        }

        [[maybe_unused]] const bool whole_block_touched = end - i == blocks_[block].size;
#ifdef FUZZYMIN_MUTATE_SPLIT
        // Deliberately wrong: untouched vertices are never separated.
        const bool keep_first = true;
        if (groups.size() == 1) { i = end; continue; }
#else
        const bool keep_first = whole_block_touched;
        if (whole_block_touched && groups.size() == 1) { i = end; continue; }
#endif
        for (std::size_t gi = keep_first ? 1 : 0; gi < groups.size(); ++gi) {
            const auto nb = new_block_beside(block);
            for (std::size_t k = groups[gi].first; k < groups[gi].second; ++k) {
                unlink(touches[k].x);
                link(touches[k].x, nb);
            }
            changed = true;
        }
        i = end;
    }
    return changed;
}

void Refiner::verify_aggregates() const {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
        const auto &edge = g_.edge(e);
        const auto &agg = aggs_[edge_agg_[e]];
        const auto q = qof_[slot(block_of_[edge.target], edge.label)];
        if (agg.source != edge.source || agg.qblock != q)
            throw std::logic_error("aggregate owner mismatch on edge " + std::to_string(e));
        std::uint32_t fresh = 0;
        for (EdgeId f : g_.out_edges(edge.source, edge.label))
            if (qof_[slot(block_of_[g_.edge(f).target], edge.label)] == q) fresh = std::max(fresh, g_.rank(f));
        if (fresh != agg.max())
            throw std::logic_error("aggregate max disagrees with sup on edge " + std::to_string(e));
    }
}

RefinementResult Refiner::run() {
    RefinementResult result;
    init();
    if (options_.verify_aggregates) verify_aggregates();

    for (;;) {
        LabelId r = 0;
        while (r < labels_ && queue_[r].empty()) ++r;
        if (r == labels_) break;

        const auto qy = queue_[r].front();
        queue_[r].pop_front();
        if (q_[r][qy].blocks < 2) {
            q_[r][qy].queued = false;
            continue;
        }

        const auto first = q_[r][qy].first;
        const auto chosen = 2 * blocks_[first].size <= q_[r][qy].size ? first : qnext_[slot(first, r)];

        RefinementStep step{r, {}, {}, false, {}};
        if (options_.record_trace) {
            step.splitter = members(chosen);
            step.compound = q_members(r, qy);
        }

        // Q_r: replace Y by Y' and Y \ Y'.
        q_remove(chosen, r);
        const auto nq = static_cast<std::uint32_t>(q_[r].size());
        QBlock carved;
        carved.first = chosen;
        carved.blocks = 1;
        carved.size = blocks_[chosen].size;
        q_[r].push_back(carved);
        qof_[slot(chosen, r)] = nq;
        qprev_[slot(chosen, r)] = kNone;
        qnext_[slot(chosen, r)] = kNone;
        if (q_[r][qy].blocks >= 2) queue_[r].push_back(qy);
        else q_[r][qy].queued = false;

        step.changed = split_against(chosen, r, nq);
        ++result.iterations;
        if (options_.verify_aggregates) verify_aggregates();
        if (options_.record_trace) {
            step.after = snapshot();
            result.trace.push_back(std::move(step));
        }
    }

    result.partition = snapshot();
    return result;
}

} // namespace

Partition initial_partition(const FuzzyGraph &g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw UsageError("graph has no vertices");
    const std::size_t labels = g.edge_label_count();

    std::vector<std::uint32_t> sup(n * labels, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto &s = sup[g.edge(e).source * labels + g.edge(e).label];
        s = std::max(s, g.rank(e));
    }
    auto less = [&](Vertex a, Vertex b) {
        const auto la = g.label_vector(a);
        const auto lb = g.label_vector(b);
        if (auto c = std::lexicographical_compare_three_way(la.begin(), la.end(), lb.begin(), lb.end()); c != 0)
            return c < 0;
        return std::lexicographical_compare(sup.begin() + a * labels, sup.begin() + (a + 1) * labels,
                                            sup.begin() + b * labels, sup.begin() + (b + 1) * labels);
    };
    return Partition(n, group_sorted(all_vertices(n), less));
}

Partition split(const FuzzyGraph &g, const Partition &p, std::span<const Vertex> splitter,
                std::span<const Vertex> compound, LabelId r) {
    const std::size_t n = g.vertex_count();
    if (p.vertex_count() != n) throw UsageError("partition does not match the graph");
    if (r >= g.edge_label_count()) throw UsageError("unknown edge label id " + std::to_string(r));

    std::vector<char> in_splitter(n, 0), in_compound(n, 0);
    for (Vertex v : compound) {
        if (v >= n) throw UsageError("unknown vertex id " + std::to_string(v));
        in_compound[v] = 1;
    }
    std::size_t splitter_size = 0;
    for (Vertex v : splitter) {
        if (v >= n) throw UsageError("unknown vertex id " + std::to_string(v));
        if (!in_compound[v]) throw UsageError("splitter is not contained in the compound block");
        if (!in_splitter[v]) ++splitter_size;
        in_splitter[v] = 1;
    }
    const auto compound_size = static_cast<std::size_t>(std::count(in_compound.begin(), in_compound.end(), 1));
    if (splitter_size == 0 || splitter_size == compound_size)
        throw UsageError("splitter must be a non-empty proper subset of the compound block");
    for (const auto &blk : p.blocks())
        for (Vertex v : blk)
            if (in_compound[v] != in_compound[blk.front()] || in_splitter[v] != in_splitter[blk.front()])
                throw UsageError("splitter and compound block must be unions of partition blocks");

    std::vector<std::uint32_t> into_splitter(n, 0), into_rest(n, 0);
    for (Vertex y = 0; y < n; ++y) {
        if (!in_compound[y]) continue;
        auto &dest = in_splitter[y] ? into_splitter : into_rest;
        for (EdgeId e : g.in_edges(y, r)) dest[g.edge(e).source] = std::max(dest[g.edge(e).source], g.rank(e));
    }
    auto less = [&](Vertex a, Vertex b) {
        return std::tuple(p.block_of(a), into_splitter[a], into_rest[a]) <
               std::tuple(p.block_of(b), into_splitter[b], into_rest[b]);
    };
    return Partition(n, group_sorted(all_vertices(n), less));
}

RefinementResult compute_coarsest_bisimulation(const FuzzyGraph &g, const RefinementOptions &options) {
    if (g.vertex_count() == 0) throw UsageError("graph has no vertices");
    Refiner refiner(g, options);
    return refiner.run();
}

Partition naive_coarsest_stable_refinement(const FuzzyGraph &g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw UsageError("graph has no vertices");

    std::vector<std::uint32_t> block(n);
    std::size_t count = 0;
    {
        std::map<std::vector<Degree>, std::uint32_t> ids;
        for (Vertex v = 0; v < n; ++v) {
            const auto lv = g.label_vector(v);
            auto [it, inserted] = ids.emplace(std::vector<Degree>(lv.begin(), lv.end()), ids.size());
            block[v] = it->second;
        }
        count = ids.size();
    }

    using Signature = std::pair<std::uint32_t, std::vector<std::tuple<std::uint32_t, LabelId, Degree>>>;
    for (;;) {
        std::map<Signature, std::uint32_t> ids;
        std::vector<std::uint32_t> next(n);
        for (Vertex x = 0; x < n; ++x) {
            std::map<std::pair<std::uint32_t, LabelId>, Degree> sups;
            for (const auto &e : g.edges()) {
                if (e.source != x) continue;
                auto &s = sups[{block[e.target], e.label}];
                if (s < e.degree) s = e.degree;
            }
            Signature sig{block[x], {}};
            for (auto &[key, d] : sups) sig.second.emplace_back(key.first, key.second, d);
            auto [it, inserted] = ids.emplace(std::move(sig), ids.size());
            next[x] = it->second;
        }
        const bool stable = ids.size() == count;
        block = std::move(next);
        count = ids.size();
        if (stable) break;
    }

    std::vector<std::vector<Vertex>> blocks(count);
    for (Vertex v = 0; v < n; ++v) blocks[block[v]].push_back(v);
    return Partition(n, std::move(blocks));
}

bool is_stable(const FuzzyGraph &g, const Partition &p) {
    const std::size_t n = g.vertex_count();
    if (p.vertex_count() != n) throw UsageError("partition does not match the graph");
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> profile(n);
    for (LabelId r = 0; r < g.edge_label_count(); ++r) {
        for (Vertex x = 0; x < n; ++x) {
            std::map<std::size_t, std::uint32_t> sups;
            for (EdgeId e : g.out_edges(x, r)) {
                auto &s = sups[p.block_of(g.edge(e).target)];
                s = std::max(s, g.rank(e));
            }
            profile[x].assign(sups.begin(), sups.end());
        }
        for (const auto &blk : p.blocks())
            for (Vertex x : blk)
                if (profile[x] != profile[blk.front()]) return false;
    }
    return true;
}

} // namespace fuzzymin
