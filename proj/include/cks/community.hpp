#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cks/graph.hpp"
#include "cks/rng.hpp"

namespace cks {

struct CommunityPartition {
    std::vector<std::uint32_t> assignment;  // node -> community id
    std::uint32_t community_count = 0;
    std::vector<std::uint32_t> sizes;  // community -> node count
};

// Puts every node in its own community.
inline CommunityPartition singleton_partition(const Graph& g) {
    CommunityPartition p;
    const auto n = static_cast<std::uint32_t>(g.node_count());
    p.assignment.resize(n);
    std::iota(p.assignment.begin(), p.assignment.end(), 0u);
    p.community_count = n;
    p.sizes.assign(n, 1);
    return p;
}

// Newman-Girvan modularity with a resolution factor:
//   Q = sum_c [ in_c / (2m) - resolution * (tot_c / (2m))^2 ]
// where in_c counts intra-community edge ends and tot_c the degree sum of c.
inline double modularity(const Graph& g, const CommunityPartition& p,
                         double resolution = 1.0) {
    if (p.assignment.size() != g.node_count())
        throw std::invalid_argument("partition does not cover the graph");
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    if (two_m == 0.0) return 0.0;

    std::vector<double> internal(p.community_count, 0.0);
    std::vector<double> total(p.community_count, 0.0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const std::uint32_t cu = p.assignment[u];
        total[cu] += static_cast<double>(g.degree(u));
        for (NodeId v : g.neighbors(u))
            if (p.assignment[v] == cu) internal[cu] += 1.0;
    }
    double q = 0.0;
    for (std::uint32_t c = 0; c < p.community_count; ++c) {
        const double frac = total[c] / two_m;
        q += internal[c] / two_m - resolution * frac * frac;
    }
    return q;
}

namespace detail {

// Weighted multigraph used between Louvain levels.
struct LevelGraph {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
    std::vector<double> self_loop;     // twice the internal weight convention
    std::vector<double> weighted_deg;  // incident weight incl. self loop
    double total_weight = 0.0;         // 2m

    std::size_t size() const noexcept { return adj.size(); }
};

inline LevelGraph level_from_graph(const Graph& g) {
    LevelGraph lg;
    const std::size_t n = g.node_count();
    lg.adj.resize(n);
    lg.self_loop.assign(n, 0.0);
    lg.weighted_deg.assign(n, 0.0);
    for (NodeId u = 0; u < n; ++u) {
        lg.adj[u].reserve(g.degree(u));
        for (NodeId v : g.neighbors(u)) lg.adj[u].emplace_back(v, 1.0);
        lg.weighted_deg[u] = static_cast<double>(g.degree(u));
    }
    lg.total_weight = 2.0 * static_cast<double>(g.edge_count());
    return lg;
}

// One Louvain level: greedy local moves until the pass gain drops below the
// threshold. Returns true if any node moved. Tie rule: a node keeps its
// community unless a candidate is strictly better; among equal candidates the
// lowest community id wins (candidates are scanned in ascending id order).
inline bool louvain_one_level(const LevelGraph& lg, double resolution,
                              std::uint64_t shuffle_seed,
                              std::vector<std::uint32_t>& community) {
    constexpr double kMinPassGain = 1e-9;
    const std::size_t n = lg.size();
    const double two_m = lg.total_weight;
    if (two_m == 0.0) return false;

    community.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) community[v] = v;
    std::vector<double> comm_total(lg.weighted_deg);

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    Rng rng(shuffle_seed);
    rng.shuffle(order);

    std::vector<double> weight_to(n, 0.0);
    std::vector<std::uint32_t> touched;
    touched.reserve(64);

    bool any_move = false;
    for (;;) {
        double pass_gain = 0.0;
        bool moved_in_pass = false;
        for (const std::uint32_t v : order) {
            const std::uint32_t old_comm = community[v];
            const double deg_v = lg.weighted_deg[v];

            touched.clear();
            for (const auto& [u, w] : lg.adj[v]) {
                const std::uint32_t cu = community[u];
                if (weight_to[cu] == 0.0) touched.push_back(cu);
                weight_to[cu] += w;
            }
            if (weight_to[old_comm] == 0.0) touched.push_back(old_comm);
            std::sort(touched.begin(), touched.end());

            // Evaluate gains with v removed from its community.
            comm_total[old_comm] -= deg_v;
            const double scale = resolution * deg_v / two_m;
            auto gain = [&](std::uint32_t c) {
                return weight_to[c] - scale * comm_total[c];
            };

            std::uint32_t best_comm = old_comm;
            double best_gain = gain(old_comm);
            for (const std::uint32_t c : touched) {
                if (c == old_comm) continue;
                const double cand = gain(c);
                if (cand > best_gain) {
                    best_gain = cand;
                    best_comm = c;
                }
            }

            if (best_comm != old_comm) {
                pass_gain += 2.0 * (best_gain - gain(old_comm)) / two_m;
                moved_in_pass = true;
                any_move = true;
            }
            community[v] = best_comm;
            comm_total[best_comm] += deg_v;

            for (const std::uint32_t c : touched) weight_to[c] = 0.0;
        }
        if (!moved_in_pass || pass_gain < kMinPassGain) break;
    }
    return any_move;
}

// Collapses communities into super-nodes, summing edge weights.
inline LevelGraph aggregate(const LevelGraph& lg,
                            const std::vector<std::uint32_t>& community,
                            std::uint32_t community_count) {
    LevelGraph next;
    next.adj.resize(community_count);
    next.self_loop.assign(community_count, 0.0);
    next.weighted_deg.assign(community_count, 0.0);
    next.total_weight = lg.total_weight;

    std::vector<double> weight_to(community_count, 0.0);
    std::vector<std::uint32_t> touched;
    touched.reserve(64);

    std::vector<std::vector<std::uint32_t>> members(community_count);
    for (std::uint32_t v = 0; v < lg.size(); ++v)
        members[community[v]].push_back(v);

    for (std::uint32_t c = 0; c < community_count; ++c) {
        touched.clear();
        double self = 0.0;
        for (const std::uint32_t v : members[c]) {
            self += lg.self_loop[v];
            for (const auto& [u, w] : lg.adj[v]) {
                const std::uint32_t cu = community[u];
                if (cu == c) {
                    self += w;
                } else {
                    if (weight_to[cu] == 0.0) touched.push_back(cu);
                    weight_to[cu] += w;
                }
            }
        }
        next.self_loop[c] = self;
        std::sort(touched.begin(), touched.end());
        double deg = self;
        for (const std::uint32_t cu : touched) {
            next.adj[c].emplace_back(cu, weight_to[cu]);
            deg += weight_to[cu];
            weight_to[cu] = 0.0;
        }
        next.weighted_deg[c] = deg;
    }
    return next;
}

// Renumbers community labels to 0..k-1 by first appearance in node order.
inline std::uint32_t compact_labels(std::vector<std::uint32_t>& community) {
    std::vector<std::uint32_t> remap(community.size(), UINT32_MAX);
    std::uint32_t next_label = 0;
    for (auto& c : community) {
        if (remap[c] == UINT32_MAX) remap[c] = next_label++;
        c = remap[c];
    }
    return next_label;
}

}  // namespace detail

// Louvain community detection. Node visit order is shuffled from rng_seed,
// so runs with equal seeds are bit-reproducible.
inline CommunityPartition louvain(const Graph& g, std::uint64_t rng_seed,
                                  double resolution = 1.0) {
    if (resolution <= 0.0) throw std::invalid_argument("resolution must be positive");
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("graph is empty");

    // node -> community in the original graph, composed across levels
    std::vector<std::uint32_t> assignment(n);
    std::iota(assignment.begin(), assignment.end(), 0u);

    detail::LevelGraph level = detail::level_from_graph(g);
    for (std::uint64_t depth = 0;; ++depth) {
        std::vector<std::uint32_t> community;
        const bool moved = detail::louvain_one_level(
            level, resolution, derive_stream(rng_seed, depth), community);
        if (!moved) break;
        const std::uint32_t count = detail::compact_labels(community);
        for (auto& c : assignment) c = community[c];
        if (count == level.size()) break;
        level = detail::aggregate(level, community, count);
    }

    CommunityPartition p;
    p.assignment = std::move(assignment);
    p.community_count = detail::compact_labels(p.assignment);
    p.sizes.assign(p.community_count, 0);
    for (const auto c : p.assignment) ++p.sizes[c];
    return p;
}

// One community cut out of the host graph: intra-community edges only.
struct CommunitySubgraph {
    std::uint32_t community = 0;
    Graph graph;                     // local contiguous ids
    std::vector<NodeId> to_global;   // local id -> host graph id
};

// Removes inter-community edges and splits the graph into one subgraph per
// community. Local ids follow ascending global id order.
inline std::vector<CommunitySubgraph> isolate_communities(
    const Graph& g, const CommunityPartition& p) {
    if (p.assignment.size() != g.node_count())
        throw std::invalid_argument("partition does not cover the graph");

    std::vector<CommunitySubgraph> out(p.community_count);
    std::vector<NodeId> local_id(g.node_count());
    for (std::uint32_t c = 0; c < p.community_count; ++c) {
        out[c].community = c;
        out[c].to_global.reserve(p.sizes[c]);
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto& sub = out[p.assignment[v]];
        local_id[v] = static_cast<NodeId>(sub.to_global.size());
        sub.to_global.push_back(v);
    }

    std::vector<std::vector<std::pair<NodeId, NodeId>>> edges(p.community_count);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const std::uint32_t cu = p.assignment[u];
        for (NodeId v : g.neighbors(u))
            if (u < v && p.assignment[v] == cu)
                edges[cu].emplace_back(local_id[u], local_id[v]);
    }

    std::vector<std::string> labels;
    for (std::uint32_t c = 0; c < p.community_count; ++c) {
        labels.clear();
        labels.reserve(out[c].to_global.size());
        for (const NodeId v : out[c].to_global) labels.push_back(g.label(v));
        out[c].graph = Graph::from_edges(out[c].to_global.size(), edges[c], labels);
    }
    return out;
}

}  // namespace cks
