#pragma once

#include <cstdint>
#include <vector>

#include "cks/community.hpp"
#include "cks/graph.hpp"
#include "cks/parallel.hpp"

namespace cks {

struct ShellAssignment {
    std::vector<std::uint32_t> shell;  // node -> core number
    std::uint32_t max_shell = 0;
};

// Core decomposition with the O(E) bucket peel (Batagelj-Zaversnik).
// shell[v] is the largest k such that v survives repeated deletion of all
// nodes with degree < k.
inline ShellAssignment kshell(const Graph& g) {
    const std::size_t n = g.node_count();
    ShellAssignment result;
    result.shell.assign(n, 0);
    if (n == 0) return result;

    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.degree(v));
        max_deg = std::max(max_deg, deg[v]);
    }

    // Bucket sort nodes by degree: bin[d] marks where degree-d nodes start.
    std::vector<std::size_t> bin(max_deg + 2, 0);
    for (NodeId v = 0; v < n; ++v) ++bin[deg[v] + 1];
    for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
    std::vector<NodeId> vert(n);
    std::vector<std::size_t> pos(n);
    {
        std::vector<std::size_t> cursor(bin.begin(), bin.end() - 1);
        for (NodeId v = 0; v < n; ++v) {
            pos[v] = cursor[deg[v]]++;
            vert[pos[v]] = v;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const NodeId v = vert[i];
        result.shell[v] = deg[v];
        for (const NodeId u : g.neighbors(v)) {
            if (deg[u] <= deg[v]) continue;
            // Swap u to the front of its degree bucket, then shrink it.
            const std::size_t pu = pos[u];
            const std::size_t pw = bin[deg[u]];
            const NodeId w = vert[pw];
            if (u != w) {
                vert[pu] = w;
                vert[pw] = u;
                pos[u] = pw;
                pos[w] = pu;
            }
            ++bin[deg[u]];
            --deg[u];
        }
    }
    for (const auto s : result.shell)
        result.max_shell = std::max(result.max_shell, s);
    return result;
}

// K-shell index of each node within its isolated community subgraph. Shell
// values are the raw per-community core numbers, not renumbered globally.
// Nodes left without intra-community edges get shell 0.
inline ShellAssignment community_kshell(const Graph& g, const CommunityPartition& p,
                                        std::size_t threads = 1) {
    ShellAssignment result;
    result.shell.assign(g.node_count(), 0);

    const auto parts = isolate_communities(g, p);
    std::vector<std::uint32_t> part_max(parts.size(), 0);
    parallel_for(parts.size(), threads, [&](std::size_t i) {
        const auto& part = parts[i];
        const ShellAssignment local = kshell(part.graph);
        for (NodeId lv = 0; lv < part.to_global.size(); ++lv)
            result.shell[part.to_global[lv]] = local.shell[lv];
        part_max[i] = local.max_shell;
    });
    for (const auto m : part_max) result.max_shell = std::max(result.max_shell, m);
    return result;
}

}  // namespace cks
