#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cks/community.hpp"
#include "cks/coreness.hpp"
#include "cks/graph.hpp"
#include "cks/parallel.hpp"

namespace cks {

// Edge counts of one node into one community, bucketed by the community
// K-shell of the far endpoint. Keys are raw shell values; absent keys are
// zero counts.
struct ShellHistogram {
    std::map<std::uint32_t, std::uint32_t> per_shell;
    std::uint32_t total = 0;  // edge count into the community
};

// Per-community connection histograms of one node. Covers the node's own
// community and every adjacent community alike.
struct CommunityProfile {
    std::map<std::uint32_t, ShellHistogram> communities;

    std::uint32_t total_connections() const {
        std::uint32_t sum = 0;
        for (const auto& [c, hist] : communities) sum += hist.total;
        return sum;
    }
};

inline CommunityProfile build_profile(const Graph& g, const CommunityPartition& p,
                                      const ShellAssignment& community_shells,
                                      NodeId v) {
    if (v >= g.node_count()) throw std::out_of_range("node id out of range");
    CommunityProfile profile;
    for (const NodeId u : g.neighbors(v)) {
        auto& hist = profile.communities[p.assignment[u]];
        ++hist.per_shell[community_shells.shell[u]];
        ++hist.total;
    }
    return profile;
}

// Shell-weighted entropy of one community histogram:
//   -sum_s K_s * (eta_s / eta) * ln(eta_s / eta)
// over the shells present. Always >= 0; exactly 0 when all edges land in a
// single shell.
inline double kse(const ShellHistogram& hist) {
    if (hist.total == 0) throw std::invalid_argument("empty shell histogram");
    const double total = static_cast<double>(hist.total);
    double acc = 0.0;
    for (const auto& [shell, count] : hist.per_shell) {
        if (count == 0) continue;
        const double ratio = static_cast<double>(count) / total;
        acc -= static_cast<double>(shell) * ratio * std::log(ratio);
    }
    return acc;
}

struct ScoreOptions {
    // Drop the node's own community from the score sum, keeping only the
    // bridge contributions.
    bool exclude_own_community = false;
};

// Community-size-weighted sum of shell entropies:
//   sum over connected communities c of NN_c * KSE_{v,c} * eta_{v,c}.
// High for nodes whose edges fan out across the shells of large communities.
inline double cks_score(const Graph& g, const CommunityPartition& p,
                        const ShellAssignment& community_shells, NodeId v,
                        const ScoreOptions& options = {}) {
    const CommunityProfile profile = build_profile(g, p, community_shells, v);
    double score = 0.0;
    for (const auto& [c, hist] : profile.communities) {
        if (options.exclude_own_community && c == p.assignment[v]) continue;
        score += static_cast<double>(p.sizes[c]) * kse(hist) *
                 static_cast<double>(hist.total);
    }
    return score;
}

// Scores with the ranking: descending score, ties by ascending node id.
struct ScoreTable {
    std::vector<double> scores;
    std::vector<NodeId> ranking;
};

inline ScoreTable make_score_table(std::vector<double> scores) {
    ScoreTable table;
    table.ranking.resize(scores.size());
    std::iota(table.ranking.begin(), table.ranking.end(), NodeId{0});
    std::stable_sort(table.ranking.begin(), table.ranking.end(),
                     [&](NodeId a, NodeId b) {
                         if (scores[a] != scores[b]) return scores[a] > scores[b];
                         return a < b;
                     });
    table.scores = std::move(scores);
    return table;
}

struct RankOptions {
    std::uint64_t rng_seed = 0;
    double resolution = 1.0;
    bool exclude_own_community = false;
    std::size_t threads = 1;
};

// Everything the ranking pipeline produces, for callers that need the
// intermediate stages (community and shell dumps, diagnostics).
struct CksPipeline {
    CommunityPartition partition;
    ShellAssignment community_shells;
    ScoreTable table;
};

// Full pipeline: Louvain -> community isolation -> per-community K-shell ->
// score every node.
inline CksPipeline cks_pipeline(const Graph& g, const RankOptions& options = {}) {
    CksPipeline out;
    out.partition = louvain(g, options.rng_seed, options.resolution);
    out.community_shells = community_kshell(g, out.partition, options.threads);

    std::vector<double> scores(g.node_count(), 0.0);
    const ScoreOptions score_options{options.exclude_own_community};
    parallel_for(g.node_count(), options.threads, [&](std::size_t v) {
        scores[v] = cks_score(g, out.partition, out.community_shells,
                              static_cast<NodeId>(v), score_options);
    });
    out.table = make_score_table(std::move(scores));
    return out;
}

inline ScoreTable rank(const Graph& g, const RankOptions& options = {}) {
    return cks_pipeline(g, options).table;
}

// First k entries of the ranking.
inline std::vector<NodeId> select_seeds(const ScoreTable& table, std::size_t k) {
    if (k < 1 || k > table.ranking.size())
        throw std::invalid_argument("seed count out of range");
    return {table.ranking.begin(), table.ranking.begin() + static_cast<std::ptrdiff_t>(k)};
}

}  // namespace cks
