#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cks/coreness.hpp"
#include "cks/graph.hpp"
#include "cks/parallel.hpp"
#include "cks/score.hpp"

namespace cks {

struct CentralityResult {
    std::string method;
    ScoreTable table;
};

namespace detail {

// Brandes dependency accumulation from one source, added into `acc`.
struct BrandesScratch {
    std::vector<std::int32_t> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<NodeId> queue;

    void reset(std::size_t n) {
        dist.assign(n, -1);
        sigma.assign(n, 0.0);
        delta.assign(n, 0.0);
        queue.clear();
        queue.reserve(n);
    }
};

inline void brandes_from_source(const Graph& g, NodeId s, BrandesScratch& ws,
                                std::vector<double>& acc) {
    ws.reset(g.node_count());
    ws.dist[s] = 0;
    ws.sigma[s] = 1.0;
    ws.queue.push_back(s);

    for (std::size_t head = 0; head < ws.queue.size(); ++head) {
        const NodeId u = ws.queue[head];
        for (const NodeId v : g.neighbors(u)) {
            if (ws.dist[v] < 0) {
                ws.dist[v] = ws.dist[u] + 1;
                ws.queue.push_back(v);
            }
            if (ws.dist[v] == ws.dist[u] + 1) ws.sigma[v] += ws.sigma[u];
        }
    }
    // Walk the BFS order backwards; it is a valid reverse topological order
    // of the shortest-path DAG.
    for (std::size_t i = ws.queue.size(); i-- > 0;) {
        const NodeId w = ws.queue[i];
        for (const NodeId v : g.neighbors(w)) {
            if (ws.dist[v] == ws.dist[w] - 1)
                ws.delta[v] += ws.sigma[v] / ws.sigma[w] * (1.0 + ws.delta[w]);
        }
        if (w != s) acc[w] += ws.delta[w];
    }
}

}  // namespace detail

// Unnormalized shortest-path betweenness, each unordered pair counted once.
// Sources are processed in fixed-size blocks merged in block order, so the
// floating-point sums are identical for every thread count.
inline CentralityResult betweenness(const Graph& g, std::size_t threads = 1) {
    const std::size_t n = g.node_count();
    std::vector<double> scores(n, 0.0);
    if (n > 2) {
        const std::size_t block_count = std::min<std::size_t>(128, (n + 63) / 64);
        const std::size_t block_size = (n + block_count - 1) / block_count;
        std::vector<std::vector<double>> partial(block_count);

        parallel_for(block_count, threads, [&](std::size_t b) {
            detail::BrandesScratch ws;
            auto& acc = partial[b];
            acc.assign(n, 0.0);
            const std::size_t begin = b * block_size;
            const std::size_t end = std::min(begin + block_size, n);
            for (std::size_t s = begin; s < end; ++s)
                detail::brandes_from_source(g, static_cast<NodeId>(s), ws, acc);
        });
        for (const auto& acc : partial)
            for (std::size_t v = 0; v < n; ++v) scores[v] += acc[v];
        for (auto& x : scores) x *= 0.5;
    }
    return {"bc", make_score_table(std::move(scores))};
}

// Wasserman-Faust closeness: (r-1)/sum_d scaled by (r-1)/(n-1), where r is
// the size of the node's reachable set. 0 for isolated nodes.
inline CentralityResult closeness(const Graph& g, std::size_t threads = 1) {
    const std::size_t n = g.node_count();
    std::vector<double> scores(n, 0.0);
    parallel_for(n, threads, [&](std::size_t s) {
        const auto dist = bfs_distances(g, static_cast<NodeId>(s));
        std::size_t reachable = 0;
        double dist_sum = 0.0;
        for (const auto d : dist) {
            if (d < 0) continue;
            ++reachable;
            dist_sum += d;
        }
        if (reachable > 1 && n > 1) {
            const double r_minus_1 = static_cast<double>(reachable - 1);
            scores[s] = r_minus_1 / dist_sum * r_minus_1 /
                        static_cast<double>(n - 1);
        }
    });
    return {"cc", make_score_table(std::move(scores))};
}

enum class EncMode { Basic, Extended };

// Neighborhood coreness. Basic sums the global K-shell over direct
// neighbors; extended sums the basic score over neighbors again, covering
// the two-hop neighborhood.
inline CentralityResult enc(const Graph& g, EncMode mode = EncMode::Extended) {
    const std::size_t n = g.node_count();
    const ShellAssignment shells = kshell(g);

    std::vector<double> basic(n, 0.0);
    for (NodeId v = 0; v < n; ++v)
        for (const NodeId u : g.neighbors(v))
            basic[v] += static_cast<double>(shells.shell[u]);
    if (mode == EncMode::Basic)
        return {"enc", make_score_table(std::move(basic))};

    std::vector<double> extended(n, 0.0);
    for (NodeId v = 0; v < n; ++v)
        for (const NodeId u : g.neighbors(v)) extended[v] += basic[u];
    return {"enc", make_score_table(std::move(extended))};
}

inline CentralityResult degree_centrality(const Graph& g) {
    std::vector<double> scores(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        scores[v] = static_cast<double>(g.degree(v));
    return {"degree", make_score_table(std::move(scores))};
}

inline CentralityResult kshell_centrality(const Graph& g) {
    const ShellAssignment shells = kshell(g);
    std::vector<double> scores(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        scores[v] = static_cast<double>(shells.shell[v]);
    return {"kshell", make_score_table(std::move(scores))};
}

// ---------------------------------------------------------------------------
// Method dispatch shared by the sweep harness and the CLI. Baselines are
// pluggable here; adding a method means one enum entry and one switch case.
// ---------------------------------------------------------------------------

enum class Method { Cks, Betweenness, Closeness, Enc, Degree, Kshell };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Cks: return "cks";
        case Method::Betweenness: return "bc";
        case Method::Closeness: return "cc";
        case Method::Enc: return "enc";
        case Method::Degree: return "degree";
        case Method::Kshell: return "kshell";
    }
    return "?";
}

inline Method parse_method(std::string_view name) {
    if (name == "cks") return Method::Cks;
    if (name == "bc") return Method::Betweenness;
    if (name == "cc") return Method::Closeness;
    if (name == "enc") return Method::Enc;
    if (name == "degree") return Method::Degree;
    if (name == "kshell") return Method::Kshell;
    throw std::invalid_argument("unknown method: " + std::string(name));
}

struct MethodOptions {
    RankOptions rank;
    EncMode enc_mode = EncMode::Extended;
};

inline CentralityResult method_ranking(const Graph& g, Method method,
                                       const MethodOptions& options = {}) {
    switch (method) {
        case Method::Cks:
            return {"cks", rank(g, options.rank)};
        case Method::Betweenness:
            return betweenness(g, options.rank.threads);
        case Method::Closeness:
            return closeness(g, options.rank.threads);
        case Method::Enc:
            return enc(g, options.enc_mode);
        case Method::Degree:
            return degree_centrality(g);
        case Method::Kshell:
            return kshell_centrality(g);
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace cks
