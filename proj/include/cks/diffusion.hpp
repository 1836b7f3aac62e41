#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "cks/graph.hpp"
#include "cks/parallel.hpp"
#include "cks/rng.hpp"

namespace cks {

struct DiffusionConfig {
    double activation_probability = 0.1;
    std::uint32_t runs = 100;
    std::uint64_t master_seed = 0;

    void validate() const {
        if (activation_probability < 0.0 || activation_probability > 1.0)
            throw std::invalid_argument("activation probability outside [0, 1]");
        if (runs < 1) throw std::invalid_argument("runs must be at least 1");
    }
};

struct DiffusionOutcome {
    std::vector<std::uint32_t> infected_counts;  // per run
    double mean_fis = 0.0;
    double std_fis = 0.0;  // sample standard deviation
};

namespace detail {

inline void check_seeds(const Graph& g, std::span<const NodeId> seeds) {
    if (seeds.empty()) throw std::invalid_argument("seed set is empty");
    for (const NodeId s : seeds)
        if (s >= g.node_count()) throw std::out_of_range("seed id out of range");
}

}  // namespace detail

// One independent-cascade run. Seeds start active; each node activated in
// round t gets exactly one activation attempt per then-inactive neighbor in
// round t+1, and a failed attempt is never retried. The frontier is
// processed in ascending node-id order, which fixes the RNG draw order
// without changing the cascade distribution.
inline std::vector<NodeId> ic_run(const Graph& g, std::span<const NodeId> seeds,
                                  double p, Rng& rng) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("activation probability outside [0, 1]");
    detail::check_seeds(g, seeds);

    std::vector<char> active(g.node_count(), 0);
    std::vector<NodeId> frontier(seeds.begin(), seeds.end());
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    for (const NodeId s : frontier) active[s] = 1;

    std::vector<NodeId> infected = frontier;
    std::vector<NodeId> next;
    while (!frontier.empty()) {
        next.clear();
        for (const NodeId u : frontier) {
            for (const NodeId v : g.neighbors(u)) {
                if (active[v]) continue;
                if (rng.bernoulli(p)) {
                    active[v] = 1;
                    next.push_back(v);
                }
            }
        }
        std::sort(next.begin(), next.end());
        infected.insert(infected.end(), next.begin(), next.end());
        frontier.swap(next);
    }
    std::sort(infected.begin(), infected.end());
    return infected;
}

// Repeated IC runs with per-run RNG streams derived from (master_seed, run
// index). Results are identical for any worker count and execution order.
inline DiffusionOutcome monte_carlo(const Graph& g, std::span<const NodeId> seeds,
                                    const DiffusionConfig& cfg,
                                    std::size_t threads = 1) {
    cfg.validate();
    detail::check_seeds(g, seeds);

    DiffusionOutcome outcome;
    outcome.infected_counts.assign(cfg.runs, 0);
    parallel_for(cfg.runs, threads, [&](std::size_t run) {
        Rng rng(derive_stream(cfg.master_seed, run));
        outcome.infected_counts[run] = static_cast<std::uint32_t>(
            ic_run(g, seeds, cfg.activation_probability, rng).size());
    });

    const double n = static_cast<double>(g.node_count());
    double sum = 0.0;
    for (const auto c : outcome.infected_counts) sum += static_cast<double>(c) / n;
    outcome.mean_fis = sum / static_cast<double>(cfg.runs);
    if (cfg.runs > 1) {
        double sq = 0.0;
        for (const auto c : outcome.infected_counts) {
            const double d = static_cast<double>(c) / n - outcome.mean_fis;
            sq += d * d;
        }
        outcome.std_fis = std::sqrt(sq / static_cast<double>(cfg.runs - 1));
    }
    return outcome;
}

// Exact expected cascade size by live-edge enumeration: each undirected edge
// is live independently with probability p, and the cascade reaches exactly
// the nodes connected to a seed through live edges. Exponential in the edge
// count, so it is capped at 20 edges.
inline double exact_expected_spread(const Graph& g, std::span<const NodeId> seeds,
                                    double p) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("activation probability outside [0, 1]");
    detail::check_seeds(g, seeds);
    const auto edge_list = g.edges();
    const std::size_t m = edge_list.size();
    if (m > 20) throw std::invalid_argument("graph too large for exact enumeration");

    const std::size_t n = g.node_count();
    std::vector<double> p_live(m + 1), p_dead(m + 1);
    p_live[0] = p_dead[0] = 1.0;
    for (std::size_t k = 1; k <= m; ++k) {
        p_live[k] = p_live[k - 1] * p;
        p_dead[k] = p_dead[k - 1] * (1.0 - p);
    }

    std::vector<NodeId> parent(n);
    std::vector<char> seeded(n, 0);
    for (const NodeId s : seeds) seeded[s] = 1;

    auto find = [&](NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    double expected = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::iota(parent.begin(), parent.end(), NodeId{0});
        int live = 0;
        for (std::size_t e = 0; e < m; ++e) {
            if (!(mask & (1ULL << e))) continue;
            ++live;
            const auto ru = find(edge_list[e].first);
            const auto rv = find(edge_list[e].second);
            if (ru != rv) parent[ru] = rv;
        }
        std::vector<char> root_seeded(n, 0);
        for (NodeId v = 0; v < n; ++v)
            if (seeded[v]) root_seeded[find(v)] = 1;
        std::size_t reached = 0;
        for (NodeId v = 0; v < n; ++v)
            if (root_seeded[find(v)]) ++reached;
        expected += p_live[live] * p_dead[m - live] * static_cast<double>(reached);
    }
    return expected;
}

}  // namespace cks
