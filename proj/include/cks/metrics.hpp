#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cks/baselines.hpp"
#include "cks/diffusion.hpp"
#include "cks/graph.hpp"

namespace cks {

// ---------------------------------------------------------------------------
// Seed-set dispersion
// ---------------------------------------------------------------------------

struct AsplResult {
    std::uint32_t seed_count = 0;        // distinct seeds
    std::uint64_t reachable_pairs = 0;   // unordered pairs with a path
    std::uint64_t unreachable_pairs = 0;
    std::optional<double> mean;          // empty when no pair is reachable
};

// Average shortest-path length over unordered pairs of distinct seeds.
// Pairs in different components are counted but excluded from the mean.
inline AsplResult aspl_among_seeds(const Graph& g, std::span<const NodeId> seeds) {
    std::vector<NodeId> distinct(seeds.begin(), seeds.end());
    for (const NodeId s : distinct)
        if (s >= g.node_count()) throw std::out_of_range("seed id out of range");
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2)
        throw std::invalid_argument("need at least two distinct seeds");

    AsplResult result;
    result.seed_count = static_cast<std::uint32_t>(distinct.size());
    std::uint64_t total = 0;
    for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
        const auto dist = bfs_distances(g, distinct[i]);
        for (std::size_t j = i + 1; j < distinct.size(); ++j) {
            const auto d = dist[distinct[j]];
            if (d == kUnreachable) {
                ++result.unreachable_pairs;
            } else {
                ++result.reachable_pairs;
                total += static_cast<std::uint64_t>(d);
            }
        }
    }
    if (result.reachable_pairs > 0)
        result.mean = static_cast<double>(total) /
                      static_cast<double>(result.reachable_pairs);
    return result;
}

// ---------------------------------------------------------------------------
// Spread sweeps
// ---------------------------------------------------------------------------

// Seed-set size for a fraction of the graph: round to nearest, at least 1.
inline std::uint32_t fraction_to_k(std::size_t node_count, double fraction) {
    if (!(fraction > 0.0) || fraction > 1.0)
        throw std::invalid_argument("seed fraction outside (0, 1]");
    const auto k = static_cast<std::uint64_t>(
        std::llround(fraction * static_cast<double>(node_count)));
    return static_cast<std::uint32_t>(
        std::clamp<std::uint64_t>(k, 1, node_count));
}

struct SweepPoint {
    double grid_value = 0.0;
    double mean_fis = 0.0;
    double std_fis = 0.0;
    std::uint32_t runs = 0;
};

struct SweepResult {
    Method method = Method::Cks;
    std::string grid_var;
    std::vector<SweepPoint> points;
};

namespace detail {

inline void check_grid(std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("empty sweep grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("sweep grid must be strictly increasing");
}

// Grid point i uses stream master_seed + i regardless of method, so rival
// methods face identical cascades at each point (common random numbers).
inline SweepPoint sweep_point(const Graph& g, std::span<const NodeId> seeds,
                              double grid_value, double p,
                              const DiffusionConfig& base, std::size_t index,
                              std::size_t threads) {
    DiffusionConfig cfg = base;
    cfg.activation_probability = p;
    cfg.master_seed = base.master_seed + index;
    const auto outcome = monte_carlo(g, seeds, cfg, threads);
    return SweepPoint{grid_value, outcome.mean_fis, outcome.std_fis, cfg.runs};
}

}  // namespace detail

// Spread as the seed fraction grows; activation probability is taken from
// `base`. The ranking is computed once and reused across grid points.
inline SweepResult sweep_fraction(const Graph& g, Method method,
                                  std::span<const double> fractions,
                                  const DiffusionConfig& base,
                                  const MethodOptions& options = {},
                                  std::size_t threads = 1) {
    base.validate();
    detail::check_grid(fractions);
    for (const double f : fractions) (void)fraction_to_k(g.node_count(), f);

    const auto ranking = method_ranking(g, method, options);
    SweepResult result{method, "seed_fraction", {}};
    result.points.reserve(fractions.size());
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        const auto k = fraction_to_k(g.node_count(), fractions[i]);
        const auto seeds = select_seeds(ranking.table, k);
        result.points.push_back(detail::sweep_point(
            g, seeds, fractions[i], base.activation_probability, base, i, threads));
    }
    return result;
}

// Spread as the activation probability grows, at a fixed seed fraction.
inline SweepResult sweep_p(const Graph& g, Method method,
                           std::span<const double> ps, double fraction,
                           const DiffusionConfig& base,
                           const MethodOptions& options = {},
                           std::size_t threads = 1) {
    base.validate();
    detail::check_grid(ps);
    for (const double p : ps)
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("activation probability outside [0, 1]");

    const auto ranking = method_ranking(g, method, options);
    const auto k = fraction_to_k(g.node_count(), fraction);
    const auto seeds = select_seeds(ranking.table, k);
    SweepResult result{method, "p", {}};
    result.points.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        result.points.push_back(
            detail::sweep_point(g, seeds, ps[i], ps[i], base, i, threads));
    return result;
}

inline constexpr double kDefaultSweepFraction = 0.2;

// ---------------------------------------------------------------------------
// Timing
// ---------------------------------------------------------------------------

template <typename F>
inline double time_ms(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    std::forward<F>(fn)();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

struct TimedRanking {
    CentralityResult result;
    double milliseconds = 0.0;
};

// Wall time of one full scoring pass. Everything a method needs to produce
// its ranking counts: the community pipeline is inside the measured region,
// not amortized away.
inline TimedRanking time_method(const Graph& g, Method method,
                                const MethodOptions& options = {}) {
    TimedRanking timed;
    timed.milliseconds =
        time_ms([&] { timed.result = method_ranking(g, method, options); });
    return timed;
}

}  // namespace cks
