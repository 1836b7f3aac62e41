#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cks/score.hpp"
#include "support/generators.hpp"
#include "support/karate.hpp"
#include "support/oracles.hpp"

using cks::CommunityPartition;
using cks::Graph;
using cks::NodeId;

namespace {

// Two communities joined through node v (id 8):
//   community 0 = triangle {0,1,2} with pendants 3-0 and 4-1 (five nodes),
//   community 1 = triangle {5,6,7} plus v,
//   v connects to 3,4 (shell 1) and 0,1 (shell 2) across, and to 5 at home.
struct WorkedExample {
    Graph graph;
    CommunityPartition partition;
    cks::ShellAssignment shells;
};

WorkedExample worked_example() {
    WorkedExample w{
        Graph::from_edges(9, {{0, 1},
                              {0, 2},
                              {1, 2},
                              {3, 0},
                              {4, 1},
                              {5, 6},
                              {5, 7},
                              {6, 7},
                              {8, 3},
                              {8, 4},
                              {8, 0},
                              {8, 1},
                              {8, 5}}),
        {}, {}};
    w.partition.assignment = {0, 0, 0, 0, 0, 1, 1, 1, 1};
    w.partition.community_count = 2;
    w.partition.sizes = {5, 4};
    w.shells = cks::community_kshell(w.graph, w.partition);
    return w;
}

bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("connection profiles bucket neighbors by community and shell",
          "[score]") {
    const WorkedExample w = worked_example();

    // the community shells themselves, as a precondition of the example
    CHECK(w.shells.shell == std::vector<std::uint32_t>{2, 2, 2, 1, 1, 2, 2, 2, 1});

    const auto profile = cks::build_profile(w.graph, w.partition, w.shells, 8);
    REQUIRE(profile.communities.size() == 2);
    const auto& across = profile.communities.at(0);
    CHECK(across.total == 4);
    CHECK(across.per_shell.at(1) == 2);
    CHECK(across.per_shell.at(2) == 2);
    const auto& home = profile.communities.at(1);
    CHECK(home.total == 1);
    CHECK(home.per_shell.at(2) == 1);
    CHECK(profile.total_connections() == w.graph.degree(8));
}

TEST_CASE("profiles of simple shapes", "[score]") {
    const Graph star = gen::star(3);
    CommunityPartition one;
    one.assignment.assign(star.node_count(), 0);
    one.community_count = 1;
    one.sizes = {static_cast<std::uint32_t>(star.node_count())};
    const auto shells = cks::community_kshell(star, one);
    const auto center = cks::build_profile(star, one, shells, 0);
    REQUIRE(center.communities.size() == 1);
    CHECK(center.communities.at(0).per_shell.at(1) == 3);

    const Graph lonely = Graph::from_edges(3, {{0, 1}});
    CommunityPartition all;
    all.assignment.assign(3, 0);
    all.community_count = 1;
    all.sizes = {3};
    const auto ls = cks::community_kshell(lonely, all);
    CHECK(cks::build_profile(lonely, all, ls, 2).communities.empty());

    CHECK_THROWS_AS(cks::build_profile(lonely, all, ls, 99), std::out_of_range);
}

TEST_CASE("profile totals always sum to the degree", "[score]") {
    const Graph g = gen::planted_partition(3, 20, 0.3, 0.03, 6);
    const auto part = cks::louvain(g, 6);
    const auto shells = cks::community_kshell(g, part);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto profile = cks::build_profile(g, part, shells, v);
        CHECK(profile.total_connections() == g.degree(v));
        for (const auto& [c, hist] : profile.communities) CHECK(hist.total >= 1);
    }
}

TEST_CASE("entropy closed forms", "[score]") {
    cks::ShellHistogram even;
    even.per_shell = {{1, 2}, {2, 2}};
    even.total = 4;
    CHECK(cks::kse(even) == Catch::Approx(1.5 * std::log(2.0)).margin(1e-12));
    CHECK(cks::kse(even) == Catch::Approx(1.03972).margin(1e-5));

    cks::ShellHistogram skewed;
    skewed.per_shell = {{1, 1}, {2, 3}};
    skewed.total = 4;
    const double expected =
        0.25 * std::log(4.0) + 2.0 * 0.75 * std::log(4.0 / 3.0);
    CHECK(cks::kse(skewed) == Catch::Approx(expected).margin(1e-12));
    CHECK(cks::kse(skewed) == Catch::Approx(0.77809).margin(1e-5));

    cks::ShellHistogram single;
    single.per_shell = {{3, 5}};
    single.total = 5;
    CHECK(cks::kse(single) == 0.0);

    CHECK_THROWS_AS(cks::kse(cks::ShellHistogram{}), std::invalid_argument);
}

TEST_CASE("entropy is non-negative and bounded", "[score]") {
    const Graph g = gen::planted_partition(4, 15, 0.35, 0.04, 12);
    const auto part = cks::louvain(g, 12);
    const auto shells = cks::community_kshell(g, part);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto profile = cks::build_profile(g, part, shells, v);
        for (const auto& [c, hist] : profile.communities) {
            const double e = cks::kse(hist);
            CHECK(e >= 0.0);
            std::uint32_t max_shell = 0;
            for (const auto& [s, cnt] : hist.per_shell)
                max_shell = std::max(max_shell, s);
            const double bound = static_cast<double>(max_shell) *
                                 std::log(double(hist.per_shell.size()));
            CHECK(e <= bound + 1e-12);
        }
    }
}

TEST_CASE("the worked scoring example evaluates to 20.7944", "[score]") {
    const WorkedExample w = worked_example();
    const double score = cks::cks_score(w.graph, w.partition, w.shells, 8);
    // 5 * (1.5 ln 2) * 4 across + 4 * 0 * 1 at home
    CHECK(score == Catch::Approx(30.0 * std::log(2.0)).margin(1e-12));
    CHECK(score == Catch::Approx(20.7944).margin(1e-4));
}

TEST_CASE("excluding the home community drops its contribution", "[score]") {
    const WorkedExample w = worked_example();

    // v's home histogram is single-shell, so its term is already zero
    const double with_home = cks::cks_score(w.graph, w.partition, w.shells, 8);
    const double without =
        cks::cks_score(w.graph, w.partition, w.shells, 8, {.exclude_own_community = true});
    CHECK(with_home == Catch::Approx(without).margin(1e-12));

    // node 5 has a mixed home histogram {shell2: 2, shell1: 1} and no
    // foreign edges at all
    const double home_only = cks::cks_score(w.graph, w.partition, w.shells, 5);
    CHECK(home_only > 0.0);
    CHECK(cks::cks_score(w.graph, w.partition, w.shells, 5,
                         {.exclude_own_community = true}) == 0.0);
}

TEST_CASE("uniform-shell communities score zero everywhere", "[score]") {
    const Graph k5 = gen::clique(5);
    const auto table = cks::rank(k5, {.rng_seed = 1});
    for (const double s : table.scores) CHECK(s == 0.0);
    CHECK(table.ranking == std::vector<NodeId>{0, 1, 2, 3, 4});
}

TEST_CASE("score tables sort descending with ascending-id ties", "[score]") {
    const auto table = cks::make_score_table({1.0, 3.0, 3.0, 0.5});
    CHECK(table.ranking == std::vector<NodeId>{1, 2, 0, 3});
    for (std::size_t i = 1; i < table.ranking.size(); ++i)
        CHECK(table.scores[table.ranking[i - 1]] >=
              table.scores[table.ranking[i]]);
}

TEST_CASE("the bridge node tops the two-clique fixture", "[score]") {
    const auto fx = gen::two_clique_bridge();
    for (const std::uint64_t seed : {0, 1, 2, 3, 4}) {
        const auto table = cks::rank(fx.graph, {.rng_seed = seed});
        REQUIRE(table.ranking.front() == fx.x);
    }
    const auto table = cks::rank(fx.graph, {.rng_seed = 0});
    // 6*2.5ln2*2 across-left + 5*2.5ln2*2 across-right = 55 ln 2
    CHECK(table.scores[fx.x] ==
          Catch::Approx(55.0 * std::log(2.0)).margin(1e-9));
}

TEST_CASE("the karate club hub ranks first", "[score]") {
    const Graph k = gen::karate_club();
    const auto table = cks::rank(k, {.rng_seed = 42});
    REQUIRE(!table.ranking.empty());
    CHECK(k.label(table.ranking.front()) == "34");
    CHECK(table.scores[table.ranking.front()] > 0.0);
}

TEST_CASE("pipeline scores match the direct-formula oracle", "[score]") {
    for (const std::uint64_t seed : {1, 2, 3, 4, 5}) {
        const Graph g = gen::planted_partition(3, 20, 0.3, 0.02, seed);
        const auto pipe = cks::cks_pipeline(g, {.rng_seed = seed});
        const auto direct =
            oracle::cks_scores_direct(g, pipe.partition.assignment);
        REQUIRE(direct.size() == pipe.table.scores.size());
        for (NodeId v = 0; v < g.node_count(); ++v)
            CHECK(close_rel(pipe.table.scores[v], direct[v], 1e-9));
        CHECK(pipe.table.ranking == oracle::ranking_of(direct));
    }
}

TEST_CASE("the ranking is invariant to the entropy log base", "[score]") {
    const Graph g = gen::planted_partition(3, 18, 0.3, 0.03, 11);
    const auto part = cks::louvain(g, 11);
    const auto nat = oracle::cks_scores_direct(g, part.assignment);
    const auto base2 = oracle::cks_scores_direct(g, part.assignment, 2.0);
    const auto base10 = oracle::cks_scores_direct(g, part.assignment, 10.0);
    CHECK(oracle::ranking_of(nat) == oracle::ranking_of(base2));
    CHECK(oracle::ranking_of(nat) == oracle::ranking_of(base10));
}

TEST_CASE("scores are invariant under node relabeling", "[score]") {
    const Graph g = gen::erdos_renyi(30, 0.15, 19);
    const auto part = cks::louvain(g, 19);
    const auto shells = cks::community_kshell(g, part);

    std::vector<NodeId> perm(g.node_count());
    std::iota(perm.begin(), perm.end(), NodeId{0});
    cks::Rng rng(99);
    rng.shuffle(perm);

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    const Graph h = Graph::from_edges(g.node_count(), edges);

    CommunityPartition q;
    q.assignment.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        q.assignment[perm[v]] = part.assignment[v];
    q.community_count = part.community_count;
    q.sizes = part.sizes;
    const auto shells_h = cks::community_kshell(h, q);

    for (NodeId v = 0; v < g.node_count(); ++v) {
        CHECK(shells_h.shell[perm[v]] == shells.shell[v]);
        CHECK(cks::cks_score(h, q, shells_h, perm[v]) ==
              Catch::Approx(cks::cks_score(g, part, shells, v)).margin(1e-12));
    }
}

TEST_CASE("ranking is bit-reproducible and thread-count independent",
          "[score]") {
    const Graph g = gen::planted_partition(4, 25, 0.25, 0.02, 8);
    const auto a = cks::rank(g, {.rng_seed = 31});
    const auto b = cks::rank(g, {.rng_seed = 31});
    CHECK(a.scores == b.scores);
    CHECK(a.ranking == b.ranking);

    const auto threaded = cks::rank(g, {.rng_seed = 31, .threads = 4});
    CHECK(a.scores == threaded.scores);
    CHECK(a.ranking == threaded.ranking);
}

TEST_CASE("seed selection takes ranking prefixes and validates k", "[score]") {
    const auto fx = gen::two_clique_bridge();
    const auto table = cks::rank(fx.graph, {.rng_seed = 0});
    CHECK(cks::select_seeds(table, 1) == std::vector<NodeId>{fx.x});
    CHECK(cks::select_seeds(table, fx.graph.node_count()).size() ==
          fx.graph.node_count());
    CHECK_THROWS_AS(cks::select_seeds(table, 0), std::invalid_argument);
    CHECK_THROWS_AS(cks::select_seeds(table, fx.graph.node_count() + 1),
                    std::invalid_argument);
}
