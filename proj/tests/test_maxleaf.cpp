#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "kernelcut/maxleaf.hpp"
#include "kernelcut/oracles.hpp"

using namespace kernelcut;
using namespace testing;

namespace {

Instance with_bound(Problem p, Graph g, int ell, std::optional<std::int64_t> k = std::nullopt) {
    Instance inst;
    inst.problem = p;
    inst.graph = std::move(g);
    inst.k = k;
    inst.witness = {WitnessKind::MaxLeafBound, {}, ell};
    return inst;
}

// Two branch vertices 0 and 1 joined by three paths with 1, 2 and 3 internal vertices.
Graph theta() {
    return make_graph(8, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 7}, {7, 1}});
}

// K4 with its first edge replaced by a path through three new vertices.
Graph k4_one_long_edge() {
    Graph g = complete(4);
    g.edges.erase(g.edges.begin());
    g.edges.push_back({0, 4});
    g.edges.push_back({4, 5});
    g.edges.push_back({5, 6});
    g.edges.push_back({6, 1});
    g.n = 7;
    return g;
}

}  // namespace

TEST_CASE("contracting degree-two paths") {
    SUBCASE("K4 with one long edge") {
        ContractedGraph c = contract_paths(k4_one_long_edge(), ParallelMode::UpToEll, 1);
        CHECK(c.graph.n == 4);
        CHECK(c.graph.edges.size() == 6);
        std::int64_t total = 0;
        for (auto L : c.labels) total += L;
        CHECK(total == 3);
        CHECK_FALSE(c.violated);
    }
    SUBCASE("theta keeps the longest parallel") {
        ContractedGraph c = contract_paths(theta(), ParallelMode::LongestOnly);
        CHECK(c.graph.n == 2);
        REQUIRE(c.labels.size() == 1);
        CHECK(c.labels[0] == 3);
        CHECK(c.best_two_cycle == 7);
        CHECK(c.max_parallel == 3);
    }
    SUBCASE("theta with a parallel limit") {
        CHECK(contract_paths(theta(), ParallelMode::UpToEll, 2).violated);
        ContractedGraph c = contract_paths(theta(), ParallelMode::UpToEll, 3);
        CHECK_FALSE(c.violated);
        CHECK(c.graph.edges.size() == 3);
    }
    SUBCASE("a lone cycle has no branch vertices") {
        ContractedGraph c = contract_paths(cycle(8), ParallelMode::LongestOnly);
        CHECK(c.graph.n == 0);
        CHECK(c.isolated_cycles == std::vector<std::int64_t>{8});
    }
}

TEST_CASE("longest cycle of a labeled multigraph") {
    Graph two{2, false, true, {{0, 1}, {0, 1}}};
    CHECK(held_karp_longest_cycle(two, {3, 2}) == 7);
    CHECK(held_karp_longest_cycle(complete(3), {0, 0, 0}) == 3);
    CHECK(held_karp_longest_cycle(path(4), {0, 0, 0}) == 0);
    CHECK(held_karp_longest_cycle(complete(4), {0, 0, 0, 0, 0, 0}) == 4);
    CHECK(held_karp_longest_cycle(make_graph(2, {{0, 1}}), {5}, std::int64_t{9}) == 9);
    CHECK_THROWS_AS(held_karp_longest_cycle(complete(21), std::vector<std::int64_t>(210, 0)), InputError);
}

TEST_CASE("labeled longest cycle agrees with the plain oracle after expansion") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 120; ++it) {
        Graph base = random_graph(rng, 3 + static_cast<int>(rng() % 5), 0.5);
        Graph g = subdivide(base, static_cast<int>(rng() % 3));
        ContractedGraph c = contract_paths(g, ParallelMode::UpToEll, 1 << 20);
        std::int64_t best = held_karp_longest_cycle(c.graph, c.labels);
        for (auto x : c.isolated_cycles) best = std::max(best, x);
        for (auto x : c.loop_cycles) best = std::max(best, x);
        CHECK(best == longest_cycle(g).value);
    }
}

TEST_CASE("solving long cycle directly") {
    CHECK(solve_long_cycle_maxleaf(with_bound(Problem::LongCycle, star(9), 3, 3)).status == Status::SolvedNo);
    CHECK(solve_long_cycle_maxleaf(with_bound(Problem::LongCycle, cycle(10), 1, 10)).status == Status::SolvedYes);
    CHECK(solve_long_cycle_maxleaf(with_bound(Problem::LongCycle, cycle(10), 1, 11)).status == Status::SolvedNo);
    CHECK(solve_long_cycle_maxleaf(with_bound(Problem::LongCycle, petersen(), 3, 9)).status == Status::SolvedYes);
    CHECK(solve_long_cycle_maxleaf(with_bound(Problem::LongCycle, petersen(), 3, 10)).status == Status::SolvedNo);
}

TEST_CASE("long-cycle kernel") {
    SUBCASE("subdivided K4 shrinks to four labeled branch vertices") {
        KernelResult r = kernelize_long_cycle_maxleaf(with_bound(Problem::LongCycle, subdivide(complete(4), 10), 4, 20));
        REQUIRE(r.status == Status::Reduced);
        CHECK(r.instance.graph.n == 4);
        CHECK(r.instance.graph.edges.size() == 6);
        CHECK(r.instance.labels == std::vector<std::int64_t>(6, 10));
        CHECK(r.instance.graph.n <= 4 * 4);
        CHECK(decide(r.instance) == Answer::Yes);
    }
    SUBCASE("k beyond the vertex count") {
        Graph g = subdivide(complete(4), 2);
        CHECK(kernelize_long_cycle_maxleaf(with_bound(Problem::LongCycle, g, 4, g.n + 1)).status ==
              Status::SolvedNo);
    }
    SUBCASE("a lone cycle is decided") {
        CHECK(kernelize_long_cycle_maxleaf(with_bound(Problem::LongCycle, cycle(10), 1, 10)).status ==
              Status::SolvedYes);
        CHECK(kernelize_long_cycle_maxleaf(with_bound(Problem::LongCycle, cycle(10), 1, 11)).status ==
              Status::SolvedNo);
    }
    SUBCASE("too many parallels break the promise") {
        CHECK(kernelize_long_cycle_maxleaf(with_bound(Problem::LongCycle, theta(), 2, 8)).status ==
              Status::PromiseViolated);
    }
    SUBCASE("a small threshold hands over to the direct solver") {
        MaxleafConfig cfg;
        cfg.threshold = 5;
        KernelResult r = kernelize_long_cycle_maxleaf(with_bound(Problem::LongCycle, petersen(), 3, 9), cfg);
        CHECK(r.status == Status::SolvedYes);
        REQUIRE_FALSE(r.trace.empty());
        CHECK(r.trace.front().rule == "solve-large-instance");
    }
    SUBCASE("reduced outputs are fixpoints") {
        KernelResult r = kernelize_long_cycle_maxleaf(with_bound(Problem::LongCycle, k4_one_long_edge(), 3, 6));
        REQUIRE(r.status == Status::Reduced);
        KernelResult again = kernelize_long_cycle_maxleaf(r.instance);
        CHECK(again.instance == r.instance);
    }
}

TEST_CASE("threshold") {
    CHECK(maxleaf_threshold(1) == 16 * 16);
    CHECK(maxleaf_threshold(2) == 256 * 64);
    CHECK(maxleaf_threshold(100) == INT64_MAX);
}

TEST_CASE("degree-two squeezing") {
    SUBCASE("long cycle for disjoint cycles") {
        KernelResult r = reduce_degree2_single_internal(with_bound(Problem::DisjointCycles, cycle(9), 1, 1));
        if (r.status == Status::Reduced) CHECK(r.instance.graph.n < 9);
        Answer got = r.status == Status::Reduced ? decide(r.instance)
                                                 : (r.status == Status::SolvedYes ? Answer::Yes : Answer::No);
        CHECK(got == Answer::Yes);
    }
    SUBCASE("path for hamiltonian path") {
        Instance inst = with_bound(Problem::HamiltonianPath, path(10), 1);
        KernelResult r = reduce_degree2_single_internal(inst);
        Answer got = r.status == Status::Reduced ? decide(r.instance)
                                                 : (r.status == Status::SolvedYes ? Answer::Yes : Answer::No);
        CHECK(got == Answer::Yes);
        if (r.status == Status::Reduced) CHECK(r.instance.graph.n <= 4);
    }
    SUBCASE("answers survive on subdivided graphs") {
        std::mt19937_64 rng(4);
        for (int it = 0; it < 100; ++it) {
            Graph g = subdivide(random_graph(rng, 3 + static_cast<int>(rng() % 3), 0.6), 1 + static_cast<int>(rng() % 3));
            for (Problem p : {Problem::HamiltonianPath, Problem::DisjointCycles}) {
                Instance inst = with_bound(p, g, g.n, p == Problem::DisjointCycles ? std::optional<std::int64_t>{1 + static_cast<std::int64_t>(it % 2)} : std::nullopt);
                KernelResult r = reduce_degree2_single_internal(inst);
                if (r.status == Status::PromiseViolated) continue;
                Answer got = r.status == Status::Reduced ? decide(r.instance)
                                                         : (r.status == Status::SolvedYes ? Answer::Yes : Answer::No);
                CHECK(got == decide(inst));
            }
        }
    }
}

TEST_CASE("disjoint paths") {
    SUBCASE("more leaves than the bound") {
        Instance inst = with_bound(Problem::DisjointPaths, star(5), 2, 1);
        inst.pairs = {{1, 2}};
        CHECK(kernelize_disjoint_paths_maxleaf(inst).status == Status::SolvedNo);
    }
    SUBCASE("a single path routes its one request") {
        Instance inst = with_bound(Problem::DisjointPaths, path(8), 2, 1);
        inst.pairs = {{0, 7}};
        CHECK(kernelize_disjoint_paths_maxleaf(inst).status == Status::SolvedYes);
    }
    SUBCASE("crossing requests on a path") {
        Instance inst = with_bound(Problem::DisjointPaths, path(8), 2, 2);
        inst.pairs = {{0, 4}, {2, 7}};
        CHECK(kernelize_disjoint_paths_maxleaf(inst).status == Status::SolvedNo);
    }
}

TEST_CASE("dispatch rejects unsupported problems") {
    CHECK_THROWS_AS(kernelize_maxleaf(with_bound(Problem::LongPath, path(5), 2, 3)), InputError);
    CHECK_THROWS_AS(kernelize_maxleaf(with_bound(Problem::HamiltonianCycle, cycle(5), 2)), InputError);
}
