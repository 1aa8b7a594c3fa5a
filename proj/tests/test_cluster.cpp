#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "kernelcut/cluster.hpp"
#include "kernelcut/generators.hpp"
#include "kernelcut/oracles.hpp"

using namespace kernelcut;
using namespace testing;

namespace {

Instance with_modulator(Problem p, Graph g, std::vector<int> X, std::optional<std::int64_t> k = std::nullopt) {
    Instance inst;
    inst.problem = p;
    inst.graph = std::move(g);
    inst.k = k;
    inst.witness = {WitnessKind::ClusterModulator, X, static_cast<int>(X.size())};
    return inst;
}

// Disjoint cliques of the given sizes, then `extra` modulator vertices with the listed edges.
Graph cliques_plus(const std::vector<int>& sizes, int extra, const std::vector<Edge>& attach, std::vector<int>& X) {
    Graph g;
    for (int s : sizes) {
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b) g.edges.push_back({g.n + a, g.n + b});
        g.n += s;
    }
    X.clear();
    for (int i = 0; i < extra; ++i) X.push_back(g.n + i);
    g.n += extra;
    for (auto e : attach) g.edges.push_back(e);
    return g;
}

Answer answer_of(const KernelResult& r) {
    if (r.status == Status::Reduced) return decide(r.instance);
    return r.status == Status::SolvedYes ? Answer::Yes : Answer::No;
}

}  // namespace

TEST_CASE("decomposition") {
    std::vector<int> X;
    Graph g = cliques_plus({3, 2, 1}, 1, {{6, 0}, {6, 3}}, X);
    ClusterDecomposition d = decompose_cluster(g, X);
    CHECK(d.X == std::vector<int>{6});
    REQUIRE(d.cliques.size() == 3);
    CHECK(d.cliques[0] == std::vector<int>{0, 1, 2});
    CHECK(d.clique_of[6] == -1);
    CHECK(d.clique_of[4] == 1);
    CHECK_THROWS_AS(decompose_cluster(path(3), {}), InputError);
    CHECK_NOTHROW(decompose_cluster(path(3), {1}));
}

TEST_CASE("clique marking") {
    SUBCASE("a clique of at least k vertices answers yes") {
        std::vector<int> X;
        Graph g = cliques_plus({6, 2}, 1, {{8, 6}}, X);
        ClusterDecomposition d = decompose_cluster(g, X);
        CHECK(mark_cliques(g, d, 6).trivially_yes);
        CHECK_FALSE(mark_cliques(g, d, 7).trivially_yes);
    }
    SUBCASE("per-pair quota keeps a bounded number of connectors") {
        // two modulator vertices joined through five single-vertex cliques
        std::vector<int> X;
        std::vector<Edge> att;
        for (int v = 0; v < 5; ++v) {
            att.push_back({5, v});
            att.push_back({6, v});
        }
        Graph g = cliques_plus({1, 1, 1, 1, 1}, 2, att, X);
        ClusterDecomposition d = decompose_cluster(g, X);
        std::vector<char> keep = mark_cliques_per_pair(g, d, 3);
        int kept = 0;
        for (char c : keep) kept += c;
        CHECK(kept == 3);
    }
    SUBCASE("dropping unmarked cliques keeps the answer") {
        std::vector<int> X;
        Graph g = cliques_plus({2, 2, 2}, 1, {{6, 0}, {6, 1}}, X);
        ClusterDecomposition d = decompose_cluster(g, X);
        CHECK_FALSE(mark_cliques(g, d, 5).trivially_yes);
        for (std::int64_t k = 3; k <= 5; ++k) {
            Instance inst = with_modulator(Problem::LongCycle, g, X, k);
            CHECK(answer_of(kernelize_long_cycle_cluster(inst)) == decide(inst));
        }
    }
}

TEST_CASE("marked vertex sets stay within their bound") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; ++it) {
        PlantedParams pp;
        pp.problem = Problem::LongCycle;
        pp.n = 10 + static_cast<int>(rng() % 20);
        pp.ell = 1 + static_cast<int>(rng() % 3);
        Instance inst = gen_random_planted(PlantedKind::Cluster, pp, 500 + it);
        ClusterDecomposition d = decompose_cluster(inst.graph, inst.witness.vertices);
        mark_clique_vertices(inst.graph, d);
        const std::size_t ell = d.X.size();
        REQUIRE(d.marked.size() == d.cliques.size());
        for (std::size_t c = 0; c < d.cliques.size(); ++c) {
            CHECK(d.marked[c].size() <= ell * (2 * ell + 1) + ell * (ell - 1) / 2 * (2 * ell + 1));
            CHECK(std::is_sorted(d.marked[c].begin(), d.marked[c].end()));
        }
        Graph h = restrict_entries(inst.graph, d);
        CHECK(h.edges.size() <= inst.graph.edges.size());
    }
}

TEST_CASE("exhaustive long-cycle search") {
    std::vector<int> X;
    // two triangles bridged by one modulator vertex on each side
    Graph g = cliques_plus({3, 3}, 2, {{6, 0}, {6, 3}, {7, 1}, {7, 4}}, X);
    CHECK(fpt_long_cycle_cluster(with_modulator(Problem::LongCycle, g, X, 8)));
    CHECK_FALSE(fpt_long_cycle_cluster(with_modulator(Problem::LongCycle, g, X, 9)));
    Graph tri = complete(3);
    CHECK(fpt_long_cycle_cluster(with_modulator(Problem::LongCycle, tri, {0}, 3)));
    CHECK_THROWS_AS(fpt_long_cycle_cluster(with_modulator(Problem::LongCycle, complete(6), {0, 1, 2, 3, 4}, 6)),
                    InputError);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        PlantedParams pp;
        pp.problem = Problem::LongCycle;
        pp.n = 6 + static_cast<int>(seed % 7);
        pp.ell = static_cast<int>(seed % 4);
        Instance inst = gen_random_planted(PlantedKind::Cluster, pp, seed);
        CHECK(fpt_long_cycle_cluster(inst) == (decide(inst) == Answer::Yes));
    }
}

TEST_CASE("long-cycle kernel") {
    SUBCASE("a single modulator vertex on a triangle") {
        KernelResult r = kernelize_long_cycle_cluster(with_modulator(Problem::LongCycle, complete(3), {0}, 5));
        CHECK(answer_of(r) == Answer::No);
    }
    SUBCASE("one big clique with an isolated modulator") {
        std::vector<int> X;
        Graph g = cliques_plus({9}, 0, {}, X);
        CHECK(kernelize_long_cycle_cluster(with_modulator(Problem::LongCycle, g, X, 3)).status == Status::SolvedYes);
    }
    SUBCASE("large cliques compress into weighted stand-ins") {
        std::vector<int> X;
        std::vector<Edge> att{{100, 0}, {100, 1}, {101, 50}, {101, 51}, {100, 52}, {101, 2}};
        Graph g = cliques_plus({50, 50}, 2, att, X);
        ClusterConfig cfg;
        cfg.threshold = INT64_MAX;
        KernelResult yes = kernelize_long_cycle_cluster(with_modulator(Problem::LongCycle, g, X, 60), cfg);
        REQUIRE(yes.status == Status::Reduced);
        CHECK(yes.instance.graph.n < g.n);
        CHECK_FALSE(yes.instance.stand_ins.empty());
        CHECK(fpt_long_cycle_cluster(yes.instance));
        KernelResult no = kernelize_long_cycle_cluster(with_modulator(Problem::LongCycle, g, X, 103), cfg);
        if (no.status == Status::Reduced) {
            CHECK_FALSE(fpt_long_cycle_cluster(no.instance));
        } else {
            CHECK(no.status == Status::SolvedNo);
        }
    }
    SUBCASE("answers match the oracle on planted instances") {
        for (std::uint64_t seed = 1; seed <= 80; ++seed) {
            PlantedParams pp;
            pp.problem = seed % 2 ? Problem::LongCycle : Problem::LongPath;
            pp.n = 6 + static_cast<int>(seed % 7);
            pp.ell = static_cast<int>(seed % 3);
            Instance inst = gen_random_planted(PlantedKind::Cluster, pp, seed);
            KernelResult r = kernelize_cluster(inst);
            CHECK(answer_of(r) == decide(inst));
            if (r.status == Status::Reduced) CHECK(kernelize_cluster(r.instance).instance == r.instance);
        }
    }
}

TEST_CASE("threshold") {
    CHECK(cluster_threshold(0) == 1);
    CHECK(cluster_threshold(1) == 1);
    CHECK(cluster_threshold(2) == 1024 * 1024);
    CHECK(cluster_threshold(3) == 205891132094649);
    CHECK(cluster_threshold(4) == INT64_MAX);
    CHECK(cluster_threshold(5) == INT64_MAX);
}

TEST_CASE("hamiltonian kernels") {
    std::vector<int> X;
    Graph g = cliques_plus({3, 3}, 2, {{6, 0}, {6, 3}, {7, 1}, {7, 4}}, X);
    CHECK(answer_of(kernelize_hamiltonian_cluster(with_modulator(Problem::HamiltonianCycle, g, X))) == Answer::Yes);
    Graph lone = cliques_plus({3, 3, 1}, 2, {{7, 0}, {7, 3}, {8, 1}, {8, 4}}, X);
    CHECK(answer_of(kernelize_hamiltonian_cluster(with_modulator(Problem::HamiltonianCycle, lone, X))) == Answer::No);
    CHECK(answer_of(kernelize_hamiltonian_cluster(with_modulator(Problem::HamiltonianPath, path(3), {1}))) ==
          Answer::Yes);
    CHECK(answer_of(kernelize_hamiltonian_cluster(with_modulator(Problem::HamiltonianPath, star(3), {0}))) ==
          Answer::No);
    CHECK_THROWS_AS(kernelize_hamiltonian_cluster(with_modulator(Problem::LongCycle, path(3), {1}, 3)), InputError);
}

TEST_CASE("disjoint kernels") {
    SUBCASE("requests inside one clique are served directly") {
        std::vector<int> X;
        Graph g = cliques_plus({4, 4}, 1, {{8, 0}, {8, 4}}, X);
        Instance inst = with_modulator(Problem::DisjointPaths, g, X, 2);
        inst.pairs = {{1, 2}, {5, 6}};
        CHECK(kernelize_disjoint_cluster(inst).status == Status::SolvedYes);
    }
    SUBCASE("cross-clique requests need modulator vertices") {
        std::vector<int> X;
        Graph g = cliques_plus({2, 2, 2}, 1, {{6, 0}, {6, 2}, {6, 4}}, X);
        Instance inst = with_modulator(Problem::DisjointPaths, g, X, 2);
        inst.pairs = {{0, 2}, {1, 5}};
        CHECK(answer_of(kernelize_disjoint_cluster(inst)) == Answer::No);
    }
    SUBCASE("disjoint triangles") {
        std::vector<int> X;
        Graph g = cliques_plus({3, 3, 2}, 1, {{8, 6}, {8, 7}}, X);
        CHECK(answer_of(kernelize_disjoint_cluster(with_modulator(Problem::DisjointCycles, g, X, 3))) == Answer::Yes);
        CHECK(answer_of(kernelize_disjoint_cluster(with_modulator(Problem::DisjointCycles, g, X, 4))) == Answer::No);
    }
    SUBCASE("answers match the oracle on planted instances") {
        for (std::uint64_t seed = 1; seed <= 80; ++seed) {
            PlantedParams pp;
            pp.problem = seed % 2 ? Problem::DisjointPaths : Problem::DisjointCycles;
            pp.n = 6 + static_cast<int>(seed % 6);
            pp.ell = static_cast<int>(seed % 3);
            Instance inst = gen_random_planted(PlantedKind::Cluster, pp, seed);
            CHECK(answer_of(kernelize_cluster(inst)) == decide(inst));
        }
    }
}
