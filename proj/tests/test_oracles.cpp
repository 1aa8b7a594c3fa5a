#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "kernelcut/oracles.hpp"

using namespace kernelcut;
using namespace testing;

namespace {

// Naive reference: try every ordered vertex sequence.
struct Naive {
    const Graph& g;
    std::set<Edge> adj;
    explicit Naive(const Graph& graph) : g(graph) {
        for (auto [u, v] : g.edges) {
            adj.insert({u, v});
            if (!g.directed) adj.insert({v, u});
        }
    }
    bool arc(int u, int v) const { return adj.count({u, v}) > 0; }

    int longest(bool cycle) const {
        int best = cycle ? 0 : std::min(g.n, 1);
        std::vector<int> idx(g.n);
        for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
            std::vector<int> vs;
            for (int v = 0; v < g.n; ++v)
                if (mask >> v & 1) vs.push_back(v);
            const int m = static_cast<int>(vs.size());
            if (m <= best || (cycle && m < (g.directed ? 2 : 3))) continue;
            do {
                bool ok = true;
                for (int i = 0; i + 1 < m && ok; ++i) ok = arc(vs[i], vs[i + 1]);
                if (ok && cycle) ok = arc(vs[m - 1], vs[0]);
                if (ok) {
                    best = m;
                    break;
                }
            } while (std::next_permutation(vs.begin(), vs.end()));
        }
        return best;
    }
};

}  // namespace

TEST_CASE("textbook graphs") {
    CHECK(longest_cycle(petersen()).value == 9);
    CHECK(hamiltonian_cycle(petersen()).answer == Answer::No);
    CHECK(hamiltonian_path(petersen()).answer == Answer::Yes);
    CHECK(max_leaf_number(petersen()) == 6);
    HamResult c4 = hamiltonian_cycle(cycle(4));
    REQUIRE(c4.answer == Answer::Yes);
    CHECK(validate_cycle(cycle(4), c4.order, true));
    CHECK(hamiltonian_path(star(3)).answer == Answer::No);
    CHECK(longest_cycle(path(6)).value == 0);
    CHECK(longest_path(path(6)).value == 6);
    CHECK(longest_path(star(4), {}, Edge{1, 2}).value == 3);
}

TEST_CASE("max leaf number") {
    for (int n = 3; n <= 12; ++n) CHECK(max_leaf_number(cycle(n)) == 2);
    for (int n = 2; n <= 12; ++n) CHECK(max_leaf_number(star(n)) == n);
    CHECK(max_leaf_number(complete(5)) == 4);
    CHECK(max_leaf_number(path(2)) == 2);
    CHECK_THROWS_AS(max_leaf_number(cycle(21)), InputError);
}

TEST_CASE("longest cycle and path agree with the naive search") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 250; ++it) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n, 0.45);
        if (it % 3 == 0) {
            g.directed = true;
            for (auto& e : g.edges)
                if (rng() % 2) std::swap(e.first, e.second);
        }
        Naive ref(g);
        CHECK(longest_cycle(g).value == ref.longest(true));
        CHECK(longest_path(g).value == ref.longest(false));
        CHECK((hamiltonian_cycle(g).answer == Answer::Yes) == (ref.longest(true) == n));
        CHECK((hamiltonian_path(g).answer == Answer::Yes) == (ref.longest(false) == n));
    }
}

TEST_CASE("backtracking and dynamic programming agree") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 150; ++it) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 7), 0.5);
        HamResult a = hamiltonian_cycle(g), b = hamiltonian_cycle_backtrack(g);
        CHECK(a.answer == b.answer);
        if (b.answer == Answer::Yes) CHECK(validate_cycle(g, b.order, true));
        CHECK(all_hamiltonian_cycles(g).empty() == (a.answer == Answer::No));
    }
    CHECK(all_hamiltonian_cycles(complete(4)).size() == 3);
    CHECK(all_hamiltonian_cycles(cycle(7)).size() == 1);
}

TEST_CASE("weighted and labeled cycles") {
    CHECK(longest_cycle(complete(3), {5, 1, 1}).value == 7);
    CHECK(longest_cycle(cycle(5), {}, std::int64_t{3}).value >= 3);
    Graph two{2, false, true, {{0, 1}, {0, 1}}};
    CHECK(longest_cycle_labeled(two, {4, 1}).value == 7);
    CHECK(longest_cycle_labeled(complete(3), {0, 2, 0}).value == 5);
}

TEST_CASE("disjoint paths and cycles") {
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}});
    DisjointResult ok = disjoint_paths(g, {{0, 2}, {3, 5}});
    REQUIRE(ok.answer == Answer::Yes);
    CHECK(validate_disjoint_paths(g, {{0, 2}, {3, 5}}, ok.parts));
    CHECK(disjoint_paths(g, {{0, 5}, {2, 3}}).answer == Answer::No);
    CHECK(disjoint_paths(cycle(6), {{0, 2}, {3, 5}}).answer == Answer::Yes);
    CHECK(disjoint_paths(cycle(6), {{0, 3}, {1, 4}}).answer == Answer::No);

    Graph tri2 = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    DisjointResult two = disjoint_cycles(tri2, 2);
    REQUIRE(two.answer == Answer::Yes);
    CHECK(validate_disjoint_cycles(tri2, 2, two.parts));
    CHECK(disjoint_cycles(tri2, 3).answer == Answer::No);
    CHECK(disjoint_cycles(complete(5), 2).answer == Answer::No);
    CHECK(disjoint_cycles(complete(6), 2).answer == Answer::Yes);
    CHECK_FALSE(validate_disjoint_cycles(tri2, 2, {{0, 1, 2}, {2, 3, 4}}));
}

TEST_CASE("forbidden pairs") {
    // two routes from 0 to 3: through 1 or through 2; 0 and 1 cannot meet
    Graph g = make_graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    FpResult r = forbidden_pairs_path(g, 0, 3, {{0, 1}}, FpObjective::Exists);
    REQUIRE(r.answer == Answer::Yes);
    CHECK(r.path == std::vector<int>{0, 2, 3});
    CHECK(validate_fp_path(g, {{0, 1}}, r.path, 0, 3));
    CHECK_FALSE(validate_fp_path(g, {{0, 1}}, {0, 1, 3}, 0, 3));
    CHECK(forbidden_pairs_path(g, 0, 3, {{0, 1}, {2, 3}}, FpObjective::Exists).answer == Answer::No);
    CHECK(forbidden_pairs_path(g, 0, 3, {}, FpObjective::Shortest).length == 3);
    CHECK(forbidden_pairs_path(cycle(6), 0, 1, {}, FpObjective::Longest).length == 6);
    CHECK(forbidden_pairs_path(cycle(6), 0, 1, {{2, 5}}, FpObjective::Longest).length == 2);
}

TEST_CASE("enumeration over the forbidden-pair cover matches the oracle") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 200; ++it) {
        const int n = 4 + static_cast<int>(rng() % 7);
        Graph g = random_graph(rng, n, 0.4);
        std::vector<int> X;
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0) X.push_back(v);
        std::vector<Edge> H;
        for (int x : X)
            for (int v = 0; v < n; ++v)
                if (v != x && rng() % 4 == 0) H.push_back({std::min(x, v), std::max(x, v)});
        std::sort(H.begin(), H.end());
        H.erase(std::unique(H.begin(), H.end()), H.end());
        const int s = 0, t = n - 1;
        FpResult want = forbidden_pairs_path(g, s, t, H, FpObjective::Shortest);
        FptFpResult got = fpt_shortest_fp_path(g, s, t, H, X);
        CHECK(got.found == (want.answer == Answer::Yes));
        if (got.found) CHECK(got.length == want.length);
        CHECK(got.subsets_enumerated <= (std::uint64_t{1} << X.size()));
    }
}

TEST_CASE("arc-set conditions for bipartite Hamiltonian paths") {
    // b0 -> a0 -> b1 -> a1 -> b2
    Graph d = make_graph(5, {{2, 0}, {0, 3}, {3, 1}, {1, 4}}, true);
    std::vector<int> A{0, 1}, B{2, 3, 4};
    std::vector<Edge> C{{2, 0}, {0, 3}, {3, 1}, {1, 4}};
    ArcsetCheck ok = check_bipartite_hampath_arcset(d, A, B, C);
    CHECK(ok.conditions);
    CHECK(ok.walk);
    CHECK(validate_bipartite_hampath_arcset(d, A, B, C));
    std::vector<Edge> short_c{{2, 0}, {0, 3}};
    CHECK_FALSE(validate_bipartite_hampath_arcset(d, A, B, short_c));
}

TEST_CASE("decide dispatches on the problem") {
    Instance inst;
    inst.problem = Problem::LongCycle;
    inst.graph = petersen();
    inst.k = 9;
    inst.witness = {WitnessKind::MaxLeafBound, {}, 3};
    CHECK(decide(inst) == Answer::Yes);
    inst.k = 10;
    CHECK(decide(inst) == Answer::No);
    inst.problem = Problem::HamiltonianPath;
    inst.k.reset();
    CHECK(decide(inst) == Answer::Yes);
    inst.problem = Problem::LongCycle;
    inst.graph = make_graph(2, {{0, 1}});
    inst.graph.multigraph = true;
    inst.graph.edges.push_back({0, 1});
    inst.labels = {3, 0};
    inst.k = 5;
    CHECK(decide(inst) == Answer::Yes);
    inst.k = 6;
    CHECK(decide(inst) == Answer::No);
}
