#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "kernelcut/generators.hpp"
#include "kernelcut/oracles.hpp"
#include "kernelcut/vc.hpp"

using namespace kernelcut;
using namespace testing;

namespace {

Instance with_cover(Problem p, Graph g, std::vector<int> X, std::optional<std::int64_t> k = std::nullopt) {
    Instance inst;
    inst.problem = p;
    inst.graph = std::move(g);
    inst.k = k;
    inst.witness = {WitnessKind::VertexCover, X, static_cast<int>(X.size())};
    return inst;
}

}  // namespace

TEST_CASE("connection graph") {
    SUBCASE("one independent vertex adjacent to both cover vertices") {
        ConnectionGraph cg = build_connection_graph(path(3), {0, 2}, ConnectionMode::Unordered);
        CHECK(cg.h.right == 1);
        CHECK(cg.h.edges.size() == 1);
        CHECK(cg.left_vertices == std::vector<int>{1});
    }
    SUBCASE("C5") {
        ConnectionGraph cg = build_connection_graph(cycle(5), {0, 1, 3}, ConnectionMode::Unordered);
        CHECK(cg.h.right == 3);
        CHECK(cg.left_vertices == std::vector<int>{2, 4});
        std::set<std::pair<int, Edge>> got;
        for (auto [l, r] : cg.h.edges) got.insert({cg.left_vertices[l], cg.pair_index[r]});
        CHECK(got == std::set<std::pair<int, Edge>>{{2, {1, 3}}, {4, {0, 3}}});
    }
    SUBCASE("a single cover vertex has no pairs") {
        CHECK(build_connection_graph(star(4), {0}, ConnectionMode::Unordered).h.right == 0);
    }
    SUBCASE("right side sizes per mode") {
        Graph g = complete(5);
        CHECK(build_connection_graph(g, {0, 1, 2, 3}, ConnectionMode::Unordered).h.right == 6);
        CHECK(build_connection_graph(g, {0, 1, 2, 3}, ConnectionMode::Duplicated).h.right == 12);
        Graph d = make_graph(3, {{0, 1}, {1, 2}}, true);
        ConnectionGraph o = build_connection_graph(d, {0, 2}, ConnectionMode::Ordered);
        CHECK(o.h.right == 2);
        REQUIRE(o.h.edges.size() == 1);
        CHECK(o.pair_index[o.h.edges[0].second] == Edge{0, 2});
    }
    SUBCASE("a non-cover is rejected") {
        CHECK_THROWS_AS(build_connection_graph(cycle(5), {0, 2}, ConnectionMode::Unordered), InputError);
    }
}

TEST_CASE("long-cycle kernel examples") {
    SUBCASE("C5 keeps both independent vertices") {
        KernelResult r = kernelize_vc(with_cover(Problem::LongCycle, cycle(5), {0, 1, 3}, 5));
        CHECK(r.status == Status::Reduced);
        CHECK(r.instance.graph.n == 5);
        CHECK(r.instance.graph.n <= 3 + 3);
    }
    SUBCASE("a star collapses to its centre") {
        KernelResult r = kernelize_vc(with_cover(Problem::LongCycle, star(5), {0}, 5));
        CHECK(r.status == Status::Reduced);
        CHECK(r.instance.graph.n == 1);
        CHECK(decide(r.instance) == Answer::No);
    }
    SUBCASE("small k is solved outright") {
        KernelResult yes = kernelize_vc(with_cover(Problem::LongCycle, cycle(5), {0, 1, 3}, 3));
        CHECK(yes.status == Status::SolvedYes);
        KernelResult no = kernelize_vc(with_cover(Problem::LongCycle, star(5), {0}, 3));
        CHECK(no.status == Status::SolvedNo);
        CHECK(kernelize_vc(with_cover(Problem::LongCycle, complete(5), {0, 1, 2, 3}, 4)).status == Status::SolvedYes);
    }
    SUBCASE("hamiltonian problems are routed elsewhere") {
        CHECK_THROWS_AS(kernelize_vc(with_cover(Problem::HamiltonianCycle, cycle(4), {0, 2})), InputError);
    }
    SUBCASE("wrong witness kind") {
        Instance inst = with_cover(Problem::LongCycle, cycle(5), {0, 1, 3}, 5);
        inst.witness.kind = WitnessKind::ClusterModulator;
        CHECK_THROWS_AS(kernelize_vc(inst), InputError);
    }
}

TEST_CASE("kernel sizes and answers on planted instances") {
    const Problem problems[] = {Problem::LongCycle, Problem::LongPath, Problem::DisjointCycles, Problem::DisjointPaths};
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        for (Problem p : problems) {
            PlantedParams pp;
            pp.problem = p;
            pp.n = 5 + static_cast<int>(seed % 9);
            pp.ell = 1 + static_cast<int>(seed % 4);
            pp.p = 0.6;
            pp.directed = (p == Problem::LongCycle || p == Problem::LongPath) && seed % 2;
            Instance inst = gen_random_planted(PlantedKind::VertexCover, pp, seed);
            KernelResult r = kernelize_vc(inst);
            REQUIRE(r.status != Status::PromiseViolated);
            Answer want = decide(inst);
            Answer got = r.status == Status::Reduced ? decide(r.instance)
                                                      : (r.status == Status::SolvedYes ? Answer::Yes : Answer::No);
            CHECK(want == got);
            if (r.status == Status::Reduced) {
                const std::int64_t ell = p == Problem::DisjointPaths ? r.instance.witness.ell : inst.witness.ell;
                CHECK(r.instance.graph.n <= vc_kernel_bound(p, inst.graph.directed, ell));
                KernelResult again = kernelize_vc(r.instance);
                CHECK(again.instance == r.instance);
            }
        }
    }
}

TEST_CASE("disjoint paths with more requests than cover vertices") {
    Instance inst = with_cover(Problem::DisjointPaths, path(6), {1, 3});
    inst.graph = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    inst.witness = {WitnessKind::VertexCover, {1, 3}, 2};
    inst.pairs = {{0, 2}, {4, 5}, {1, 3}};
    inst.k = 3;
    CHECK(kernelize_vc(inst).status == Status::SolvedNo);
}

TEST_CASE("cycle-length test for small k") {
    CHECK(has_cycle_at_least(cycle(4), 4));
    CHECK_FALSE(has_cycle_at_least(cycle(3), 4));
    CHECK(has_cycle_at_least(complete(4), 3));
    CHECK_FALSE(has_cycle_at_least(path(5), 3));
    std::mt19937_64 rng(13);
    for (int it = 0; it < 150; ++it) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 7), 0.35);
        for (int k = 3; k <= 4; ++k) {
            LengthResult lc = longest_cycle(g);
            CHECK(has_cycle_at_least(g, k) == (lc.value >= k));
        }
    }
}

TEST_CASE("hamiltonian vertex-cover bound") {
    Instance s = with_cover(Problem::HamiltonianPath, star(3), {0});
    CHECK(hamiltonian_vc_bound(s).status == Status::SolvedNo);
    CHECK(decide(s) == Answer::No);
    Instance c = with_cover(Problem::HamiltonianCycle, cycle(4), {0, 2});
    KernelResult r = hamiltonian_vc_bound(c);
    CHECK(r.status == Status::Reduced);
    CHECK(r.instance == c);
    Instance p = with_cover(Problem::HamiltonianPath, path(3), {1});
    CHECK(hamiltonian_vc_bound(p).status == Status::Reduced);
    CHECK(decide(p) == Answer::Yes);
}
