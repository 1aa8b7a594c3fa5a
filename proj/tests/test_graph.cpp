#include "doctest.h"
#include "helpers.hpp"
#include "kernelcut/generators.hpp"
#include "kernelcut/graph.hpp"
#include "kernelcut/io.hpp"

using namespace kernelcut;
using namespace testing;

TEST_CASE("minimal long-cycle instance parses with its cover size") {
    Instance inst = parse_instance(
        R"({"problem":"long-cycle","n":3,"edges":[[0,1],[1,2],[2,0]],"k":3,)"
        R"("witness":{"kind":"vertex-cover","vertices":[0,1]}})");
    CHECK(inst.problem == Problem::LongCycle);
    CHECK(inst.graph.n == 3);
    CHECK(inst.graph.edges.size() == 3);
    CHECK(*inst.k == 3);
    CHECK(inst.witness.kind == WitnessKind::VertexCover);
    CHECK(inst.witness.ell == 2);
}

TEST_CASE("out-of-range vertex is rejected") {
    const std::string text =
        R"({"problem":"long-cycle","n":3,"edges":[[0,5]],"k":3,"witness":{"kind":"vertex-cover","vertices":[0]}})";
    CHECK_THROWS_AS(parse_instance(text), InputError);
    try {
        parse_instance(text);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
}

TEST_CASE("malformed input is an input error") {
    CHECK_THROWS_AS(parse_instance("{\"problem\": "), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"problem":"long-cycle","n":2,"edges":[[0,1],[1,0]],"k":2})"), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"problem":"long-cycle","n":2,"edges":[[0,1]]})"), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"problem":"no-such-problem","n":1,"edges":[]})"), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"problem":"long-cycle","n":2,"edges":[[1,1]],"k":2})"), InputError);
}

TEST_CASE("duplicate edges are allowed only on multigraphs") {
    Instance inst = parse_instance(R"({"problem":"long-cycle","n":2,"multigraph":true,"edges":[[0,1],[0,1]],)"
                                   R"("labels":[1,2],"k":2,"witness":{"kind":"max-leaf-bound","ell":2}})");
    CHECK(inst.graph.edges.size() == 2);
    CHECK(inst.labels == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("serialization round-trips planted instances") {
    const PlantedKind kinds[] = {PlantedKind::VertexCover, PlantedKind::Cluster, PlantedKind::MaxLeaf,
                                 PlantedKind::ForbiddenPairs};
    const Problem problems[] = {Problem::LongCycle, Problem::LongPath, Problem::DisjointPaths, Problem::DisjointCycles};
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        PlantedKind kind = kinds[seed % 4];
        PlantedParams pp;
        pp.problem = kind == PlantedKind::ForbiddenPairs ? Problem::FpStPath : problems[(seed / 4) % 4];
        pp.directed = kind == PlantedKind::VertexCover && pp.problem == Problem::LongCycle && seed % 3 == 0;
        Instance inst = gen_random_planted(kind, pp, seed);
        const std::string text = serialize_instance(inst);
        Instance back = parse_instance(text);
        REQUIRE(back == inst);
        REQUIRE(serialize_instance(back) == text);
    }
}

TEST_CASE("compressed instances keep their stand-ins") {
    Instance inst;
    inst.problem = Problem::LongCycle;
    inst.graph = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    inst.k = 5;
    inst.witness = {WitnessKind::ClusterModulator, {0}, 1};
    inst.stand_ins = {{0, 2, 4}};
    CHECK(parse_instance(serialize_instance(inst)) == inst);
}

TEST_CASE("structure checks") {
    SUBCASE("C5 with a vertex cover") {
        CHECK(check_structure(cycle(5), {WitnessKind::VertexCover, {0, 1, 3}, 3}).status ==
              WitnessReport::Status::Holds);
        CHECK(check_structure(cycle(5), {WitnessKind::VertexCover, {0, 2}, 2}).status ==
              WitnessReport::Status::Violated);
    }
    SUBCASE("two triangles form a cluster graph") {
        Graph g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        CHECK(check_structure(g, {WitnessKind::ClusterModulator, {}, 0}).status == WitnessReport::Status::Holds);
        CHECK(check_structure(path(3), {WitnessKind::ClusterModulator, {}, 0}).status ==
              WitnessReport::Status::Violated);
    }
    SUBCASE("a max-leaf promise is only checked conditionally") {
        CHECK(check_structure(star(9), {WitnessKind::MaxLeafBound, {}, 1}).status ==
              WitnessReport::Status::HoldsConditionally);
        // five branch vertices exceed 4*1-2
        Graph g = subdivide(complete(5), 0);
        CHECK(check_structure(g, {WitnessKind::MaxLeafBound, {}, 1}).status == WitnessReport::Status::Violated);
    }
    SUBCASE("bi-paths modulator") {
        Graph d = make_graph(4, {{0, 1}, {2, 1}, {2, 3}}, true);
        CHECK(check_structure(d, {WitnessKind::BipathsModulator, {}, 0}).status == WitnessReport::Status::Holds);
        Graph c = make_graph(3, {{0, 1}, {1, 2}, {2, 0}}, true);
        CHECK(check_structure(c, {WitnessKind::BipathsModulator, {}, 0}).status == WitnessReport::Status::Violated);
        CHECK(check_structure(c, {WitnessKind::BipathsModulator, {0}, 1}).status == WitnessReport::Status::Holds);
    }
    SUBCASE("vertex cover of the forbidden pairs") {
        CHECK(check_structure(path(4), {WitnessKind::VcOfH, {1}, 1}, {{0, 1}, {1, 3}}).ok());
        CHECK_FALSE(check_structure(path(4), {WitnessKind::VcOfH, {1}, 1}, {{0, 2}}).ok());
    }
}

TEST_CASE("vertex-cover check agrees with an explicit edge scan") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.4);
        std::vector<int> X;
        std::vector<char> in(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            if (rng() % 2) {
                X.push_back(v);
                in[v] = 1;
            }
        bool scan = true;
        for (auto [u, v] : g.edges) scan = scan && (in[u] || in[v]);
        CHECK(check_structure(g, {WitnessKind::VertexCover, X, static_cast<int>(X.size())}).ok() == scan);
    }
}

TEST_CASE("degree-two decomposition") {
    SUBCASE("a cycle has no branch vertices") {
        auto d = degree2_path_decomposition(cycle(6));
        CHECK(d.branch.empty());
        REQUIRE(d.cycles.size() == 1);
        CHECK(d.cycles[0].size() == 6);
    }
    SUBCASE("K4 with one edge subdivided three times") {
        Graph g = complete(4);
        g.edges.erase(g.edges.begin());  // drop {0,1}
        g.edges.push_back({0, 4});
        g.edges.push_back({4, 5});
        g.edges.push_back({5, 6});
        g.edges.push_back({6, 1});
        g.n = 7;
        auto d = degree2_path_decomposition(g);
        CHECK(d.branch == std::vector<int>{0, 1, 2, 3});
        int long_paths = 0, plain = 0;
        for (auto& p : d.paths) {
            if (p.internal.size() == 3) ++long_paths;
            if (p.internal.empty()) ++plain;
        }
        CHECK(long_paths == 1);
        CHECK(plain == 5);
    }
    SUBCASE("star") {
        auto d = degree2_path_decomposition(star(4));
        CHECK(d.branch == std::vector<int>{0});
        REQUIRE(d.pendants.size() == 4);
        for (auto& p : d.pendants) CHECK(p.internal.empty());
    }
    SUBCASE("every vertex is accounted for exactly once") {
        std::mt19937_64 rng(11);
        for (int it = 0; it < 200; ++it) {
            Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.35);
            if (it % 2) g = subdivide(g, 1 + static_cast<int>(rng() % 2));
            auto d = degree2_path_decomposition(g);
            std::size_t total = d.branch.size() + d.isolated.size();
            for (auto& p : d.paths) total += p.internal.size();
            for (auto& p : d.pendants) total += p.internal.size() + 1;
            for (auto& c : d.cycles) total += c.size();
            for (auto& p : d.free_paths) total += p.size();
            CHECK(total == static_cast<std::size_t>(g.n));
        }
    }
}

TEST_CASE("solved results carry the dummy instance") {
    Instance inst;
    inst.problem = Problem::LongCycle;
    inst.graph = cycle(5);
    inst.k = 5;
    inst.witness = {WitnessKind::VertexCover, {0, 1, 3}, 3};
    KernelResult yes = solved(inst, true), no = solved(inst, false);
    CHECK(yes.status == Status::SolvedYes);
    CHECK(no.status == Status::SolvedNo);
    CHECK(yes.instance == dummy_instance(Problem::LongCycle, true, inst.witness));
    CHECK(no.instance == dummy_instance(Problem::LongCycle, false, inst.witness));
    CHECK(yes.instance.graph.n == 3);
    CHECK(*yes.instance.k == 3);
    CHECK(no.instance.graph.n == 1);
}

TEST_CASE("plain edge lists are accepted for bare graphs") {
    Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g.n == 4);
    CHECK(g.edges.size() == 3);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 7\n"), InputError);
}
