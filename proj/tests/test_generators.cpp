#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "kernelcut/generators.hpp"
#include "kernelcut/io.hpp"
#include "kernelcut/oracles.hpp"

using namespace kernelcut;
using namespace testing;

namespace {

bool certificate_holds(const Composition& c) {
    const Instance& inst = c.instance;
    switch (inst.problem) {
        case Problem::HamiltonianCycle: return validate_cycle(inst.graph, c.certificate, true);
        case Problem::FpStPath:
            return validate_fp_path(inst.graph, inst.pairs, c.certificate, inst.s, inst.t) &&
                   static_cast<std::int64_t>(c.certificate.size()) >= inst.k.value_or(0);
        case Problem::FpLongestPath:
            return validate_fp_path(inst.graph, inst.pairs, c.certificate) &&
                   static_cast<std::int64_t>(c.certificate.size()) >= *inst.k;
        default: return false;
    }
}

std::vector<BipartiteHamInstance> random_inputs(int r, int nA, bool directed, std::uint64_t seed, int yes_at) {
    std::vector<BipartiteHamInstance> in;
    for (int i = 0; i < r; ++i) in.push_back(random_bipartite_hampath(nA, 0.3, directed, i == yes_at, seed * 31 + i));
    return in;
}

}  // namespace

TEST_CASE("splitting a Hamiltonian path instance") {
    for (bool directed : {false, true}) {
        BipartiteHamInstance b = gen_bipartite_hampath(path(4), 0, 3, directed);
        CHECK(b.graph.directed == directed);
        CHECK(bipartite_ham_violation(b).empty());
        CHECK(b.graph.n == 4 * 4 + 3);
        CHECK(b.B.size() == b.A.size() + 1);
        std::vector<int> order;
        CHECK(bipartite_ham_answer(b, &order));
        CHECK(validate_path(b.graph, order, true, b.B.front(), b.B.back()));
    }
    // a star has no Hamiltonian path between two leaves
    BipartiteHamInstance s = gen_bipartite_hampath(star(3), 1, 2, false);
    CHECK_FALSE(bipartite_ham_answer(s));
    std::mt19937_64 rng(41);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 3), 0.6);
        BipartiteHamInstance b = gen_bipartite_hampath(g, 0, 1, false);
        CHECK(bipartite_ham_answer(b) == (hamiltonian_st_path(g, 0, 1).answer == Answer::Yes));
    }
}

TEST_CASE("random bipartite inputs keep their shape") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        BipartiteHamInstance b = random_bipartite_hampath(2 + static_cast<int>(seed % 4), 0.4, seed % 2, seed % 3 == 0, seed);
        CHECK(bipartite_ham_violation(b).empty());
        if (seed % 3 == 0) CHECK(bipartite_ham_answer(b));
    }
    BipartiteHamInstance bad = random_bipartite_hampath(2, 0.5, true, true, 3);
    bad.graph.edges.push_back({bad.A[0], bad.A[1]});
    CHECK_FALSE(bipartite_ham_violation(bad).empty());
}

TEST_CASE("bi-paths composition") {
    SUBCASE("two inputs with two A-vertices each") {
        auto in = random_inputs(2, 2, true, 5, 1);
        std::vector<int> path;
        REQUIRE(bipartite_ham_answer(in[1], &path));
        Composition c = compose_bipaths(in, std::make_pair(1, path));
        CHECK(c.instance.problem == Problem::HamiltonianCycle);
        CHECK(c.instance.graph.directed);
        CHECK(c.expected_modulator == 4);
        CHECK(c.instance.witness.vertices.size() == 4);
        CHECK(check_structure(c.instance.graph, c.instance.witness).ok());
        CHECK(certificate_holds(c));
        CHECK(decide(c.instance) == Answer::Yes);
    }
    SUBCASE("all inputs NO gives NO") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto in = random_inputs(2, 2, true, seed, -1);
            bool any = false;
            for (auto& b : in) any = any || bipartite_ham_answer(b);
            Composition c = compose_bipaths(in);
            CHECK((decide(c.instance) == Answer::Yes) == any);
        }
    }
}

TEST_CASE("outerplanar composition") {
    auto in = random_inputs(2, 2, false, 7, 0);
    std::vector<int> path;
    REQUIRE(bipartite_ham_answer(in[0], &path));
    Composition c = compose_outerplanar(in, std::make_pair(0, path));
    CHECK_FALSE(c.instance.graph.directed);
    CHECK(c.expected_modulator == 6);
    CHECK(c.instance.witness.vertices.size() == 6);
    CHECK(c.instance.graph.n == 2 * (8 * 2 + 3) + 3 + (2 + 1));
    CHECK(check_structure(c.instance.graph, c.instance.witness).ok());
    CHECK(matches_domino_template(c.instance, 2, 2));
    CHECK(certificate_holds(c));
}

TEST_CASE("domino") {
    const Domino& d = domino();
    CHECK(d.graph.n == 8);
    CHECK(d.graph.edges.size() == 9);
    CHECK(validate_path(d.graph, d.a_traversal, true, d.a_minus, d.a_plus));
    CHECK(validate_path(d.graph, d.hat_traversal, true, d.hat_minus, d.hat_plus));
    CHECK(domino_two_traversal_property());
    CHECK_FALSE(domino_boundary_covers().empty());
}

TEST_CASE("multicoloured clique to forbidden pairs") {
    ColoredGraph tri{complete(3), 3, {1, 2, 3}};
    CHECK(has_multicolored_clique(tri));
    Instance yes = gen_multicolored_clique_fp(tri);
    CHECK(yes.problem == Problem::FpStPath);
    CHECK(yes.witness.ell == 4);
    CHECK(check_structure(yes.graph, yes.witness, yes.pairs).ok());
    CHECK(decide(yes) == Answer::Yes);
    ColoredGraph p3{path(3), 3, {1, 2, 3}};
    CHECK_FALSE(has_multicolored_clique(p3));
    CHECK(decide(gen_multicolored_clique_fp(p3)) == Answer::No);
    std::mt19937_64 rng(43);
    for (int it = 0; it < 30; ++it) {
        ColoredGraph cg{random_graph(rng, 6, 0.55), 3, {}};
        for (int v = 0; v < 6; ++v) cg.color.push_back(1 + v % 3);
        CHECK(has_multicolored_clique(cg) == (decide(gen_multicolored_clique_fp(cg)) == Answer::Yes));
    }
}

TEST_CASE("ladder composition") {
    std::vector<FpInput> in;
    in.push_back({path(4), {{0, 2}}});
    in.push_back({path(4), {}});
    Composition c = compose_fp_ladders(in, std::make_pair(1, std::vector<int>{0, 1, 2, 3}));
    CHECK(certificate_holds(c));
    CHECK(decide(c.instance) == Answer::Yes);
    CHECK(static_cast<int>(c.instance.witness.vertices.size()) == c.expected_modulator);
    Composition tails = compose_fp_ladders(in, std::make_pair(1, std::vector<int>{0, 1, 2, 3}), true);
    CHECK(tails.instance.problem == Problem::FpLongestPath);
    CHECK(certificate_holds(tails));
    std::vector<FpInput> no{{path(3), {{0, 1}}}, {path(3), {{1, 2}}}};
    CHECK(decide(compose_fp_ladders(no).instance) == Answer::No);
}

TEST_CASE("generators are deterministic in the seed") {
    for (PlantedKind kind : {PlantedKind::VertexCover, PlantedKind::Cluster, PlantedKind::MaxLeaf,
                             PlantedKind::ForbiddenPairs}) {
        PlantedParams pp;
        if (kind == PlantedKind::ForbiddenPairs) pp.problem = Problem::FpStPath;
        CHECK(serialize_instance(gen_random_planted(kind, pp, 99)) ==
              serialize_instance(gen_random_planted(kind, pp, 99)));
        Instance inst = gen_random_planted(kind, pp, 7);
        CHECK(check_structure(inst.graph, inst.witness, inst.pairs).status != WitnessReport::Status::Violated);
    }
    auto a = compose_bipaths(random_inputs(3, 3, true, 11, 2));
    auto b = compose_bipaths(random_inputs(3, 3, true, 11, 2));
    CHECK(a.instance == b.instance);
}
