#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kernelcut/graph.hpp"

namespace kernelcut {

// Hamiltonian path from B.front() to B.back() in a bipartite (di)graph with
// |B| = |A| + 1. Directed: B.front() has no in-arcs, B.back() no out-arcs.
// Undirected: both have exactly one neighbour.
struct BipartiteHamInstance {
    Graph graph;
    std::vector<int> A, B;
};

// Empty string when the shape conditions hold, else the first violation.
std::string bipartite_ham_violation(const BipartiteHamInstance& in);
bool bipartite_ham_answer(const BipartiteHamInstance& in, std::vector<int>* path = nullptr);

// Vertex-splitting reduction from Hamiltonian s-t path: G' on V x {1,2,3,4}
// plus three boundary vertices.
BipartiteHamInstance gen_bipartite_hampath(const Graph& g, int s, int t, bool directed);

// Random arcs between A and B respecting the shape; optionally plants a path.
BipartiteHamInstance random_bipartite_hampath(int nA, double density, bool directed, bool plant,
                                              std::uint64_t seed);

struct Composition {
    Instance instance;
    std::vector<int> certificate;  // cycle or path order; empty if no YES witness was supplied
    int expected_modulator = 0;
};

// i* and a Hamiltonian path of input i* (vertex order, B.front() first).
using YesWitness = std::optional<std::pair<int, std::vector<int>>>;

// Directed Hamiltonian cycle with a bi-paths modulator {z} u B*.
Composition compose_bipaths(const std::vector<BipartiteHamInstance>& inputs, const YesWitness& yes = std::nullopt);

// Undirected Hamiltonian cycle with an outerplanar modulator {z-, z, z+} u B*.
Composition compose_outerplanar(const std::vector<BipartiteHamInstance>& inputs,
                                const YesWitness& yes = std::nullopt);

// The 8-vertex domino and its terminals.
struct Domino {
    Graph graph;
    int a_minus = 0, a_plus = 4, hat_minus = 2, hat_plus = 6;
    std::vector<int> a_traversal, hat_traversal;
};
const Domino& domino();

// Every way a Hamiltonian cycle of a host graph can meet the domino, when only
// terminals have outside neighbours: domino edge subsets forming vertex-disjoint
// paths that cover all eight vertices and end in terminals.
std::vector<std::vector<Edge>> domino_boundary_covers();
bool domino_two_traversal_property();

// G* - X* must be r chains of n_A dominos threaded by the w/x/y rails.
bool matches_domino_template(const Instance& composed, int r, int nA);

// Multicoloured clique to s-t path with forbidden pairs; vertex-cover witness on the rail.
struct ColoredGraph {
    Graph graph;
    int k = 0;
    std::vector<int> color;  // 1..k
};
Instance gen_multicolored_clique_fp(const ColoredGraph& cg);
bool has_multicolored_clique(const ColoredGraph& cg);

// s-t path with forbidden pairs on vertices 0..n-1 with s = 0 and t = n-1.
struct FpInput {
    Graph graph;
    std::vector<Edge> H;
};

// Ladder composition; X* = everything but the selector vertices.
// With pendant_tails the output asks for a long path anywhere instead.
Composition compose_fp_ladders(const std::vector<FpInput>& inputs, const YesWitness& yes = std::nullopt,
                               bool pendant_tails = false);

enum class PlantedKind { VertexCover, Cluster, MaxLeaf, ForbiddenPairs };

struct PlantedParams {
    Problem problem = Problem::LongCycle;
    int n = 12;             // vc, fp: vertex count
    int ell = 3;            // vc, cluster, fp: modulator / cover size
    double p = 0.5;         // edge probability
    int cliques = 3;        // cluster
    int max_clique = 4;     // cluster
    int core = 4;           // maxleaf: core vertices
    int subdivide = 2;      // maxleaf: max subdivisions per core edge
    int pairs = 2;          // disjoint-paths requests, fp forbidden pairs
    bool directed = false;
    std::optional<std::int64_t> k;
};

Instance gen_random_planted(PlantedKind kind, const PlantedParams& params, std::uint64_t seed);

}  // namespace kernelcut
