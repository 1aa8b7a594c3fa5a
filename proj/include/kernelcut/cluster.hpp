#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kernelcut/graph.hpp"

namespace kernelcut {

struct ClusterDecomposition {
    std::vector<int> X;                       // ascending
    std::vector<std::vector<int>> cliques;    // components of G - X, ordered by smallest vertex
    std::vector<std::vector<int>> marked;     // per clique, filled by mark_clique_vertices
    std::vector<int> clique_of;               // vertex -> clique index, -1 for X
};

// Throws InputError unless G is undirected and every component of G - X is a clique.
ClusterDecomposition decompose_cluster(const Graph& g, const std::vector<int>& X);

struct CliqueMarking {
    bool trivially_yes = false;
    std::string reason;
    std::vector<char> keep;   // per clique
};

// Clique marking with the large-clique shortcut. `weights` are vertex weights (stand-ins carry their label); empty means all ones.
CliqueMarking mark_cliques(const Graph& g, const ClusterDecomposition& d, std::int64_t k,
                           const std::vector<std::int64_t>& weights = {});

// Marking step alone, with `quota` cliques per pair and connection type.
std::vector<char> mark_cliques_per_pair(const Graph& g, const ClusterDecomposition& d, int quota,
                                        const std::vector<std::int64_t>& weights = {});

// Marks up to 2|X|+1 shared neighbours per pair and 2|X|+1 neighbours per modulator vertex
// in every clique; ascending ids.
void mark_clique_vertices(const Graph& g, ClusterDecomposition& d);

// Drops every edge between X and an unmarked clique vertex.
Graph restrict_entries(const Graph& g, const ClusterDecomposition& d);

struct ClusterConfig {
    int ell_cap = 4;
    std::optional<std::int64_t> threshold;  // overrides S(ell)
};

// S(ell) = ell^(10 ell), saturating; S(0) = 1.
std::int64_t cluster_threshold(int ell);

// Exhaustive search over modulator orders, connectors and entry vertices.
// Accepts compressed instances (stand-in weights). Throws InputError above the ell cap.
bool fpt_long_cycle_cluster(const Instance& inst, int ell_cap = 4);

KernelResult kernelize_long_cycle_cluster(const Instance& inst, const ClusterConfig& cfg = {});
KernelResult kernelize_long_path_cluster(const Instance& inst, const ClusterConfig& cfg = {});
KernelResult kernelize_hamiltonian_cluster(const Instance& inst);
KernelResult kernelize_disjoint_cluster(const Instance& inst);

KernelResult kernelize_cluster(const Instance& inst, const ClusterConfig& cfg = {});

}  // namespace kernelcut
