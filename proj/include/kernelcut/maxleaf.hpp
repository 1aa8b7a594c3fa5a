#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kernelcut/graph.hpp"

namespace kernelcut {

enum class ParallelMode { LongestOnly, UpToEll };

struct ContractedGraph {
    Graph graph;                         // multigraph on the branch vertices
    std::vector<std::int64_t> labels;    // aligned with graph.edges
    std::vector<int> branch;             // new index -> input vertex
    std::int64_t best_two_cycle = 0;     // LongestOnly: best cycle over two parallels (vertices)
    std::vector<std::int64_t> isolated_cycles;  // cycle components without branch vertices
    std::vector<std::int64_t> loop_cycles;      // cycles hanging off a single branch vertex
    int max_parallel = 0;
    bool violated = false;               // UpToEll: some pair carries more than ell parallels
};

ContractedGraph contract_paths(const Graph& g, ParallelMode mode, int ell = 0);

// Longest cycle (in vertices) of the expansion of a labeled multigraph; 0 if acyclic.
// Throws InputError when the vertex count exceeds `cap`.
std::int64_t held_karp_longest_cycle(const Graph& m, const std::vector<std::int64_t>& labels,
                                     std::optional<std::int64_t> two_cycle_best = std::nullopt, int cap = 20);

struct MaxleafConfig {
    int hk_cap = 20;
    std::optional<std::int64_t> threshold;  // overrides T(ell)
};

// T(ell) = 2^{4 ell} (4 ell)^2, saturating at INT64_MAX.
std::int64_t maxleaf_threshold(int ell);

KernelResult solve_long_cycle_maxleaf(const Instance& inst, const MaxleafConfig& cfg = {});
KernelResult kernelize_long_cycle_maxleaf(const Instance& inst, const MaxleafConfig& cfg = {});
KernelResult reduce_degree2_single_internal(const Instance& inst);
KernelResult kernelize_disjoint_paths_maxleaf(const Instance& inst);

// Dispatch on the problem tag.
KernelResult kernelize_maxleaf(const Instance& inst, const MaxleafConfig& cfg = {});

}  // namespace kernelcut
