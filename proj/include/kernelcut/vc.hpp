#pragma once

#include <vector>

#include "kernelcut/graph.hpp"
#include "kernelcut/matching.hpp"

namespace kernelcut {

enum class ConnectionMode { Unordered, Ordered, Duplicated };

struct ConnectionGraph {
    ConnectionMode mode = ConnectionMode::Unordered;
    BipartiteGraph h;
    std::vector<int> left_vertices;    // left index -> vertex of I, ascending
    std::vector<Edge> pair_index;      // right index -> (p, q) of X; ordered pairs in Ordered mode
};

// Throws InputError if X is not a vertex cover of the underlying undirected graph.
ConnectionGraph build_connection_graph(const Graph& g, const std::vector<int>& X, ConnectionMode mode);

// Exact test for a cycle with at least k vertices, k <= 4, in O(n^3 m).
bool has_cycle_at_least(const Graph& g, int k);

KernelResult kernelize_vc(const Instance& inst);
KernelResult hamiltonian_vc_bound(const Instance& inst);

// Vertex bound the kernel guarantees for an instance with cover size ell.
std::int64_t vc_kernel_bound(Problem p, bool directed, std::int64_t ell);

}  // namespace kernelcut
