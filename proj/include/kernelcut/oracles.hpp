#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kernelcut/graph.hpp"

namespace kernelcut {

enum class Answer { No, Yes, Unknown };
const char* to_string(Answer a);

struct OracleLimits {
    int dp_cap = 22;               // bitmask DP up to this many vertices
    std::int64_t timeout_ms = 20000;
};

// Defaults, overridden by KERNELCUT_ORACLE_CAP / KERNELCUT_TIMEOUT_MS.
OracleLimits default_limits();

struct LengthResult {
    Answer status = Answer::Yes;   // Unknown on timeout; value is then a lower bound
    std::int64_t value = 0;
};

// Maximum total vertex weight of a simple cycle (0 if none). Undirected cycles
// need three vertices, directed ones two. Stops early once `target` is reached.
LengthResult longest_cycle(const Graph& g, const std::vector<std::int64_t>& weights = {},
                           std::optional<std::int64_t> target = std::nullopt,
                           const OracleLimits& lim = default_limits());

// Maximum total weight of a simple path, optionally with fixed endpoints.
LengthResult longest_path(const Graph& g, const std::vector<std::int64_t>& weights = {},
                          std::optional<Edge> st = std::nullopt,
                          std::optional<std::int64_t> target = std::nullopt,
                          const OracleLimits& lim = default_limits());

// Labeled multigraph: each edge adds label-many internal vertices.
LengthResult longest_cycle_labeled(const Graph& g, const std::vector<std::int64_t>& labels,
                                   const OracleLimits& lim = default_limits());

struct HamResult {
    Answer answer = Answer::No;
    std::vector<int> order;  // certificate when YES
};

HamResult hamiltonian_cycle(const Graph& g, const OracleLimits& lim = default_limits());
HamResult hamiltonian_st_path(const Graph& g, int s, int t, const OracleLimits& lim = default_limits());
HamResult hamiltonian_path(const Graph& g, const OracleLimits& lim = default_limits());

// Forced-edge backtracking only (no DP), exposed for the gadget graphs and tests.
HamResult hamiltonian_cycle_backtrack(const Graph& g, const OracleLimits& lim = default_limits());

// Enumerate every Hamiltonian cycle (as edge-index sets); small graphs only.
std::vector<std::vector<int>> all_hamiltonian_cycles(const Graph& g, std::size_t limit = 1000000);

bool validate_cycle(const Graph& g, const std::vector<int>& order, bool hamiltonian);
bool validate_path(const Graph& g, const std::vector<int>& order, bool hamiltonian,
                   std::optional<int> s = std::nullopt, std::optional<int> t = std::nullopt);

struct DisjointResult {
    Answer answer = Answer::No;
    std::vector<std::vector<int>> parts;  // one path per pair, or k cycles
};

DisjointResult disjoint_paths(const Graph& g, const std::vector<Edge>& pairs,
                              const OracleLimits& lim = default_limits());
DisjointResult disjoint_cycles(const Graph& g, std::int64_t k, const OracleLimits& lim = default_limits());
bool validate_disjoint_paths(const Graph& g, const std::vector<Edge>& pairs,
                             const std::vector<std::vector<int>>& parts);
bool validate_disjoint_cycles(const Graph& g, std::int64_t k, const std::vector<std::vector<int>>& parts);

enum class FpObjective { Exists, Shortest, Longest, LongestAnywhere };

struct FpResult {
    Answer answer = Answer::No;
    std::int64_t length = 0;  // vertices on the optimal path
    std::vector<int> path;
};

FpResult forbidden_pairs_path(const Graph& g, int s, int t, const std::vector<Edge>& H, FpObjective obj,
                              const OracleLimits& lim = default_limits());
bool validate_fp_path(const Graph& g, const std::vector<Edge>& H, const std::vector<int>& path,
                      std::optional<int> s = std::nullopt, std::optional<int> t = std::nullopt);

struct FptFpResult {
    bool found = false;
    std::int64_t length = 0;
    std::uint64_t subsets_enumerated = 0;
};

// Shortest s-t path avoiding forbidden pairs, by enumerating conflict-free X' ⊆ X.
FptFpResult fpt_shortest_fp_path(const Graph& g, int s, int t, const std::vector<Edge>& H,
                                 const std::vector<int>& X);

struct ArcsetCheck {
    bool conditions = false;  // the five local conditions
    bool walk = false;        // C traced from b_1 is a Hamiltonian path ending at b_nB
};

ArcsetCheck check_bipartite_hampath_arcset(const Graph& D, const std::vector<int>& A,
                                           const std::vector<int>& B, const std::vector<Edge>& C);
bool validate_bipartite_hampath_arcset(const Graph& D, const std::vector<int>& A,
                                       const std::vector<int>& B, const std::vector<Edge>& C);

// Sum over components of the maximum number of leaves of a spanning tree.
int max_leaf_number(const Graph& g, int component_cap = 20);

// Vertex weights of an instance: stand-ins carry their label, all others weigh 1.
std::vector<std::int64_t> vertex_weights(const Instance& inst);

// Exact answer for any instance, interpreting labels and stand-ins.
Answer decide(const Instance& inst, const OracleLimits& lim = default_limits());

}  // namespace kernelcut
