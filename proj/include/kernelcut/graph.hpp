#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kernelcut {

using Edge = std::pair<int, int>;

struct Graph {
    int n = 0;
    bool directed = false;
    bool multigraph = false;
    std::vector<Edge> edges;

    bool operator==(const Graph&) const = default;
};

enum class Problem {
    LongCycle,
    LongPath,
    HamiltonianCycle,
    HamiltonianPath,
    DisjointPaths,
    DisjointCycles,
    FpStPath,
    FpStPathShortest,
    FpStPathLongest,
    FpLongestPath,
};

std::string to_string(Problem p);
Problem problem_from_string(const std::string& s);
bool is_fp_problem(Problem p);
bool needs_k(Problem p);

enum class WitnessKind {
    VertexCover,
    ClusterModulator,
    BipathsModulator,
    OuterplanarModulator,
    MaxLeafBound,
    VcOfH,
};

std::string to_string(WitnessKind w);
WitnessKind witness_kind_from_string(const std::string& s);

struct Witness {
    WitnessKind kind = WitnessKind::VertexCover;
    std::vector<int> vertices;
    int ell = 0;

    bool operator==(const Witness&) const = default;
};

// A compressed clique remainder: vertex_id stands for `label` unmarked vertices.
struct StandIn {
    int clique_id = 0;
    int vertex_id = 0;
    std::int64_t label = 0;

    bool operator==(const StandIn&) const = default;
};

struct Instance {
    Problem problem = Problem::LongCycle;
    Graph graph;
    std::vector<std::int64_t> labels;  // empty, or aligned with graph.edges
    std::optional<std::int64_t> k;
    std::vector<Edge> pairs;
    std::optional<int> s, t;
    Witness witness;
    std::vector<StandIn> stand_ins;

    bool operator==(const Instance&) const = default;

    bool labeled() const { return !labels.empty(); }
    std::int64_t label(std::size_t e) const { return labels.empty() ? 0 : labels[e]; }
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- construction / validation -------------------------------------------

Graph make_graph(int n, std::vector<Edge> edges, bool directed = false);
void validate_graph(const Graph& g);
void validate_instance(const Instance& inst);

// Adjacency lists. For directed graphs out() holds successors, in() predecessors;
// for undirected graphs both are identical. Parallel edges appear repeatedly.
struct Adjacency {
    std::vector<std::vector<int>> out, in;
    explicit Adjacency(const Graph& g);
    int degree(int v) const { return static_cast<int>(out[v].size()); }
};

// Adjacency as per-vertex bitmask; requires n <= 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

// Simple undirected 0/1 matrix; used by oracles on small graphs.
std::vector<std::vector<char>> adjacency_matrix(const Graph& g);

std::vector<int> degrees(const Graph& g);
std::vector<int> components(const Graph& g, int* count = nullptr);

// Induced subgraph on `keep`; new vertex i corresponds to keep[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Remove vertices flagged in `drop`. Returns new graph and old->new map (-1 if removed).
std::pair<Graph, std::vector<int>> remove_vertices(const Graph& g, const std::vector<char>& drop);

// Expand labeled edges into paths of label-many fresh degree-2 vertices.
Graph expand_labels(const Graph& g, const std::vector<std::int64_t>& labels);

// Undirected version of a digraph; antiparallel arcs collapse into one edge.
Graph underlying_undirected(const Graph& g);

void sort_edges(Graph& g);

// ---- structure -----------------------------------------------------------

struct WitnessReport {
    enum class Status { Holds, HoldsConditionally, Violated } status = Status::Holds;
    std::string reason;
    bool ok() const { return status != Status::Violated; }
};

WitnessReport check_structure(const Graph& g, const Witness& w,
                              const std::vector<Edge>& pairs = {});

struct Degree2Path {
    int a = -1, b = -1;          // anchors in B; a == b for a loop
    std::vector<int> internal;   // in order from a to b
};

struct Pendant {
    int anchor = -1;             // branch vertex
    std::vector<int> internal;   // from anchor outwards
    int leaf = -1;
};

struct Degree2Decomposition {
    std::vector<int> branch;                     // degree >= 3
    std::vector<Degree2Path> paths;
    std::vector<Pendant> pendants;
    std::vector<std::vector<int>> cycles;        // components of degree-2 vertices only
    std::vector<std::vector<int>> free_paths;    // path components, endpoint to endpoint
    std::vector<int> isolated;
};

Degree2Decomposition degree2_path_decomposition(const Graph& g);

// ---- kernel results ------------------------------------------------------

enum class Status { Reduced, SolvedYes, SolvedNo, PromiseViolated };
std::string to_string(Status s);

struct TraceEntry {
    std::string rule;
    std::vector<int> vertices;
    std::vector<Edge> edges;
    std::string note;
};

struct SizeStats {
    std::int64_t vertices = 0, edges = 0, bits = 0;
};

struct KernelResult {
    Status status = Status::Reduced;
    Instance instance;
    std::vector<TraceEntry> trace;
    SizeStats before, after;
    std::vector<int> vertex_map;  // output vertex -> input vertex, -1 if new
};

SizeStats measure(const Instance& inst);
int bit_length(std::int64_t x);

Instance dummy_instance(Problem p, bool yes, const Witness& like);
KernelResult solved(const Instance& original, bool yes, std::vector<TraceEntry> trace = {});
KernelResult unchanged(const Instance& inst, std::vector<TraceEntry> trace = {});
void finalize(KernelResult& r, const Instance& original);

// Map a vertex set through an old->new map, dropping removed vertices.
std::vector<int> map_vertices(const std::vector<int>& vs, const std::vector<int>& old_to_new);

// ---- I/O ---------------------------------------------------------------

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst, int indent = -1);
Graph parse_edge_list(const std::string& text);
std::string serialize_result(const KernelResult& r, int indent = 2);

}  // namespace kernelcut
