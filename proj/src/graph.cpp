#include "kernelcut/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace kernelcut {

namespace {

const std::vector<std::pair<Problem, const char*>> kProblemNames = {
    {Problem::LongCycle, "long-cycle"},
    {Problem::LongPath, "long-path"},
    {Problem::HamiltonianCycle, "hamiltonian-cycle"},
    {Problem::HamiltonianPath, "hamiltonian-path"},
    {Problem::DisjointPaths, "disjoint-paths"},
    {Problem::DisjointCycles, "disjoint-cycles"},
    {Problem::FpStPath, "fp-st-path"},
    {Problem::FpStPathShortest, "fp-st-path-shortest"},
    {Problem::FpStPathLongest, "fp-st-path-longest"},
    {Problem::FpLongestPath, "fp-longest-path"},
};

const std::vector<std::pair<WitnessKind, const char*>> kWitnessNames = {
    {WitnessKind::VertexCover, "vertex-cover"},
    {WitnessKind::ClusterModulator, "cluster-modulator"},
    {WitnessKind::BipathsModulator, "bipaths-modulator"},
    {WitnessKind::OuterplanarModulator, "outerplanar-modulator"},
    {WitnessKind::MaxLeafBound, "max-leaf-bound"},
    {WitnessKind::VcOfH, "vc-of-H"},
};

Edge norm(Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

}  // namespace

std::string to_string(Problem p) {
    for (auto& [k, v] : kProblemNames)
        if (k == p) return v;
    return "?";
}

Problem problem_from_string(const std::string& s) {
    for (auto& [k, v] : kProblemNames)
        if (s == v) return k;
    throw InputError("unknown problem tag '" + s + "'");
}

bool is_fp_problem(Problem p) {
    return p == Problem::FpStPath || p == Problem::FpStPathShortest ||
           p == Problem::FpStPathLongest || p == Problem::FpLongestPath;
}

bool needs_k(Problem p) {
    switch (p) {
        case Problem::HamiltonianCycle:
        case Problem::HamiltonianPath:
        case Problem::FpStPath:
            return false;
        default:
            return true;
    }
}

static bool needs_st(Problem p) {
    return p == Problem::FpStPath || p == Problem::FpStPathShortest || p == Problem::FpStPathLongest;
}

std::string to_string(WitnessKind w) {
    for (auto& [k, v] : kWitnessNames)
        if (k == w) return v;
    return "?";
}

WitnessKind witness_kind_from_string(const std::string& s) {
    for (auto& [k, v] : kWitnessNames)
        if (s == v) return k;
    throw InputError("unknown witness kind '" + s + "'");
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Reduced: return "Reduced";
        case Status::SolvedYes: return "SolvedYes";
        case Status::SolvedNo: return "SolvedNo";
        case Status::PromiseViolated: return "PromiseViolated";
    }
    return "?";
}

Graph make_graph(int n, std::vector<Edge> edges, bool directed) {
    Graph g;
    g.n = n;
    g.directed = directed;
    g.edges = std::move(edges);
    return g;
}

void validate_graph(const Graph& g) {
    if (g.n < 0) throw InputError("negative vertex count");
    std::set<Edge> seen;
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            throw InputError("vertex out of range: edge [" + std::to_string(u) + "," +
                             std::to_string(v) + "] with n=" + std::to_string(g.n));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (!g.multigraph) {
            Edge key = g.directed ? Edge{u, v} : norm({u, v});
            if (!seen.insert(key).second)
                throw InputError("duplicate edge [" + std::to_string(u) + "," + std::to_string(v) +
                                 "] without multigraph flag");
        }
    }
}

void validate_instance(const Instance& inst) {
    const Graph& g = inst.graph;
    validate_graph(g);
    if (!inst.labels.empty()) {
        if (inst.labels.size() != g.edges.size())
            throw InputError("labels length does not match edges length");
        std::map<Edge, int> plain;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (inst.labels[i] < 0) throw InputError("negative edge label");
            if (inst.labels[i] == 0) {
                Edge key = g.directed ? g.edges[i] : norm(g.edges[i]);
                if (++plain[key] > 1) throw InputError("label expansion is not a simple graph");
            }
        }
    }
    auto in_range = [&](int v) { return v >= 0 && v < g.n; };
    if (needs_k(inst.problem) && !inst.k) throw InputError("missing field 'k' for " + to_string(inst.problem));
    if (!needs_k(inst.problem) && inst.k) throw InputError("field 'k' not used by " + to_string(inst.problem));
    if (needs_st(inst.problem)) {
        if (!inst.s || !inst.t) throw InputError("missing field 's'/'t' for " + to_string(inst.problem));
        if (!in_range(*inst.s) || !in_range(*inst.t)) throw InputError("vertex out of range: s/t");
        if (*inst.s == *inst.t) throw InputError("s and t must be distinct");
    } else if (inst.s || inst.t) {
        throw InputError("fields 's'/'t' not used by " + to_string(inst.problem));
    }
    for (auto [u, v] : inst.pairs) {
        if (!in_range(u) || !in_range(v)) throw InputError("vertex out of range in pairs");
        if (u == v) throw InputError("pair with identical endpoints");
    }
    if (inst.problem == Problem::DisjointPaths) {
        std::set<int> terms;
        for (auto [u, v] : inst.pairs) {
            if (!terms.insert(u).second || !terms.insert(v).second)
                throw InputError("disjoint-paths terminals must be distinct");
        }
        if (*inst.k != static_cast<std::int64_t>(inst.pairs.size()))
            throw InputError("disjoint-paths k must equal the number of pairs");
    } else if (!is_fp_problem(inst.problem) && !inst.pairs.empty()) {
        throw InputError("field 'pairs' not used by " + to_string(inst.problem));
    }
    const Witness& w = inst.witness;
    std::set<int> wv;
    for (int v : w.vertices) {
        if (!in_range(v)) throw InputError("vertex out of range in witness");
        if (!wv.insert(v).second) throw InputError("duplicate witness vertex");
    }
    if (w.kind == WitnessKind::MaxLeafBound) {
        if (!w.vertices.empty()) throw InputError("max-leaf-bound witness carries no vertices");
        if (w.ell < 1) throw InputError("max-leaf-bound requires ell >= 1");
    } else if (w.ell != static_cast<int>(w.vertices.size())) {
        throw InputError("witness ell must equal the number of witness vertices");
    }
    std::set<int> sv;
    for (auto& si : inst.stand_ins) {
        if (!in_range(si.vertex_id)) throw InputError("vertex out of range in stand_ins");
        if (si.label < 0) throw InputError("negative stand-in label");
        if (!sv.insert(si.vertex_id).second) throw InputError("duplicate stand-in vertex");
    }
}

Adjacency::Adjacency(const Graph& g) : out(g.n), in(g.n) {
    for (auto [u, v] : g.edges) {
        out[u].push_back(v);
        in[v].push_back(u);
        if (!g.directed) {
            out[v].push_back(u);
            in[u].push_back(v);
        }
    }
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.n > 64) throw std::invalid_argument("adjacency_masks: n > 64");
    std::vector<std::uint64_t> m(g.n, 0);
    for (auto [u, v] : g.edges) {
        m[u] |= 1ULL << v;
        if (!g.directed) m[v] |= 1ULL << u;
    }
    return m;
}

std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<char>> a(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : g.edges) {
        a[u][v] = 1;
        if (!g.directed) a[v][u] = 1;
    }
    return a;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(g.n, 0);
    for (auto [u, v] : g.edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

std::vector<int> components(const Graph& g, int* count) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges) parent[find(u)] = find(v);
    std::vector<int> id(g.n, -1), comp(g.n);
    int c = 0;
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        if (id[r] < 0) id[r] = c++;
        comp[v] = id[r];
    }
    if (count) *count = c;
    return comp;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> map(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) map[keep[i]] = static_cast<int>(i);
    Graph h;
    h.n = static_cast<int>(keep.size());
    h.directed = g.directed;
    h.multigraph = g.multigraph;
    for (auto [u, v] : g.edges)
        if (map[u] >= 0 && map[v] >= 0) h.edges.push_back({map[u], map[v]});
    return h;
}

std::pair<Graph, std::vector<int>> remove_vertices(const Graph& g, const std::vector<char>& drop) {
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (!drop[v]) keep.push_back(v);
    std::vector<int> map(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) map[keep[i]] = static_cast<int>(i);
    return {induced_subgraph(g, keep), map};
}

Graph expand_labels(const Graph& g, const std::vector<std::int64_t>& labels) {
    Graph h;
    h.n = g.n;
    h.directed = g.directed;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        std::int64_t L = labels.empty() ? 0 : labels[i];
        int prev = u;
        for (std::int64_t j = 0; j < L; ++j) {
            int x = h.n++;
            h.edges.push_back({prev, x});
            prev = x;
        }
        h.edges.push_back({prev, v});
    }
    return h;
}

Graph underlying_undirected(const Graph& g) {
    Graph h;
    h.n = g.n;
    std::set<Edge> seen;
    for (auto e : g.edges)
        if (seen.insert(norm(e)).second) h.edges.push_back(norm(e));
    return h;
}

void sort_edges(Graph& g) {
    if (!g.directed)
        for (auto& e : g.edges) e = norm(e);
    std::sort(g.edges.begin(), g.edges.end());
}

// ---- structure -------------------------------------------------------------

WitnessReport check_structure(const Graph& g, const Witness& w, const std::vector<Edge>& pairs) {
    using S = WitnessReport::Status;
    std::vector<char> inX(g.n, 0);
    for (int v : w.vertices)
        if (v >= 0 && v < g.n) inX[v] = 1;
    auto violated = [](std::string why) { return WitnessReport{S::Violated, std::move(why)}; };

    switch (w.kind) {
        case WitnessKind::VertexCover:
            for (auto [u, v] : g.edges)
                if (!inX[u] && !inX[v])
                    return violated("edge " + std::to_string(u) + "-" + std::to_string(v) + " uncovered");
            return {};
        case WitnessKind::VcOfH:
            for (auto [u, v] : pairs)
                if (!inX[u] && !inX[v])
                    return violated("pair " + std::to_string(u) + "," + std::to_string(v) + " uncovered");
            return {};
        case WitnessKind::ClusterModulator: {
            std::vector<int> keep;
            for (int v = 0; v < g.n; ++v)
                if (!inX[v]) keep.push_back(v);
            Graph h = underlying_undirected(induced_subgraph(g, keep));
            int c = 0;
            auto comp = components(h, &c);
            std::vector<long long> sz(c, 0), ecount(c, 0);
            for (int v = 0; v < h.n; ++v) ++sz[comp[v]];
            for (auto [u, v] : h.edges) ++ecount[comp[u]];
            for (int i = 0; i < c; ++i)
                if (ecount[i] != sz[i] * (sz[i] - 1) / 2) return violated("component is not a clique");
            return {};
        }
        case WitnessKind::BipathsModulator: {
            std::vector<int> keep;
            for (int v = 0; v < g.n; ++v)
                if (!inX[v]) keep.push_back(v);
            Graph h = underlying_undirected(induced_subgraph(g, keep));
            int c = 0;
            auto comp = components(h, &c);
            auto deg = degrees(h);
            std::vector<long long> sz(c, 0), ecount(c, 0);
            for (int v = 0; v < h.n; ++v) {
                ++sz[comp[v]];
                if (deg[v] > 2) return violated("vertex of degree > 2 outside the modulator");
            }
            for (auto [u, v] : h.edges) ++ecount[comp[u]];
            for (int i = 0; i < c; ++i)
                if (ecount[i] != sz[i] - 1) return violated("component is not a path");
            return {};
        }
        case WitnessKind::MaxLeafBound: {
            Graph h = underlying_undirected(g);
            auto deg = degrees(h);
            long long b = std::count_if(deg.begin(), deg.end(), [](int d) { return d >= 3; });
            if (b > 4LL * w.ell - 2)
                return violated(std::to_string(b) + " branch vertices exceed 4*ell-2");
            return {S::HoldsConditionally, "branch-vertex census within bound"};
        }
        case WitnessKind::OuterplanarModulator:
            return {S::HoldsConditionally, "outerplanarity is not tested"};
    }
    return {};
}

Degree2Decomposition degree2_path_decomposition(const Graph& g) {
    Adjacency adj(g);
    Degree2Decomposition d;
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) {
        deg[v] = adj.degree(v);
        if (deg[v] >= 3) d.branch.push_back(v);
        if (deg[v] == 0) d.isolated.push_back(v);
    }
    std::vector<char> used(g.n, 0);
    // Walk from `from` into `cur` until a vertex of degree != 2 is hit.
    auto walk = [&](int from, int cur, std::vector<int>& internal) {
        while (deg[cur] == 2) {
            used[cur] = 1;
            internal.push_back(cur);
            int nxt = adj.out[cur][0] == from ? adj.out[cur][1] : adj.out[cur][0];
            from = cur;
            cur = nxt;
        }
        return cur;
    };
    // Paths and pendants start at branch vertices; each B–B path is found twice, keep one.
    for (int b : d.branch) {
        for (int nb : adj.out[b]) {
            if (deg[nb] == 2 && used[nb]) continue;
            std::vector<int> internal;
            int end = walk(b, nb, internal);
            if (deg[end] >= 3) {
                if (internal.empty() && end < b) continue;
                if (internal.empty() && end == b) continue;
                d.paths.push_back({b, end, internal});
            } else {
                used[end] = 1;
                d.pendants.push_back({b, internal, end});
            }
        }
    }
    // Remaining degree-1 starts give free paths; the rest of degree-2 vertices are cycles.
    for (int v = 0; v < g.n; ++v) {
        if (deg[v] != 1 || used[v]) continue;
        int nb = adj.out[v][0];
        used[v] = 1;
        std::vector<int> seq{v};
        std::vector<int> internal;
        int end = walk(v, nb, internal);
        seq.insert(seq.end(), internal.begin(), internal.end());
        seq.push_back(end);
        used[end] = 1;
        d.free_paths.push_back(seq);
    }
    for (int v = 0; v < g.n; ++v) {
        if (deg[v] != 2 || used[v]) continue;
        std::vector<int> cyc;
        int from = adj.out[v][0], cur = v;
        while (!used[cur]) {
            used[cur] = 1;
            cyc.push_back(cur);
            int nxt = adj.out[cur][0] == from ? adj.out[cur][1] : adj.out[cur][0];
            from = cur;
            cur = nxt;
        }
        d.cycles.push_back(cyc);
    }
    return d;
}

// ---- results ---------------------------------------------------------------

int bit_length(std::int64_t x) {
    if (x < 0) x = -x;
    int b = 1;
    while (x > 1) {
        x >>= 1;
        ++b;
    }
    return b;
}

SizeStats measure(const Instance& inst) {
    SizeStats s;
    s.vertices = inst.graph.n;
    s.edges = static_cast<std::int64_t>(inst.graph.edges.size());
    int vb = bit_length(inst.graph.n);
    s.bits = 2LL * vb * s.edges + (inst.k ? bit_length(*inst.k) : 0);
    for (auto L : inst.labels) s.bits += bit_length(L);
    for (auto& si : inst.stand_ins) s.bits += bit_length(si.label);
    s.bits += 2LL * vb * static_cast<std::int64_t>(inst.pairs.size());
    return s;
}

Instance dummy_instance(Problem p, bool yes, const Witness& like) {
    Instance d;
    d.problem = p;
    auto set_graph = [&](int n, std::vector<Edge> e) { d.graph = make_graph(n, std::move(e)); };
    // witness vertices valid for every kind on these tiny graphs
    std::vector<int> cover;
    int leaves = 1;
    switch (p) {
        case Problem::LongCycle:
        case Problem::HamiltonianCycle:
            if (yes) {
                set_graph(3, {{0, 1}, {1, 2}, {2, 0}});
                cover = {0, 1};
                leaves = 2;
            } else {
                set_graph(1, {});
            }
            if (p == Problem::LongCycle) d.k = yes ? 3 : 2;
            break;
        case Problem::LongPath:
        case Problem::HamiltonianPath:
            if (yes) {
                set_graph(2, {{0, 1}});
                cover = {0};
                leaves = 2;
            } else if (p == Problem::LongPath) {
                set_graph(1, {});
            } else {
                set_graph(2, {});
            }
            if (p == Problem::LongPath) d.k = 2;
            break;
        case Problem::DisjointPaths:
            set_graph(2, yes ? std::vector<Edge>{{0, 1}} : std::vector<Edge>{});
            if (yes) {
                cover = {0};
                leaves = 2;
            }
            d.pairs = {{0, 1}};
            d.k = 1;
            break;
        case Problem::DisjointCycles:
            if (yes) {
                set_graph(3, {{0, 1}, {1, 2}, {2, 0}});
                cover = {0, 1};
                leaves = 2;
            } else {
                set_graph(1, {});
            }
            d.k = 1;
            break;
        default:
            set_graph(2, yes ? std::vector<Edge>{{0, 1}} : std::vector<Edge>{});
            if (yes) {
                cover = {0};
                leaves = 2;
            }
            d.s = 0;
            d.t = 1;
            if (needs_k(p)) d.k = 2;
            break;
    }
    d.witness.kind = like.kind;
    switch (like.kind) {
        case WitnessKind::VertexCover:
            d.witness.vertices = cover;
            break;
        case WitnessKind::MaxLeafBound:
            d.witness.ell = leaves;
            return d;
        default:
            break;  // every dummy graph is a cluster graph, a bi-path forest and has no pairs
    }
    d.witness.ell = static_cast<int>(d.witness.vertices.size());
    return d;
}

void finalize(KernelResult& r, const Instance& original) {
    r.before = measure(original);
    r.after = measure(r.instance);
}

KernelResult solved(const Instance& original, bool yes, std::vector<TraceEntry> trace) {
    KernelResult r;
    r.status = yes ? Status::SolvedYes : Status::SolvedNo;
    r.instance = dummy_instance(original.problem, yes, original.witness);
    if (original.graph.directed &&
        (original.problem == Problem::LongCycle || original.problem == Problem::LongPath ||
         original.problem == Problem::HamiltonianCycle || original.problem == Problem::HamiltonianPath))
        r.instance.graph.directed = true;
    r.trace = std::move(trace);
    r.vertex_map.assign(r.instance.graph.n, -1);
    finalize(r, original);
    return r;
}

KernelResult unchanged(const Instance& inst, std::vector<TraceEntry> trace) {
    KernelResult r;
    r.status = Status::Reduced;
    r.instance = inst;
    r.trace = std::move(trace);
    r.vertex_map.resize(inst.graph.n);
    std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
    finalize(r, inst);
    return r;
}

std::vector<int> map_vertices(const std::vector<int>& vs, const std::vector<int>& old_to_new) {
    std::vector<int> out;
    for (int v : vs)
        if (old_to_new[v] >= 0) out.push_back(old_to_new[v]);
    std::sort(out.begin(), out.end());
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Graph g;
    bool header = false;
    long long m = 0;
    while (std::getline(in, line)) {
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#' || line[p] == 'c') continue;
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a >> b)) throw InputError("malformed edge-list line: " + line);
        if (!header) {
            g.n = static_cast<int>(a);
            m = b;
            header = true;
        } else {
            g.edges.push_back({static_cast<int>(a), static_cast<int>(b)});
        }
    }
    if (!header) throw InputError("edge list missing 'n m' header");
    if (static_cast<long long>(g.edges.size()) != m)
        throw InputError("edge list declares " + std::to_string(m) + " edges but has " +
                         std::to_string(g.edges.size()));
    validate_graph(g);
    return g;
}

}  // namespace kernelcut
