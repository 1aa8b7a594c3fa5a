#include "kernelcut/vc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace kernelcut {

namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

std::vector<char> membership(int n, const std::vector<int>& X) {
    std::vector<char> in(n, 0);
    for (int v : X) in[v] = 1;
    return in;
}

void require_cover(const Graph& g, const std::vector<int>& X) {
    auto in = membership(g.n, X);
    for (auto [u, v] : g.edges)
        if (!in[u] && !in[v])
            throw InputError("witness is not a vertex cover: edge [" + std::to_string(u) + "," +
                             std::to_string(v) + "] is uncovered");
}

struct Reduction {
    Graph g;
    std::vector<int> old_to_new;
    std::vector<int> removed;
};

// Keep X and the independent vertices a maximum matching covers.
Reduction matching_reduction(const Graph& g, const std::vector<int>& X, ConnectionMode mode) {
    ConnectionGraph cg = build_connection_graph(g, X, mode);
    Matching m = maximum_matching(cg.h);
    std::vector<char> drop(g.n, 0);
    for (int v : cg.left_vertices) drop[v] = 1;
    for (int l : m.matched_left) drop[cg.left_vertices[l]] = 0;
    Reduction r;
    for (int v = 0; v < g.n; ++v)
        if (drop[v]) r.removed.push_back(v);
    std::tie(r.g, r.old_to_new) = remove_vertices(g, drop);
    return r;
}

std::vector<int> invert(const std::vector<int>& old_to_new, int n_new) {
    std::vector<int> inv(n_new, -1);
    for (std::size_t v = 0; v < old_to_new.size(); ++v)
        if (old_to_new[v] >= 0) inv[old_to_new[v]] = static_cast<int>(v);
    return inv;
}

KernelResult long_cycle_kernel(const Instance& inst, std::vector<TraceEntry> trace) {
    const Graph& g = inst.graph;
    const std::int64_t k = *inst.k;
    if (k <= 4) {
        bool yes = has_cycle_at_least(g, static_cast<int>(std::max<std::int64_t>(k, 0)));
        trace.push_back({"brute-force-small-k", {}, {}, "k=" + std::to_string(k)});
        return solved(inst, yes, std::move(trace));
    }
    auto mode = g.directed ? ConnectionMode::Ordered : ConnectionMode::Unordered;
    Reduction red = matching_reduction(g, inst.witness.vertices, mode);
    trace.push_back({"remove-unmatched", red.removed, {}, ""});
    KernelResult r;
    r.status = Status::Reduced;
    r.instance = inst;
    r.instance.graph = red.g;
    r.instance.witness.vertices = map_vertices(inst.witness.vertices, red.old_to_new);
    r.instance.witness.ell = static_cast<int>(r.instance.witness.vertices.size());
    r.trace = std::move(trace);
    r.vertex_map = invert(red.old_to_new, red.g.n);
    finalize(r, inst);
    return r;
}

}  // namespace

ConnectionGraph build_connection_graph(const Graph& g, const std::vector<int>& X0, ConnectionMode mode) {
    require_cover(g, X0);
    std::vector<int> X = X0;
    std::sort(X.begin(), X.end());
    const int l = static_cast<int>(X.size());
    std::vector<int> xi(g.n, -1);
    for (int i = 0; i < l; ++i) xi[X[i]] = i;

    ConnectionGraph cg;
    cg.mode = mode;
    // right index tables
    std::vector<std::vector<int>> idx(l, std::vector<int>(l, -1));
    if (mode == ConnectionMode::Ordered) {
        for (int a = 0; a < l; ++a)
            for (int b = 0; b < l; ++b)
                if (a != b) {
                    idx[a][b] = static_cast<int>(cg.pair_index.size());
                    cg.pair_index.push_back({X[a], X[b]});
                }
    } else {
        const int copies = mode == ConnectionMode::Duplicated ? 2 : 1;
        for (int a = 0; a < l; ++a)
            for (int b = a + 1; b < l; ++b) {
                idx[a][b] = static_cast<int>(cg.pair_index.size());
                for (int c = 0; c < copies; ++c) cg.pair_index.push_back({X[a], X[b]});
            }
    }
    cg.h.right = static_cast<int>(cg.pair_index.size());

    std::vector<std::vector<int>> inX(g.n), outX(g.n);
    for (auto [u, v] : g.edges) {
        if (xi[u] >= 0 && xi[v] < 0) {
            inX[v].push_back(xi[u]);
            if (!g.directed) outX[v].push_back(xi[u]);
        }
        if (xi[v] >= 0 && xi[u] < 0) {
            outX[u].push_back(xi[v]);
            if (!g.directed) inX[u].push_back(xi[v]);
        }
    }
    for (int v = 0; v < g.n; ++v) {
        if (xi[v] >= 0) continue;
        int left = static_cast<int>(cg.left_vertices.size());
        cg.left_vertices.push_back(v);
        auto& I = inX[v];
        auto& O = outX[v];
        std::sort(I.begin(), I.end());
        I.erase(std::unique(I.begin(), I.end()), I.end());
        std::sort(O.begin(), O.end());
        O.erase(std::unique(O.begin(), O.end()), O.end());
        if (mode == ConnectionMode::Ordered) {
            for (int a : I)
                for (int b : O)
                    if (a != b) cg.h.edges.push_back({left, idx[a][b]});
        } else {
            const int copies = mode == ConnectionMode::Duplicated ? 2 : 1;
            for (std::size_t i = 0; i < I.size(); ++i)
                for (std::size_t j = i + 1; j < I.size(); ++j)
                    for (int c = 0; c < copies; ++c) cg.h.edges.push_back({left, idx[I[i]][I[j]] + c});
        }
    }
    cg.h.left = static_cast<int>(cg.left_vertices.size());
    std::sort(cg.h.edges.begin(), cg.h.edges.end());
    return cg;
}

bool has_cycle_at_least(const Graph& g, int k) {
    const int minlen = g.directed ? 2 : 3;
    k = std::max(k, minlen);
    if (k > 4) throw std::invalid_argument("has_cycle_at_least supports k <= 4");
    const int n = g.n;
    Adjacency adj(g);
    std::vector<char> blocked(n, 0);
    std::vector<int> path;
    std::vector<char> seen(n);
    // can some out-neighbour w of path.back() (w off the path) reach path.front() avoiding the interior?
    auto closes = [&]() {
        int first = path.front(), last = path.back();
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<int> st{first};
        seen[first] = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : adj.in[x])
                if (!seen[y] && !blocked[y]) {
                    seen[y] = 1;
                    st.push_back(y);
                }
        }
        for (int w : adj.out[last])
            if (w != first && !blocked[w] && seen[w]) return true;
        return false;
    };
    // paths of k-1 vertices; interior (all but the first) is blocked during the search
    std::function<bool(int)> grow = [&](int v) -> bool {
        if (static_cast<int>(path.size()) == k - 1) return closes();
        for (int w : adj.out[v]) {
            if (blocked[w] || w == path.front()) continue;
            blocked[w] = 1;
            path.push_back(w);
            bool ok = grow(w);
            path.pop_back();
            blocked[w] = 0;
            if (ok) return true;
        }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        path = {v};
        if (grow(v)) return true;
    }
    return false;
}

std::int64_t vc_kernel_bound(Problem p, bool directed, std::int64_t ell) {
    switch (p) {
        case Problem::LongCycle:
            return directed ? ell + ell * (ell - 1) : ell + choose2(ell);
        case Problem::LongPath:
            return directed ? ell + (ell + 1) * ell : ell + choose2(ell + 1);
        case Problem::DisjointCycles:
            return ell + 2 * choose2(ell);
        case Problem::DisjointPaths:  // ell is the enlarged cover of the output
            return ell + choose2(ell);
        case Problem::HamiltonianCycle:
        case Problem::HamiltonianPath:
            return 2 * ell + 1;
        default:
            return 0;
    }
}

KernelResult kernelize_vc(const Instance& inst) {
    if (inst.witness.kind != WitnessKind::VertexCover) throw InputError("vc kernel needs a vertex-cover witness");
    if (inst.labeled() || inst.graph.multigraph || !inst.stand_ins.empty())
        throw InputError("vc kernel expects a plain simple graph");
    require_cover(inst.graph, inst.witness.vertices);
    const Graph& g = inst.graph;
    std::vector<TraceEntry> trace;
    switch (inst.problem) {
        case Problem::LongCycle:
            return long_cycle_kernel(inst, {});
        case Problem::LongPath: {
            const std::int64_t k = *inst.k;
            if (k + 1 <= 4) {
                bool yes;
                Adjacency adj(g);
                if (k <= 1) {
                    yes = g.n >= 1;
                } else if (k == 2) {
                    yes = !g.edges.empty();
                } else {
                    yes = false;
                    for (int v = 0; v < g.n && !yes; ++v)
                        for (int a : adj.in[v])
                            for (int b : adj.out[v])
                                if (a != b) yes = true;
                }
                trace.push_back({"brute-force-small-k", {}, {}, "k=" + std::to_string(k)});
                return solved(inst, yes, std::move(trace));
            }
            // wrap: universal vertex u, long-cycle kernel with k+1, then drop u
            Instance w = inst;
            w.problem = Problem::LongCycle;
            const int u = g.n;
            w.graph.n += 1;
            for (int v = 0; v < g.n; ++v) {
                w.graph.edges.push_back({u, v});
                if (g.directed) w.graph.edges.push_back({v, u});
            }
            w.k = k + 1;
            w.witness.vertices.push_back(u);
            std::sort(w.witness.vertices.begin(), w.witness.vertices.end());
            w.witness.ell += 1;
            trace.push_back({"add-universal-vertex", {u}, {}, "target k+1"});
            KernelResult c = long_cycle_kernel(w, trace);
            if (c.status != Status::Reduced) return solved(inst, c.status == Status::SolvedYes, c.trace);
            int nu = -1;
            for (int v = 0; v < c.instance.graph.n; ++v)
                if (c.vertex_map[v] == u) nu = v;
            std::vector<char> drop(c.instance.graph.n, 0);
            drop[nu] = 1;
            auto [h, map] = remove_vertices(c.instance.graph, drop);
            KernelResult r;
            r.status = Status::Reduced;
            r.instance = inst;
            r.instance.graph = h;
            r.instance.witness.vertices = map_vertices(c.instance.witness.vertices, map);
            r.instance.witness.ell = static_cast<int>(r.instance.witness.vertices.size());
            r.trace = c.trace;
            r.trace.push_back({"remove-universal-vertex", {u}, {}, ""});
            r.vertex_map.assign(h.n, -1);
            for (int v = 0; v < c.instance.graph.n; ++v)
                if (map[v] >= 0) r.vertex_map[map[v]] = c.vertex_map[v];
            finalize(r, inst);
            return r;
        }
        case Problem::DisjointPaths: {
            if (g.directed) throw InputError("disjoint-paths is supported on undirected graphs only");
            const int ell = inst.witness.ell;
            if (static_cast<int>(inst.pairs.size()) > ell) {
                trace.push_back({"too-many-requests", {}, {}, "more requests than cover vertices"});
                return solved(inst, false, std::move(trace));
            }
            Instance w = inst;
            std::set<int> Xs(inst.witness.vertices.begin(), inst.witness.vertices.end());
            std::vector<int> folded;
            for (auto [s, t] : inst.pairs)
                for (int x : {s, t})
                    if (Xs.insert(x).second) folded.push_back(x);
            std::sort(folded.begin(), folded.end());
            w.witness.vertices.assign(Xs.begin(), Xs.end());
            w.witness.ell = static_cast<int>(Xs.size());
            trace.push_back({"fold-terminals-into-cover", folded, {}, ""});
            std::set<Edge> present;
            for (auto [a, b] : g.edges) present.insert({std::min(a, b), std::max(a, b)});
            std::vector<Edge> added;
            for (std::size_t i = 0; i < inst.pairs.size(); ++i)
                for (std::size_t j = i + 1; j < inst.pairs.size(); ++j)
                    for (int a : {inst.pairs[i].first, inst.pairs[i].second})
                        for (int b : {inst.pairs[j].first, inst.pairs[j].second}) {
                            Edge e{std::min(a, b), std::max(a, b)};
                            if (present.insert(e).second) added.push_back(e);
                        }
            std::sort(added.begin(), added.end());
            for (auto e : added) w.graph.edges.push_back(e);
            trace.push_back({"add-cross-pair-edges", {}, added, ""});
            Reduction red = matching_reduction(w.graph, w.witness.vertices, ConnectionMode::Unordered);
            trace.push_back({"remove-unmatched", red.removed, {}, ""});
            KernelResult r;
            r.status = Status::Reduced;
            r.instance = w;
            r.instance.graph = red.g;
            r.instance.witness.vertices = map_vertices(w.witness.vertices, red.old_to_new);
            r.instance.witness.ell = static_cast<int>(r.instance.witness.vertices.size());
            for (auto& [s, t] : r.instance.pairs) {
                s = red.old_to_new[s];
                t = red.old_to_new[t];
            }
            r.trace = std::move(trace);
            r.vertex_map = invert(red.old_to_new, red.g.n);
            finalize(r, inst);
            return r;
        }
        case Problem::DisjointCycles: {
            if (g.directed) throw InputError("disjoint-cycles is supported on undirected graphs only");
            Reduction red = matching_reduction(g, inst.witness.vertices, ConnectionMode::Duplicated);
            trace.push_back({"remove-unmatched", red.removed, {}, "duplicated pairs"});
            KernelResult r;
            r.status = Status::Reduced;
            r.instance = inst;
            r.instance.graph = red.g;
            r.instance.witness.vertices = map_vertices(inst.witness.vertices, red.old_to_new);
            r.instance.witness.ell = static_cast<int>(r.instance.witness.vertices.size());
            r.trace = std::move(trace);
            r.vertex_map = invert(red.old_to_new, red.g.n);
            finalize(r, inst);
            return r;
        }
        case Problem::HamiltonianCycle:
        case Problem::HamiltonianPath:
            throw InputError("hamiltonian problems use the linear vertex-cover bound, not the matching reduction");
        default:
            throw InputError("no vertex-cover kernel for " + to_string(inst.problem));
    }
}

KernelResult hamiltonian_vc_bound(const Instance& inst) {
    if (inst.witness.kind != WitnessKind::VertexCover) throw InputError("vc bound needs a vertex-cover witness");
    if (inst.problem != Problem::HamiltonianCycle && inst.problem != Problem::HamiltonianPath)
        throw InputError("hamiltonian_vc_bound handles hamiltonian-cycle/path only");
    require_cover(inst.graph, inst.witness.vertices);
    const std::int64_t ell = inst.witness.ell;
    if (inst.graph.n > 2 * ell + 1) {
        return solved(inst, false,
                      {{"independent-set-too-large", {}, {}, "n > 2*ell+1"}});
    }
    return unchanged(inst, {{"within-linear-bound", {}, {}, ""}});
}

}  // namespace kernelcut
