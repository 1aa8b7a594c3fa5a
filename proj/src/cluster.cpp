#include "kernelcut/cluster.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kernelcut/oracles.hpp"

namespace kernelcut {

namespace {

std::int64_t binom2(std::int64_t a) { return a * (a - 1) / 2; }

std::int64_t weight_of(const std::vector<std::int64_t>& w, int v) { return w.empty() ? 1 : w[v]; }

std::int64_t clique_weight(const std::vector<int>& K, const std::vector<std::int64_t>& w) {
    std::int64_t s = 0;
    for (int v : K) s += weight_of(w, v);
    return s;
}

// nb[c][i]: vertices of clique c adjacent to X[i], ascending.
using CliqueNeighbours = std::vector<std::vector<std::vector<int>>>;

CliqueNeighbours clique_neighbours(const Graph& g, const ClusterDecomposition& d) {
    const int ell = static_cast<int>(d.X.size());
    std::vector<int> xi(g.n, -1);
    for (int i = 0; i < ell; ++i) xi[d.X[i]] = i;
    CliqueNeighbours nb(d.cliques.size(), std::vector<std::vector<int>>(ell));
    std::set<Edge> seen;
    for (auto [a, b] : g.edges) {
        for (int r = 0; r < 2; ++r) {
            int x = r ? b : a, v = r ? a : b;
            if (xi[x] < 0 || d.clique_of[v] < 0) continue;
            if (!seen.insert({x, v}).second) continue;
            nb[d.clique_of[v]][xi[x]].push_back(v);
        }
    }
    for (auto& per : nb)
        for (auto& l : per) std::sort(l.begin(), l.end());
    return nb;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool has_distinct_pq(const std::vector<int>& nu, const std::vector<int>& nv) {
    if (nu.empty() || nv.empty()) return false;
    return nu.size() > 1 || nv.size() > 1 || nu[0] != nv[0];
}

// Keep only the flagged cliques; marked sets are carried along when present.
ClusterDecomposition restrict_cliques(const ClusterDecomposition& d, const std::vector<char>& keep, int n) {
    ClusterDecomposition r;
    r.X = d.X;
    r.clique_of.assign(n, -1);
    for (std::size_t c = 0; c < d.cliques.size(); ++c) {
        if (!keep[c]) continue;
        for (int v : d.cliques[c]) r.clique_of[v] = static_cast<int>(r.cliques.size());
        r.cliques.push_back(d.cliques[c]);
        if (!d.marked.empty()) r.marked.push_back(d.marked[c]);
    }
    return r;
}

void require_cluster_witness(const Instance& inst) {
    if (inst.witness.kind != WitnessKind::ClusterModulator)
        throw InputError("cluster kernels need a cluster-modulator witness");
    if (inst.graph.directed) throw InputError("cluster kernels take undirected graphs");
}

KernelResult compose(const KernelResult& first, const KernelResult& second) {
    KernelResult r = second;
    r.trace = first.trace;
    r.trace.insert(r.trace.end(), second.trace.begin(), second.trace.end());
    for (int& v : r.vertex_map)
        if (v >= 0) v = first.vertex_map[v];
    r.before = first.before;
    return r;
}

// Apply a single-step reducer until its output stops changing.
template <class Step>
KernelResult to_fixpoint(const Instance& inst, Step step) {
    KernelResult r = step(inst);
    for (int round = 0; round < 64 && r.status == Status::Reduced; ++round) {
        KernelResult next = step(r.instance);
        if (next.status != Status::Reduced) {
            auto tr = r.trace;
            tr.insert(tr.end(), next.trace.begin(), next.trace.end());
            return solved(inst, next.status == Status::SolvedYes, std::move(tr));
        }
        if (next.instance == r.instance) break;
        r = compose(r, next);
    }
    finalize(r, inst);
    return r;
}

// Output of a compression: kept input vertices first (ascending), then one new
// vertex per clique that lost vertices.
struct Compressed {
    Graph graph;
    std::vector<int> vertex_map;
    std::vector<StandIn> stand_ins;
    std::vector<int> X;
};

Compressed compress(const Instance& inst, const ClusterDecomposition& d, const std::vector<std::int64_t>& w,
                    bool labeled) {
    const Graph& g = inst.graph;
    std::vector<char> keep(g.n, 0);
    for (int x : d.X) keep[x] = 1;
    for (auto& m : d.marked)
        for (int v : m) keep[v] = 1;
    Compressed c;
    std::vector<int> old_to_new(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (keep[v]) {
            old_to_new[v] = static_cast<int>(c.vertex_map.size());
            c.vertex_map.push_back(v);
        }
    std::set<Edge> edges;
    for (auto [a, b] : g.edges)
        if (keep[a] && keep[b]) {
            int u = old_to_new[a], v = old_to_new[b];
            edges.insert({std::min(u, v), std::max(u, v)});
        }
    std::map<int, std::int64_t> old_label;
    for (auto& si : inst.stand_ins) old_label[si.vertex_id] = si.label;
    for (std::size_t ci = 0; ci < d.cliques.size(); ++ci) {
        if (d.marked[ci].empty()) throw std::logic_error("kept clique without marked vertices");
        for (int v : d.marked[ci])
            if (old_label.count(v))
                c.stand_ins.push_back({static_cast<int>(ci), old_to_new[v], old_label[v]});
        std::int64_t rest = 0;
        for (int v : d.cliques[ci])
            if (!keep[v]) rest += weight_of(w, v);
        if (rest == 0) continue;
        const int s = static_cast<int>(c.vertex_map.size());
        c.vertex_map.push_back(-1);
        for (int v : d.marked[ci]) edges.insert({old_to_new[v], s});
        if (labeled) c.stand_ins.push_back({static_cast<int>(ci), s, rest});
    }
    c.graph.n = static_cast<int>(c.vertex_map.size());
    c.graph.edges.assign(edges.begin(), edges.end());
    std::sort(c.stand_ins.begin(), c.stand_ins.end(),
              [](const StandIn& a, const StandIn& b) { return a.vertex_id < b.vertex_id; });
    c.X = map_vertices(d.X, old_to_new);
    return c;
}

KernelResult from_compressed(const Instance& inst, Compressed c, std::vector<TraceEntry> trace) {
    KernelResult r;
    r.status = Status::Reduced;
    r.instance = inst;
    r.instance.graph = std::move(c.graph);
    r.instance.labels.clear();
    r.instance.stand_ins = std::move(c.stand_ins);
    r.instance.witness.vertices = c.X;
    r.instance.witness.ell = static_cast<int>(c.X.size());
    r.vertex_map = std::move(c.vertex_map);
    r.trace = std::move(trace);
    finalize(r, inst);
    return r;
}

std::vector<int> dropped_vertices(const ClusterDecomposition& d, const std::vector<char>& keep) {
    std::vector<int> out;
    for (std::size_t c = 0; c < d.cliques.size(); ++c)
        if (!keep[c]) out.insert(out.end(), d.cliques[c].begin(), d.cliques[c].end());
    std::sort(out.begin(), out.end());
    return out;
}

void audit_marking(const ClusterDecomposition& d) {
    const std::int64_t ell = static_cast<std::int64_t>(d.X.size());
    const std::int64_t per = ell * (2 * ell + 1) + binom2(ell) * (2 * ell + 1);
    for (auto& m : d.marked)
        if (static_cast<std::int64_t>(m.size()) > per || static_cast<std::int64_t>(m.size()) > (ell + 1) * (ell + 1) * (ell + 1))
            throw std::logic_error("marked set exceeds its bound");
}

// ---- exhaustive cycle assembly ----

class CycleSearch {
public:
    CycleSearch(const Graph& g, const ClusterDecomposition& d, const std::vector<std::int64_t>& w, std::int64_t k)
        : d_(d), w_(w), k_(k) {
        ell_ = static_cast<int>(d.X.size());
        std::vector<int> xi(g.n, -1);
        for (int i = 0; i < ell_; ++i) xi[d.X[i]] = i;
        xadj_.assign(ell_, std::vector<char>(ell_, 0));
        for (auto [a, b] : g.edges)
            if (xi[a] >= 0 && xi[b] >= 0) xadj_[xi[a]][xi[b]] = xadj_[xi[b]][xi[a]] = 1;
        auto nb = clique_neighbours(g, d);
        // X-neighbourhood of each marked vertex, by X index
        std::map<int, std::vector<char>> touch;
        for (std::size_t c = 0; c < d.cliques.size(); ++c) {
            weight_.push_back(clique_weight(d.cliques[c], w));
            for (int v : d.marked[c]) touch[v].assign(ell_, 0);
            for (int i = 0; i < ell_; ++i)
                for (int v : nb[c][i])
                    if (touch.count(v)) touch[v][i] = 1;
        }
        opts_.assign(ell_, std::vector<std::vector<Option>>(ell_));
        for (int i = 0; i < ell_; ++i)
            for (int j = 0; j < ell_; ++j) {
                auto& o = opts_[i][j];
                if (i != j && xadj_[i][j]) o.push_back({Option::Direct, -1, -1, -1});
                for (std::size_t c = 0; c < d.cliques.size(); ++c) {
                    const auto& M = d.marked[c];
                    for (int p : M)
                        if (i != j && touch[p][i] && touch[p][j]) o.push_back({Option::Single, static_cast<int>(c), p, -1});
                    for (int p : M)
                        for (int q : M)
                            if (p != q && touch[p][i] && touch[q][j])
                                o.push_back({Option::Pair, static_cast<int>(c), p, q});
                }
            }
        used_.assign(g.n, 0);
        pq_.assign(d.cliques.size(), 0);
        usedw_.assign(d.cliques.size(), 0);
    }

    bool run() {
        inx_.assign(ell_, 0);
        for (int first = 0; first < ell_ && !found_; ++first) {
            first_ = first;
            inx_[first] = 1;
            dfs(first, 1, false);
            inx_[first] = 0;
        }
        return found_;
    }

private:
    struct Option {
        enum Kind { Direct, Single, Pair } kind;
        int clique, p, q;
    };

    std::int64_t contrib(int c) const { return pq_[c] > 0 ? weight_[c] : usedw_[c]; }

    void apply(const Option& o, int sign) {
        if (o.kind == Option::Direct) return;
        total_ -= contrib(o.clique);
        if (o.kind == Option::Single) {
            used_[o.p] = sign > 0;
            usedw_[o.clique] += sign * weight_of(w_, o.p);
        } else {
            used_[o.p] = used_[o.q] = sign > 0;
            usedw_[o.clique] += sign * (weight_of(w_, o.p) + weight_of(w_, o.q));
            pq_[o.clique] += sign;
        }
        total_ += contrib(o.clique);
    }

    bool free(const Option& o) const {
        if (o.kind == Option::Direct) return true;
        if (used_[o.p]) return false;
        return o.kind != Option::Pair || !used_[o.q];
    }

    void dfs(int cur, int t, bool first_direct) {
        if (found_) return;
        // close the cycle back to x_1
        for (const Option& o : opts_[cur][first_]) {
            if (t == 1 && o.kind != Option::Pair) continue;
            if (t == 2 && o.kind == Option::Direct && first_direct) continue;
            if (!free(o)) continue;
            apply(o, +1);
            if (t + total_ >= k_) found_ = true;
            apply(o, -1);
            if (found_) return;
        }
        for (int nx = first_ + 1; nx < ell_; ++nx) {
            if (inx_[nx]) continue;
            for (const Option& o : opts_[cur][nx]) {
                if (!free(o)) continue;
                apply(o, +1);
                inx_[nx] = 1;
                dfs(nx, t + 1, t == 1 ? o.kind == Option::Direct : first_direct);
                inx_[nx] = 0;
                apply(o, -1);
                if (found_) return;
            }
        }
    }

    const ClusterDecomposition& d_;
    const std::vector<std::int64_t>& w_;
    std::int64_t k_;
    int ell_ = 0, first_ = 0;
    std::vector<std::vector<char>> xadj_;
    std::vector<std::vector<std::vector<Option>>> opts_;
    std::vector<std::int64_t> weight_, usedw_;
    std::vector<int> pq_;
    std::vector<char> used_, inx_;
    std::int64_t total_ = 0;
    bool found_ = false;
};

// ---- single reduction passes ------------------------------------------------

KernelResult long_cycle_step(const Instance& inst, const ClusterConfig& cfg) {
    require_cluster_witness(inst);
    const Graph& g = inst.graph;
    const std::int64_t k = *inst.k;
    const auto w = vertex_weights(inst);
    const int ell = static_cast<int>(inst.witness.vertices.size());
    std::vector<TraceEntry> trace;
    ClusterDecomposition d = decompose_cluster(g, inst.witness.vertices);
    CliqueMarking cm = mark_cliques(g, d, k, w);
    if (cm.trivially_yes) {
        trace.push_back({"large-clique-yes", {}, {}, cm.reason});
        return solved(inst, true, std::move(trace));
    }
    auto gone = dropped_vertices(d, cm.keep);
    if (!gone.empty()) trace.push_back({"delete-unmarked-cliques", gone, {}, ""});
    ClusterDecomposition kept = restrict_cliques(d, cm.keep, g.n);
    if (static_cast<std::int64_t>(kept.cliques.size()) > 2 * (ell + 1) * binom2(ell))
        throw std::logic_error("clique count exceeds its bound");

    std::int64_t total = 0;
    for (int x : kept.X) total += weight_of(w, x);
    for (auto& K : kept.cliques) total += clique_weight(K, w);
    const std::int64_t S = cfg.threshold ? *cfg.threshold : cluster_threshold(ell);
    if (ell <= cfg.ell_cap && total > S) {
        bool yes = fpt_long_cycle_cluster(inst, cfg.ell_cap);
        trace.push_back({"solve-by-enumeration", {}, {}, "weighted size " + std::to_string(total) +
                                                             " exceeds " + std::to_string(S)});
        return solved(inst, yes, std::move(trace));
    }
    mark_clique_vertices(g, kept);
    audit_marking(kept);
    Compressed c = compress(inst, kept, w, true);
    trace.push_back({"compress-unmarked", {}, {}, std::to_string(c.stand_ins.size()) + " stand-ins"});
    return from_compressed(inst, std::move(c), std::move(trace));
}

// Hamiltonian cycle: target is the vertex count, unmarked remainders become one plain vertex.
KernelResult ham_cycle_step(const Instance& inst) {
    require_cluster_witness(inst);
    if (!inst.stand_ins.empty()) throw InputError("hamiltonian instances carry no stand-ins");
    const Graph& g = inst.graph;
    std::vector<TraceEntry> trace;
    if (g.n <= 3) {
        trace.push_back({"solve-small", {}, {}, ""});
        Instance probe = inst;
        return solved(inst, decide(probe) == Answer::Yes, std::move(trace));
    }
    ClusterDecomposition d = decompose_cluster(g, inst.witness.vertices);
    CliqueMarking cm = mark_cliques(g, d, g.n);
    if (cm.trivially_yes) {
        trace.push_back({"large-clique-yes", {}, {}, cm.reason});
        return solved(inst, true, std::move(trace));
    }
    auto gone = dropped_vertices(d, cm.keep);
    if (!gone.empty()) {
        // a spanning cycle never needs an unmarked clique, so none may be missing
        trace.push_back({"delete-unmarked-cliques", gone, {}, "a spanning cycle cannot miss them"});
        return solved(inst, false, std::move(trace));
    }
    mark_clique_vertices(g, d);
    audit_marking(d);
    Compressed c = compress(inst, d, {}, false);
    trace.push_back({"merge-unmarked", {}, {}, ""});
    return from_compressed(inst, std::move(c), std::move(trace));
}

// Wrap with a universal vertex, run `inner` on the cycle version, then drop the vertex.
template <class Inner>
KernelResult universal_wrap(const Instance& inst, Problem cycle_problem, Inner inner) {
    const Graph& g = inst.graph;
    Instance w = inst;
    w.problem = cycle_problem;
    const int u = g.n;
    w.graph.n += 1;
    for (int v = 0; v < g.n; ++v) w.graph.edges.push_back({v, u});
    if (w.k) w.k = *w.k + 1;
    w.witness.vertices.push_back(u);
    w.witness.ell += 1;
    std::vector<TraceEntry> trace{{"add-universal-vertex", {u}, {}, ""}};
    KernelResult c = inner(w);
    trace.insert(trace.end(), c.trace.begin(), c.trace.end());
    if (c.status != Status::Reduced) return solved(inst, c.status == Status::SolvedYes, std::move(trace));
    std::vector<char> drop(c.instance.graph.n, 0);
    int nu = -1;
    for (int v = 0; v < c.instance.graph.n; ++v)
        if (c.vertex_map[v] == u) nu = v;
    drop[nu] = 1;
    auto [h, map] = remove_vertices(c.instance.graph, drop);
    KernelResult r;
    r.status = Status::Reduced;
    r.instance = c.instance;
    r.instance.problem = inst.problem;
    r.instance.graph = h;
    r.instance.k = inst.k ? std::optional<std::int64_t>(*c.instance.k - 1) : std::nullopt;
    r.instance.witness.vertices = map_vertices(c.instance.witness.vertices, map);
    r.instance.witness.ell = static_cast<int>(r.instance.witness.vertices.size());
    for (auto& si : r.instance.stand_ins) si.vertex_id = map[si.vertex_id];
    r.trace = std::move(trace);
    r.trace.push_back({"remove-universal-vertex", {u}, {}, ""});
    r.vertex_map.assign(h.n, -1);
    for (int v = 0; v < c.instance.graph.n; ++v)
        if (map[v] >= 0) r.vertex_map[map[v]] = c.vertex_map[v];
    finalize(r, inst);
    return r;
}

KernelResult disjoint_paths_step(const Instance& inst) {
    require_cluster_witness(inst);
    if (!inst.stand_ins.empty()) throw InputError("disjoint-paths instances carry no stand-ins");
    const Graph& g0 = inst.graph;
    std::vector<TraceEntry> trace;
    ClusterDecomposition d0 = decompose_cluster(g0, inst.witness.vertices);

    // requests inside one clique are served by their own edge
    std::vector<char> drop(g0.n, 0);
    std::vector<Edge> rest;
    std::vector<int> served;
    for (auto [s, t] : inst.pairs) {
        if (d0.clique_of[s] >= 0 && d0.clique_of[s] == d0.clique_of[t]) {
            drop[s] = drop[t] = 1;
            served.push_back(s);
            served.push_back(t);
        } else {
            rest.push_back({s, t});
        }
    }
    if (!served.empty()) trace.push_back({"serve-same-clique-pairs", served, {}, ""});
    if (rest.empty()) return solved(inst, true, std::move(trace));
    if (rest.size() > inst.witness.vertices.size()) {
        trace.push_back({"too-many-requests", {}, {}, "each remaining request needs a modulator vertex"});
        return solved(inst, false, std::move(trace));
    }
    auto [g, m0] = remove_vertices(g0, drop);
    std::set<int> Xs;
    for (int x : inst.witness.vertices) Xs.insert(m0[x]);
    std::vector<int> folded;
    for (auto& [s, t] : rest) {
        s = m0[s];
        t = m0[t];
        for (int v : {s, t})
            if (Xs.insert(v).second) folded.push_back(v);
    }
    if (!folded.empty()) trace.push_back({"fold-terminals-into-modulator", folded, {}, ""});
    std::vector<int> X(Xs.begin(), Xs.end());
    ClusterDecomposition d = decompose_cluster(g, X);
    auto keep = mark_cliques_per_pair(g, d, static_cast<int>(X.size()) + 1);
    auto gone = dropped_vertices(d, keep);
    if (!gone.empty()) trace.push_back({"delete-unmarked-cliques", gone, {}, ""});
    ClusterDecomposition kd = restrict_cliques(d, keep, g.n);
    mark_clique_vertices(g, kd);
    audit_marking(kd);
    std::vector<char> out(g.n, 1);
    for (int x : X) out[x] = 0;
    for (auto& M : kd.marked)
        for (int v : M) out[v] = 0;
    std::vector<int> unmarked;
    for (int v = 0; v < g.n; ++v)
        if (out[v] && std::find(gone.begin(), gone.end(), v) == gone.end()) unmarked.push_back(v);
    if (!unmarked.empty()) trace.push_back({"drop-unmarked-vertices", unmarked, {}, ""});
    auto [h, m1] = remove_vertices(g, out);

    KernelResult r;
    r.status = Status::Reduced;
    r.instance = inst;
    r.instance.graph = h;
    r.instance.pairs.clear();
    for (auto [s, t] : rest) r.instance.pairs.push_back({m1[s], m1[t]});
    r.instance.k = static_cast<std::int64_t>(r.instance.pairs.size());
    r.instance.witness.vertices = map_vertices(X, m1);
    r.instance.witness.ell = static_cast<int>(r.instance.witness.vertices.size());
    r.vertex_map.assign(h.n, -1);
    for (int v = 0; v < g0.n; ++v)
        if (m0[v] >= 0 && m1[m0[v]] >= 0) r.vertex_map[m1[m0[v]]] = v;
    r.trace = std::move(trace);
    finalize(r, inst);
    return r;
}

KernelResult disjoint_cycles_step(const Instance& inst) {
    require_cluster_witness(inst);
    if (!inst.stand_ins.empty()) throw InputError("disjoint-cycles instances carry no stand-ins");
    const Graph& g = inst.graph;
    std::int64_t k = *inst.k;
    std::vector<TraceEntry> trace;
    if (k <= 0) return solved(inst, true, {{"target-reached", {}, {}, ""}});
    if (3 * k > g.n) return solved(inst, false, {{"too-few-vertices", {}, {}, "each cycle needs three vertices"}});

    ClusterDecomposition d = decompose_cluster(g, inst.witness.vertices);
    const int ell = static_cast<int>(d.X.size());
    auto nb = clique_neighbours(g, d);
    std::vector<char> drop(g.n, 0);
    std::int64_t taken = 0;

    // cliques away from X only ever hold triangles
    std::vector<int> lonely;
    for (std::size_t c = 0; c < d.cliques.size(); ++c) {
        bool touched = false;
        for (int i = 0; i < ell; ++i) touched = touched || !nb[c][i].empty();
        if (touched) continue;
        for (int v : d.cliques[c]) drop[v] = 1, lonely.push_back(v);
        taken += static_cast<std::int64_t>(d.cliques[c].size()) / 3;
    }
    if (!lonely.empty()) trace.push_back({"count-isolated-cliques", lonely, {}, ""});

    mark_clique_vertices(g, d);
    audit_marking(d);
    std::vector<int> triples;
    for (std::size_t c = 0; c < d.cliques.size(); ++c) {
        if (drop[d.cliques[c][0]]) continue;
        std::vector<int> un;
        for (int v : d.cliques[c])
            if (!std::binary_search(d.marked[c].begin(), d.marked[c].end(), v)) un.push_back(v);
        const std::size_t t = un.size() / 3;
        for (std::size_t i = un.size() - 3 * t; i < un.size(); ++i) drop[un[i]] = 1, triples.push_back(un[i]);
        taken += static_cast<std::int64_t>(t);
    }
    if (!triples.empty()) trace.push_back({"remove-unmarked-triples", triples, {}, ""});

    // cliques with identical attachment to X are interchangeable; ell + 1 of each kind suffice
    std::vector<int> xi(g.n, -1);
    for (int i = 0; i < ell; ++i) xi[d.X[i]] = i;
    Adjacency adj(g);
    std::map<std::vector<std::vector<int>>, int> seen;
    std::vector<int> redundant;
    for (std::size_t c = 0; c < d.cliques.size(); ++c) {
        std::vector<int> alive;
        for (int v : d.cliques[c])
            if (!drop[v]) alive.push_back(v);
        if (alive.empty()) continue;
        std::vector<std::vector<int>> type;
        for (int v : alive) {
            std::vector<int> nx;
            for (int u : adj.out[v])
                if (xi[u] >= 0) nx.push_back(xi[u]);
            std::sort(nx.begin(), nx.end());
            nx.erase(std::unique(nx.begin(), nx.end()), nx.end());
            type.push_back(nx);
        }
        std::sort(type.begin(), type.end());
        if (++seen[type] <= ell + 1) continue;
        for (int v : alive) drop[v] = 1, redundant.push_back(v);
        taken += static_cast<std::int64_t>(alive.size()) / 3;
    }
    if (!redundant.empty()) trace.push_back({"drop-interchangeable-cliques", redundant, {}, ""});

    k -= taken;
    if (k <= 0) {
        trace.push_back({"target-reached", {}, {}, ""});
        return solved(inst, true, std::move(trace));
    }
    auto [h, map] = remove_vertices(g, drop);
    if (3 * k > h.n) {
        trace.push_back({"too-few-vertices", {}, {}, ""});
        return solved(inst, false, std::move(trace));
    }
    KernelResult r;
    r.status = Status::Reduced;
    r.instance = inst;
    r.instance.graph = h;
    r.instance.k = k;
    r.instance.witness.vertices = map_vertices(d.X, map);
    r.instance.witness.ell = static_cast<int>(r.instance.witness.vertices.size());
    r.vertex_map.assign(h.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (map[v] >= 0) r.vertex_map[map[v]] = v;
    r.trace = std::move(trace);
    finalize(r, inst);
    return r;
}

}  // namespace

ClusterDecomposition decompose_cluster(const Graph& g, const std::vector<int>& Xin) {
    if (g.directed) throw InputError("cluster decomposition needs an undirected graph");
    ClusterDecomposition d;
    d.X = Xin;
    std::sort(d.X.begin(), d.X.end());
    std::vector<char> inX(g.n, 0);
    for (int x : d.X) {
        if (x < 0 || x >= g.n || inX[x]) throw InputError("invalid modulator vertex");
        inX[x] = 1;
    }
    std::vector<std::set<int>> nbr(g.n);
    for (auto [a, b] : g.edges) {
        if (a == b) throw InputError("self-loop in cluster instance");
        if (!inX[a] && !inX[b]) {
            nbr[a].insert(b);
            nbr[b].insert(a);
        }
    }
    d.clique_of.assign(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (inX[s] || d.clique_of[s] >= 0) continue;
        const int id = static_cast<int>(d.cliques.size());
        std::vector<int> comp{s};
        d.clique_of[s] = id;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int u : nbr[comp[i]])
                if (d.clique_of[u] < 0) {
                    d.clique_of[u] = id;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        for (int v : comp)
            if (nbr[v].size() + 1 != comp.size())
                throw InputError("G - X is not a cluster graph (component of vertex " + std::to_string(s) + ")");
        d.cliques.push_back(std::move(comp));
    }
    return d;
}

std::vector<char> mark_cliques_per_pair(const Graph& g, const ClusterDecomposition& d, int quota,
                                        const std::vector<std::int64_t>& weights) {
    const int ell = static_cast<int>(d.X.size());
    const std::size_t C = d.cliques.size();
    auto nb = clique_neighbours(g, d);
    std::vector<std::int64_t> W(C);
    for (std::size_t c = 0; c < C; ++c) W[c] = clique_weight(d.cliques[c], weights);
    std::vector<std::size_t> order(C);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return W[a] > W[b]; });
    std::vector<char> keep(C, 0);
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j) {
            int shared = 0, distinct = 0;
            for (std::size_t c : order) {
                if (shared < quota && !intersect(nb[c][i], nb[c][j]).empty()) {
                    keep[c] = 1;
                    ++shared;
                }
                if (distinct < quota && has_distinct_pq(nb[c][i], nb[c][j])) {
                    keep[c] = 1;
                    ++distinct;
                }
            }
        }
    return keep;
}

CliqueMarking mark_cliques(const Graph& g, const ClusterDecomposition& d, std::int64_t k,
                           const std::vector<std::int64_t>& weights) {
    CliqueMarking m;
    const int ell = static_cast<int>(d.X.size());
    auto nb = clique_neighbours(g, d);
    for (std::size_t c = 0; c < d.cliques.size(); ++c) {
        const std::int64_t W = clique_weight(d.cliques[c], weights);
        if (W >= std::max<std::int64_t>(k, 3)) {
            m.trivially_yes = true;
            m.reason = "clique " + std::to_string(c) + " has " + std::to_string(W) + " vertices";
            return m;
        }
        for (int i = 0; i < ell; ++i)
            if (nb[c][i].size() >= 2 && W >= k - 1) {
                m.trivially_yes = true;
                m.reason = "vertex " + std::to_string(d.X[i]) + " has two neighbours in clique " + std::to_string(c);
                return m;
            }
    }
    m.keep = mark_cliques_per_pair(g, d, ell + 1, weights);
    return m;
}

void mark_clique_vertices(const Graph& g, ClusterDecomposition& d) {
    const int ell = static_cast<int>(d.X.size());
    const std::size_t quota = static_cast<std::size_t>(2 * ell + 1);
    auto nb = clique_neighbours(g, d);
    d.marked.assign(d.cliques.size(), {});
    for (std::size_t c = 0; c < d.cliques.size(); ++c) {
        std::set<int> M;
        for (int i = 0; i < ell; ++i) {
            for (std::size_t a = 0; a < nb[c][i].size() && a < quota; ++a) M.insert(nb[c][i][a]);
            for (int j = i + 1; j < ell; ++j) {
                auto sh = intersect(nb[c][i], nb[c][j]);
                for (std::size_t a = 0; a < sh.size() && a < quota; ++a) M.insert(sh[a]);
            }
        }
        d.marked[c].assign(M.begin(), M.end());
    }
}

Graph restrict_entries(const Graph& g, const ClusterDecomposition& d) {
    std::vector<char> inX(g.n, 0), marked(g.n, 0);
    for (int x : d.X) inX[x] = 1;
    for (auto& M : d.marked)
        for (int v : M) marked[v] = 1;
    Graph h = g;
    h.edges.clear();
    for (auto [a, b] : g.edges) {
        bool bad = (inX[a] && !inX[b] && !marked[b]) || (inX[b] && !inX[a] && !marked[a]);
        if (!bad) h.edges.push_back({a, b});
    }
    return h;
}

std::int64_t cluster_threshold(int ell) {
    if (ell <= 1) return 1;
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    std::int64_t r = 1;
    for (int i = 0; i < 10 * ell; ++i) {
        if (r > cap / ell) return cap;
        r *= ell;
    }
    return r;
}

bool fpt_long_cycle_cluster(const Instance& inst, int ell_cap) {
    require_cluster_witness(inst);
    const int ell = static_cast<int>(inst.witness.vertices.size());
    if (ell > ell_cap)
        throw InputError("modulator of size " + std::to_string(ell) + " exceeds the enumeration cap " +
                         std::to_string(ell_cap));
    const Graph& g = inst.graph;
    const std::int64_t k = *inst.k;
    const auto w = vertex_weights(inst);
    ClusterDecomposition d = decompose_cluster(g, inst.witness.vertices);
    CliqueMarking cm = mark_cliques(g, d, k, w);
    if (cm.trivially_yes) return true;
    ClusterDecomposition kept = restrict_cliques(d, cm.keep, g.n);
    mark_clique_vertices(g, kept);
    return CycleSearch(g, kept, w, k).run();
}

KernelResult kernelize_long_cycle_cluster(const Instance& inst, const ClusterConfig& cfg) {
    return to_fixpoint(inst, [&](const Instance& i) { return long_cycle_step(i, cfg); });
}

KernelResult kernelize_long_path_cluster(const Instance& inst, const ClusterConfig& cfg) {
    return to_fixpoint(inst, [&](const Instance& i) {
        // paths on one or two vertices have no cycle counterpart
        if (*i.k <= 2) return solved(i, decide(i) == Answer::Yes, {{"solve-small", {}, {}, ""}});
        return universal_wrap(i, Problem::LongCycle, [&](const Instance& w) { return long_cycle_step(w, cfg); });
    });
}

KernelResult kernelize_hamiltonian_cluster(const Instance& inst) {
    if (inst.problem == Problem::HamiltonianCycle) return to_fixpoint(inst, ham_cycle_step);
    if (inst.problem != Problem::HamiltonianPath) throw InputError("expected a Hamiltonian problem");
    return to_fixpoint(inst, [](const Instance& i) {
        if (i.graph.n <= 3) {
            return solved(i, decide(i) == Answer::Yes, {{"solve-small", {}, {}, ""}});
        }
        return universal_wrap(i, Problem::HamiltonianCycle, ham_cycle_step);
    });
}

KernelResult kernelize_disjoint_cluster(const Instance& inst) {
    if (inst.problem == Problem::DisjointPaths) return to_fixpoint(inst, disjoint_paths_step);
    if (inst.problem == Problem::DisjointCycles) return to_fixpoint(inst, disjoint_cycles_step);
    throw InputError("expected disjoint-paths or disjoint-cycles");
}

KernelResult kernelize_cluster(const Instance& inst, const ClusterConfig& cfg) {
    switch (inst.problem) {
        case Problem::LongCycle: return kernelize_long_cycle_cluster(inst, cfg);
        case Problem::LongPath: return kernelize_long_path_cluster(inst, cfg);
        case Problem::HamiltonianCycle:
        case Problem::HamiltonianPath: return kernelize_hamiltonian_cluster(inst);
        case Problem::DisjointPaths:
        case Problem::DisjointCycles: return kernelize_disjoint_cluster(inst);
        default: throw InputError("no cluster kernel for " + to_string(inst.problem));
    }
}

}  // namespace kernelcut
