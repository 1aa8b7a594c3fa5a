#include "kernelcut/maxleaf.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace kernelcut {

namespace {

constexpr std::int64_t NEG = std::numeric_limits<std::int64_t>::min() / 4;

Edge norm(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

std::int64_t expanded_size(const Instance& inst) {
    std::int64_t n = inst.graph.n;
    for (auto L : inst.labels) n += L;
    return n;
}

void require_maxleaf(const Instance& inst) {
    if (inst.witness.kind != WitnessKind::MaxLeafBound) throw InputError("max-leaf kernel needs a max-leaf-bound witness");
    if (inst.graph.directed) throw InputError("max-leaf kernels work on undirected graphs");
    if (!inst.stand_ins.empty()) throw InputError("stand-ins are not meaningful under max-leaf parameterization");
}

std::vector<int> multi_degrees(const Graph& g) {
    std::vector<int> d(g.n, 0);
    for (auto [u, v] : g.edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

int count_branch(const Graph& g) {
    auto d = multi_degrees(g);
    return static_cast<int>(std::count_if(d.begin(), d.end(), [](int x) { return x >= 3; }));
}

// Renumber the kept vertices in ascending order and sort edges canonically.
struct Canon {
    Graph g;
    std::vector<std::int64_t> labels;
    std::vector<int> old_to_new, new_to_old;
};

Canon canonical(int n, const std::vector<char>& alive, const std::vector<std::tuple<int, int, std::int64_t>>& edges,
                bool multigraph, bool with_labels) {
    Canon c;
    c.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            c.old_to_new[v] = static_cast<int>(c.new_to_old.size());
            c.new_to_old.push_back(v);
        }
    std::vector<std::tuple<int, int, std::int64_t>> es;
    for (auto [u, v, L] : edges) {
        int a = c.old_to_new[u], b = c.old_to_new[v];
        es.push_back({std::min(a, b), std::max(a, b), L});
    }
    std::sort(es.begin(), es.end());
    c.g.n = static_cast<int>(c.new_to_old.size());
    c.g.multigraph = multigraph;
    for (auto [a, b, L] : es) {
        c.g.edges.push_back({a, b});
        if (with_labels) c.labels.push_back(L);
    }
    return c;
}

}  // namespace

std::int64_t maxleaf_threshold(int ell) {
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    if (ell <= 0) return 0;
    if (4LL * ell >= 50) return cap;
    std::int64_t p = std::int64_t{1} << (4 * ell);
    std::int64_t sq = 16LL * ell * ell;
    if (p > cap / sq) return cap;
    return p * sq;
}

ContractedGraph contract_paths(const Graph& g, ParallelMode mode, int ell) {
    if (g.directed || g.multigraph) throw InputError("contract_paths expects an undirected simple graph");
    auto dec = degree2_path_decomposition(g);
    ContractedGraph c;
    std::vector<int> idx(g.n, -1);
    for (int b : dec.branch) {
        idx[b] = static_cast<int>(c.branch.size());
        c.branch.push_back(b);
    }
    std::map<Edge, std::vector<std::int64_t>> par;
    for (auto& p : dec.paths) {
        std::int64_t L = static_cast<std::int64_t>(p.internal.size());
        if (p.a == p.b) {
            c.loop_cycles.push_back(1 + L);
            continue;
        }
        par[norm({idx[p.a], idx[p.b]})].push_back(L);
    }
    for (auto& cy : dec.cycles) c.isolated_cycles.push_back(static_cast<std::int64_t>(cy.size()));
    c.graph.n = static_cast<int>(c.branch.size());
    c.graph.multigraph = true;
    for (auto& [e, ls] : par) {
        std::sort(ls.rbegin(), ls.rend());
        c.max_parallel = std::max(c.max_parallel, static_cast<int>(ls.size()));
        if (mode == ParallelMode::LongestOnly) {
            if (ls.size() >= 2) c.best_two_cycle = std::max(c.best_two_cycle, 2 + ls[0] + ls[1]);
            c.graph.edges.push_back(e);
            c.labels.push_back(ls[0]);
        } else {
            if (static_cast<int>(ls.size()) > ell) c.violated = true;
            for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
                c.graph.edges.push_back(e);
                c.labels.push_back(*it);
            }
        }
    }
    return c;
}

std::int64_t held_karp_longest_cycle(const Graph& m, const std::vector<std::int64_t>& labels,
                                     std::optional<std::int64_t> two_cycle_best, int cap) {
    const int n = m.n;
    if (n > cap) throw InputError("held_karp_longest_cycle: vertex cap exceeded (" + std::to_string(n) + " > " +
                                  std::to_string(cap) + ")");
    std::int64_t best = two_cycle_best.value_or(0);
    std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, -1));
    std::map<Edge, std::vector<std::int64_t>> par;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        Edge e = norm(m.edges[i]);
        std::int64_t L = labels.empty() ? 0 : labels[i];
        par[e].push_back(L);
        w[e.first][e.second] = w[e.second][e.first] = std::max(w[e.first][e.second], L);
    }
    // two-vertex cycles are settled here, never by the DP
    for (auto& [e, ls] : par)
        if (ls.size() >= 2) {
            std::sort(ls.rbegin(), ls.rend());
            best = std::max(best, 2 + ls[0] + ls[1]);
        }
    for (int s = 0; s + 2 < n; ++s) {
        // vertices above s, re-indexed 0..r-1
        std::vector<int> up;
        for (int v = s + 1; v < n; ++v) up.push_back(v);
        const int r = static_cast<int>(up.size());
        const std::size_t S = std::size_t{1} << r;
        std::vector<std::int64_t> dp(S * r, NEG);
        for (int i = 0; i < r; ++i)
            if (w[s][up[i]] >= 0) dp[(std::size_t{1} << i) * r + i] = 2 + w[s][up[i]];
        for (std::size_t mask = 1; mask < S; ++mask) {
            for (int i = 0; i < r; ++i) {
                std::int64_t cur = dp[mask * r + i];
                if (cur == NEG) continue;
                if (std::popcount(mask) >= 2 && w[up[i]][s] >= 0) best = std::max(best, cur + w[up[i]][s]);
                for (int j = 0; j < r; ++j) {
                    if (mask >> j & 1) continue;
                    std::int64_t L = w[up[i]][up[j]];
                    if (L < 0) continue;
                    std::size_t nm = mask | (std::size_t{1} << j);
                    dp[nm * r + j] = std::max(dp[nm * r + j], cur + 1 + L);
                }
            }
        }
    }
    return best;
}

KernelResult solve_long_cycle_maxleaf(const Instance& inst, const MaxleafConfig& cfg) {
    require_maxleaf(inst);
    if (inst.problem != Problem::LongCycle) throw InputError("solve_long_cycle_maxleaf handles long-cycle only");
    const int ell = inst.witness.ell;
    const std::int64_t k = *inst.k;
    Graph g = inst.labeled() ? expand_labels(inst.graph, inst.labels) : inst.graph;
    g.multigraph = false;
    std::vector<TraceEntry> trace;
    int nb = count_branch(g);
    if (nb > 4 * ell - 2) {
        trace.push_back({"promise-branch-count", {}, {}, std::to_string(nb) + " branch vertices > 4*ell-2"});
        return solved(inst, false, std::move(trace));
    }
    ContractedGraph c = contract_paths(g, ParallelMode::LongestOnly);
    std::int64_t best = held_karp_longest_cycle(c.graph, c.labels, c.best_two_cycle, cfg.hk_cap);
    for (auto x : c.isolated_cycles) best = std::max(best, x);
    for (auto x : c.loop_cycles) best = std::max(best, x);
    trace.push_back({"held-karp", {}, {}, "longest cycle " + std::to_string(best)});
    return solved(inst, best > 0 && best >= k, std::move(trace));
}

KernelResult kernelize_long_cycle_maxleaf(const Instance& inst, const MaxleafConfig& cfg) {
    require_maxleaf(inst);
    if (inst.problem != Problem::LongCycle) throw InputError("kernelize_long_cycle_maxleaf handles long-cycle only");
    const int ell = inst.witness.ell;
    const std::int64_t k = *inst.k;
    const Graph& g = inst.graph;
    std::vector<TraceEntry> trace;
    const std::int64_t N = expanded_size(inst);
    if (k > N) {
        trace.push_back({"k-exceeds-vertex-count", {}, {}, ""});
        return solved(inst, false, std::move(trace));
    }
    int nb = count_branch(g);
    if (nb > 4 * ell) {
        trace.push_back({"promise-branch-count", {}, {}, std::to_string(nb) + " branch vertices > 4*ell"});
        return solved(inst, false, std::move(trace));
    }
    const std::int64_t T = cfg.threshold.value_or(maxleaf_threshold(ell));
    if (N > T) {
        KernelResult r = solve_long_cycle_maxleaf(inst, cfg);
        r.trace.insert(r.trace.begin(), TraceEntry{"solve-large-instance", {}, {}, "n > T(ell)"});
        return r;
    }

    // Fixpoint on the labeled multigraph: drop degree <= 1, smooth degree 2.
    struct E {
        int u, v;
        std::int64_t L;
        bool alive;
    };
    std::vector<E> es;
    std::vector<std::vector<int>> inc(g.n);
    auto add = [&](int u, int v, std::int64_t L) {
        int id = static_cast<int>(es.size());
        es.push_back({u, v, L, true});
        inc[u].push_back(id);
        inc[v].push_back(id);
    };
    for (std::size_t i = 0; i < g.edges.size(); ++i) add(g.edges[i].first, g.edges[i].second, inst.label(i));
    std::vector<char> alive(g.n, 1);
    auto live_edges = [&](int v) {
        std::vector<int> out;
        for (int e : inc[v])
            if (es[e].alive) out.push_back(e);
        return out;
    };
    std::set<int> work;
    for (int v = 0; v < g.n; ++v) work.insert(v);
    std::int64_t candidate = 0;
    std::vector<int> deleted;
    while (!work.empty()) {
        int v = *work.begin();
        work.erase(work.begin());
        if (!alive[v]) continue;
        auto le = live_edges(v);
        if (le.size() >= 3) continue;
        alive[v] = 0;
        deleted.push_back(v);
        for (int e : le) es[e].alive = false;
        if (le.size() == 1) {
            work.insert(es[le[0]].u == v ? es[le[0]].v : es[le[0]].u);
        } else if (le.size() == 2) {
            int a = es[le[0]].u == v ? es[le[0]].v : es[le[0]].u;
            int b = es[le[1]].u == v ? es[le[1]].v : es[le[1]].u;
            std::int64_t l1 = es[le[0]].L, l2 = es[le[1]].L;
            if (a == b) {
                candidate = std::max(candidate, 2 + l1 + l2);
                work.insert(a);
            } else {
                add(a, b, l1 + l2 + 1);
            }
        }
    }
    std::sort(deleted.begin(), deleted.end());
    trace.push_back({"contract-degree-two", deleted, {}, ""});
    if (candidate >= k && candidate > 0) {
        trace.push_back({"two-vertex-cycle", {}, {}, "cycle of " + std::to_string(candidate) + " vertices"});
        return solved(inst, true, std::move(trace));
    }
    std::vector<std::tuple<int, int, std::int64_t>> kept;
    std::map<Edge, int> mult;
    for (auto& e : es)
        if (e.alive) {
            kept.push_back({e.u, e.v, e.L});
            ++mult[norm({e.u, e.v})];
        }
    for (auto& [e, c] : mult)
        if (c > ell) {
            trace.push_back({"too-many-parallel-paths", {e.first, e.second}, {}, std::to_string(c) + " > ell"});
            KernelResult r = unchanged(inst, std::move(trace));
            r.status = Status::PromiseViolated;
            return r;
        }
    Canon c = canonical(g.n, alive, kept, true, true);
    std::int64_t n_out = c.g.n;
    for (auto L : c.labels) n_out += L;
    if (c.g.n == 0 || k > n_out) {
        trace.push_back({"nothing-long-enough-left", {}, {}, ""});
        return solved(inst, false, std::move(trace));
    }
    KernelResult r;
    r.status = Status::Reduced;
    r.instance = inst;
    r.instance.graph = c.g;
    r.instance.labels = c.labels;
    r.trace = std::move(trace);
    r.vertex_map = c.new_to_old;
    finalize(r, inst);
    return r;
}

KernelResult reduce_degree2_single_internal(const Instance& inst) {
    require_maxleaf(inst);
    const bool hp = inst.problem == Problem::HamiltonianPath;
    if (!hp && inst.problem != Problem::DisjointCycles)
        throw InputError("reduce_degree2_single_internal handles hamiltonian-path and disjoint-cycles");
    if (inst.labeled() || inst.graph.multigraph) throw InputError("expected a simple unlabeled graph");
    const Graph& g = inst.graph;
    const int ell = inst.witness.ell;
    std::vector<TraceEntry> trace;
    int nb = count_branch(g);
    if (nb > 4 * ell - 2) {
        trace.push_back({"promise-branch-count", {}, {}, std::to_string(nb) + " branch vertices > 4*ell-2"});
        return solved(inst, false, std::move(trace));
    }
    std::vector<char> alive(g.n, 1);
    Graph work = g;
    std::vector<int> work_to_old(g.n);
    std::iota(work_to_old.begin(), work_to_old.end(), 0);
    if (!hp) {
        // 2-core: vertices of degree <= 1 lie on no cycle
        auto d = degrees(g);
        Adjacency adj(g);
        std::vector<int> st;
        for (int v = 0; v < g.n; ++v)
            if (d[v] <= 1) st.push_back(v);
        std::vector<int> gone;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            if (!alive[v]) continue;
            alive[v] = 0;
            gone.push_back(v);
            for (int w : adj.out[v])
                if (alive[w] && --d[w] <= 1) st.push_back(w);
        }
        std::sort(gone.begin(), gone.end());
        if (!gone.empty()) trace.push_back({"delete-outside-2-core", gone, {}, ""});
        std::vector<int> keep;
        for (int v = 0; v < g.n; ++v)
            if (alive[v]) keep.push_back(v);
        work = induced_subgraph(g, keep);
        work_to_old = keep;
    }
    auto dec = degree2_path_decomposition(work);
    std::vector<char> keepw(work.n, 1);
    std::vector<Edge> extra;
    std::vector<int> squeezed;
    auto drop = [&](int v) {
        keepw[v] = 0;
        squeezed.push_back(work_to_old[v]);
    };
    for (auto& p : dec.paths) {
        const auto& in = p.internal;
        if (p.a != p.b) {
            if (in.size() >= 2) {
                for (std::size_t i = 1; i < in.size(); ++i) drop(in[i]);
                extra.push_back({in[0], p.b});
            }
        } else if (in.size() >= 3) {
            for (std::size_t i = 2; i < in.size(); ++i) drop(in[i]);
            extra.push_back({in[1], p.a});
        }
    }
    for (auto& cy : dec.cycles)
        if (cy.size() >= 4) {
            for (std::size_t i = 3; i < cy.size(); ++i) drop(cy[i]);
            extra.push_back({cy[2], cy[0]});
        }
    if (hp) {
        for (auto& pd : dec.pendants)
            if (!pd.internal.empty()) {
                for (int x : pd.internal) drop(x);
                extra.push_back({pd.anchor, pd.leaf});
            }
        for (auto& fp : dec.free_paths)
            if (fp.size() >= 3) {
                for (std::size_t i = 1; i + 1 < fp.size(); ++i) drop(fp[i]);
                extra.push_back({fp.front(), fp.back()});
            }
    }
    std::sort(squeezed.begin(), squeezed.end());
    trace.push_back({"squeeze-degree-two-paths", squeezed, {}, ""});
    std::vector<std::tuple<int, int, std::int64_t>> edges;
    for (auto [u, v] : work.edges)
        if (keepw[u] && keepw[v]) edges.push_back({u, v, 0});
    for (auto [u, v] : extra) edges.push_back({u, v, 0});
    Canon c = canonical(work.n, keepw, edges, false, false);
    KernelResult r;
    r.status = Status::Reduced;
    r.instance = inst;
    r.instance.graph = c.g;
    r.trace = std::move(trace);
    r.vertex_map.resize(c.g.n);
    for (int v = 0; v < c.g.n; ++v) r.vertex_map[v] = work_to_old[c.new_to_old[v]];
    finalize(r, inst);
    return r;
}

KernelResult kernelize_disjoint_paths_maxleaf(const Instance& inst) {
    require_maxleaf(inst);
    if (inst.problem != Problem::DisjointPaths) throw InputError("expected disjoint-paths");
    if (inst.labeled() || inst.graph.multigraph) throw InputError("expected a simple unlabeled graph");
    const Graph& g = inst.graph;
    const int ell = inst.witness.ell;
    const int n = g.n;
    std::vector<TraceEntry> trace;
    auto d0 = degrees(g);
    std::int64_t L0 = 0, B0 = 0;
    for (int v = 0; v < n; ++v) {
        if (d0[v] == 1) ++L0;
        if (d0[v] >= 3) {
            ++B0;
            if (d0[v] > ell) {
                trace.push_back({"branch-degree-exceeds-ell", {v}, {}, ""});
                return solved(inst, false, std::move(trace));
            }
        }
    }
    if (L0 > ell) {
        trace.push_back({"too-many-leaves", {}, {}, std::to_string(L0) + " > ell"});
        return solved(inst, false, std::move(trace));
    }
    if (B0 > 4 * ell) {
        trace.push_back({"promise-branch-count", {}, {}, std::to_string(B0) + " > 4*ell"});
        return solved(inst, false, std::move(trace));
    }

    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> alive(n, 1);
    std::vector<int> partner(n, -1);
    struct Req {
        int s, t;
        bool alive;
    };
    std::vector<Req> reqs;
    std::vector<int> req_of(n, -1);
    auto add_req = [&](int s, int t) {
        int id = static_cast<int>(reqs.size());
        reqs.push_back({s, t, true});
        partner[s] = t;
        partner[t] = s;
        req_of[s] = req_of[t] = id;
    };
    for (auto [s, t] : inst.pairs) add_req(s, t);
    auto kill_req = [&](int id) {
        reqs[id].alive = false;
        partner[reqs[id].s] = partner[reqs[id].t] = -1;
        req_of[reqs[id].s] = req_of[reqs[id].t] = -1;
    };
    auto kill_vertex = [&](int v) {
        alive[v] = 0;
        for (int w : adj[v]) adj[w].erase(v);
        adj[v].clear();
    };
    auto deg = [&](int v) { return static_cast<int>(adj[v].size()); };
    auto is_term = [&](int v) { return partner[v] >= 0; };

    bool changed = true;
    while (changed) {
        changed = false;
        // (a) components without branch vertices are paths or cycles: decide them here
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || comp[v] >= 0) continue;
            std::vector<int> vs{v};
            comp[v] = nc;
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (int w : adj[vs[i]])
                    if (comp[w] < 0) {
                        comp[w] = nc;
                        vs.push_back(w);
                    }
            ++nc;
            bool branchy = std::any_of(vs.begin(), vs.end(), [&](int x) { return deg(x) >= 3; });
            if (branchy) continue;
            // order the component along its path or cycle
            int start = vs[0];
            bool cyc = true;
            for (int x : vs)
                if (deg(x) <= 1) {
                    start = x;
                    cyc = false;
                    break;
                }
            std::vector<int> order{start};
            int prev = -1, cur = start;
            while (true) {
                int nxt = -1;
                for (int w : adj[cur])
                    if (w != prev && w != start) {
                        nxt = w;
                        break;
                    }
                if (nxt < 0 || (cyc && std::find(order.begin(), order.end(), nxt) != order.end())) break;
                order.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            std::vector<int> pos(n, -1);
            for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
            std::vector<int> terms;
            for (int x : order)
                if (is_term(x)) {
                    if (pos[partner[x]] < 0) {
                        trace.push_back({"pair-across-components", {x, partner[x]}, {}, ""});
                        return solved(inst, false, std::move(trace));
                    }
                    terms.push_back(x);
                }
            bool ok = true;
            if (!cyc) {
                // the intervals of the pairs must be disjoint: each terminal's partner is adjacent in order
                for (std::size_t i = 0; i < terms.size(); i += 2)
                    if (i + 1 >= terms.size() || partner[terms[i]] != terms[i + 1]) ok = false;
            } else if (terms.size() > 2) {
                const std::size_t m = terms.size();
                for (std::size_t i = 0; i < m; ++i) {
                    int x = terms[i];
                    if (partner[x] != terms[(i + 1) % m] && partner[x] != terms[(i + m - 1) % m]) ok = false;
                }
            }
            if (!ok) {
                trace.push_back({"unroutable-path-or-cycle-component", order, {}, ""});
                return solved(inst, false, std::move(trace));
            }
            std::set<int> ids;
            for (int x : terms) ids.insert(req_of[x]);
            for (int id : ids) kill_req(id);
            for (int x : order) kill_vertex(x);
            std::vector<int> sorted = order;
            std::sort(sorted.begin(), sorted.end());
            trace.push_back({"solve-branchless-component", sorted, {}, ""});
            changed = true;
        }
        if (changed) continue;

        // (b) degree-two chains with at least five terminals
        std::vector<char> seen(n, 0);
        for (int a = 0; a < n && !changed; ++a) {
            if (!alive[a] || deg(a) == 2) continue;
            for (int first : std::vector<int>(adj[a].begin(), adj[a].end())) {
                if (deg(first) != 2 || seen[first]) continue;
                std::vector<int> chain;
                int prev = a, cur = first;
                while (deg(cur) == 2 && !seen[cur]) {
                    seen[cur] = 1;
                    chain.push_back(cur);
                    int nxt = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
                    prev = cur;
                    cur = nxt;
                }
                std::vector<int> tpos;
                for (std::size_t i = 0; i < chain.size(); ++i)
                    if (is_term(chain[i])) tpos.push_back(static_cast<int>(i));
                const int m = static_cast<int>(tpos.size());
                if (m < 5) continue;
                auto T = [&](int i) { return chain[tpos[i]]; };
                for (int i = 1; i + 1 < m; ++i) {
                    if (partner[T(i)] != T(i - 1) && partner[T(i)] != T(i + 1)) {
                        trace.push_back({"interior-terminal-cannot-leave-path", {T(i)}, {}, ""});
                        return solved(inst, false, std::move(trace));
                    }
                }
                int lo = -1, hi = -1;
                std::vector<int> local;
                for (int i = 0; i + 1 < m; ++i)
                    if (partner[T(i)] == T(i + 1)) {
                        if (lo < 0) lo = tpos[i];
                        hi = tpos[i + 1];
                        local.push_back(req_of[T(i)]);
                    }
                int s2 = chain[lo], t2 = chain[hi];
                std::vector<int> removed;
                for (int i = lo + 1; i < hi; ++i) removed.push_back(chain[i]);
                for (int id : local) kill_req(id);
                for (int x : removed) kill_vertex(x);
                adj[s2].insert(t2);
                adj[t2].insert(s2);
                add_req(s2, t2);
                std::sort(removed.begin(), removed.end());
                trace.push_back({"collapse-terminal-run", removed, {{s2, t2}}, "new pair"});
                changed = true;
                break;
            }
        }
        if (changed) continue;

        // (c) non-terminal vertices of degree <= 2
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || is_term(v)) continue;
            if (deg(v) <= 1) {
                kill_vertex(v);
                trace.push_back({"delete-non-terminal-leaf", {v}, {}, ""});
                changed = true;
            } else if (deg(v) == 2) {
                int x = *adj[v].begin(), y = *adj[v].rbegin();
                if (adj[x].count(y)) continue;
                kill_vertex(v);
                adj[x].insert(y);
                adj[y].insert(x);
                trace.push_back({"smooth-non-terminal", {v}, {{std::min(x, y), std::max(x, y)}}, ""});
                changed = true;
            }
        }
    }

    std::vector<Edge> pairs;
    for (auto& r : reqs)
        if (r.alive) pairs.push_back({r.s, r.t});
    if (pairs.empty()) {
        trace.push_back({"all-requests-routed", {}, {}, ""});
        return solved(inst, true, std::move(trace));
    }
    std::vector<std::tuple<int, int, std::int64_t>> edges;
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (v < w) edges.push_back({v, w, 0});
    Canon c = canonical(n, alive, edges, false, false);
    for (auto& [s, t] : pairs) {
        s = c.old_to_new[s];
        t = c.old_to_new[t];
    }
    const std::int64_t bound = L0 + B0 + 4LL * ell * B0;
    if (c.g.n > bound)
        throw std::logic_error("disjoint-paths max-leaf kernel exceeded |L|+|B|+4*ell*|B|");
    KernelResult r;
    r.status = Status::Reduced;
    r.instance = inst;
    r.instance.graph = c.g;
    r.instance.pairs = pairs;
    r.instance.k = static_cast<std::int64_t>(pairs.size());
    r.trace = std::move(trace);
    r.vertex_map = c.new_to_old;
    finalize(r, inst);
    return r;
}

KernelResult kernelize_maxleaf(const Instance& inst, const MaxleafConfig& cfg) {
    switch (inst.problem) {
        case Problem::LongCycle:
            return kernelize_long_cycle_maxleaf(inst, cfg);
        case Problem::HamiltonianPath:
        case Problem::DisjointCycles:
            return reduce_degree2_single_internal(inst);
        case Problem::DisjointPaths:
            return kernelize_disjoint_paths_maxleaf(inst);
        default:
            throw InputError("no max-leaf kernel for " + to_string(inst.problem));
    }
}

}  // namespace kernelcut
