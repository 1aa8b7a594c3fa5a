#include "kernelcut/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "kernelcut/oracles.hpp"

namespace kernelcut {

namespace {

using Rng = std::mt19937_64;

// Plain modulo keeps streams identical across standard libraries.
int uniform(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool coin(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
}

Edge norm(Edge e) { return {std::min(e.first, e.second), std::max(e.first, e.second)}; }

std::vector<int> walk_successors(const std::vector<int>& succ) {
    std::vector<int> order;
    if (succ.empty()) return order;
    int v = 0;
    do {
        order.push_back(v);
        v = succ[v];
    } while (v >= 0 && v != 0 && order.size() <= succ.size());
    return order;
}

// Order of a 2-regular edge set, starting at vertex 0.
std::vector<int> walk_cycle(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& l : adj)
        if (l.size() != 2) throw std::logic_error("certificate edge set is not 2-regular");
    std::vector<int> order{0};
    int prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < n) {
        int nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        if (nx == 0) break;
        order.push_back(nx);
        prev = cur;
        cur = nx;
    }
    return order;
}

void check_path_in(const Graph& g, const std::vector<int>& path, int s, int t) {
    if (!validate_path(g, path, true, s, t)) throw InputError("supplied YES witness is not a Hamiltonian s-t path");
}

void check_shapes(const std::vector<BipartiteHamInstance>& inputs, bool directed) {
    if (inputs.empty()) throw InputError("composition needs at least one input");
    const std::size_t nA = inputs[0].A.size();
    for (auto& in : inputs) {
        auto why = bipartite_ham_violation(in);
        if (!why.empty()) throw InputError("malformed input: " + why);
        if (in.graph.directed != directed)
            throw InputError(directed ? "inputs must be directed" : "inputs must be undirected");
        if (in.A.size() != nA) throw InputError("inputs disagree on |A|");
    }
}

std::vector<int> index_of(int n, const std::vector<int>& list) {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = static_cast<int>(i);
    return pos;
}

}  // namespace

// ---- bipartite Hamiltonian path inputs ----------------------------------------

std::string bipartite_ham_violation(const BipartiteHamInstance& in) {
    const Graph& g = in.graph;
    if (in.A.empty()) return "A is empty";
    if (in.B.size() != in.A.size() + 1) return "|B| != |A| + 1";
    std::vector<int> side(g.n, -1);
    for (int a : in.A) {
        if (a < 0 || a >= g.n || side[a] >= 0) return "A is not a set of vertices";
        side[a] = 0;
    }
    for (int b : in.B) {
        if (b < 0 || b >= g.n || side[b] >= 0) return "B is not a set of vertices disjoint from A";
        side[b] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (side[v] < 0) return "vertex " + std::to_string(v) + " is in neither class";
    const int b1 = in.B.front(), bn = in.B.back();
    int d1 = 0, dn = 0;
    for (auto [u, v] : g.edges) {
        if (side[u] == side[v]) return "edge inside a colour class";
        if (g.directed) {
            if (v == b1) return "b_1 has an in-arc";
            if (u == bn) return "b_nB has an out-arc";
        } else {
            d1 += (u == b1) + (v == b1);
            dn += (u == bn) + (v == bn);
        }
    }
    if (!g.directed && (d1 != 1 || dn != 1)) return "b_1 and b_nB must have exactly one neighbour";
    return {};
}

bool bipartite_ham_answer(const BipartiteHamInstance& in, std::vector<int>* path) {
    HamResult r = hamiltonian_st_path(in.graph, in.B.front(), in.B.back());
    if (r.answer == Answer::Unknown) throw std::runtime_error("Hamiltonian path search timed out");
    if (path) *path = r.order;
    return r.answer == Answer::Yes;
}

BipartiteHamInstance gen_bipartite_hampath(const Graph& g, int s, int t, bool directed) {
    if (g.directed) throw InputError("source graph must be undirected");
    if (s == t || s < 0 || t < 0 || s >= g.n || t >= g.n) throw InputError("s and t must be distinct vertices");
    const int n = g.n;
    auto id = [](int v, int c) { return 4 * v + (c - 1); };
    std::set<Edge> und;
    for (int v = 0; v < n; ++v)
        for (int c = 1; c < 4; ++c) und.insert(norm({id(v, c), id(v, c + 1)}));
    for (auto [u, v] : g.edges) {
        und.insert(norm({id(v, 1), id(u, 4)}));
        und.insert(norm({id(v, 4), id(u, 1)}));
        und.insert(norm({id(u, 1), id(v, 4)}));
        und.insert(norm({id(u, 4), id(v, 1)}));
    }
    const int sstar = 4 * n, w = 4 * n + 1, tstar = 4 * n + 2;
    BipartiteHamInstance out;
    out.graph.n = 4 * n + 3;
    out.graph.directed = directed;
    for (auto [a, b] : und) {
        out.graph.edges.push_back({a, b});
        if (directed) out.graph.edges.push_back({b, a});
    }
    out.graph.edges.push_back({sstar, id(s, 1)});
    out.graph.edges.push_back({id(t, 4), w});
    out.graph.edges.push_back({w, tstar});
    sort_edges(out.graph);
    for (int v = 0; v < n; ++v) {
        out.A.push_back(id(v, 1));
        out.A.push_back(id(v, 3));
    }
    out.A.push_back(w);
    out.B.push_back(sstar);
    for (int v = 0; v < n; ++v) {
        out.B.push_back(id(v, 2));
        out.B.push_back(id(v, 4));
    }
    out.B.push_back(tstar);
    return out;
}

BipartiteHamInstance random_bipartite_hampath(int nA, double density, bool directed, bool plant,
                                              std::uint64_t seed) {
    if (nA < 1) throw InputError("need |A| >= 1");
    Rng rng(seed);
    BipartiteHamInstance out;
    out.graph.n = 2 * nA + 1;
    out.graph.directed = directed;
    for (int a = 0; a < nA; ++a) out.A.push_back(a);
    for (int b = 0; b <= nA; ++b) out.B.push_back(nA + b);
    const int b1 = out.B.front(), bn = out.B.back();
    std::vector<int> pa(out.A), pb(out.B.begin() + 1, out.B.end() - 1);
    shuffle(pa, rng);
    shuffle(pb, rng);
    std::set<Edge> E;
    if (directed) {
        for (int a : out.A)
            for (int b : out.B) {
                if (b != b1 && coin(rng, density)) E.insert({a, b});
                if (b != bn && coin(rng, density)) E.insert({b, a});
            }
        if (plant) {
            std::vector<int> path{b1};
            for (int i = 0; i < nA; ++i) {
                path.push_back(pa[i]);
                path.push_back(i + 1 < nA ? pb[i] : bn);
            }
            for (std::size_t i = 0; i + 1 < path.size(); ++i) E.insert({path[i], path[i + 1]});
        }
    } else {
        int first = plant ? pa.front() : uniform(rng, 0, nA - 1);
        int last = plant ? pa.back() : uniform(rng, 0, nA - 1);
        E.insert(norm({b1, first}));
        E.insert(norm({bn, last}));
        for (int a : out.A)
            for (std::size_t i = 1; i + 1 < out.B.size(); ++i)
                if (coin(rng, density)) E.insert(norm({a, out.B[i]}));
        if (plant)
            for (int i = 0; i + 1 < nA; ++i) {
                E.insert(norm({pa[i], pb[i]}));
                E.insert(norm({pb[i], pa[i + 1]}));
            }
    }
    out.graph.edges.assign(E.begin(), E.end());
    return out;
}

// ---- directed composition with a bi-paths modulator ------------------------------

Composition compose_bipaths(const std::vector<BipartiteHamInstance>& inputs, const YesWitness& yes) {
    check_shapes(inputs, true);
    const int r = static_cast<int>(inputs.size());
    const int nA = static_cast<int>(inputs[0].A.size()), nB = nA + 1;
    const int block = 3 * nA + 2;
    auto a1 = [&](int i, int j) { return i * block + 3 * j; };
    auto a2 = [&](int i, int j) { return i * block + 3 * j + 1; };
    auto a3 = [&](int i, int j) { return i * block + 3 * j + 2; };
    auto x = [&](int i) { return i * block + 3 * nA; };
    auto y = [&](int i) { return i * block + 3 * nA + 1; };
    const int z = r * block;
    auto bs = [&](int h) { return z + 1 + h; };
    const int N = z + 1 + nB;

    std::set<Edge> arcs;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < nA; ++j) {
            arcs.insert({a1(i, j), a2(i, j)});
            arcs.insert({a2(i, j), a1(i, j)});
            arcs.insert({a2(i, j), a3(i, j)});
            arcs.insert({a3(i, j), a2(i, j)});
            if (j + 1 < nA) arcs.insert({a3(i, j), a1(i, j + 1)});
        }
        arcs.insert({x(i), a1(i, 0)});
        arcs.insert({a3(i, nA - 1), y(i)});
        if (i + 1 < r) arcs.insert({y(i), x(i + 1)});
        arcs.insert({x(i), z});
        arcs.insert({z, y(i)});
    }
    arcs.insert({y(r - 1), bs(0)});
    arcs.insert({bs(nB - 1), x(0)});
    for (int i = 0; i < r; ++i) {
        const auto& in = inputs[i];
        auto pa = index_of(in.graph.n, in.A), pb = index_of(in.graph.n, in.B);
        for (auto [u, v] : in.graph.edges) {
            if (pa[u] >= 0) arcs.insert({a1(i, pa[u]), bs(pb[v])});
            else arcs.insert({bs(pb[u]), a3(i, pa[v])});
        }
    }

    Composition c;
    c.instance.problem = Problem::HamiltonianCycle;
    c.instance.graph.n = N;
    c.instance.graph.directed = true;
    c.instance.graph.edges.assign(arcs.begin(), arcs.end());
    c.instance.witness.kind = WitnessKind::BipathsModulator;
    c.instance.witness.vertices.push_back(z);
    for (int h = 0; h < nB; ++h) c.instance.witness.vertices.push_back(bs(h));
    c.instance.witness.ell = static_cast<int>(c.instance.witness.vertices.size());
    c.expected_modulator = 1 + nB;

    if (yes) {
        const int is = yes->first;
        if (is < 0 || is >= r) throw InputError("YES witness index out of range");
        const auto& in = inputs[is];
        const auto& path = yes->second;
        check_path_in(in.graph, path, in.B.front(), in.B.back());
        auto pa = index_of(in.graph.n, in.A), pb = index_of(in.graph.n, in.B);
        std::vector<int> succ(N, -1);
        for (int i = 0; i < r; ++i) {
            if (i == is) continue;
            succ[x(i)] = a1(i, 0);
            for (int j = 0; j < nA; ++j) {
                succ[a1(i, j)] = a2(i, j);
                succ[a2(i, j)] = a3(i, j);
                succ[a3(i, j)] = j + 1 < nA ? a1(i, j + 1) : y(i);
            }
        }
        for (int j = 0; j < nA; ++j) {
            succ[a3(is, j)] = a2(is, j);
            succ[a2(is, j)] = a1(is, j);
        }
        for (int i = 0; i + 1 < r; ++i) succ[y(i)] = x(i + 1);
        succ[bs(nB - 1)] = x(0);
        succ[y(r - 1)] = bs(0);
        for (std::size_t p = 0; p + 1 < path.size(); ++p) {
            int u = path[p], v = path[p + 1];
            if (pb[u] >= 0) succ[bs(pb[u])] = a3(is, pa[v]);
            else succ[a1(is, pa[u])] = bs(pb[v]);
        }
        // the selected instance's rail detours through the hub
        succ[x(is)] = z;
        succ[z] = y(is);
        c.certificate = walk_successors(succ);
    }
    return c;
}

// ---- the domino -------------------------------------------------------------------

const Domino& domino() {
    static const Domino d = [] {
        Domino d;
        d.graph.n = 8;
        for (int i = 0; i < 8; ++i) d.graph.edges.push_back(norm({i, (i + 1) % 8}));
        d.graph.edges.push_back({3, 7});
        sort_edges(d.graph);
        d.a_traversal = {0, 1, 2, 3, 7, 6, 5, 4};
        d.hat_traversal = {2, 1, 0, 7, 3, 4, 5, 6};
        return d;
    }();
    return d;
}

std::vector<std::vector<Edge>> domino_boundary_covers() {
    const Domino& d = domino();
    const auto& E = d.graph.edges;
    const int m = static_cast<int>(E.size());
    std::vector<char> terminal(8, 0);
    for (int t : {d.a_minus, d.a_plus, d.hat_minus, d.hat_plus}) terminal[t] = 1;
    std::vector<std::vector<Edge>> out;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> deg(8, 0);
        std::vector<Edge> chosen;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                ++deg[E[e].first];
                ++deg[E[e].second];
                chosen.push_back(E[e]);
            }
        bool ok = true;
        for (int v = 0; v < 8 && ok; ++v) {
            if (deg[v] > 2) ok = false;
            // a vertex with fewer than two domino edges needs outside edges
            if (deg[v] < 2 && !terminal[v]) ok = false;
        }
        if (!ok) continue;
        // no cycles: a forest of paths has |E| = |V| - components
        std::vector<int> parent(8);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto [a, b] : chosen) {
            int ra = find(a), rb = find(b);
            if (ra == rb) ok = false;
            parent[ra] = rb;
        }
        if (ok) out.push_back(chosen);
    }
    return out;
}

bool domino_two_traversal_property() {
    const Domino& d = domino();
    auto path_edges = [](const std::vector<int>& p) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) e.push_back(norm({p[i], p[i + 1]}));
        std::sort(e.begin(), e.end());
        return e;
    };
    auto a = path_edges(d.a_traversal), h = path_edges(d.hat_traversal);
    if (!validate_path(d.graph, d.a_traversal, true, d.a_minus, d.a_plus)) return false;
    if (!validate_path(d.graph, d.hat_traversal, true, d.hat_minus, d.hat_plus)) return false;
    auto covers = domino_boundary_covers();
    if (covers.size() != 2) return false;
    bool seen_a = false, seen_h = false;
    for (auto c : covers) {
        std::sort(c.begin(), c.end());
        seen_a = seen_a || c == a;
        seen_h = seen_h || c == h;
    }
    return seen_a && seen_h;
}

// ---- undirected composition with an outerplanar modulator -------------------------

namespace {

struct OuterLayout {
    int r, nA, nB, block;
    int dom(int i, int j, int local) const { return i * block + 8 * j + local; }
    int w(int i) const { return i * block + 8 * nA; }
    int x(int i) const { return i * block + 8 * nA + 1; }
    int y(int i) const { return i * block + 8 * nA + 2; }
    int zm() const { return r * block; }
    int z() const { return r * block + 1; }
    int zp() const { return r * block + 2; }
    int bs(int h) const { return r * block + 3 + h; }
    int n() const { return r * block + 3 + nB; }
};

OuterLayout outer_layout(int r, int nA) { return {r, nA, nA + 1, 8 * nA + 3}; }

// Edges that survive deleting the modulator.
std::set<Edge> outer_template(const OuterLayout& L) {
    const Domino& d = domino();
    std::set<Edge> E;
    for (int i = 0; i < L.r; ++i) {
        for (int j = 0; j < L.nA; ++j) {
            for (auto [a, b] : d.graph.edges) E.insert(norm({L.dom(i, j, a), L.dom(i, j, b)}));
            if (j + 1 < L.nA) E.insert(norm({L.dom(i, j, d.a_plus), L.dom(i, j + 1, d.a_minus)}));
        }
        E.insert(norm({L.w(i), L.x(i)}));
        E.insert(norm({L.x(i), L.dom(i, 0, d.a_minus)}));
        E.insert(norm({L.dom(i, L.nA - 1, d.a_plus), L.y(i)}));
        if (i + 1 < L.r) E.insert(norm({L.y(i), L.w(i + 1)}));
    }
    return E;
}

}  // namespace

Composition compose_outerplanar(const std::vector<BipartiteHamInstance>& inputs, const YesWitness& yes) {
    check_shapes(inputs, false);
    const Domino& d = domino();
    const int r = static_cast<int>(inputs.size());
    const int nA = static_cast<int>(inputs[0].A.size());
    const OuterLayout L = outer_layout(r, nA);
    std::set<Edge> E = outer_template(L);
    E.insert(norm({L.zm(), L.z()}));
    E.insert(norm({L.z(), L.zp()}));
    for (int i = 0; i < r; ++i) {
        E.insert(norm({L.x(i), L.zm()}));
        E.insert(norm({L.zp(), L.y(i)}));
    }
    E.insert(norm({L.y(r - 1), L.bs(0)}));
    E.insert(norm({L.bs(L.nB - 1), L.w(0)}));
    for (int i = 0; i < r; ++i) {
        const auto& in = inputs[i];
        auto pa = index_of(in.graph.n, in.A), pb = index_of(in.graph.n, in.B);
        for (auto [u, v] : in.graph.edges) {
            int a = pa[u] >= 0 ? u : v, b = pa[u] >= 0 ? v : u;
            E.insert(norm({L.dom(i, pa[a], d.hat_minus), L.bs(pb[b])}));
            E.insert(norm({L.dom(i, pa[a], d.hat_plus), L.bs(pb[b])}));
        }
    }
    Composition c;
    c.instance.problem = Problem::HamiltonianCycle;
    c.instance.graph.n = L.n();
    c.instance.graph.edges.assign(E.begin(), E.end());
    c.instance.witness.kind = WitnessKind::OuterplanarModulator;
    c.instance.witness.vertices = {L.zm(), L.z(), L.zp()};
    for (int h = 0; h < L.nB; ++h) c.instance.witness.vertices.push_back(L.bs(h));
    c.instance.witness.ell = static_cast<int>(c.instance.witness.vertices.size());
    c.expected_modulator = 3 + L.nB;

    if (yes) {
        const int is = yes->first;
        if (is < 0 || is >= r) throw InputError("YES witness index out of range");
        const auto& in = inputs[is];
        const auto& path = yes->second;
        check_path_in(in.graph, path, in.B.front(), in.B.back());
        auto pa = index_of(in.graph.n, in.A), pb = index_of(in.graph.n, in.B);
        std::vector<Edge> C;
        auto trav = [&](int i, int j, const std::vector<int>& order) {
            for (std::size_t p = 0; p + 1 < order.size(); ++p)
                C.push_back({L.dom(i, j, order[p]), L.dom(i, j, order[p + 1])});
        };
        for (int i = 0; i < r; ++i) {
            C.push_back({L.w(i), L.x(i)});
            if (i == is) {
                C.push_back({L.x(i), L.zm()});
                C.push_back({L.zm(), L.z()});
                C.push_back({L.z(), L.zp()});
                C.push_back({L.zp(), L.y(i)});
                for (int j = 0; j < nA; ++j) trav(i, j, d.hat_traversal);
            } else {
                C.push_back({L.x(i), L.dom(i, 0, d.a_minus)});
                C.push_back({L.dom(i, nA - 1, d.a_plus), L.y(i)});
                for (int j = 0; j < nA; ++j) {
                    trav(i, j, d.a_traversal);
                    if (j + 1 < nA) C.push_back({L.dom(i, j, d.a_plus), L.dom(i, j + 1, d.a_minus)});
                }
            }
            // the rail continues into the next instance's degree-two vertex w
            if (i + 1 < r) C.push_back({L.y(i), L.w(i + 1)});
        }
        C.push_back({L.bs(L.nB - 1), L.w(0)});
        C.push_back({L.y(r - 1), L.bs(0)});
        for (std::size_t p = 1; p + 1 < path.size(); p += 2) {
            int a = pa[path[p]];
            C.push_back({L.dom(is, a, d.hat_minus), L.bs(pb[path[p - 1]])});
            C.push_back({L.dom(is, a, d.hat_plus), L.bs(pb[path[p + 1]])});
        }
        c.certificate = walk_cycle(L.n(), C);
    }
    return c;
}

bool matches_domino_template(const Instance& composed, int r, int nA) {
    const OuterLayout L = outer_layout(r, nA);
    const Graph& g = composed.graph;
    if (g.directed || g.n != L.n()) return false;
    std::vector<int> X{L.zm(), L.z(), L.zp()};
    for (int h = 0; h < L.nB; ++h) X.push_back(L.bs(h));
    auto wx = composed.witness.vertices;
    std::sort(wx.begin(), wx.end());
    if (wx != X) return false;
    std::vector<char> inX(g.n, 0);
    for (int v : X) inX[v] = 1;
    std::set<Edge> rest;
    for (auto [a, b] : g.edges)
        if (!inX[a] && !inX[b]) rest.insert(norm({a, b}));
    return rest == outer_template(L);
}

// ---- multicoloured clique --------------------------------------------------------------

Instance gen_multicolored_clique_fp(const ColoredGraph& cg) {
    const Graph& g = cg.graph;
    const int n = g.n, k = cg.k;
    if (g.directed) throw InputError("multicoloured clique input must be undirected");
    if (k < 1) throw InputError("k must be at least 1");
    if (static_cast<int>(cg.color.size()) != n) throw InputError("colouring must cover every vertex");
    for (int c : cg.color)
        if (c < 1 || c > k) throw InputError("colour out of range");
    auto rail = [&](int i) { return n + i; };
    Instance inst;
    inst.problem = Problem::FpStPath;
    inst.graph.n = n + k + 1;
    for (int v = 0; v < n; ++v) {
        const int c = cg.color[v];
        inst.graph.edges.push_back({v, rail(c - 1)});
        inst.graph.edges.push_back({v, rail(c)});
    }
    sort_edges(inst.graph);
    std::set<Edge> adj;
    for (auto e : g.edges) adj.insert(norm(e));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!adj.count({u, v}) || cg.color[u] == cg.color[v]) inst.pairs.push_back({u, v});
    inst.s = rail(0);
    inst.t = rail(k);
    inst.witness.kind = WitnessKind::VertexCover;
    for (int i = 0; i <= k; ++i) inst.witness.vertices.push_back(rail(i));
    inst.witness.ell = k + 1;
    return inst;
}

bool has_multicolored_clique(const ColoredGraph& cg) {
    const Graph& g = cg.graph;
    auto M = adjacency_matrix(g);
    std::vector<std::vector<int>> by(cg.k + 1);
    for (int v = 0; v < g.n; ++v) by[cg.color[v]].push_back(v);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int c) -> bool {
        if (c > cg.k) return true;
        for (int v : by[c]) {
            bool ok = true;
            for (int u : pick) ok = ok && M[u][v];
            if (!ok) continue;
            pick.push_back(v);
            if (self(self, c + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 1);
}

// ---- ladder composition for forbidden pairs ---------------------------------------------

Composition compose_fp_ladders(const std::vector<FpInput>& inputs, const YesWitness& yes, bool pendant_tails) {
    if (inputs.empty()) throw InputError("composition needs at least one input");
    const int n = inputs[0].graph.n;
    if (n < 2) throw InputError("inputs need at least two vertices");
    for (auto& in : inputs) {
        if (in.graph.n != n) throw InputError("inputs disagree on the vertex count");
        if (in.graph.directed) throw InputError("inputs must be undirected");
    }
    const int r = static_cast<int>(inputs.size());
    auto vs = [](int j) { return j; };
    const int w = n;
    auto z = [&](int i) { return n + 1 + i; };
    std::vector<std::vector<int>> base(n, std::vector<int>(n, -1));
    int next = n + 1 + r;
    for (int j = 0; j < n; ++j)
        for (int h = j + 1; h < n; ++h) {
            base[j][h] = next;
            next += 2 * n;
        }
    auto tv = [&](int j, int h, int q) { return base[j][h] + 2 * q; };
    auto fv = [&](int j, int h, int q) { return base[j][h] + 2 * q + 1; };
    int N = next;

    std::set<Edge> E, H;
    for (int i = 0; i < r; ++i) {
        E.insert(norm({z(i), w}));
        E.insert(norm({z(i), vs(0)}));
    }
    for (int j = 0; j < n; ++j)
        for (int h = j + 1; h < n; ++h) {
            for (int q = 0; q + 1 < n; ++q) {
                E.insert(norm({tv(j, h, q), tv(j, h, q + 1)}));
                E.insert(norm({tv(j, h, q), fv(j, h, q + 1)}));
                E.insert(norm({fv(j, h, q), fv(j, h, q + 1)}));
                E.insert(norm({fv(j, h, q), tv(j, h, q + 1)}));
            }
            E.insert(norm({vs(j), tv(j, h, 0)}));
            E.insert(norm({vs(j), fv(j, h, 0)}));
            E.insert(norm({vs(h), tv(j, h, n - 1)}));
            E.insert(norm({vs(h), fv(j, h, n - 1)}));
            for (int q = 0; q < n; ++q) H.insert(norm({tv(j, h, q), vs(q)}));
        }
    // blocked[i][q]: the spoke vertex of ladder (j,h) at q that selector i forbids
    for (int i = 0; i < r; ++i) {
        std::set<Edge> gi, hi;
        for (auto e : inputs[i].graph.edges) gi.insert(norm(e));
        for (auto e : inputs[i].H) hi.insert(norm(e));
        auto conflict = [&](int a, int b) { return a != b && hi.count(norm({a, b})); };
        for (int j = 0; j < n; ++j)
            for (int h = j + 1; h < n; ++h) {
                if (!gi.count({j, h})) {
                    for (int q = 0; q < n; ++q) {
                        H.insert(norm({z(i), tv(j, h, q)}));
                        H.insert(norm({z(i), fv(j, h, q)}));
                    }
                    continue;
                }
                for (int q = 0; q < n; ++q) {
                    if (conflict(j, q) || conflict(h, q)) H.insert(norm({z(i), fv(j, h, q)}));
                    else H.insert(norm({z(i), tv(j, h, q)}));
                }
            }
    }

    Composition c;
    Instance& inst = c.instance;
    inst.problem = Problem::FpStPath;
    inst.s = w;
    inst.t = vs(n - 1);
    inst.witness.kind = WitnessKind::VertexCover;
    for (int v = 0; v < N; ++v)
        if (v <= n || v >= n + 1 + r) inst.witness.vertices.push_back(v);
    c.expected_modulator = 1 + n + 2 * n * (n * (n - 1) / 2);

    std::vector<int> cert;
    if (yes) {
        const int is = yes->first;
        if (is < 0 || is >= r) throw InputError("YES witness index out of range");
        const auto& path = yes->second;
        if (!validate_fp_path(inputs[is].graph, inputs[is].H, path, 0, n - 1))
            throw InputError("supplied YES witness is not a valid forbidden-pairs path");
        cert = {w, z(is), vs(path[0])};
        for (std::size_t p = 0; p + 1 < path.size(); ++p) {
            const int a = path[p], b = path[p + 1];
            const int j = std::min(a, b), h = std::max(a, b);
            for (int s = 0; s < n; ++s) {
                const int q = a < b ? s : n - 1 - s;
                cert.push_back(H.count(norm({z(is), fv(j, h, q)})) ? tv(j, h, q) : fv(j, h, q));
            }
            cert.push_back(vs(b));
        }
    }

    if (pendant_tails) {
        // two long tails force any long enough path to run from w to v*_n
        const int X = static_cast<int>(inst.witness.vertices.size());
        const int len = 2 * X + 1;
        std::vector<int> tail1, tail2;
        for (int i = 0; i < len; ++i) tail1.push_back(N++);
        for (int i = 0; i < len; ++i) tail2.push_back(N++);
        for (auto* tail : {&tail1, &tail2}) {
            const int anchor = tail == &tail1 ? w : vs(n - 1);
            E.insert(norm({anchor, (*tail)[0]}));
            for (int i = 0; i + 1 < len; ++i) E.insert(norm({(*tail)[i], (*tail)[i + 1]}));
            for (int i = 1; i < len; i += 2) inst.witness.vertices.push_back((*tail)[i]);
        }
        inst.problem = Problem::FpLongestPath;
        inst.s.reset();
        inst.t.reset();
        inst.k = 2 * static_cast<std::int64_t>(len) + 2;
        std::sort(inst.witness.vertices.begin(), inst.witness.vertices.end());
        c.expected_modulator = static_cast<int>(inst.witness.vertices.size());
        if (!cert.empty()) {
            std::vector<int> full(tail1.rbegin(), tail1.rend());
            full.insert(full.end(), cert.begin(), cert.end());
            full.insert(full.end(), tail2.begin(), tail2.end());
            cert = std::move(full);
        }
    }
    inst.graph.n = N;
    inst.graph.edges.assign(E.begin(), E.end());
    inst.pairs.assign(H.begin(), H.end());
    inst.witness.ell = static_cast<int>(inst.witness.vertices.size());
    c.certificate = std::move(cert);
    return c;
}

// ---- random planted instances ----------------------------------------------------------

namespace {

void fill_problem_fields(Instance& inst, const PlantedParams& P, Rng& rng) {
    const int n = inst.graph.n;
    inst.problem = P.problem;
    switch (P.problem) {
        case Problem::LongCycle:
        case Problem::LongPath:
            inst.k = P.k ? *P.k : uniform(rng, 2, std::max(2, n));
            break;
        case Problem::DisjointCycles:
            inst.k = P.k ? *P.k : uniform(rng, 1, std::max(1, n / 3));
            break;
        case Problem::DisjointPaths: {
            std::vector<int> vs(n);
            std::iota(vs.begin(), vs.end(), 0);
            shuffle(vs, rng);
            const int np = std::min(P.pairs, n / 2);
            for (int i = 0; i < np; ++i) inst.pairs.push_back({vs[2 * i], vs[2 * i + 1]});
            inst.k = np;
            break;
        }
        case Problem::HamiltonianCycle:
        case Problem::HamiltonianPath:
            break;
        default:
            throw InputError("planted generator does not produce " + to_string(P.problem));
    }
}

}  // namespace

Instance gen_random_planted(PlantedKind kind, const PlantedParams& P, std::uint64_t seed) {
    Rng rng(seed);
    Instance inst;
    switch (kind) {
        case PlantedKind::VertexCover: {
            const int n = P.n, ell = std::min(P.ell, P.n);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            shuffle(perm, rng);
            std::vector<char> inX(n, 0);
            for (int i = 0; i < ell; ++i) inX[perm[i]] = 1;
            inst.graph.n = n;
            inst.graph.directed = P.directed;
            for (int u = 0; u < n; ++u)
                for (int v = P.directed ? 0 : u + 1; v < n; ++v)
                    if (u != v && (inX[u] || inX[v]) && coin(rng, P.p)) inst.graph.edges.push_back({u, v});
            inst.witness.kind = WitnessKind::VertexCover;
            for (int v = 0; v < n; ++v)
                if (inX[v]) inst.witness.vertices.push_back(v);
            break;
        }
        case PlantedKind::Cluster: {
            std::vector<int> sizes;
            int n = P.ell;
            for (int c = 0; c < P.cliques; ++c) {
                sizes.push_back(uniform(rng, 1, std::max(1, P.max_clique)));
                n += sizes.back();
            }
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            shuffle(perm, rng);
            std::set<Edge> E;
            std::vector<int> X(perm.begin(), perm.begin() + P.ell);
            int at = P.ell;
            std::vector<int> rest;
            for (int s : sizes) {
                for (int a = at; a < at + s; ++a)
                    for (int b = a + 1; b < at + s; ++b) E.insert(norm({perm[a], perm[b]}));
                at += s;
            }
            for (int i = 0; i < P.ell; ++i)
                for (int v = 0; v < n; ++v)
                    if (v != X[i] && coin(rng, P.p)) E.insert(norm({X[i], v}));
            inst.graph.n = n;
            inst.graph.edges.assign(E.begin(), E.end());
            inst.witness.kind = WitnessKind::ClusterModulator;
            std::sort(X.begin(), X.end());
            inst.witness.vertices = X;
            break;
        }
        case PlantedKind::MaxLeaf: {
            const int c = std::max(2, P.core);
            std::set<Edge> core;
            for (int v = 1; v < c; ++v) core.insert(norm({v, uniform(rng, 0, v - 1)}));
            for (int u = 0; u < c; ++u)
                for (int v = u + 1; v < c; ++v)
                    if (coin(rng, P.p)) core.insert({u, v});
            Graph g;
            g.n = c;
            for (auto [u, v] : core) {
                const int s = uniform(rng, 0, std::max(0, P.subdivide));
                int prev = u;
                for (int i = 0; i < s; ++i) {
                    g.edges.push_back({prev, g.n});
                    prev = g.n++;
                }
                g.edges.push_back({prev, v});
            }
            sort_edges(g);
            inst.graph = g;
            inst.witness.kind = WitnessKind::MaxLeafBound;
            // exact where the oracle reaches; the vertex count is always a valid promise
            int ml = g.n;
            try {
                ml = max_leaf_number(g);
            } catch (const InputError&) {
            }
            inst.witness.ell = std::max(1, ml);
            break;
        }
        case PlantedKind::ForbiddenPairs: {
            const int n = std::max(2, P.n), ell = std::min(P.ell, n);
            inst.graph.n = n;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng, P.p)) inst.graph.edges.push_back({u, v});
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            shuffle(perm, rng);
            std::vector<int> X(perm.begin(), perm.begin() + ell);
            std::set<Edge> H;
            for (int tries = 0; static_cast<int>(H.size()) < P.pairs && tries < 50 * (P.pairs + 1); ++tries) {
                if (ell == 0) break;
                int x = X[uniform(rng, 0, ell - 1)], v = uniform(rng, 0, n - 1);
                if (x != v) H.insert(norm({x, v}));
            }
            inst.pairs.assign(H.begin(), H.end());
            int s = uniform(rng, 0, n - 1), t = uniform(rng, 0, n - 2);
            if (t >= s) ++t;
            inst.problem = P.problem;
            inst.s = s;
            inst.t = t;
            if (P.problem == Problem::FpLongestPath) inst.s.reset(), inst.t.reset();
            if (P.problem != Problem::FpStPath) inst.k = P.k ? *P.k : uniform(rng, 1, n);
            std::sort(X.begin(), X.end());
            inst.witness.kind = WitnessKind::VcOfH;
            inst.witness.vertices = X;
            inst.witness.ell = ell;
            validate_instance(inst);
            return inst;
        }
    }
    inst.witness.ell = kind == PlantedKind::MaxLeaf ? inst.witness.ell
                                                    : static_cast<int>(inst.witness.vertices.size());
    fill_problem_fields(inst, P, rng);
    validate_instance(inst);
    return inst;
}

}  // namespace kernelcut
