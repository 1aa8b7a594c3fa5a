#include "kernelcut/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace kernelcut {

const char* to_string(Answer a) {
    switch (a) {
        case Answer::No: return "NO";
        case Answer::Yes: return "YES";
        case Answer::Unknown: return "UNKNOWN";
    }
    return "?";
}

OracleLimits default_limits() {
    OracleLimits lim;
    if (const char* c = std::getenv("KERNELCUT_ORACLE_CAP")) lim.dp_cap = std::clamp(std::atoi(c), 1, 26);
    if (const char* t = std::getenv("KERNELCUT_TIMEOUT_MS")) lim.timeout_ms = std::max(1LL, std::atoll(t));
    return lim;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    std::uint32_t tick = 0;
    bool expired = false;
    explicit Deadline(std::int64_t ms) : end(Clock::now() + std::chrono::milliseconds(ms)) {}
    bool hit() {
        if (!expired && (++tick & 1023) == 0 && Clock::now() > end) expired = true;
        return expired;
    }
};

std::int64_t weight_of(const std::vector<std::int64_t>& w, int v) { return w.empty() ? 1 : w[v]; }

std::vector<std::vector<int>> out_lists(const Graph& g) {
    std::vector<std::vector<int>> out(g.n);
    for (auto [u, v] : g.edges) {
        out[u].push_back(v);
        if (!g.directed) out[v].push_back(u);
    }
    for (auto& a : out) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return out;
}

std::vector<std::vector<int>> in_lists(const Graph& g) {
    Graph r = g;
    if (g.directed)
        for (auto& e : r.edges) std::swap(e.first, e.second);
    return out_lists(r);
}

template <class F>
void for_bits(std::uint32_t m, F f) {
    while (m) {
        int b = std::countr_zero(m);
        m &= m - 1;
        f(b);
    }
}

}  // namespace

// ---- longest cycle / path ---------------------------------------------------

LengthResult longest_cycle(const Graph& g, const std::vector<std::int64_t>& weights,
                           std::optional<std::int64_t> target, const OracleLimits& lim) {
    const int n = g.n;
    const int minlen = g.directed ? 2 : 3;
    LengthResult res{Answer::Yes, 0};
    if (n < minlen) return res;
    auto out = out_lists(g);
    auto in = in_lists(g);
    if (n <= lim.dp_cap) {
        std::vector<std::uint32_t> om(n, 0), im(n, 0);
        for (int v = 0; v < n; ++v) {
            for (int w : out[v]) om[v] |= 1u << w;
            for (int w : in[v]) im[v] |= 1u << w;
        }
        const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
        std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
        for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
            int s = std::countr_zero(mask);
            if (mask == (1u << s)) reach[mask] = 1u << s;
            std::uint32_t r = reach[mask];
            if (!r) continue;
            if (std::popcount(mask) >= minlen && (r & im[s])) {
                std::int64_t wt = 0;
                for_bits(mask, [&](int v) { wt += weight_of(weights, v); });
                if (wt > res.value) {
                    res.value = wt;
                    if (target && res.value >= *target) return res;
                }
            }
            std::uint32_t above = ~((2u << s) - 1) & full & ~mask;
            for_bits(r, [&](int v) {
                for_bits(om[v] & above, [&](int w) { reach[mask | (1u << w)] |= 1u << w; });
            });
        }
        return res;
    }
    Deadline dl(lim.timeout_ms);
    std::vector<char> vis(n, 0);
    bool stop = false;
    std::function<void(int, int, int, std::int64_t)> dfs = [&](int s, int v, int len, std::int64_t wt) {
        if (stop) return;
        if (dl.hit()) {
            stop = true;
            return;
        }
        for (int w : out[v]) {
            if (w == s && len >= minlen) {
                if (wt > res.value) {
                    res.value = wt;
                    if (target && res.value >= *target) stop = true;
                }
            } else if (w > s && !vis[w]) {
                vis[w] = 1;
                dfs(s, w, len + 1, wt + weight_of(weights, w));
                vis[w] = 0;
            }
            if (stop) return;
        }
    };
    for (int s = 0; s < n && !stop; ++s) {
        vis[s] = 1;
        dfs(s, s, 1, weight_of(weights, s));
        vis[s] = 0;
    }
    if (dl.expired) res.status = Answer::Unknown;
    return res;
}

LengthResult longest_path(const Graph& g, const std::vector<std::int64_t>& weights, std::optional<Edge> st,
                          std::optional<std::int64_t> target, const OracleLimits& lim) {
    const int n = g.n;
    LengthResult res{Answer::Yes, 0};
    if (n == 0) return res;
    auto out = out_lists(g);
    if (n <= lim.dp_cap) {
        std::vector<std::uint32_t> om(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : out[v]) om[v] |= 1u << w;
        const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
        std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
        if (st) {
            reach[1u << st->first] = 1u << st->first;
        } else {
            for (int v = 0; v < n; ++v) reach[1u << v] = 1u << v;
        }
        for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
            std::uint32_t r = reach[mask];
            if (!r) continue;
            if (!st || (r >> st->second & 1)) {
                std::int64_t wt = 0;
                for_bits(mask, [&](int v) { wt += weight_of(weights, v); });
                if (wt > res.value) {
                    res.value = wt;
                    if (target && res.value >= *target) return res;
                }
            }
            for_bits(r, [&](int v) {
                if (st && v == st->second) return;  // the path must end at t
                for_bits(om[v] & ~mask, [&](int w) { reach[mask | (1u << w)] |= 1u << w; });
            });
        }
        return res;
    }
    Deadline dl(lim.timeout_ms);
    std::vector<char> vis(n, 0);
    bool stop = false;
    std::function<void(int, std::int64_t)> dfs = [&](int v, std::int64_t wt) {
        if (stop) return;
        if (dl.hit()) {
            stop = true;
            return;
        }
        if (!st || v == st->second) {
            if (wt > res.value) {
                res.value = wt;
                if (target && res.value >= *target) {
                    stop = true;
                    return;
                }
            }
            if (st) return;
        }
        for (int w : out[v]) {
            if (vis[w]) continue;
            vis[w] = 1;
            dfs(w, wt + weight_of(weights, w));
            vis[w] = 0;
            if (stop) return;
        }
    };
    for (int s = 0; s < n && !stop; ++s) {
        if (st && s != st->first) continue;
        vis[s] = 1;
        dfs(s, weight_of(weights, s));
        vis[s] = 0;
    }
    if (dl.expired) res.status = Answer::Unknown;
    return res;
}

LengthResult longest_cycle_labeled(const Graph& g, const std::vector<std::int64_t>& labels,
                                   const OracleLimits& lim) {
    return longest_cycle(expand_labels(g, labels), {}, std::nullopt, lim);
}

// ---- Hamiltonicity -------------------------------------------------------------

namespace {

// Hamiltonian cycle through vertex 0 by reachability DP over subsets of the others.
HamResult ham_cycle_dp(const Graph& g) {
    const int n = g.n;
    auto out = out_lists(g);
    const int m = n - 1;
    std::vector<std::uint32_t> om(n, 0);  // successors among 1..n-1, shifted by one
    for (int v = 0; v < n; ++v)
        for (int w : out[v])
            if (w != 0) om[v] |= 1u << (w - 1);
    bool to0[32] = {};
    for (int v = 1; v < n; ++v)
        for (int w : out[v])
            if (w == 0) to0[v] = true;
    const std::uint32_t full = (1u << m) - 1;
    std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
    for_bits(om[0], [&](int b) { reach[1u << b] |= 1u << b; });
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::uint32_t r = reach[mask];
        if (!r) continue;
        for_bits(r, [&](int b) {
            for_bits(om[b + 1] & ~mask, [&](int c) { reach[mask | (1u << c)] |= 1u << c; });
        });
    }
    HamResult res;
    int last = -1;
    for_bits(reach[full], [&](int b) {
        if (last < 0 && to0[b + 1]) last = b;
    });
    if (last < 0) return res;
    res.answer = Answer::Yes;
    std::vector<int> rev;
    std::uint32_t mask = full;
    int cur = last;
    while (true) {
        rev.push_back(cur + 1);
        std::uint32_t prev = mask ^ (1u << cur);
        if (!prev) break;
        int pick = -1;
        for_bits(reach[prev], [&](int b) {
            if (pick < 0 && (om[b + 1] >> cur & 1)) pick = b;
        });
        mask = prev;
        cur = pick;
    }
    res.order.push_back(0);
    res.order.insert(res.order.end(), rev.rbegin(), rev.rend());
    return res;
}

// Edge-state search with forced-edge propagation on an undirected simple graph.
class HamSearch {
public:
    HamSearch(const Graph& g, std::int64_t timeout_ms) : n_(g.n), inc_(g.n), dl_(timeout_ms) {
        std::set<Edge> seen;
        for (auto [u, v] : g.edges) {
            Edge e{std::min(u, v), std::max(u, v)};
            if (!seen.insert(e).second) continue;
            int id = static_cast<int>(E_.size());
            E_.push_back(e);
            inc_[e.first].push_back(id);
            inc_[e.second].push_back(id);
        }
    }

    Answer run(std::vector<int>& order) {
        if (n_ < 3) return Answer::No;
        State s;
        s.st.assign(E_.size(), 0);
        s.cin.assign(n_, 0);
        s.cav.resize(n_);
        s.oend.resize(n_);
        std::vector<int> q;
        for (int v = 0; v < n_; ++v) {
            s.cav[v] = static_cast<int>(inc_[v].size());
            s.oend[v] = v;
            q.push_back(v);
        }
        if (!propagate(s, q)) return Answer::No;
        State sol;
        bool ok = solve(s, sol);
        if (dl_.expired) return Answer::Unknown;
        if (!ok) return Answer::No;
        extract(sol, order);
        return Answer::Yes;
    }

private:
    struct State {
        std::vector<std::uint8_t> st;  // 0 undecided, 1 in, 2 out
        std::vector<int> cin, cav, oend;
        int nin = 0;
    };

    int other(int e, int v) const { return E_[e].first == v ? E_[e].second : E_[e].first; }

    bool include(State& s, int e, std::vector<int>& q) {
        if (s.st[e] == 1) return true;
        if (s.st[e] == 2) return false;
        auto [u, v] = E_[e];
        if (s.cin[u] == 2 || s.cin[v] == 2) return false;
        int a = s.oend[u], b = s.oend[v];
        if (a == v && s.nin + 1 != n_) return false;
        s.st[e] = 1;
        ++s.cin[u];
        ++s.cin[v];
        ++s.nin;
        if (a != v) {
            s.oend[a] = b;
            s.oend[b] = a;
            if (s.nin < n_ - 1) {
                for (int f : inc_[a])
                    if (s.st[f] == 0 && other(f, a) == b && !exclude(s, f, q)) return false;
            }
        }
        q.push_back(u);
        q.push_back(v);
        return true;
    }

    bool exclude(State& s, int e, std::vector<int>& q) {
        if (s.st[e] == 2) return true;
        if (s.st[e] == 1) return false;
        s.st[e] = 2;
        auto [u, v] = E_[e];
        --s.cav[u];
        --s.cav[v];
        q.push_back(u);
        q.push_back(v);
        return true;
    }

    bool propagate(State& s, std::vector<int>& q) {
        while (!q.empty()) {
            int x = q.back();
            q.pop_back();
            if (s.cav[x] < 2) return false;
            if (s.cin[x] == 2 && s.cav[x] > 2) {
                for (int f : inc_[x])
                    if (s.st[f] == 0 && !exclude(s, f, q)) return false;
            } else if (s.cin[x] < 2 && s.cav[x] == 2) {
                for (int f : inc_[x])
                    if (s.st[f] == 0 && !include(s, f, q)) return false;
            }
        }
        return true;
    }

    bool connected(const State& s) const {
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int f : inc_[v]) {
                if (s.st[f] == 2) continue;
                int w = other(f, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        return cnt == n_;
    }

    bool solve(State& s, State& sol) {
        if (dl_.hit()) return false;
        if (s.nin == n_) {
            sol = s;
            return true;
        }
        if (!connected(s)) return false;
        int best = -1, bestFree = 1 << 30;
        for (int v = 0; v < n_; ++v) {
            if (s.cin[v] >= 2) continue;
            int freeE = s.cav[v] - s.cin[v];
            int key = freeE * 2 + (s.cin[v] == 1 ? 0 : 1);
            if (key < bestFree) {
                bestFree = key;
                best = v;
            }
        }
        if (best < 0) return false;
        int e = -1;
        for (int f : inc_[best])
            if (s.st[f] == 0) {
                e = f;
                break;
            }
        if (e < 0) return false;
        {
            State t = s;
            std::vector<int> q;
            if (include(t, e, q) && propagate(t, q) && solve(t, sol)) return true;
            if (dl_.expired) return false;
        }
        std::vector<int> q;
        if (exclude(s, e, q) && propagate(s, q)) return solve(s, sol);
        return false;
    }

    void extract(const State& s, std::vector<int>& order) const {
        std::vector<std::vector<int>> nb(n_);
        for (std::size_t e = 0; e < E_.size(); ++e)
            if (s.st[e] == 1) {
                nb[E_[e].first].push_back(E_[e].second);
                nb[E_[e].second].push_back(E_[e].first);
            }
        order.clear();
        int prev = -1, cur = 0;
        for (int i = 0; i < n_; ++i) {
            order.push_back(cur);
            int nxt = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
            prev = cur;
            cur = nxt;
        }
    }

    int n_;
    std::vector<Edge> E_;
    std::vector<std::vector<int>> inc_;
    Deadline dl_;
};

// Directed graph -> undirected graph with v_in, v_mid, v_out per vertex.
Graph split_digraph(const Graph& g) {
    Graph h;
    h.n = 3 * g.n;
    for (int v = 0; v < g.n; ++v) {
        h.edges.push_back({3 * v, 3 * v + 1});
        h.edges.push_back({3 * v + 1, 3 * v + 2});
    }
    for (auto [u, v] : g.edges) h.edges.push_back({3 * u + 2, 3 * v});
    return h;
}

std::vector<int> unsplit_order(const std::vector<int>& order) {
    // orientation: after a mid vertex comes its out vertex when walking forwards
    std::vector<int> seq = order;
    int N = static_cast<int>(seq.size());
    for (int i = 0; i < N; ++i) {
        if (seq[i] % 3 == 1) {
            if (seq[(i + 1) % N] % 3 != 2) std::reverse(seq.begin(), seq.end());
            break;
        }
    }
    std::vector<int> res;
    for (int x : seq)
        if (x % 3 == 1) res.push_back(x / 3);
    auto it = std::find(res.begin(), res.end(), 0);
    std::rotate(res.begin(), it, res.end());
    return res;
}

}  // namespace

HamResult hamiltonian_cycle_backtrack(const Graph& g, const OracleLimits& lim) {
    HamResult r;
    if (g.directed) {
        if (g.n == 2) return hamiltonian_cycle(g, lim);
        if (g.n < 2) return r;
        HamSearch hs(split_digraph(g), lim.timeout_ms);
        std::vector<int> ord;
        r.answer = hs.run(ord);
        if (r.answer == Answer::Yes) r.order = unsplit_order(ord);
        return r;
    }
    HamSearch hs(g, lim.timeout_ms);
    r.answer = hs.run(r.order);
    return r;
}

HamResult hamiltonian_cycle(const Graph& g, const OracleLimits& lim) {
    HamResult r;
    const int n = g.n;
    if (g.directed) {
        if (n < 2) return r;
        if (n == 2) {
            auto out = out_lists(g);
            bool a = std::count(out[0].begin(), out[0].end(), 1), b = std::count(out[1].begin(), out[1].end(), 0);
            if (a && b) {
                r.answer = Answer::Yes;
                r.order = {0, 1};
            }
            return r;
        }
    } else if (n < 3) {
        return r;
    }
    if (n <= lim.dp_cap + 1 && n <= 32) return ham_cycle_dp(g);
    return hamiltonian_cycle_backtrack(g, lim);
}

HamResult hamiltonian_st_path(const Graph& g, int s, int t, const OracleLimits& lim) {
    HamResult r;
    if (g.n == 1 && s == t) {
        r.answer = Answer::Yes;
        r.order = {0};
        return r;
    }
    if (s == t) return r;
    if (g.n == 2) {
        auto out = out_lists(g);
        if (std::count(out[s].begin(), out[s].end(), t)) {
            r.answer = Answer::Yes;
            r.order = {s, t};
        }
        return r;
    }
    Graph h = g;
    int z = h.n++;
    h.multigraph = false;
    if (g.directed) {
        h.edges.push_back({t, z});
        h.edges.push_back({z, s});
    } else {
        h.edges.push_back({t, z});
        h.edges.push_back({z, s});
    }
    HamResult c = hamiltonian_cycle(h, lim);
    r.answer = c.answer;
    if (c.answer != Answer::Yes) return r;
    auto it = std::find(c.order.begin(), c.order.end(), z);
    std::rotate(c.order.begin(), it, c.order.end());
    c.order.erase(c.order.begin());
    if (c.order.front() != s) std::reverse(c.order.begin(), c.order.end());
    r.order = c.order;
    return r;
}

HamResult hamiltonian_path(const Graph& g, const OracleLimits& lim) {
    HamResult r;
    if (g.n <= 1) {
        r.answer = Answer::Yes;
        if (g.n == 1) r.order = {0};
        return r;
    }
    Graph h = g;
    int z = h.n++;
    for (int v = 0; v < g.n; ++v) {
        h.edges.push_back({z, v});
        if (g.directed) h.edges.push_back({v, z});
    }
    if (!g.directed && g.n == 2) {
        auto out = out_lists(g);
        if (!out[0].empty()) {
            r.answer = Answer::Yes;
            r.order = {0, 1};
        }
        return r;
    }
    HamResult c = hamiltonian_cycle(h, lim);
    r.answer = c.answer;
    if (c.answer != Answer::Yes) return r;
    auto it = std::find(c.order.begin(), c.order.end(), z);
    std::rotate(c.order.begin(), it, c.order.end());
    c.order.erase(c.order.begin());
    r.order = c.order;
    return r;
}

std::vector<std::vector<int>> all_hamiltonian_cycles(const Graph& g, std::size_t limit) {
    std::vector<std::vector<int>> out;
    const int n = g.n;
    if (n < 3 || g.directed) return out;
    std::vector<std::vector<std::pair<int, int>>> inc(n);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        inc[g.edges[e].first].push_back({g.edges[e].second, static_cast<int>(e)});
        inc[g.edges[e].second].push_back({g.edges[e].first, static_cast<int>(e)});
    }
    std::vector<char> vis(n, 0);
    std::vector<int> path{0}, used;
    vis[0] = 1;
    std::function<void(int)> dfs = [&](int v) {
        if (out.size() >= limit) return;
        if (static_cast<int>(path.size()) == n) {
            for (auto [w, e] : inc[v])
                if (w == 0 && path[1] < path.back()) {
                    auto c = used;
                    c.push_back(e);
                    std::sort(c.begin(), c.end());
                    out.push_back(c);
                }
            return;
        }
        for (auto [w, e] : inc[v]) {
            if (vis[w]) continue;
            vis[w] = 1;
            path.push_back(w);
            used.push_back(e);
            dfs(w);
            used.pop_back();
            path.pop_back();
            vis[w] = 0;
        }
    };
    dfs(0);
    return out;
}

bool validate_cycle(const Graph& g, const std::vector<int>& order, bool hamiltonian) {
    auto adj = adjacency_matrix(g);
    const int L = static_cast<int>(order.size());
    if (L < (g.directed ? 2 : 3)) return false;
    if (hamiltonian && L != g.n) return false;
    std::vector<char> seen(g.n, 0);
    for (int v : order) {
        if (v < 0 || v >= g.n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < L; ++i)
        if (!adj[order[i]][order[(i + 1) % L]]) return false;
    return true;
}

bool validate_path(const Graph& g, const std::vector<int>& order, bool hamiltonian, std::optional<int> s,
                   std::optional<int> t) {
    auto adj = adjacency_matrix(g);
    if (order.empty()) return false;
    if (hamiltonian && static_cast<int>(order.size()) != g.n) return false;
    std::vector<char> seen(g.n, 0);
    for (int v : order) {
        if (v < 0 || v >= g.n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (!adj[order[i]][order[i + 1]]) return false;
    if (s && order.front() != *s) return false;
    if (t && order.back() != *t) return false;
    return true;
}

// ---- disjoint paths / cycles -----------------------------------------------------

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<int, std::uint64_t>& p) const {
        return std::hash<std::uint64_t>()(p.second * 1315423911ULL + static_cast<std::uint64_t>(p.first));
    }
};

}  // namespace

DisjointResult disjoint_paths(const Graph& g, const std::vector<Edge>& pairs, const OracleLimits& lim) {
    DisjointResult res;
    const int n = g.n;
    if (n > 64) {
        res.answer = Answer::Unknown;
        return res;
    }
    if (pairs.empty()) {
        res.answer = Answer::Yes;
        return res;
    }
    auto out = out_lists(g);
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : out[v]) adj[v] |= 1ULL << w;
    std::uint64_t terms = 0;
    for (auto [s, t] : pairs) terms |= (1ULL << s) | (1ULL << t);
    Deadline dl(lim.timeout_ms);
    std::unordered_set<std::pair<int, std::uint64_t>, PairHash> failed;
    std::vector<std::vector<int>> chosen(pairs.size());
    const int k = static_cast<int>(pairs.size());

    std::function<bool(int, std::uint64_t)> rec = [&](int i, std::uint64_t used) -> bool {
        if (i == k) return true;
        if (dl.hit()) return false;
        if (failed.count({i, used})) return false;
        auto [s, t] = pairs[i];
        std::uint64_t blocked = used | (terms & ~((1ULL << s) | (1ULL << t)));
        std::vector<int> path{s};
        std::uint64_t pmask = 1ULL << s;
        std::function<bool(int)> ext = [&](int v) -> bool {
            if (dl.hit()) return false;
            for (int w : out[v]) {
                std::uint64_t bw = 1ULL << w;
                if ((pmask | blocked) & bw) continue;
                if (adj[w] & pmask & ~(1ULL << v)) continue;  // keep paths chordless
                path.push_back(w);
                pmask |= bw;
                bool ok;
                if (w == t) {
                    ok = rec(i + 1, used | pmask);
                    if (ok) chosen[i] = path;
                } else {
                    ok = ext(w);
                }
                pmask &= ~bw;
                path.pop_back();
                if (ok) return true;
                if (dl.expired) return false;
            }
            return false;
        };
        bool ok = ext(s);
        if (!ok && !dl.expired) failed.insert({i, used});
        return ok;
    };
    bool ok = rec(0, 0);
    if (dl.expired && !ok) {
        res.answer = Answer::Unknown;
        return res;
    }
    res.answer = ok ? Answer::Yes : Answer::No;
    if (ok) res.parts = chosen;
    return res;
}

DisjointResult disjoint_cycles(const Graph& g, std::int64_t k, const OracleLimits& lim) {
    DisjointResult res;
    const int n = g.n;
    if (k <= 0) {
        res.answer = Answer::Yes;
        return res;
    }
    if (n > 64 || g.directed) {
        res.answer = Answer::Unknown;
        return res;
    }
    auto out = out_lists(g);
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : out[v]) adj[v] |= 1ULL << w;
    Deadline dl(lim.timeout_ms);
    // avail -> (value, cap it was computed with); value < cap means exact
    std::unordered_map<std::uint64_t, std::pair<int, int>> memo;

    // Visit chordless cycles through the lowest vertex v of avail; cb returns true to stop.
    auto cycles_through = [&](std::uint64_t avail, const std::function<bool(std::uint64_t)>& cb) {
        int v = std::countr_zero(avail);
        std::uint64_t pmask = 1ULL << v;
        int len = 1;
        std::function<bool(int)> ext = [&](int u) -> bool {
            if (dl.hit()) return true;
            std::uint64_t cand = adj[u] & avail & ~pmask;
            while (cand) {
                int w = std::countr_zero(cand);
                cand &= cand - 1;
                std::uint64_t inner = pmask & ~(1ULL << u) & ~(1ULL << v);
                if (adj[w] & inner) continue;
                pmask |= 1ULL << w;
                ++len;
                bool stop;
                if (len >= 3 && (adj[w] >> v & 1))
                    stop = cb(pmask);
                else
                    stop = ext(w);
                --len;
                pmask &= ~(1ULL << w);
                if (stop) return true;
            }
            return false;
        };
        ext(v);
    };

    std::function<int(std::uint64_t, int)> f = [&](std::uint64_t avail, int need) -> int {
        if (need <= 0 || std::popcount(avail) < 3 || dl.hit()) return 0;
        if (auto it = memo.find(avail); it != memo.end()) {
            auto [val, cap] = it->second;
            if (val < cap || need <= cap) return std::min(val, need);
        }
        int v = std::countr_zero(avail);
        int best = f(avail & ~(1ULL << v), need);
        if (best < need) {
            cycles_through(avail, [&](std::uint64_t cyc) {
                best = std::max(best, 1 + f(avail & ~cyc, need - 1));
                return best >= need;
            });
        }
        if (!dl.expired) memo[avail] = {best, need};
        return best;
    };
    const std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    const int need0 = static_cast<int>(std::min<std::int64_t>(k, n));
    int got = f(all, need0);
    if (dl.expired) {
        res.answer = Answer::Unknown;
        return res;
    }
    res.answer = got >= k ? Answer::Yes : Answer::No;
    if (res.answer != Answer::Yes) return res;
    std::uint64_t avail = all;
    int need = need0;
    while (need > 0) {
        int v = std::countr_zero(avail);
        if (f(avail & ~(1ULL << v), need) >= need) {
            avail &= ~(1ULL << v);
            continue;
        }
        std::uint64_t pick = 0;
        cycles_through(avail, [&](std::uint64_t cyc) {
            if (1 + f(avail & ~cyc, need - 1) >= need) {
                pick = cyc;
                return true;
            }
            return false;
        });
        if (!pick) break;
        // recover the cyclic order of the picked vertex set
        std::vector<int> cyc;
        int start = std::countr_zero(pick), prev = -1, cur = start;
        do {
            cyc.push_back(cur);
            std::uint64_t nb = adj[cur] & pick;
            int nxt = -1;
            for (std::uint64_t m = nb; m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (w != prev) {
                    nxt = w;
                    break;
                }
            }
            prev = cur;
            cur = nxt;
        } while (cur != start && cur >= 0 && cyc.size() <= 64);
        res.parts.push_back(cyc);
        avail &= ~pick;
        --need;
    }
    return res;
}

bool validate_disjoint_paths(const Graph& g, const std::vector<Edge>& pairs,
                             const std::vector<std::vector<int>>& parts) {
    if (parts.size() != pairs.size()) return false;
    std::vector<char> used(g.n, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!validate_path(g, parts[i], false, pairs[i].first, pairs[i].second)) return false;
        for (int v : parts[i]) {
            if (used[v]) return false;
            used[v] = 1;
        }
    }
    return true;
}

bool validate_disjoint_cycles(const Graph& g, std::int64_t k, const std::vector<std::vector<int>>& parts) {
    if (static_cast<std::int64_t>(parts.size()) < k) return false;
    std::vector<char> used(g.n, 0);
    for (auto& c : parts) {
        if (!validate_cycle(g, c, false)) return false;
        for (int v : c) {
            if (used[v]) return false;
            used[v] = 1;
        }
    }
    return true;
}

// ---- forbidden pairs -----------------------------------------------------------

FpResult forbidden_pairs_path(const Graph& g, int s, int t, const std::vector<Edge>& H, FpObjective obj,
                              const OracleLimits& lim) {
    FpResult res;
    const int n = g.n;
    auto out = out_lists(g);
    std::vector<std::vector<int>> conf(n);
    for (auto [a, b] : H) {
        conf[a].push_back(b);
        conf[b].push_back(a);
    }
    std::vector<int> blocked(n, 0);
    std::vector<char> on(n, 0);
    std::vector<int> path, bestPath;
    std::int64_t best = -1;
    Deadline dl(lim.timeout_ms);
    bool stop = false;

    // BFS distance to t, ignoring forbidden pairs: a lower bound for pruning.
    std::vector<int> distT(n, -1);
    if (obj == FpObjective::Shortest || obj == FpObjective::Exists) {
        auto in = in_lists(g);
        std::queue<int> q;
        distT[t] = 0;
        q.push(t);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : in[v])
                if (distT[w] < 0) {
                    distT[w] = distT[v] + 1;
                    q.push(w);
                }
        }
    }
    auto push = [&](int v) {
        on[v] = 1;
        path.push_back(v);
        for (int u : conf[v]) ++blocked[u];
    };
    auto pop = [&](int v) {
        on[v] = 0;
        path.pop_back();
        for (int u : conf[v]) --blocked[u];
    };
    auto reachable_bound = [&](int v) {
        // vertices still usable from v, a cheap upper bound on extra length
        std::vector<char> seen(n, 0);
        std::vector<int> st{v};
        seen[v] = 1;
        int cnt = 0;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int w : out[x])
                if (!seen[w] && !on[w] && !blocked[w]) {
                    seen[w] = 1;
                    ++cnt;
                    st.push_back(w);
                }
        }
        return cnt;
    };
    const bool anywhere = obj == FpObjective::LongestAnywhere;
    std::function<void(int)> dfs = [&](int v) {
        if (stop) return;
        if (dl.hit()) {
            stop = true;
            return;
        }
        std::int64_t len = static_cast<std::int64_t>(path.size());
        if (anywhere || v == t) {
            if (obj == FpObjective::Shortest || obj == FpObjective::Exists) {
                if (best < 0 || len < best) {
                    best = len;
                    bestPath = path;
                }
                if (obj == FpObjective::Exists) stop = true;
                return;
            }
            if (len > best) {
                best = len;
                bestPath = path;
            }
            if (!anywhere) return;
        }
        if (obj == FpObjective::Shortest && best >= 0) {
            if (distT[v] < 0 || len + distT[v] >= best) return;
        }
        if (obj == FpObjective::Exists && distT[v] < 0) return;
        if ((obj == FpObjective::Longest || anywhere) && best >= 0 && len + reachable_bound(v) <= best) return;
        for (int w : out[v]) {
            if (on[w] || blocked[w]) continue;
            push(w);
            dfs(w);
            pop(w);
            if (stop) return;
        }
    };
    for (int start = 0; start < n && !stop; ++start) {
        if (!anywhere && start != s) continue;
        if (blocked[start]) continue;
        push(start);
        dfs(start);
        pop(start);
    }
    if (dl.expired) {
        res.answer = Answer::Unknown;
        res.length = std::max<std::int64_t>(best, 0);
        res.path = bestPath;
        return res;
    }
    if (best < 0) return res;
    res.answer = Answer::Yes;
    res.length = best;
    res.path = bestPath;
    return res;
}

bool validate_fp_path(const Graph& g, const std::vector<Edge>& H, const std::vector<int>& path,
                      std::optional<int> s, std::optional<int> t) {
    if (!validate_path(g, path, false, s, t)) return false;
    std::vector<char> on(g.n, 0);
    for (int v : path) on[v] = 1;
    for (auto [a, b] : H)
        if (on[a] && on[b]) return false;
    return true;
}

FptFpResult fpt_shortest_fp_path(const Graph& g, int s, int t, const std::vector<Edge>& H,
                                 const std::vector<int>& X) {
    const int n = g.n;
    std::vector<int> xi(n, -1);
    for (std::size_t i = 0; i < X.size(); ++i) xi[X[i]] = static_cast<int>(i);
    for (auto [a, b] : H)
        if (xi[a] < 0 && xi[b] < 0) throw InputError("X does not cover the forbidden pairs");
    if (X.size() > 24) throw InputError("vertex cover of H too large (> 24)");
    auto out = out_lists(g);
    FptFpResult res;
    const std::uint64_t total = 1ULL << X.size();
    std::vector<char> removed(n);
    std::vector<int> dist(n);
    for (std::uint64_t sub = 0; sub < total; ++sub) {
        ++res.subsets_enumerated;
        bool conflict = false;
        for (auto [a, b] : H)
            if (xi[a] >= 0 && xi[b] >= 0 && (sub >> xi[a] & 1) && (sub >> xi[b] & 1)) {
                conflict = true;
                break;
            }
        if (conflict) continue;
        std::fill(removed.begin(), removed.end(), 0);
        for (std::size_t i = 0; i < X.size(); ++i)
            if (!(sub >> i & 1)) removed[X[i]] = 1;
        for (auto [a, b] : H) {
            if (xi[a] >= 0 && (sub >> xi[a] & 1)) removed[b] = 1;
            if (xi[b] >= 0 && (sub >> xi[b] & 1)) removed[a] = 1;
        }
        if (removed[s] || removed[t]) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : out[v])
                if (!removed[w] && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        if (dist[t] > 0 && (!res.found || dist[t] < res.length)) {
            res.found = true;
            res.length = dist[t];
        }
    }
    return res;
}

// ---- Hamiltonian path arc sets ---------------------------------------------------

ArcsetCheck check_bipartite_hampath_arcset(const Graph& D, const std::vector<int>& A, const std::vector<int>& B,
                                           const std::vector<Edge>& C) {
    ArcsetCheck r;
    const int n = D.n;
    std::set<Edge> arcs(D.edges.begin(), D.edges.end());
    bool inD = std::all_of(C.begin(), C.end(), [&](const Edge& e) {
        return e.first >= 0 && e.first < n && e.second >= 0 && e.second < n && arcs.count(e);
    });
    std::vector<int> head(n, 0), tail(n, 0);
    for (auto [u, v] : C) {
        ++tail[u];
        ++head[v];
    }
    // 1: D[C] acyclic (Kahn)
    bool acyclic = true;
    {
        std::vector<int> indeg(n, 0);
        std::vector<std::vector<int>> out(n);
        for (auto [u, v] : C) {
            out[u].push_back(v);
            ++indeg[v];
        }
        std::vector<int> q;
        for (int v = 0; v < n; ++v)
            if (!indeg[v]) q.push_back(v);
        int seen = 0;
        while (!q.empty()) {
            int v = q.back();
            q.pop_back();
            ++seen;
            for (int w : out[v])
                if (--indeg[w] == 0) q.push_back(w);
        }
        acyclic = seen == n;
    }
    bool c2 = std::all_of(A.begin(), A.end(), [&](int a) { return head[a] == 1 && tail[a] == 1; });
    bool c3 = std::all_of(B.begin(), B.end(), [&](int b) { return head[b] <= 1 && tail[b] <= 1; });
    bool c4 = !B.empty() && tail[B.front()] == 1 && head[B.front()] == 0;
    bool c5 = !B.empty() && head[B.back()] == 1 && tail[B.back()] == 0;
    r.conditions = inD && acyclic && c2 && c3 && c4 && c5 && B.size() == A.size() + 1;

    // independent walk from b_1
    if (!B.empty() && inD) {
        std::vector<int> nxt(n, -1);
        bool dup = false;
        for (auto [u, v] : C) {
            if (nxt[u] >= 0) dup = true;
            nxt[u] = v;
        }
        std::vector<char> vis(n, 0);
        int cur = B.front(), count = 0;
        while (cur >= 0 && !vis[cur]) {
            vis[cur] = 1;
            ++count;
            cur = nxt[cur];
        }
        r.walk = !dup && cur < 0 && count == n && static_cast<int>(C.size()) == n - 1 && vis[B.back()] &&
                 nxt[B.back()] < 0;
    }
    return r;
}

bool validate_bipartite_hampath_arcset(const Graph& D, const std::vector<int>& A, const std::vector<int>& B,
                                       const std::vector<Edge>& C) {
    auto r = check_bipartite_hampath_arcset(D, A, B, C);
    return r.conditions && r.walk;
}

// ---- max leaf number -------------------------------------------------------------

int max_leaf_number(const Graph& g0, int component_cap) {
    Graph g = underlying_undirected(g0);
    int c = 0;
    auto comp = components(g, &c);
    int total = 0;
    for (int ci = 0; ci < c; ++ci) {
        std::vector<int> vs;
        for (int v = 0; v < g.n; ++v)
            if (comp[v] == ci) vs.push_back(v);
        const int m = static_cast<int>(vs.size());
        if (m == 1) continue;
        if (m == 2) {
            total += 2;
            continue;
        }
        if (m > component_cap) throw InputError("max_leaf_number: component exceeds cap");
        Graph h = induced_subgraph(g, vs);
        std::vector<std::uint32_t> adj(m, 0);
        for (auto [u, v] : h.edges) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        const std::uint32_t full = (1u << m) - 1;
        auto connected = [&](std::uint32_t S) {
            std::uint32_t seen = S & (~S + 1), frontier = seen;
            while (frontier) {
                std::uint32_t nxt = 0;
                for_bits(frontier, [&](int v) { nxt |= adj[v]; });
                nxt &= S & ~seen;
                seen |= nxt;
                frontier = nxt;
            }
            return seen == S;
        };
        int gamma = m;
        for (std::uint32_t S = 1; S <= full; ++S) {
            int pc = std::popcount(S);
            if (pc >= gamma) continue;
            std::uint32_t dom = S;
            for_bits(S, [&](int v) { dom |= adj[v]; });
            if (dom == full && connected(S)) gamma = pc;
        }
        total += m - gamma;
    }
    return total;
}

// ---- generic decision ----------------------------------------------------------------

std::vector<std::int64_t> vertex_weights(const Instance& inst) {
    std::vector<std::int64_t> w(inst.graph.n, 1);
    for (auto& s : inst.stand_ins) w[s.vertex_id] = s.label;
    return w;
}

Answer decide(const Instance& inst, const OracleLimits& lim) {
    Graph g = inst.labeled() ? expand_labels(inst.graph, inst.labels) : inst.graph;
    g.multigraph = false;
    std::vector<std::int64_t> w;
    if (!inst.stand_ins.empty()) {
        w = vertex_weights(inst);
        w.resize(g.n, 1);
    }
    const std::int64_t k = inst.k.value_or(0);
    auto ge = [](const LengthResult& r, std::int64_t k) {
        if (r.value >= k) return Answer::Yes;
        return r.status == Answer::Unknown ? Answer::Unknown : Answer::No;
    };
    switch (inst.problem) {
        case Problem::LongCycle: {
            const std::int64_t need = std::max<std::int64_t>(k, 1);  // some cycle must exist
            return ge(longest_cycle(g, w, need, lim), need);
        }
        case Problem::LongPath: {
            const std::int64_t need = std::max<std::int64_t>(k, 1);
            return ge(longest_path(g, w, std::nullopt, need, lim), need);
        }
        case Problem::HamiltonianCycle:
            return hamiltonian_cycle(g, lim).answer;
        case Problem::HamiltonianPath:
            return hamiltonian_path(g, lim).answer;
        case Problem::DisjointPaths:
            return disjoint_paths(g, inst.pairs, lim).answer;
        case Problem::DisjointCycles:
            return disjoint_cycles(g, k, lim).answer;
        case Problem::FpStPath:
            return forbidden_pairs_path(g, *inst.s, *inst.t, inst.pairs, FpObjective::Exists, lim).answer;
        case Problem::FpStPathShortest: {
            auto r = forbidden_pairs_path(g, *inst.s, *inst.t, inst.pairs, FpObjective::Shortest, lim);
            if (r.answer != Answer::Yes) return r.answer;
            return r.length <= k ? Answer::Yes : Answer::No;
        }
        case Problem::FpStPathLongest: {
            auto r = forbidden_pairs_path(g, *inst.s, *inst.t, inst.pairs, FpObjective::Longest, lim);
            if (r.answer == Answer::Unknown) return r.length >= k ? Answer::Yes : Answer::Unknown;
            return (r.answer == Answer::Yes && r.length >= k) ? Answer::Yes : Answer::No;
        }
        case Problem::FpLongestPath: {
            auto r = forbidden_pairs_path(g, 0, 0, inst.pairs, FpObjective::LongestAnywhere, lim);
            if (r.answer == Answer::Unknown) return r.length >= k ? Answer::Yes : Answer::Unknown;
            return (r.answer == Answer::Yes && r.length >= k) ? Answer::Yes : Answer::No;
        }
    }
    return Answer::Unknown;
}

}  // namespace kernelcut
