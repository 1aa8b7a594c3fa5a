#include "kernelcut/matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace kernelcut {

Matching maximum_matching(const BipartiteGraph& h) {
    const int L = h.left, R = h.right;
    std::vector<std::vector<int>> adj(L);
    for (auto [l, r] : h.edges) adj[l].push_back(r);
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    const int INF = std::numeric_limits<int>::max();
    std::vector<int> matchL(L, -1), matchR(R, -1), dist(L);

    auto bfs = [&] {
        std::queue<int> q;
        bool found = false;
        for (int l = 0; l < L; ++l) {
            if (matchL[l] < 0) {
                dist[l] = 0;
                q.push(l);
            } else {
                dist[l] = INF;
            }
        }
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj[l]) {
                int m = matchR[r];
                if (m < 0) {
                    found = true;
                } else if (dist[m] == INF) {
                    dist[m] = dist[l] + 1;
                    q.push(m);
                }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int l) {
        for (int r : adj[l]) {
            int m = matchR[r];
            if (m < 0 || (dist[m] == dist[l] + 1 && dfs(m))) {
                matchL[l] = r;
                matchR[r] = l;
                return true;
            }
        }
        dist[l] = INF;
        return false;
    };
    while (bfs())
        for (int l = 0; l < L; ++l)
            if (matchL[l] < 0) dfs(l);

    Matching m;
    for (int l = 0; l < L; ++l) {
        if (matchL[l] >= 0) {
            m.pairs.push_back({l, matchL[l]});
            m.matched_left.push_back(l);
        }
    }
    return m;
}

bool coverable(const BipartiteGraph& h, const std::vector<int>& demand) {
    if (demand.empty()) return true;
    std::vector<int> idx(h.right, -1);
    for (std::size_t i = 0; i < demand.size(); ++i) idx[demand[i]] = static_cast<int>(i);
    BipartiteGraph sub;
    sub.left = h.left;
    sub.right = static_cast<int>(demand.size());
    for (auto [l, r] : h.edges)
        if (idx[r] >= 0) sub.edges.push_back({l, idx[r]});
    return maximum_matching(sub).size() == sub.right;
}

BipartiteGraph restrict_left(const BipartiteGraph& h, const std::vector<int>& keep_left) {
    std::vector<char> keep(h.left, 0);
    for (int l : keep_left) keep[l] = 1;
    BipartiteGraph out;
    out.left = h.left;
    out.right = h.right;
    for (auto e : h.edges)
        if (keep[e.first]) out.edges.push_back(e);
    return out;
}

bool matched_restriction_holds(const BipartiteGraph& h, int cap) {
    if (h.right > cap) throw std::invalid_argument("matched_restriction_holds: right side exceeds cap");
    Matching m = maximum_matching(h);
    BipartiteGraph r = restrict_left(h, m.matched_left);
    const std::uint32_t full = 1u << h.right;
    std::vector<int> demand;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        demand.clear();
        for (int i = 0; i < h.right; ++i)
            if (mask >> i & 1) demand.push_back(i);
        if (coverable(h, demand) && !coverable(r, demand)) return false;
    }
    return true;
}

int brute_force_matching_size(const BipartiteGraph& h) {
    std::vector<std::pair<int, int>> es = h.edges;
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    std::vector<char> usedL(h.left, 0), usedR(h.right, 0);
    int best = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cur) {
        best = std::max(best, cur);
        if (cur + static_cast<int>(es.size() - i) <= best) return;
        for (std::size_t j = i; j < es.size(); ++j) {
            auto [l, r] = es[j];
            if (usedL[l] || usedR[r]) continue;
            usedL[l] = usedR[r] = 1;
            rec(j + 1, cur + 1);
            usedL[l] = usedR[r] = 0;
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace kernelcut
