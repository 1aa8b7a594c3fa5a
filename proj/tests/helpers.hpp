#pragma once

#include <random>
#include <vector>

#include "kernelcut/graph.hpp"

namespace testing {

using kernelcut::Edge;
using kernelcut::Graph;

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return kernelcut::make_graph(n, e);
}

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return kernelcut::make_graph(n, e);
}

inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return kernelcut::make_graph(leaves + 1, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return kernelcut::make_graph(n, e);
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return kernelcut::make_graph(10, e);
}

// Replaces every edge {u,v} by a path with `times` new internal vertices.
inline Graph subdivide(const Graph& g, int times) {
    Graph out;
    out.n = g.n;
    for (auto [u, v] : g.edges) {
        int prev = u;
        for (int i = 0; i < times; ++i) {
            out.edges.push_back({prev, out.n});
            prev = out.n++;
        }
        out.edges.push_back({prev, v});
    }
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.edges.push_back({u, v});
    return g;
}

}  // namespace testing
