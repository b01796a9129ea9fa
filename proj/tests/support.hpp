#pragma once

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "epc/epc.hpp"

namespace support {

using epc::Edge;
using epc::Graph;
using epc::VertexSet;

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph::from_edges(a + b, e);
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

// Outer 0..4, inner 5..9 as a pentagram.
inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

inline Graph grid(int rows, int cols) {
    std::vector<Edge> e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) e.emplace_back(v, v + 1);
            if (r + 1 < rows) e.emplace_back(v, v + cols);
        }
    return Graph::from_edges(rows * cols, e);
}

// Disjoint copies side by side.
inline Graph disjoint(const std::vector<Graph>& parts) {
    std::vector<Edge> e;
    int off = 0;
    for (const auto& g : parts) {
        for (auto [u, v] : g.edges()) e.emplace_back(u + off, v + off);
        off += g.n();
    }
    return Graph::from_edges(off, e);
}

// Independent of the library's own generators.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (u(rng) < p) e.emplace_back(a, b);
    return Graph::from_edges(n, e);
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline VertexSet random_subset(std::mt19937_64& rng, int n, double p) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (u(rng) < p) s.push_back(v);
    return s;
}

inline std::vector<int> bfs(const Graph& g, const VertexSet& sources, const std::vector<char>& blocked = {}) {
    std::vector<int> d(g.n(), -1);
    std::queue<int> q;
    for (int s : sources)
        if (blocked.empty() || !blocked[s]) d[s] = 0, q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int x : g.neighbors(u))
            if (d[x] < 0 && (blocked.empty() || !blocked[x])) d[x] = d[u] + 1, q.push(x);
    }
    return d;
}

inline bool disjoint_sets(const std::vector<std::vector<int>>& sets) {
    std::set<int> seen;
    for (const auto& s : sets)
        for (int v : s)
            if (!seen.insert(v).second) return false;
    return true;
}

// Induced cycle of length >= 4, checked from scratch.
inline bool is_induced_cycle(const Graph& g, const std::vector<int>& c) {
    const int m = static_cast<int>(c.size());
    if (m < 4) return false;
    if (std::set<int>(c.begin(), c.end()).size() != c.size()) return false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if (g.adjacent(c[i], c[j]) != consecutive) return false;
        }
    return true;
}

// Plain cycle (length >= 3) in g.
inline bool is_cycle(const Graph& g, const std::vector<int>& c) {
    const int m = static_cast<int>(c.size());
    if (m < 3) return false;
    if (std::set<int>(c.begin(), c.end()).size() != c.size()) return false;
    for (int i = 0; i < m; ++i)
        if (!g.adjacent(c[i], c[(i + 1) % m])) return false;
    return true;
}

inline Graph remove(const Graph& g, const VertexSet& s) { return epc::delete_vertices(g, s).graph; }

}  // namespace support
