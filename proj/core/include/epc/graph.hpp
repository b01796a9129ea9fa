#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epc/errors.hpp"

namespace epc {

using VertexSet = std::vector<int>;  // sorted, strictly increasing
using Path = std::vector<int>;
using Edge = std::pair<int, int>;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    bool contains(int v) const { return v >= 0 && v < n(); }
    std::vector<Edge> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    std::size_t m_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : n_(n) {}
    int add_vertex() { return n_++; }
    int add_vertices(int count) {
        int first = n_;
        n_ += count;
        return first;
    }
    void add_edge(int u, int v);
    int n() const { return n_; }
    Graph build() const { return Graph::from_edges(n_, edges_); }

private:
    int n_;
    std::vector<Edge> edges_;
};

struct Induced {
    Graph graph;
    std::vector<int> to_host;  // local -> host, ascending
    int local(int host) const {
        auto it = std::lower_bound(to_host.begin(), to_host.end(), host);
        return it != to_host.end() && *it == host ? static_cast<int>(it - to_host.begin()) : -1;
    }
    std::vector<int> lift(const std::vector<int>& local_ids) const {
        std::vector<int> out;
        out.reserve(local_ids.size());
        for (int v : local_ids) out.push_back(to_host[v]);
        return out;
    }
};

Graph parse_graph(std::string_view text);
std::string write_edge_list(const Graph& g);

// Edge list plus optional "w <v> <weight>" lines.
struct WeightedText {
    Graph graph;
    std::vector<long long> weights;  // empty if no w lines
};
WeightedText parse_weighted(std::string_view text);

Induced induced_subgraph(const Graph& g, const VertexSet& s);
Induced delete_vertices(const Graph& g, const VertexSet& removed);

VertexSet r_neighborhood(const Graph& g, const VertexSet& s, int r);
std::vector<int> bfs_distances(const Graph& g, int source);

VertexSet normalize(VertexSet s);
void check_range(const Graph& g, const VertexSet& s);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);

bool is_path(const Graph& g, const Path& p);
std::vector<VertexSet> components(const Graph& g);

// FNV-1a over the canonical edge list; certificates reference graphs by it.
std::uint64_t graph_hash(const Graph& g);
std::string hash_hex(std::uint64_t h);

// Epoch-stamped membership marks for repeated masked searches.
class Marks {
public:
    explicit Marks(int n = 0) : stamp_(n, 0) {}
    void resize(int n) { stamp_.assign(n, 0), cur_ = 1; }
    void clear() {
        if (++cur_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            cur_ = 1;
        }
    }
    void set(int v) { stamp_[v] = cur_; }
    void unset(int v) { stamp_[v] = 0; }
    bool test(int v) const { return stamp_[v] == cur_; }

private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t cur_ = 1;
};

}  // namespace epc
