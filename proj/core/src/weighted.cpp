#include "epc/driver.hpp"

namespace epc {

WeightedReduction weighted_reduce(const Graph& g, const std::vector<long long>& w) {
    if (static_cast<int>(w.size()) != g.n()) throw PreconditionError("one weight per vertex is required");
    for (long long x : w)
        if (x < 0) throw PreconditionError("weights must be non-negative");
    WeightedReduction red;
    red.g_weight = w;
    std::vector<int> slot(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (w[v] == 0) {
            red.free_vertices.push_back(v);
            continue;
        }
        slot[v] = static_cast<int>(red.host.size());
        red.host.push_back(v);
        red.weight.push_back(w[v]);
    }
    red.kept = static_cast<int>(red.host.size());
    std::vector<Edge> links;  // reduced-graph edges
    for (auto [u, v] : g.edges()) {
        if (slot[u] < 0 || slot[v] < 0) continue;
        int e = static_cast<int>(red.host.size());
        red.host.push_back(-1);
        red.weight.push_back(std::min(w[u], w[v]));
        red.subdivided.emplace_back(u, v);
        links.emplace_back(slot[u], e);
        links.emplace_back(e, slot[v]);
    }
    GraphBuilder b;
    red.clique.resize(red.host.size());
    for (std::size_t x = 0; x < red.host.size(); ++x) {
        for (long long i = 0; i < red.weight[x]; ++i) {
            int id = b.add_vertex();
            for (int other : red.clique[x]) b.add_edge(other, id);
            red.clique[x].push_back(id);
            red.origin.push_back(static_cast<int>(x));
        }
    }
    for (auto [x, y] : links)
        for (int a : red.clique[x])
            for (int c : red.clique[y]) b.add_edge(a, c);
    red.h = b.build();
    return red;
}

VertexSet cover_from_hitting(const WeightedReduction& red, const VertexSet& s) {
    VertexSet out = red.free_vertices;
    for (int v : s) {
        int x = red.origin.at(v);
        if (red.host[x] >= 0) {
            out.push_back(red.host[x]);
        } else {
            auto [a, b] = red.subdivided[x - red.kept];
            // The edge clique is never larger than its lighter end's clique.
            bool pick_a = red.g_weight[a] < red.g_weight[b] || (red.g_weight[a] == red.g_weight[b] && a < b);
            out.push_back(pick_a ? a : b);
        }
    }
    return normalize(std::move(out));
}

std::vector<std::vector<int>> cycles_from_holes(const WeightedReduction& red, const std::vector<Hole>& holes) {
    std::vector<std::vector<int>> out;
    for (const auto& h : holes) {
        std::vector<int> cyc;
        for (int v : h) {
            int x = red.origin.at(v);
            if (red.host[x] >= 0) cyc.push_back(red.host[x]);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

WeightedOutcome weighted_solve(const Graph& g, const std::vector<long long>& w, int k, const SolveOptions& opts) {
    WeightedReduction red = weighted_reduce(g, w);
    WeightedOutcome out;
    out.reduced = epc_solve(red.h, k, opts);
    if (out.reduced.packed()) {
        out.packed = true;
        out.cycles = cycles_from_holes(red, out.reduced.packing);
        return out;
    }
    out.cover = cover_from_hitting(red, out.reduced.hitting);
    for (int v : out.cover) out.cover_weight += w[v];
    if (!is_forest(g, out.cover)) throw DefectError("weighted cover leaves a cycle");
    return out;
}

}  // namespace epc
