#pragma once

#include <string>
#include <vector>

#include "support.hpp"

// Recomputes the anchor context from the definitions and checks stage
// outputs of the long-hole routine against it.
namespace checks {

using epc::Graph;
using epc::Hole;
using epc::VertexSet;

struct Context {
    int m = 0;
    VertexSet dom;
    std::vector<VertexSet> zone;  // by position
    std::vector<int> pos;         // host -> position or -1
};

inline Context context(const Graph& g, const Hole& c) {
    Context ctx;
    ctx.m = static_cast<int>(c.size());
    ctx.pos.assign(g.n(), -1);
    for (int i = 0; i < ctx.m; ++i) ctx.pos[c[i]] = i;
    for (int v = 0; v < g.n(); ++v) {
        if (ctx.pos[v] >= 0) continue;
        int seen = 0;
        for (int x : g.neighbors(v)) seen += ctx.pos[x] >= 0;
        if (seen == ctx.m) ctx.dom.push_back(v);
    }
    ctx.zone.resize(ctx.m);
    for (int i = 0; i < ctx.m; ++i) {
        VertexSet z{c[i]};
        for (int x : g.neighbors(c[i]))
            if (ctx.pos[x] < 0 && !epc::set_contains(ctx.dom, x)) z.push_back(x);
        ctx.zone[i] = epc::normalize(z);
    }
    return ctx;
}

// Positions whose zone meets the vertex set (all of them when it meets D).
inline std::vector<int> support(const Context& ctx, const VertexSet& s) {
    std::vector<int> out;
    for (int v : s)
        if (epc::set_contains(ctx.dom, v)) {
            for (int i = 0; i < ctx.m; ++i) out.push_back(i);
            return out;
        }
    for (int i = 0; i < ctx.m; ++i)
        if (!epc::set_intersection(ctx.zone[i], s).empty()) out.push_back(i);
    return out;
}

// Every hole living inside the zones of 7 consecutive positions, found by
// exhaustive enumeration per window.
inline std::vector<Hole> window_petals(const Graph& g, const Context& ctx, int span = 7) {
    std::vector<Hole> out;
    std::set<VertexSet> seen;
    for (int s = 0; s < ctx.m; ++s) {
        VertexSet z;
        bool trivial = true;
        for (int i = 0; i < span; ++i) {
            const VertexSet& zi = ctx.zone[(s + i) % ctx.m];
            trivial = trivial && zi.size() == 1;
            z.insert(z.end(), zi.begin(), zi.end());
        }
        if (trivial) continue;
        epc::Induced sub = epc::induced_subgraph(g, epc::normalize(z));
        for (const auto& h : epc::oracle::enumerate_holes(sub.graph, sub.graph.n(), sub.graph.n())) {
            Hole host = sub.lift(h);
            if (seen.insert(epc::normalize(host)).second) out.push_back(host);
        }
    }
    return out;
}

// G[N[C] \ D] minus the given set.
inline Graph sunflower_region(const Graph& g, const Context& ctx, const VertexSet& removed) {
    VertexSet keep;
    for (int i = 0; i < ctx.m; ++i) keep.insert(keep.end(), ctx.zone[i].begin(), ctx.zone[i].end());
    keep = epc::set_minus(epc::normalize(keep), removed);
    return epc::induced_subgraph(g, keep).graph;
}

inline bool hits(const VertexSet& set, const Hole& h) {
    return !epc::set_intersection(set, epc::normalize(h)).empty();
}

inline bool valid_packing(const Graph& g, const std::vector<Hole>& holes, std::size_t want) {
    if (holes.size() < want) return false;
    for (const auto& h : holes)
        if (!support::is_induced_cycle(g, h)) return false;
    return support::disjoint_sets(holes);
}

}  // namespace checks
