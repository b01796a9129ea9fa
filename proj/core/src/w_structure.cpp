#include <climits>
#include <tuple>

#include "epc/core_hitting.hpp"

namespace epc {

namespace {

// Membership state of the growing subgraph F.
struct FState {
    std::vector<char> in;
    std::vector<int> deg;       // degree inside F
    std::vector<int> touching;  // number of F-neighbours

    explicit FState(const AnchoredInstance& inst) : in(inst.g.n(), 0), deg(inst.g.n(), 0), touching(inst.g.n(), 0) {
        for (int c : inst.cycle) add_vertex(inst.g, c), deg[c] = 2;
    }
    void add_vertex(const Graph& g, int v) {
        in[v] = 1;
        for (int w : g.neighbors(v)) ++touching[w];
    }
    bool closed_nbhd(int v) const { return in[v] || touching[v] > 0; }
    void add_path(const Graph& g, const Path& p) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) add_vertex(g, p[i]), deg[p[i]] = 2;
        ++deg[p.front()];
        ++deg[p.back()];
    }
};

// BFS over an allowed-predicate from one source; stops after the first level
// holding a target, or past max_depth.
template <class Allowed, class Target>
int bfs_to_targets(const Graph& g, int src, Allowed allowed, Target target, int max_depth, std::vector<int>& dist,
                   std::vector<int>& order, std::vector<int>& hits) {
    order.assign(1, src);
    hits.clear();
    dist[src] = 0;
    int found_at = -1;
    for (std::size_t h = 0; h < order.size(); ++h) {
        int u = order[h];
        if (found_at >= 0 && dist[u] >= found_at) break;
        if (dist[u] >= max_depth) break;
        for (int x : g.neighbors(u)) {
            if (dist[x] >= 0 || !allowed(x)) continue;
            dist[x] = dist[u] + 1;
            order.push_back(x);
            if (target(x)) hits.push_back(x), found_at = dist[x];
        }
    }
    return found_at;
}

void reset(std::vector<int>& dist, const std::vector<int>& order) {
    for (int v : order) dist[v] = -1;
}

}  // namespace

WStructure build_W(const AnchoredInstance& inst) {
    const Graph& g = inst.g;
    const int n = g.n(), m = inst.m();
    FState f(inst);
    WStructure w;
    for (int i = 0; i < m; ++i) w.edges.emplace_back(inst.at(i), inst.at(i + 1));

    VertexSet xs = normalize(inst.cycle);
    std::vector<int> dist(n, -1), order, hits, back(n, -1), border;
    Marks closed_xp(n);
    using Key = std::tuple<int, int, int, int, int, int, int>;  // len, y off C, x, y, x', v, y'
    while (true) {
        Key best{INT_MAX, 0, 0, 0, 0, 0, 0};
        bool have = false;
        for (int x : xs) {
            if (f.deg[x] != 2) continue;
            for (int xp : g.neighbors(x)) {
                if (f.in[xp] || inst.is_dom[xp]) continue;
                closed_xp.clear();
                closed_xp.set(xp);
                for (int t : g.neighbors(xp)) closed_xp.set(t);
                for (int v : g.neighbors(xp)) {
                    if (inst.is_dom[v] || f.closed_nbhd(v)) continue;
                    int cap = have ? std::get<0>(best) - 3 : INT_MAX;
                    auto allowed = [&](int u) { return !inst.is_dom[u] && !f.in[u] && !closed_xp.test(u); };
                    auto best_y = [&](int u) {
                        int pick = -1;
                        for (int y : g.neighbors(u)) {
                            if (!f.in[y] || f.deg[y] != 2 || y == x) continue;
                            bool better = pick < 0 || (inst.on_cycle(y) && !inst.on_cycle(pick)) ||
                                          (inst.on_cycle(y) == inst.on_cycle(pick) && y < pick);
                            if (better) pick = y;
                        }
                        return pick;
                    };
                    auto target = [&](int u) { return best_y(u) >= 0; };
                    int d = bfs_to_targets(g, v, allowed, target, cap, dist, order, hits);
                    reset(dist, order);
                    if (d < 0) continue;
                    for (int yp : hits) {
                        int y = best_y(yp);
                        Key key{d + 3, inst.on_cycle(y) ? 0 : 1, x, y, xp, v, yp};
                        if (!have || key < best) best = key, have = true;
                    }
                }
            }
        }
        if (!have) break;
        auto [len, off, x, y, xp, v, yp] = best;
        (void)off;
        // Lexicographically least shortest v -> y' path in the same mask.
        closed_xp.clear();
        closed_xp.set(xp);
        for (int t : g.neighbors(xp)) closed_xp.set(t);
        auto allowed = [&](int u) { return !inst.is_dom[u] && !f.in[u] && (u == v || !closed_xp.test(u)); };
        border.assign(1, yp);
        back[yp] = 0;
        for (std::size_t h = 0; h < border.size(); ++h) {
            int u = border[h];
            if (u == v) break;
            for (int t : g.neighbors(u))
                if (back[t] < 0 && allowed(t)) back[t] = back[u] + 1, border.push_back(t);
        }
        if (back[v] != len - 3) throw DefectError("extension path length changed on reconstruction");
        Path p{x, xp, v};
        for (int cur = v; cur != yp;) {
            int nxt = -1;
            for (int t : g.neighbors(cur))
                if (back[t] == back[cur] - 1 && allowed(t) && (nxt < 0 || t < nxt)) nxt = t;
            cur = nxt;
            p.push_back(cur);
        }
        p.push_back(y);
        for (int u : border) back[u] = -1;
        f.add_path(g, p);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) w.edges.emplace_back(p[i], p[i + 1]);
        w.branch.push_back(x);
        w.branch.push_back(y);
        w.extensions.push_back(std::move(p));
    }
    for (int v = 0; v < n; ++v)
        if (f.in[v]) w.vertices.push_back(v);
    w.branch = normalize(std::move(w.branch));
    return w;
}

std::string extension_violation(const AnchoredInstance& inst, const WStructure& w, std::size_t step) {
    if (step >= w.extensions.size()) return "no such extension";
    const Graph& g = inst.g;
    FState f(inst);
    for (std::size_t i = 0; i < step; ++i) f.add_path(g, w.extensions[i]);
    const Path& p = w.extensions[step];
    if (p.size() < 3) return "extension too short";
    int x = p.front(), y = p.back();
    if (x == y) return "extension ends coincide";
    if (!f.in[x] || !f.in[y]) return "extension ends are not in F";
    if (f.deg[x] != 2 || f.deg[y] != 2) return "extension end is already branching";
    if (!inst.on_cycle(x) && !inst.on_cycle(y)) return "neither end lies on C";
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.adjacent(p[i], p[i + 1])) return "extension skips an edge";
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (f.in[p[i]]) return "extension interior meets F";
        if (inst.is_dom[p[i]]) return "extension uses a dominator";
        for (std::size_t j = i + 2; j + 1 < p.size(); ++j)
            if (g.adjacent(p[i], p[j])) return "extension interior is not induced";
    }
    bool far = false;
    if (p.size() >= 5) {
        if (inst.on_cycle(x) && !f.closed_nbhd(p[2])) far = true;
        if (inst.on_cycle(y) && !f.closed_nbhd(p[p.size() - 3])) far = true;
    }
    if (!far) return "no vertex outside N[F] two steps from a cycle end";
    return {};
}

std::vector<Hole> holes_from_W(const AnchoredInstance& inst, const WStructure& w) {
    auto packed = pack_cycles_23(w.edges, inst.k + 1);
    if (static_cast<int>(packed.cycles.size()) < inst.k + 1) return {};
    std::vector<Hole> out;
    for (int i = 0; i <= inst.k; ++i) {
        Induced sub = induced_subgraph(inst.g, normalize(packed.cycles[i]));
        auto h = shortest_hole(sub.graph);
        if (!h) throw DefectError("cycle of W carries no hole");
        out.push_back(sub.lift(*h));
    }
    return out;
}

StepResult hit_almost_extensions(const AnchoredInstance& inst, const WStructure& w) {
    const Graph& g = inst.g;
    const int n = g.n(), m = inst.m(), k = inst.k;
    std::vector<char> in_w(n, 0), near_w(n, 0);
    for (int v : w.vertices) {
        in_w[v] = near_w[v] = 1;
        for (int t : g.neighbors(v)) near_w[t] = 1;
    }
    std::vector<char> branching(n, 0);
    for (int v : w.branch) branching[v] = 1;

    struct Root {
        int pos;
        Hole hole;
    };
    std::vector<Root> roots;
    std::vector<int> dist(n, -1), order, hits;
    Marks zv(n), closed_w1(n);
    const int limit = 5 * k + 5;
    for (int i = 0; i < m && static_cast<int>(roots.size()) < limit; ++i) {
        int v = inst.at(i);
        if (branching[v] || inst.zone[i].size() < 3) continue;
        zv.clear();
        for (int z : inst.zone[i])
            if (z != v) zv.set(z);
        bool done = false;
        for (int w1 : inst.zone[i]) {
            if (w1 == v || done) continue;
            closed_w1.clear();
            closed_w1.set(w1);
            for (int t : g.neighbors(w1)) closed_w1.set(t);
            for (int w2 : g.neighbors(w1)) {
                if (inst.is_dom[w2] || near_w[w2]) continue;
                auto allowed = [&](int u) { return !inst.is_dom[u] && !in_w[u] && !closed_w1.test(u); };
                auto target = [&](int u) { return zv.test(u); };
                int d = bfs_to_targets(g, w2, allowed, target, INT_MAX, dist, order, hits);
                if (d < 0) {
                    reset(dist, order);
                    continue;
                }
                int w3 = *std::min_element(hits.begin(), hits.end());
                Path p{w3};
                for (int cur = w3; cur != w2;) {
                    int nxt = -1;
                    for (int t : g.neighbors(cur))
                        if (dist[t] == dist[cur] - 1 && (t == w2 || allowed(t)) && (nxt < 0 || t < nxt)) nxt = t;
                    cur = nxt;
                    p.push_back(cur);
                }
                reset(dist, order);
                VertexSet cyc = p;
                cyc.push_back(w1);
                cyc.push_back(v);
                auto h = hole_through(g, normalize(std::move(cyc)), w2);
                if (!h) throw DefectError("almost extension cycle yields no hole");
                roots.push_back({i, std::move(*h)});
                done = true;
                break;
            }
        }
    }

    StepResult out;
    if (static_cast<int>(roots.size()) >= limit) {
        for (int r = 0; r < 5; ++r) {
            std::vector<Hole> pick;
            for (const auto& root : roots)
                if (root.pos % 5 == r && root.pos < m - 4 && static_cast<int>(pick.size()) < k + 1)
                    pick.push_back(root.hole);
            if (static_cast<int>(pick.size()) < k + 1) continue;
            std::vector<char> used(n, 0);
            for (const auto& h : pick)
                for (int x : h) {
                    if (used[x]) throw DefectError("almost-extension holes overlap");
                    used[x] = 1;
                }
            out.packing = std::move(pick);
            return out;
        }
        throw DefectError("no residue class holds k+1 almost-extension roots");
    }
    for (const auto& root : roots) out.set.push_back(inst.at(root.pos));
    out.set = normalize(std::move(out.set));
    return out;
}

}  // namespace epc
