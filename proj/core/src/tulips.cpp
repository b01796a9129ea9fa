#include <climits>
#include <map>
#include <optional>

#include "epc/core_hitting.hpp"
#include "epc/flow.hpp"

namespace epc {

namespace {

long long size_budget(const AnchoredInstance& inst, int multiplier) {
    return multiplier * (inst.profile.s(inst.k + 1) + 42LL * inst.k + 26);
}

}  // namespace

ExtAssembly assemble_T_ext(const AnchoredInstance& inst, const HittingLedger& ledger) {
    VertexSet base = ledger.petal;
    for (const VertexSet* s : {&ledger.full, &ledger.trav_sunf, &ledger.branch, &ledger.almost})
        base = set_union(base, *s);
    ExtAssembly out;
    out.t_ext = set_union(base, inst.hosts(inst.cycle_ball(inst.positions_of(base), inst.profile.ext_radius)));
    if (inst.profile.production &&
        static_cast<long long>(out.t_ext.size()) > size_budget(inst, inst.profile.ext_multiplier))
        throw DefectError("T_ext exceeds its size budget");

    const int m = inst.m();
    std::vector<char> taken(m, 0);
    int first = -1;
    for (int p : inst.positions_of(out.t_ext)) {
        taken[p] = 1;
        if (first < 0) first = p;
    }
    if (first < 0) {
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        out.fragments.push_back(std::move(all));
        return out;
    }
    std::vector<int> run;
    for (int step = 1; step <= m; ++step) {
        int p = inst.wrap(static_cast<long long>(first) + step);
        if (!taken[p]) {
            run.push_back(p);
        } else if (!run.empty()) {
            out.fragments.push_back(std::move(run));
            run.clear();
        }
    }
    return out;
}

VertexSet tunnel_cut(const AnchoredInstance& inst, const VertexSet& t_ext, const std::vector<int>& fragment) {
    const int mq = static_cast<int>(fragment.size());
    if (mq < inst.profile.fragment_min) throw PreconditionError("fragment too short for a tunnel cut");
    VertexSet inner = set_minus(set_minus(inst.zone_union(fragment), t_ext), inst.hosts(fragment));
    Induced sub = induced_subgraph(inst.g, inner);
    auto parts = components(sub.graph);
    auto meets = [&](const VertexSet& part, int q) {
        for (int v : part)
            if (set_contains(inst.zone[q], sub.to_host[v])) return true;
        return false;
    };
    int chosen = -1;
    for (int c = 0; c < static_cast<int>(parts.size()); ++c)
        if (meets(parts[c], fragment[0]) && meets(parts[c], fragment[4])) {
            if (chosen >= 0) throw InvariantBreach("two tunnel components reach both q_1 and q_5");
            chosen = c;
        }
    if (chosen < 0) return {};
    int x = -1;
    for (int v : parts[chosen])
        for (int p : inst.zpos[sub.to_host[v]]) {
            auto it = std::find(fragment.begin(), fragment.end(), p);
            if (it != fragment.end()) x = std::max(x, static_cast<int>(it - fragment.begin()));
        }
    std::vector<int> cut;
    for (int i = std::max(0, x - 4); i <= x; ++i) cut.push_back(fragment[i]);
    return inst.hosts(cut);
}

StepResult hit_avoiding_tulips(const AnchoredInstance& inst, const ExtAssembly& ext) {
    StepResult out;
    const int trim = inst.profile.fragment_trim;
    for (const auto& q : ext.fragments) {
        const int mq = static_cast<int>(q.size());
        if (mq < inst.profile.fragment_min) {
            out.set = set_union(out.set, inst.hosts(q));
            continue;
        }
        std::vector<int> ends(q.begin(), q.begin() + trim);
        ends.insert(ends.end(), q.end() - trim, q.end());
        out.set = set_union(out.set, inst.hosts(ends));
        out.set = set_union(out.set, tunnel_cut(inst, ext.t_ext, q));
    }
    if (inst.profile.production &&
        static_cast<long long>(out.set.size()) > size_budget(inst, inst.profile.avoid_multiplier))
        throw DefectError("T_avoid exceeds its size budget");
    return out;
}

StepResult hit_traversing_tulips(const AnchoredInstance& inst, const VertexSet& t_ext, const VertexSet& t_avoid) {
    const Graph& g = inst.g;
    const int n = g.n(), k = inst.k, step = inst.profile.block, blocks = inst.m() / step;
    std::vector<char> blocked(n, 0);
    for (int v : t_ext) blocked[v] = 1;
    for (int v : t_avoid) blocked[v] = 1;
    VertexSet left;
    for (int d : inst.dom)
        if (!blocked[d]) left.push_back(d);

    std::vector<int> dist(n, -1), order;
    Marks closed(n);
    // Hole d x y z ... with z outside N[C], or nothing.
    auto probe = [&](int d, int x) -> std::optional<Hole> {
        for (int y : g.neighbors(x)) {
            if (inst.on_cycle(y) || inst.is_dom[y] || blocked[y] || g.adjacent(y, d)) continue;
            for (int z : g.neighbors(y)) {
                if (inst.on_cycle(z) || inst.is_dom[z] || !inst.zpos[z].empty() || blocked[z] || g.adjacent(z, d))
                    continue;
                closed.clear();
                for (int c : {x, y}) {
                    closed.set(c);
                    for (int t : g.neighbors(c)) closed.set(t);
                }
                auto allowed = [&](int u) {
                    return u == d || (!inst.on_cycle(u) && !inst.is_dom[u] && !blocked[u] && !closed.test(u));
                };
                order.assign(1, z);
                dist[z] = 0;
                bool hit = false;
                for (std::size_t h = 0; h < order.size() && !hit; ++h)
                    for (int t : g.neighbors(order[h]))
                        if (dist[t] < 0 && allowed(t)) {
                            dist[t] = dist[order[h]] + 1;
                            order.push_back(t);
                            if (t == d) {
                                hit = true;
                                break;
                            }
                        }
                Hole hole;
                if (hit) {
                    Path back{d};
                    for (int cur = d; cur != z;) {
                        int nxt = -1;
                        for (int t : g.neighbors(cur))
                            if (dist[t] == dist[cur] - 1 && (nxt < 0 || t < nxt)) nxt = t;
                        cur = nxt;
                        back.push_back(cur);
                    }
                    hole = {x, y};
                    hole.insert(hole.end(), back.rbegin(), back.rend());
                }
                for (int u : order) dist[u] = -1;
                if (hit) {
                    if (!is_hole(g, hole)) throw DefectError("traversing tulip probe produced a non-hole");
                    return hole;
                }
            }
        }
        return std::nullopt;
    };

    StepResult out;
    VertexSet acc;
    for (int cls = 0; cls < step; ++cls) {
        std::vector<int> right;
        for (int j = 0; j < blocks; ++j) {
            int x = inst.at(static_cast<long long>(step) * j + cls);
            if (!blocked[x]) right.push_back(x);
        }
        std::vector<std::vector<int>> adj(left.size());
        std::map<std::pair<int, int>, Hole> found;
        for (std::size_t r = 0; r < right.size() && !left.empty(); ++r) {
            int x = right[r];
            if (inst.zone[inst.pos[x]].size() < 2) continue;
            for (std::size_t l = 0; l < left.size(); ++l)
                if (auto h = probe(left[l], x)) {
                    adj[l].push_back(static_cast<int>(r));
                    found[{static_cast<int>(l), static_cast<int>(r)}] = std::move(*h);
                }
        }
        auto mt = hopcroft_karp(static_cast<int>(left.size()), static_cast<int>(right.size()), adj);
        if (mt.size >= k + 1) {
            std::vector<char> used(n, 0);
            for (std::size_t l = 0; l < left.size() && static_cast<int>(out.packing.size()) < k + 1; ++l) {
                if (mt.match_left[l] < 0) continue;
                const Hole& h = found.at({static_cast<int>(l), mt.match_left[l]});
                for (int v : h) {
                    if (used[v]) throw DefectError("traversing tulip holes overlap");
                    used[v] = 1;
                }
                out.packing.push_back(h);
            }
            return out;
        }
        for (int l : mt.cover_left) acc.push_back(left[l]);
        std::vector<int> ball;
        for (int r : mt.cover_right) ball.push_back(inst.pos[right[r]]);
        auto near = inst.hosts(inst.cycle_ball(ball, 2));
        acc.insert(acc.end(), near.begin(), near.end());
    }
    long long tail = static_cast<long long>(step) * blocks;
    for (int i = -2; i <= 6; ++i) acc.push_back(inst.at(tail + i));
    out.set = set_minus(set_minus(normalize(std::move(acc)), t_ext), t_avoid);
    return out;
}

}  // namespace epc
