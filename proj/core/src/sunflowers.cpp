#include <map>

#include "epc/core_hitting.hpp"
#include "epc/flow.hpp"

namespace epc {

namespace {

std::vector<int> span(long long from, int count) {
    std::vector<int> out;
    for (int i = 0; i < count; ++i) out.push_back(static_cast<int>(from + i));
    return out;
}

bool trivial_zones(const AnchoredInstance& inst, long long from, int count) {
    for (int i = 0; i < count; ++i)
        if (inst.zone[inst.wrap(from + i)].size() > 1) return false;
    return true;
}

bool in_zone(const AnchoredInstance& inst, int v, long long p) {
    return set_contains(inst.zone[inst.wrap(p)], v);
}

}  // namespace

StepResult hit_petals(const AnchoredInstance& inst) {
    const int m = inst.m(), want = inst.k + 1;
    const int inner = inst.profile.petal_span, outer = inst.profile.petal_window;
    std::vector<char> marked(m, 0);
    std::vector<int> xs;
    StepResult out;
    std::vector<Hole> found;
    for (int s = 0; s < m; ++s) {
        bool clear = true;
        for (int i = 1; i <= inner && clear; ++i) clear = !marked[inst.wrap(s + i)];
        if (!clear || trivial_zones(inst, s + 1, inner)) continue;
        VertexSet zs = set_minus(inst.zone_union(span(s + 1, inner)), inst.zone_union({s, s + outer - 1}));
        Induced sub = induced_subgraph(inst.g, zs);
        if (chordal_fast(sub.graph)) continue;
        auto h = shortest_hole(sub.graph);
        if (!h) throw DefectError("chordality checks disagree inside a petal window");
        found.push_back(sub.lift(*h));
        for (int i = 1; i <= inner; ++i) marked[inst.wrap(s + i)] = 1, xs.push_back(inst.wrap(s + i));
        if (static_cast<int>(found.size()) == want) {
            out.packing = std::move(found);
            return out;
        }
    }
    out.set = inst.hosts(inst.cycle_ball(xs, inst.profile.petal_radius));
    return out;
}

int clean_window(const AnchoredInstance& inst, const VertexSet& t_petal) {
    const int m = inst.m(), len = inst.profile.sunflower_window;
    if (m < len) throw NoCleanWindow("cycle shorter than a sunflower window");
    std::vector<char> bad(m, 0);
    for (int p : inst.positions_of(t_petal)) bad[p] = 1;
    // v_{-2} .. v_{22} must all be clean; report v_0.
    for (int s = 0; s < m; ++s) {
        bool ok = true;
        for (int i = -2; i < len - 2 && ok; ++i) ok = !bad[inst.wrap(s + i)];
        if (ok) return s;
    }
    throw NoCleanWindow("every sunflower window meets T_petal");
}

WindowFamilies window_families(const AnchoredInstance& inst, const VertexSet& t_petal, int start) {
    const int m = inst.m();
    WindowFamilies out;
    out.start = start;

    Induced shrt = induced_subgraph(inst.g, inst.zone_union(span(start, 21)));
    auto local_all = [](const Induced& sub, const VertexSet& hosts) {
        VertexSet out;
        for (int v : hosts)
            if (int l = sub.local(v); l >= 0) out.push_back(l);
        return normalize(std::move(out));
    };
    auto r1 = menger(shrt.graph, local_all(shrt, inst.zone[inst.wrap(start)]),
                     local_all(shrt, inst.zone[inst.wrap(start + 20)]));
    for (auto& p : r1.paths) out.short_arc.push_back(shrt.lift(p));
    out.short_cut = normalize(shrt.lift(r1.separator));

    // v_15, v_16, ..., v_{m-1}, v_0, ..., v_5: everything except v_6..v_14.
    VertexSet tunnel = set_minus(inst.zone_union(span(start + 15, m - 9)), t_petal);
    Induced lng = induced_subgraph(inst.g, tunnel);
    auto r2 = menger(lng.graph, local_all(lng, set_minus(inst.zone[inst.wrap(start + 5)], t_petal)),
                     local_all(lng, set_minus(inst.zone[inst.wrap(start + 15)], t_petal)));
    for (auto& p : r2.paths) out.long_arc.push_back(lng.lift(p));
    out.long_cut = normalize(lng.lift(r2.separator));
    return out;
}

StepResult hit_full_sunflowers(const AnchoredInstance& inst, const VertexSet& t_petal) {
    int start = clean_window(inst, t_petal);
    WindowFamilies fam = window_families(inst, t_petal, start);
    const int k = inst.k;
    bool short_large = static_cast<int>(fam.short_arc.size()) >= inst.profile.short_arc_paths(k);
    bool long_large = static_cast<int>(fam.long_arc.size()) >= inst.profile.long_arc_paths(k);
    StepResult out;
    if (short_large && long_large) {
        out.packing = link_path_families(inst, fam.short_arc, fam.long_arc, start);
        return out;
    }
    if (!short_large && !long_large)
        out.set = fam.long_cut.size() < fam.short_cut.size() ? fam.long_cut : fam.short_cut;
    else
        out.set = short_large ? fam.long_cut : fam.short_cut;
    return out;
}

std::vector<Hole> link_path_families(const AnchoredInstance& inst, const std::vector<Path>& short_arc,
                                     const std::vector<Path>& long_arc, int start) {
    const int k = inst.k;
    if (static_cast<int>(short_arc.size()) < inst.profile.short_arc_paths(k) ||
        static_cast<int>(long_arc.size()) < inst.profile.long_arc_paths(k))
        throw PreconditionError("path families are too small to link");
    const long long v0 = start, v5 = start + 5, v10 = start + 10, v15 = start + 15, v20 = start + 20;
    std::vector<char> near(inst.m(), 0);
    for (int i = 0; i <= 5; ++i) near[inst.wrap(v0 + i)] = near[inst.wrap(v15 + i)] = 1;
    auto avoids_near = [&](const Path& p) {
        for (int v : p)
            if (inst.on_cycle(v) && near[inst.pos[v]]) return false;
        return true;
    };
    auto tighten = [&](Path p, long long from) {
        if (p.empty()) throw PreconditionError("empty path in family");
        if (!in_zone(inst, p.front(), from)) std::reverse(p.begin(), p.end());
        if (!in_zone(inst, p.front(), from)) throw PreconditionError("path does not start in the expected zone");
        auto t = shortest_path_within(inst.g, normalize(p), p.front(), p.back());
        if (!t) throw PreconditionError("family member is not a path");
        return *t;
    };

    std::vector<Path> p1, q1;
    for (const auto& p : short_arc) {
        if (static_cast<int>(p1.size()) == k + 1) break;
        Path t = tighten(p, v0);
        if (avoids_near(t)) p1.push_back(std::move(t));
    }
    for (const auto& q : long_arc) {
        if (static_cast<int>(q1.size()) == 3 * k + 3) break;
        Path t = tighten(q, v5);
        if (avoids_near(t)) q1.push_back(std::move(t));
    }
    if (static_cast<int>(p1.size()) < k + 1 || static_cast<int>(q1.size()) < 3 * k + 3)
        throw DefectError("too few family paths avoid the window core");

    VertexSet p_ends;
    for (const auto& p : p1)
        for (int v : p)
            if (in_zone(inst, v, v0) || in_zone(inst, v, v20)) p_ends.push_back(v);
    p_ends = normalize(std::move(p_ends));

    std::vector<Path> q2;
    for (const auto& q : q1) {
        bool meets = false;
        for (int v : q) meets = meets || set_contains(p_ends, v);
        if (meets) continue;
        int a = -1, b = -1;
        for (int i = 0; i < static_cast<int>(q.size()); ++i) {
            if (a < 0 && in_zone(inst, q[i], v0)) a = i;
            if (in_zone(inst, q[i], v20)) b = i;
        }
        if (a < 0 || b < 0 || a >= b) throw DefectError("long-arc path misses the window ends");
        q2.emplace_back(q.begin() + a, q.begin() + b + 1);
    }
    if (static_cast<int>(q2.size()) < k + 1) throw DefectError("too few long-arc paths survive linking");

    std::vector<Hole> holes;
    std::vector<char> used(inst.g.n(), 0);
    for (int i = 0; i <= k; ++i) {
        const Path& p = p1[i];
        const Path& q = q2[i];
        if (!inst.g.adjacent(q.front(), p.front()) || !inst.g.adjacent(q.back(), p.back()))
            throw DefectError("linking edge missing between path families");
        int w = -1;
        for (int v : p)
            if (in_zone(inst, v, v10)) {
                w = v;
                break;
            }
        if (w < 0) throw DefectError("short-arc path misses the middle zone");
        VertexSet s = p;
        s.insert(s.end(), q.begin(), q.end());
        auto h = hole_through(inst.g, normalize(s), w);
        if (!h) throw DefectError("linked cycle yields no hole");
        for (int v : *h) {
            if (used[v]) throw DefectError("linked holes overlap");
            used[v] = 1;
        }
        holes.push_back(std::move(*h));
    }
    return holes;
}

StepResult hit_traversing_sunflowers(const AnchoredInstance& inst, const VertexSet& t_petal) {
    const int m = inst.m(), k = inst.k, blocks = m / inst.profile.block;
    const auto& dom = inst.dom;
    StepResult out;
    std::map<std::pair<int, int>, Hole> edge_hole;  // (dominator index, block start)
    VertexSet acc;
    for (int cls = 0; cls < inst.profile.block && !dom.empty(); ++cls) {
        std::vector<std::vector<int>> adj(dom.size());
        for (int j = 0; j < blocks; ++j) {
            int start = inst.wrap(inst.profile.block * j + cls);
            if (trivial_zones(inst, start, 3)) continue;
            VertexSet zs = inst.zone_union(span(start, 3));
            for (std::size_t di = 0; di < dom.size(); ++di) {
                VertexSet s = zs;
                s.push_back(dom[di]);
                Induced sub = induced_subgraph(inst.g, normalize(std::move(s)));
                auto h = hole_containing(sub.graph, sub.local(dom[di]));
                if (!h) continue;
                adj[di].push_back(j);
                edge_hole[{static_cast<int>(di), start}] = sub.lift(*h);
            }
        }
        auto mt = hopcroft_karp(static_cast<int>(dom.size()), blocks, adj);
        if (mt.size >= k + 1) {
            for (std::size_t di = 0; di < dom.size() && static_cast<int>(out.packing.size()) < k + 1; ++di)
                if (mt.match_left[di] >= 0) {
                    int start = inst.wrap(inst.profile.block * mt.match_left[di] + cls);
                    out.packing.push_back(edge_hole.at({static_cast<int>(di), start}));
                }
            return out;
        }
        for (int di : mt.cover_left) acc.push_back(dom[di]);
        for (int j : mt.cover_right)
            for (int t = 0; t < 3; ++t) acc.push_back(inst.at(inst.profile.block * j + cls + t));
    }
    long long tail = static_cast<long long>(inst.profile.block) * blocks;
    for (int i = -2; i <= 6; ++i) acc.push_back(inst.at(tail + i));
    out.set = set_minus(normalize(std::move(acc)), t_petal);
    return out;
}

}  // namespace epc
