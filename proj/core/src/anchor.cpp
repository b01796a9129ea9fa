#include "epc/core_hitting.hpp"

namespace epc {

VertexSet AnchoredInstance::zone_union(const std::vector<int>& positions) const {
    VertexSet out;
    for (int p : positions) {
        const auto& z = zone[wrap(p)];
        out.insert(out.end(), z.begin(), z.end());
    }
    return normalize(std::move(out));
}

VertexSet AnchoredInstance::hosts(const std::vector<int>& positions) const {
    VertexSet out;
    out.reserve(positions.size());
    for (int p : positions) out.push_back(at(p));
    return normalize(std::move(out));
}

std::vector<int> AnchoredInstance::positions_of(const VertexSet& s) const {
    std::vector<int> out;
    for (int v : s)
        if (v >= 0 && v < g.n() && pos[v] >= 0) out.push_back(pos[v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> AnchoredInstance::cycle_ball(const std::vector<int>& positions, int r) const {
    std::vector<char> in(m(), 0);
    for (int p : positions)
        for (int d = -r; d <= r; ++d) in[wrap(static_cast<long long>(p) + d)] = 1;
    std::vector<int> out;
    for (int i = 0; i < m(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

AnchoredInstance anchor(const Graph& g, const Hole& c, int k, const ConstantsProfile& profile,
                        const AnchorOptions& opts) {
    if (k < 1) throw PreconditionError("anchoring needs k >= 1");
    std::string why;
    if (!is_hole(g, c, &why)) throw AnchorRejection("C is not a hole: " + why);
    const int n = g.n(), m = static_cast<int>(c.size());
    if (opts.enforce_length && m <= profile.mu(k))
        throw AnchorRejection("|C| = " + std::to_string(m) + " is not above mu_k = " + std::to_string(profile.mu(k)));

    AnchoredInstance inst;
    inst.g = g;
    inst.cycle = c;
    inst.profile = profile;
    inst.k = k;
    inst.pos.assign(n, -1);
    for (int i = 0; i < m; ++i) inst.pos[c[i]] = i;

    if (opts.verify_remainder && !chordal_fast(delete_vertices(g, normalize(c)).graph))
        throw AnchorRejection("G - V(C) is not chordal");
    if (opts.verify_shortest) {
        auto h = shortest_hole(g);
        if (!h || static_cast<int>(h->size()) != m)
            throw AnchorRejection("C is not a shortest hole (found length " + std::to_string(h ? h->size() : 0) + ")");
    }

    std::vector<int> hits(n, 0);
    for (int v : c)
        for (int w : g.neighbors(v))
            if (inst.pos[w] < 0) ++hits[w];
    inst.is_dom.assign(n, 0);
    for (int v = 0; v < n; ++v)
        if (hits[v] == m) inst.dom.push_back(v), inst.is_dom[v] = 1;

    inst.zone.assign(m, {});
    inst.zpos.assign(n, {});
    for (int i = 0; i < m; ++i) {
        inst.zone[i].push_back(c[i]);
        inst.zpos[c[i]].push_back(i);
        for (int w : g.neighbors(c[i]))
            if (inst.pos[w] < 0 && !inst.is_dom[w]) inst.zone[i].push_back(w), inst.zpos[w].push_back(i);
        inst.zone[i] = normalize(std::move(inst.zone[i]));
    }
    // Non-dominating neighbours see at most three consecutive cycle vertices.
    for (int v = 0; v < n; ++v) {
        if (inst.pos[v] >= 0 || inst.is_dom[v] || inst.zpos[v].empty()) continue;
        const auto& ps = inst.zpos[v];
        bool ok = ps.size() <= 3;
        for (std::size_t a = 0; ok && a < ps.size(); ++a)
            for (std::size_t b = a + 1; b < ps.size(); ++b)
                if (inst.cdist(ps[a], ps[b]) > 2) ok = false;
        if (ok && ps.size() == 3) {
            // three positions spanning distance 2 must be consecutive
            int span = 0;
            for (int a : ps)
                for (int b : ps) span = std::max(span, inst.cdist(a, b));
            ok = span == 2;
        }
        if (!ok) throw AnchorRejection("vertex " + std::to_string(v) + " sees a non-consecutive part of C");
    }
    auto bad = structural_violation(inst);
    if (!bad.empty()) throw AnchorRejection(bad);
    return inst;
}

VertexSet support(const AnchoredInstance& inst, const VertexSet& s) {
    std::vector<int> ps;
    for (int v : s) {
        if (v < 0 || v >= inst.g.n()) throw PreconditionError("vertex out of range in support query");
        if (inst.is_dom[v]) return normalize(inst.cycle);
        ps.insert(ps.end(), inst.zpos[v].begin(), inst.zpos[v].end());
    }
    return inst.hosts(ps);
}

std::string structural_violation(const AnchoredInstance& inst) {
    for (std::size_t a = 0; a < inst.dom.size(); ++a)
        for (std::size_t b = a + 1; b < inst.dom.size(); ++b)
            if (!inst.g.adjacent(inst.dom[a], inst.dom[b]))
                return "dominators " + std::to_string(inst.dom[a]) + " and " + std::to_string(inst.dom[b]) +
                       " are not adjacent";
    for (int u = 0; u < inst.g.n(); ++u) {
        if (inst.zpos[u].empty()) continue;
        for (int v : inst.g.neighbors(u)) {
            if (v < u || inst.zpos[v].empty()) continue;
            for (int x : inst.zpos[u])
                for (int y : inst.zpos[v])
                    if (inst.cdist(x, y) >= 4)
                        return "edge " + std::to_string(u) + "-" + std::to_string(v) + " joins zones " +
                               std::to_string(x) + " and " + std::to_string(y);
        }
    }
    return {};
}

}  // namespace epc
