#include "epc/driver.hpp"

#include <map>

#include <nlohmann/json.hpp>

namespace epc {

std::vector<Hole> greedy_packing(const Graph& g, int limit) {
    std::vector<Hole> out;
    VertexSet removed;
    while (limit < 0 || static_cast<int>(out.size()) < limit) {
        Induced rest = delete_vertices(g, removed);
        auto h = shortest_hole(rest.graph);
        if (!h) break;
        out.push_back(rest.lift(*h));
        removed = set_union(removed, normalize(out.back()));
    }
    return out;
}

DualityOutcome epc_solve(const Graph& g, int k, const SolveOptions& opts) {
    if (k < 0) throw PreconditionError("k must be non-negative");
    const ConstantsProfile& prof = opts.profile;
    DualityOutcome out;
    out.k = k;
    out.mode = prof.name();

    std::vector<Hole> peeled = greedy_packing(g, k + 1);
    if (static_cast<int>(peeled.size()) >= k + 1) {
        out.kind = DualityOutcome::Kind::Packing;
        out.packing = std::move(peeled);
        out.packed_by = "peeling";
        return out;
    }
    out.steps.resize(peeled.size());
    if (peeled.empty()) return out;

    const long long mu = prof.mu(k);
    // prefix[j] = V(C_0) ∪ ... ∪ V(C_{j-1})
    std::vector<VertexSet> prefix(peeled.size());
    for (std::size_t j = 1; j < peeled.size(); ++j) prefix[j] = set_union(prefix[j - 1], normalize(peeled[j - 1]));

    VertexSet t;
    for (int j = static_cast<int>(peeled.size()) - 1; j >= 0; --j) {
        const Hole& c = peeled[j];
        PeelStep& step = out.steps[j];
        step.hole = c;
        std::size_t before = t.size();
        if (static_cast<long long>(c.size()) <= mu) {
            t = set_union(t, normalize(c));
            step.added = t.size() - before;
            continue;
        }
        Induced sub = delete_vertices(g, set_union(prefix[j], t));
        Hole local;
        for (int v : c) local.push_back(sub.local(v));
        AnchorOptions ao;
        ao.verify_shortest = !opts.trust_peeling;
        ao.verify_remainder = !opts.trust_peeling;
        step.via_core = true;
        CoreOutcome core;
        try {
            core = core_theorem(sub.graph, k, local, prof, ao);
        } catch (const NoCleanWindow&) {
            if (prof.production) throw DefectError("no clean sunflower window above mu_k");
            step.fallback = true;
            t = set_union(t, normalize(c));
            step.added = t.size() - before;
            continue;
        }
        if (core.packed()) {
            out.kind = DualityOutcome::Kind::Packing;
            for (const auto& h : core.packing) out.packing.push_back(sub.lift(h));
            out.packed_by = core.packed_by;
            return out;
        }
        for (VertexSet* part : {&core.ledger.petal, &core.ledger.full, &core.ledger.trav_sunf, &core.ledger.branch,
                                &core.ledger.almost, &core.ledger.ext, &core.ledger.avoid_tulip,
                                &core.ledger.trav_tulip})
            *part = sub.lift(*part);
        step.ledger = std::move(core.ledger);
        t = set_union(t, normalize(sub.lift(core.hitting)));
        step.added = t.size() - before;
    }
    out.hitting = std::move(t);
    out.bound = static_cast<long long>(peeled.size()) * mu;
    if (!chordal_fast(delete_vertices(g, out.hitting).graph)) throw DefectError("hitting set leaves a hole");
    if (prof.production && static_cast<long long>(out.hitting.size()) > k * mu)
        throw DefectError("hitting set exceeds k * mu_k");
    return out;
}

Certificate certificate_for(const Graph& g, const DualityOutcome& r) {
    Certificate c = make_certificate(g, r.packed() ? "packing" : "hitting");
    c.k = r.k;
    c.mode = r.mode;
    if (r.packed()) {
        c.holes = r.packing;
    } else {
        c.set = r.hitting;
        // the size guarantee only holds under production constants
        if (r.mode == "production") c.bound = r.bound;
    }
    return c;
}

std::string ledger_json(const DualityOutcome& r) {
    nlohmann::json j;
    j["k"] = r.k;
    j["mode"] = r.mode;
    j["outcome"] = r.packed() ? "packing" : "hitting";
    j["steps"] = nlohmann::json::array();
    std::map<int, std::string> origin;
    // Later steps run first in the sweep, so walk them in that order.
    for (int i = static_cast<int>(r.steps.size()) - 1; i >= 0; --i) {
        const PeelStep& s = r.steps[i];
        nlohmann::json e;
        e["index"] = i;
        e["length"] = s.hole.size();
        e["added"] = s.added;
        e["route"] = s.fallback ? "fallback" : s.via_core ? "core" : "short";
        if (s.via_core && !s.fallback) {
            const HittingLedger& l = s.ledger;
            const std::pair<const char*, const VertexSet*> parts[] = {
                {"petal", &l.petal},     {"full_sunflower", &l.full},       {"traversing_sunflower", &l.trav_sunf},
                {"branch", &l.branch},   {"almost_extension", &l.almost},   {"ext", &l.ext},
                {"avoiding_tulip", &l.avoid_tulip}, {"traversing_tulip", &l.trav_tulip}};
            for (auto [name, set] : parts) e["stages"][name] = set->size();
            e["fragments"] = l.fragments.size();
            // ext already contains the earlier stages; the most specific one wins.
            for (auto [name, set] : parts)
                for (int v : *set)
                    if (set_contains(r.hitting, v)) origin.emplace(v, "step " + std::to_string(i) + ":" + name);
        }
        for (int v : s.hole)
            if (!s.via_core || s.fallback) origin.emplace(v, "step " + std::to_string(i) + ":hole");
        j["steps"].push_back(std::move(e));
    }
    nlohmann::json prov = nlohmann::json::array();
    for (int v : r.hitting) {
        auto it = origin.find(v);
        prov.push_back({{"vertex", v}, {"source", it == origin.end() ? "unknown" : it->second}});
    }
    j["provenance"] = std::move(prov);
    return j.dump(2) + "\n";
}

ApproxOutcome approx_cvd(const Graph& g, const SolveOptions& opts) {
    ApproxOutcome out;
    out.greedy = static_cast<int>(greedy_packing(g).size());
    for (int k = out.greedy; k <= g.n() / 4 + 1; ++k) {
        out.tried.push_back(k);
        DualityOutcome r = epc_solve(g, k, opts);
        if (!r.packed()) {
            out.deletion = std::move(r.hitting);
            out.k_final = k;
            return out;
        }
    }
    throw DefectError("approximation exceeded the packing bound n/4");
}

bool is_forest(const Graph& g, const VertexSet& removed) {
    std::vector<char> gone(g.n(), 0);
    for (int v : removed) gone[v] = 1;
    std::vector<int> comp(g.n(), -1);
    long long verts = 0, edges = 0, comps = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (gone[v]) continue;
        ++verts;
        for (int x : g.neighbors(v))
            if (!gone[x] && x > v) ++edges;
        if (comp[v] >= 0) continue;
        ++comps;
        std::vector<int> stack{v};
        comp[v] = v;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int x : g.neighbors(u))
                if (!gone[x] && comp[x] < 0) comp[x] = v, stack.push_back(x);
        }
    }
    return edges == verts - comps;
}

}  // namespace epc
