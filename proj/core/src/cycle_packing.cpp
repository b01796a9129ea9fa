#include <climits>
#include <map>

#include "epc/cycle_packing.hpp"

namespace epc {

namespace {

struct Chain {
    int a, b;
    std::vector<int> inner;  // from a to b
};

// Host sequence for a closed walk over chains, given as (chain, start end).
std::vector<int> expand(const std::vector<Chain>& chains, const std::vector<std::pair<int, int>>& walk) {
    std::vector<int> out;
    for (auto [c, from] : walk) {
        const Chain& ch = chains[c];
        out.push_back(from);
        if (from == ch.a)
            out.insert(out.end(), ch.inner.begin(), ch.inner.end());
        else
            out.insert(out.end(), ch.inner.rbegin(), ch.inner.rend());
    }
    return out;
}

}  // namespace

CyclePacking pack_cycles_23(const std::vector<Edge>& edges, int want) {
    CyclePacking result;
    std::vector<int> ids;
    for (auto [u, v] : edges) ids.push_back(u), ids.push_back(v);
    ids = normalize(ids);
    const int n = static_cast<int>(ids.size());
    auto local = [&](int h) { return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), h) - ids.begin()); };
    std::vector<Edge> ledges;
    for (auto [u, v] : edges) ledges.emplace_back(local(u), local(v));
    Graph w = Graph::from_edges(n, ledges);
    for (int v = 0; v < n; ++v) {
        if (w.degree(v) < 2 || w.degree(v) > 3)
            throw PreconditionError("vertex " + std::to_string(ids[v]) + " has degree " +
                                    std::to_string(w.degree(v)) + " in the (2,3)-subgraph");
        if (w.degree(v) == 3) ++result.branching;
    }
    if (want <= 0) return result;
    result.below_threshold = result.branching < s_threshold(want);

    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = w.degree(v);
    auto kill = [&](int v) {
        alive[v] = 0;
        for (int x : w.neighbors(v))
            if (alive[x]) --deg[x];
    };
    auto next_on = [&](int cur, int prev) {
        for (int x : w.neighbors(cur))
            if (alive[x] && x != prev) return x;
        return -1;
    };

    while (static_cast<int>(result.cycles.size()) < want) {
        std::vector<int> stack;
        for (int v = 0; v < n; ++v)
            if (alive[v] && deg[v] <= 1) stack.push_back(v);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (!alive[v]) continue;
            kill(v);
            for (int x : w.neighbors(v))
                if (alive[x] && deg[x] <= 1) stack.push_back(x);
        }

        // Components with no branching vertex are cycles already.
        std::vector<int> comp(n, -1);
        bool took_plain = false;
        for (int s = 0; s < n && static_cast<int>(result.cycles.size()) < want; ++s) {
            if (!alive[s] || comp[s] >= 0) continue;
            std::vector<int> members{s};
            comp[s] = s;
            bool plain = true;
            for (std::size_t h = 0; h < members.size(); ++h) {
                if (deg[members[h]] != 2) plain = false;
                for (int x : w.neighbors(members[h]))
                    if (alive[x] && comp[x] < 0) comp[x] = s, members.push_back(x);
            }
            if (!plain) continue;
            std::vector<int> cyc{s};
            for (int prev = s, cur = next_on(s, -1); cur != s;) {
                cyc.push_back(cur);
                int nx = next_on(cur, prev);
                prev = cur;
                cur = nx;
            }
            for (int v : cyc) kill(v);
            std::vector<int> host;
            for (int v : cyc) host.push_back(ids[v]);
            result.cycles.push_back(std::move(host));
            took_plain = true;
        }
        if (took_plain) continue;

        std::vector<int> branch;
        for (int v = 0; v < n; ++v)
            if (alive[v]) branch.push_back(v);
        if (branch.empty()) break;

        // Suppress degree-2 chains; each chain is kept from one canonical walk.
        std::vector<Chain> chains;
        for (int b : branch) {
            if (deg[b] < 3) continue;
            for (int x : w.neighbors(b)) {
                if (!alive[x]) continue;
                Chain ch{b, -1, {}};
                int prev = b, cur = x;
                while (deg[cur] == 2) {
                    ch.inner.push_back(cur);
                    int nx = next_on(cur, prev);
                    prev = cur;
                    cur = nx;
                }
                ch.b = cur;
                bool keep = ch.a < ch.b || (ch.a == ch.b && ch.inner.front() < ch.inner.back());
                if (keep) chains.push_back(std::move(ch));
            }
        }

        std::vector<std::pair<int, int>> walk;
        for (int c = 0; c < static_cast<int>(chains.size()) && walk.empty(); ++c)
            if (chains[c].a == chains[c].b) walk = {{c, chains[c].a}};
        if (walk.empty()) {
            std::map<std::pair<int, int>, int> first;
            for (int c = 0; c < static_cast<int>(chains.size()); ++c) {
                auto key = std::make_pair(chains[c].a, chains[c].b);
                auto [it, fresh] = first.emplace(key, c);
                if (!fresh) {
                    walk = {{it->second, chains[c].a}, {c, chains[c].b}};
                    break;
                }
            }
        }
        if (walk.empty()) {
            // Simple multigraph now: exact girth by BFS from every branch vertex.
            std::map<int, int> idx;
            std::vector<int> nodes;
            for (const auto& ch : chains)
                for (int e : {ch.a, ch.b})
                    if (idx.emplace(e, static_cast<int>(nodes.size())).second) nodes.push_back(e);
            const int nb = static_cast<int>(nodes.size());
            std::vector<std::vector<std::pair<int, int>>> madj(nb);  // (node, chain)
            for (int c = 0; c < static_cast<int>(chains.size()); ++c) {
                int a = idx[chains[c].a], b = idx[chains[c].b];
                madj[a].emplace_back(b, c);
                madj[b].emplace_back(a, c);
            }
            int best = INT_MAX;
            std::vector<int> dist(nb), pedge(nb), pnode(nb);
            for (int r = 0; r < nb; ++r) {
                std::fill(dist.begin(), dist.end(), -1);
                dist[r] = 0, pedge[r] = -1, pnode[r] = -1;
                std::vector<int> q{r};
                bool done = false;
                for (std::size_t h = 0; h < q.size() && !done; ++h) {
                    int u = q[h];
                    if (2 * dist[u] + 1 >= best) break;
                    for (auto [x, c] : madj[u]) {
                        if (c == pedge[u]) continue;
                        if (dist[x] < 0) {
                            dist[x] = dist[u] + 1, pedge[x] = c, pnode[x] = u;
                            q.push_back(x);
                        } else if (dist[u] + dist[x] + 1 < best) {
                            best = dist[u] + dist[x] + 1;
                            std::vector<std::pair<int, int>> down;
                            for (int y = u; y != r; y = pnode[y]) down.emplace_back(pedge[y], nodes[pnode[y]]);
                            std::reverse(down.begin(), down.end());
                            walk = down;
                            walk.emplace_back(c, nodes[u]);
                            for (int y = x; y != r; y = pnode[y]) walk.emplace_back(pedge[y], nodes[y]);
                            done = true;
                            break;
                        }
                    }
                }
            }
        }
        if (walk.empty()) break;
        std::vector<int> cyc = expand(chains, walk);
        for (int v : cyc) kill(v);
        std::vector<int> host;
        for (int v : cyc) host.push_back(ids[v]);
        result.cycles.push_back(std::move(host));
    }

    if (static_cast<int>(result.cycles.size()) < want && !result.below_threshold)
        throw DefectError("greedy cycle packing found " + std::to_string(result.cycles.size()) + " of " +
                          std::to_string(want) + " cycles above the threshold");
    return result;
}

}  // namespace epc
