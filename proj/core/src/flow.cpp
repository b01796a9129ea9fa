#include "epc/flow.hpp"

#include <climits>
#include <queue>

namespace epc {

namespace {

class Dinic {
public:
    explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

    int add_arc(int u, int v, int cap) {
        arcs_.push_back({v, cap, head_[u]});
        head_[u] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({u, 0, head_[v]});
        head_[v] = static_cast<int>(arcs_.size()) - 1;
        return static_cast<int>(arcs_.size()) - 2;
    }

    long long max_flow(int s, int t) {
        long long total = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (int f = dfs(s, t, INT_MAX)) total += f;
        }
        return total;
    }

    // Residual reachability from s after max_flow.
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e = head_[u]; e != -1; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) seen[arcs_[e].to] = 1, stack.push_back(arcs_[e].to);
        }
        return seen;
    }

    struct Arc {
        int to, cap, next;
    };
    std::vector<int> head_;
    std::vector<Arc> arcs_;

private:
    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e != -1; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
                    level_[arcs_[e].to] = level_[u] + 1;
                    q.push(arcs_[e].to);
                }
        }
        return level_[t] >= 0;
    }

    // One augmenting path in the level graph; iterative since tunnels get long.
    int dfs(int s, int t, int) {
        std::vector<int> stack;  // arcs taken
        int u = s;
        while (true) {
            if (u == t) {
                int f = INT_MAX;
                for (int e : stack) f = std::min(f, arcs_[e].cap);
                for (int e : stack) arcs_[e].cap -= f, arcs_[e ^ 1].cap += f;
                return f;
            }
            int& e = it_[u];
            while (e != -1 && (arcs_[e].cap <= 0 || level_[arcs_[e].to] != level_[u] + 1)) e = arcs_[e].next;
            if (e != -1) {
                stack.push_back(e);
                u = arcs_[e].to;
                continue;
            }
            level_[u] = -1;
            if (stack.empty()) return 0;
            u = arcs_[stack.back() ^ 1].to;
            stack.pop_back();
            it_[u] = arcs_[it_[u]].next;
        }
    }

    std::vector<int> level_, it_;
};

}  // namespace

MengerResult menger(const Graph& g, const VertexSet& a_in, const VertexSet& b_in) {
    check_range(g, a_in);
    check_range(g, b_in);
    VertexSet a = normalize(a_in), b = normalize(b_in);
    VertexSet shared = set_intersection(a, b);
    MengerResult out;
    for (int v : shared) out.paths.push_back({v});

    const int n = g.n();
    std::vector<char> gone(n, 0), in_a(n, 0), in_b(n, 0);
    for (int v : shared) gone[v] = 1;
    for (int v : a) in_a[v] = !gone[v];
    for (int v : b) in_b[v] = !gone[v];

    // v_in = 2v, v_out = 2v + 1; only the split arcs are finite.
    const int src = 2 * n, sink = 2 * n + 1;
    const int inf = n + 1;
    Dinic flow(2 * n + 2);
    std::vector<int> split(n, -1);
    for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        split[v] = flow.add_arc(2 * v, 2 * v + 1, 1);
        if (in_a[v]) flow.add_arc(src, 2 * v, inf);
        if (in_b[v]) flow.add_arc(2 * v + 1, sink, inf);
        for (int w : g.neighbors(v))
            if (!gone[w]) flow.add_arc(2 * v + 1, 2 * w, inf);
    }
    flow.max_flow(src, sink);

    // Walk unit flows from the source; vertex capacities keep each walk simple.
    auto used = [&](int e) { return flow.arcs_[e ^ 1].cap > 0 && (e % 2 == 0); };
    std::vector<int> consumed(flow.arcs_.size(), 0);
    for (int e0 = flow.head_[src]; e0 != -1; e0 = flow.arcs_[e0].next) {
        if (!used(e0)) continue;
        int units = flow.arcs_[e0 ^ 1].cap;
        for (int unit = 0; unit < units; ++unit) {
            Path walk;
            int node = flow.arcs_[e0].to;
            while (node != sink) {
                if (node % 2 == 0) walk.push_back(node / 2);
                int next = -1;
                for (int e = flow.head_[node]; e != -1; e = flow.arcs_[e].next)
                    if (used(e) && consumed[e] < flow.arcs_[e ^ 1].cap) {
                        ++consumed[e];
                        next = flow.arcs_[e].to;
                        break;
                    }
                if (next < 0) throw DefectError("flow decomposition stalled");
                node = next;
            }
            std::size_t last_a = 0;
            for (std::size_t i = 0; i < walk.size(); ++i)
                if (in_a[walk[i]]) last_a = i;
            std::size_t first_b = last_a;
            while (!in_b[walk[first_b]]) ++first_b;
            out.paths.emplace_back(walk.begin() + last_a, walk.begin() + first_b + 1);
        }
    }

    auto reach = flow.reachable(src);
    out.separator = shared;
    for (int v = 0; v < n; ++v)
        if (split[v] >= 0 && reach[2 * v] && !reach[2 * v + 1]) out.separator.push_back(v);
    out.separator = normalize(out.separator);
    std::sort(out.paths.begin(), out.paths.end());
    if (out.separator.size() != out.paths.size())
        throw DefectError("menger duality mismatch: " + std::to_string(out.paths.size()) + " paths, " +
                          std::to_string(out.separator.size()) + " separator");
    return out;
}

bool separates(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& sep) {
    std::vector<char> blocked(g.n(), 0), target(g.n(), 0), seen(g.n(), 0);
    for (int v : sep) blocked[v] = 1;
    for (int v : b) target[v] = 1;
    std::vector<int> stack;
    for (int v : a)
        if (!blocked[v] && !seen[v]) seen[v] = 1, stack.push_back(v);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (target[u]) return false;
        for (int w : g.neighbors(u))
            if (!blocked[w] && !seen[w]) seen[w] = 1, stack.push_back(w);
    }
    return true;
}

BipartiteMatching hopcroft_karp(int nl, int nr, const std::vector<std::vector<int>>& adj) {
    BipartiteMatching r;
    r.match_left.assign(nl, -1);
    r.match_right.assign(nr, -1);
    std::vector<int> dist(nl);
    const int far = INT_MAX;

    auto bfs = [&]() {
        std::queue<int> q;
        bool found = false;
        for (int u = 0; u < nl; ++u) {
            dist[u] = r.match_left[u] < 0 ? 0 : far;
            if (dist[u] == 0) q.push(u);
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = r.match_right[v];
                if (w < 0) found = true;
                else if (dist[w] == far) dist[w] = dist[u] + 1, q.push(w);
            }
        }
        return found;
    };
    std::vector<std::size_t> it(nl);
    auto dfs = [&](auto&& self, int u) -> bool {
        for (; it[u] < adj[u].size(); ++it[u]) {
            int v = adj[u][it[u]];
            int w = r.match_right[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && self(self, w))) {
                r.match_left[u] = v;
                r.match_right[v] = u;
                return true;
            }
        }
        dist[u] = far;
        return false;
    };
    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (int u = 0; u < nl; ++u)
            if (r.match_left[u] < 0 && dfs(dfs, u)) ++r.size;
    }

    // Alternating reachability from free left vertices.
    std::vector<char> zl(nl, 0), zr(nr, 0);
    std::vector<int> stack;
    for (int u = 0; u < nl; ++u)
        if (r.match_left[u] < 0) zl[u] = 1, stack.push_back(u);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u]) {
            if (zr[v] || r.match_left[u] == v) continue;
            zr[v] = 1;
            int w = r.match_right[v];
            if (w >= 0 && !zl[w]) zl[w] = 1, stack.push_back(w);
        }
    }
    for (int u = 0; u < nl; ++u)
        if (!zl[u]) r.cover_left.push_back(u);
    for (int v = 0; v < nr; ++v)
        if (zr[v]) r.cover_right.push_back(v);
    if (static_cast<int>(r.cover_left.size() + r.cover_right.size()) != r.size)
        throw DefectError("konig cover size differs from matching size");
    return r;
}

KonigResult konig(const Graph& g, const VertexSet& left_in, const VertexSet& right_in) {
    check_range(g, left_in);
    check_range(g, right_in);
    VertexSet left = normalize(left_in), right = normalize(right_in);
    if (!set_intersection(left, right).empty()) throw PreconditionError("bipartition sides overlap");
    std::vector<std::vector<int>> adj(left.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (int w : g.neighbors(left[i])) {
            if (set_contains(left, w)) throw PreconditionError("edge inside the left side");
            auto it = std::lower_bound(right.begin(), right.end(), w);
            if (it != right.end() && *it == w) adj[i].push_back(static_cast<int>(it - right.begin()));
        }
    for (int v : right)
        for (int w : g.neighbors(v))
            if (set_contains(right, w)) throw PreconditionError("edge inside the right side");
    auto m = hopcroft_karp(static_cast<int>(left.size()), static_cast<int>(right.size()), adj);
    KonigResult out;
    for (std::size_t i = 0; i < left.size(); ++i)
        if (m.match_left[i] >= 0) out.matching.emplace_back(left[i], right[m.match_left[i]]);
    for (int i : m.cover_left) out.cover.push_back(left[i]);
    for (int i : m.cover_right) out.cover.push_back(right[i]);
    out.cover = normalize(out.cover);
    return out;
}

}  // namespace epc
