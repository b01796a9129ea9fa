#include "epc/oracle.hpp"

#include <bit>
#include <cstdint>
#include <functional>

namespace epc::oracle {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    if (g.n() > 64) throw GuardError("bitmask oracle needs n <= 64");
    std::vector<Mask> adj(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v)) adj[v] |= Mask{1} << w;
    return adj;
}

// Repeatedly strip simplicial vertices of the alive set.
bool chordal_masked(const std::vector<Mask>& adj, Mask alive) {
    bool progress = true;
    while (alive && progress) {
        progress = false;
        for (Mask rest = alive; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            Mask nb = adj[v] & alive;
            bool clique = true;
            for (Mask t = nb; t && clique; t &= t - 1) {
                int u = std::countr_zero(t);
                clique = ((nb & ~(Mask{1} << u)) & ~adj[u]) == 0;
            }
            if (clique) {
                alive &= ~(Mask{1} << v);
                progress = true;
            }
        }
    }
    return alive == 0;
}

Mask to_mask(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) m |= Mask{1} << v;
    return m;
}

void guard(const Graph& g, int max_n, const char* what) {
    if (g.n() > max_n)
        throw GuardError(std::string(what) + " refuses n = " + std::to_string(g.n()) + " (limit " +
                         std::to_string(max_n) + ")");
}

}  // namespace

std::vector<Hole> enumerate_holes(const Graph& g, std::optional<int> max_len, int max_n) {
    if (!max_len) guard(g, max_n, "enumerate_holes");
    const int n = g.n(), cap = max_len ? *max_len : n;
    std::vector<Hole> out;
    std::vector<int> touch(n, 0), path;
    auto push = [&](int v) {
        path.push_back(v);
        for (int w : g.neighbors(v)) ++touch[w];
    };
    auto pop = [&] {
        for (int w : g.neighbors(path.back())) --touch[w];
        path.pop_back();
    };
    std::function<void(int)> grow = [&](int s) {
        int last = path.back();
        for (int u : g.neighbors(last)) {
            if (u <= s || std::find(path.begin(), path.end(), u) != path.end()) continue;
            bool sees_s = g.adjacent(u, s);
            if (touch[u] == 1) {
                if (static_cast<int>(path.size()) + 1 < cap) {
                    push(u);
                    grow(s);
                    pop();
                }
            } else if (touch[u] == 2 && sees_s && path.size() >= 3 && path[1] < u &&
                       static_cast<int>(path.size()) + 1 <= cap) {
                Hole h = path;
                h.push_back(u);
                out.push_back(std::move(h));
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        push(s);
        for (int p1 : g.neighbors(s)) {
            if (p1 <= s) continue;
            push(p1);
            grow(s);
            pop();
        }
        pop();
    }
    return out;
}

std::vector<std::vector<int>> enumerate_cycles(const Graph& g, int max_n) {
    guard(g, max_n, "enumerate_cycles");
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> on(g.n(), 0);
    std::function<void(int)> grow = [&](int s) {
        int last = path.back();
        for (int u : g.neighbors(last)) {
            if (u == s && path.size() >= 3 && path[1] < last) out.push_back(path);
            if (u <= s || on[u]) continue;
            on[u] = 1;
            path.push_back(u);
            grow(s);
            path.pop_back();
            on[u] = 0;
        }
    };
    for (int s = 0; s < g.n(); ++s) {
        path = {s};
        on[s] = 1;
        grow(s);
        on[s] = 0;
    }
    return out;
}

bool hole_valid(const Graph& g, const Hole& h, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (h.size() < 4) return fail("fewer than four vertices");
    std::vector<int> slot(g.n(), -1);
    for (int i = 0; i < static_cast<int>(h.size()); ++i) {
        if (!g.contains(h[i])) return fail("vertex " + std::to_string(h[i]) + " out of range");
        if (slot[h[i]] >= 0) return fail("vertex " + std::to_string(h[i]) + " repeats");
        slot[h[i]] = i;
    }
    const int len = static_cast<int>(h.size());
    for (int i = 0; i < len; ++i) {
        int seen = 0;
        for (int w : g.neighbors(h[i])) {
            if (slot[w] < 0) continue;
            int gap = std::abs(slot[w] - i);
            if (gap != 1 && gap != len - 1)
                return fail("chord " + std::to_string(h[i]) + "-" + std::to_string(w));
            ++seen;
        }
        if (seen != 2) return fail("missing edge at " + std::to_string(h[i]));
    }
    return true;
}

bool chordal(const Graph& g) {
    const int n = g.n();
    if (n == 0) return true;
    // Bucketed maximum cardinality search; order[i] is the i-th numbered vertex.
    std::vector<int> weight(n, 0), order, where(n, -1);
    std::vector<std::vector<int>> bucket(n + 1);
    std::vector<char> done(n, 0);
    for (int v = 0; v < n; ++v) bucket[0].push_back(v);
    int top = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        while (v < 0) {
            while (bucket[top].empty()) --top;
            int c = bucket[top].back();
            bucket[top].pop_back();
            if (!done[c] && weight[c] == top) v = c;
        }
        done[v] = 1;
        where[v] = step;
        order.push_back(v);
        for (int w : g.neighbors(v))
            if (!done[w]) {
                bucket[++weight[w]].push_back(w);
                top = std::max(top, weight[w]);
            }
    }
    // Reverse of the search order eliminates; earlier-numbered neighbours
    // of v minus the latest one must be adjacent to that latest one.
    for (int v : order) {
        int parent = -1;
        for (int w : g.neighbors(v))
            if (where[w] < where[v] && (parent < 0 || where[w] > where[parent])) parent = w;
        if (parent < 0) continue;
        for (int w : g.neighbors(v))
            if (where[w] < where[v] && w != parent && !g.adjacent(w, parent)) return false;
    }
    return true;
}

Hole find_hole(const Graph& g) {
    const int n = g.n();
    std::vector<int> prev(n, -1);
    std::vector<char> near_v(n, 0);
    // A shortest walk from a to N(v) - N[a] outside N[v] closes a hole through v.
    for (int v = 0; v < n; ++v) {
        for (int t : g.neighbors(v)) near_v[t] = 1;
        near_v[v] = 1;
        for (int a : g.neighbors(v)) {
            std::vector<int> queue{a};
            prev[a] = a;
            int hit = -1;
            for (std::size_t h = 0; h < queue.size() && hit < 0; ++h) {
                int u = queue[h];
                for (int t : g.neighbors(u)) {
                    if (prev[t] >= 0) continue;
                    if (near_v[t]) {
                        if (t != v && t != a && !g.adjacent(t, a) && u != a) {
                            prev[t] = u;
                            hit = t;
                            break;
                        }
                        continue;
                    }
                    prev[t] = u;
                    queue.push_back(t);
                }
            }
            Hole h;
            if (hit >= 0) {
                h.push_back(v);
                std::vector<int> back;
                for (int x = hit; x != a; x = prev[x]) back.push_back(x);
                back.push_back(a);
                h.insert(h.end(), back.rbegin(), back.rend());
            }
            for (int x : queue) prev[x] = -1;
            if (hit >= 0) prev[hit] = -1;
            if (hit >= 0 && hole_valid(g, h)) return h;
        }
        for (int t : g.neighbors(v)) near_v[t] = 0;
        near_v[v] = 0;
    }
    return {};
}

VertexSet brute_min_hitting(const Graph& g, int max_n) {
    guard(g, max_n, "brute_min_hitting");
    auto adj = adjacency_masks(g);
    const int n = g.n();
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    if (chordal_masked(adj, all)) return {};
    std::vector<int> pick;
    std::function<bool(int, int)> choose = [&](int from, int left) -> bool {
        if (left == 0) {
            return chordal_masked(adj, all & ~to_mask(pick));
        }
        for (int v = from; v <= n - left; ++v) {
            pick.push_back(v);
            if (choose(v + 1, left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= n; ++size)
        if (choose(0, size)) return pick;
    return {};
}

std::vector<Hole> brute_max_packing(const Graph& g, int max_n) {
    guard(g, max_n, "brute_max_packing");
    auto holes = enumerate_holes(g, g.n(), max_n);
    std::vector<Mask> masks;
    for (const auto& h : holes) masks.push_back(to_mask(h));
    std::vector<int> best, cur;
    std::function<void(Mask)> rec = [&](Mask blocked) {
        Mask reach = 0;
        for (Mask m : masks)
            if (!(m & blocked)) reach |= m;
        if (cur.size() > best.size()) best = cur;
        if (!reach || cur.size() + std::popcount(reach) / 4 <= best.size()) return;
        int v = std::countr_zero(reach);
        Mask bit = Mask{1} << v;
        for (int i = 0; i < static_cast<int>(masks.size()); ++i)
            if ((masks[i] & bit) && !(masks[i] & blocked)) {
                cur.push_back(i);
                rec(blocked | masks[i]);
                cur.pop_back();
            }
        rec(blocked | bit);
    };
    rec(0);
    std::vector<Hole> out;
    for (int i : best) out.push_back(holes[i]);
    return out;
}

VertexSet brute_min_separator(const Graph& g, const VertexSet& a, const VertexSet& b, int max_n) {
    guard(g, max_n, "brute_min_separator");
    const int n = g.n();
    VertexSet best;
    bool have = false;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (have && std::popcount(s) >= static_cast<int>(best.size())) continue;
        std::vector<char> seen(n, 0);
        std::vector<int> stack;
        for (int v : a)
            if (!(s >> v & 1) && !seen[v]) seen[v] = 1, stack.push_back(v);
        bool reaches = false;
        while (!stack.empty() && !reaches) {
            int u = stack.back();
            stack.pop_back();
            if (set_contains(b, u)) reaches = true;
            for (int w : g.neighbors(u))
                if (!(s >> w & 1) && !seen[w]) seen[w] = 1, stack.push_back(w);
        }
        if (reaches) continue;
        best.clear();
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) best.push_back(v);
        have = true;
    }
    return best;
}

int brute_max_matching(const Graph& g, const VertexSet& left, const VertexSet& right, int max_n) {
    guard(g, max_n, "brute_max_matching");
    std::vector<Edge> cross;
    for (int u : left)
        for (int w : g.neighbors(u))
            if (set_contains(right, w)) cross.emplace_back(u, w);
    int best = 0;
    std::function<void(std::size_t, Mask, int)> rec = [&](std::size_t i, Mask used, int size) {
        best = std::max(best, size);
        if (i == cross.size()) return;
        if (size + static_cast<int>(cross.size() - i) <= best) return;
        auto [u, w] = cross[i];
        if (!(used >> u & 1) && !(used >> w & 1)) rec(i + 1, used | (Mask{1} << u) | (Mask{1} << w), size + 1);
        rec(i + 1, used, size);
    };
    rec(0, 0, 0);
    return best;
}

int brute_weighted_pack(const Graph& g, const std::vector<long long>& w, int max_n) {
    guard(g, max_n, "brute_weighted_pack");
    auto cycles = enumerate_cycles(g, max_n);
    std::vector<long long> cap = w;
    int best = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int count) {
        best = std::max(best, count);
        if (i == cycles.size()) return;
        bool fits = true;
        for (int v : cycles[i]) fits = fits && cap[v] > 0;
        if (fits) {
            for (int v : cycles[i]) --cap[v];
            rec(i, count + 1);  // the same cycle may be taken again
            for (int v : cycles[i]) ++cap[v];
        }
        rec(i + 1, count);
    };
    rec(0, 0);
    return best;
}

long long brute_weighted_cover(const Graph& g, const std::vector<long long>& w, int max_n) {
    guard(g, max_n, "brute_weighted_cover");
    const int n = g.n();
    long long best = -1;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        long long cost = 0;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) cost += w[v];
        if (best >= 0 && cost >= best) continue;
        // Forest test: edges = vertices - components on the remainder.
        std::vector<int> comp(n, -1);
        long long verts = 0, edges = 0, comps = 0;
        for (int v = 0; v < n; ++v) {
            if (s >> v & 1) continue;
            ++verts;
            for (int x : g.neighbors(v))
                if (!(s >> x & 1) && x > v) ++edges;
            if (comp[v] >= 0) continue;
            ++comps;
            std::vector<int> stack{v};
            comp[v] = v;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int x : g.neighbors(u))
                    if (!(s >> x & 1) && comp[x] < 0) comp[x] = v, stack.push_back(x);
            }
        }
        if (edges == verts - comps) best = cost;
    }
    return best;
}

Verdict verify_certificate(const Graph& g, const Certificate& cert) {
    Verdict out;
    auto reject = [&](const std::string& kind, const std::string& msg) {
        out.ok = false;
        out.kind = kind;
        out.message = msg;
        return out;
    };
    if (cert.graph_hash != hash_hex(graph_hash(g)) || cert.n != g.n() || cert.m != static_cast<long long>(g.m()))
        return reject("reference", "certificate refers to a different graph");

    if (cert.kind == "hole" || cert.kind == "packing") {
        if (cert.kind == "hole" && cert.holes.size() != 1) return reject("violation", "expected exactly one hole");
        std::vector<char> used(g.n(), 0);
        for (std::size_t i = 0; i < cert.holes.size(); ++i) {
            std::string why;
            if (!hole_valid(g, cert.holes[i], &why))
                return reject("violation", "hole " + std::to_string(i) + " invalid: " + why);
            for (int v : cert.holes[i]) {
                if (used[v]) return reject("violation", "holes share vertex " + std::to_string(v));
                used[v] = 1;
            }
        }
        if (cert.kind == "packing" && cert.k && static_cast<int>(cert.holes.size()) < *cert.k + 1)
            return reject("violation", "packing has " + std::to_string(cert.holes.size()) + " holes, need " +
                                           std::to_string(*cert.k + 1));
    } else {
        VertexSet s = normalize(cert.set);
        if (s.size() != cert.set.size()) return reject("violation", "set lists a vertex twice");
        for (int v : s)
            if (!g.contains(v)) return reject("violation", "set vertex " + std::to_string(v) + " out of range");
        if (cert.bound && static_cast<long long>(s.size()) > *cert.bound)
            return reject("violation", "set size " + std::to_string(s.size()) + " exceeds bound " +
                                           std::to_string(*cert.bound));
        std::vector<char> gone(g.n(), 0);
        for (int v : s) gone[v] = 1;
        VertexSet keep;
        for (int v = 0; v < g.n(); ++v)
            if (!gone[v]) keep.push_back(v);
        GraphBuilder b(static_cast<int>(keep.size()));
        std::vector<int> local(g.n(), -1);
        for (int i = 0; i < static_cast<int>(keep.size()); ++i) local[keep[i]] = i;
        for (int v : keep)
            for (int w : g.neighbors(v))
                if (!gone[w] && v < w) b.add_edge(local[v], local[w]);
        Graph rest = b.build();
        if (!chordal(rest)) {
            Hole h = find_hole(rest);
            for (int& v : h) v = keep[v];
            out = reject("violation", "a hole survives the set");
            out.witness = std::move(h);
            return out;
        }
    }
    out.ok = true;
    out.kind = "ok";
    out.message = "certificate holds";
    return out;
}

}  // namespace epc::oracle
