#include "epc/holes.hpp"

#include <climits>

namespace epc {

namespace {

// BFS with caller-supplied enterable/target predicates. Targets are recorded
// and never expanded. Parents are first discoverers with neighbours scanned
// in ascending order, so reconstructed paths are deterministic.
class Search {
public:
    explicit Search(const Graph& g) : g_(g), stamp_(g.n(), 0), dist_(g.n()), parent_(g.n()) {}

    template <class Ok, class Target>
    int run(int s, Ok ok, Target target, int max_depth, bool all_at_min, std::vector<int>& found) {
        found.clear();
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        queue_.clear();
        queue_.push_back(s);
        stamp_[s] = epoch_;
        dist_[s] = 0;
        parent_[s] = -1;
        int found_d = -1;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            int u = queue_[head];
            int d = dist_[u] + 1;
            if (d > max_depth || (found_d >= 0 && d > found_d)) break;
            for (int x : g_.neighbors(u)) {
                if (stamp_[x] == epoch_) continue;
                if (target(x)) {
                    stamp_[x] = epoch_, dist_[x] = d, parent_[x] = u;
                    found.push_back(x);
                    found_d = d;
                    if (!all_at_min) return d;
                } else if (ok(x)) {
                    stamp_[x] = epoch_, dist_[x] = d, parent_[x] = u;
                    queue_.push_back(x);
                }
            }
        }
        return found_d;
    }

    Path path_to(int t) const {
        Path p;
        for (int x = t; x != -1; x = parent_[x]) p.push_back(x);
        std::reverse(p.begin(), p.end());
        return p;
    }

private:
    const Graph& g_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<int> dist_, parent_, queue_;
};

bool simplicial_in(const Graph& g, int u, const std::vector<char>& alive, std::vector<int>& buf) {
    buf.clear();
    for (int x : g.neighbors(u))
        if (alive[x]) buf.push_back(x);
    for (std::size_t i = 0; i < buf.size(); ++i)
        for (std::size_t j = i + 1; j < buf.size(); ++j)
            if (!g.adjacent(buf[i], buf[j])) return false;
    return true;
}

}  // namespace

bool is_hole(const Graph& g, const Hole& cycle, std::string* why) {
    auto fail = [why](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    const int m = static_cast<int>(cycle.size());
    if (m < 4) return fail("fewer than 4 vertices");
    for (int v : cycle)
        if (!g.contains(v)) return fail("vertex " + std::to_string(v) + " out of range");
    VertexSet sorted = normalize(cycle);
    if (static_cast<int>(sorted.size()) != m) return fail("repeated vertex");
    for (int i = 0; i < m; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % m];
        if (!g.adjacent(a, b))
            return fail("missing edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    for (int i = 0; i < m; ++i) {
        int v = cycle[i];
        int prev = cycle[(i + m - 1) % m], next = cycle[(i + 1) % m];
        const auto& nb = g.neighbors(v);
        auto chord_with = [&](int u) {
            return fail("chord " + std::to_string(std::min(u, v)) + "-" + std::to_string(std::max(u, v)));
        };
        if (nb.size() <= sorted.size()) {
            for (int u : nb)
                if (u != prev && u != next && set_contains(sorted, u)) return chord_with(u);
        } else {
            for (int u : sorted)
                if (u != v && u != prev && u != next && std::binary_search(nb.begin(), nb.end(), u))
                    return chord_with(u);
        }
    }
    return true;
}

std::vector<int> lex_bfs_order(const Graph& g) {
    const int n = g.n();
    std::vector<int> order(n), pos(n), cls(n, 0);
    struct Block {
        int start, end, split;
    };
    std::vector<Block> blocks{{0, n, -1}};
    for (int v = 0; v < n; ++v) order[v] = v, pos[v] = v;
    std::vector<char> done(n, 0);
    std::vector<int> touched;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        done[v] = 1;
        ++blocks[cls[v]].start;
        touched.clear();
        for (int w : g.neighbors(v)) {
            if (done[w]) continue;
            int c = cls[w];
            if (blocks[c].split < 0) {
                blocks[c].split = static_cast<int>(blocks.size());
                blocks.push_back({blocks[c].start, blocks[c].start, -1});
                touched.push_back(c);
            }
            int nc = blocks[c].split;
            int p = blocks[c].start, u = order[p];
            std::swap(order[p], order[pos[w]]);
            pos[u] = pos[w];
            pos[w] = p;
            ++blocks[c].start;
            ++blocks[nc].end;
            cls[w] = nc;
        }
        for (int c : touched) blocks[c].split = -1;
    }
    return order;
}

std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
    std::vector<int> peo = lex_bfs_order(g);
    std::reverse(peo.begin(), peo.end());
    std::vector<int> idx(g.n());
    for (int i = 0; i < g.n(); ++i) idx[peo[i]] = i;
    for (int v : peo) {
        int parent = -1;
        for (int u : g.neighbors(v))
            if (idx[u] > idx[v] && (parent < 0 || idx[u] < idx[parent])) parent = u;
        if (parent < 0) continue;
        for (int u : g.neighbors(v))
            if (idx[u] > idx[v] && u != parent && !g.adjacent(parent, u)) return std::nullopt;
    }
    return peo;
}

bool chordal_fast(const Graph& g) { return perfect_elimination_order(g).has_value(); }

ChordalityCertificate is_chordal(const Graph& g) {
    ChordalityCertificate cert;
    if (auto peo = perfect_elimination_order(g)) {
        cert.chordal = true;
        cert.peo = std::move(*peo);
        return cert;
    }
    auto h = shortest_hole(g);
    if (!h) throw DefectError("elimination order failed but no hole found");
    cert.witness = std::move(*h);
    return cert;
}

std::optional<Hole> shortest_hole(const Graph& g) {
    if (chordal_fast(g)) return std::nullopt;
    const int n = g.n();
    std::vector<char> alive(n, 1);
    std::vector<int> del_step(n, INT_MAX);
    std::vector<int> buf, work;

    // Simplicial vertices lie on no hole; peel them after each deletion.
    auto cascade = [&](int step) {
        while (!work.empty()) {
            int u = work.back();
            work.pop_back();
            if (!alive[u] || !simplicial_in(g, u, alive, buf)) continue;
            alive[u] = 0;
            del_step[u] = step;
            for (int x : g.neighbors(u))
                if (alive[x]) work.push_back(x);
        }
    };
    for (int v = n - 1; v >= 0; --v) work.push_back(v);
    cascade(0);

    Search search(g);
    Marks in_nw(n), in_nv(n);
    std::vector<int> found;
    int best = INT_MAX, best_w = -1, best_step = -1, step = 0;
    for (int w = 0; w < n && best > 4; ++w) {
        if (!alive[w]) continue;
        ++step;
        in_nw.clear();
        in_nw.set(w);
        int alive_deg = 0;
        for (int x : g.neighbors(w))
            if (alive[x]) in_nw.set(x), ++alive_deg;
        for (int v : g.neighbors(w)) {
            if (!alive[v]) continue;
            in_nv.clear();
            int shared = 0;
            for (int x : g.neighbors(v))
                if (alive[x]) {
                    in_nv.set(x);
                    if (x != w && in_nw.test(x)) ++shared;
                }
            if (alive_deg - 1 - shared <= 0) continue;
            int cap = best == INT_MAX ? INT_MAX : best - 3;
            if (cap < 2) continue;
            int d = search.run(
                v, [&](int x) { return alive[x] && !in_nw.test(x); },
                [&](int x) { return in_nw.test(x) && x != w && !in_nv.test(x); }, cap, false, found);
            if (d >= 0 && d + 2 < best) best = d + 2, best_w = w, best_step = step;
        }
        alive[w] = 0;
        del_step[w] = step;
        for (int x : g.neighbors(w))
            if (alive[x]) work.push_back(x);
        cascade(step);
    }
    if (best_w < 0) throw DefectError("elimination order failed but hole search found nothing");

    // The first w reaching the optimum is the least vertex over all shortest
    // holes; rerun from it for the least (v, w, z).
    const int u = best_w;
    std::vector<char> live(n);
    for (int x = 0; x < n; ++x) live[x] = del_step[x] >= best_step;
    in_nv.clear();
    for (int x : g.neighbors(u)) in_nv.set(x);
    for (int w : g.neighbors(u)) {
        if (!live[w]) continue;
        in_nw.clear();
        in_nw.set(w);
        for (int x : g.neighbors(w))
            if (live[x]) in_nw.set(x);
        int d = search.run(
            u, [&](int x) { return live[x] && !in_nw.test(x); },
            [&](int x) { return in_nw.test(x) && x != w && x != u && !in_nv.test(x); }, best - 2, true,
            found);
        if (d != best - 2) continue;
        int z = *std::min_element(found.begin(), found.end());
        Hole h{w};
        for (int x : search.path_to(z)) h.push_back(x);
        return h;
    }
    throw DefectError("shortest hole reconstruction failed");
}

std::optional<Hole> hole_containing(const Graph& g, int w) {
    if (!g.contains(w)) throw PreconditionError("vertex out of range");
    const int n = g.n();
    Search search(g);
    Marks in_nw(n), in_nv(n);
    in_nw.set(w);
    for (int x : g.neighbors(w)) in_nw.set(x);
    std::vector<int> found;
    std::optional<Hole> best;
    int best_d = INT_MAX;
    for (int v : g.neighbors(w)) {
        in_nv.clear();
        for (int x : g.neighbors(v)) in_nv.set(x);
        int cap = best_d == INT_MAX ? INT_MAX : best_d - 1;
        if (cap < 2) break;
        int d = search.run(
            v, [&](int x) { return !in_nw.test(x); },
            [&](int x) { return in_nw.test(x) && x != w && x != v && !in_nv.test(x); }, cap, true,
            found);
        if (d < 0) continue;
        best_d = d;
        int z = *std::min_element(found.begin(), found.end());
        Hole h{w};
        for (int x : search.path_to(z)) h.push_back(x);
        best = std::move(h);
    }
    return best;
}

std::optional<Path> shortest_path_within(const Graph& g, const VertexSet& allowed, int s, int t) {
    Induced sub = induced_subgraph(g, allowed);
    int ls = sub.local(s), lt = sub.local(t);
    if (ls < 0 || lt < 0) throw PreconditionError("path ends outside the allowed set");
    if (ls == lt) return Path{s};
    Search search(sub.graph);
    std::vector<int> found;
    int d = search.run(
        ls, [](int) { return true; }, [lt](int x) { return x == lt; }, INT_MAX, false, found);
    if (d < 0) return std::nullopt;
    return sub.lift(search.path_to(lt));
}

std::optional<Hole> hole_through(const Graph& g, const VertexSet& s, int w) {
    if (!set_contains(s, w)) throw PreconditionError("w not in the vertex set");
    std::vector<int> ends;
    for (int x : g.neighbors(w))
        if (set_contains(s, x)) ends.push_back(x);
    if (ends.size() != 2) throw PreconditionError("w must have exactly two neighbours in the set");
    if (g.adjacent(ends[0], ends[1])) throw PreconditionError("neighbours of w are adjacent");
    VertexSet rest = s;
    rest.erase(std::lower_bound(rest.begin(), rest.end(), w));
    auto p = shortest_path_within(g, rest, ends[0], ends[1]);
    if (!p) return std::nullopt;
    Hole h{w};
    h.insert(h.end(), p->begin(), p->end());
    return h;
}

Hole hole_from_two_paths(const Graph& g, const Path& p, const Path& q, int w) {
    if (!is_path(g, p) || !is_path(g, q)) throw PreconditionError("P and Q must be paths");
    if (p.front() != q.front() || p.back() != q.back())
        throw PreconditionError("P and Q must share both ends");
    VertexSet pin(p.begin() + 1, p.end() - 1), qin(q.begin() + 1, q.end() - 1);
    pin = normalize(pin);
    qin = normalize(qin);
    if (!set_intersection(pin, qin).empty()) throw PreconditionError("P and Q not internally disjoint");
    VertexSet qset = normalize(q);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 2; j < q.size(); ++j)
            if (g.adjacent(q[i], q[j])) throw PreconditionError("Q is not induced");
    if (!set_contains(qin, w)) throw PreconditionError("w must be an inner vertex of Q");
    for (int x : pin)
        if (g.adjacent(w, x)) throw PreconditionError("w has a neighbour inside P");
    auto h = hole_through(g, set_union(normalize(p), qset), w);
    if (!h) throw DefectError("two-path closure found no path");
    return *h;
}

}  // namespace epc
