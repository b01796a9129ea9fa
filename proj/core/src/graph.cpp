#include "epc/graph.hpp"

#include <charconv>
#include <cstdio>
#include <deque>
#include <iterator>

namespace epc {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::size_t twice = 0;
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        twice += a.size();
    }
    g.m_ = twice / 2;
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
    edges_.emplace_back(u, v);
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, int line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected integer, got '" + std::string(tok) + "'");
    return value;
}

WeightedText parse_impl(std::string_view text, bool allow_weights) {
    std::vector<Edge> edges;
    std::vector<std::pair<int, long long>> wlines;
    long long header_n = -1;
    int max_id = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto toks = split_tokens(line);
        if (toks.empty() || toks[0][0] == '#' || toks[0][0] == 'c') {
            if (end == text.size()) break;
            continue;
        }
        if (toks[0] == "p") {
            if (toks.size() != 3 && toks.size() != 4)
                throw ParseError(line_no, "header must be 'p n m'");
            auto first = toks.size() == 4 ? 2 : 1;
            header_n = to_int(toks[first], line_no);
            if (header_n < 0) throw ParseError(line_no, "negative vertex count");
        } else if (toks[0] == "w") {
            if (!allow_weights) throw ParseError(line_no, "weight line in plain graph");
            if (toks.size() != 3) throw ParseError(line_no, "weight line must be 'w v weight'");
            long long v = to_int(toks[1], line_no), w = to_int(toks[2], line_no);
            if (v < 0 || w < 0) throw ParseError(line_no, "negative vertex or weight");
            wlines.emplace_back(static_cast<int>(v), w);
            max_id = std::max(max_id, static_cast<int>(v));
        } else {
            std::size_t off = toks[0] == "e" ? 1 : 0;
            if (toks.size() != off + 2) throw ParseError(line_no, "expected 'u v'");
            long long u = to_int(toks[off], line_no), v = to_int(toks[off + 1], line_no);
            if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
            if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            if (u > 100000000 || v > 100000000) throw ParseError(line_no, "vertex id too large");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            max_id = std::max<int>(max_id, static_cast<int>(std::max(u, v)));
        }
        if (end == text.size()) break;
    }
    int n = max_id + 1;
    if (header_n >= 0) {
        if (header_n < n) throw ParseError(0, "header vertex count smaller than largest id");
        n = static_cast<int>(header_n);
    }
    WeightedText out{Graph::from_edges(n, edges), {}};
    if (!wlines.empty()) {
        out.weights.assign(n, 1);
        for (auto [v, w] : wlines) out.weights[v] = w;
    }
    return out;
}

}  // namespace

Graph parse_graph(std::string_view text) { return parse_impl(text, false).graph; }

WeightedText parse_weighted(std::string_view text) { return parse_impl(text, true); }

std::string write_edge_list(const Graph& g) {
    std::string out = "p " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    char buf[32];
    for (auto [u, v] : g.edges()) {
        int len = std::snprintf(buf, sizeof buf, "%d %d\n", u, v);
        out.append(buf, len);
    }
    return out;
}

void check_range(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (!g.contains(v)) throw PreconditionError("vertex id " + std::to_string(v) + " out of range");
}

VertexSet normalize(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Induced induced_subgraph(const Graph& g, const VertexSet& s_in) {
    check_range(g, s_in);
    VertexSet s = normalize(s_in);
    Induced out;
    out.to_host = s;
    // Scratch index shared across calls so tiny subgraphs of huge hosts stay cheap.
    thread_local std::vector<int> index;
    thread_local std::vector<std::uint32_t> stamp;
    thread_local std::uint32_t epoch = 0;
    if (static_cast<int>(index.size()) < g.n()) {
        index.assign(g.n(), -1);
        stamp.assign(g.n(), 0);
        epoch = 0;
    }
    if (++epoch == 0) {
        std::fill(stamp.begin(), stamp.end(), 0);
        epoch = 1;
    }
    const int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) index[s[i]] = i, stamp[s[i]] = epoch;
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        const auto& nb = g.neighbors(s[i]);
        if (nb.size() <= static_cast<std::size_t>(4 * k)) {
            for (int w : nb)
                if (stamp[w] == epoch && index[w] > i) edges.emplace_back(i, index[w]);
        } else {
            for (int j = i + 1; j < k; ++j)
                if (std::binary_search(nb.begin(), nb.end(), s[j])) edges.emplace_back(i, j);
        }
    }
    out.graph = Graph::from_edges(k, edges);
    return out;
}

Induced delete_vertices(const Graph& g, const VertexSet& removed) {
    check_range(g, removed);
    std::vector<char> gone(g.n(), 0);
    for (int v : removed) gone[v] = 1;
    VertexSet keep;
    keep.reserve(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

VertexSet r_neighborhood(const Graph& g, const VertexSet& s, int r) {
    check_range(g, s);
    if (r < 0) throw PreconditionError("negative radius");
    std::vector<int> dist(g.n(), -1);
    std::deque<int> queue;
    for (int v : s)
        if (dist[v] < 0) dist[v] = 0, queue.push_back(v);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == r) continue;
        for (int w : g.neighbors(u))
            if (dist[w] < 0) dist[w] = dist[u] + 1, queue.push_back(w);
    }
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (dist[v] >= 0) out.push_back(v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.n(), -1);
    std::vector<int> queue{source};
    dist[source] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (int w : g.neighbors(u))
            if (dist[w] < 0) dist[w] = dist[u] + 1, queue.push_back(w);
    }
    return dist;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_path(const Graph& g, const Path& p) {
    if (p.empty()) return false;
    VertexSet seen = normalize(p);
    if (seen.size() != p.size()) return false;
    for (int v : p)
        if (!g.contains(v)) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.adjacent(p[i], p[i + 1])) return false;
    return true;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        VertexSet members{s};
        comp[s] = id;
        for (std::size_t h = 0; h < members.size(); ++h)
            for (int w : g.neighbors(members[h]))
                if (comp[w] < 0) comp[w] = id, members.push_back(w);
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::uint64_t graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    feed(std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n");
    for (auto [u, v] : g.edges()) feed(std::to_string(u) + " " + std::to_string(v) + "\n");
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace epc
