#include <gtest/gtest.h>

#include "support.hpp"

using namespace epc;

namespace {

// Menger certificate checked without the library's separation helper.
void check_menger(const Graph& g, const VertexSet& a, const VertexSet& b, const MengerResult& r) {
    ASSERT_EQ(r.paths.size(), r.separator.size());
    std::vector<char> in_a(g.n(), 0), in_b(g.n(), 0);
    for (int v : a) in_a[v] = 1;
    for (int v : b) in_b[v] = 1;
    for (const auto& p : r.paths) {
        ASSERT_FALSE(p.empty());
        EXPECT_TRUE(in_a[p.front()]);
        EXPECT_TRUE(in_b[p.back()]);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.adjacent(p[i], p[i + 1]));
        for (std::size_t i = 1; i + 1 < p.size(); ++i) EXPECT_FALSE(in_a[p[i]] || in_b[p[i]]);
    }
    EXPECT_TRUE(support::disjoint_sets(r.paths));
    std::vector<char> blocked(g.n(), 0);
    for (int v : r.separator) blocked[v] = 1;
    std::vector<int> d = support::bfs(g, a, blocked);
    for (int v : b) EXPECT_LT(d[v], 0) << "path survives the separator";
}

bool valid_konig(const Graph& g, const KonigResult& r) {
    if (r.matching.size() != r.cover.size()) return false;
    std::vector<std::vector<int>> used;
    for (auto [u, v] : r.matching) {
        if (!g.adjacent(u, v)) return false;
        used.push_back({u, v});
    }
    if (!support::disjoint_sets(used)) return false;
    for (auto [u, v] : g.edges())
        if (!set_contains(r.cover, u) && !set_contains(r.cover, v)) return false;
    return true;
}

Graph random_bipartite(std::mt19937_64& rng, int l, int r, double p, VertexSet& left, VertexSet& right) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Edge> e;
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < r; ++b)
            if (u(rng) < p) e.emplace_back(a, l + b);
    left.clear();
    right.clear();
    for (int a = 0; a < l; ++a) left.push_back(a);
    for (int b = 0; b < r; ++b) right.push_back(l + b);
    return Graph::from_edges(l + r, e);
}

}  // namespace

TEST(Menger, SeparateComponents) {
    Graph g = support::disjoint({support::cycle(4), support::cycle(4)});
    MengerResult r = menger(g, {0}, {5});
    EXPECT_TRUE(r.paths.empty());
    EXPECT_TRUE(r.separator.empty());
}

TEST(Menger, GridCorners) {
    Graph g = support::grid(2, 3);
    // Two internally disjoint corner-to-corner routes: measured between the
    // corners' neighbourhoods, since disjoint paths cannot share a corner.
    MengerResult r = menger(g, {1, 3}, {2, 4});
    EXPECT_EQ(r.paths.size(), 2u);
    check_menger(g, {1, 3}, {2, 4}, r);
    EXPECT_EQ(oracle::brute_min_separator(g, {1, 3}, {2, 4}).size(), 2u);
    MengerResult corners = menger(g, {0}, {5});
    EXPECT_EQ(corners.paths.size(), 1u);
    check_menger(g, {0}, {5}, corners);
}

TEST(Menger, SharedVertex) {
    Graph g = support::cycle(5);
    MengerResult r = menger(g, {2}, {2});
    ASSERT_EQ(r.paths.size(), 1u);
    EXPECT_EQ(r.paths[0], (Path{2}));
    EXPECT_EQ(r.separator, (VertexSet{2}));
}

TEST(Menger, DualityAndBruteForce) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        int n = support::uniform(rng, 2, 12);
        Graph g = support::random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.5)(rng));
        VertexSet a = support::random_subset(rng, n, 0.2), b = support::random_subset(rng, n, 0.2);
        if (a.empty()) a = {0};
        if (b.empty()) b = {n - 1};
        MengerResult r = menger(g, a, b);
        check_menger(g, a, b, r);
        EXPECT_TRUE(separates(g, a, b, r.separator));
        EXPECT_EQ(r.separator.size(), oracle::brute_min_separator(g, a, b).size());
    }
}

TEST(Menger, LargeLadderIsFast) {
    Graph g = support::grid(3, 5000);
    MengerResult r = menger(g, {0, 5000, 10000}, {4999, 9999, 14999});
    EXPECT_EQ(r.paths.size(), 3u);
}

TEST(Konig, CompleteBipartite) {
    KonigResult r = konig(support::complete_bipartite(3, 3), {0, 1, 2}, {3, 4, 5});
    EXPECT_EQ(r.matching.size(), 3u);
    EXPECT_EQ(r.cover.size(), 3u);
}

TEST(Konig, Star) {
    KonigResult r = konig(support::star(5), {0}, {1, 2, 3, 4, 5});
    EXPECT_EQ(r.matching.size(), 1u);
    EXPECT_EQ(r.cover, (VertexSet{0}));
}

TEST(Konig, IntraPartEdge) {
    EXPECT_THROW(konig(support::cycle(3), {0, 1}, {2}), PreconditionError);
}

TEST(Konig, DualityAndBruteForce) {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 200; ++t) {
        VertexSet left, right;
        int l = t < 100 ? 8 : support::uniform(rng, 1, 6), r = t < 100 ? 8 : support::uniform(rng, 1, 6);
        Graph g = random_bipartite(rng, l, r, 0.3, left, right);
        KonigResult k = konig(g, left, right);
        EXPECT_TRUE(valid_konig(g, k));
        if (g.n() <= 12) EXPECT_EQ(static_cast<int>(k.matching.size()), oracle::brute_max_matching(g, left, right));
    }
}
