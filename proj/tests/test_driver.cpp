#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "support.hpp"

using namespace epc;

namespace {

SolveOptions test_opts() {
    SolveOptions o;
    o.profile = ConstantsProfile::parse("test:0.01");
    return o;
}

bool valid_outcome(const Graph& g, const DualityOutcome& r) {
    return oracle::verify_certificate(g, certificate_for(g, r)).ok;
}

}  // namespace

TEST(Solve, ChordalGraph) {
    Graph g = parse_graph("0 1\n1 2\n2 0\n2 3\n");
    for (int k = 0; k <= 3; ++k) {
        DualityOutcome r = epc_solve(g, k);
        EXPECT_FALSE(r.packed());
        EXPECT_TRUE(r.hitting.empty());
        EXPECT_TRUE(valid_outcome(g, r));
    }
}

TEST(Solve, DisjointSquaresPack) {
    for (int k = 0; k <= 3; ++k) {
        std::vector<Graph> parts(k + 1, support::cycle(4));
        Graph g = support::disjoint(parts);
        DualityOutcome r = epc_solve(g, k);
        ASSERT_TRUE(r.packed());
        EXPECT_EQ(static_cast<int>(r.packing.size()), k + 1);
        EXPECT_EQ(r.packed_by, "peeling");
        EXPECT_TRUE(valid_outcome(g, r));
    }
}

TEST(Solve, LongCycleProduction) {
    Graph g = support::cycle(9000);
    DualityOutcome r = epc_solve(g, 1);
    ASSERT_FALSE(r.packed());
    EXPECT_LE(static_cast<long long>(r.hitting.size()), mu(1));
    EXPECT_EQ(r.bound, mu(1));
    ASSERT_EQ(r.steps.size(), 1u);
    EXPECT_TRUE(r.steps[0].via_core);
    EXPECT_TRUE(oracle::chordal(support::remove(g, r.hitting)));
}

TEST(Solve, ShortHolesTakenWhole) {
    Graph g = support::disjoint({support::cycle(5), support::cycle(4)});
    DualityOutcome r = epc_solve(g, 2);
    ASSERT_FALSE(r.packed());
    EXPECT_EQ(r.hitting.size(), 9u);
    EXPECT_EQ(r.bound, 2 * mu(2));
}

TEST(Solve, MixedLongAndShortUnderTestProfile) {
    // One long hole handled by the core routine next to two short ones.
    LongHoleSpec spec;
    spec.n = 300;
    spec.decor = parse_decorations("petal,lollipop");
    LongHoleInstance li = gen_long_hole(spec);
    Graph g = support::disjoint({li.g, support::cycle(4), support::cycle(6)});
    DualityOutcome r = epc_solve(g, 3, test_opts());
    ASSERT_FALSE(r.packed());
    EXPECT_TRUE(valid_outcome(g, r));
    int via_core = 0;
    for (const auto& s : r.steps) via_core += s.via_core;
    EXPECT_EQ(via_core, 1);

    nlohmann::json led = nlohmann::json::parse(ledger_json(r));
    EXPECT_EQ(led["provenance"].size(), r.hitting.size());
    for (const auto& e : led["provenance"]) EXPECT_NE(e["source"], "unknown");
    DualityOutcome again = epc_solve(g, 3, test_opts());
    EXPECT_EQ(to_json(certificate_for(g, again)), to_json(certificate_for(g, r)));
}

TEST(Solve, OracleConsistency) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 60; ++t) {
        Graph g = support::random_graph(rng, support::uniform(rng, 4, 12), 0.3);
        int k = support::uniform(rng, 0, 3);
        DualityOutcome r = epc_solve(g, k);
        ASSERT_TRUE(valid_outcome(g, r));
        if (r.packed())
            EXPECT_GE(static_cast<int>(oracle::brute_max_packing(g).size()), k + 1);
        else
            EXPECT_LE(oracle::brute_min_hitting(g).size(), r.hitting.size());
    }
}

TEST(Approx, ChordalGivesEmptySet) {
    ApproxOutcome a = approx_cvd(support::complete(5));
    EXPECT_TRUE(a.deletion.empty());
    EXPECT_EQ(a.k_final, 0);
}

TEST(Approx, Square) {
    ApproxOutcome a = approx_cvd(support::cycle(4));
    EXPECT_GE(a.deletion.size(), 1u);
    EXPECT_LE(a.k_final, 1);
    EXPECT_TRUE(oracle::chordal(support::remove(support::cycle(4), a.deletion)));
}

TEST(Approx, RandomGraphsAgainstOptimum) {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 40; ++t) {
        Graph g = support::random_graph(rng, 12, 0.3);
        ApproxOutcome a = approx_cvd(g);
        EXPECT_TRUE(oracle::chordal(support::remove(g, a.deletion)));
        EXPECT_LE(static_cast<std::size_t>(a.k_final), oracle::brute_min_hitting(g).size());
    }
}

TEST(Weighted, UnitSquareSubdivides) {
    WeightedReduction red = weighted_reduce(support::cycle(4), {1, 1, 1, 1});
    EXPECT_EQ(red.h.n(), 8);
    EXPECT_EQ(red.h.m(), 8u);
    for (int v = 0; v < 8; ++v) EXPECT_EQ(red.h.degree(v), 2);
    EXPECT_EQ(support::bfs(red.h, {0})[7] >= 0, true);
    EXPECT_EQ(oracle::enumerate_holes(red.h).size(), 1u);
}

TEST(Weighted, SingleEdgeIsPath) {
    WeightedReduction red = weighted_reduce(parse_graph("0 1\n"), {1, 1});
    EXPECT_EQ(red.h.n(), 3);
    EXPECT_EQ(red.h.m(), 2u);
    EXPECT_TRUE(oracle::enumerate_holes(red.h).empty());
}

TEST(Weighted, TrianglesSharingHeavyVertex) {
    Graph g = parse_graph("0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n");
    std::vector<long long> w{2, 1, 1, 1, 1};
    WeightedReduction red = weighted_reduce(g, w);
    EXPECT_EQ(oracle::brute_max_packing(red.h, 20).size(), 2u);
    EXPECT_EQ(oracle::brute_min_hitting(red.h, 20).size(), 2u);
    EXPECT_EQ(oracle::brute_weighted_pack(g, w), 2);
    EXPECT_EQ(oracle::brute_weighted_cover(g, w), 2);
    WeightedOutcome r = weighted_solve(g, w, 1);
    ASSERT_TRUE(r.packed);
    EXPECT_EQ(r.cycles.size(), 2u);
}

TEST(Weighted, StarNeedsNothing) {
    WeightedOutcome r = weighted_solve(support::star(6), std::vector<long long>(7, 2), 1);
    EXPECT_FALSE(r.packed);
    EXPECT_TRUE(r.cover.empty());
    EXPECT_EQ(r.cover_weight, 0);
}

TEST(Weighted, ZeroWeightCutVertex) {
    // Two squares glued at vertex 0, which costs nothing.
    Graph g = parse_graph("0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n5 6\n6 0\n");
    std::vector<long long> w{0, 1, 1, 1, 1, 1, 1};
    WeightedReduction red = weighted_reduce(g, w);
    EXPECT_EQ(red.free_vertices, (VertexSet{0}));
    EXPECT_EQ(oracle::brute_weighted_cover(g, w), 0);
    WeightedOutcome r = weighted_solve(g, w, 1);
    ASSERT_FALSE(r.packed);
    EXPECT_EQ(r.cover_weight, 0);
    EXPECT_TRUE(is_forest(g, r.cover));
    EXPECT_EQ(oracle::brute_min_hitting(red.h).size(), 0u);
}

TEST(Weighted, CoverTranslatesOnRandomInstances) {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 25; ++t) {
        Graph g = support::random_graph(rng, support::uniform(rng, 3, 7), 0.4);
        std::vector<long long> w(g.n());
        for (auto& x : w) x = support::uniform(rng, 0, 2);
        WeightedOutcome r = weighted_solve(g, w, 2);
        if (r.packed) {
            for (const auto& c : r.cycles) EXPECT_TRUE(support::is_cycle(g, c));
        } else {
            EXPECT_TRUE(is_forest(g, r.cover));
        }
    }
}

TEST(Weighted, Preconditions) {
    EXPECT_THROW(weighted_reduce(support::cycle(4), {1, 1}), PreconditionError);
    EXPECT_THROW(weighted_reduce(support::cycle(4), {1, 1, -1, 1}), PreconditionError);
}

TEST(Forest, Detection) {
    EXPECT_TRUE(is_forest(support::star(4), {}));
    EXPECT_FALSE(is_forest(support::cycle(3), {}));
    EXPECT_TRUE(is_forest(support::cycle(3), {1}));
}
