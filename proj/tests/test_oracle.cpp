#include <gtest/gtest.h>

#include "support.hpp"

using namespace epc;

namespace {

Certificate hole_cert(const Graph& g, const Hole& h) {
    Certificate c = make_certificate(g, "hole");
    c.holes = {h};
    return c;
}

}  // namespace

TEST(Enumerate, SmallCases) {
    EXPECT_EQ(oracle::enumerate_holes(support::cycle(5)).size(), 1u);
    EXPECT_EQ(oracle::enumerate_holes(support::complete(4)).size(), 0u);
    EXPECT_EQ(oracle::enumerate_holes(parse_graph("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3\n")).size(), 2u);
    EXPECT_EQ(oracle::enumerate_holes(support::petersen()).size(), 12u + 10u);
}

TEST(Enumerate, CanonicalForm) {
    for (const auto& h : oracle::enumerate_holes(support::petersen())) {
        EXPECT_EQ(h.front(), *std::min_element(h.begin(), h.end()));
        EXPECT_LT(h[1], h.back());
    }
}

TEST(Enumerate, Guard) {
    EXPECT_THROW(oracle::enumerate_holes(support::cycle(25)), GuardError);
    EXPECT_EQ(oracle::enumerate_holes(support::cycle(25), 30, 30).size(), 1u);
    EXPECT_EQ(oracle::enumerate_holes(support::cycle(25), 10, 30).size(), 0u);
    EXPECT_THROW(oracle::brute_min_hitting(support::cycle(15)), GuardError);
}

TEST(Enumerate, CyclesOfK4) {
    // 4 triangles and 3 four-cycles.
    EXPECT_EQ(oracle::enumerate_cycles(support::complete(4)).size(), 7u);
}

TEST(BruteHitting, Examples) {
    EXPECT_EQ(oracle::brute_min_hitting(support::complete(6)).size(), 0u);
    EXPECT_EQ(oracle::brute_min_hitting(support::cycle(4)).size(), 1u);
    EXPECT_EQ(oracle::brute_min_hitting(support::disjoint({support::cycle(4), support::cycle(4)})).size(), 2u);
}

TEST(BrutePacking, Examples) {
    EXPECT_EQ(oracle::brute_max_packing(support::complete(6)).size(), 0u);
    EXPECT_EQ(oracle::brute_max_packing(support::disjoint({support::cycle(4), support::cycle(4)})).size(), 2u);
}

TEST(BrutePacking, LowerBoundLongHolesIntersect) {
    // Restricted to holes of length >= 5 the packing number is 1.
    LowerBoundInstance inst = gen_lower_bound(3, 5);
    std::vector<Hole> longs;
    for (auto& h : oracle::enumerate_holes(inst.g, inst.g.n(), inst.g.n()))
        if (h.size() >= 5) longs.push_back(h);
    ASSERT_EQ(longs.size(), 10u);
    for (std::size_t i = 0; i < longs.size(); ++i)
        for (std::size_t j = i + 1; j < longs.size(); ++j)
            EXPECT_FALSE(support::disjoint_sets({longs[i], longs[j]}));
}

TEST(BruteForce, PackingNeverExceedsHitting) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 150; ++t) {
        Graph g = support::random_graph(rng, support::uniform(rng, 1, 12), 0.35);
        auto pack = oracle::brute_max_packing(g);
        auto hit = oracle::brute_min_hitting(g);
        EXPECT_LE(pack.size(), hit.size());
        EXPECT_TRUE(oracle::chordal(support::remove(g, hit)));
        EXPECT_TRUE(support::disjoint_sets(pack));
        for (const auto& h : pack) EXPECT_TRUE(support::is_induced_cycle(g, h));
        // No smaller set works: every set one smaller that is a subset of hit fails.
        for (std::size_t drop = 0; drop < hit.size(); ++drop) {
            VertexSet less = hit;
            less.erase(less.begin() + static_cast<long>(drop));
            EXPECT_FALSE(oracle::chordal(support::remove(g, less)));
        }
    }
}

TEST(BruteForce, ChordalAgreesWithEnumeration) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 200; ++t) {
        Graph g = support::random_graph(rng, support::uniform(rng, 1, 13), 0.4);
        bool none = oracle::enumerate_holes(g).empty();
        EXPECT_EQ(oracle::chordal(g), none);
        EXPECT_EQ(oracle::find_hole(g).empty(), none);
        if (!none) EXPECT_TRUE(support::is_induced_cycle(g, oracle::find_hole(g)));
    }
}

TEST(BruteForce, WeightedSmall) {
    Graph tri = support::cycle(3);
    EXPECT_EQ(oracle::brute_weighted_pack(tri, {1, 1, 1}), 1);
    EXPECT_EQ(oracle::brute_weighted_pack(tri, {2, 2, 2}), 2);
    EXPECT_EQ(oracle::brute_weighted_cover(tri, {3, 1, 2}), 1);
    EXPECT_EQ(oracle::brute_weighted_cover(support::star(4), {1, 1, 1, 1, 1}), 0);
}

TEST(Verify, HoleCertificates) {
    Graph c5 = support::cycle(5);
    EXPECT_TRUE(oracle::verify_certificate(c5, hole_cert(c5, {0, 1, 2, 3, 4})).ok);
    Graph chord = parse_graph("0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n");
    auto v = oracle::verify_certificate(chord, hole_cert(chord, {0, 1, 2, 3, 4}));
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.kind, "violation");
    EXPECT_NE(v.message.find("chord"), std::string::npos) << v.message;
}

TEST(Verify, HittingLeavingASquare) {
    Graph g = support::disjoint({support::cycle(4), support::cycle(4)});
    Certificate c = make_certificate(g, "hitting");
    c.k = 1;
    c.set = {0};
    auto v = oracle::verify_certificate(g, c);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(normalize(v.witness), (VertexSet{4, 5, 6, 7}));
    c.set = {0, 4};
    EXPECT_TRUE(oracle::verify_certificate(g, c).ok);
    c.bound = 1;
    EXPECT_FALSE(oracle::verify_certificate(g, c).ok);
    c.bound.reset();
    c.set = {0, 0};
    EXPECT_FALSE(oracle::verify_certificate(g, c).ok);
}

TEST(Verify, PackingChecks) {
    Graph g = support::disjoint({support::cycle(4), support::cycle(4)});
    Certificate c = make_certificate(g, "packing");
    c.k = 1;
    c.holes = {{0, 1, 2, 3}, {4, 5, 6, 7}};
    EXPECT_TRUE(oracle::verify_certificate(g, c).ok);
    c.holes = {{0, 1, 2, 3}, {0, 1, 2, 3}};
    EXPECT_FALSE(oracle::verify_certificate(g, c).ok);
    c.holes = {{0, 1, 2, 3}};
    EXPECT_FALSE(oracle::verify_certificate(g, c).ok);
}

TEST(Verify, ReferenceMismatch) {
    Graph g = support::cycle(4);
    Certificate c = make_certificate(support::cycle(5), "hole");
    c.holes = {{0, 1, 2, 3}};
    auto v = oracle::verify_certificate(g, c);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.kind, "reference");
}

TEST(Certificate, JsonRoundTrip) {
    Graph g = support::disjoint({support::cycle(4), support::cycle(5)});
    DualityOutcome r = epc_solve(g, 1);
    Certificate c = certificate_for(g, r);
    std::string text = to_json(c);
    Certificate back = certificate_from_json(text);
    EXPECT_EQ(to_json(back), text);
    EXPECT_TRUE(oracle::verify_certificate(g, back).ok);
    EXPECT_THROW(certificate_from_json("{"), ParseError);
    EXPECT_THROW(certificate_from_json(R"({"format": "other"})"), ParseError);
}
