#pragma once

#include <vector>

#include "epc/graph.hpp"

namespace epc {

struct MengerResult {
    std::vector<Path> paths;  // pairwise disjoint (A,B)-paths
    VertexSet separator;      // |separator| == paths.size()
};

// Maximum family of vertex-disjoint (A,B)-paths with a matching minimum
// separator. Vertices in A ∩ B are single-vertex paths and always separate.
MengerResult menger(const Graph& g, const VertexSet& a, const VertexSet& b);

// True if every (A,B)-path of G meets the separator.
bool separates(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& sep);

struct BipartiteMatching {
    std::vector<int> match_left;   // -1 when free
    std::vector<int> match_right;
    std::vector<int> cover_left;   // König cover, left ids
    std::vector<int> cover_right;
    int size = 0;
};

// Hopcroft-Karp on left ids 0..nl-1, right ids 0..nr-1.
BipartiteMatching hopcroft_karp(int nl, int nr, const std::vector<std::vector<int>>& adj);

struct KonigResult {
    std::vector<Edge> matching;  // (left, right) host ids
    VertexSet cover;
};

KonigResult konig(const Graph& g, const VertexSet& left, const VertexSet& right);

}  // namespace epc
