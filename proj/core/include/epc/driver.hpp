#pragma once

#include <string>
#include <vector>

#include "epc/certificate.hpp"
#include "epc/core_hitting.hpp"

namespace epc {

struct SolveOptions {
    ConstantsProfile profile;
    // Skip re-verifying that each peeled hole is shortest inside the core.
    bool trust_peeling = true;
};

struct PeelStep {
    Hole hole;               // host ids
    bool via_core = false;   // long hole handled by the core routine
    bool fallback = false;   // no clean window under test constants; V(C) taken
    std::size_t added = 0;   // vertices added to the hitting set at this step
    HittingLedger ledger;    // core stages, host ids
};

struct DualityOutcome {
    enum class Kind { Packing, Hitting } kind = Kind::Hitting;
    std::vector<Hole> packing;
    VertexSet hitting;
    long long bound = 0;  // |peeled| * mu_k for hitting outcomes
    int k = 0;
    std::string mode;
    std::vector<PeelStep> steps;
    std::string packed_by;
    bool packed() const { return kind == Kind::Packing; }
};

// Either k+1 vertex-disjoint holes or a set X with G - X chordal.
DualityOutcome epc_solve(const Graph& g, int k, const SolveOptions& opts = {});
Certificate certificate_for(const Graph& g, const DualityOutcome& r);
// Per-vertex record of which step and stage put it into the hitting set.
std::string ledger_json(const DualityOutcome& r);

// Greedy maximal packing of shortest holes, host ids.
std::vector<Hole> greedy_packing(const Graph& g, int limit = -1);

struct ApproxOutcome {
    VertexSet deletion;
    int k_final = 0;      // the graph holds k_final disjoint holes
    int greedy = 0;
    std::vector<int> tried;
};

ApproxOutcome approx_cvd(const Graph& g, const SolveOptions& opts = {});

// Subdivide every edge, then blow each vertex up into a clique of its weight.
struct WeightedReduction {
    Graph h;
    std::vector<int> origin;               // H vertex -> reduced-graph vertex
    std::vector<std::vector<int>> clique;  // reduced-graph vertex -> H vertices
    std::vector<int> host;                 // reduced-graph vertex -> G vertex, -1 for subdivisions
    std::vector<Edge> subdivided;          // subdivision vertex (offset by kept count) -> G edge
    std::vector<long long> weight;         // reduced-graph vertex -> clique size
    std::vector<long long> g_weight;       // input weights
    VertexSet free_vertices;               // weight-0 vertices of G, dropped before reducing
    int kept = 0;                          // G vertices that survive into the reduction
};

WeightedReduction weighted_reduce(const Graph& g, const std::vector<long long>& w);

struct WeightedOutcome {
    bool packed = false;
    std::vector<std::vector<int>> cycles;  // G vertex sequences
    VertexSet cover;                       // G vertices meeting every cycle
    long long cover_weight = 0;
    DualityOutcome reduced;                // outcome on H
};

WeightedOutcome weighted_solve(const Graph& g, const std::vector<long long>& w, int k, const SolveOptions& opts = {});
// Cover from a hitting set of H, whole cliques preferred over edge cliques.
VertexSet cover_from_hitting(const WeightedReduction& red, const VertexSet& s);
std::vector<std::vector<int>> cycles_from_holes(const WeightedReduction& red, const std::vector<Hole>& holes);
bool is_forest(const Graph& g, const VertexSet& removed);

}  // namespace epc
