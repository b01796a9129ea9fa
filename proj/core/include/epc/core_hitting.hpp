#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "epc/cycle_packing.hpp"
#include "epc/graph.hpp"
#include "epc/holes.hpp"

namespace epc {

struct AnchorRejection : PreconditionError {
    std::string reason;
    explicit AnchorRejection(const std::string& why) : PreconditionError("anchor rejected: " + why), reason(why) {}
};

// Raised when every 25-window of the cycle meets T_petal. Only reachable
// under scaled-down test constants.
struct NoCleanWindow : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct AnchorOptions {
    bool verify_shortest = true;
    bool verify_remainder = true;
    bool enforce_length = true;  // |C| > mu_k
};

// Fixed context (G, C, D, Z) of the long-hole step. Positions index the
// cycle: c_i = cycle[i mod m].
struct AnchoredInstance {
    Graph g;
    Hole cycle;
    std::vector<int> pos;                 // host -> position, -1 off the cycle
    VertexSet dom;                        // vertices adjacent to all of C
    std::vector<VertexSet> zone;          // position -> Z set
    std::vector<std::vector<int>> zpos;   // host -> positions whose zone holds it
    std::vector<char> is_dom;
    ConstantsProfile profile;
    int k = 1;

    int m() const { return static_cast<int>(cycle.size()); }
    int wrap(long long i) const { return static_cast<int>(((i % m()) + m()) % m()); }
    int at(long long i) const { return cycle[wrap(i)]; }
    bool on_cycle(int v) const { return pos[v] >= 0; }
    int cdist(int i, int j) const {
        int d = std::abs(wrap(i) - wrap(j));
        return std::min(d, m() - d);
    }
    VertexSet zone_union(const std::vector<int>& positions) const;
    VertexSet hosts(const std::vector<int>& positions) const;
    std::vector<int> positions_of(const VertexSet& s) const;  // C members only
    // Positions within distance r of the given ones along C.
    std::vector<int> cycle_ball(const std::vector<int>& positions, int r) const;
};

AnchoredInstance anchor(const Graph& g, const Hole& c, int k, const ConstantsProfile& profile,
                        const AnchorOptions& opts = {});

// sp(S) as C vertices.
VertexSet support(const AnchoredInstance& inst, const VertexSet& s);

// Checks that need no search: D is a clique, no edge joins zones of
// positions at distance >= 4. Returns an empty string when all hold.
std::string structural_violation(const AnchoredInstance& inst);

struct StepResult {
    std::vector<Hole> packing;  // k+1 disjoint holes, or empty
    VertexSet set;              // hitting contribution when not packed
    bool packed() const { return !packing.empty(); }
};

StepResult hit_petals(const AnchoredInstance& inst);

struct WindowFamilies {
    int start = 0;  // position of v_0
    std::vector<Path> short_arc;  // Z_{v0} -> Z_{v20} through v_1..v_19
    std::vector<Path> long_arc;   // Z_{v5} -> Z_{v15} around through v_0 and v_20
    VertexSet short_cut, long_cut;
};

// First 25-window v_{-2}..v_{22} avoiding T_petal; throws NoCleanWindow.
int clean_window(const AnchoredInstance& inst, const VertexSet& t_petal);
WindowFamilies window_families(const AnchoredInstance& inst, const VertexSet& t_petal, int start);
StepResult hit_full_sunflowers(const AnchoredInstance& inst, const VertexSet& t_petal);
std::vector<Hole> link_path_families(const AnchoredInstance& inst, const std::vector<Path>& short_arc,
                                     const std::vector<Path>& long_arc, int start);

StepResult hit_traversing_sunflowers(const AnchoredInstance& inst, const VertexSet& t_petal);

struct WStructure {
    std::vector<Edge> edges;  // host ids, includes C
    VertexSet vertices;
    VertexSet branch;         // T_branch
    std::vector<Path> extensions;
};

WStructure build_W(const AnchoredInstance& inst);
// Re-checks the extension conditions of step i against W before that step.
std::string extension_violation(const AnchoredInstance& inst, const WStructure& w, std::size_t step);
// k+1 holes from a W with many branching points; empty if greedy fell short.
std::vector<Hole> holes_from_W(const AnchoredInstance& inst, const WStructure& w);

StepResult hit_almost_extensions(const AnchoredInstance& inst, const WStructure& w);

struct HittingLedger {
    VertexSet petal, full, trav_sunf, branch, almost, ext, avoid_tulip, trav_tulip;
    std::vector<std::vector<int>> fragments;  // positions, q_1 first
};

struct ExtAssembly {
    VertexSet t_ext;
    std::vector<std::vector<int>> fragments;
};

ExtAssembly assemble_T_ext(const AnchoredInstance& inst, const HittingLedger& ledger);
VertexSet tunnel_cut(const AnchoredInstance& inst, const VertexSet& t_ext, const std::vector<int>& fragment);
StepResult hit_avoiding_tulips(const AnchoredInstance& inst, const ExtAssembly& ext);
StepResult hit_traversing_tulips(const AnchoredInstance& inst, const VertexSet& t_ext, const VertexSet& t_avoid);

struct CoreOutcome {
    std::vector<Hole> packing;
    VertexSet hitting;
    HittingLedger ledger;
    std::string packed_by;  // stage name when packed
    bool packed() const { return !packing.empty(); }
};

CoreOutcome core_theorem(const AnchoredInstance& inst);
CoreOutcome core_theorem(const Graph& g, int k, const Hole& c, const ConstantsProfile& profile,
                         const AnchorOptions& opts = {});

}  // namespace epc
