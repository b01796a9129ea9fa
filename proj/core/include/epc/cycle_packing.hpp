#pragma once

#include <string>
#include <vector>

#include "epc/graph.hpp"

namespace epc {

// Cycle packing threshold: 2 for k = 1, else ceil(4k(log k + log log k + 4)), base 2.
long long s_threshold(int k);
// Hitting budget 76 s_{k+1} + 3217 k + 1985.
long long mu(int k);

struct ConstantsProfile {
    bool production = true;
    double scale = 1.0;
    long long mu_floor = 50;  // test mode only

    // Window constants are never scaled.
    int petal_window = 9;
    int petal_span = 7;
    int petal_radius = 6;
    int sunflower_window = 25;
    int block = 5;
    int ext_radius = 20;
    int ext_multiplier = 41;
    int fragment_min = 36;
    int fragment_trim = 15;
    int avoid_multiplier = 35;

    long long s(int k) const;
    long long mu(int k) const;
    int short_arc_paths(int k) const { return k + 13; }
    int long_arc_paths(int k) const { return 3 * k + 15; }

    std::string name() const;

    static ConstantsProfile production_profile() { return {}; }
    static ConstantsProfile test_profile(double scale);
    // "production" or "test:<scale>".
    static ConstantsProfile parse(const std::string& text);
    // Test-mode JSON: {"mode": "test", "scale": x, "mu_floor": m}.
    static ConstantsProfile from_json(const std::string& text);
};

struct CyclePacking {
    std::vector<std::vector<int>> cycles;  // host ids, cyclic order
    int branching = 0;                     // degree-3 vertices of the input
    bool below_threshold = false;
};

// Greedy packing in a (2,3)-subgraph given by its edges over host ids:
// suppress degree-2 chains, take a shortest multigraph cycle, delete it,
// repeat. Stops once `want` cycles are found.
CyclePacking pack_cycles_23(const std::vector<Edge>& edges, int want);

}  // namespace epc
