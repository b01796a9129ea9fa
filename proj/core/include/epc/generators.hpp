#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epc/graph.hpp"
#include "epc/holes.hpp"

namespace epc {

// 2x-1 shared vertices; one 2x-hole per x-subset, the hole's private side
// vertices joined completely across subsets.
struct LowerBoundInstance {
    Graph g;
    std::vector<Hole> long_holes;  // the planted 2x-holes, one per subset
    VertexSet shared;              // the 2x-1 shared vertices
    int x = 0;
    int ell = 0;
};

LowerBoundInstance gen_lower_bound(int x, int ell);

// Gadget kinds: petal, track, dom, ear, lollipop, tulip.
struct Decoration {
    std::string kind;
    int pos = -1;  // -1: placed by the generator
    int arg = -1;  // track length, or the ear's second anchor
};

std::vector<Decoration> parse_decorations(const std::string& text);

struct LongHoleSpec {
    int n = 0;
    std::vector<Decoration> decor;
    int spacing = 25;
    std::uint64_t seed = 0;
};

struct PlantedGadget {
    std::string kind;
    int pos = 0;
    int arg = -1;
    int first = 0, last = -1;   // vertex id range of the gadget's own vertices
    VertexSet anchors;          // cycle vertices the gadget attaches to
    Hole hole;                  // one hole the gadget creates
    std::string expect;         // which hitting stage should take it
};

struct LongHoleInstance {
    Graph g;
    Hole cycle;  // cycle[i] = i
    std::vector<PlantedGadget> gadgets;
    std::string ledger_json() const;
};

LongHoleInstance gen_long_hole(const LongHoleSpec& spec);

Graph gen_gnp(int n, double p, std::uint64_t seed);
// Uniform pairing model, retried until simple.
Graph gen_cubic(int n, std::uint64_t seed);

}  // namespace epc
