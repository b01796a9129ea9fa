#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epc/certificate.hpp"
#include "epc/graph.hpp"
#include "epc/holes.hpp"

// Deliberately naive references. Nothing here calls into the solver's
// search code, so agreement between the two is evidence.
namespace epc::oracle {

// Each hole once, starting at its least vertex, second vertex smaller than
// the last. Refuses n > max_n unless max_len is given.
std::vector<Hole> enumerate_holes(const Graph& g, std::optional<int> max_len = std::nullopt, int max_n = 20);

// Simple cycles (length >= 3), same canonical form.
std::vector<std::vector<int>> enumerate_cycles(const Graph& g, int max_n = 12);

bool hole_valid(const Graph& g, const Hole& h, std::string* why = nullptr);
// Maximum cardinality search followed by an elimination check.
bool chordal(const Graph& g);
// Some hole, found by per-vertex search; empty when chordal.
Hole find_hole(const Graph& g);

// Least set whose removal leaves G chordal, smallest sets first.
VertexSet brute_min_hitting(const Graph& g, int max_n = 14);
std::vector<Hole> brute_max_packing(const Graph& g, int max_n = 14);

// Least separator by subset enumeration (n <= max_n).
VertexSet brute_min_separator(const Graph& g, const VertexSet& a, const VertexSet& b, int max_n = 12);
// Maximum matching between two sides by edge-subset search.
int brute_max_matching(const Graph& g, const VertexSet& left, const VertexSet& right, int max_n = 12);

// Most cycles using each vertex v at most w(v) times.
int brute_weighted_pack(const Graph& g, const std::vector<long long>& w, int max_n = 8);
// Least total weight of a vertex set meeting every cycle.
long long brute_weighted_cover(const Graph& g, const std::vector<long long>& w, int max_n = 8);

struct Verdict {
    bool ok = false;
    std::string kind;  // "ok", "violation", "reference"
    std::string message;
    Hole witness;      // surviving hole for rejected hitting sets
};

Verdict verify_certificate(const Graph& g, const Certificate& cert);

}  // namespace epc::oracle
