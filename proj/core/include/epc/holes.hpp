#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epc/graph.hpp"

namespace epc {

// Induced cycle of length >= 4 in cyclic order.
using Hole = std::vector<int>;

bool is_hole(const Graph& g, const Hole& cycle, std::string* why = nullptr);

// Minimum-length hole. Ties go to the least closing triple (v, w, z), w in
// the middle; the hole is returned as [w, v, ..., z].
std::optional<Hole> shortest_hole(const Graph& g);

// Shortest hole through w (least v, then least z on ties).
std::optional<Hole> hole_containing(const Graph& g, int w);

// S must contain w with N(w) ∩ S = {x1, x2}, x1 x2 non-adjacent. Closes the
// shortest x1-x2 path of G[S] - w through w.
std::optional<Hole> hole_through(const Graph& g, const VertexSet& s, int w);

// P, Q internally disjoint paths with equal ends, Q induced, w inner on Q
// and anticomplete to the inner part of P.
Hole hole_from_two_paths(const Graph& g, const Path& p, const Path& q, int w);

std::vector<int> lex_bfs_order(const Graph& g);

// Perfect elimination order from reverse LexBFS, verified. Empty optional
// means the order failed, so the graph has a hole.
std::optional<std::vector<int>> perfect_elimination_order(const Graph& g);

struct ChordalityCertificate {
    bool chordal = false;
    std::vector<int> peo;  // when chordal
    Hole witness;          // when not
};

ChordalityCertificate is_chordal(const Graph& g);
bool chordal_fast(const Graph& g);

// Shortest path from s to t inside the vertex set `allowed` (sorted).
std::optional<Path> shortest_path_within(const Graph& g, const VertexSet& allowed, int s, int t);

}  // namespace epc
