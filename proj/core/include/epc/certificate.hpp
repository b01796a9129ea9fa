#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epc/graph.hpp"
#include "epc/holes.hpp"

namespace epc {

inline constexpr const char* kCertificateFormat = "epc-cert/1";

// kind: "packing", "hitting", "deletion_set" or "hole".
struct Certificate {
    std::string kind;
    std::string graph_hash;
    int n = 0;
    long long m = 0;
    std::optional<int> k;
    std::vector<Hole> holes;
    VertexSet set;
    std::optional<long long> bound;
    std::string mode;  // profile name, empty if not applicable
};

Certificate make_certificate(const Graph& g, const std::string& kind);
// Keys sorted, two-space indent.
std::string to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

}  // namespace epc
