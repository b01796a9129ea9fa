#include <random>

#include "epc/generators.hpp"

namespace epc {

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw PreconditionError("n must be non-negative");
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return b.build();
}

Graph gen_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw PreconditionError("cubic graphs need an even n >= 4 (3n must be even)");
    std::mt19937_64 rng(seed);
    std::vector<int> points(3 * n);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<Edge> edges;
        bool simple = true;
        for (int i = 0; i < 3 * n && simple; i += 2) {
            int u = std::min(points[i], points[i + 1]), v = std::max(points[i], points[i + 1]);
            if (u == v) simple = false;
            edges.emplace_back(u, v);
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph::from_edges(n, edges);
    }
    throw DefectError("pairing model kept producing multigraphs");
}

}  // namespace epc
