#include "epc/generators.hpp"

namespace epc {

LowerBoundInstance gen_lower_bound(int x, int ell) {
    if (x < 3) throw PreconditionError("lower-bound family needs x >= 3");
    if (ell < 5 || 2 * x < ell) throw PreconditionError("need 5 <= ell <= 2x");
    const int base = 2 * x - 1;
    std::vector<std::vector<int>> subsets;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == x) {
            subsets.push_back(pick);
            return;
        }
        for (int v = from; v < base; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    if (subsets.size() > 100000) throw PreconditionError("lower-bound family too large");

    LowerBoundInstance out;
    out.x = x;
    out.ell = ell;
    GraphBuilder b(base);
    for (int v = 0; v < base; ++v) out.shared.push_back(v);
    std::vector<int> side_start;
    for (const auto& f : subsets) {
        int first = b.add_vertices(x);
        side_start.push_back(first);
        Hole h;
        for (int i = 0; i < x; ++i) {
            int y = first + i, s = f[i], y_next = first + (i + 1) % x;
            b.add_edge(y, s);
            b.add_edge(s, y_next);
            h.push_back(y);
            h.push_back(s);
        }
        out.long_holes.push_back(std::move(h));
    }
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t c = a + 1; c < subsets.size(); ++c)
            for (int i = 0; i < x; ++i)
                for (int j = 0; j < x; ++j) b.add_edge(side_start[a] + i, side_start[c] + j);
    out.g = b.build();
    return out;
}

}  // namespace epc
