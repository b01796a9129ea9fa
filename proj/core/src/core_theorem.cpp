#include "epc/core_hitting.hpp"

namespace epc {

CoreOutcome core_theorem(const AnchoredInstance& inst) {
    CoreOutcome out;
    auto& led = out.ledger;
    auto packed = [&](StepResult& r, const char* stage) {
        if (!r.packed()) return false;
        out.packing = std::move(r.packing);
        out.packed_by = stage;
        return true;
    };

    StepResult r = hit_petals(inst);
    if (packed(r, "petals")) return out;
    led.petal = std::move(r.set);

    r = hit_full_sunflowers(inst, led.petal);
    if (packed(r, "full_sunflowers")) return out;
    led.full = std::move(r.set);

    r = hit_traversing_sunflowers(inst, led.petal);
    if (packed(r, "traversing_sunflowers")) return out;
    led.trav_sunf = std::move(r.set);

    WStructure w = build_W(inst);
    led.branch = w.branch;
    if (static_cast<long long>(w.branch.size()) >= inst.profile.s(inst.k + 1)) {
        auto holes = holes_from_W(inst, w);
        if (!holes.empty()) {
            out.packing = std::move(holes);
            out.packed_by = "extensions";
            return out;
        }
    }

    r = hit_almost_extensions(inst, w);
    if (packed(r, "almost_extensions")) return out;
    led.almost = std::move(r.set);

    ExtAssembly ext = assemble_T_ext(inst, led);
    led.ext = ext.t_ext;
    led.fragments = ext.fragments;

    r = hit_avoiding_tulips(inst, ext);
    led.avoid_tulip = std::move(r.set);

    r = hit_traversing_tulips(inst, led.ext, led.avoid_tulip);
    if (packed(r, "traversing_tulips")) return out;
    led.trav_tulip = std::move(r.set);

    out.hitting = set_union(set_union(led.ext, led.avoid_tulip), led.trav_tulip);
    if (!chordal_fast(delete_vertices(inst.g, out.hitting).graph))
        throw DefectError("core hitting set leaves a hole");
    if (inst.profile.production && static_cast<long long>(out.hitting.size()) > inst.profile.mu(inst.k))
        throw DefectError("core hitting set exceeds mu_k");
    return out;
}

CoreOutcome core_theorem(const Graph& g, int k, const Hole& c, const ConstantsProfile& profile,
                         const AnchorOptions& opts) {
    return core_theorem(anchor(g, c, k, profile, opts));
}

}  // namespace epc
