#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "epc/generators.hpp"

namespace epc {

namespace {

const std::set<std::string> kKinds{"petal", "track", "dom", "ear", "lollipop", "tulip"};
constexpr int kDefaultTrack = 8;

int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw PreconditionError("bad " + what + " '" + s + "'");
    return v;
}

}  // namespace

std::vector<Decoration> parse_decorations(const std::string& text) {
    std::vector<Decoration> out;
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        Decoration d;
        std::size_t at = item.find('@');
        d.kind = item.substr(0, at);
        if (!kKinds.count(d.kind)) throw PreconditionError("unknown decoration '" + d.kind + "'");
        if (at != std::string::npos) {
            std::string rest = item.substr(at + 1);
            std::size_t colon = rest.find(':');
            d.pos = parse_int(rest.substr(0, colon), "decoration position");
            if (colon != std::string::npos) d.arg = parse_int(rest.substr(colon + 1), "decoration argument");
        }
        out.push_back(std::move(d));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

LongHoleInstance gen_long_hole(const LongHoleSpec& spec) {
    const int n = spec.n;
    if (n < 8) throw PreconditionError("long hole needs n >= 8");
    auto wrap = [n](long long i) { return static_cast<int>(((i % n) + n) % n); };
    auto cdist = [&](int a, int b) {
        int d = std::abs(wrap(a) - wrap(b));
        return std::min(d, n - d);
    };

    std::vector<Decoration> decor = spec.decor;
    std::mt19937_64 rng(spec.seed);
    int slots = 0;
    for (const auto& d : decor)
        if (d.pos < 0) slots += d.kind == "ear" ? 2 : 1;
    if (slots > 0) {
        const int gap = n / slots;
        const int offset = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < decor.size(); ++i)
            if (decor[i].pos < 0) order.push_back(i);
        std::shuffle(order.begin(), order.end(), rng);
        int slot = 0;
        for (std::size_t i : order) {
            decor[i].pos = wrap(offset + static_cast<long long>(slot++) * gap);
            if (decor[i].kind == "ear" && decor[i].arg < 0) decor[i].arg = wrap(offset + static_cast<long long>(slot++) * gap);
        }
    }
    for (auto& d : decor) {
        if (d.pos < 0 || d.pos >= n) throw PreconditionError("decoration position out of range");
        if (d.kind == "track" && d.arg < 0) d.arg = kDefaultTrack;
        if (d.kind == "track" && (d.arg < 2 || d.arg > n / 4)) throw PreconditionError("track length out of range");
        if (d.kind == "ear") {
            if (d.arg < 0) d.arg = wrap(d.pos + n / 2);
            if (d.arg >= n || cdist(d.pos, d.arg) < 3 || n - cdist(d.pos, d.arg) < 3)
                throw PreconditionError("ear anchors too close");
        }
    }
    bool has_track = false, has_dom = false;
    for (const auto& d : decor) {
        has_track = has_track || d.kind == "track";
        has_dom = has_dom || d.kind == "dom" || d.kind == "tulip";
    }
    // d c_p u_0 u_1 c_{p+2} would be a 5-hole.
    if (has_track && has_dom) throw PreconditionError("a track cannot share the cycle with a dominating vertex");
    // Occupied cycle positions per gadget; distinct gadgets keep `spacing` apart.
    std::vector<std::vector<int>> occupied;
    for (const auto& d : decor) {
        std::vector<int> occ{d.pos};
        if (d.kind == "petal" || d.kind == "dom") occ.push_back(wrap(d.pos + 1));
        if (d.kind == "track")
            for (int i = 1; i <= d.arg; ++i) occ.push_back(wrap(d.pos + i));
        if (d.kind == "ear") occ.push_back(d.arg);
        occupied.push_back(std::move(occ));
    }
    for (std::size_t a = 0; a < occupied.size(); ++a)
        for (std::size_t c = a + 1; c < occupied.size(); ++c)
            for (int x : occupied[a])
                for (int y : occupied[c])
                    if (cdist(x, y) < spec.spacing)
                        throw PreconditionError("decorations " + decor[a].kind + "@" + std::to_string(decor[a].pos) +
                                                " and " + decor[c].kind + "@" + std::to_string(decor[c].pos) +
                                                " are closer than " + std::to_string(spec.spacing));

    LongHoleInstance out;
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) {
        b.add_edge(i, wrap(i + 1));
        out.cycle.push_back(i);
    }
    std::vector<int> dominators;
    auto path = [&](int count) {
        int first = b.add_vertices(count);
        for (int i = 0; i + 1 < count; ++i) b.add_edge(first + i, first + i + 1);
        return first;
    };
    auto dominate = [&](int d) {
        for (int i = 0; i < n; ++i) b.add_edge(d, i);
        for (int e : dominators) b.add_edge(d, e);
        dominators.push_back(d);
    };

    for (const auto& d : decor) {
        PlantedGadget pg;
        pg.kind = d.kind;
        pg.pos = d.pos;
        pg.arg = d.arg;
        pg.first = b.n();
        const int p = d.pos, p1 = wrap(p + 1);
        if (d.kind == "petal") {
            const int len = n - 2;
            int a = b.add_vertex();
            int t = path(len);
            int z = b.add_vertex();
            for (int c : {p, p1}) b.add_edge(a, c), b.add_edge(z, c);
            b.add_edge(a, t);
            b.add_edge(t + len - 1, z);
            for (int i = 0; i < len; ++i) b.add_edge(t + i, p);
            pg.hole = {p1, a};
            for (int i = 0; i < len; ++i) pg.hole.push_back(t + i);
            pg.hole.push_back(z);
            pg.anchors = normalize({p, p1});
            pg.expect = "petal";
        } else if (d.kind == "track") {
            const int len = d.arg;
            int u = path(len);
            for (int i = 0; i < len; ++i) b.add_edge(u + i, wrap(p + i)), b.add_edge(u + i, wrap(p + i + 1));
            for (int i = 0; i < len; ++i) pg.hole.push_back(u + i);
            for (int i = len; i <= n; ++i) pg.hole.push_back(wrap(p + i));
            for (int i = 0; i <= len; ++i) pg.anchors.push_back(wrap(p + i));
            pg.anchors = normalize(pg.anchors);
            pg.expect = "full_sunflower";
        } else if (d.kind == "dom") {
            const int len = n - 1;
            int dv = b.add_vertex();
            int a = path(len);
            b.add_edge(a, p);
            for (int i = 0; i < len; ++i) b.add_edge(a + i, p1);
            b.add_edge(a + len - 1, dv);
            dominate(dv);
            pg.hole = {dv, p};
            for (int i = 0; i < len; ++i) pg.hole.push_back(a + i);
            pg.anchors = normalize({p, p1});
            pg.expect = "traversing_sunflower";
        } else if (d.kind == "ear") {
            const int q = d.arg, gap = cdist(p, q), len = n - 2;  // long enough that a dominator cannot shortcut it
            int e = path(len);
            b.add_edge(e, p);
            b.add_edge(e + len - 1, q);
            pg.hole = {p};
            for (int i = 0; i < len; ++i) pg.hole.push_back(e + i);
            // back from q to p along the short arc, endpoints excluded
            int dir = wrap(q + gap) == p ? 1 : -1;
            for (int i = 0; i < gap; ++i) pg.hole.push_back(wrap(q + static_cast<long long>(dir) * i));
            pg.anchors = normalize({p, q});
            pg.expect = "extension";
        } else if (d.kind == "lollipop") {
            const int len = n;
            int w = path(len);
            b.add_edge(w, p);
            b.add_edge(w + len - 1, p);
            pg.hole = {p};
            for (int i = 0; i < len; ++i) pg.hole.push_back(w + i);
            pg.anchors = {p};
            pg.expect = "almost_extension";
        } else {  // tulip
            const int len = n - 2;
            int dv = b.add_vertex();
            int y = b.add_vertex();
            int z = path(len);
            b.add_edge(y, p);
            b.add_edge(y, z);
            b.add_edge(z + len - 1, dv);
            dominate(dv);
            pg.hole = {dv, p, y};
            for (int i = 0; i < len; ++i) pg.hole.push_back(z + i);
            pg.anchors = {p};
            pg.expect = "traversing_tulip";
        }
        pg.last = b.n() - 1;
        out.gadgets.push_back(std::move(pg));
    }
    out.g = b.build();

    for (const auto& pg : out.gadgets)
        if (!is_hole(out.g, pg.hole)) throw DefectError("planted " + pg.kind + " hole is not induced");
    if (!chordal_fast(delete_vertices(out.g, out.cycle).graph))
        throw DefectError("decorations left a hole away from the cycle");
    auto h = shortest_hole(out.g);
    if (!h || static_cast<int>(h->size()) != n) throw DefectError("decorations created a hole shorter than the cycle");
    return out;
}

std::string LongHoleInstance::ledger_json() const {
    nlohmann::json j;
    j["n"] = cycle.size();
    j["vertices"] = g.n();
    j["edges"] = g.m();
    j["gadgets"] = nlohmann::json::array();
    for (const auto& pg : gadgets) {
        nlohmann::json e;
        e["kind"] = pg.kind;
        e["pos"] = pg.pos;
        if (pg.arg >= 0) e["arg"] = pg.arg;
        e["vertex_range"] = {pg.first, pg.last};
        e["anchors"] = pg.anchors;
        e["hole_length"] = pg.hole.size();
        e["expect"] = pg.expect;
        j["gadgets"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

}  // namespace epc
