#include "epc/certificate.hpp"

#include <nlohmann/json.hpp>

namespace epc {

Certificate make_certificate(const Graph& g, const std::string& kind) {
    Certificate c;
    c.kind = kind;
    c.graph_hash = hash_hex(graph_hash(g));
    c.n = g.n();
    c.m = static_cast<long long>(g.m());
    return c;
}

std::string to_json(const Certificate& c) {
    nlohmann::json j;
    j["format"] = kCertificateFormat;
    j["kind"] = c.kind;
    j["graph_hash"] = c.graph_hash;
    j["n"] = c.n;
    j["m"] = c.m;
    if (c.k) j["k"] = *c.k;
    if (c.kind == "packing" || c.kind == "hole") j["holes"] = c.holes;
    if (c.kind == "hitting" || c.kind == "deletion_set") j["set"] = c.set;
    if (c.bound) j["bound"] = *c.bound;
    if (!c.mode.empty()) j["mode"] = c.mode;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("certificate is not JSON: ") + e.what());
    }
    try {
        if (!j.is_object()) throw ParseError(0, "certificate must be a JSON object");
        if (j.value("format", "") != kCertificateFormat)
            throw ParseError(0, "unsupported certificate format '" + j.value("format", "") + "'");
        Certificate c;
        c.kind = j.at("kind").get<std::string>();
        if (c.kind != "packing" && c.kind != "hitting" && c.kind != "deletion_set" && c.kind != "hole")
            throw ParseError(0, "unknown certificate kind '" + c.kind + "'");
        c.graph_hash = j.at("graph_hash").get<std::string>();
        c.n = j.at("n").get<int>();
        c.m = j.at("m").get<long long>();
        if (j.contains("k")) c.k = j["k"].get<int>();
        if (j.contains("holes")) c.holes = j["holes"].get<std::vector<Hole>>();
        if (j.contains("set")) c.set = j["set"].get<std::vector<int>>();
        if (j.contains("bound")) c.bound = j["bound"].get<long long>();
        c.mode = j.value("mode", "");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace epc
