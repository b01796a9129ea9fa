#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "epc/cycle_packing.hpp"

namespace epc {

long long s_threshold(int k) {
    if (k < 1) throw PreconditionError("s_k needs k >= 1");
    if (k == 1) return 2;
    long double x = k;
    long double v = 4 * x * (std::log2(x) + std::log2(std::log2(x)) + 4);
    return static_cast<long long>(std::ceil(v - 1e-9L));
}

long long mu(int k) {
    if (k < 1) throw PreconditionError("mu_k needs k >= 1");
    return 76 * s_threshold(k + 1) + 3217LL * k + 1985;
}

long long ConstantsProfile::s(int k) const {
    if (production) return s_threshold(k);
    auto scaled = static_cast<long long>(std::ceil(static_cast<long double>(s_threshold(k)) * scale - 1e-9L));
    return std::max<long long>(2LL * k, scaled);
}

long long ConstantsProfile::mu(int k) const {
    if (production) return epc::mu(k);
    auto scaled = static_cast<long long>(std::ceil(static_cast<long double>(epc::mu(k)) * scale - 1e-9L));
    return std::max(mu_floor, scaled);
}

std::string ConstantsProfile::name() const {
    if (production) return "production";
    char buf[64];
    std::snprintf(buf, sizeof buf, "test:%g", scale);
    return buf;
}

ConstantsProfile ConstantsProfile::test_profile(double scale) {
    if (!(scale > 0) || scale > 1) throw PreconditionError("test scale must be in (0, 1]");
    ConstantsProfile p;
    p.production = false;
    p.scale = scale;
    return p;
}

ConstantsProfile ConstantsProfile::parse(const std::string& text) {
    if (text == "production") return production_profile();
    if (text.rfind("test:", 0) == 0) {
        std::size_t used = 0;
        double scale = 0;
        try {
            scale = std::stod(text.substr(5), &used);
        } catch (const std::exception&) {
            throw PreconditionError("bad profile '" + text + "'");
        }
        if (used != text.size() - 5) throw PreconditionError("bad profile '" + text + "'");
        return test_profile(scale);
    }
    throw PreconditionError("unknown profile '" + text + "' (want production or test:<scale>)");
}

ConstantsProfile ConstantsProfile::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("profile json: ") + e.what());
    }
    if (!j.is_object()) throw PreconditionError("profile json must be an object");
    if (j.value("mode", "test") != "test") throw PreconditionError("only test profiles load from json");
    ConstantsProfile p = test_profile(j.value("scale", 0.01));
    for (auto& [key, value] : j.items()) {
        if (key == "mode" || key == "scale") continue;
        if (key == "mu_floor") {
            p.mu_floor = value.get<long long>();
            if (p.mu_floor < 1) throw PreconditionError("mu_floor must be positive");
            continue;
        }
        throw PreconditionError("profile key '" + key + "' is not adjustable");
    }
    return p;
}

}  // namespace epc
