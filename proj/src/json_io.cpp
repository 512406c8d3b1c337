#include "scatdet/json_io.hpp"

namespace scatdet {

namespace {

void requireField(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw DomainError(std::string("json: missing field '") + key + "'");
}

}  // namespace

surface::GroupDescriptor descriptorFromJson(const nlohmann::json& j) {
    requireField(j, "genus");
    requireField(j, "cusps");
    std::vector<int> orders;
    if (j.contains("elliptic_orders"))
        orders = j.at("elliptic_orders").get<std::vector<int>>();
    return surface::GroupDescriptor(j.at("genus").get<int>(), j.at("cusps").get<int>(),
                                    std::move(orders));
}

nlohmann::json descriptorToJson(const surface::GroupDescriptor& desc) {
    return nlohmann::json{{"genus", desc.genus()},
                          {"cusps", desc.cusps()},
                          {"elliptic_orders", desc.ellipticOrders()}};
}

scattering::ScatteringFamily familyFromJson(const nlohmann::json& j) {
    requireField(j, "family");
    const std::string kind = j.at("family").get<std::string>();
    std::vector<long long> primes;
    if (j.contains("primes")) primes = j.at("primes").get<std::vector<long long>>();
    if (kind == "modular") {
        if (!primes.empty()) throw DomainError("json: modular family takes no primes");
        return scattering::ScatteringFamily::modular();
    }
    if (kind == "gamma0") return scattering::ScatteringFamily::gamma0(std::move(primes));
    if (kind == "gamma0plus") return scattering::ScatteringFamily::gamma0plus(std::move(primes));
    throw DomainError("json: unknown family '" + kind + "'");
}

nlohmann::json familyToJson(const scattering::ScatteringFamily& family) {
    std::string kind;
    switch (family.kind()) {
        case scattering::FamilyKind::Modular: kind = "modular"; break;
        case scattering::FamilyKind::Gamma0Squarefree: kind = "gamma0"; break;
        case scattering::FamilyKind::Gamma0Plus: kind = "gamma0plus"; break;
    }
    return nlohmann::json{{"family", kind}, {"primes", family.primes()}};
}

superzeta::ZeroSet zeroSetFromJson(const nlohmann::json& j) {
    requireField(j, "kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") {
        requireField(j, "zeros");
        std::vector<superzeta::ZeroEntry> zeros;
        for (const auto& z : j.at("zeros")) {
            if (!z.is_array() || z.size() != 3)
                throw DomainError("json: finite zero entries must be [re, im, mult]");
            zeros.push_back({Complex(z[0].get<double>(), z[1].get<double>()), z[2].get<int>()});
        }
        return superzeta::ZeroSet::finite(std::move(zeros));
    }
    if (kind == "progression") {
        requireField(j, "start");
        requireField(j, "step");
        return superzeta::ZeroSet::progression(j.at("start").get<double>(),
                                               j.at("step").get<double>());
    }
    throw DomainError("json: unknown zero-set kind '" + kind + "'");
}

nlohmann::json zeroSetToJson(const superzeta::ZeroSet& zs) {
    if (zs.kind() == superzeta::ZeroSet::Kind::Finite) {
        nlohmann::json zeros = nlohmann::json::array();
        for (const auto& e : zs.zeros())
            zeros.push_back({e.zero.real(), e.zero.imag(), e.multiplicity});
        return nlohmann::json{{"kind", "finite"}, {"zeros", zeros}};
    }
    return nlohmann::json{{"kind", "progression"}, {"start", zs.start()}, {"step", zs.step()}};
}

nlohmann::json divisorCountToJson(const divisor::DivisorCount& dc) {
    nlohmann::json breakdown = nlohmann::json::array();
    for (const auto& e : dc.breakdown)
        breakdown.push_back(
            {{"location", e.location}, {"order", e.order}, {"source", e.source}});
    return nlohmann::json{{"zeros", dc.zeros},
                          {"poles", dc.poles},
                          {"breakdown", breakdown},
                          {"justifications", dc.justifications}};
}

}  // namespace scatdet
