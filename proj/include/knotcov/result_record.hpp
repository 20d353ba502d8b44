#pragma once

#include "knotcov/abelian_group.hpp"
#include "knotcov/catalog.hpp"
#include "knotcov/homology.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotcov {

// One computed cover, serialisable as a single JSON line. Every integer is
// emitted as a decimal string so arbitrary precision survives the round
// trip; parse_record(emit_record(r)) == r.
struct ResultRecord {
    std::string knot;  // catalog name; empty when parameters were inline
    int genus = 0;
    std::optional<Int> a;  // genus 2 only
    Int b = 0;
    unsigned n = 0;
    AbelianGroup group;
    HomologyCertificate certificate;
    // verification flags, present only when checks were requested; pairs
    // keep the emission order stable
    std::optional<std::vector<std::pair<std::string, bool>>> checks;

    bool operator==(const ResultRecord&) const = default;
};

inline std::string emit_record(const ResultRecord& r) {
    nlohmann::ordered_json j;
    if (!r.knot.empty()) j["knot"] = r.knot;
    j["genus"] = r.genus;
    if (r.a) j["a"] = r.a->str();
    j["b"] = r.b.str();
    j["n"] = r.n;
    j["group"]["free_rank"] = r.group.free_rank;
    auto torsion = nlohmann::ordered_json::array();
    for (const Int& d : r.group.torsion) torsion.push_back(d.str());
    j["group"]["torsion"] = std::move(torsion);
    j["group"]["pretty"] = r.group.to_string();
    auto& cert = j["certificate"];
    cert["branch"] = r.certificate.branch;
    cert["n"] = r.certificate.n;
    auto inter = nlohmann::ordered_json::array();
    for (const auto& [name, v] : r.certificate.intermediates)
        inter.push_back(nlohmann::ordered_json::array({name, v.str()}));
    cert["intermediates"] = std::move(inter);
    cert["notes"] = r.certificate.notes;
    cert["violations"] = r.certificate.violations;
    if (r.checks) {
        auto checks = nlohmann::ordered_json::object();
        for (const auto& [name, ok] : *r.checks) checks[name] = ok;
        j["checks"] = std::move(checks);
    }
    return j.dump();
}

inline ResultRecord parse_record(const std::string& line) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("result record is not valid JSON: ") +
                                    e.what());
    }
    for (const auto& [key, _] : j.items())
        if (key != "knot" && key != "genus" && key != "a" && key != "b" && key != "n" &&
            key != "group" && key != "certificate" && key != "checks")
            throw std::invalid_argument("result record: unknown field \"" + key + "\"");
    ResultRecord r;
    r.knot = j.value("knot", std::string{});
    r.genus = j.at("genus").get<int>();
    if (j.contains("a")) r.a = Int(j.at("a").get<std::string>());
    r.b = Int(j.at("b").get<std::string>());
    r.n = j.at("n").get<unsigned>();
    const auto& g = j.at("group");
    r.group.free_rank = g.at("free_rank").get<std::size_t>();
    for (const auto& d : g.at("torsion")) r.group.torsion.emplace_back(d.get<std::string>());
    const auto& cert = j.at("certificate");
    r.certificate.branch = cert.at("branch").get<std::string>();
    r.certificate.n = cert.at("n").get<unsigned>();
    for (const auto& item : cert.at("intermediates"))
        r.certificate.intermediates.emplace_back(item.at(0).get<std::string>(),
                                                 Int(item.at(1).get<std::string>()));
    for (const auto& s : cert.at("notes")) r.certificate.notes.push_back(s.get<std::string>());
    for (const auto& s : cert.at("violations"))
        r.certificate.violations.push_back(s.get<std::string>());
    if (j.contains("checks")) {
        std::vector<std::pair<std::string, bool>> checks;
        for (const auto& [name, ok] : j.at("checks").items())
            checks.emplace_back(name, ok.get<bool>());
        r.checks = std::move(checks);
    }
    return r;
}

}  // namespace knotcov
