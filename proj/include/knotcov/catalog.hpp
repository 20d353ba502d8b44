#pragma once

#include "knotcov/knot_model.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotcov {

// Parse/validation failure in a catalog file; line is 1-based, 0 when the
// error is not tied to one line.
struct CatalogError : std::runtime_error {
    std::size_t line;

    CatalogError(std::size_t line_, const std::string& msg)
        : std::runtime_error(line_ ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

struct Catalog {
    std::vector<KnotRecord> records;

    const KnotRecord* find(std::string_view name) const {
        for (const KnotRecord& r : records)
            if (r.name == name) return &r;
        return nullptr;
    }
};

namespace detail {

inline Int int_from_json(const nlohmann::json& v, const char* field) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::runtime_error&) {
            throw std::invalid_argument(std::string(field) + " is not an integer");
        }
    }
    throw std::invalid_argument(std::string(field) +
                                " must be a JSON integer or a decimal string");
}

inline nlohmann::json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

}  // namespace detail

// One catalog line: a flat JSON object. Required fields: name, genus, b,
// and a (genus 2 only). Optional: slope, source. Anything else is an error.
inline KnotRecord record_from_line(const std::string& line, std::size_t lineno = 0) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw CatalogError(lineno, std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CatalogError(lineno, "record must be a JSON object");
    try {
        for (const auto& [key, _] : j.items())
            if (key != "name" && key != "genus" && key != "a" && key != "b" &&
                key != "slope" && key != "source")
                throw std::invalid_argument("unknown field \"" + key + "\"");
        if (!j.contains("name") || !j["name"].is_string() ||
            j["name"].get<std::string>().empty())
            throw std::invalid_argument("name must be a nonempty string");
        if (!j.contains("genus") || !j["genus"].is_number_integer())
            throw std::invalid_argument("genus must be an integer");
        int genus = j["genus"].get<int>();
        if (genus != 1 && genus != 2)
            throw std::invalid_argument("genus must be 1 or 2");
        if (!j.contains("b")) throw std::invalid_argument("b is required");
        Int b = detail::int_from_json(j["b"], "b");
        if (genus == 1 && j.contains("a"))
            throw std::invalid_argument("a is not a genus-1 parameter");
        if (genus == 2 && !j.contains("a"))
            throw std::invalid_argument("a is required for genus 2");
        for (const char* field : {"slope", "source"})
            if (j.contains(field) && !j[field].is_string())
                throw std::invalid_argument(std::string(field) + " must be a string");
        AlexanderPoly poly = (genus == 1)
                                 ? AlexanderPoly::genus1(b)
                                 : AlexanderPoly::genus2(detail::int_from_json(j["a"], "a"), b);
        return KnotRecord{j["name"].get<std::string>(), std::move(poly),
                          j.value("slope", std::string{}), j.value("source", std::string{})};
    } catch (const std::invalid_argument& e) {
        throw CatalogError(lineno, e.what());
    }
}

inline std::string record_to_line(const KnotRecord& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["genus"] = r.poly.genus();
    if (r.poly.genus() == 2) j["a"] = detail::int_to_json(r.poly.a());
    j["b"] = detail::int_to_json(r.poly.b());
    if (!r.slope.empty()) j["slope"] = r.slope;
    if (!r.source.empty()) j["source"] = r.source;
    return j.dump();
}

// Line-oriented UTF-8 text: one JSON object per line, '#' comments and blank
// lines ignored. Names must be unique.
inline Catalog parse_catalog(std::istream& in) {
    Catalog cat;
    std::set<std::string, std::less<>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        KnotRecord r = record_from_line(line, lineno);
        if (!seen.insert(r.name).second)
            throw CatalogError(lineno, "duplicate knot name \"" + r.name + "\"");
        cat.records.push_back(std::move(r));
    }
    return cat;
}

inline Catalog load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError(0, "cannot open catalog file " + path.string());
    return parse_catalog(in);
}

// Validates against the existing file content, then appends one line.
inline void append_record(const std::filesystem::path& path, const KnotRecord& r) {
    Catalog existing;
    if (std::filesystem::exists(path)) existing = load_catalog(path);
    if (existing.find(r.name))
        throw CatalogError(0, "knot \"" + r.name + "\" already present in " + path.string());
    std::ofstream out(path, std::ios::app);
    if (!out) throw CatalogError(0, "cannot write catalog file " + path.string());
    out << record_to_line(r) << '\n';
}

inline std::string_view default_catalog_text() {
    return "# bundled 2-bridge knot catalog: genus 1 needs b, genus 2 needs a and b\n"
           "{\"name\":\"6_1\",\"genus\":1,\"b\":-2,\"slope\":\"9/2\","
           "\"source\":\"stevedore knot\"}\n"
           "{\"name\":\"6_2\",\"genus\":2,\"a\":-1,\"b\":2,\"slope\":\"11/3\"}\n"
           "{\"name\":\"6_3\",\"genus\":2,\"a\":1,\"b\":-2,\"slope\":\"13/5\"}\n"
           "{\"name\":\"7_7\",\"genus\":2,\"a\":1,\"b\":-4,\"slope\":\"21/8\"}\n";
}

inline const Catalog& default_catalog() {
    static const Catalog cat = [] {
        std::istringstream in{std::string(default_catalog_text())};
        return parse_catalog(in);
    }();
    return cat;
}

}  // namespace knotcov
