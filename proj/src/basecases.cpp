#include "curvecount/basecases.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace curvecount {

using nlohmann::ordered_json;

bool base_is_projectivized(BaseTarget t) {
    switch (t) {
        case BaseTarget::A1:
        case BaseTarget::A2:
        case BaseTarget::D4:
        case BaseTarget::D5: return false;
        default: return true;
    }
}

std::string base_target_name(BaseTarget t) {
    switch (t) {
        case BaseTarget::A1: return "A1";
        case BaseTarget::A2: return "A2";
        case BaseTarget::D4: return "D4";
        case BaseTarget::D5: return "D5";
        case BaseTarget::PA3: return "PA3";
        case BaseTarget::PA4: return "PA4";
        case BaseTarget::PA5: return "PA5";
        case BaseTarget::PA6: return "PA6";
        case BaseTarget::PA7: return "PA7";
        case BaseTarget::PD6: return "PD6";
        case BaseTarget::PD7: return "PD7";
        case BaseTarget::PE6: return "PE6";
        case BaseTarget::PE7: return "PE7";
    }
    return "?";
}

std::vector<BaseTarget> all_base_targets() {
    return {BaseTarget::A1, BaseTarget::A2, BaseTarget::D4, BaseTarget::D5,
            BaseTarget::PA3, BaseTarget::PA4, BaseTarget::PA5, BaseTarget::PA6,
            BaseTarget::PA7, BaseTarget::PD6, BaseTarget::PD7, BaseTarget::PE6,
            BaseTarget::PE7};
}

BaseTarget base_target_from_name(const std::string& s) {
    for (BaseTarget t : all_base_targets())
        if (base_target_name(t) == s) return t;
    throw SchemaError("unknown base target '" + s + "'");
}

std::string base_key_str(const BaseKey& k) {
    return base_target_name(k.target) + "(n=" + std::to_string(k.n) +
           ",m=" + std::to_string(k.m) + ")";
}

std::vector<BaseKey> BaseTable::manifest() {
    std::vector<BaseKey> keys;
    for (BaseTarget t : all_base_targets())
        for (int n = 0; n < 3; ++n)
            for (int m = 0; m <= (base_is_projectivized(t) ? 1 : 0); ++m)
                keys.push_back({t, n, m});
    return keys;
}

namespace {

// The nodal row every table must agree with: N(A1, n) = 3(d-1)^2, 3(d-1), 1.
Polynomial a1_row(int n) {
    switch (n) {
        case 0: return Polynomial::ints({3, -6, 3});
        case 1: return Polynomial::ints({-3, 3});
        case 2: return Polynomial::ints({1});
    }
    return Polynomial();
}

}  // namespace

BaseTable BaseTable::from_json_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("base table is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
        throw SchemaError("base table must be an object with an 'entries' array");

    BaseTable table;
    for (const auto& item : doc["entries"]) {
        if (!item.is_object()) throw SchemaError("entry is not an object");
        for (const char* field : {"target", "n", "m", "coeffs", "source", "min_d"})
            if (!item.contains(field))
                throw SchemaError(std::string("entry missing field '") + field + "'");
        if (!item["target"].is_string()) throw SchemaError("'target' must be a string");
        const BaseTarget t = base_target_from_name(item["target"].get<std::string>());
        if (!item["n"].is_number_integer() || !item["m"].is_number_integer())
            throw SchemaError("'n' and 'm' must be integers");
        const int n = item["n"].get<int>();
        const int m = item["m"].get<int>();
        if (n < 0 || n > 2) throw SchemaError("entry n out of range in " + base_key_str({t, n, m}));
        const int max_m = base_is_projectivized(t) ? 1 : 0;
        if (m < 0 || m > max_m)
            throw SchemaError("entry m out of range in " + base_key_str({t, n, m}));
        if (!item["coeffs"].is_array()) throw SchemaError("'coeffs' must be an array");
        std::vector<std::string> coeffs;
        for (const auto& c : item["coeffs"]) {
            if (!c.is_string()) throw SchemaError("coefficients must be strings");
            coeffs.push_back(c.get<std::string>());
        }
        const Polynomial p = poly_from_strings(coeffs);
        if (!p.integer_coefficients())
            throw SchemaError("non-integer coefficient in " + base_key_str({t, n, m}));
        if (!item["source"].is_string()) throw SchemaError("'source' must be a string");
        if (!item["min_d"].is_number_integer() || item["min_d"].get<int>() < 0)
            throw SchemaError("'min_d' must be a non-negative integer");
        const BaseKey key{t, n, m};
        if (table.entries_.count(key))
            throw SchemaError("duplicate entry " + base_key_str(key));
        table.entries_[key] = {p, item["source"].get<std::string>(), item["min_d"].get<int>()};
    }

    std::string missing;
    for (const BaseKey& k : manifest())
        if (!table.entries_.count(k)) missing += (missing.empty() ? "" : ", ") + base_key_str(k);
    if (!missing.empty()) throw MissingKey("base table is missing: " + missing);

    for (int n = 0; n < 3; ++n) {
        const Polynomial& stored = table.entries_.at({BaseTarget::A1, n, 0}).coeffs;
        if (stored != a1_row(n))
            throw A1Mismatch("A1(n=" + std::to_string(n) + ") row is " + stored.str() +
                             ", required " + a1_row(n).str());
    }
    return table;
}

BaseTable BaseTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open base table file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::string BaseTable::to_json_text() const {
    ordered_json entries = ordered_json::array();
    for (const auto& [key, e] : entries_) {  // map order = (target, n, m)
        ordered_json item;
        item["target"] = base_target_name(key.target);
        item["n"] = key.n;
        item["m"] = key.m;
        item["coeffs"] = poly_to_strings(e.coeffs);
        item["source"] = e.source;
        item["min_d"] = e.min_d;
        entries.push_back(std::move(item));
    }
    ordered_json doc;
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

void BaseTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write base table file '" + path + "'");
    out << to_json_text();
}

Polynomial BaseTable::lookup(const BaseKey& k) const {
    if (k.n < 0 || k.m < 0)
        throw PreconditionError("negative index in " + base_key_str(k));
    if (!base_is_projectivized(k.target) && k.m != 0)
        throw PreconditionError(base_key_str(k) + ": target has no lambda grading");
    if (k.n >= 3) return Polynomial();
    if (k.m >= 2) {
        const Polynomial r1 = lookup({k.target, k.n + 1, k.m - 1});
        const Polynomial r2 = lookup({k.target, k.n + 2, k.m - 2});
        return poly_add(poly_scale(r1, Rat(-3)), poly_scale(r2, Rat(-3)));
    }
    return entries_.at(k).coeffs;
}

const BaseEntry& BaseTable::entry(const BaseKey& k) const {
    auto it = entries_.find(k);
    if (it == entries_.end())
        throw PreconditionError("no stored entry " + base_key_str(k));
    return it->second;
}

}  // namespace curvecount
