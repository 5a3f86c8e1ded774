#include "twistforge/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "twistforge/errors.hpp"

namespace twistforge {

namespace {

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw input_error(std::string("missing or non-integer field '") + key + "'");
    return j[key].get<int>();
}

std::string get_str(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw input_error(std::string("missing or non-string field '") + key + "'");
    return j[key].get<std::string>();
}

Rational entry_coeff(const json& e) {
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_integer()) return Rational(e.get<long>());
    throw input_error("coefficient must be a \"p/q\" string");
}

}  // namespace

RingPtr ring_from_json(const json& j) {
    std::optional<int> unit;
    if (j.contains("unit") && !j["unit"].is_null()) {
        if (!j["unit"].is_number_integer()) throw input_error("'unit' must be an index or null");
        unit = j["unit"].get<int>();
    }
    auto ring = std::make_shared<RingSpec>(get_str(j, "name"), get_int(j, "dim"), unit);
    if (!j.contains("product") || !j["product"].is_array())
        throw input_error("missing 'product' array");
    for (const auto& row : j["product"]) {
        if (!row.is_array() || row.size() != 4)
            throw input_error("product entry must be [rho, sigma, alpha, coeff]");
        ring->add_product_term(row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                               entry_coeff(row[3]));
    }
    return ring;
}

json ring_to_json(const RingSpec& spec) {
    json j;
    j["name"] = spec.name();
    j["dim"] = spec.dim();
    if (spec.has_unit())
        j["unit"] = spec.unit_index();
    else
        j["unit"] = nullptr;
    json rows = json::array();
    for (int r = 0; r < spec.dim(); ++r)
        for (int s = 0; s < spec.dim(); ++s)
            for (const auto& [a, c] : spec.product(r, s))
                rows.push_back(json::array({r, s, a, rational_str(c)}));
    j["product"] = rows;
    return j;
}

LieRingSpec lie_ring_from_json(const json& j) {
    LieRingSpec spec(get_str(j, "name"), get_int(j, "dim"));
    if (!j.contains("B") || !j["B"].is_array()) throw input_error("missing 'B' array");
    for (const auto& row : j["B"]) {
        if (!row.is_array() || row.size() != 4)
            throw input_error("B entry must be [mu, nu, sigma, coeff]");
        spec.add_term(row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                      entry_coeff(row[3]));
    }
    return spec;
}

json lie_ring_to_json(const LieRingSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["dim"] = spec.dim;
    json rows = json::array();
    for (int mu = 0; mu < spec.dim; ++mu)
        for (int nu = 0; nu < spec.dim; ++nu)
            for (const auto& [s, c] : spec.product(mu, nu))
                rows.push_back(json::array({mu, nu, s, rational_str(c)}));
    j["B"] = rows;
    return j;
}

TensorElement tensor_from_json(const json& j, RingPtr ring) {
    TensorElement t(ring, get_int(j, "degree"));
    if (!j.contains("entries") || !j["entries"].is_array())
        throw input_error("missing 'entries' array");
    for (const auto& e : j["entries"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_array())
            throw input_error("tensor entry must be [[i1,...,in], coeff]");
        std::vector<int> idx;
        for (const auto& i : e[0]) idx.push_back(i.get<int>());
        if (static_cast<int>(idx.size()) != t.degree())
            throw input_error("multi-index length does not match the degree");
        t.set_coeff(idx, t.coeff(idx) + entry_coeff(e[1]));
    }
    return t;
}

json tensor_to_json(const TensorElement& t) {
    json j;
    j["degree"] = t.degree();
    json entries = json::array();
    t.for_each_nonzero([&](size_t flat, const Rational& c) {
        entries.push_back(json::array({t.decode(flat), rational_str(c)}));
    });
    j["entries"] = entries;
    return j;
}

namespace {

json component_entries(const TensorElement& t) {
    json entries = json::array();
    t.for_each_nonzero([&](size_t flat, const Rational& c) {
        entries.push_back(json::array({t.decode(flat), rational_str(c)}));
    });
    return entries;
}

TensorElement component_from_entries(const json& entries, RingPtr ring, int degree) {
    TensorElement t(std::move(ring), degree);
    for (const auto& e : entries) {
        std::vector<int> idx;
        for (const auto& i : e[0]) idx.push_back(i.get<int>());
        t.set_coeff(idx, t.coeff(idx) + entry_coeff(e[1]));
    }
    return t;
}

}  // namespace

GradedElement graded_from_json(const json& j, RingPtr ring) {
    GradedElement g(ring, get_int(j, "cutoff"));
    if (j.contains("components"))
        for (const auto& [key, entries] : j["components"].items()) {
            int n = std::stoi(key);
            g.set_component(component_from_entries(entries, ring, n));
        }
    return g;
}

json graded_to_json(const GradedElement& g) {
    json j;
    j["cutoff"] = g.cutoff();
    json comps = json::object();
    for (const auto& [n, t] : g.components()) comps[std::to_string(n)] = component_entries(t);
    j["components"] = comps;
    return j;
}

GradedTwist twist_from_json(const json& j, RingPtr ring) {
    GradedTwist t(ring, get_int(j, "cutoff"));
    if (j.contains("components"))
        for (const auto& [key, entries] : j["components"].items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos) throw input_error("twist key must be \"m,k\"");
            int m = std::stoi(key.substr(0, comma));
            int k = std::stoi(key.substr(comma + 1));
            t.set_component(m, k, component_from_entries(entries, ring, m + k));
        }
    return t;
}

json twist_to_json(const GradedTwist& t) {
    json j;
    j["cutoff"] = t.cutoff();
    json comps = json::object();
    for (const auto& [m, k] : t.bidegrees())
        comps[std::to_string(m) + "," + std::to_string(k)] =
            component_entries(t.component(m, k));
    j["components"] = comps;
    return j;
}

std::vector<TensorElement> seeds_from_json(const json& j, RingPtr ring) {
    if (!j.contains("seeds") || !j["seeds"].is_array())
        throw input_error("missing 'seeds' array");
    std::vector<TensorElement> seeds;
    for (const auto& s : j["seeds"]) seeds.push_back(tensor_from_json(s, ring));
    return seeds;
}

json relation_set_to_json(const RelationSet& rs) {
    json out = json::array();
    for (const auto& rel : rs.relations) {
        json terms = json::array();
        for (const auto& [w, c] : rel) {
            json t;
            t["word"] = w;
            t["coeff"] = rational_str(c);
            terms.push_back(t);
        }
        out.push_back(terms);
    }
    return out;
}

json report_to_json(const Report& rep) {
    json j;
    j["check"] = rep.check;
    j["params"] = rep.params;
    json grid = json::array();
    json failures = json::array();
    for (const auto& it : rep.items) {
        json item;
        item["grid"] = it.grid;
        item["pass"] = it.pass;
        if (!it.detail.empty()) item["detail"] = it.detail;
        grid.push_back(item);
        if (!it.pass) failures.push_back(item);
    }
    j["grid"] = grid;
    j["failures"] = failures;
    j["pass"] = rep.passed();
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

SpecKind detect_spec_kind(const json& j) {
    if (j.contains("product")) return SpecKind::ring;
    if (j.contains("B")) return SpecKind::lie_ring;
    throw input_error("spec file has neither 'product' (ring) nor 'B' (Lie ring)");
}

}  // namespace twistforge
