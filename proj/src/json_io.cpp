#include "edgereg/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgereg {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("json: missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("json: field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> int_vector(const json& v, const char* what) {
    if (!v.is_array())
        throw std::invalid_argument(std::string("json: ") + what + " must be an array");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer())
            throw std::invalid_argument(std::string("json: ") + what +
                                        " must contain only integers");
        out.push_back(e.get<int>());
    }
    return out;
}

json reg_map_to_json(const std::map<int, int>& m) {
    json out = json::object();
    for (const auto& [s, value] : m) out[std::to_string(s)] = value;
    return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"n", g.n}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    int n = int_field(j, "n");
    const json& edges = field(j, "edges");
    if (!edges.is_array()) throw std::invalid_argument("json: \"edges\" must be an array");
    std::vector<std::pair<int, int>> parsed;
    for (const auto& e : edges) {
        auto pair = int_vector(e, "edge");
        if (pair.size() != 2)
            throw std::invalid_argument("json: each edge must have exactly two endpoints");
        parsed.push_back({pair[0], pair[1]});
    }
    return Graph::make(n, std::move(parsed));
}

json ideal_to_json(const MonomialIdeal& i) {
    json gens = json::array();
    for (const auto& g : i.gens()) gens.push_back(g);
    return json{{"ring", i.ring().vars}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const json& j) {
    const json& ring = field(j, "ring");
    if (!ring.is_array()) throw std::invalid_argument("json: \"ring\" must be an array");
    Ring r;
    for (const auto& name : ring) {
        if (!name.is_string())
            throw std::invalid_argument("json: ring variable names must be strings");
        r.vars.push_back(name.get<std::string>());
    }
    const json& gens = field(j, "gens");
    if (!gens.is_array()) throw std::invalid_argument("json: \"gens\" must be an array");
    std::vector<Multidegree> parsed;
    for (const auto& g : gens) parsed.push_back(int_vector(g, "generator"));
    return MonomialIdeal::make(std::move(r), std::move(parsed));
}

json betti_to_json(const BettiTable& table) {
    json entries = json::array();
    for (const auto& entry : table.entries)
        entries.push_back(json{{"i", entry.i}, {"a", entry.degree}, {"dim", entry.value}});
    json graded = json::array();
    for (const auto& [key, value] : table.graded())
        graded.push_back(json{{"i", key.first}, {"j", key.second}, {"dim", value}});
    return json{{"ring", table.ring.vars},
                {"entries", std::move(entries)},
                {"graded", std::move(graded)},
                {"regularity", table.entries.empty() ? json() : json(table.regularity())},
                {"projdim", table.projective_dimension()}};
}

BettiTable betti_from_json(const json& j) {
    BettiTable table;
    const json& ring = field(j, "ring");
    if (!ring.is_array()) throw std::invalid_argument("json: \"ring\" must be an array");
    for (const auto& name : ring) {
        if (!name.is_string())
            throw std::invalid_argument("json: ring variable names must be strings");
        table.ring.vars.push_back(name.get<std::string>());
    }
    const json& entries = field(j, "entries");
    if (!entries.is_array()) throw std::invalid_argument("json: \"entries\" must be an array");
    for (const auto& e : entries) {
        BettiEntry entry;
        entry.i = int_field(e, "i");
        entry.degree = int_vector(field(e, "a"), "multidegree");
        entry.value = int_field(e, "dim");
        if (entry.i < 0 || entry.value <= 0 ||
            entry.degree.size() != table.ring.vars.size())
            throw std::invalid_argument("json: malformed Betti entry");
        table.entries.push_back(std::move(entry));
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const BettiEntry& x, const BettiEntry& y) {
                  if (x.i != y.i) return x.i < y.i;
                  return x.degree < y.degree;
              });
    if (!table.entries.empty() && j.contains("regularity") && j.at("regularity").is_number() &&
        table.regularity() != int_field(j, "regularity"))
        throw std::invalid_argument("json: regularity does not match the entries");
    return table;
}

json report_to_json(const TheoremReport& r) {
    json checks = json::array();
    for (const auto& outcome : r.outcomes)
        checks.push_back(json{{"name", outcome.name},
                              {"s", outcome.s},
                              {"pass", outcome.pass},
                              {"detail", outcome.detail}});
    json out{{"graph_id", r.graph_id},
             {"graph", graph_to_json(r.g)},
             {"n", r.g.n},
             {"e", r.g.edge_count()},
             {"smax", r.smax},
             {"c", r.c},
             {"nu_G", r.nu_g},
             {"nu_Gstar", r.nu_gstar},
             {"hansen", r.hansen},
             {"reg",
              json{{"I", reg_map_to_json(r.reg_i)},
                   {"J", reg_map_to_json(r.reg_j)},
                   {"Jpol", reg_map_to_json(r.reg_jpol)},
                   {"Istar", reg_map_to_json(r.reg_istar)}}},
             {"checks", std::move(checks)},
             {"all_pass", r.all_pass},
             {"resource_error",
              r.resource_error.empty() ? json() : json(r.resource_error)}};
    if (r.has_kwok)
        out["kwok"] = std::to_string(r.kwok.numerator()) + "/" +
                      std::to_string(r.kwok.denominator());
    else
        out["kwok"] = json();
    return out;
}

json sweep_to_json(const SweepResult& sweep) {
    json reports = json::array();
    for (const auto& r : sweep.reports) reports.push_back(report_to_json(r));
    return json{{"reports", std::move(reports)},
                {"failed_verdicts", sweep.failed_verdicts},
                {"resource_errors", sweep.resource_errors}};
}

}  // namespace edgereg
