#pragma once

#include "json.hpp"

#include "edgereg/betti.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/harness.hpp"
#include "edgereg/ideal.hpp"

namespace edgereg {

// Schemas:
//   graph:  {"n": int, "edges": [[u,v], ...]}
//   ideal:  {"ring": [name, ...], "gens": [[exp, ...], ...]}
//   betti:  {"ring": [...], "entries": [{"i", "a", "dim"}, ...],
//            "graded": [{"i", "j", "dim"}, ...], "regularity", "projdim"}
//   report: {"graph_id", "graph", "n", "e", "smax", "c", "nu_G", "nu_Gstar",
//            "hansen", "kwok", "reg": {"I"|"J"|"Jpol"|"Istar": {s: value}},
//            "checks": [{"name", "s", "pass", "detail"}, ...],
//            "all_pass", "resource_error"}
//   sweep:  {"reports": [...], "failed_verdicts", "resource_errors"}
// graph, ideal and betti parse back; malformed input raises
// std::invalid_argument naming the offending field.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json ideal_to_json(const MonomialIdeal& i);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json betti_to_json(const BettiTable& table);
BettiTable betti_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const TheoremReport& r);
nlohmann::json sweep_to_json(const SweepResult& sweep);

}  // namespace edgereg
