#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "edgereg/betti.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/ideal.hpp"

namespace edgereg {

// One verdict line. s is the power it concerns, or -1 for a per-graph fact.
struct CheckOutcome {
    std::string name;
    int s = -1;
    bool pass = false;
    std::string detail;
};

struct TheoremReport {
    std::string graph_id;
    Graph g;
    int smax = 1;
    int c = -1;
    int nu_g = 0;
    int nu_gstar = 0;
    long long hansen = 0;
    bool has_kwok = false;
    Rational kwok{0};
    std::map<int, int> reg_i;      // s -> reg of the edge ideal power
    std::map<int, int> reg_j;      // s -> reg of the squares-augmented power
    std::map<int, int> reg_jpol;   // s -> reg of the polarized-side power
    std::map<int, int> reg_istar;  // s -> reg of the whisker ideal power
    std::vector<CheckOutcome> outcomes;
    bool all_pass = true;
    std::string resource_error;  // non-empty when a cap stopped this instance

    void record(std::string name, int s, bool pass, std::string detail);
};

// Per-graph compute cache. Every derived object is built once on first use,
// so a run over several checks shares the expensive Betti tables.
class GraphStudy {
public:
    explicit GraphStudy(Graph g, EngineOptions opt = {});

    const Graph& graph() const { return g_; }
    const EngineOptions& options() const { return opt_; }
    const StableSetReport& stable();
    int c();
    int nu();
    const Graph& star();
    int nu_star();
    int alpha_star();

    const MonomialIdeal& ideal();       // edge ideal
    const MonomialIdeal& j_ideal();     // edge ideal plus variable squares
    const MonomialIdeal& star_ideal();  // edge ideal of the whisker graph
    const MonomialIdeal& ipow(int s);
    const MonomialIdeal& jpow(int s);
    const MonomialIdeal& star_pow(int s);

    int reg_i(int s);
    int reg_j(int s);
    int reg_istar(int s);
    // Power of the polarization of j_ideal. Generator-identical to
    // star_pow(s) (asserted), so the Betti work is shared with reg_istar.
    int reg_jpol(int s);

    const std::map<int, int>& reg_i_map() const { return reg_i_; }
    const std::map<int, int>& reg_j_map() const { return reg_j_; }
    const std::map<int, int>& reg_jpol_map() const { return reg_jpol_; }
    const std::map<int, int>& reg_istar_map() const { return reg_istar_; }

private:
    Graph g_;
    EngineOptions opt_;
    std::unique_ptr<StableSetReport> stable_;
    std::unique_ptr<Graph> star_;
    int nu_ = -1, nu_star_ = -1, alpha_star_ = -1;
    std::unique_ptr<MonomialIdeal> ideal_, j_ideal_, star_ideal_, jpol_;
    std::map<int, MonomialIdeal> ipow_, jpow_, star_pow_;
    std::map<int, int> reg_i_, reg_j_, reg_jpol_, reg_istar_;
};

// Theorem checks. Each asserts the statement for s = 1..smax and returns a
// report whose outcomes carry the computed values; failed outcomes carry the
// counterexample. Checks needing the edge ideal require at least one edge;
// whisker_js, eh_monotone and witness_socle accept any graph with n >= 1.
TheoremReport check_main(const Graph& g, int smax, const EngineOptions& opt = {});
TheoremReport check_hansen(const Graph& g, int smax, const EngineOptions& opt = {});
TheoremReport check_equal(const Graph& g, int smax, const EngineOptions& opt = {});
TheoremReport check_whisker_js(const Graph& g, int smax, const EngineOptions& opt = {});
TheoremReport check_bht_lower(const Graph& g, int smax, const EngineOptions& opt = {});
TheoremReport check_restriction(const Graph& g, int smax, const EngineOptions& opt = {});
TheoremReport check_eh_monotone(const Graph& g, int smax, const EngineOptions& opt = {});
TheoremReport check_witness_socle(const Graph& g, int smax, const EngineOptions& opt = {});

// All check names in canonical execution order.
const std::vector<std::string>& all_check_names();

// Runs the named checks (empty list: all of them) against one graph,
// sharing a single GraphStudy.
TheoremReport run_all(const std::string& graph_id, const Graph& g, int smax,
                      const std::vector<std::string>& checks = {},
                      const EngineOptions& opt = {});

struct CorpusEntry {
    std::string id;
    Graph g;
    int smax;
};

// Canonical representatives of the connected graphs on n labeled vertices,
// 1 <= n <= 5, ordered by edge count then adjacency code.
std::vector<Graph> connected_graph_catalog(int n);

// Default power range: 3 up to four vertices, 2 up to six, 1 beyond.
int default_smax(int n);

// The standard sweep corpus: connected graphs with 2..5 vertices, paths and
// cycles to 8, and 20 seeded random graphs on up to 6 vertices.
std::vector<CorpusEntry> standard_corpus();

struct SweepResult {
    std::vector<TheoremReport> reports;
    int failed_verdicts = 0;
    int resource_errors = 0;
};

// Runs checks over the corpus. Resource caps mark the report and the sweep
// continues; any other exception propagates.
SweepResult run_corpus(const std::vector<CorpusEntry>& corpus,
                       const std::vector<std::string>& checks = {},
                       const EngineOptions& opt = {});

std::string sweep_csv(const SweepResult& sweep);

}  // namespace edgereg
