#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "edgereg/betti.hpp"
#include "edgereg/errors.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/harness.hpp"
#include "edgereg/ideal.hpp"
#include "edgereg/json_io.hpp"

using namespace edgereg;

namespace {

struct Options {
    std::string family_spec;
    std::string input_path;
    bool whiskered = false;
    bool squares = false;
    bool do_polarize = false;
    int power_s = 1;
    int smax = 0;  // 0: pick by vertex count
    std::string field = "q";
    std::string format = "text";
    int jobs = 1;
    std::size_t lattice_cap = 200000;
    std::uint64_t seed = 0;
    bool all_checks = false;
    std::vector<std::string> checks;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const Options& o) {
    if (o.family_spec.empty() == o.input_path.empty())
        throw std::invalid_argument("exactly one of --family and --input is required");
    Graph g = o.family_spec.empty() ? parse_graph(read_file(o.input_path))
                                    : family(o.family_spec, o.seed);
    return o.whiskered ? whisker(g) : g;
}

std::string graph_label(const Options& o) {
    std::string base = o.family_spec.empty() ? "G" : family_label(o.family_spec);
    return o.whiskered ? base + "*" : base;
}

std::string ideal_label(const Options& o) {
    std::string name = (o.squares ? "J(" : "I(") + graph_label(o) + ")";
    if (o.do_polarize) name += "^pol";
    if (o.power_s > 1) {
        if (o.do_polarize) name = "(" + name + ")";
        name += "^" + std::to_string(o.power_s);
    }
    return name;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldSpec parse_field(const std::string& f) {
    if (f == "q" || f == "Q") return FieldSpec::rationals();
    if (f.size() > 1 && (f[0] == 'p' || f[0] == 'P')) {
        long long p = 0;
        try {
            std::size_t used = 0;
            p = std::stoll(f.substr(1), &used);
            if (used != f.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("field: cannot read a prime from \"" + f + "\"");
        }
        if (p <= 10000) throw std::invalid_argument("field: the prime must exceed 10000");
        if (!is_prime(p)) throw std::invalid_argument("field: " + std::to_string(p) +
                                                      " is not prime");
        return FieldSpec::prime(p);
    }
    throw std::invalid_argument("field: use q or p<prime>, e.g. p1000003");
}

EngineOptions engine_options(const Options& o, const FieldSpec& field) {
    EngineOptions opt;
    opt.field = field;
    opt.jobs = o.jobs;
    opt.lattice_cap = o.lattice_cap;
    return opt;
}

MonomialIdeal build_ideal(const Graph& g, const Options& o) {
    auto i = edge_ideal(g);
    if (o.squares) i = add_squares(i);
    if (i.is_zero()) throw std::invalid_argument("the graph has no edges: the ideal is zero");
    if (o.do_polarize) i = polarize(i);
    if (o.power_s > 1) i = power(i, o.power_s);
    return i;
}

// With a finite field selected, compute over it and over the rationals and
// insist on identical tables; the rationals stay the field of record.
BettiTable checked_table(const MonomialIdeal& i, const Options& o, const FieldSpec& field) {
    auto table = betti_multigraded(i, engine_options(o, FieldSpec::rationals()));
    if (!field.is_rationals()) {
        auto modular = betti_multigraded(i, engine_options(o, field));
        if (!(modular == table))
            throw std::runtime_error("Betti table over " + field.label() +
                                     " disagrees with the rationals");
    }
    return table;
}

void emit(const Options& o, const std::string& text, const nlohmann::json& j) {
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_alpha(const Options& o) {
    auto g = load_graph(o);
    auto report = alpha(g);
    std::ostringstream out;
    out << "alpha = " << report.alpha << "\n"
        << "c = " << report.c << "\n"
        << "witness = {";
    for (std::size_t k = 0; k < report.witness.size(); ++k)
        out << (k ? ", " : "") << report.witness[k];
    out << "}\nmaximal stable set sizes = [";
    for (std::size_t k = 0; k < report.maximal_set_sizes.size(); ++k)
        out << (k ? ", " : "") << report.maximal_set_sizes[k];
    out << "]\n";
    emit(o, out.str(),
         {{"alpha", report.alpha},
          {"c", report.c},
          {"witness", report.witness},
          {"maximal_set_sizes", report.maximal_set_sizes}});
    return 0;
}

int cmd_nu(const Options& o) {
    auto g = load_graph(o);
    int nu = induced_matching_number(g);
    emit(o, "nu = " + std::to_string(nu) + "\n", {{"nu", nu}});
    return 0;
}

int cmd_whisker(const Options& o) {
    auto g = whisker(load_graph(o));
    std::ostringstream out;  // same document format parse_graph reads
    out << g.n << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
    emit(o, out.str(), graph_to_json(g));
    return 0;
}

int cmd_bounds(const Options& o) {
    auto g = load_graph(o);
    auto report = alpha(g);
    auto kwok = kwok_bound(g);
    long long hansen = hansen_bound(g.n, g.edge_count());
    std::ostringstream out;
    out << "alpha = " << report.alpha << "\n"
        << "c = " << report.c << "\n"
        << "hansen = " << hansen << "\n"
        << "kwok = " << kwok.numerator();
    if (kwok.denominator() != 1) out << "/" << kwok.denominator();
    out << "\n";
    emit(o, out.str(),
         {{"alpha", report.alpha},
          {"c", report.c},
          {"hansen", hansen},
          {"kwok", std::to_string(kwok.numerator()) + "/" + std::to_string(kwok.denominator())}});
    return 0;
}

int cmd_ideal(const Options& o) {
    auto i = build_ideal(load_graph(o), o);
    std::ostringstream out;
    out << "ring:";
    for (const auto& v : i.ring().vars) out << " " << v;
    out << "\n";
    for (const auto& g : i.gens()) out << monomial_string(i.ring(), g) << "\n";
    auto j = ideal_to_json(i);
    j["name"] = ideal_label(o);
    emit(o, out.str(), j);
    return 0;
}

int cmd_betti(const Options& o, const FieldSpec& field) {
    auto i = build_ideal(load_graph(o), o);
    auto table = checked_table(i, o, field);
    std::ostringstream out;
    out << "betti table of " << ideal_label(o) << " over " << field.label() << "\n"
        << table.diagram();
    out << "totals:";
    for (int k = 0; k <= table.projective_dimension(); ++k) out << " " << table.total(k);
    out << "\nregularity = " << table.regularity() << "\n"
        << "projective dimension = " << table.projective_dimension() << "\n";
    auto j = betti_to_json(table);
    j["name"] = ideal_label(o);
    j["field"] = field.label();
    emit(o, out.str(), j);
    return 0;
}

int cmd_reg(const Options& o, const FieldSpec& field) {
    auto i = build_ideal(load_graph(o), o);
    auto table = checked_table(i, o, field);
    int r = table.regularity();
    emit(o, "reg " + ideal_label(o) + " = " + std::to_string(r) + "\n",
         {{"name", ideal_label(o)}, {"regularity", r}, {"field", field.label()}});
    return 0;
}

void print_report_text(const TheoremReport& r, std::ostream& out) {
    out << r.graph_id << ": n=" << r.g.n << " e=" << r.g.edge_count() << " c=" << r.c
        << " nu=" << r.nu_g << " nu*=" << r.nu_gstar << " smax=" << r.smax << "\n";
    for (const auto& outcome : r.outcomes) {
        out << (outcome.pass ? "[PASS] " : "[FAIL] ") << outcome.name;
        if (outcome.s >= 0) out << " s=" << outcome.s;
        out << ": " << outcome.detail << "\n";
    }
    if (!r.resource_error.empty()) out << "[ERROR] " << r.resource_error << "\n";
}

int cmd_check(const Options& o, const FieldSpec& field) {
    if (!o.all_checks && o.checks.empty())
        throw std::invalid_argument("choose --all or --checks name[,name...]");
    auto g = load_graph(o);
    int smax = o.smax > 0 ? o.smax : default_smax(g.n);
    auto checks = o.all_checks ? std::vector<std::string>{} : o.checks;
    auto report = run_all(graph_label(o), g, smax, checks,
                          engine_options(o, FieldSpec::rationals()));
    if (!field.is_rationals()) {
        auto modular = run_all(graph_label(o), g, smax, checks, engine_options(o, field));
        if (report_to_json(modular) != report_to_json(report))
            throw std::runtime_error("verdicts over " + field.label() +
                                     " disagree with the rationals");
    }
    std::ostringstream out;
    print_report_text(report, out);
    int failed = 0;
    for (const auto& outcome : report.outcomes)
        if (!outcome.pass) ++failed;
    out << (failed ? "FAILED" : "ok") << ": " << report.outcomes.size() - failed << " passed, "
        << failed << " failed\n";
    emit(o, out.str(), report_to_json(report));
    if (!report.resource_error.empty()) return 3;
    return failed ? 1 : 0;
}

int cmd_sweep(const Options& o) {
    std::vector<CorpusEntry> corpus;
    if (!o.family_spec.empty() || !o.input_path.empty()) {
        auto g = load_graph(o);
        corpus.push_back({graph_label(o), g, o.smax > 0 ? o.smax : default_smax(g.n)});
    } else {
        corpus = standard_corpus();
        if (o.smax > 0)
            for (auto& entry : corpus) entry.smax = o.smax;
    }
    auto checks = o.all_checks ? std::vector<std::string>{} : o.checks;
    auto field = parse_field(o.field);
    auto sweep = run_corpus(corpus, checks, engine_options(o, FieldSpec::rationals()));
    if (!field.is_rationals()) {
        auto modular = run_corpus(corpus, checks, engine_options(o, field));
        if (sweep_to_json(modular) != sweep_to_json(sweep))
            throw std::runtime_error("verdicts over " + field.label() +
                                     " disagree with the rationals");
    }
    if (o.format == "csv") {
        std::cout << sweep_csv(sweep);
    } else if (o.format == "json") {
        std::cout << sweep_to_json(sweep).dump(2) << "\n";
    } else {
        for (const auto& r : sweep.reports) {
            std::cout << r.graph_id << " n=" << r.g.n << " e=" << r.g.edge_count()
                      << " smax=" << r.smax;
            std::vector<std::string> failing;
            for (const auto& outcome : r.outcomes)
                if (!outcome.pass)
                    failing.push_back(outcome.name + " s=" + std::to_string(outcome.s));
            if (!r.resource_error.empty())
                std::cout << " [ERROR " << r.resource_error << "]";
            else if (failing.empty())
                std::cout << " [ok]";
            else {
                std::cout << " [FAIL";
                for (const auto& f : failing) std::cout << " " << f;
                std::cout << "]";
            }
            std::cout << "\n";
        }
        std::cout << sweep.reports.size() << " graphs, " << sweep.failed_verdicts
                  << " failed verdicts, " << sweep.resource_errors << " resource errors\n";
    }
    if (sweep.failed_verdicts > 0) return 1;
    if (sweep.resource_errors > 0) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact regularity bounds for powers of edge ideals"};
    app.require_subcommand(1);
    Options o;

    auto add_graph_flags = [&](CLI::App* sub) {
        sub->add_option("--family", o.family_spec,
                        "graph family: path:N, cycle:N, complete:N, random:N,P[,SEED]");
        sub->add_option("--input", o.input_path, "edge-list file: first line \"n m\", then m "
                                                 "lines \"u v\"");
        sub->add_flag("--whiskered", o.whiskered, "whisker the graph after loading");
        sub->add_option("--seed", o.seed, "seed used when the random family omits one");
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_engine_flags = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "coefficient field: q or p<prime>, prime > 10000");
        sub->add_option("--jobs", o.jobs, "parallel homology jobs")->check(CLI::PositiveNumber);
        sub->add_option("--lattice-cap", o.lattice_cap, "abort above this many lattice elements");
    };
    auto add_ideal_flags = [&](CLI::App* sub) {
        sub->add_flag("--squares", o.squares, "add the variable squares to the edge ideal");
        sub->add_flag("--polarize", o.do_polarize, "polarize (after --squares)");
        sub->add_option("--power", o.power_s, "raise to this power (last)")
            ->check(CLI::PositiveNumber);
    };

    auto* alpha_cmd = app.add_subcommand("alpha", "maximum stable set and complex dimension");
    add_graph_flags(alpha_cmd);
    auto* nu_cmd = app.add_subcommand("nu", "induced matching number");
    add_graph_flags(nu_cmd);
    auto* whisker_cmd = app.add_subcommand("whisker", "print the whiskered graph");
    add_graph_flags(whisker_cmd);
    auto* bounds_cmd = app.add_subcommand("bounds", "independence bounds");
    add_graph_flags(bounds_cmd);
    auto* ideal_cmd = app.add_subcommand("ideal", "print the constructed monomial ideal");
    add_graph_flags(ideal_cmd);
    add_ideal_flags(ideal_cmd);
    auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti table");
    add_graph_flags(betti_cmd);
    add_ideal_flags(betti_cmd);
    add_engine_flags(betti_cmd);
    auto* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
    add_graph_flags(reg_cmd);
    add_ideal_flags(reg_cmd);
    add_engine_flags(reg_cmd);
    auto* check_cmd = app.add_subcommand("check", "theorem checks on one graph");
    add_graph_flags(check_cmd);
    add_engine_flags(check_cmd);
    check_cmd->add_option("--smax", o.smax, "largest power to check")->check(CLI::PositiveNumber);
    check_cmd->add_flag("--all", o.all_checks, "run every check");
    check_cmd->add_option("--checks", o.checks, "comma-separated check names")->delimiter(',');
    auto* sweep_cmd = app.add_subcommand("sweep", "theorem checks over a corpus");
    add_graph_flags(sweep_cmd);
    add_engine_flags(sweep_cmd);
    sweep_cmd->add_option("--smax", o.smax, "override the per-size power schedule")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--all", o.all_checks, "run every check (default)");
    sweep_cmd->add_option("--checks", o.checks, "comma-separated check names")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (o.format == "csv" && !*sweep_cmd)
            throw std::invalid_argument("csv output is only available for sweep");
        if (*alpha_cmd) return cmd_alpha(o);
        if (*nu_cmd) return cmd_nu(o);
        if (*whisker_cmd) return cmd_whisker(o);
        if (*bounds_cmd) return cmd_bounds(o);
        if (*ideal_cmd) return cmd_ideal(o);
        if (*betti_cmd) return cmd_betti(o, parse_field(o.field));
        if (*reg_cmd) return cmd_reg(o, parse_field(o.field));
        if (*check_cmd) return cmd_check(o, parse_field(o.field));
        if (*sweep_cmd) return cmd_sweep(o);
        return 2;
    } catch (const GraphParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
