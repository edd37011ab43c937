#include "edgereg/harness.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "edgereg/errors.hpp"

namespace edgereg {

namespace {

std::string graph_repr(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.n << " edges=[";
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        if (k) out << ",";
        out << g.edges[k].first << "-" << g.edges[k].second;
    }
    out << "]";
    return out.str();
}

ResourceLimitError with_context(const ResourceLimitError& e, const std::string& what, int s) {
    return ResourceLimitError(std::string(e.what()) + " [" + what + ", s=" + std::to_string(s) +
                              "]");
}

}  // namespace

void TheoremReport::record(std::string name, int s, bool pass, std::string detail) {
    if (!pass) all_pass = false;
    outcomes.push_back({std::move(name), s, pass, std::move(detail)});
}

GraphStudy::GraphStudy(Graph g, EngineOptions opt) : g_(std::move(g)), opt_(opt) {
    if (g_.n < 1) throw std::invalid_argument("harness: graph has no vertices");
}

const StableSetReport& GraphStudy::stable() {
    if (!stable_) stable_ = std::make_unique<StableSetReport>(alpha(g_));
    return *stable_;
}

int GraphStudy::c() { return stable().c; }

int GraphStudy::nu() {
    if (nu_ < 0) nu_ = induced_matching_number(g_);
    return nu_;
}

const Graph& GraphStudy::star() {
    if (!star_) star_ = std::make_unique<Graph>(whisker(g_));
    return *star_;
}

int GraphStudy::nu_star() {
    if (nu_star_ < 0) nu_star_ = induced_matching_number(star());
    return nu_star_;
}

int GraphStudy::alpha_star() {
    if (alpha_star_ < 0) alpha_star_ = alpha(star()).alpha;
    return alpha_star_;
}

const MonomialIdeal& GraphStudy::ideal() {
    if (!ideal_) ideal_ = std::make_unique<MonomialIdeal>(edge_ideal(g_));
    return *ideal_;
}

const MonomialIdeal& GraphStudy::j_ideal() {
    if (!j_ideal_) j_ideal_ = std::make_unique<MonomialIdeal>(add_squares(ideal()));
    return *j_ideal_;
}

const MonomialIdeal& GraphStudy::star_ideal() {
    if (!star_ideal_) star_ideal_ = std::make_unique<MonomialIdeal>(edge_ideal(star()));
    return *star_ideal_;
}

const MonomialIdeal& GraphStudy::ipow(int s) {
    auto it = ipow_.find(s);
    if (it == ipow_.end()) it = ipow_.emplace(s, power(ideal(), s)).first;
    return it->second;
}

const MonomialIdeal& GraphStudy::jpow(int s) {
    auto it = jpow_.find(s);
    if (it == jpow_.end()) it = jpow_.emplace(s, power(j_ideal(), s)).first;
    return it->second;
}

const MonomialIdeal& GraphStudy::star_pow(int s) {
    auto it = star_pow_.find(s);
    if (it == star_pow_.end()) it = star_pow_.emplace(s, power(star_ideal(), s)).first;
    return it->second;
}

int GraphStudy::reg_i(int s) {
    auto it = reg_i_.find(s);
    if (it != reg_i_.end()) return it->second;
    try {
        return reg_i_[s] = betti_multigraded(ipow(s), opt_).regularity();
    } catch (const ResourceLimitError& e) {
        throw with_context(e, "edge ideal power", s);
    }
}

int GraphStudy::reg_j(int s) {
    auto it = reg_j_.find(s);
    if (it != reg_j_.end()) return it->second;
    try {
        return reg_j_[s] = betti_multigraded(jpow(s), opt_).regularity();
    } catch (const ResourceLimitError& e) {
        throw with_context(e, "squares-augmented power", s);
    }
}

int GraphStudy::reg_istar(int s) {
    auto it = reg_istar_.find(s);
    if (it != reg_istar_.end()) return it->second;
    try {
        return reg_istar_[s] = betti_multigraded(star_pow(s), opt_).regularity();
    } catch (const ResourceLimitError& e) {
        throw with_context(e, "whisker ideal power", s);
    }
}

int GraphStudy::reg_jpol(int s) {
    auto it = reg_jpol_.find(s);
    if (it != reg_jpol_.end()) return it->second;
    if (!jpol_) jpol_ = std::make_unique<MonomialIdeal>(polarize(j_ideal()));
    // the polarized squares ideal is the whisker ideal up to variable names,
    // so its powers share one Betti computation
    if (power(*jpol_, s).gens() != star_pow(s).gens())
        throw std::logic_error("harness: polarized power does not match the whisker power");
    return reg_jpol_[s] = reg_istar(s);
}

namespace {

void fill_basics(GraphStudy& st, TheoremReport& r) {
    const Graph& g = st.graph();
    r.g = g;
    r.c = st.c();
    r.nu_g = st.nu();
    r.nu_gstar = st.nu_star();
    r.hansen = hansen_bound(g.n, g.edge_count());
    if (g.edge_count() > 0) {
        r.has_kwok = true;
        r.kwok = kwok_bound(g);
    }
}

void require_edges(const GraphStudy& st, const char* check) {
    if (st.graph().edge_count() == 0)
        throw std::invalid_argument(std::string(check) + ": graph has no edges");
}

using CheckFn = std::function<void(GraphStudy&, TheoremReport&, int)>;

void apply_main(GraphStudy& st, TheoremReport& r, int smax) {
    require_edges(st, "main");
    for (int s = 1; s <= smax; ++s) {
        int reg = st.reg_i(s), bound = 2 * s + st.c();
        std::ostringstream d;
        d << "reg I^" << s << " = " << reg << (reg <= bound ? " <= " : " > ") << bound
          << " = 2s + c";
        if (reg > bound) d << " on " << graph_repr(st.graph());
        r.record("main", s, reg <= bound, d.str());
    }
}

void apply_hansen(GraphStudy& st, TheoremReport& r, int smax) {
    require_edges(st, "hansen");
    long long h = hansen_bound(st.graph().n, st.graph().edge_count());
    {
        std::ostringstream d;
        d << "c = " << st.c() << " <= " << h - 1 << " = hansen - 1";
        r.record("hansen:chain", -1, st.c() <= h - 1, d.str());
    }
    for (int s = 1; s <= smax; ++s) {
        int reg = st.reg_i(s);
        long long bound = 2 * s + h - 1;
        std::ostringstream d;
        d << "reg I^" << s << " = " << reg << (reg <= bound ? " <= " : " > ") << bound
          << " = 2s + hansen - 1";
        r.record("hansen", s, reg <= bound, d.str());
    }
}

void apply_equal(GraphStudy& st, TheoremReport& r, int smax) {
    require_edges(st, "equal");
    for (int s = 1; s <= smax; ++s) {
        int ri = st.reg_i(s), rj = st.reg_j(s), rp = st.reg_jpol(s);
        {
            std::ostringstream d;
            d << "reg I^" << s << " = " << ri << (ri <= rj ? " <= " : " > ") << rj << " = reg J^"
              << s;
            r.record("equal:le", s, ri <= rj, d.str());
        }
        {
            std::ostringstream d;
            d << "reg J^" << s << " = " << rj << (rj == rp ? " = " : " != ") << rp
              << " = reg (J_pol)^" << s;
            r.record("equal:pol", s, rj == rp, d.str());
        }
        {
            int bound = 2 * s + st.c();
            std::ostringstream d;
            d << "reg J^" << s << " = " << rj << (rj == bound ? " = " : " != ") << bound
              << " = 2s + c";
            r.record("equal:const", s, rj == bound, d.str());
        }
    }
}

void apply_whisker_js(GraphStudy& st, TheoremReport& r, int smax) {
    {
        std::ostringstream d;
        d << "nu(G*) = " << st.nu_star() << (st.nu_star() == st.c() + 1 ? " = " : " != ")
          << st.c() + 1 << " = c + 1";
        r.record("whisker_js:nu", -1, st.nu_star() == st.c() + 1, d.str());
    }
    {
        int dim_star = st.alpha_star() - 1;
        std::ostringstream d;
        d << "dim of the whisker stable complex = " << dim_star
          << (dim_star == st.graph().n - 1 ? " = " : " != ") << st.graph().n - 1 << " = n - 1";
        r.record("whisker_js:dim_star", -1, dim_star == st.graph().n - 1, d.str());
    }
    for (int s = 1; s <= smax; ++s) {
        int reg = st.reg_istar(s), expect = 2 * s + st.nu_star() - 1;
        std::ostringstream d;
        d << "reg I(G*)^" << s << " = " << reg << (reg == expect ? " = " : " != ") << expect
          << " = 2s + nu(G*) - 1";
        if (reg != expect) d << " on " << graph_repr(st.graph());
        r.record("whisker_js", s, reg == expect, d.str());
    }
}

void apply_bht_lower(GraphStudy& st, TheoremReport& r, int smax) {
    require_edges(st, "bht_lower");
    for (int s = 1; s <= smax; ++s) {
        int reg = st.reg_i(s), bound = 2 * s + st.nu() - 1;
        std::ostringstream d;
        d << "2s + nu - 1 = " << bound << (bound <= reg ? " <= " : " > ") << reg << " = reg I^"
          << s;
        r.record("bht_lower", s, bound <= reg, d.str());
    }
}

void apply_restriction(GraphStudy& st, TheoremReport& r, int smax) {
    require_edges(st, "restriction");
    int n = st.graph().n;
    for (int s = 1; s <= smax; ++s) {
        auto restricted = restrict_ideal(st.star_pow(s), RestrictionVector::free_then_zero(n, n));
        bool same = restricted == st.ipow(s);
        {
            std::ostringstream d;
            d << "restriction of I(G*)^" << s << " to the first " << n << " variables "
              << (same ? "equals" : "differs from") << " I^" << s << " (" << restricted.gen_count()
              << " vs " << st.ipow(s).gen_count() << " generators)";
            if (!same) d << " on " << graph_repr(st.graph());
            r.record("restriction:ideal", s, same, d.str());
        }
        {
            int ri = st.reg_i(s), rs = st.reg_istar(s);
            std::ostringstream d;
            d << "reg I^" << s << " = " << ri << (ri <= rs ? " <= " : " > ") << rs
              << " = reg I(G*)^" << s;
            r.record("restriction:reg", s, ri <= rs, d.str());
        }
    }
}

void apply_eh_monotone(GraphStudy& st, TheoremReport& r, int smax) {
    std::vector<int> b;
    for (int s = 1; s <= smax; ++s) b.push_back(st.reg_j(s) - 2 * s);
    bool monotone = true;
    for (int s = 2; s <= smax; ++s) {
        bool step = b[static_cast<std::size_t>(s - 1)] <= b[static_cast<std::size_t>(s - 2)];
        monotone = monotone && step;
        std::ostringstream d;
        d << "b_" << s << " = " << b[static_cast<std::size_t>(s - 1)] << (step ? " <= " : " > ")
          << b[static_cast<std::size_t>(s - 2)] << " = b_" << s - 1;
        r.record("eh_monotone", s, step, d.str());
    }
    std::ostringstream d;
    d << "reg J^s - 2s = [";
    for (int s = 1; s <= smax; ++s) d << (s > 1 ? "," : "") << b[static_cast<std::size_t>(s - 1)];
    d << "]";
    r.record("eh_monotone:seq", -1, monotone, d.str());
}

void apply_witness_socle(GraphStudy& st, TheoremReport& r, int smax) {
    const auto& ring = st.j_ideal().ring();
    int n = st.graph().n;
    {
        auto socles = socle_degrees(st.j_ideal());
        int top = *std::max_element(socles.begin(), socles.end());
        std::ostringstream d;
        d << "max socle degree of S/J = " << top << (top == st.c() + 1 ? " = " : " != ")
          << st.c() + 1 << " = c + 1";
        r.record("witness_socle:socle", -1, top == st.c() + 1, d.str());
    }
    {
        int rj = st.reg_j(1);
        std::ostringstream d;
        d << "reg J = " << rj << (rj == st.c() + 2 ? " = " : " != ") << st.c() + 2 << " = c + 2";
        r.record("witness_socle:regJ", -1, rj == st.c() + 2, d.str());
    }
    const auto& f = st.stable().witness;  // lexicographically least maximum stable set
    int v0 = f.front();
    for (int s = 1; s <= smax; ++s) {
        Multidegree w(static_cast<std::size_t>(n), 0);
        for (int v : f) w[static_cast<std::size_t>(v - 1)] = 1;
        w[static_cast<std::size_t>(v0 - 1)] += 2 * (s - 1);
        const auto& js = st.jpow(s);
        bool socle_like = true;
        for (int v = 1; v <= n; ++v) {
            Multidegree shifted = w;
            shifted[static_cast<std::size_t>(v - 1)] += 1;
            socle_like = socle_like && js.contains(shifted);
        }
        bool outside = !js.contains(w);
        bool degree_ok = total_degree(w) == st.c() + 1 + 2 * (s - 1);
        std::ostringstream d;
        d << "w = " << monomial_string(ring, w) << ": m*w " << (socle_like ? "in" : "NOT in")
          << " J^" << s << ", w " << (outside ? "not in" : "IN") << " J^" << s << ", deg "
          << total_degree(w);
        r.record("witness_socle", s, socle_like && outside && degree_ok, d.str());
    }
}

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
    static const std::vector<std::pair<std::string, CheckFn>> table{
        {"main", apply_main},
        {"hansen", apply_hansen},
        {"equal", apply_equal},
        {"whisker_js", apply_whisker_js},
        {"bht_lower", apply_bht_lower},
        {"restriction", apply_restriction},
        {"eh_monotone", apply_eh_monotone},
        {"witness_socle", apply_witness_socle},
    };
    return table;
}

TheoremReport run_one(const std::string& graph_id, const Graph& g, int smax,
                      const std::vector<std::string>& checks, const EngineOptions& opt,
                      bool capture_resource_errors) {
    if (smax < 1) throw std::invalid_argument("harness: smax must be at least 1");
    std::vector<std::string> selected = checks;
    if (selected.empty())
        for (const auto& [name, fn] : check_table()) selected.push_back(name);
    for (const auto& name : selected) {
        bool known = false;
        for (const auto& [known_name, fn] : check_table()) known = known || known_name == name;
        if (!known) throw std::invalid_argument("harness: unknown check \"" + name + "\"");
    }

    GraphStudy st(g, opt);
    TheoremReport r;
    r.graph_id = graph_id;
    r.smax = smax;
    fill_basics(st, r);
    for (const auto& name : selected) {
        for (const auto& [known_name, fn] : check_table()) {
            if (known_name != name) continue;
            if (capture_resource_errors) {
                try {
                    fn(st, r, smax);
                } catch (const ResourceLimitError& e) {
                    r.resource_error = e.what();
                }
            } else {
                fn(st, r, smax);
            }
        }
        if (!r.resource_error.empty()) break;  // the cap would hit again
    }
    r.reg_i = st.reg_i_map();
    r.reg_j = st.reg_j_map();
    r.reg_jpol = st.reg_jpol_map();
    r.reg_istar = st.reg_istar_map();
    return r;
}

TheoremReport run_single_check(const char* name, const Graph& g, int smax,
                               const EngineOptions& opt) {
    return run_one(std::string("G"), g, smax, {name}, opt, false);
}

}  // namespace

TheoremReport check_main(const Graph& g, int smax, const EngineOptions& opt) {
    return run_single_check("main", g, smax, opt);
}
TheoremReport check_hansen(const Graph& g, int smax, const EngineOptions& opt) {
    return run_single_check("hansen", g, smax, opt);
}
TheoremReport check_equal(const Graph& g, int smax, const EngineOptions& opt) {
    return run_single_check("equal", g, smax, opt);
}
TheoremReport check_whisker_js(const Graph& g, int smax, const EngineOptions& opt) {
    return run_single_check("whisker_js", g, smax, opt);
}
TheoremReport check_bht_lower(const Graph& g, int smax, const EngineOptions& opt) {
    return run_single_check("bht_lower", g, smax, opt);
}
TheoremReport check_restriction(const Graph& g, int smax, const EngineOptions& opt) {
    return run_single_check("restriction", g, smax, opt);
}
TheoremReport check_eh_monotone(const Graph& g, int smax, const EngineOptions& opt) {
    return run_single_check("eh_monotone", g, smax, opt);
}
TheoremReport check_witness_socle(const Graph& g, int smax, const EngineOptions& opt) {
    return run_single_check("witness_socle", g, smax, opt);
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : check_table()) out.push_back(name);
        return out;
    }();
    return names;
}

TheoremReport run_all(const std::string& graph_id, const Graph& g, int smax,
                      const std::vector<std::string>& checks, const EngineOptions& opt) {
    return run_one(graph_id, g, smax, checks, opt, true);
}

std::vector<Graph> connected_graph_catalog(int n) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("catalog: vertex count must be between 1 and 5");
    int pairs = n * (n - 1) / 2;
    std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n),
                                             std::vector<int>(static_cast<std::size_t>(n), -1));
    int next = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pair_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = next;
            pair_index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = next;
            ++next;
        }

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto relabeled = [&](unsigned mask, const std::vector<int>& p) {
        unsigned out = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mask >> pair_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1u)
                    out |= 1u << pair_index[static_cast<std::size_t>(p[static_cast<std::size_t>(
                        i)])][static_cast<std::size_t>(p[static_cast<std::size_t>(j)])];
        return out;
    };
    auto connected = [&](unsigned mask) {
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mask >> pair_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1u) {
                    adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                    adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
                }
        std::uint64_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint64_t nextv = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1) nextv |= adj[static_cast<std::size_t>(v)];
            frontier = nextv & ~seen;
            seen |= frontier;
        }
        return seen == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    };

    std::vector<unsigned> reps;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        if (!connected(mask)) continue;
        bool least = true;
        for (const auto& p : perms)
            if (relabeled(mask, p) < mask) {
                least = false;
                break;
            }
        if (least) reps.push_back(mask);
    }
    std::sort(reps.begin(), reps.end(), [](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });

    std::vector<Graph> out;
    for (unsigned mask : reps) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mask >> pair_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1u)
                    edges.push_back({i + 1, j + 1});
        out.push_back(Graph::make(n, std::move(edges)));
    }
    return out;
}

int default_smax(int n) {
    if (n <= 4) return 3;
    if (n <= 6) return 2;
    return 1;
}

std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> out;
    for (int n = 2; n <= 5; ++n) {
        auto catalog = connected_graph_catalog(n);
        for (std::size_t k = 0; k < catalog.size(); ++k)
            out.push_back({"G" + std::to_string(n) + "." + std::to_string(k + 1), catalog[k],
                           default_smax(n)});
    }
    for (int n = 2; n <= 8; ++n)
        out.push_back({"P" + std::to_string(n), path_graph(n), default_smax(n)});
    for (int n = 3; n <= 8; ++n)
        out.push_back({"C" + std::to_string(n), cycle_graph(n), default_smax(n)});
    const std::uint64_t seed_base = 20260515;
    const char* probs[] = {"3/10", "1/2", "7/10"};
    for (int k = 0; k < 20; ++k) {
        int n = 2 + k % 5;
        std::uint64_t seed = seed_base + static_cast<std::uint64_t>(k);
        std::string spec;
        Graph g;
        for (;;) {  // checks need an edge; bump the seed until one appears
            spec = "random:" + std::to_string(n) + "," + probs[k % 3] + "," + std::to_string(seed);
            g = family(spec);
            if (g.edge_count() > 0) break;
            seed += 1000;
        }
        out.push_back({family_label(spec), g, default_smax(n)});
    }
    return out;
}

SweepResult run_corpus(const std::vector<CorpusEntry>& corpus,
                       const std::vector<std::string>& checks, const EngineOptions& opt) {
    SweepResult sweep;
    for (const auto& entry : corpus) {
        auto report = run_all(entry.id, entry.g, entry.smax, checks, opt);
        for (const auto& outcome : report.outcomes)
            if (!outcome.pass) ++sweep.failed_verdicts;
        if (!report.resource_error.empty()) ++sweep.resource_errors;
        sweep.reports.push_back(std::move(report));
    }
    return sweep;
}

namespace {

std::string csv_verdict(const TheoremReport& r, const std::string& check, int s) {
    bool found = false, ok = true;
    for (const auto& outcome : r.outcomes) {
        auto head = outcome.name.substr(0, outcome.name.find(':'));
        if (head != check) continue;
        if (outcome.s != s && outcome.s != -1) continue;
        found = true;
        ok = ok && outcome.pass;
    }
    if (!found) return r.resource_error.empty() ? "" : "error";
    return ok ? "pass" : "FAIL";
}

std::string csv_reg(const std::map<int, int>& m, int s) {
    auto it = m.find(s);
    return it == m.end() ? "" : std::to_string(it->second);
}

}  // namespace

std::string sweep_csv(const SweepResult& sweep) {
    std::ostringstream out;
    out << "graph_id,n,e,s,c,nu_G,nu_Gstar,reg_I,reg_J,reg_Jpol,reg_Istar,hansen,kwok_floor";
    for (const auto& name : all_check_names()) out << ",check_" << name;
    out << "\n";
    for (const auto& r : sweep.reports) {
        for (int s = 1; s <= r.smax; ++s) {
            out << r.graph_id << "," << r.g.n << "," << r.g.edge_count() << "," << s << "," << r.c
                << "," << r.nu_g << "," << r.nu_gstar << "," << csv_reg(r.reg_i, s) << ","
                << csv_reg(r.reg_j, s) << "," << csv_reg(r.reg_jpol, s) << ","
                << csv_reg(r.reg_istar, s) << "," << r.hansen << ",";
            if (r.has_kwok) out << r.kwok.numerator() / r.kwok.denominator();
            for (const auto& name : all_check_names()) out << "," << csv_verdict(r, name, s);
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace edgereg
