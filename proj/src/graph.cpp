#include "edgereg/graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace edgereg {

namespace {

constexpr int kMaxVertices = 64;

std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

}  // namespace

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (n > kMaxVertices) throw std::invalid_argument("graph: more than 64 vertices not supported");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

int Graph::max_degree() const {
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : edges) {
        adj[a - 1] |= bit(b);
        adj[b - 1] |= bit(a);
    }
    return adj;
}

bool Graph::is_connected() const {
    if (n <= 1) return true;
    auto adj = adjacency_masks();
    std::uint64_t seen = bit(1);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 1; v <= n; ++v)
            if (frontier & bit(v)) next |= adj[v - 1];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n;
}

GraphParseError::GraphParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string row;
    int lineno = 0;

    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, row)) {
            ++lineno;
            if (row.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        ++lineno;
        if (required) throw GraphParseError(lineno, "unexpected end of input");
        return false;
    };

    auto parse_two = [&](const std::string& what) -> std::pair<long long, long long> {
        std::istringstream fields(row);
        long long a = 0, b = 0;
        std::string extra;
        if (!(fields >> a >> b)) throw GraphParseError(lineno, "expected two integers (" + what + ")");
        if (fields >> extra) throw GraphParseError(lineno, "trailing tokens after " + what);
        return {a, b};
    };

    next_line(true);
    auto [n, m] = parse_two("vertex and edge counts");
    if (n < 0 || n > kMaxVertices)
        throw GraphParseError(lineno, "vertex count out of range [0, 64]");
    if (m < 0) throw GraphParseError(lineno, "negative edge count");

    std::vector<std::pair<int, int>> edges;
    for (long long k = 0; k < m; ++k) {
        next_line(true);
        auto [u, v] = parse_two("edge endpoints");
        if (u < 1 || u > n || v < 1 || v > n)
            throw GraphParseError(lineno, "edge endpoint out of range");
        if (u == v) throw GraphParseError(lineno, "loop edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(false)) throw GraphParseError(lineno, "trailing content after edge list");
    return Graph::make(static_cast<int>(n), std::move(edges));
}

namespace {

// Exact maximum-independent-set search on adjacency masks.  Branches on a
// highest-degree vertex of the candidate set; the popcount bound prunes.
class MisSolver {
public:
    explicit MisSolver(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

    int max_size(std::uint64_t avail) {
        best_ = 0;
        search(avail, 0);
        return best_;
    }

    // True when avail contains an independent set of size >= target.
    bool reaches(std::uint64_t avail, int target) {
        if (target <= 0) return true;
        best_ = target - 1;
        search(avail, 0);
        return best_ >= target;
    }

private:
    void search(std::uint64_t avail, int current) {
        if (current + std::popcount(avail) <= best_) return;
        if (!avail) {
            best_ = current;
            return;
        }
        int pick = -1, pick_deg = -1;
        for (std::uint64_t rest = avail; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(adj_[v] & avail);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        if (pick_deg == 0) {  // avail is already independent
            best_ = std::max(best_, current + std::popcount(avail));
            return;
        }
        std::uint64_t vbit = std::uint64_t{1} << pick;
        search(avail & ~(adj_[pick] | vbit), current + 1);
        search(avail & ~vbit, current);
    }

    std::vector<std::uint64_t> adj_;
    int best_ = 0;
};

// Sizes of all inclusion-maximal independent sets: Bron-Kerbosch with pivot,
// run on the complement adjacency.
void maximal_stable_sizes(const std::vector<std::uint64_t>& adj, int n,
                          std::uint64_t r_count, std::uint64_t p, std::uint64_t x,
                          std::vector<int>& out) {
    if (!p && !x) {
        out.push_back(static_cast<int>(r_count));
        return;
    }
    std::vector<std::uint64_t> nonadj(static_cast<std::size_t>(n));
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (int v = 0; v < n; ++v) nonadj[v] = all & ~adj[v] & ~(std::uint64_t{1} << v);

    // Pivot from p|x maximizing |p & nonadj(pivot)|.
    int pivot = -1, pivot_cnt = -1;
    for (std::uint64_t rest = p | x; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int cnt = std::popcount(p & nonadj[v]);
        if (cnt > pivot_cnt) {
            pivot_cnt = cnt;
            pivot = v;
        }
    }
    std::uint64_t candidates = p & ~nonadj[pivot];
    while (candidates) {
        int v = std::countr_zero(candidates);
        std::uint64_t vbit = std::uint64_t{1} << v;
        candidates &= candidates - 1;
        maximal_stable_sizes(adj, n, r_count + 1, p & nonadj[v], x & nonadj[v], out);
        p &= ~vbit;
        x |= vbit;
    }
}

}  // namespace

StableSetReport alpha(const Graph& g) {
    StableSetReport report;
    if (g.n == 0) {
        report.maximal_set_sizes = {0};
        return report;
    }
    auto adj = g.adjacency_masks();
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    MisSolver solver(adj);
    report.alpha = solver.max_size(all);
    report.c = report.alpha - 1;

    // Lexicographically least maximum stable set, built greedily: vertex v
    // joins iff a maximum set extending the choice within {v+1,...,n} exists.
    std::uint64_t chosen_nbrs = 0;
    int have = 0;
    for (int v = 1; v <= g.n && have < report.alpha; ++v) {
        std::uint64_t vbit = bit(v);
        if (chosen_nbrs & vbit) continue;
        std::uint64_t later = all & ~((vbit << 1) - 1);  // vertices > v
        std::uint64_t rest = later & ~chosen_nbrs & ~adj[v - 1];
        if (solver.reaches(rest, report.alpha - have - 1)) {
            report.witness.push_back(v);
            ++have;
            chosen_nbrs |= adj[v - 1] | vbit;
        }
    }

    maximal_stable_sizes(adj, g.n, 0, all, 0, report.maximal_set_sizes);
    std::sort(report.maximal_set_sizes.begin(), report.maximal_set_sizes.end());
    return report;
}

int induced_matching_number(const Graph& g) {
    int m = g.edge_count();
    if (m == 0) return 0;
    if (m > kMaxVertices) throw std::invalid_argument("induced matching: more than 64 edges not supported");
    // Conflict graph on edges: two edges conflict when they share an endpoint
    // or some edge of g joins them.  Induced matchings = independent sets.
    std::vector<std::uint64_t> conflict(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            auto [u1, v1] = g.edges[a];
            auto [u2, v2] = g.edges[b];
            bool clash = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 ||
                         g.has_edge(u1, u2) || g.has_edge(u1, v2) ||
                         g.has_edge(v1, u2) || g.has_edge(v1, v2);
            if (clash) {
                conflict[a] |= std::uint64_t{1} << b;
                conflict[b] |= std::uint64_t{1} << a;
            }
        }
    }
    std::uint64_t all = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    return MisSolver(conflict).max_size(all);
}

Graph whisker(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("whisker: empty graph");
    if (2 * g.n > kMaxVertices)
        throw std::invalid_argument("whisker: result exceeds 64 vertices");
    auto edges = g.edges;
    for (int v = 1; v <= g.n; ++v) edges.emplace_back(v, g.n + v);
    return Graph::make(2 * g.n, std::move(edges));
}

bool is_very_well_covered(const Graph& g) {
    if (g.n % 2 != 0) return false;
    for (int v = 1; v <= g.n; ++v)
        if (g.degree(v) == 0) return false;
    auto report = alpha(g);
    for (int size : report.maximal_set_sizes)
        if (size != g.n / 2) return false;
    return true;
}

long long hansen_bound(long long n, long long e) {
    if (n < 0 || e < 0 || e > n * (n - 1) / 2)
        throw std::invalid_argument("hansen_bound: need 0 <= e <= n(n-1)/2");
    long long r = n * n - n - 2 * e;  // nonnegative under the precondition
    long long lo = 0, hi = n + 1;     // k(k-1) <= r forces k <= n
    while (lo < hi) {                 // largest k with k(k-1) <= r
        long long mid = (lo + hi + 1) / 2;
        if (static_cast<__int128>(mid) * (mid - 1) <= r)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Rational kwok_bound(const Graph& g) {
    int delta = g.max_degree();
    if (delta == 0) throw std::invalid_argument("kwok_bound: graph has no edges");
    return Rational(g.n) - Rational(g.edge_count(), delta);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::make(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(1, n);
    return Graph::make(n, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph::make(n, std::move(edges));
}

Graph random_graph(int n, const Rational& p, std::uint64_t seed) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("random: vertex count out of range");
    if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("random: probability outside [0, 1]");
    // threshold = floor(p * 2^64); p == 1 accepts everything.
    bool always = p == Rational(1);
    std::uint64_t threshold = 0;
    if (!always) {
        unsigned __int128 num = static_cast<unsigned __int128>(p.numerator()) << 64;
        threshold = static_cast<std::uint64_t>(num / static_cast<unsigned __int128>(p.denominator()));
    }
    std::mt19937_64 gen(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            std::uint64_t draw = gen();
            if (always || draw < threshold) edges.emplace_back(u, v);
        }
    return Graph::make(n, std::move(edges));
}

namespace {

long long parse_ll(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long long value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("family: bad " + what + " '" + text + "'");
    }
}

Rational parse_probability(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long num = parse_ll(text.substr(0, slash), "probability");
        long long den = parse_ll(text.substr(slash + 1), "probability");
        if (den <= 0) throw std::invalid_argument("family: probability denominator must be positive");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_ll(text, "probability"));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty()) throw std::invalid_argument("family: bad probability '" + text + "'");
    long long den = 1;
    for (std::size_t k = dot + 1; k < text.size(); ++k) {
        if (den > 1000000000000000LL)
            throw std::invalid_argument("family: probability has too many digits");
        den *= 10;
    }
    return Rational(parse_ll(digits, "probability"), den);
}

struct FamilySpec {
    std::string name;
    std::vector<std::string> params;
};

FamilySpec split_family(const std::string& spec) {
    auto colon = spec.find(':');
    FamilySpec out;
    out.name = spec.substr(0, colon);
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t start = 0;
        while (true) {
            auto comma = rest.find(',', start);
            out.params.push_back(rest.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

int parse_count(const std::string& text) {
    long long value = parse_ll(text, "vertex count");
    if (value < 0 || value > kMaxVertices)
        throw std::invalid_argument("family: vertex count out of range [0, 64]");
    return static_cast<int>(value);
}

}  // namespace

Graph family(const std::string& spec, std::uint64_t default_seed) {
    auto [name, params] = split_family(spec);
    if (name == "path" || name == "cycle" || name == "complete") {
        if (params.size() != 1)
            throw std::invalid_argument("family: " + name + " takes one parameter");
        int n = parse_count(params[0]);
        if (name == "path") return path_graph(n);
        if (name == "cycle") return cycle_graph(n);
        return complete_graph(n);
    }
    if (name == "random") {
        if (params.size() != 2 && params.size() != 3)
            throw std::invalid_argument("family: random takes n,p[,seed]");
        int n = parse_count(params[0]);
        Rational p = parse_probability(params[1]);
        std::uint64_t seed = default_seed;
        if (params.size() == 3) {
            try {
                seed = std::stoull(params[2]);
            } catch (const std::exception&) {
                throw std::invalid_argument("family: bad seed '" + params[2] + "'");
            }
        }
        return random_graph(n, p, seed);
    }
    throw std::invalid_argument("family: unknown family '" + name + "'");
}

std::string family_label(const std::string& spec) {
    auto [name, params] = split_family(spec);
    auto arg = [&](std::size_t k) { return k < params.size() ? params[k] : std::string("?"); };
    if (name == "path") return "P" + arg(0);
    if (name == "cycle") return "C" + arg(0);
    if (name == "complete") return "K" + arg(0);
    if (name == "random") {
        std::string label = "G(" + arg(0) + "," + arg(1);
        if (params.size() == 3) label += "," + arg(2);
        return label + ")";
    }
    return "G";
}

}  // namespace edgereg
