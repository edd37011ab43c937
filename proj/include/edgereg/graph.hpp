#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace edgereg {

using Rational = boost::rational<long long>;

// Finite simple graph on vertex set {1,...,n}.  Edges are stored normalized
// (u < v), sorted, without duplicates; construction rejects loops and
// out-of-range endpoints.  Vertex counts are capped at 64 so that vertex
// subsets fit in one machine word.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    static Graph make(int n, std::vector<std::pair<int, int>> edges);

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int max_degree() const;
    bool is_connected() const;

    // One mask per vertex; bit i set in masks[v-1] means v is adjacent to i+1.
    std::vector<std::uint64_t> adjacency_masks() const;

    bool operator==(const Graph&) const = default;
};

struct GraphParseError : std::runtime_error {
    int line;
    GraphParseError(int line, const std::string& what);
};

// Text format: first line "n m", then m lines "u v".
Graph parse_graph(const std::string& text);

struct StableSetReport {
    int alpha = 0;
    int c = -1;                            // alpha - 1, dimension of the stable-set complex
    std::vector<int> witness;              // lexicographically least maximum stable set
    std::vector<int> maximal_set_sizes;    // sizes of all inclusion-maximal stable sets, ascending
};

StableSetReport alpha(const Graph& g);

// Size of a largest induced matching: a set of edges pairwise sharing no
// endpoint and joined by no edge of g.
int induced_matching_number(const Graph& g);

// Attaches one pendant vertex to every vertex: vertex i gains the leaf n+i.
Graph whisker(const Graph& g);

// No isolated vertices, |V| even, and every maximal stable set has size |V|/2.
bool is_very_well_covered(const Graph& g);

// Largest k >= 0 with k(k-1) <= n^2 - n - 2e.
long long hansen_bound(long long n, long long e);

// n - e/maxdeg as an exact rational.
Rational kwok_bound(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);      // n >= 3
Graph complete_graph(int n);

// Erdos-Renyi draw: for each pair u < v in lexicographic order one value of a
// mt19937_64 seeded with `seed` is consumed, and the edge is kept when the
// value is below floor(p * 2^64).
Graph random_graph(int n, const Rational& p, std::uint64_t seed);

// "path:5", "cycle:8", "complete:4", "random:6,0.5,17" (p decimal or "a/b";
// seed optional, default_seed used when omitted).
Graph family(const std::string& spec, std::uint64_t default_seed = 0);

// Display name used by the CLI: "P5", "C8", "K4", "G(6,1/2,17)", or "G" for
// graphs read from a file.
std::string family_label(const std::string& spec);

}  // namespace edgereg
