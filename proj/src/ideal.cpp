#include "edgereg/ideal.hpp"

#include <algorithm>
#include <set>

#include "edgereg/errors.hpp"

namespace edgereg {

Ring Ring::x_vars(int n) {
    Ring r;
    r.vars.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) r.vars.push_back("x" + std::to_string(v));
    return r;
}

int total_degree(const Multidegree& a) {
    int sum = 0;
    for (int e : a) sum += e;
    return sum;
}

bool divides(const Multidegree& a, const Multidegree& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

Multidegree join(const Multidegree& a, const Multidegree& b) {
    Multidegree out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
    return out;
}

std::string monomial_string(const Ring& r, const Multidegree& a) {
    std::string out;
    for (int v = 0; v < r.size(); ++v) {
        if (a[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += r.vars[v];
        if (a[v] > 1) out += "^" + std::to_string(a[v]);
    }
    return out.empty() ? "1" : out;
}

RestrictionVector RestrictionVector::all_unbounded(int n) {
    return {std::vector<int>(static_cast<std::size_t>(n), unbounded)};
}

RestrictionVector RestrictionVector::free_then_zero(int n_free, int n_zero) {
    std::vector<int> caps(static_cast<std::size_t>(n_free), unbounded);
    caps.insert(caps.end(), static_cast<std::size_t>(n_zero), 0);
    return {std::move(caps)};
}

bool RestrictionVector::admits(const Multidegree& a) const {
    for (std::size_t k = 0; k < caps.size(); ++k)
        if (caps[k] != unbounded && a[k] > caps[k]) return false;
    return true;
}

namespace {

void validate_ring(const Ring& ring) {
    std::set<std::string> seen;
    for (const auto& name : ring.vars) {
        if (name.empty()) throw std::invalid_argument("ring: empty variable name");
        if (!seen.insert(name).second)
            throw std::invalid_argument("ring: duplicate variable name '" + name + "'");
    }
}

}  // namespace

MonomialIdeal MonomialIdeal::make(Ring ring, std::vector<Multidegree> gens) {
    validate_ring(ring);
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != ring.size())
            throw std::invalid_argument("ideal: generator length does not match ring");
        bool zero = true;
        for (int e : g) {
            if (e < 0) throw std::invalid_argument("ideal: negative exponent");
            if (e > 0) zero = false;
        }
        if (zero) throw std::invalid_argument("ideal: unit ideal not supported");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // Keep the divisibility-minimal generators.
    std::vector<Multidegree> minimal;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != k && divides(gens[j], gens[k])) redundant = true;
        if (!redundant) minimal.push_back(gens[k]);
    }

    MonomialIdeal out;
    out.ring_ = std::move(ring);
    out.gens_ = std::move(minimal);
    return out;
}

bool MonomialIdeal::contains(const Multidegree& m) const {
    if (static_cast<int>(m.size()) != ring_.size())
        throw std::invalid_argument("contains: monomial length does not match ring");
    for (const auto& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Multidegree> gens;
    for (const auto& [u, v] : g.edges) {
        Multidegree m(static_cast<std::size_t>(g.n), 0);
        m[u - 1] = 1;
        m[v - 1] = 1;
        gens.push_back(std::move(m));
    }
    return MonomialIdeal::make(Ring::x_vars(g.n), std::move(gens));
}

MonomialIdeal add_squares(const MonomialIdeal& i) {
    auto gens = i.gens();
    for (int v = 0; v < i.ring().size(); ++v) {
        Multidegree m(static_cast<std::size_t>(i.ring().size()), 0);
        m[v] = 2;
        gens.push_back(std::move(m));
    }
    return MonomialIdeal::make(i.ring(), std::move(gens));
}

namespace {

void accumulate_products(const std::vector<Multidegree>& gens, std::size_t start, int remaining,
                         Multidegree& acc, std::vector<Multidegree>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t k = start; k < gens.size(); ++k) {
        for (std::size_t v = 0; v < acc.size(); ++v) acc[v] += gens[k][v];
        accumulate_products(gens, k, remaining - 1, acc, out);
        for (std::size_t v = 0; v < acc.size(); ++v) acc[v] -= gens[k][v];
    }
}

}  // namespace

MonomialIdeal power(const MonomialIdeal& i, int s) {
    if (s < 1) throw std::invalid_argument("power: need s >= 1");
    if (i.is_zero()) return i;
    std::vector<Multidegree> products;
    Multidegree acc(static_cast<std::size_t>(i.ring().size()), 0);
    accumulate_products(i.gens(), 0, s, acc, products);
    return MonomialIdeal::make(i.ring(), std::move(products));
}

MonomialIdeal polarize(const MonomialIdeal& i) {
    int n = i.ring().size();
    std::vector<int> copies(static_cast<std::size_t>(n), 0);
    for (const auto& g : i.gens())
        for (int v = 0; v < n; ++v) copies[v] = std::max(copies[v], g[v]);
    int max_copies = 0;
    for (int c : copies) max_copies = std::max(max_copies, c);

    Ring out_ring = i.ring();
    std::vector<std::vector<int>> column(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) column[v].push_back(v);
    for (int j = 2; j <= max_copies; ++j)
        for (int v = 0; v < n; ++v)
            if (copies[v] >= j) {
                column[v].push_back(out_ring.size());
                out_ring.vars.push_back(i.ring().vars[v] + std::string(static_cast<std::size_t>(j - 1), '\''));
            }

    std::vector<Multidegree> gens;
    for (const auto& g : i.gens()) {
        Multidegree m(static_cast<std::size_t>(out_ring.size()), 0);
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < g[v]; ++j) m[column[v][j]] = 1;
        gens.push_back(std::move(m));
    }
    return MonomialIdeal::make(std::move(out_ring), std::move(gens));
}

MonomialIdeal restrict_ideal(const MonomialIdeal& i, const RestrictionVector& caps) {
    if (static_cast<int>(caps.caps.size()) != i.ring().size())
        throw std::invalid_argument("restrict: cap vector length does not match ring");
    for (int cap : caps.caps)
        if (cap < RestrictionVector::unbounded)
            throw std::invalid_argument("restrict: caps must be nonnegative or unbounded");

    std::vector<int> keep;  // columns surviving into the result ring
    Ring out_ring;
    for (int v = 0; v < i.ring().size(); ++v)
        if (caps.caps[v] != 0) {
            keep.push_back(v);
            out_ring.vars.push_back(i.ring().vars[v]);
        }

    std::vector<Multidegree> gens;
    for (const auto& g : i.gens()) {
        if (!caps.admits(g)) continue;
        Multidegree m;
        m.reserve(keep.size());
        for (int v : keep) m.push_back(g[v]);
        gens.push_back(std::move(m));
    }
    return MonomialIdeal::make(std::move(out_ring), std::move(gens));
}

std::vector<Multidegree> standard_monomials(const MonomialIdeal& j) {
    int n = j.ring().size();
    std::vector<int> bound(static_cast<std::size_t>(n), 0);  // minimal pure-power exponent
    for (const auto& g : j.gens()) {
        int support = -1;
        for (int v = 0; v < n; ++v)
            if (g[v] > 0) support = (support == -1) ? v : -2;
        if (support >= 0 && (bound[support] == 0 || g[support] < bound[support]))
            bound[support] = g[support];
    }
    long long box = 1;
    for (int v = 0; v < n; ++v) {
        if (bound[v] == 0)
            throw std::invalid_argument("standard_monomials: ideal is not Artinian (variable " +
                                        j.ring().vars[v] + " unbounded)");
        box *= bound[v];
        if (box > 2000000)
            throw ResourceLimitError("standard_monomials: enumeration box exceeds 2000000");
    }

    std::vector<Multidegree> out;
    Multidegree m(static_cast<std::size_t>(n), 0);
    while (true) {
        if (!j.contains(m)) out.push_back(m);
        int v = n - 1;
        while (v >= 0 && m[v] == bound[v] - 1) m[v--] = 0;
        if (v < 0) break;
        ++m[v];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> socle_degrees(const MonomialIdeal& j) {
    int n = j.ring().size();
    std::vector<int> degrees;
    for (const auto& u : standard_monomials(j)) {
        bool socle = true;
        Multidegree shifted = u;
        for (int v = 0; v < n && socle; ++v) {
            ++shifted[v];
            if (!j.contains(shifted)) socle = false;
            --shifted[v];
        }
        if (socle) degrees.push_back(total_degree(u));
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

MonomialIdeal renamed(const MonomialIdeal& i, Ring new_ring) {
    if (new_ring.size() != i.ring().size())
        throw std::invalid_argument("renamed: ring size mismatch");
    return MonomialIdeal::make(std::move(new_ring), i.gens());
}

}  // namespace edgereg
