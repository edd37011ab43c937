#include "edgereg/betti.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "edgereg/errors.hpp"
#include "edgereg/parallel.hpp"

namespace edgereg {

namespace {

struct MultidegreeHash {
    std::size_t operator()(const Multidegree& a) const {
        std::size_t h = 1469598103934665603ull;
        for (int e : a) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<int> support_of(const Multidegree& a) {
    std::vector<int> out;
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] > 0) out.push_back(static_cast<int>(v));
    return out;
}

// Drops masks contained in another mask (duplicates included).
std::vector<std::uint64_t> maximal_masks(std::vector<std::uint64_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < masks.size(); ++k) {
        bool covered = false;
        for (std::size_t j = 0; j < masks.size() && !covered; ++j)
            if (j != k && (masks[k] & ~masks[j]) == 0) covered = true;
        if (!covered) out.push_back(masks[k]);
    }
    return out;
}

// Union of full subcube families; the input masks are the facets.
SimplicialComplex cubes_to_complex(int ground, const std::vector<std::uint64_t>& maximal,
                                   std::size_t face_cap) {
    std::unordered_set<std::uint64_t> faces;
    for (std::uint64_t cube : maximal) {
        for (std::uint64_t sub = cube;; sub = (sub - 1) & cube) {
            faces.insert(sub);
            if (faces.size() > face_cap)
                throw ResourceLimitError("complex: face count exceeds cap " +
                                         std::to_string(face_cap));
            if (sub == 0) break;
        }
    }
    SimplicialComplex k;
    k.ground = ground;
    k.faces.assign(faces.begin(), faces.end());
    std::sort(k.faces.begin(), k.faces.end());
    return k;
}

// Estimated face count of the subcube union, saturating.
std::size_t cube_face_estimate(const std::vector<std::uint64_t>& maximal) {
    std::size_t total = 0;
    for (std::uint64_t cube : maximal) {
        int bits = std::popcount(cube);
        if (bits >= 40) return std::size_t(1) << 62;
        total += std::size_t(1) << bits;
        if (total > (std::size_t(1) << 62)) return std::size_t(1) << 62;
    }
    return total;
}

bool is_cone_cubes(const std::vector<std::uint64_t>& maximal) {
    if (maximal.empty()) return false;
    std::uint64_t common = ~std::uint64_t{0};
    for (std::uint64_t cube : maximal) common &= cube;
    return common != 0;
}

struct LatticeScratch {
    const LcmLattice& lat;
    std::vector<int> degrees;  // total degree per element

    explicit LatticeScratch(const LcmLattice& l) : lat(l) {
        degrees.reserve(l.elements.size());
        for (const auto& a : l.elements) degrees.push_back(total_degree(a));
    }

    // Indices of elements strictly below element idx, ascending.
    std::vector<int> open_interval(std::size_t idx) const {
        std::vector<int> out;
        int da = degrees[idx];
        for (std::size_t j = 0; j < lat.elements.size() && degrees[j] < da; ++j)
            if (divides(lat.elements[j], lat.elements[idx])) out.push_back(static_cast<int>(j));
        return out;
    }

    // Maximal elements of the interval, as positions into `interval`.
    std::vector<int> coatom_positions(const std::vector<int>& interval) const {
        std::vector<int> out;  // scan high degree first, keep the undominated
        for (std::size_t r = interval.size(); r-- > 0;) {
            const auto& z = lat.elements[static_cast<std::size_t>(interval[r])];
            bool dominated = false;
            for (int kept : out)
                if (divides(z, lat.elements[static_cast<std::size_t>(interval[static_cast<std::size_t>(kept)])])) {
                    dominated = true;
                    break;
                }
            if (!dominated) out.push_back(static_cast<int>(r));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

LcmLattice lcm_lattice(const MonomialIdeal& i, const EngineOptions& opt) {
    if (i.is_zero()) throw std::invalid_argument("lcm_lattice: zero ideal");
    LcmLattice lat;
    lat.ring = i.ring();
    lat.gens = i.gens();

    auto& elements = lat.elements;
    elements = lat.gens;
    std::unordered_set<Multidegree, MultidegreeHash> seen(elements.begin(), elements.end());
    // Joins against generators reach every join of a generator subset.
    for (std::size_t head = 0; head < elements.size(); ++head) {
        Multidegree current = elements[head];  // copy; the vector reallocates
        for (const auto& g : lat.gens) {
            Multidegree joined = join(current, g);
            if (seen.insert(joined).second) {
                elements.push_back(std::move(joined));
                if (elements.size() > opt.lattice_cap)
                    throw ResourceLimitError("lcm_lattice: more than " +
                                             std::to_string(opt.lattice_cap) + " elements");
            }
        }
    }
    std::sort(elements.begin(), elements.end(), [](const Multidegree& a, const Multidegree& b) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });

    lat.generators_below.resize(elements.size());
    for (std::size_t k = 0; k < elements.size(); ++k)
        for (std::size_t g = 0; g < lat.gens.size(); ++g)
            if (divides(lat.gens[g], elements[k]))
                lat.generators_below[k].push_back(static_cast<int>(g));
    return lat;
}

SimplicialComplex koszul_complex(const MonomialIdeal& i, const Multidegree& a) {
    if (static_cast<int>(a.size()) != i.ring().size())
        throw std::invalid_argument("koszul: multidegree length does not match ring");
    for (int e : a)
        if (e < 0) throw std::invalid_argument("koszul: negative multidegree");
    auto supp = support_of(a);
    if (supp.size() > 64) throw ResourceLimitError("koszul: support exceeds 64 variables");

    std::vector<std::uint64_t> cubes;
    for (const auto& g : i.gens()) {
        if (!divides(g, a)) continue;
        std::uint64_t mask = 0;  // vertices whose removal keeps g dividing
        for (std::size_t j = 0; j < supp.size(); ++j)
            if (a[static_cast<std::size_t>(supp[j])] - g[static_cast<std::size_t>(supp[j])] >= 1)
                mask |= std::uint64_t{1} << j;
        cubes.push_back(mask);
    }
    return cubes_to_complex(static_cast<int>(supp.size()), maximal_masks(std::move(cubes)),
                            std::size_t{1} << 62);
}

namespace {

void append_entries(std::vector<BettiEntry>& out, const Multidegree& a, const std::vector<int>& h) {
    for (std::size_t k = 0; k < h.size(); ++k)
        if (h[k] > 0) out.push_back({static_cast<int>(k), a, h[k]});
}

BettiTable assemble_table(const Ring& ring, std::vector<std::vector<BettiEntry>> per_element) {
    BettiTable table;
    table.ring = ring;
    for (auto& chunk : per_element)
        for (auto& entry : chunk) table.entries.push_back(std::move(entry));
    std::sort(table.entries.begin(), table.entries.end(),
              [](const BettiEntry& x, const BettiEntry& y) {
                  if (x.i != y.i) return x.i < y.i;
                  return x.degree < y.degree;
              });
    return table;
}

}  // namespace

BettiTable betti_multigraded(const MonomialIdeal& i, const EngineOptions& opt) {
    if (i.is_zero()) throw std::invalid_argument("betti: zero ideal");
    LcmLattice lat = lcm_lattice(i, opt);
    std::vector<std::vector<BettiEntry>> per_element(lat.elements.size());

    parallel_for(lat.elements.size(), opt.jobs, [&](std::size_t idx) {
        const Multidegree& a = lat.elements[idx];
        auto supp = support_of(a);
        if (supp.size() > 64)
            throw ResourceLimitError("betti: multidegree support exceeds 64 variables");
        std::vector<std::uint64_t> cubes;
        cubes.reserve(lat.generators_below[idx].size());
        for (int gi : lat.generators_below[idx]) {
            const auto& g = lat.gens[static_cast<std::size_t>(gi)];
            std::uint64_t mask = 0;
            for (std::size_t j = 0; j < supp.size(); ++j)
                if (a[static_cast<std::size_t>(supp[j])] - g[static_cast<std::size_t>(supp[j])] >= 1)
                    mask |= std::uint64_t{1} << j;
            cubes.push_back(mask);
        }
        auto maximal = maximal_masks(std::move(cubes));
        if (is_cone_cubes(maximal)) return;  // contractible: nothing to record
        auto complex = cubes_to_complex(static_cast<int>(supp.size()), maximal, opt.face_cap);
        append_entries(per_element[idx], a, reduced_homology(complex, opt.field));
    });
    return assemble_table(i.ring(), std::move(per_element));
}

namespace {

// Chains of the comparability order on the interval, as a clique complex.
std::vector<int> literal_interval_homology(const LatticeScratch& scratch,
                                           const std::vector<int>& interval, const FieldSpec& field,
                                           std::size_t face_cap) {
    std::size_t n = interval.size();
    if (n > 64) throw ResourceLimitError("betti oracle: interval exceeds 64 elements");
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            // sorted by degree, so only the earlier can divide the later
            if (divides(scratch.lat.elements[static_cast<std::size_t>(interval[p])],
                        scratch.lat.elements[static_cast<std::size_t>(interval[q])])) {
                adj[p] |= std::uint64_t{1} << q;
                adj[q] |= std::uint64_t{1} << p;
            }

    std::vector<std::uint64_t> faces{0};
    // depth-first clique extension; vertices join in ascending order
    struct Frame {
        std::uint64_t clique, candidates;
    };
    std::vector<Frame> stack{{0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1}};
    while (!stack.empty()) {
        auto [clique, candidates] = stack.back();
        stack.pop_back();
        while (candidates) {
            std::uint64_t low = candidates & (~candidates + 1);
            int v = std::countr_zero(low);
            candidates ^= low;
            std::uint64_t bigger = clique | low;
            faces.push_back(bigger);
            if (faces.size() > face_cap)
                throw ResourceLimitError("betti oracle: face count exceeds cap");
            // only candidates beyond v keep the enumeration canonical
            std::uint64_t rest = candidates & adj[static_cast<std::size_t>(v)];
            if (rest) stack.push_back({bigger, rest});
        }
    }
    SimplicialComplex complex;
    complex.ground = static_cast<int>(n);
    complex.faces = std::move(faces);
    std::sort(complex.faces.begin(), complex.faces.end());
    return reduced_homology(complex, field);
}

std::vector<int> crosscut_homology(const LatticeScratch& scratch, std::size_t idx,
                                   const FieldSpec& field, std::size_t face_cap) {
    const auto& atoms = scratch.lat.generators_below[idx];
    const auto& a = scratch.lat.elements[idx];
    std::size_t n = atoms.size();
    std::vector<std::uint64_t> cubes;  // per support coordinate: atoms staying short of a
    for (int v : support_of(a)) {
        std::uint64_t mask = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (scratch.lat.gens[static_cast<std::size_t>(atoms[j])][static_cast<std::size_t>(v)] <
                a[static_cast<std::size_t>(v)])
                mask |= std::uint64_t{1} << j;
        cubes.push_back(mask);
    }
    auto maximal = maximal_masks(std::move(cubes));
    if (is_cone_cubes(maximal)) return {};
    return reduced_homology(cubes_to_complex(static_cast<int>(n), maximal, face_cap), field);
}

std::vector<int> nerve_homology(const LatticeScratch& scratch, std::size_t idx,
                                const std::vector<int>& interval,
                                const std::vector<int>& coatom_positions, const FieldSpec& field,
                                std::size_t face_cap) {
    std::size_t n = coatom_positions.size();
    const auto& atoms = scratch.lat.generators_below[idx];
    std::vector<std::uint64_t> cubes;  // per atom: the coatoms above it
    cubes.reserve(atoms.size());
    for (int gi : atoms) {
        const auto& g = scratch.lat.gens[static_cast<std::size_t>(gi)];
        std::uint64_t mask = 0;
        for (std::size_t t = 0; t < n; ++t) {
            const auto& z = scratch.lat.elements[static_cast<std::size_t>(
                interval[static_cast<std::size_t>(coatom_positions[t])])];
            if (divides(g, z)) mask |= std::uint64_t{1} << t;
        }
        cubes.push_back(mask);
    }
    auto maximal = maximal_masks(std::move(cubes));
    if (is_cone_cubes(maximal)) return {};
    return reduced_homology(cubes_to_complex(static_cast<int>(n), maximal, face_cap), field);
}

}  // namespace

BettiTable betti_gpw_oracle(const MonomialIdeal& i, const EngineOptions& opt) {
    if (i.is_zero()) throw std::invalid_argument("betti: zero ideal");
    LcmLattice lat = lcm_lattice(i, opt);
    LatticeScratch scratch(lat);
    std::vector<std::vector<BettiEntry>> per_element(lat.elements.size());

    parallel_for(lat.elements.size(), opt.jobs, [&](std::size_t idx) {
        const Multidegree& a = lat.elements[idx];
        auto interval = scratch.open_interval(idx);
        std::vector<int> h;
        using Route = EngineOptions::OracleRoute;
        switch (opt.oracle_route) {
            case Route::literal:
                h = literal_interval_homology(scratch, interval, opt.field, opt.face_cap);
                break;
            case Route::crosscut:
                if (lat.generators_below[idx].size() > 64)
                    throw ResourceLimitError("betti oracle: more than 64 atoms below " +
                                             monomial_string(lat.ring, a));
                h = crosscut_homology(scratch, idx, opt.field, opt.face_cap);
                break;
            case Route::nerve: {
                auto coatoms = scratch.coatom_positions(interval);
                if (coatoms.size() > 64)
                    throw ResourceLimitError("betti oracle: more than 64 coatoms below " +
                                             monomial_string(lat.ring, a));
                h = nerve_homology(scratch, idx, interval, coatoms, opt.field, opt.face_cap);
                break;
            }
            case Route::automatic: {
                if (interval.empty()) {
                    h = {1};  // a is a generator: the interval complex is {{}}
                    break;
                }
                if (interval.size() <= 14) {
                    h = literal_interval_homology(scratch, interval, opt.field, opt.face_cap);
                    break;
                }
                bool done = false;
                if (lat.generators_below[idx].size() <= 64) {
                    // cheap estimate first; the crosscut cubes are per coordinate
                    std::vector<std::uint64_t> est_cubes;
                    std::size_t n_atoms = lat.generators_below[idx].size();
                    for (int v : support_of(a)) {
                        std::uint64_t mask = 0;
                        for (std::size_t j = 0; j < n_atoms; ++j)
                            if (lat.gens[static_cast<std::size_t>(lat.generators_below[idx][j])]
                                        [static_cast<std::size_t>(v)] < a[static_cast<std::size_t>(v)])
                                mask |= std::uint64_t{1} << j;
                        est_cubes.push_back(mask);
                    }
                    if (cube_face_estimate(maximal_masks(est_cubes)) <= 20000) {
                        h = crosscut_homology(scratch, idx, opt.field, opt.face_cap);
                        done = true;
                    }
                }
                if (!done) {
                    auto coatoms = scratch.coatom_positions(interval);
                    if (coatoms.size() > 64)
                        throw ResourceLimitError("betti oracle: more than 64 coatoms below " +
                                                 monomial_string(lat.ring, a));
                    h = nerve_homology(scratch, idx, interval, coatoms, opt.field, opt.face_cap);
                }
                break;
            }
        }
        append_entries(per_element[idx], a, h);
    });
    return assemble_table(i.ring(), std::move(per_element));
}

int regularity(const MonomialIdeal& i, const EngineOptions& opt) {
    return betti_multigraded(i, opt).regularity();
}

std::map<std::pair<int, int>, int> BettiTable::graded() const {
    std::map<std::pair<int, int>, int> out;
    for (const auto& entry : entries) out[{entry.i, total_degree(entry.degree)}] += entry.value;
    return out;
}

int BettiTable::total(int i) const {
    int sum = 0;
    for (const auto& entry : entries)
        if (entry.i == i) sum += entry.value;
    return sum;
}

int BettiTable::projective_dimension() const {
    int top = 0;
    for (const auto& entry : entries) top = std::max(top, entry.i);
    return top;
}

int BettiTable::regularity() const {
    if (entries.empty()) throw std::logic_error("regularity: empty Betti table");
    int reg = 0;
    for (const auto& entry : entries)
        reg = std::max(reg, total_degree(entry.degree) - entry.i);
    return reg;
}

std::string BettiTable::diagram() const {
    auto cells = graded();
    if (cells.empty()) return "(empty)\n";
    int max_i = 0, min_row = 1 << 30, max_row = 0;
    for (const auto& [key, value] : cells) {
        max_i = std::max(max_i, key.first);
        min_row = std::min(min_row, key.second - key.first);
        max_row = std::max(max_row, key.second - key.first);
    }
    auto width_of = [](int v) { return static_cast<int>(std::to_string(v).size()); };
    std::vector<int> width(static_cast<std::size_t>(max_i) + 1);
    for (int col = 0; col <= max_i; ++col) {
        int w = width_of(col);
        for (int row = min_row; row <= max_row; ++row) {
            auto it = cells.find({col, col + row});
            if (it != cells.end()) w = std::max(w, width_of(it->second));
        }
        width[static_cast<std::size_t>(col)] = w + 2;
    }
    int label = 0;
    for (int row = min_row; row <= max_row; ++row)
        label = std::max(label, width_of(row) + 1);

    std::ostringstream out;
    out << std::string(static_cast<std::size_t>(label), ' ');
    for (int col = 0; col <= max_i; ++col) {
        std::string s = std::to_string(col);
        out << std::string(static_cast<std::size_t>(width[static_cast<std::size_t>(col)]) - s.size(), ' ') << s;
    }
    out << "\n";
    for (int row = min_row; row <= max_row; ++row) {
        std::string lab = std::to_string(row) + ":";
        out << lab << std::string(static_cast<std::size_t>(label) - lab.size(), ' ');
        for (int col = 0; col <= max_i; ++col) {
            auto it = cells.find({col, col + row});
            std::string s = it == cells.end() ? "." : std::to_string(it->second);
            out << std::string(static_cast<std::size_t>(width[static_cast<std::size_t>(col)]) - s.size(), ' ') << s;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace edgereg
