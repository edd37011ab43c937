#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "edgereg/complex.hpp"
#include "edgereg/ideal.hpp"

namespace edgereg {

struct EngineOptions {
    FieldSpec field = FieldSpec::rationals();
    std::size_t lattice_cap = 200000;  // max lcm-lattice elements
    std::size_t face_cap = 2000000;    // max faces per simplicial complex
    int jobs = 1;

    // Strategy for the order-complex computation; automatic picks per
    // element, the rest exist so tests can cross-validate the reductions.
    enum class OracleRoute { automatic, literal, crosscut, nerve };
    OracleRoute oracle_route = OracleRoute::automatic;
};

// Join closure of the minimal generators' multidegrees.
struct LcmLattice {
    Ring ring;
    std::vector<Multidegree> gens;
    std::vector<Multidegree> elements;               // sorted by (degree, lex)
    std::vector<std::vector<int>> generators_below;  // per element, gens dividing it

    int size() const { return static_cast<int>(elements.size()); }
};

LcmLattice lcm_lattice(const MonomialIdeal& i, const EngineOptions& opt = {});

struct BettiEntry {
    int i = 0;
    Multidegree degree;
    int value = 0;

    bool operator==(const BettiEntry&) const = default;
};

struct BettiTable {
    Ring ring;
    std::vector<BettiEntry> entries;  // positive values, sorted by (i, degree)

    std::map<std::pair<int, int>, int> graded() const;  // (i, total degree) -> value
    int total(int i) const;
    int projective_dimension() const;
    int regularity() const;  // max total degree minus homological degree
    std::string diagram() const;

    bool operator==(const BettiTable&) const = default;
};

// Subcomplex of the full simplex on the support of a spanned by the subsets
// whose removal from x^a stays inside i.
SimplicialComplex koszul_complex(const MonomialIdeal& i, const Multidegree& a);

// Multigraded Betti numbers from Koszul complex homology across the lcm
// lattice.
BettiTable betti_multigraded(const MonomialIdeal& i, const EngineOptions& opt = {});

// The same table from order-complex homology of open lattice intervals,
// computed independently of koszul_complex.
BettiTable betti_gpw_oracle(const MonomialIdeal& i, const EngineOptions& opt = {});

int regularity(const MonomialIdeal& i, const EngineOptions& opt = {});

}  // namespace edgereg
