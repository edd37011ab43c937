#pragma once

#include <cstdint>
#include <vector>

#include "edgereg/exact_rank.hpp"

namespace edgereg {

// Abstract simplicial complex on ground vertices 0..ground-1 (at most 64, so
// faces are bitmasks).  Distinguishes the void complex (no faces at all) from
// the irrelevant complex (only the empty face).  Ground vertices need not
// appear as faces.
struct SimplicialComplex {
    int ground = 0;
    std::vector<std::uint64_t> faces;  // sorted, downward closed

    static SimplicialComplex void_complex(int ground = 0);
    static SimplicialComplex irrelevant(int ground = 0);
    // Validates downward closure.
    static SimplicialComplex from_faces(int ground, std::vector<std::uint64_t> faces);
    // Downward closure of the given faces (plus the empty face).
    static SimplicialComplex closure_of(int ground, const std::vector<std::uint64_t>& generators,
                                        std::size_t max_faces = 5000000);

    bool is_void() const { return faces.empty(); }
    int dim() const;                 // -2 for void, -1 for irrelevant
    std::vector<int> f_vector() const;  // f[k] = number of faces with k vertices
    std::vector<std::uint64_t> facets() const;

    bool operator==(const SimplicialComplex&) const = default;
};

// Reduced homology dimensions over the given field: entry d is the rank in
// homological degree d-1, for d = 0 .. dim+1.  The void complex gives {};
// the irrelevant complex gives {1}.  Complexes that are cones are recognized
// and short-circuit to zero.  Every call checks the Euler identity between
// the f-vector and the computed ranks and throws std::logic_error on
// mismatch.
std::vector<int> reduced_homology(const SimplicialComplex& k,
                                  const FieldSpec& field = FieldSpec::rationals(),
                                  bool allow_shortcuts = true);

// Process-wide instrumentation: how many homology computations ran and how
// many Euler checks they performed.
long long homology_call_count();
long long euler_check_count();

}  // namespace edgereg
