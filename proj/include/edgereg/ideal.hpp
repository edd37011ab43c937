#pragma once

#include <string>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

struct Ring {
    std::vector<std::string> vars;

    int size() const { return static_cast<int>(vars.size()); }
    static Ring x_vars(int n);  // x1, ..., xn

    bool operator==(const Ring&) const = default;
};

// Exponent vector, one entry per ring variable; doubles as a monomial x^a.
using Multidegree = std::vector<int>;

int total_degree(const Multidegree& a);
bool divides(const Multidegree& a, const Multidegree& b);  // componentwise a <= b
Multidegree join(const Multidegree& a, const Multidegree& b);

std::string monomial_string(const Ring& r, const Multidegree& a);

// Componentwise exponent caps; unbounded entries impose no cap.
struct RestrictionVector {
    static constexpr int unbounded = -1;

    std::vector<int> caps;

    static RestrictionVector all_unbounded(int n);
    // n_free unbounded entries followed by n_zero zero caps.
    static RestrictionVector free_then_zero(int n_free, int n_zero);

    bool admits(const Multidegree& a) const;
};

// Monomial ideal with a canonical minimal generating set (duplicates and
// divisible generators removed, remainder sorted lexicographically).  The
// zero ideal has no generators; the unit ideal is rejected.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal make(Ring ring, std::vector<Multidegree> gens);

    const Ring& ring() const { return ring_; }
    const std::vector<Multidegree>& gens() const { return gens_; }
    int gen_count() const { return static_cast<int>(gens_.size()); }
    bool is_zero() const { return gens_.empty(); }

    // Membership x^m in the ideal: some generator divides x^m.
    bool contains(const Multidegree& m) const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    Ring ring_;
    std::vector<Multidegree> gens_;
};

// Ideal generated by x_u*x_v over the edges of g, in x1..xn.
MonomialIdeal edge_ideal(const Graph& g);

// i + (x_v^2 : all variables v).
MonomialIdeal add_squares(const MonomialIdeal& i);

// s-fold products of generators, minimalized.  s >= 1.
MonomialIdeal power(const MonomialIdeal& i, int s);

// Replaces x_v^e by a product of e distinct copies of x_v.  Copy j >= 2 of
// variable "x" is named "x'", "x''", ...; fresh copies are appended to the
// ring grouped by copy index, original variable order within each group.
// Squarefree ideals come back unchanged, ring included.
MonomialIdeal polarize(const MonomialIdeal& i);

// Subideal generated by the generators obeying the caps; variables capped at
// zero are removed from the ring of the result.
MonomialIdeal restrict_ideal(const MonomialIdeal& i, const RestrictionVector& caps);

// Monomials outside j, for Artinian j (every variable bounded by a pure
// power generator).  Sorted lexicographically.
std::vector<Multidegree> standard_monomials(const MonomialIdeal& j);

// Degrees of standard monomials u with x_v*u in j for every variable v,
// ascending with multiplicity.
std::vector<int> socle_degrees(const MonomialIdeal& j);

// Same generators presented in a ring with different variable names.
MonomialIdeal renamed(const MonomialIdeal& i, Ring new_ring);

}  // namespace edgereg
