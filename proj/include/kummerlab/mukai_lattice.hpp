#pragma once

#include <array>
#include <string>

#include "kummerlab/integer.hpp"
#include "kummerlab/integer_matrix.hpp"

namespace kummerlab {

/* Class in the even cohomology of an abelian surface: (rank, c1, chi).
 * c1 lives in the rank-6 middle lattice with the form U+U+U in the fixed
 * ordered basis (e1,f1,e2,f2,e3,f3), <e_i,f_i> = 1. */
struct MukaiVector {
    Integer r;
    std::array<Integer, 6> c1{};
    Integer s;

    bool operator==(const MukaiVector& o) const = default;
};

Integer u3_pairing(const std::array<Integer, 6>& a, const std::array<Integer, 6>& b);

/* <x,y> = <c1(x),c1(y)> - r(x) s(y) - s(x) r(y); symmetric, signature (4,4). */
Integer mukai_pairing(const MukaiVector& x, const MukaiVector& y);

/* (r, -c1, s); an involution preserving the pairing. */
MukaiVector dual(const MukaiVector& x);

struct MukaiClassification {
    bool primitive = false;      // gcd of all 8 coordinates is 1
    bool positive = false;
    int positivity_case = 0;     // 1, 2, 3, or 0 for none
    /* Case 2 asks for an effective c1, which is not decidable from lattice
     * data; c1 != 0 is used as a proxy and this flag marks the answer. */
    bool lattice_level_effectivity = false;
};

MukaiClassification classify(const MukaiVector& x);

/* (1, 0, -(n+1)): the class of ideal sheaves of n+1 points. */
MukaiVector ideal_sheaf_vector(long n);

struct ModuliDimension {
    Integer dimension;            // 2 + <v,v>
    Integer ext_rank;             // <v,v>
    bool meets_min_dimension = false; // dimension >= 8, the working range
};

ModuliDimension moduli_dimension(const MukaiVector& v);

/* Gram matrix of the pairing in the basis (r, e1,f1,e2,f2,e3,f3, s). */
IntegerMatrix mukai_gram_matrix();

/* I/O format shared with the command line: "r,c1a,c1b,c1c,c1d,c1e,c1f,s". */
MukaiVector parse_mukai_vector(const std::string& text);
std::string format_mukai_vector(const MukaiVector& v);

} // namespace kummerlab
