#pragma once

#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

#include "kummerlab/integer.hpp"
#include "kummerlab/integer_matrix.hpp"
#include "kummerlab/mukai_lattice.hpp"

namespace kummerlab {

/* Element of the rank-8 lattice V = H^1 (+) (H^1)^*: alpha acts on the spin
 * module by wedging, omega by contraction. */
template <class Scalar>
struct VVectorT {
    std::array<Scalar, 4> alpha{};
    std::array<Scalar, 4> omega{};
    bool operator==(const VVectorT&) const = default;
};
using VVector = VVectorT<Integer>;

/* Element of the rank-16 spin module Lambda^* H^1. The coefficient index is
 * the subset bitmask: bit i-1 set means the generator e_i occurs, so e.g.
 * mask 0b0101 is e_1 ^ e_3. Even masks span the even half, odd masks the
 * odd half. */
template <class Scalar>
struct SpinorT {
    std::array<Scalar, 16> c{};
    bool operator==(const SpinorT&) const = default;
};
using Spinor = SpinorT<Integer>;

/* Fixed basis orders of the two halves: by size, then by mask. */
inline constexpr std::array<int, 8> kOddMasks  = {1, 2, 4, 8, 7, 11, 13, 14};
inline constexpr std::array<int, 8> kEvenMasks = {0, 3, 5, 6, 9, 10, 12, 15};

/* ((a1,w1),(a2,w2)) = w2(a1) + w1(a2); four hyperbolic planes. */
template <class Scalar>
Scalar v_pairing(const VVectorT<Scalar>& y1, const VVectorT<Scalar>& y2)
{
    Scalar acc{};
    for (size_t i = 0; i < 4; ++i)
        acc += y2.omega[i] * y1.alpha[i] + y1.omega[i] * y2.alpha[i];
    return acc;
}

/* Sign of sorting e_i into e_S: (-1)^{#{j in S : j < i}}. `bit` is 1<<(i-1). */
inline int insertion_sign(int mask, int bit)
{
    return (std::popcount(static_cast<unsigned>(mask & (bit - 1))) & 1) ? -1 : 1;
}

/* Sign of e_S ^ e_T for disjoint masks, counting inversions. */
inline int wedge_sign(int m1, int m2)
{
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        if (m2 & (1 << i))
            inversions += std::popcount(static_cast<unsigned>(m1) >> (i + 1));
    return (inversions & 1) ? -1 : 1;
}

/* Clifford action m(y) = alpha ^ (.) + contraction by omega. Contraction is
 * the degree -1 derivation extending omega on the generators, so removing
 * the generator at position k of e_S carries the sign (-1)^k. Swaps the
 * even and odd halves. */
template <class Scalar>
SpinorT<Scalar> clifford_apply(const VVectorT<Scalar>& y, const SpinorT<Scalar>& s)
{
    SpinorT<Scalar> out;
    for (int i = 0; i < 4; ++i) {
        const int bit = 1 << i;
        if (!(y.alpha[static_cast<size_t>(i)] == Scalar{})) {
            for (int m = 0; m < 16; ++m) {
                if (s.c[static_cast<size_t>(m)] == Scalar{} || (m & bit))
                    continue;
                const Scalar term = y.alpha[static_cast<size_t>(i)] * s.c[static_cast<size_t>(m)];
                if (insertion_sign(m, bit) > 0)
                    out.c[static_cast<size_t>(m | bit)] += term;
                else
                    out.c[static_cast<size_t>(m | bit)] -= term;
            }
        }
        if (!(y.omega[static_cast<size_t>(i)] == Scalar{})) {
            for (int m = 0; m < 16; ++m) {
                if (s.c[static_cast<size_t>(m)] == Scalar{} || !(m & bit))
                    continue;
                const Scalar term = y.omega[static_cast<size_t>(i)] * s.c[static_cast<size_t>(m)];
                if (insertion_sign(m, bit) > 0)
                    out.c[static_cast<size_t>(m & ~bit)] += term;
                else
                    out.c[static_cast<size_t>(m & ~bit)] -= term;
            }
        }
    }
    return out;
}

/* m(y1) m(y2) + m(y2) m(y1) = (y1,y2) id on all 16 basis spinors. */
bool clifford_relation_check(const VVector& y1, const VVector& y2);

/* Embedding of (r, c1, s) as r + (c1 in Lambda^2 coordinates) + s e_1234.
 * The rank-6 identification of Lambda^2 with the U+U+U basis is the constant
 * matrix below (column k of the basis maps to the signed mask), chosen so
 * the top-degree wedge pairing on Lambda^2 equals the U+U+U form:
 *   e1' = +e12, f1' = +e34, e2' = +e13, f2' = -e24, e3' = +e14, f3' = +e23. */
inline constexpr std::array<int, 6> kLambda2Mask = {0b0011, 0b1100, 0b0101, 0b1010, 0b1001,
                                                    0b0110};
inline constexpr std::array<int, 6> kLambda2Sign = {1, 1, 1, -1, 1, 1};

Spinor spinor_of(const MukaiVector& v);

/* Inverse of spinor_of on the even half; rejects spinors with odd support. */
MukaiVector mukai_vector_of(const Spinor& s);

/* -(coefficient of e_1234 in tau(s1) ^ s2), where tau scales degree i by
 * (-1)^{i(i-1)/2}, i.e. +,+,-,-,+ in degrees 0..4. Restricted to the even
 * half this agrees with mukai_pairing under spinor_of. */
Integer generalized_mukai_pairing(const Spinor& s1, const Spinor& s2);

/* 8x8 matrix of y -> m(y)(spinor_of(v)) from the V basis (e1..e4 wedge,
 * f1..f4 contraction) to the odd half in kOddMasks order. */
IntegerMatrix mukai_operator_matrix(const MukaiVector& v);

struct SingularOperatorError : std::runtime_error {
    explicit SingularOperatorError(const std::string& msg) : std::runtime_error(msg) {}
};

/* Elementary divisors > 1 of the cokernel of the operator matrix of v; the
 * finite group they present is the deck group attached to v. Throws
 * SingularOperatorError when the operator has a rational kernel. */
std::vector<Integer> gamma_group(const MukaiVector& v);
std::vector<Integer> gamma_group_full_chain(const MukaiVector& v);

} // namespace kummerlab
