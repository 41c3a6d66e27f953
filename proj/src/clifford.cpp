#include "kummerlab/clifford.hpp"

namespace kummerlab {

bool clifford_relation_check(const VVector& y1, const VVector& y2)
{
    const Integer expected = v_pairing(y1, y2);
    for (int m = 0; m < 16; ++m) {
        Spinor e;
        e.c[static_cast<size_t>(m)] = 1;
        Spinor lhs = clifford_apply(y1, clifford_apply(y2, e));
        const Spinor other = clifford_apply(y2, clifford_apply(y1, e));
        for (size_t i = 0; i < 16; ++i)
            lhs.c[i] += other.c[i];
        Spinor rhs;
        rhs.c[static_cast<size_t>(m)] = expected;
        if (lhs != rhs)
            return false;
    }
    return true;
}

Spinor spinor_of(const MukaiVector& v)
{
    Spinor s;
    s.c[0] = v.r;
    for (size_t k = 0; k < 6; ++k)
        s.c[static_cast<size_t>(kLambda2Mask[k])] = kLambda2Sign[k] * v.c1[k];
    s.c[15] = v.s;
    return s;
}

MukaiVector mukai_vector_of(const Spinor& s)
{
    for (int m : kOddMasks)
        if (s.c[static_cast<size_t>(m)] != 0)
            throw std::invalid_argument("mukai_vector_of: spinor has odd support");
    MukaiVector v;
    v.r = s.c[0];
    for (size_t k = 0; k < 6; ++k)
        v.c1[k] = kLambda2Sign[k] * s.c[static_cast<size_t>(kLambda2Mask[k])];
    v.s = s.c[15];
    return v;
}

Integer generalized_mukai_pairing(const Spinor& s1, const Spinor& s2)
{
    static constexpr int tau[5] = {1, 1, -1, -1, 1};
    Integer acc = 0;
    for (int m = 0; m < 16; ++m) {
        if (s1.c[static_cast<size_t>(m)] == 0)
            continue;
        const int comp = 15 ^ m;
        if (s2.c[static_cast<size_t>(comp)] == 0)
            continue;
        const int degree = std::popcount(static_cast<unsigned>(m));
        const int sgn = tau[degree] * wedge_sign(m, comp);
        acc += sgn * s1.c[static_cast<size_t>(m)] * s2.c[static_cast<size_t>(comp)];
    }
    return -acc;
}

IntegerMatrix mukai_operator_matrix(const MukaiVector& v)
{
    const Spinor sp = spinor_of(v);
    IntegerMatrix m(8, 8);
    for (int col = 0; col < 8; ++col) {
        VVector y;
        if (col < 4)
            y.alpha[static_cast<size_t>(col)] = 1;
        else
            y.omega[static_cast<size_t>(col - 4)] = 1;
        const Spinor image = clifford_apply(y, sp);
        for (int row = 0; row < 8; ++row)
            m(row, col) = image.c[static_cast<size_t>(kOddMasks[static_cast<size_t>(row)])];
    }
    return m;
}

std::vector<Integer> gamma_group_full_chain(const MukaiVector& v)
{
    const SmithDecomposition snf = smith_normal_form(mukai_operator_matrix(v));
    for (const Integer& d : snf.divisors)
        if (d == 0)
            throw SingularOperatorError(
                "gamma_group: operator matrix of " + format_mukai_vector(v) +
                " is singular over the rationals; the cokernel is infinite");
    return snf.divisors;
}

std::vector<Integer> gamma_group(const MukaiVector& v)
{
    std::vector<Integer> out;
    for (const Integer& d : gamma_group_full_chain(v))
        if (d > 1)
            out.push_back(d);
    return out;
}

} // namespace kummerlab
