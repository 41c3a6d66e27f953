#include "kummerlab/integer_matrix.hpp"

#include <algorithm>

namespace kummerlab {

namespace {

Integer abs_of(const Integer& x)
{
    return x < 0 ? Integer(-x) : x;
}

} // namespace

SmithDecomposition smith_normal_form(IntegerMatrix m, bool keep_transforms)
{
    const int rows = m.rows();
    const int cols = m.cols();
    const int steps = std::min(rows, cols);
    IntegerMatrix left = IntegerMatrix::identity(rows);
    IntegerMatrix right = IntegerMatrix::identity(cols);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            /* smallest nonzero entry of the trailing submatrix, earliest
             * position on ties */
            int pi = -1, pj = -1;
            Integer best;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    if (m(i, j) == 0)
                        continue;
                    Integer a = abs_of(m(i, j));
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0)
                break; // trailing submatrix is zero
            if (pi != t) {
                m.swap_rows(t, pi);
                left.swap_rows(t, pi);
            }
            if (pj != t) {
                m.swap_cols(t, pj);
                right.swap_cols(t, pj);
            }

            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0)
                    continue;
                const Integer f = m(i, t) / m(t, t);
                if (f != 0) {
                    m.add_row(i, t, -f);
                    left.add_row(i, t, -f);
                }
                if (m(i, t) != 0)
                    dirty = true; // remainder smaller than the pivot survives
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0)
                    continue;
                const Integer f = m(t, j) / m(t, t);
                if (f != 0) {
                    m.add_col(j, t, -f);
                    right.add_col(j, t, -f);
                }
                if (m(t, j) != 0)
                    dirty = true;
            }
            if (dirty)
                continue;

            /* pivot divides everything below-right, or gets another pass */
            bool fixed = false;
            for (int i = t + 1; i < rows && !fixed; ++i)
                for (int j = t + 1; j < cols && !fixed; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        m.add_row(t, i, 1);
                        left.add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
        if (m(t, t) < 0) {
            m.negate_row(t);
            left.negate_row(t);
        }
    }

    SmithDecomposition out;
    out.divisors.reserve(static_cast<size_t>(steps));
    for (int t = 0; t < steps; ++t)
        out.divisors.push_back(m(t, t));
    if (keep_transforms) {
        out.left = std::move(left);
        out.right = std::move(right);
    }
    return out;
}

Integer determinant(IntegerMatrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: square matrix required");
    const int n = m.rows();
    if (n == 0)
        return 1;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n && swap < 0; ++i)
                if (m(i, k) != 0)
                    swap = i;
            if (swap < 0)
                return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::pair<int, int> symmetric_signature(RationalMatrix g)
{
    if (g.rows() != g.cols())
        throw std::invalid_argument("symmetric_signature: square matrix required");
    const int n = g.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g(i, j) != g(j, i))
                throw std::invalid_argument("symmetric_signature: matrix is not symmetric");

    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        if (g(k, k) == 0) {
            int d = -1;
            for (int j = k + 1; j < n && d < 0; ++j)
                if (g(j, j) != 0)
                    d = j;
            if (d >= 0) {
                g.swap_rows(k, d);
                g.swap_cols(k, d);
            } else {
                int a = -1, b = -1;
                for (int i = k; i < n && a < 0; ++i)
                    for (int j = i + 1; j < n && a < 0; ++j)
                        if (g(i, j) != 0) {
                            a = i;
                            b = j;
                        }
                if (a < 0)
                    break; // trailing block vanishes
                if (a != k) {
                    g.swap_rows(k, a);
                    g.swap_cols(k, a);
                }
                /* diagonal becomes 2*g(k,b) != 0 */
                g.add_row(k, b, 1);
                g.add_col(k, b, 1);
            }
        }
        const Rational pivot = g(k, k);
        if (pivot > 0)
            ++pos;
        else
            ++neg;
        for (int i = k + 1; i < n; ++i) {
            if (g(i, k) == 0)
                continue;
            const Rational f = g(i, k) / pivot;
            g.add_row(i, k, -f);
            g.add_col(i, k, -f);
        }
    }
    return {pos, neg};
}

} // namespace kummerlab
