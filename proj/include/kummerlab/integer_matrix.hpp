#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kummerlab/integer.hpp"

namespace kummerlab {

/* Small dense matrix over an exact scalar (Integer or Rational). Sized for
 * lattice computations, not numerics: row/column operations are the core
 * interface. */
template <class Scalar>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols))
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("DenseMatrix: negative size");
    }

    static DenseMatrix identity(int n)
    {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int i, int j) { return data_[idx(i, j)]; }
    const Scalar& operator()(int i, int j) const { return data_[idx(i, j)]; }

    void swap_rows(int a, int b)
    {
        for (int j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(int a, int b)
    {
        for (int i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
    /* row[dst] += f * row[src] */
    void add_row(int dst, int src, const Scalar& f)
    {
        for (int j = 0; j < cols_; ++j)
            (*this)(dst, j) += f * (*this)(src, j);
    }
    void add_col(int dst, int src, const Scalar& f)
    {
        for (int i = 0; i < rows_; ++i)
            (*this)(i, dst) += f * (*this)(i, src);
    }
    void negate_row(int i)
    {
        for (int j = 0; j < cols_; ++j)
            (*this)(i, j) = -(*this)(i, j);
    }
    void negate_col(int j)
    {
        for (int i = 0; i < rows_; ++i)
            (*this)(i, j) = -(*this)(i, j);
    }

    DenseMatrix transpose() const
    {
        DenseMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("DenseMatrix: size mismatch in product");
        DenseMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Scalar& f = a(i, k);
                if (f == 0)
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    c(i, j) += f * b(k, j);
            }
        return c;
    }

    bool operator==(const DenseMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

private:
    size_t idx(int i, int j) const
    {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("DenseMatrix: index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

using IntegerMatrix  = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;

/* Elementary divisors d_1 | d_2 | ... of an integer matrix, with optional
 * unimodular transforms satisfying left * M * right = diag(divisors). */
struct SmithDecomposition {
    std::vector<Integer> divisors;
    std::optional<IntegerMatrix> left;
    std::optional<IntegerMatrix> right;
};

/* Exact Smith normal form by minimal-absolute-value pivoting; divisors are
 * canonical (non-negative, divisibility chain). Deterministic. */
SmithDecomposition smith_normal_form(IntegerMatrix m, bool keep_transforms = false);

/* Exact determinant (fraction-free Bareiss elimination). */
Integer determinant(IntegerMatrix m);

/* Signature (#positive, #negative) of a symmetric matrix over the
 * rationals, by exact congruence diagonalization. */
std::pair<int, int> symmetric_signature(RationalMatrix g);

} // namespace kummerlab
