#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kummerlab/integer_matrix.hpp"

using namespace kummerlab;

namespace {

long draw(std::mt19937_64& gen, long lo, long hi)
{
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
}

IntegerMatrix random_matrix(std::mt19937_64& gen, int rows, int cols, long bound)
{
    IntegerMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = draw(gen, -bound, bound);
    return m;
}

IntegerMatrix diagonal_of(const std::vector<Integer>& divisors, int rows, int cols)
{
    IntegerMatrix d(rows, cols);
    for (size_t i = 0; i < divisors.size(); ++i)
        d(static_cast<int>(i), static_cast<int>(i)) = divisors[i];
    return d;
}

} // namespace

TEST_CASE("smith normal form on fixed inputs")
{
    const auto id8 = smith_normal_form(IntegerMatrix::identity(8));
    CHECK(id8.divisors == std::vector<Integer>(8, Integer(1)));

    IntegerMatrix diag(2, 2);
    diag(0, 0) = 2;
    diag(1, 1) = 4;
    CHECK(smith_normal_form(diag).divisors == std::vector<Integer>{2, 4});

    IntegerMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 1) = 2;
    CHECK(smith_normal_form(m).divisors == std::vector<Integer>{1, 4});

    IntegerMatrix zero(3, 3);
    CHECK(smith_normal_form(zero).divisors == std::vector<Integer>{0, 0, 0});
}

TEST_CASE("smith normal form correctness on random matrices")
{
    std::mt19937_64 gen(101);
    for (int trial = 0; trial < 100; ++trial) {
        const int rows = static_cast<int>(draw(gen, 1, 8));
        const int cols = static_cast<int>(draw(gen, 1, 8));
        const IntegerMatrix m = random_matrix(gen, rows, cols, 9);
        const SmithDecomposition snf = smith_normal_form(m, true);

        REQUIRE(snf.divisors.size() == static_cast<size_t>(std::min(rows, cols)));
        for (size_t i = 0; i < snf.divisors.size(); ++i)
            CHECK(snf.divisors[i] >= 0);
        for (size_t i = 0; i + 1 < snf.divisors.size(); ++i) {
            if (snf.divisors[i] == 0)
                CHECK(snf.divisors[i + 1] == 0);
            else
                CHECK(snf.divisors[i + 1] % snf.divisors[i] == 0);
        }

        REQUIRE(snf.left.has_value());
        REQUIRE(snf.right.has_value());
        const Integer ul = determinant(*snf.left);
        const Integer ur = determinant(*snf.right);
        CHECK((ul == 1 || ul == -1));
        CHECK((ur == 1 || ur == -1));
        CHECK(*snf.left * m * *snf.right == diagonal_of(snf.divisors, rows, cols));
    }
}

TEST_CASE("determinant agrees with the divisor product")
{
    std::mt19937_64 gen(211);
    for (int trial = 0; trial < 50; ++trial) {
        const int size = static_cast<int>(draw(gen, 1, 6));
        const IntegerMatrix m = random_matrix(gen, size, size, 7);
        const Integer det = determinant(m);
        Integer prod = 1;
        for (const Integer& d : smith_normal_form(m).divisors)
            prod *= d;
        CHECK((det == prod || det == -prod));
    }

    IntegerMatrix singular(2, 2);
    singular(0, 0) = 2;
    singular(0, 1) = 4;
    singular(1, 0) = 1;
    singular(1, 1) = 2;
    CHECK(determinant(singular) == 0);
    CHECK_THROWS_AS(determinant(IntegerMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("signature by congruence diagonalization")
{
    RationalMatrix d(2, 2);
    d(0, 0) = 1;
    d(1, 1) = -1;
    CHECK(symmetric_signature(d) == std::pair<int, int>(1, 1));

    RationalMatrix hyperbolic(2, 2);
    hyperbolic(0, 1) = 1;
    hyperbolic(1, 0) = 1;
    CHECK(symmetric_signature(hyperbolic) == std::pair<int, int>(1, 1));

    RationalMatrix degenerate(3, 3);
    degenerate(0, 0) = 2;
    CHECK(symmetric_signature(degenerate) == std::pair<int, int>(1, 0));

    RationalMatrix asym(2, 2);
    asym(0, 1) = 1;
    CHECK_THROWS_AS(symmetric_signature(asym), std::invalid_argument);

    std::mt19937_64 gen(307);
    for (int trial = 0; trial < 30; ++trial) {
        const int size = static_cast<int>(draw(gen, 1, 6));
        /* G = A^T A + diag noise stays symmetric */
        const IntegerMatrix a = random_matrix(gen, size, size, 4);
        RationalMatrix g(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                Integer acc = 0;
                for (int k = 0; k < size; ++k)
                    acc += a(k, i) * a(k, j);
                g(i, j) = Rational(acc);
            }
        const auto [pos, neg] = symmetric_signature(g);
        CHECK(neg == 0); /* Gram matrices are positive semidefinite */
        CHECK(pos <= size);
    }
}

TEST_CASE("matrix plumbing")
{
    IntegerMatrix m(2, 3);
    m(0, 0) = 1;
    m(1, 2) = 5;
    CHECK(m.transpose()(2, 1) == 5);
    CHECK_THROWS_AS(m(2, 0), std::out_of_range);
    CHECK_THROWS_AS(IntegerMatrix(2, 2) * IntegerMatrix(3, 3), std::invalid_argument);

    const IntegerMatrix id = IntegerMatrix::identity(3);
    CHECK(id * id == id);
}
