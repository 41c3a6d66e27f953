#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "kummerlab/bigraded_table.hpp"

using namespace kummerlab;

namespace {

long draw(std::mt19937_64& gen, long lo, long hi)
{
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
}

BigradedTable random_table(std::mt19937_64& gen, int max_entries, int max_coord, int max_dim)
{
    BigradedTable t;
    const long count = draw(gen, 1, max_entries);
    for (long i = 0; i < count; ++i)
        t.add(static_cast<int>(draw(gen, 0, max_coord)), static_cast<int>(draw(gen, 0, max_coord)),
              Integer(draw(gen, 1, max_dim)));
    return t;
}

BigradedTable symmetrized(const BigradedTable& t)
{
    BigradedTable out;
    for (const auto& [pos, d] : t.entries()) {
        out.add(pos.p, pos.q, d);
        if (pos.p != pos.q)
            out.add(pos.q, pos.p, d);
    }
    return out;
}

/* symmetric, with a unit leading entry so it can divide */
BigradedTable random_symmetric_divisor(std::mt19937_64& gen)
{
    BigradedTable out = BigradedTable::point();
    const long extra = draw(gen, 0, 3);
    for (long e = 0; e < extra; ++e) {
        const int p = static_cast<int>(draw(gen, 0, 3));
        const int q = static_cast<int>(draw(gen, 0, 3));
        if (p == 0 && q == 0)
            continue;
        const Integer d(draw(gen, 1, 4));
        out.add(p, q, d);
        if (p != q)
            out.add(q, p, d);
    }
    return out;
}

std::vector<Integer> profile_of(const BigradedTable& t)
{
    return t.betti_profile(0, t.empty() ? 0 : t.max_total_degree());
}

std::vector<Integer> ints(std::initializer_list<long> values)
{
    std::vector<Integer> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("complex torus tables")
{
    CHECK(complex_torus_table(0) == BigradedTable::point());

    const BigradedTable a = complex_torus_table(2);
    CHECK(profile_of(a) == ints({1, 4, 6, 4, 1}));
    CHECK(a.dim(1, 1) == 4);
    CHECK(a.total_dimension() == 16);
    CHECK(a.euler_characteristic() == 0);

    const BigradedTable t4 = complex_torus_table(4);
    CHECK(t4.betti(1) == 8);
    CHECK(t4.total_dimension() == 256);

    for (int g = 0; g <= 4; ++g) {
        CHECK(hodge_symmetric(complex_torus_table(g)));
        CHECK(poincare_dual(complex_torus_table(g), g));
    }
    CHECK_THROWS_AS(complex_torus_table(-1), std::domain_error);
}

TEST_CASE("table bookkeeping")
{
    BigradedTable t;
    CHECK(t.empty());
    CHECK_THROWS_AS(t.min_total_degree(), std::logic_error);
    t.add(1, 2, 5);
    t.add(1, 2, -5); // cancels, entry pruned
    CHECK(t.empty());
    t.add(0, 0, 3);
    CHECK_THROWS_AS(t.add(0, 0, -4), std::logic_error);
    CHECK(t.dim(0, 0) == 3); // a rejected update leaves the table unchanged

    const BigradedTable s = BigradedTable::single(-1, 3, 2);
    CHECK(s.min_total_degree() == 2);
    CHECK(s.dim(-1, 3) == 2);
    CHECK(s.dim(3, -1) == 0);
}

TEST_CASE("tensor product convolves dimensions")
{
    const BigradedTable a = complex_torus_table(2);
    CHECK(tensor_product(a, BigradedTable::point()) == a);
    CHECK(tensor_product(a, a).betti(2) == 28);

    BigradedTable k3ish;
    k3ish.add(0, 0, 1);
    k3ish.add(1, 1, 7);
    k3ish.add(2, 2, 1);
    CHECK(tensor_product(a, k3ish).betti(4) == 44);

    std::mt19937_64 gen(7);
    for (int i = 0; i < 20; ++i) {
        const BigradedTable x = random_table(gen, 4, 3, 5);
        const BigradedTable y = random_table(gen, 4, 3, 5);
        const BigradedTable z = random_table(gen, 4, 3, 5);
        CHECK(tensor_product(x, y) == tensor_product(y, x));
        CHECK(tensor_product(tensor_product(x, y), z) == tensor_product(x, tensor_product(y, z)));
    }
}

TEST_CASE("twist shifts both indices")
{
    const BigradedTable a = complex_torus_table(2);
    CHECK(tate_twist(a, 0) == a);
    CHECK(tate_twist(BigradedTable::point(), -1) == BigradedTable::single(1, 1, 1));

    std::mt19937_64 gen(11);
    for (int i = 0; i < 20; ++i) {
        const BigradedTable x = random_table(gen, 5, 3, 9);
        const int m = static_cast<int>(draw(gen, -3, 3));
        CHECK(tate_twist(tate_twist(x, m), -m) == x);
        CHECK(tate_twist(x, m).total_dimension() == x.total_dimension());
        CHECK(tate_twist(x, m).euler_characteristic() == x.euler_characteristic());
        CHECK(tate_twist(x, m).betti(0) == x.betti(2 * m));
    }
}

TEST_CASE("symmetric powers of the surface table")
{
    const BigradedTable a = complex_torus_table(2);
    CHECK(symmetric_power(a, 0) == BigradedTable::point());
    CHECK(symmetric_power(a, 1) == a);

    const BigradedTable sym2 = symmetric_power(a, 2);
    CHECK(profile_of(sym2) == ints({1, 4, 12, 28, 38, 28, 12, 4, 1}));
    CHECK(sym2.total_dimension() == 128);

    CHECK(symmetric_power(a, 3).total_dimension() == 688);
    CHECK_THROWS_AS(symmetric_power(a, -1), std::domain_error);
}

TEST_CASE("monomial oracle agrees with the series computation")
{
    const BigradedTable a = complex_torus_table(2);
    CHECK(sym_bruteforce_oracle(a, 2) == symmetric_power(a, 2));

    std::mt19937_64 gen(23);
    int tested = 0;
    while (tested < 25) {
        const BigradedTable x = random_table(gen, 5, 3, 4);
        if (x.total_dimension() > 16)
            continue;
        ++tested;
        for (int k = 0; k <= 3; ++k)
            CHECK(sym_bruteforce_oracle(x, k) == symmetric_power(x, k));
    }

    CHECK(sym_bruteforce_oracle(a, 1) == a);
    CHECK(sym_bruteforce_oracle(BigradedTable::single(1, 0, 1), 2).empty());
}

TEST_CASE("monomial oracle enforces its bounds")
{
    const BigradedTable a = complex_torus_table(2);
    CHECK_THROWS_AS(sym_bruteforce_oracle(a, 5), std::domain_error);
    CHECK_THROWS_AS(sym_bruteforce_oracle(BigradedTable::single(0, 0, 33), 2), std::domain_error);
}

TEST_CASE("exact division inverts the tensor product")
{
    const BigradedTable a = complex_torus_table(2);
    BigradedTable k3ish;
    k3ish.add(0, 0, 1);
    k3ish.add(1, 1, 20);
    k3ish.add(2, 0, 1);
    k3ish.add(0, 2, 1);
    k3ish.add(2, 2, 1);
    CHECK(exact_divide(tensor_product(a, k3ish), a) == k3ish);

    std::mt19937_64 gen(31);
    for (int i = 0; i < 25; ++i) {
        BigradedTable divisor = BigradedTable::point(); // forces a unit leading entry
        const long extra = draw(gen, 0, 4);
        for (long e = 0; e < extra; ++e)
            divisor.add(static_cast<int>(draw(gen, 0, 2)) + 1, static_cast<int>(draw(gen, 0, 3)),
                        Integer(draw(gen, 1, 5)));
        const BigradedTable q = random_table(gen, 4, 3, 5);
        CHECK(exact_divide(tensor_product(divisor, q), divisor) == q);
    }
}

TEST_CASE("division fuzz: every outcome is consistent")
{
    std::mt19937_64 gen(97);
    int quotients = 0, rejections = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const BigradedTable num = random_table(gen, 6, 4, 5);
        BigradedTable den = BigradedTable::point();
        const long extra = draw(gen, 0, 3);
        for (long e = 0; e < extra; ++e) {
            const int p = static_cast<int>(draw(gen, 0, 2));
            const int q = static_cast<int>(draw(gen, 0, 2));
            if (p || q)
                den.add(p, q, Integer(draw(gen, 1, 3)));
        }
        try {
            const BigradedTable q = exact_divide(num, den);
            ++quotients;
            CHECK(tensor_product(den, q) == num);
        } catch (const NotDivisibleError&) {
            ++rejections;
        }
    }
    CHECK(quotients + rejections == 200);
    CHECK(rejections > 0); /* the generator hits both outcomes */
}

TEST_CASE("division failures are reported")
{
    BigradedTable num;
    num.add(0, 0, 1);
    num.add(1, 0, 1);
    BigradedTable den;
    den.add(0, 0, 1);
    den.add(1, 0, 2);
    CHECK_THROWS_AS(exact_divide(num, den), NotDivisibleError);

    BigradedTable bad_lead;
    bad_lead.add(0, 0, 2);
    CHECK_THROWS_AS(exact_divide(num, bad_lead), std::invalid_argument);
    CHECK_THROWS_AS(exact_divide(num, BigradedTable{}), std::invalid_argument);

    /* divisible as power series but not as finite tables */
    CHECK_THROWS_AS(exact_divide(BigradedTable::point(), den), NotDivisibleError);
}

TEST_CASE("operations preserve symmetry of symmetric inputs")
{
    std::mt19937_64 gen(43);
    for (int i = 0; i < 15; ++i) {
        const BigradedTable x = symmetrized(random_table(gen, 4, 3, 5));
        const BigradedTable d = random_symmetric_divisor(gen);
        CHECK(hodge_symmetric(tensor_product(x, d)));
        CHECK(hodge_symmetric(tate_twist(x, static_cast<int>(draw(gen, -2, 2)))));
        CHECK(hodge_symmetric(symmetric_power(x, 2)));
        CHECK(hodge_symmetric(exact_divide(tensor_product(d, x), d)));
    }
}

TEST_CASE("euler characteristics of symmetric powers follow the binomial series")
{
    /* sum_k chi(Sym^k a) t^k = (1-t)^{-chi(a)}, checked to order 5 */
    std::mt19937_64 gen(59);
    std::vector<BigradedTable> samples{complex_torus_table(2), complex_torus_table(1),
                                       BigradedTable::single(0, 0, 2),
                                       BigradedTable::single(1, 0, 1)};
    for (int i = 0; i < 6; ++i)
        samples.push_back(random_table(gen, 4, 2, 3));
    for (const BigradedTable& a : samples) {
        const Integer chi = a.euler_characteristic();
        for (int k = 0; k <= 5; ++k)
            CHECK(symmetric_power(a, k).euler_characteristic() == binomial(chi + k - 1, k));
    }
    for (int k = 1; k <= 5; ++k)
        CHECK(symmetric_power(complex_torus_table(2), k).euler_characteristic() == 0);
}

TEST_CASE("domination helper")
{
    const BigradedTable a = complex_torus_table(2);
    CHECK(dominates(a, BigradedTable::point()));
    CHECK(!dominates(BigradedTable::point(), a));
    CHECK(dominates(a, a));
}
