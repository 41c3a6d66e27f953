#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kummerlab/integer.hpp"

namespace kummerlab {

struct Bidegree {
    int p = 0;
    int q = 0;
    int total() const { return p + q; }
    friend bool operator==(Bidegree a, Bidegree b) { return a.p == b.p && a.q == b.q; }
};

/* Orders bidegrees by total degree, then by p. This is both the iteration
 * order of every table and the elimination order used by exact_divide. */
struct BidegreeOrder {
    bool operator()(Bidegree a, Bidegree b) const
    {
        if (a.total() != b.total())
            return a.total() < b.total();
        return a.p < b.p;
    }
};

/* Sparse table of Hodge numbers: finitely many bidegrees (p,q) carry a
 * positive arbitrary-precision dimension, all other bidegrees are zero.
 * Dimensions are never narrowed to machine words. */
class BigradedTable {
public:
    using Map = std::map<Bidegree, Integer, BidegreeOrder>;

    BigradedTable() = default;

    static BigradedTable point();
    static BigradedTable single(int p, int q, Integer dim);

    /* Accumulates dim at (p,q). Entries must stay non-negative; zeros are
     * pruned. */
    void add(int p, int q, const Integer& dim);

    const Map& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    Integer dim(int p, int q) const;

    Integer betti(int k) const;                      // sum over p+q = k
    std::vector<Integer> betti_profile(int lo, int hi) const;
    std::vector<Integer> betti_profile() const;      // min..max total degree
    Integer total_dimension() const;
    Integer euler_characteristic() const;

    int min_total_degree() const; // throws std::logic_error on an empty table
    int max_total_degree() const;

    bool operator==(const BigradedTable& o) const { return entries_ == o.entries_; }
    bool operator!=(const BigradedTable& o) const { return !(*this == o); }

private:
    Map entries_;
};

struct NotDivisibleError : std::runtime_error {
    explicit NotDivisibleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

/* h^{p,q} = C(g,p) C(g,q) for 0 <= p,q <= g: the exterior algebra on the
 * degree-one cohomology of a g-dimensional complex torus. */
BigradedTable complex_torus_table(int g);

/* Kuenneth convolution: h^{p,q} = sum h^{p1,q1}(a) h^{p-p1,q-q1}(b). */
BigradedTable tensor_product(const BigradedTable& a, const BigradedTable& b);

/* Twist by m: the entry at (p,q) moves to (p-m, q-m). */
BigradedTable tate_twist(const BigradedTable& a, int m);

/* Degree-k component of the free graded-commutative algebra on a: entries
 * of even total degree contribute symmetric powers, odd entries exterior
 * powers. Computed as the t^k coefficient of
 *   prod_{p+q even} (1 - t x^p y^q)^{-h^{p,q}}
 * * prod_{p+q odd}  (1 + t x^p y^q)^{h^{p,q}}. */
BigradedTable symmetric_power(const BigradedTable& a, int k);

/* Exact quotient under tensor_product. Requires the divisor's minimal
 * entry (in BidegreeOrder) to be 1; throws NotDivisibleError when no exact
 * non-negative quotient exists. */
BigradedTable exact_divide(const BigradedTable& num, const BigradedTable& den);

/* Independent reference for symmetric_power on small inputs: enumerates
 * the degree-k monomials directly as multisets of basis slots in which
 * odd-degree slots appear at most once. Requires k <= 4 and total
 * dimension <= 32; throws BudgetExceededError past 1e8 monomials. */
BigradedTable sym_bruteforce_oracle(const BigradedTable& a, int k);

bool hodge_symmetric(const BigradedTable& a);               // h^{p,q} == h^{q,p}
bool poincare_dual(const BigradedTable& a, int complex_dim); // h^{p,q} == h^{d-p,d-q}
bool dominates(const BigradedTable& upper, const BigradedTable& lower); // entrywise >=

} // namespace kummerlab
