#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kummerlab/bigraded_table.hpp"
#include "kummerlab/partition.hpp"

namespace kummerlab {

/* One stratum term of the partition decomposition of the length-(n+1)
 * product cohomology: the table of A^(nu) with its copy count (one copy per
 * d(nu)-torsion point) and its placement shift. */
struct GSSummand {
    Partition partition;
    long d = 1;                 // gcd of the part sizes
    long m = 1;                 // (n+1)/d
    Integer copies;             // d^4
    Integer invariant_copies;   // 1: the trivial isotype of the regular representation
    BigradedTable base_table;   // tensor product of symmetric powers of the surface table
    long degree_offset = 0;     // 2(n+1) - 2|nu|
};

struct LscReport {
    long n = 0;
    long j = 0;     // smallest prime dividing n+1
    long bound = 0; // 2(n+1)(j-1)/j; the hard-Lefschetz degrees proven are 0 <= k < bound
    long min_noninvariant_degree = 0;
    bool full_lsc = false; // n+1 prime
    std::optional<Integer> middle_noninvariant_dim; // (n+1)^4 - 1 when n+1 prime
};

enum class ProductRoute {
    automatic,           // summands for small totals, generating function past them
    summands,            // literal sum over the partition strata
    generating_function, // Euler-product convolution; same output
};

/* Memoized table of the k-th symmetric power of the abelian-surface table
 * (complex_torus_table(2)); thread safe, referentially transparent. */
const BigradedTable& torus_symmetric_power(int k);

/* Table of A^(nu) = prod_i Sym^{nu_i}(A). */
BigradedTable symmetric_product_table(const Partition& nu);

/* One summand per partition of n+1, in enumerate_partitions order. */
std::vector<GSSummand> gs_summands(long n);

/* Table of A x Kum_n: sum over summands of (copies, or one copy in
 * invariant-only mode) times the base table twisted by |nu| - (n+1).
 * Supported in total degrees [0, 4n+4]. */
BigradedTable product_cohomology(long n, bool invariant_only, int threads = 1,
                                 ProductRoute route = ProductRoute::automatic);

/* Exact quotients of the product table by the surface table; supported in
 * total degrees [0, 4n]. */
BigradedTable kummer_cohomology(long n, int threads = 1);
BigradedTable invariant_kummer_cohomology(long n, int threads = 1);

/* Degreewise Betti difference full - invariant; keys with value 0 omitted. */
std::map<int, Integer> noninvariant_profile(long n, int threads = 1);

/* Table of the Hilbert scheme of m points on the surface:
 * sum over partitions of m of the A^(nu) table twisted by |nu| - m. */
BigradedTable hilbert_scheme_cohomology(long m, int threads = 1);

/* Table of the ambient moduli space: torus(4) tensor the invariant
 * quotient; supported in total degrees [0, 4n+8]. */
BigradedTable moduli_cohomology(long n, int threads = 1);

LscReport lsc_report(long n, int threads = 1);

} // namespace kummerlab
