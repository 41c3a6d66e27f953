#include "kummerlab/gs_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace kummerlab {

namespace {

constexpr long kSummandRouteLimit = 24; // totals past this use the product formula

Integer fourth_power(long x)
{
    Integer b = x;
    b *= x;
    return b * b;
}

void add_table(BigradedTable& dst, const BigradedTable& src, const Integer& scale)
{
    for (const auto& [pos, d] : src.entries())
        dst.add(pos.p, pos.q, d * scale);
}

/* Jordan totient J4: sum over e | d of J4(e) = d^4. */
Integer jordan_totient4(long e)
{
    Integer out = 1;
    long rest = e;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        long pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
        }
        out *= fourth_power(pk / p) * (fourth_power(p) - 1);
    }
    if (rest > 1)
        out *= fourth_power(rest) - 1;
    return out;
}

/* Sum over partitions nu of `total` of (d(nu)^4 or 1) copies of the A^(nu)
 * table twisted by |nu|, computed term by term over the strata. */
BigradedTable pretwisted_sum_by_summands(long total, bool weight_by_torsion, int threads)
{
    const std::vector<Partition> partitions = enumerate_partitions(static_cast<int>(total));
    torus_symmetric_power(static_cast<int>(total)); // warm the cache before going parallel

    const auto accumulate_range = [&](size_t lo, size_t hi, BigradedTable& out) {
        for (size_t i = lo; i < hi; ++i) {
            const Partition& nu = partitions[i];
            const Integer copies = weight_by_torsion ? fourth_power(nu.part_gcd()) : Integer(1);
            add_table(out, tate_twist(symmetric_product_table(nu), nu.weight()), copies);
        }
    };

    int workers = std::max(threads, 1);
    workers = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(workers), partitions.size()));
    if (workers <= 1) {
        BigradedTable out;
        accumulate_range(0, partitions.size(), out);
        return out;
    }

    /* Fixed chunking and an ordered exact-integer merge keep the result
     * identical for every thread count. */
    std::vector<BigradedTable> partial(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    const size_t chunk = (partitions.size() + static_cast<size_t>(workers) - 1) /
                         static_cast<size_t>(workers);
    for (int w = 0; w < workers; ++w) {
        const size_t lo = static_cast<size_t>(w) * chunk;
        const size_t hi = std::min(partitions.size(), lo + chunk);
        pool.emplace_back(accumulate_range, lo, hi, std::ref(partial[static_cast<size_t>(w)]));
    }
    for (auto& t : pool)
        t.join();
    BigradedTable out;
    for (const auto& part : partial)
        add_table(out, part, 1);
    return out;
}

/* Same sum via the Euler product: the z^total coefficient of
 * prod_{i>=1} sum_c twist(Sym^c, c) z^{ic}. The z-coefficients live on
 * dense (p,q) grids: the convolution is the hot loop, and the grid keeps
 * it free of map insertions. The coefficient at z^t is supported in
 * [-t, t] x [-t, t]. */
BigradedTable pretwisted_sum_by_product(long total)
{
    const int m = static_cast<int>(total);
    const int off = m;
    const int stride = 2 * m + 1;

    std::vector<BigradedTable> factors(static_cast<size_t>(m) + 1);
    for (int c = 0; c <= m; ++c)
        factors[static_cast<size_t>(c)] = tate_twist(torus_symmetric_power(c), c);

    std::vector<std::vector<Integer>> acc(
        static_cast<size_t>(m) + 1,
        std::vector<Integer>(static_cast<size_t>(stride) * static_cast<size_t>(stride)));
    const auto slot = [&](std::vector<Integer>& grid, int p, int q) -> Integer& {
        return grid[static_cast<size_t>(p + off) * static_cast<size_t>(stride) +
                    static_cast<size_t>(q + off)];
    };
    slot(acc[0], 0, 0) = 1;

    for (int i = 1; i <= m; ++i) {
        /* in place, descending degree: acc[t] += sum_{c>=1} acc[t-ic] x S(c) */
        for (int t = m; t >= i; --t)
            for (int c = 1; i * c <= t; ++c) {
                std::vector<Integer>& dst = acc[static_cast<size_t>(t)];
                std::vector<Integer>& src = acc[static_cast<size_t>(t - i * c)];
                const int span = t - i * c;
                for (int p1 = -span; p1 <= span; ++p1)
                    for (int q1 = -span; q1 <= span; ++q1) {
                        const Integer& v1 = slot(src, p1, q1);
                        if (v1 == 0)
                            continue;
                        for (const auto& [pos, v2] : factors[static_cast<size_t>(c)].entries())
                            slot(dst, p1 + pos.p, q1 + pos.q) += v1 * v2;
                    }
            }
    }

    BigradedTable out;
    for (int p = -m; p <= m; ++p)
        for (int q = -m; q <= m; ++q) {
            const Integer& v = slot(acc[static_cast<size_t>(m)], p, q);
            if (v != 0)
                out.add(p, q, v);
        }
    return out;
}

/* Sum over partitions of `total` of (d(nu)^4 or 1) copies of the twisted
 * A^(nu) table, before the overall twist by -total. */
BigradedTable pretwisted_sum(long total, bool weight_by_torsion, int threads,
                             ProductRoute route)
{
    if (route == ProductRoute::automatic)
        route = total <= kSummandRouteLimit ? ProductRoute::summands
                                            : ProductRoute::generating_function;
    if (route == ProductRoute::summands)
        return pretwisted_sum_by_summands(total, weight_by_torsion, threads);
    if (!weight_by_torsion)
        return pretwisted_sum_by_product(total);
    /* d(nu)^4 = sum_{e | d(nu)} J4(e), and the partitions with e dividing
     * every part are the partitions of total/e with the same multiplicities
     * and the same weight, so each divisor contributes the plain sum at
     * total/e. */
    BigradedTable out;
    for (long e = 1; e <= total; ++e) {
        if (total % e != 0)
            continue;
        add_table(out, pretwisted_sum_by_product(total / e), jordan_totient4(e));
    }
    return out;
}

} // namespace

const BigradedTable& torus_symmetric_power(int k)
{
    if (k < 0)
        throw std::domain_error("torus_symmetric_power: k must be >= 0");
    static std::mutex mutex;
    static std::deque<BigradedTable> cache; // deque: growth never moves elements
    std::lock_guard<std::mutex> lock(mutex);
    static const BigradedTable surface = complex_torus_table(2);
    while (static_cast<int>(cache.size()) <= k)
        cache.push_back(symmetric_power(surface, static_cast<int>(cache.size())));
    return cache[static_cast<size_t>(k)];
}

BigradedTable symmetric_product_table(const Partition& nu)
{
    BigradedTable out = BigradedTable::point();
    const auto& mult = nu.multiplicities();
    for (size_t i = 0; i < mult.size(); ++i)
        if (mult[i] > 0)
            out = tensor_product(out, torus_symmetric_power(mult[i]));
    return out;
}

std::vector<GSSummand> gs_summands(long n)
{
    if (n < 0)
        throw std::domain_error("gs_summands: n must be >= 0");
    std::vector<GSSummand> out;
    for (const Partition& nu : enumerate_partitions(static_cast<int>(n) + 1)) {
        const long d = nu.part_gcd();
        out.push_back(GSSummand{nu, d, (n + 1) / d, fourth_power(d), Integer(1),
                                symmetric_product_table(nu), 2 * (n + 1) - 2 * nu.weight()});
    }
    return out;
}

BigradedTable product_cohomology(long n, bool invariant_only, int threads, ProductRoute route)
{
    if (n < 0)
        throw std::domain_error("product_cohomology: n must be >= 0");
    return tate_twist(pretwisted_sum(n + 1, !invariant_only, threads, route),
                      -static_cast<int>(n + 1));
}

BigradedTable kummer_cohomology(long n, int threads)
{
    return exact_divide(product_cohomology(n, false, threads), complex_torus_table(2));
}

BigradedTable invariant_kummer_cohomology(long n, int threads)
{
    return exact_divide(product_cohomology(n, true, threads), complex_torus_table(2));
}

std::map<int, Integer> noninvariant_profile(long n, int threads)
{
    if (n < 1)
        throw std::domain_error("noninvariant_profile: n must be >= 1");
    const BigradedTable full = kummer_cohomology(n, threads);
    const BigradedTable invariant = invariant_kummer_cohomology(n, threads);
    std::map<int, Integer> out;
    for (int k = 0; k <= 4 * static_cast<int>(n); ++k) {
        Integer diff = full.betti(k) - invariant.betti(k);
        if (diff < 0)
            throw std::logic_error("noninvariant_profile: invariant part exceeds the full part");
        if (diff > 0)
            out.emplace(k, std::move(diff));
    }
    return out;
}

BigradedTable hilbert_scheme_cohomology(long m, int threads)
{
    if (m < 1)
        throw std::domain_error("hilbert_scheme_cohomology: m must be >= 1");
    return tate_twist(pretwisted_sum(m, false, threads, ProductRoute::automatic),
                      -static_cast<int>(m));
}

BigradedTable moduli_cohomology(long n, int threads)
{
    if (n < 1)
        throw std::domain_error("moduli_cohomology: n must be >= 1");
    return tensor_product(complex_torus_table(4), invariant_kummer_cohomology(n, threads));
}

LscReport lsc_report(long n, int threads)
{
    if (n < 1)
        throw std::domain_error("lsc_report: n must be >= 1");
    LscReport report;
    report.n = n;
    report.j = smallest_prime_divisor(n + 1);
    report.bound = 2 * ((n + 1) / report.j) * (report.j - 1);
    const auto profile = noninvariant_profile(n, threads);
    if (profile.empty())
        throw std::logic_error("lsc_report: no non-invariant classes found");
    report.min_noninvariant_degree = profile.begin()->first;
    if (report.min_noninvariant_degree < report.bound)
        throw std::logic_error("lsc_report: non-invariant class below the proven degree bound");
    report.full_lsc = (report.j == n + 1);
    if (report.full_lsc)
        report.middle_noninvariant_dim = fourth_power(n + 1) - 1;
    return report;
}

} // namespace kummerlab
