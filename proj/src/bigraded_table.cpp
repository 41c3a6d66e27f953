#include "kummerlab/bigraded_table.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>

namespace kummerlab {

BigradedTable BigradedTable::point()
{
    return single(0, 0, 1);
}

BigradedTable BigradedTable::single(int p, int q, Integer dim)
{
    BigradedTable t;
    t.add(p, q, dim);
    return t;
}

void BigradedTable::add(int p, int q, const Integer& dim)
{
    if (dim == 0)
        return;
    const auto it = entries_.find(Bidegree{p, q});
    const Integer updated = (it == entries_.end() ? dim : Integer(it->second + dim));
    if (updated < 0)
        throw std::logic_error("BigradedTable: negative dimension at (" + std::to_string(p) +
                               "," + std::to_string(q) + ")");
    if (it == entries_.end())
        entries_.emplace(Bidegree{p, q}, updated);
    else if (updated == 0)
        entries_.erase(it);
    else
        it->second = updated;
}

Integer BigradedTable::dim(int p, int q) const
{
    auto it = entries_.find(Bidegree{p, q});
    return it == entries_.end() ? Integer(0) : it->second;
}

Integer BigradedTable::betti(int k) const
{
    Integer b = 0;
    for (const auto& [pos, d] : entries_)
        if (pos.total() == k)
            b += d;
    return b;
}

std::vector<Integer> BigradedTable::betti_profile(int lo, int hi) const
{
    std::vector<Integer> out(static_cast<size_t>(hi - lo + 1), Integer(0));
    for (const auto& [pos, d] : entries_) {
        const int k = pos.total();
        if (k >= lo && k <= hi)
            out[static_cast<size_t>(k - lo)] += d;
    }
    return out;
}

std::vector<Integer> BigradedTable::betti_profile() const
{
    if (empty())
        return {};
    return betti_profile(min_total_degree(), max_total_degree());
}

Integer BigradedTable::total_dimension() const
{
    Integer t = 0;
    for (const auto& [pos, d] : entries_)
        t += d;
    return t;
}

Integer BigradedTable::euler_characteristic() const
{
    Integer chi = 0;
    for (const auto& [pos, d] : entries_) {
        if (pos.total() % 2 == 0)
            chi += d;
        else
            chi -= d;
    }
    return chi;
}

int BigradedTable::min_total_degree() const
{
    if (empty())
        throw std::logic_error("BigradedTable: degree of an empty table");
    return entries_.begin()->first.total();
}

int BigradedTable::max_total_degree() const
{
    if (empty())
        throw std::logic_error("BigradedTable: degree of an empty table");
    return entries_.rbegin()->first.total();
}

BigradedTable complex_torus_table(int g)
{
    if (g < 0)
        throw std::domain_error("complex_torus_table: g must be >= 0");
    BigradedTable t;
    for (int p = 0; p <= g; ++p)
        for (int q = 0; q <= g; ++q)
            t.add(p, q, binomial(g, p) * binomial(g, q));
    return t;
}

BigradedTable tensor_product(const BigradedTable& a, const BigradedTable& b)
{
    BigradedTable out;
    for (const auto& [pa, da] : a.entries())
        for (const auto& [pb, db] : b.entries())
            out.add(pa.p + pb.p, pa.q + pb.q, da * db);
    return out;
}

BigradedTable tate_twist(const BigradedTable& a, int m)
{
    BigradedTable out;
    for (const auto& [pos, d] : a.entries())
        out.add(pos.p - m, pos.q - m, d);
    return out;
}

namespace {

void add_scaled_shifted(BigradedTable& dst, const BigradedTable& src, int dp, int dq,
                        const Integer& scale)
{
    for (const auto& [pos, d] : src.entries())
        dst.add(pos.p + dp, pos.q + dq, d * scale);
}

} // namespace

BigradedTable symmetric_power(const BigradedTable& a, int k)
{
    if (k < 0)
        throw std::domain_error("symmetric_power: k must be >= 0");
    std::vector<BigradedTable> acc(static_cast<size_t>(k) + 1);
    acc[0] = BigradedTable::point();
    for (const auto& [pos, h] : a.entries()) {
        const bool odd = ((pos.total() % 2) + 2) % 2 == 1;
        /* t^j coefficient of the factor attached to this entry:
         * C(h+j-1, j) for an even generator block, C(h, j) for odd */
        std::vector<Integer> f(static_cast<size_t>(k) + 1);
        f[0] = 1;
        for (long j = 1; j <= k; ++j) {
            Integer numer = h;
            if (odd)
                numer -= j - 1;
            else
                numer += j - 1;
            f[static_cast<size_t>(j)] = f[static_cast<size_t>(j) - 1] * numer / j;
        }
        std::vector<BigradedTable> next(static_cast<size_t>(k) + 1);
        for (int t = 0; t <= k; ++t)
            for (int j = 0; j <= t; ++j)
                if (f[static_cast<size_t>(j)] != 0)
                    add_scaled_shifted(next[static_cast<size_t>(t)],
                                       acc[static_cast<size_t>(t - j)], j * pos.p, j * pos.q,
                                       f[static_cast<size_t>(j)]);
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(k)];
}

BigradedTable exact_divide(const BigradedTable& num, const BigradedTable& den)
{
    if (den.empty())
        throw std::invalid_argument("exact_divide: empty divisor");
    const auto lead = den.entries().begin();
    if (lead->second != 1)
        throw std::invalid_argument(
            "exact_divide: divisor must have dimension 1 at its minimal bidegree");
    if (num.empty())
        return {};

    /* Coordinate box that any exact quotient must occupy: extremal p and q
     * coordinates of a product are sums of the factors' extremes. */
    const auto box = [](const BigradedTable& t) {
        int pmin = std::numeric_limits<int>::max(), pmax = std::numeric_limits<int>::min();
        int qmin = pmin, qmax = pmax;
        for (const auto& [pos, d] : t.entries()) {
            pmin = std::min(pmin, pos.p);
            pmax = std::max(pmax, pos.p);
            qmin = std::min(qmin, pos.q);
            qmax = std::max(qmax, pos.q);
        }
        return std::array<int, 4>{pmin, pmax, qmin, qmax};
    };
    const auto nb = box(num);
    const auto db = box(den);

    BigradedTable::Map rem(num.entries().begin(), num.entries().end());
    BigradedTable quot;
    const Bidegree lead_pos = lead->first;
    while (!rem.empty()) {
        const auto it = rem.begin();
        const Bidegree pos = it->first;
        const Integer c = it->second;
        if (c < 0)
            throw NotDivisibleError("exact_divide: negative coefficient at (" +
                                    std::to_string(pos.p) + "," + std::to_string(pos.q) + ")");
        const Bidegree qpos{pos.p - lead_pos.p, pos.q - lead_pos.q};
        if (qpos.p < nb[0] - db[0] || qpos.p > nb[1] - db[1] || qpos.q < nb[2] - db[2] ||
            qpos.q > nb[3] - db[3])
            throw NotDivisibleError("exact_divide: remainder escapes the quotient support");
        quot.add(qpos.p, qpos.q, c);
        for (const auto& [dpos, dval] : den.entries()) {
            const Bidegree r{qpos.p + dpos.p, qpos.q + dpos.q};
            auto [jt, inserted] = rem.try_emplace(r, 0);
            jt->second -= c * dval;
            if (jt->second == 0)
                rem.erase(jt);
        }
    }
    return quot;
}

BigradedTable sym_bruteforce_oracle(const BigradedTable& a, int k)
{
    if (k < 0 || k > 4)
        throw std::domain_error("sym_bruteforce_oracle: k must be in [0,4]");
    if (a.total_dimension() > 32)
        throw std::domain_error("sym_bruteforce_oracle: total dimension must be <= 32");

    std::vector<Bidegree> slots;
    for (const auto& [pos, d] : a.entries())
        for (Integer i = 0; i < d; ++i)
            slots.push_back(pos);
    if (binomial(Integer(slots.size()) + k - 1, k) > Integer(100000000))
        throw BudgetExceededError("sym_bruteforce_oracle: more than 1e8 monomials");

    BigradedTable out;
    const int n = static_cast<int>(slots.size());
    std::function<void(int, int, int, int)> visit = [&](int start, int remaining, int psum,
                                                        int qsum) {
        if (remaining == 0) {
            out.add(psum, qsum, 1);
            return;
        }
        for (int i = start; i < n; ++i) {
            const bool odd = ((slots[static_cast<size_t>(i)].total() % 2) + 2) % 2 == 1;
            visit(odd ? i + 1 : i, remaining - 1, psum + slots[static_cast<size_t>(i)].p,
                  qsum + slots[static_cast<size_t>(i)].q);
        }
    };
    visit(0, k, 0, 0);
    return out;
}

bool hodge_symmetric(const BigradedTable& a)
{
    for (const auto& [pos, d] : a.entries())
        if (a.dim(pos.q, pos.p) != d)
            return false;
    return true;
}

bool poincare_dual(const BigradedTable& a, int complex_dim)
{
    for (const auto& [pos, d] : a.entries())
        if (a.dim(complex_dim - pos.p, complex_dim - pos.q) != d)
            return false;
    return true;
}

bool dominates(const BigradedTable& upper, const BigradedTable& lower)
{
    for (const auto& [pos, d] : lower.entries())
        if (upper.dim(pos.p, pos.q) < d)
            return false;
    return true;
}

} // namespace kummerlab
