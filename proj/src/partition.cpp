#include "kummerlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kummerlab {

Partition Partition::from_parts(const std::vector<int>& parts)
{
    if (parts.empty())
        throw std::domain_error("Partition: at least one part required");
    int largest = 0;
    for (int p : parts) {
        if (p < 1)
            throw std::domain_error("Partition: parts must be positive");
        largest = std::max(largest, p);
    }
    std::vector<int> mult(static_cast<size_t>(largest), 0);
    long total = 0;
    for (int p : parts) {
        ++mult[static_cast<size_t>(p) - 1];
        total += p;
    }
    Partition nu;
    nu.mult_ = std::move(mult);
    nu.total_ = static_cast<int>(total);
    return nu;
}

Partition Partition::from_multiplicities(std::vector<int> multiplicities)
{
    while (!multiplicities.empty() && multiplicities.back() == 0)
        multiplicities.pop_back();
    if (multiplicities.empty())
        throw std::domain_error("Partition: empty multiplicity vector");
    long total = 0;
    for (size_t i = 0; i < multiplicities.size(); ++i) {
        if (multiplicities[i] < 0)
            throw std::domain_error("Partition: negative multiplicity");
        total += static_cast<long>(i + 1) * multiplicities[i];
    }
    Partition nu;
    nu.mult_ = std::move(multiplicities);
    nu.total_ = static_cast<int>(total);
    return nu;
}

std::vector<int> Partition::parts() const
{
    std::vector<int> out;
    for (int i = static_cast<int>(mult_.size()); i >= 1; --i)
        for (int c = 0; c < mult_[static_cast<size_t>(i) - 1]; ++c)
            out.push_back(i);
    return out;
}

int Partition::weight() const
{
    return std::accumulate(mult_.begin(), mult_.end(), 0);
}

int Partition::part_gcd() const
{
    int g = 0;
    for (size_t i = 0; i < mult_.size(); ++i)
        if (mult_[i] != 0)
            g = std::gcd(g, static_cast<int>(i + 1));
    return g;
}

Partition Partition::reduced() const
{
    const int d = part_gcd();
    std::vector<int> mult(mult_.size() / static_cast<size_t>(d), 0);
    for (size_t i = 0; i < mult_.size(); ++i)
        if (mult_[i] != 0)
            mult[(i + 1) / static_cast<size_t>(d) - 1] = mult_[i];
    return from_multiplicities(std::move(mult));
}

std::string Partition::to_string() const
{
    std::string s = "[";
    bool first = true;
    for (int p : parts()) {
        if (!first)
            s += ",";
        s += std::to_string(p);
        first = false;
    }
    return s + "]";
}

PartitionStats partition_stats(const Partition& nu)
{
    return PartitionStats{nu.weight(), nu.part_gcd(), nu.reduced()};
}

std::vector<Partition> enumerate_partitions(int total)
{
    if (total < 1)
        throw std::domain_error("enumerate_partitions: total must be >= 1");
    std::vector<Partition> out;
    std::vector<int> parts{total};
    for (;;) {
        out.push_back(Partition::from_parts(parts));
        /* Decrement the rightmost part above 1 and redistribute the tail
         * greedily; this yields the descending-lex successor. */
        int i = static_cast<int>(parts.size()) - 1;
        while (i >= 0 && parts[static_cast<size_t>(i)] == 1)
            --i;
        if (i < 0)
            break;
        int tail = parts[static_cast<size_t>(i)] + (static_cast<int>(parts.size()) - 1 - i);
        const int cap = parts[static_cast<size_t>(i)] - 1;
        parts.resize(static_cast<size_t>(i));
        while (tail > 0) {
            const int next = std::min(cap, tail);
            parts.push_back(next);
            tail -= next;
        }
    }
    return out;
}

long smallest_prime_divisor(long m)
{
    if (m < 2)
        throw std::domain_error("smallest_prime_divisor: argument must be >= 2");
    if (m % 2 == 0)
        return 2;
    for (long d = 3; d * d <= m; d += 2)
        if (m % d == 0)
            return d;
    return m;
}

SmallestFactorCheck verify_smallest_factor_lemma(int total)
{
    if (total < 2)
        throw std::domain_error("verify_smallest_factor_lemma: total must be >= 2");
    const long j = smallest_prime_divisor(total);
    for (const Partition& nu : enumerate_partitions(total)) {
        if (static_cast<long>(nu.weight()) * j > total && nu.part_gcd() != 1)
            return SmallestFactorCheck{false, nu};
    }
    return SmallestFactorCheck{true, std::nullopt};
}

} // namespace kummerlab
