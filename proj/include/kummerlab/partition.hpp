#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kummerlab {

/* Partition of a positive integer `total`, stored as a multiplicity vector
 * (nu_1, ..., nu_r): nu_i is the number of parts equal to i and r is the
 * largest part, so sum i*nu_i = total and the last entry is nonzero.
 * Constructors accept either representation and normalize. */
class Partition {
public:
    static Partition from_parts(const std::vector<int>& parts);
    static Partition from_multiplicities(std::vector<int> multiplicities);

    const std::vector<int>& multiplicities() const { return mult_; }
    std::vector<int> parts() const; // descending part list
    int total() const { return total_; }
    int largest_part() const { return static_cast<int>(mult_.size()); }

    int weight() const;     // |nu| = number of parts
    int part_gcd() const;   // d(nu) = gcd of the distinct part sizes
    Partition reduced() const; // every part divided by part_gcd()

    std::string to_string() const; // "[3,1,1]"

    bool operator==(const Partition& o) const { return mult_ == o.mult_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    Partition() = default;
    std::vector<int> mult_;
    int total_ = 0;
};

struct PartitionStats {
    int weight;
    int gcd;
    Partition reduced;
};

PartitionStats partition_stats(const Partition& nu);

/* All partitions of `total` in descending-lexicographic order on the part
 * lists: (total) first, (1,...,1) last. Iterative; no recursion in `total`.
 * Throws std::domain_error for total < 1. */
std::vector<Partition> enumerate_partitions(int total);

/* Smallest prime dividing m; throws std::domain_error for m < 2. */
long smallest_prime_divisor(long m);

struct SmallestFactorCheck {
    bool holds;
    std::optional<Partition> counterexample; // first offender, if any
};

/* Checks that every partition of `total` with more than total/j parts has
 * part gcd 1, where j is the smallest prime dividing total. The
 * counterexample slot is provided for harness symmetry; no input is known
 * to fail. */
SmallestFactorCheck verify_smallest_factor_lemma(int total);

} // namespace kummerlab
