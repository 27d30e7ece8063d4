#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logbps/rational.hpp"

namespace logbps {

/// Partition of a positive integer d. Canonical form: parts sorted
/// non-increasing, every part >= 1, so equal multisets compare equal.
struct Partition {
    std::vector<int> parts;

    int sum() const;
    int count() const { return static_cast<int>(parts.size()); }

    /// "(d1,d2,...)" with parts in canonical order.
    std::string str() const;

    bool operator==(const Partition&) const = default;
};

/// All partitions of d in lexicographic descending order:
/// (d), (d-1,1), ..., (1,...,1). Throws std::domain_error for d <= 0.
std::vector<Partition> partitions_of(int d);

/// |Aut(P)| = prod over distinct part values v of (multiplicity of v)!.
Integer aut_order(const Partition& p);

/// Number-theoretic Moebius function, by trial division.
/// Throws std::domain_error for n <= 0.
int mobius(std::int64_t n);

/// Generalized binomial coefficient prod_{j=0}^{k-1}(top - j) / k! with
/// arbitrary (possibly negative) integer top and k >= 0. Satisfies
/// gen_binomial(-n, k) = (-1)^k gen_binomial(n+k-1, k).
Integer gen_binomial(std::int64_t top, int k);

Integer factorial(int n);

/// (sum parts)! / prod(parts[i]!). All entries must be >= 0.
Integer multinomial(const std::vector<int>& parts);

}  // namespace logbps
