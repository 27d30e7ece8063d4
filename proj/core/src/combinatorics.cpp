#include "logbps/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace logbps {

int Partition::sum() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    out += ")";
    return out;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition{prefix});
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d)
{
    if (d <= 0) throw std::domain_error("partitions_of: d must be positive");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(d, d, prefix, out);
    return out;
}

Integer aut_order(const Partition& p)
{
    Integer order = 1;
    std::size_t i = 0;
    while (i < p.parts.size()) {
        std::size_t j = i;
        while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
        order *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return order;
}

int mobius(std::int64_t n)
{
    if (n <= 0) throw std::domain_error("mobius: n must be positive");
    int prime_count = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;  // squareful
        ++prime_count;
    }
    if (n > 1) ++prime_count;
    return prime_count % 2 == 0 ? 1 : -1;
}

Integer gen_binomial(std::int64_t top, int k)
{
    if (k < 0) throw std::domain_error("gen_binomial: k must be non-negative");
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), Integer(top).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(int n)
{
    if (n < 0) throw std::domain_error("factorial: n must be non-negative");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer multinomial(const std::vector<int>& parts)
{
    int total = 0;
    for (int a : parts) {
        if (a < 0) throw std::domain_error("multinomial: entries must be non-negative");
        total += a;
    }
    Integer r = factorial(total);
    for (int a : parts) r /= factorial(a);
    return r;
}

}  // namespace logbps
