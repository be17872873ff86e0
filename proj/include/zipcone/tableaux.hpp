#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zipcone {

// Weakly decreasing nonnegative parts; trailing zeros allowed.
using Partition = std::vector<long long>;

bool is_partition(const Partition& mu);
long long partition_size(const Partition& mu);
Partition conjugate(const Partition& mu);

// Semistandard Young tableau of a given shape with entries in 1..n:
// rows weakly increase, columns strictly increase.
struct Tableau {
    Partition shape;
    std::vector<std::vector<uint8_t>> rows;

    // Count of each value 1..n.
    std::vector<long long> content(std::size_t n) const;
    // Entries of the c-th column (0-based), top to bottom.
    std::vector<uint8_t> column(std::size_t c) const;
    bool is_semistandard() const;
    std::string to_string() const;
};

// All SSYT of shape mu with entries in 1..n, generated in a fixed
// row-major lexicographic order.
std::vector<Tableau> enumerate_ssyt(const Partition& mu, std::size_t n);

// Number of SSYT of shape mu with entries in 1..n by the hook content
// formula (exact integer arithmetic).
unsigned long long hook_content_count(const Partition& mu, std::size_t n);

}  // namespace zipcone
