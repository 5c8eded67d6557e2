#pragma once

#include <string>
#include <vector>

#include "pcert/rational.hpp"

namespace pcert {

// Dense table of exact partition numbers p(0..n_max). Immutable once built;
// safe to share across sweep workers.
struct PartitionTable {
    std::vector<Int> values;

    long n_max() const { return static_cast<long>(values.size()) - 1; }
    const Int& at(long n) const;
};

// Euler's pentagonal-number recurrence
// p(n) = sum_{k>=1} (-1)^(k+1) [p(n-k(3k-1)/2) + p(n-k(3k+1)/2)], p(m<0)=0.
PartitionTable p_pentagonal_table(long n_max);

// Coin-counting dynamic program over part sizes 1..n; algorithmically
// disjoint from the pentagonal recurrence, used as the second oracle.
Int p_dp_oracle(long n);

// p(n)^2 >= p(n-1) p(n+1), decided in exact integer arithmetic.
bool log_concave_exact(long n, const PartitionTable& table);

// cache format: one decimal integer per line, line index = n
void save_table(const PartitionTable& table, const std::string& path);
bool load_table(PartitionTable& table, const std::string& path, long n_max);

} // namespace pcert
