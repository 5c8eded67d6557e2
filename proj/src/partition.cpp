#include "pcert/partition.hpp"

#include <fstream>

#include "pcert/errors.hpp"

namespace pcert {

const Int& PartitionTable::at(long n) const {
    if (n < 0 || n > n_max()) {
        throw RangeError("partition table covers 0.." + std::to_string(n_max()) +
                         ", asked for " + std::to_string(n));
    }
    return values[static_cast<size_t>(n)];
}

PartitionTable p_pentagonal_table(long n_max) {
    if (n_max < 0) throw DomainError("p_pentagonal_table: n_max must be >= 0");
    PartitionTable t;
    t.values.resize(static_cast<size_t>(n_max) + 1);
    t.values[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        Int acc(0);
        for (long k = 1;; ++k) {
            long g1 = n - k * (3 * k - 1) / 2;
            long g2 = n - k * (3 * k + 1) / 2;
            if (g1 < 0) break;
            if (k % 2 == 1) {
                acc += t.values[static_cast<size_t>(g1)];
                if (g2 >= 0) acc += t.values[static_cast<size_t>(g2)];
            } else {
                acc -= t.values[static_cast<size_t>(g1)];
                if (g2 >= 0) acc -= t.values[static_cast<size_t>(g2)];
            }
        }
        t.values[static_cast<size_t>(n)] = acc;
    }
    return t;
}

Int p_dp_oracle(long n) {
    if (n < 0) throw DomainError("p_dp_oracle: n must be >= 0");
    std::vector<Int> ways(static_cast<size_t>(n) + 1);
    ways[0] = 1;
    for (long part = 1; part <= n; ++part) {
        for (long v = part; v <= n; ++v) {
            ways[static_cast<size_t>(v)] += ways[static_cast<size_t>(v - part)];
        }
    }
    return ways[static_cast<size_t>(n)];
}

bool log_concave_exact(long n, const PartitionTable& table) {
    if (n < 1 || n + 1 > table.n_max()) {
        throw RangeError("log_concave_exact needs table covering n-1..n+1");
    }
    const Int& pm = table.at(n - 1);
    const Int& p0 = table.at(n);
    const Int& pp = table.at(n + 1);
    return p0 * p0 >= pm * pp;
}

void save_table(const PartitionTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw RangeError("cannot open cache file for writing: " + path);
    for (const Int& v : table.values) out << v.get_str() << '\n';
}

bool load_table(PartitionTable& table, const std::string& path, long n_max) {
    std::ifstream in(path);
    if (!in) return false;
    PartitionTable t;
    t.values.reserve(static_cast<size_t>(n_max) + 1);
    std::string line;
    while (static_cast<long>(t.values.size()) <= n_max && std::getline(in, line)) {
        if (line.empty()) continue;
        t.values.emplace_back(line);
    }
    if (static_cast<long>(t.values.size()) <= n_max) return false;
    if (t.values.empty() || t.values[0] != 1) return false;
    if (t.values.size() >= 2 && t.values[1] != 1) return false;
    table = std::move(t);
    return true;
}

} // namespace pcert
