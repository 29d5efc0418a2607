#include "specht/enumeration.hpp"

#include <stdexcept>

namespace specht {

PartitionRange::PartitionRange(long long n) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("cannot enumerate partitions of a negative number");
}

PartitionRange::iterator::iterator(long long n) : end_(false) {
    if (n > 0)
        parts_.push_back(static_cast<int>(n));
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
    // Successor in decreasing lex order: drop trailing 1s, decrement the last
    // part above 1, refill greedily with chunks no larger than it.
    long long spare = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++spare;
    }
    if (parts_.empty()) {
        end_ = true;
        return *this;
    }
    int cap = --parts_.back();
    ++spare;
    while (spare > cap) {
        parts_.push_back(cap);
        spare -= cap;
    }
    if (spare > 0)
        parts_.push_back(static_cast<int>(spare));
    return *this;
}

void for_each_partition(long long n, const std::function<void(const Partition&)>& fn) {
    PartitionRange range(n);
    for (auto it = range.begin(); it != range.end(); ++it)
        fn(it.partition());
}

std::vector<Partition> enumerate_partitions(long long n, const PartitionPredicate& filter) {
    std::vector<Partition> out;
    PartitionRange range(n);
    for (auto it = range.begin(); it != range.end(); ++it) {
        Partition mu = it.partition();
        if (!filter || filter(mu))
            out.push_back(std::move(mu));
    }
    return out;
}

}  // namespace specht
