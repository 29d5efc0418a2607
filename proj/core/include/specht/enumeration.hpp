#pragma once

#include <functional>
#include <vector>

#include "specht/partition.hpp"

namespace specht {

using PartitionPredicate = std::function<bool(const Partition&)>;

/* Range over all partitions of n in lexicographically decreasing order,
 * starting at (n) and ending at (1^n).  Single-consumer; copy the iterator
 * to fork.
 */
class PartitionRange {
public:
    explicit PartitionRange(long long n);

    class iterator {
    public:
        iterator() = default;  // end
        explicit iterator(long long n);

        const std::vector<int>& operator*() const { return parts_; }
        Partition partition() const { return Partition(parts_); }

        iterator& operator++();
        friend bool operator==(const iterator& a, const iterator& b) {
            if (a.end_ || b.end_)
                return a.end_ && b.end_;
            return a.parts_ == b.parts_;
        }

    private:
        std::vector<int> parts_;
        bool end_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    long long n_;
};

void for_each_partition(long long n, const std::function<void(const Partition&)>& fn);

// Materialized enumeration, optionally filtered; order as above.
std::vector<Partition> enumerate_partitions(long long n,
                                            const PartitionPredicate& filter = {});

}  // namespace specht
