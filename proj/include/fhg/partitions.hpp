#pragma once

// Set-partition enumeration in restricted-growth-string order.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhg/game.hpp"

namespace fhg {

inline constexpr int default_enumeration_bound = 13;

// Bell number B(n); exact up to n = 25.
inline std::uint64_t bell_number(int n)
{
    if (n < 0 || n > 25) {
        throw std::out_of_range("bell number out of range");
    }
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) {
            next.push_back(next.back() + v);
        }
        row = std::move(next);
    }
    return row.front();
}

// Walks every partition of {0..n-1} exactly once. The restricted growth
// string a satisfies a[0] = 0 and a[i] <= 1 + max(a[0..i-1]); the first
// string is all zeros (the grand coalition).
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n, int bound = default_enumeration_bound) : rgs_(n, 0), prefix_max_(n, 0)
    {
        if (n <= 0) {
            throw std::invalid_argument("enumeration needs at least one player");
        }
        if (n > bound) {
            throw std::invalid_argument("refusing to enumerate partitions of " + std::to_string(n) +
                                        " players (bound " + std::to_string(bound) +
                                        "); use a budgeted blocking search instead");
        }
    }

    const std::vector<int>& labels() const noexcept { return rgs_; }
    Partition partition() const { return Partition::from_labels(rgs_); }

    // Advance to the next string; false once every partition has been produced.
    bool next()
    {
        const int n = static_cast<int>(rgs_.size());
        for (int i = n - 1; i > 0; --i) {
            if (rgs_[i] <= prefix_max_[i - 1]) {
                ++rgs_[i];
                prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
                for (int j = i + 1; j < n; ++j) {
                    rgs_[j] = 0;
                    prefix_max_[j] = prefix_max_[i];
                }
                return true;
            }
        }
        return false;
    }

private:
    std::vector<int> rgs_;
    std::vector<int> prefix_max_;
};

// Calls fn(const Partition&) for each partition; stops early when fn returns false.
template <typename Fn>
void for_each_partition(int n, Fn&& fn, int bound = default_enumeration_bound)
{
    PartitionEnumerator e(n, bound);
    do {
        if (!fn(e.partition())) {
            return;
        }
    } while (e.next());
}

}  // namespace fhg
