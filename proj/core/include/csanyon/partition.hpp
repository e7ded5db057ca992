#pragma once

#include <map>
#include <vector>

namespace csanyon {

// Weakly decreasing positive parts; the empty partition is {}.
using Partition = std::vector<int>;

int partition_weight(const Partition& p);
bool is_partition(const Partition& p);
// Sort a multiset of positive parts into partition form.
Partition make_partition(std::vector<int> parts);
// part value -> multiplicity
std::map<int, int> part_multiplicities(const Partition& p);

// Canonical order used for every basis enumeration and serialization:
// ascending lexicographic on the part vectors, so for weight 2 the order is
// (1,1), (2), and for weight 3 it is (1,1,1), (2,1), (3).
bool partition_less(const Partition& a, const Partition& b);

// All partitions of d (d >= 0) in canonical order.
std::vector<Partition> partitions_of(int d);
// Partitions of d with at most max_len parts, canonical order.
std::vector<Partition> partitions_of_max_len(int d, int max_len);

// Dominance on partitions of equal weight: prefix sums of a >= those of b.
bool dominates(const Partition& a, const Partition& b);

}  // namespace csanyon
