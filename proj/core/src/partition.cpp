#include "csanyon/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace csanyon {

int partition_weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition make_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  if (!is_partition(parts)) throw std::invalid_argument("nonpositive part");
  return parts;
}

std::map<int, int> part_multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int x : p) ++m[x];
  return m;
}

bool partition_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Partition> partitions_of_max_len(int d, int max_len) {
  if (d < 0) return {};
  std::vector<Partition> out;
  Partition cur;
  // Weakly decreasing parts, bounded length.
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(d, d);
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

std::vector<Partition> partitions_of(int d) {
  return partitions_of_max_len(d, d < 0 ? 0 : d);
}

bool dominates(const Partition& a, const Partition& b) {
  if (partition_weight(a) != partition_weight(b)) return false;
  int sa = 0, sb = 0;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

}  // namespace csanyon
