#include "gebs/partitions.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace gebs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("Partition: parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be non-increasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition{};
  std::vector<int> out(static_cast<size_t>(parts_[0]), 0);
  for (int col = 0; col < parts_[0]; ++col) {
    int count = 0;
    for (int p : parts_) {
      if (p > col) ++count;
    }
    out[static_cast<size_t>(col)] = count;
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  s += ")";
  return s;
}

size_t PartitionHash::operator()(const Partition& p) const noexcept {
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : p.parts()) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Partition> partitions_of(int k, int max_parts) {
  if (k < 0) throw std::invalid_argument("partitions_of: k must be >= 0");
  if (max_parts < 1) {
    throw std::invalid_argument("partitions_of: max_parts must be >= 1");
  }
  std::vector<Partition> out;
  std::vector<int> current;

  // Descending lexicographic order falls out of always trying the largest
  // admissible next part first.
  std::function<void(int, int, int)> rec = [&](int remaining, int largest,
                                               int slots) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (slots == 0) return;
    // The next part must be big enough that the remaining slots can absorb
    // what is left.
    int low = (remaining + slots - 1) / slots;
    for (int p = std::min(largest, remaining); p >= low; --p) {
      current.push_back(p);
      rec(remaining - p, p, slots - 1);
      current.pop_back();
    }
  };
  rec(k, k, max_parts);
  return out;
}

}  // namespace gebs
