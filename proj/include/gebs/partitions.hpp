#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gebs {

// Ordered integer partition kappa = (k1 >= k2 >= ... >= kl > 0).
// The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Validates that parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  // i is 0-based; returns 0 past the last part, which makes horizontal-strip
  // conditions uniform to write.
  int part_or_zero(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
  }

  // Transpose of the Young diagram. Involution: conjugate(conjugate(p)) == p.
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;

  std::string to_string() const;  // "(2,1)"; "()" for the empty partition

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct PartitionHash {
  size_t operator()(const Partition& p) const noexcept;
};

// All partitions of k with at most max_parts parts, each exactly once, in
// descending lexicographic order. k == 0 yields the single empty partition.
// The fixed ordering keeps downstream series summation reproducible.
std::vector<Partition> partitions_of(int k, int max_parts);

}  // namespace gebs
