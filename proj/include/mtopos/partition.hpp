#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace mtopos {

/// Union-find over [0, n) with path halving.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  /// Merge the classes of a and b; returns true if they were distinct.
  bool unite(int a, int b);
  bool same(int a, int b) { return find(a) == find(b); }
  int size() const noexcept { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

/// Partition of [0, n) into classes, normalized so that class ids are
/// assigned in order of each class's least member. Class 0 always contains
/// element 0.
class SetPartition {
 public:
  SetPartition() = default;
  static SetPartition from_class_ids(const std::vector<int>& raw);
  static SetPartition from_union_find(UnionFind& uf);
  static SetPartition discrete(int n);
  static SetPartition total(int n);

  int size() const noexcept { return static_cast<int>(class_of_.size()); }
  int num_classes() const noexcept { return num_classes_; }
  int class_of(int x) const { return class_of_[x]; }
  bool same(int a, int b) const { return class_of_[a] == class_of_[b]; }
  /// Classes in id order; members of each class sorted ascending.
  std::vector<std::vector<int>> classes() const;
  /// Least member of each class, in class-id order.
  std::vector<int> representatives() const;

  bool operator==(const SetPartition& o) const { return class_of_ == o.class_of_; }
  bool operator!=(const SetPartition& o) const { return !(*this == o); }

 private:
  std::vector<int> class_of_;
  int num_classes_ = 0;
};

/// Enumerate all partitions of [0, n) in restricted-growth-string order.
/// The callback sees each partition exactly once. Caller guards n (Bell
/// numbers grow fast; bell_number(7) = 877).
void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit);

std::uint64_t bell_number(int n);

}  // namespace mtopos
