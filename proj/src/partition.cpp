#include "mtopos/partition.hpp"

#include <algorithm>
#include <numeric>

namespace mtopos {

UnionFind::UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  // smaller index wins so representatives stay deterministic
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  return true;
}

SetPartition SetPartition::from_class_ids(const std::vector<int>& raw) {
  SetPartition p;
  p.class_of_.assign(raw.size(), -1);
  std::vector<int> remap;
  for (std::size_t x = 0; x < raw.size(); ++x) {
    int id = raw[x];
    int found = -1;
    for (std::size_t k = 0; k < remap.size(); ++k)
      if (remap[k] == id) {
        found = static_cast<int>(k);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(remap.size());
      remap.push_back(id);
    }
    p.class_of_[x] = found;
  }
  p.num_classes_ = static_cast<int>(remap.size());
  return p;
}

SetPartition SetPartition::from_union_find(UnionFind& uf) {
  std::vector<int> raw(uf.size());
  for (int x = 0; x < uf.size(); ++x) raw[x] = uf.find(x);
  return from_class_ids(raw);
}

SetPartition SetPartition::discrete(int n) {
  std::vector<int> raw(n);
  std::iota(raw.begin(), raw.end(), 0);
  return from_class_ids(raw);
}

SetPartition SetPartition::total(int n) { return from_class_ids(std::vector<int>(n, 0)); }

std::vector<std::vector<int>> SetPartition::classes() const {
  std::vector<std::vector<int>> out(num_classes_);
  for (int x = 0; x < size(); ++x) out[class_of_[x]].push_back(x);
  return out;
}

std::vector<int> SetPartition::representatives() const {
  std::vector<int> reps(num_classes_, -1);
  for (int x = size() - 1; x >= 0; --x) reps[class_of_[x]] = x;
  return reps;
}

void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  if (n == 0) {
    visit(SetPartition::from_class_ids({}));
    return;
  }
  if (n == 1) {
    visit(SetPartition::from_class_ids({0}));
    return;
  }
  // restricted growth strings: a[0] = 0 and a[i] <= b[i] = 1 + max(a[0..i-1])
  std::vector<int> a(n, 0), b(n, 1);
  while (true) {
    visit(SetPartition::from_class_ids(a));
    if (a[n - 1] < b[n - 1]) {
      ++a[n - 1];
      continue;
    }
    int j = n - 2;
    while (j >= 1 && a[j] == b[j]) --j;
    if (j < 1) break;
    ++a[j];
    int m = b[j] + (a[j] == b[j] ? 1 : 0);
    for (int i = j + 1; i < n; ++i) {
      a[i] = 0;
      b[i] = m;
    }
  }
}

std::uint64_t bell_number(int n) {
  // Bell triangle
  std::vector<std::uint64_t> row = {1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next;
    next.push_back(row.back());
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace mtopos
