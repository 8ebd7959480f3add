#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace hypercat::detail {

/// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  /// Class numbers 0..k-1 assigned in order of first occurrence.
  std::vector<std::size_t> dense_classes(std::size_t& class_count) {
    std::vector<std::size_t> root_to_class(parent_.size(), parent_.size());
    std::vector<std::size_t> out(parent_.size());
    class_count = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      std::size_t r = find(i);
      if (root_to_class[r] == parent_.size()) root_to_class[r] = class_count++;
      out[i] = root_to_class[r];
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace hypercat::detail
