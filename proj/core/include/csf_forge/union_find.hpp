#ifndef CSF_FORGE_UNION_FIND_HPP
#define CSF_FORGE_UNION_FIND_HPP

#include <utility>
#include <vector>

namespace csf_forge {

/// Union-find with rollback: union by size, no path compression, so every
/// merge is a single reversible parent-pointer write. Drives the
/// incremental edge-subset walk of the fast CSF route.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n + 1), size_(n + 1, 1) {
    for (int i = 0; i <= n; ++i) parent_[i] = i;
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  int component_size(int x) const { return size_[find(x)]; }

  /// Merges the components of a and b; returns false if already joined.
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    trail_.emplace_back(ra, rb);
    return true;
  }

  /// Reverts the most recent successful unite.
  void undo() {
    const auto [ra, rb] = trail_.back();
    trail_.pop_back();
    size_[ra] -= size_[rb];
    parent_[rb] = rb;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> trail_;
};

}  // namespace csf_forge

#endif
