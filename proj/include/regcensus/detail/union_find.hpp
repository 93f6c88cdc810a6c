#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace regcensus::detail {

/// Union-find with a Z/2 parity on each edge of the forest, used to track
/// relative traversal direction of identified polyhedron edges. No path
/// compression, union by size, so unions can be rolled back by a journal.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  /// Returns (root, parity of node relative to root).
  std::pair<int, int> find(int x) const {
    int p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }

  /// Identify a and b with relative parity `rel` (0: same direction).
  /// Returns: +1 if a merge happened, 0 if already joined consistently,
  /// -1 on a parity conflict (the identification flips a class onto itself).
  int unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel ? 0 : -1;
    if (size_[ra] < size_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ rel;
    size_[ra] += size_[rb];
    journal_.push_back(rb);
    return 1;
  }

  int size(int root) const { return size_[root]; }
  int node_count() const { return static_cast<int>(parent_.size()); }

  /// Number of unions performed; pass to rollback().
  size_t mark() const { return journal_.size(); }
  void rollback(size_t mark) {
    while (journal_.size() > mark) {
      const int rb = journal_.back();
      journal_.pop_back();
      size_[parent_[rb]] -= size_[rb];
      parity_[rb] = 0;
      parent_[rb] = rb;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<uint8_t> parity_;
  std::vector<int> size_;
  std::vector<int> journal_;
};

}  // namespace regcensus::detail
