#ifndef CAUCHY_UNION_FIND_HPP
#define CAUCHY_UNION_FIND_HPP

#include <numeric>
#include <vector>

namespace cauchy {

/// Union-find over dense ids. Representatives are always the smallest member id,
/// so quotient classes get reproducible names in traces and golden files.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) const {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  /// Merges the classes of a and b; the smaller representative wins.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

  bool same(int a, int b) const { return find(a) == find(b); }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  mutable std::vector<int> parent_;
};

}  // namespace cauchy

#endif
