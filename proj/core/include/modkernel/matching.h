#pragma once

#include <vector>

namespace modkernel {

// Maximum matching in a bipartite graph given as left-side adjacency lists
// (right ids in 0..right_size-1). Augmenting paths are tried in left-vertex
// order over ascending adjacency, so the matching is deterministic.
class BipartiteMatching {
 public:
  BipartiteMatching(int right_size, std::vector<std::vector<int>> left_adjacency);

  int size() const { return size_; }
  int left_size() const { return static_cast<int>(left_adj_.size()); }
  int right_size() const { return static_cast<int>(match_of_right_.size()); }

  // -1 when unmatched.
  int match_of_left(int l) const { return match_of_left_[l]; }
  int match_of_right(int r) const { return match_of_right_[r]; }

  // Vertices reachable by alternating paths from the unmatched left vertices
  // (left -> right over any edge, right -> left over matched edges).
  struct Reachable {
    std::vector<bool> left;
    std::vector<bool> right;
  };
  Reachable alternating_reachable_from_unmatched() const;
  Reachable alternating_reachable_from(int left_root) const;

  // Koenig cover: (L \ Z) u (R n Z) with Z = alternating_reachable_from_unmatched().
  struct Cover {
    std::vector<bool> left;
    std::vector<bool> right;
  };
  Cover minimum_vertex_cover() const;

 private:
  bool augment(int l, std::vector<int>& seen, int stamp);
  Reachable reach(const std::vector<int>& roots) const;

  std::vector<std::vector<int>> left_adj_;
  std::vector<int> match_of_left_;
  std::vector<int> match_of_right_;
  int size_ = 0;
};

}  // namespace modkernel
