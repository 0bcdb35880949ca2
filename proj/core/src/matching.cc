#include "modkernel/matching.h"

#include <algorithm>

namespace modkernel {

BipartiteMatching::BipartiteMatching(int right_size,
                                     std::vector<std::vector<int>> left_adjacency)
    : left_adj_(std::move(left_adjacency)),
      match_of_left_(left_adj_.size(), -1),
      match_of_right_(right_size, -1) {
  for (auto& nb : left_adj_) std::sort(nb.begin(), nb.end());

  // Greedy pass first; Kuhn's augmentation completes it.
  for (int l = 0; l < left_size(); ++l) {
    for (int r : left_adj_[l]) {
      if (match_of_right_[r] < 0) {
        match_of_left_[l] = r;
        match_of_right_[r] = l;
        ++size_;
        break;
      }
    }
  }
  std::vector<int> seen(right_size, -1);
  for (int l = 0; l < left_size(); ++l) {
    if (match_of_left_[l] >= 0) continue;
    if (augment(l, seen, l)) ++size_;
  }
}

bool BipartiteMatching::augment(int l, std::vector<int>& seen, int stamp) {
  // Iterative DFS over alternating paths.
  struct Frame {
    int left;
    std::size_t next;
  };
  std::vector<Frame> stack{{l, 0}};
  std::vector<int> via;  // right vertex used to reach stack[i+1]
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == left_adj_[top.left].size()) {
      stack.pop_back();
      if (!via.empty()) via.pop_back();
      continue;
    }
    int r = left_adj_[top.left][top.next++];
    if (seen[r] == stamp) continue;
    seen[r] = stamp;
    if (match_of_right_[r] < 0) {
      via.push_back(r);
      for (std::size_t i = 0; i < stack.size(); ++i) {
        match_of_left_[stack[i].left] = via[i];
        match_of_right_[via[i]] = stack[i].left;
      }
      return true;
    }
    via.push_back(r);
    stack.push_back({match_of_right_[r], 0});
  }
  return false;
}

BipartiteMatching::Reachable BipartiteMatching::reach(const std::vector<int>& roots) const {
  Reachable out{std::vector<bool>(left_size(), false),
                std::vector<bool>(right_size(), false)};
  std::vector<int> queue;
  for (int l : roots) {
    out.left[l] = true;
    queue.push_back(l);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int l = queue[head];
    for (int r : left_adj_[l]) {
      if (out.right[r]) continue;
      out.right[r] = true;
      int next = match_of_right_[r];
      if (next >= 0 && !out.left[next]) {
        out.left[next] = true;
        queue.push_back(next);
      }
    }
  }
  return out;
}

BipartiteMatching::Reachable BipartiteMatching::alternating_reachable_from_unmatched() const {
  std::vector<int> roots;
  for (int l = 0; l < left_size(); ++l) {
    if (match_of_left_[l] < 0) roots.push_back(l);
  }
  return reach(roots);
}

BipartiteMatching::Reachable BipartiteMatching::alternating_reachable_from(int left_root) const {
  return reach({left_root});
}

BipartiteMatching::Cover BipartiteMatching::minimum_vertex_cover() const {
  Reachable z = alternating_reachable_from_unmatched();
  Cover cover{std::vector<bool>(left_size()), std::vector<bool>(right_size())};
  for (int l = 0; l < left_size(); ++l) cover.left[l] = !z.left[l];
  for (int r = 0; r < right_size(); ++r) cover.right[r] = z.right[r];
  return cover;
}

}  // namespace modkernel
